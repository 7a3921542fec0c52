//! Command-line front-end for the curvelab library.
//!
//! The binary is a thin shell: every numeric it emits comes from a library
//! call, then passes through the deterministic formatting in [`output`], so
//! repeated runs produce byte-identical artifacts.
//!
//! Exit codes: `0` success, `2` input validation failure, `3` degenerate
//! geometry, `4` verification failure.

pub mod commands;
pub mod output;
pub mod svg;
pub mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use curvelab_core::{Dataset, Error, SplineKind};

/// Interpolate point sets with cubic spline curves and analyze curvature.
#[derive(Parser, Debug)]
#[command(name = "curvelab", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve for the control polygon and per-segment Bézier points.
    Fit(CommonArgs),
    /// Sample the curve as CSV rows `t,x,y[,z],kappa`.
    Sample(SampleArgs),
    /// Evaluate curvature at one parameter.
    Curvature(AtArgs),
    /// Locate the global curvature maximum and per-interval maxima.
    Maxcurv(MaxcurvArgs),
    /// Evaluate the Frenet frame of a space curve at one parameter.
    Frame(AtArgs),
    /// Render the curve, its sites, and the curvature argmax to SVG.
    Svg(SvgArgs),
    /// Cross-check the fit against reference solvers and a dense grid.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Dataset file: `.json` (canonical schema) or `.csv` (rows of 2-3 floats).
    #[arg(long)]
    pub input: PathBuf,
    /// Boundary mode; defaults to the dataset's `mode_hint` when present.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Write the artifact here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Number of uniformly spaced samples over the whole domain (≥ 2).
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}

#[derive(Args, Debug)]
pub struct AtArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Global parameter to query.
    #[arg(long)]
    pub at: f64,
}

#[derive(Args, Debug)]
pub struct MaxcurvArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Relative residual accepted when filtering stationarity roots.
    #[arg(long)]
    pub tol_root: Option<f64>,
}

#[derive(Args, Debug)]
pub struct SvgArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Number of points along the sampled path (≥ 2).
    #[arg(long)]
    pub samples: Option<usize>,
    /// Draw the control polygon as a dashed overlay.
    #[arg(long)]
    pub show_control_polygon: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Dense-grid samples per segment for the dominance check.
    #[arg(long, default_value_t = 20_000)]
    pub verify_grid: usize,
    /// Test hook: perturb one control coordinate by this amount before
    /// checking, to prove the checks can fail.
    #[arg(long, hide = true)]
    pub corrupt: Option<f64>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ModeArg {
    Relaxed,
    Periodic,
}

impl From<ModeArg> for SplineKind {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Relaxed => SplineKind::Relaxed,
            ModeArg::Periodic => SplineKind::Periodic,
        }
    }
}

/// A command failure carrying the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn validation(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn degenerate(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ZeroVelocity { .. } | Error::ZeroCurvature { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Loads the dataset named by `--input` and resolves the boundary mode.
pub fn load_input(args: &CommonArgs) -> Result<(Dataset, SplineKind), Failure> {
    let dataset = Dataset::load(&args.input)?;
    let kind = match (args.mode, dataset.mode_hint) {
        (Some(m), _) => m.into(),
        (None, Some(hint)) => hint,
        (None, None) => {
            return Err(Failure::validation(format!(
                "dataset `{}` carries no mode hint; pass --mode relaxed|periodic",
                dataset.name
            )))
        }
    };
    Ok((dataset, kind))
}

/// Writes `text` to `--output` or stdout.
pub fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure {
            code: 2,
            message: format!("writing {}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs one parsed command.
pub fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Fit(args) => commands::cmd_fit(&args),
        Command::Sample(args) => commands::cmd_sample(&args),
        Command::Curvature(args) => commands::cmd_curvature(&args),
        Command::Maxcurv(args) => commands::cmd_maxcurv(&args),
        Command::Frame(args) => commands::cmd_frame(&args),
        Command::Svg(args) => svg::cmd_svg(&args),
        Command::Verify(args) => verify::cmd_verify(&args),
    }
}
