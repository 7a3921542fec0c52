//! Implementations of the non-graphical subcommands.

use serde::Serialize;

use curvelab_core::{
    build_spline, curvature_at, fit, frenet_frame, max_curvature_with, solve_periodic,
    solve_relaxed, ControlPolygon, Error, PointSet, RootParams, SplineKind, Vector,
};

use crate::output::{fmt_sig9, round12, round12_all, to_json_text};
use crate::{emit, load_input, AtArgs, CommonArgs, Failure, MaxcurvArgs, SampleArgs};

#[derive(Serialize)]
struct FitArtifact {
    dataset: String,
    mode: String,
    dim: usize,
    sites: usize,
    max_defining_residual: f64,
    control_points: Vec<Vec<f64>>,
    segments: Vec<SegmentArtifact>,
}

#[derive(Serialize)]
struct SegmentArtifact {
    index: usize,
    bezier: Vec<Vec<f64>>,
}

/// Largest absolute residual of the defining relations: the boundary
/// identities and `b_{k-1} + 4 b_k + b_{k+1} = 6 s_k` at every interior
/// (relaxed) or cyclic (periodic) site.
pub fn defining_residual(polygon: &ControlPolygon, s: &PointSet) -> f64 {
    defining_residual_from(polygon.points(), polygon.kind(), s)
}

/// Same residual, computed from a raw control-point slice.
pub fn defining_residual_from(b: &[Vector], kind: SplineKind, s: &PointSet) -> f64 {
    let pts = s.points();
    let n = s.n();
    let mut worst = 0.0f64;
    let mut track = |v: Vector| {
        for &c in v.coords() {
            worst = worst.max(c.abs());
        }
    };
    match kind {
        SplineKind::Relaxed => {
            track(b[0] - pts[0]);
            track(b[n] - pts[n]);
            for k in 1..n {
                track(b[k - 1] + b[k] * 4.0 + b[k + 1] - pts[k] * 6.0);
            }
        }
        SplineKind::Periodic => {
            let len = n + 1;
            for k in 0..len {
                let prev = b[(k + len - 1) % len];
                let next = b[(k + 1) % len];
                track(prev + b[k] * 4.0 + next - pts[k] * 6.0);
            }
        }
    }
    worst
}

pub fn cmd_fit(args: &CommonArgs) -> Result<(), Failure> {
    let (dataset, kind) = load_input(args)?;
    let set = dataset.to_point_set()?;
    let polygon = match kind {
        SplineKind::Relaxed => solve_relaxed(&set)?,
        SplineKind::Periodic => solve_periodic(&set)?,
    };
    let curve = build_spline(&polygon, &set)?;
    let artifact = FitArtifact {
        dataset: dataset.name.clone(),
        mode: kind.to_string(),
        dim: set.dim(),
        sites: set.points().len(),
        max_defining_residual: round12(defining_residual(&polygon, &set)),
        control_points: polygon
            .points()
            .iter()
            .map(|v| round12_all(v.coords()))
            .collect(),
        segments: curve
            .segments()
            .iter()
            .map(|seg| SegmentArtifact {
                index: seg.index(),
                bezier: seg
                    .controls()
                    .iter()
                    .map(|c| round12_all(c.coords()))
                    .collect(),
            })
            .collect(),
    };
    emit(args.output.as_ref(), &to_json_text(&artifact))
}

pub fn cmd_sample(args: &SampleArgs) -> Result<(), Failure> {
    if args.samples < 2 {
        return Err(Failure::validation(format!(
            "--samples must be at least 2, got {}",
            args.samples
        )));
    }
    let (dataset, kind) = load_input(&args.common)?;
    let curve = fit(&dataset.to_point_set()?, kind)?;
    let end = curve.domain_end();
    let dim = curve.dim();
    let mut text = String::from(if dim == 2 { "t,x,y,kappa\n" } else { "t,x,y,z,kappa\n" });
    for i in 0..args.samples {
        let t = end * (i as f64 / (args.samples - 1) as f64);
        let p = curve.eval(t, 0)?;
        text.push_str(&format!("{}", round12(t)));
        for &c in p.coords() {
            text.push_str(&format!(",{}", round12(c)));
        }
        match curvature_at(&curve, t) {
            Ok(kappa) => text.push_str(&format!(",{}\n", round12(kappa))),
            Err(Error::ZeroVelocity { .. }) => text.push_str(",\n"),
            Err(e) => return Err(e.into()),
        }
    }
    emit(args.common.output.as_ref(), &text)
}

#[derive(Serialize)]
struct CurvatureArtifact {
    dataset: String,
    mode: String,
    t: f64,
    kappa: f64,
}

pub fn cmd_curvature(args: &AtArgs) -> Result<(), Failure> {
    let (dataset, kind) = load_input(&args.common)?;
    let curve = fit(&dataset.to_point_set()?, kind)?;
    let kappa = curvature_at(&curve, args.at)?;
    let artifact = CurvatureArtifact {
        dataset: dataset.name.clone(),
        mode: kind.to_string(),
        t: round12(args.at),
        kappa: round12(kappa),
    };
    emit(args.common.output.as_ref(), &to_json_text(&artifact))
}

#[derive(Serialize)]
struct FrameArtifact {
    dataset: String,
    mode: String,
    t: f64,
    tangent: Vec<f64>,
    normal: Vec<f64>,
    binormal: Vec<f64>,
}

pub fn cmd_frame(args: &AtArgs) -> Result<(), Failure> {
    let (dataset, kind) = load_input(&args.common)?;
    let curve = fit(&dataset.to_point_set()?, kind)?;
    let frame = frenet_frame(&curve, args.at)?;
    let artifact = FrameArtifact {
        dataset: dataset.name.clone(),
        mode: kind.to_string(),
        t: round12(args.at),
        tangent: round12_all(frame.tangent.coords()),
        normal: round12_all(frame.normal.coords()),
        binormal: round12_all(frame.binormal.coords()),
    };
    emit(args.common.output.as_ref(), &to_json_text(&artifact))
}

#[derive(Serialize)]
pub struct MaxcurvArtifact {
    pub dataset: String,
    pub mode: String,
    pub dim: usize,
    pub kappa_max: f64,
    pub degenerate: bool,
    pub argmax: Vec<f64>,
    pub per_interval: Vec<IntervalArtifact>,
}

#[derive(Serialize)]
pub struct IntervalArtifact {
    pub index: usize,
    pub max: f64,
    pub locations: Vec<f64>,
}

pub fn cmd_maxcurv(args: &MaxcurvArgs) -> Result<(), Failure> {
    let (dataset, kind) = load_input(&args.common)?;
    let curve = fit(&dataset.to_point_set()?, kind)?;
    let mut params = RootParams::default();
    if let Some(tol) = args.tol_root {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Failure::validation(format!(
                "--tol-root must be positive, got {tol}"
            )));
        }
        params.residual_rel = tol;
    }
    let report = max_curvature_with(&curve, &params)?;
    if report.degenerate {
        return Err(Failure::degenerate(format!(
            "dataset `{}` is degenerate: curvature is constant on every segment \
             (kappa_max = 0), so no argmax is reported",
            dataset.name
        )));
    }

    let artifact = MaxcurvArtifact {
        dataset: dataset.name.clone(),
        mode: kind.to_string(),
        dim: curve.dim(),
        kappa_max: round12(report.kappa_max),
        degenerate: report.degenerate,
        argmax: round12_all(&report.argmax),
        per_interval: report
            .per_interval
            .iter()
            .map(|i| IntervalArtifact {
                index: i.index,
                max: round12(i.max),
                locations: round12_all(&i.locations),
            })
            .collect(),
    };

    let mut table = String::new();
    table.push_str(&format!("dataset: {} ({}, dim {})\n", artifact.dataset, artifact.mode, artifact.dim));
    table.push_str(&format!(
        "kappa_max: {} at t = {}\n",
        fmt_sig9(report.kappa_max),
        report
            .argmax
            .iter()
            .map(|&t| fmt_sig9(t))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    table.push_str(&format!("{:>8}  {:<14}  locations\n", "interval", "max"));
    for i in &report.per_interval {
        table.push_str(&format!(
            "{:>8}  {:<14}  {}\n",
            i.index,
            fmt_sig9(i.max),
            i.locations
                .iter()
                .map(|&t| fmt_sig9(t))
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    print!("{table}");

    if args.common.output.is_some() {
        emit(args.common.output.as_ref(), &to_json_text(&artifact))?;
    }
    Ok(())
}
