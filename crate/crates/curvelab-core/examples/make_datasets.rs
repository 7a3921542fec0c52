//! Writes the workspace's canonical datasets. Run from the workspace root:
//!
//! ```text
//! cargo run -p curvelab-core --example make_datasets [-- <output-dir>]
//! ```
//!
//! The files are committed under `datasets/`; regenerating them must be a
//! no-op (the emitter is canonical, so bytes are stable).

use std::f64::consts::PI;
use std::path::PathBuf;

use curvelab_core::{Dataset, Result, SplineKind};

fn literal(name: &str, rows: &[&[f64]], mode: SplineKind) -> Result<Dataset> {
    Dataset::from_points(
        name,
        rows.iter().map(|r| r.to_vec()).collect(),
        Some(mode),
    )
}

fn main() -> Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map_or_else(|| PathBuf::from("datasets"), PathBuf::from);
    std::fs::create_dir_all(&dir)?;

    let t5_params: Vec<f64> = [0, 1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15]
        .iter()
        .map(|&k| k as f64 * PI / 8.0)
        .collect();

    let datasets = vec![
        literal(
            "t1",
            &[
                &[-1.0, 3.0],
                &[-0.2, 1.7],
                &[1.0, 2.75],
                &[2.75, 2.5],
                &[1.75, 1.25],
                &[2.0, 2.5],
                &[3.0, 1.25],
                &[4.0, 0.75],
            ],
            SplineKind::Relaxed,
        )?,
        Dataset::from_generator(
            "t2",
            "wave",
            vec![-1.0, -0.6, -0.2, 0.2, 0.6, 0.9, 1.3, 1.7, 2.0],
            Some(SplineKind::Relaxed),
        )?,
        literal(
            "t3",
            &[
                &[2.0, 1.5],
                &[0.75, 3.0],
                &[2.5, 4.0],
                &[3.5, 3.0],
                &[5.0, 1.5],
                &[5.5, 3.5],
                &[4.0, 4.0],
            ],
            SplineKind::Periodic,
        )?,
        literal(
            "t4",
            &[
                &[1.0, 4.0],
                &[0.6, 2.0],
                &[2.0, 0.4],
                &[3.4, 1.0],
                &[2.6, 2.8],
                &[2.2, 2.4],
                &[4.0, 1.6],
                &[4.6, 3.0],
                &[3.0, 4.4],
            ],
            SplineKind::Periodic,
        )?,
        Dataset::from_generator("t5", "ellipse", t5_params, Some(SplineKind::Periodic))?,
        literal(
            "e1",
            &[
                &[1.0, 2.0, 2.0],
                &[-0.5, 1.5, 2.5],
                &[1.0, 3.5, 0.5],
                &[0.5, 5.0, -1.0],
                &[-0.3, 5.25, 0.75],
                &[-0.75, 3.5, 3.0],
                &[0.75, 2.25, 1.0],
            ],
            SplineKind::Relaxed,
        )?,
        literal(
            "e2",
            &[
                &[-0.5, -0.5, 3.0],
                &[-1.5, 1.0, 4.5],
                &[-3.0, 2.5, 3.0],
                &[-1.2, 2.0, 2.0],
                &[-2.5, 2.5, 3.5],
                &[0.5, 5.0, 1.0],
                &[0.0, 2.5, -2.0],
            ],
            SplineKind::Periodic,
        )?,
        Dataset::from_generator(
            "e3",
            "trefoil",
            vec![0.0, 0.4, 1.0, 1.5, 2.0, 2.5, 3.2, 3.9, 4.5, 5.1, 5.8],
            Some(SplineKind::Periodic),
        )?,
    ];

    for ds in &datasets {
        let path = dir.join(format!("{}.json", ds.name));
        ds.save(&path)?;
        println!("wrote {} ({} points, dim {})", path.display(), ds.points.len(), ds.dim);
    }
    Ok(())
}
