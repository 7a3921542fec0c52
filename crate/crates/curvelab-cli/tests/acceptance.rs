//! Release acceptance gate.
//!
//! One test per release criterion, each asserting at the criterion's stated
//! tolerance and emitting a single PASS line (or a detailed failure listing
//! every violation). The criteria:
//!
//! 1. Curvature-maximum reference values for the coordinate-listed datasets.
//! 2. Curvature-maximum reference values for the generator-defined datasets.
//! 3. Closed-form solvers match the direct tridiagonal reference solvers.
//! 4. Geometric invariant suites, each over at least 100 randomized cases.
//! 5. Stationarity-polynomial guarantees on 500 random segments.
//! 6. The analytic maximum dominates a dense curvature grid on every dataset.
//! 7. The CLI is deterministic and `verify` accepts every shipped dataset.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use curvelab_core::{
    curvature_at, fit, max_curvature, oracle, solve_periodic, solve_relaxed, stationarity,
    CubicSegment, Dataset, PointSet, RootParams, SplineCurve, SplineKind, StationarityKind,
    Vector,
};

fn dataset_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../datasets")
        .join(format!("{name}.json"))
}

fn fit_dataset(name: &str) -> (Dataset, SplineCurve) {
    let ds = Dataset::load(&dataset_path(name)).unwrap();
    let kind = ds.mode_hint.expect("shipped datasets carry a mode hint");
    let curve = fit(&ds.to_point_set().unwrap(), kind).unwrap();
    (ds, curve)
}

fn random_rows(rng: &mut StdRng, count: usize, dim: usize) -> Vec<Vec<f64>> {
    (0..count)
        .map(|_| (0..dim).map(|_| rng.random_range(-5.0..5.0)).collect())
        .collect()
}

fn solve(set: &PointSet, kind: SplineKind) -> Vec<Vector> {
    match kind {
        SplineKind::Relaxed => solve_relaxed(set).unwrap().points().to_vec(),
        SplineKind::Periodic => solve_periodic(set).unwrap().points().to_vec(),
    }
}

fn reference_solve(set: &PointSet, kind: SplineKind) -> Vec<Vector> {
    match kind {
        SplineKind::Relaxed => oracle::relaxed_control_points(set).unwrap(),
        SplineKind::Periodic => oracle::periodic_control_points(set).unwrap(),
    }
}

fn finish(criterion: &str, violations: Vec<String>) {
    if violations.is_empty() {
        println!("{criterion}: PASS");
    } else {
        panic!("{criterion}: FAIL\n{}", violations.join("\n"));
    }
}

/// Criterion 1 — curvature maxima of the coordinate-listed datasets match
/// the release reference values: 1e-6 relative on κ_max, 1e-5 absolute on
/// the argmax parameter, under one second per dataset.
#[test]
fn acceptance_golden_literal_datasets() {
    let cases: [(&str, f64, f64); 5] = [
        ("t1", 3.263038515, 4.012814878),
        ("t3", 7.98849404, 4.0),
        ("t4", 5.342692666, 4.5000492),
        ("e1", 21.16170229, 0.8519812587),
        ("e2", 10.72508237, 2.972072509),
    ];
    let mut violations = Vec::new();
    for (name, kappa_expected, t_expected) in cases {
        let started = Instant::now();
        let (_, curve) = fit_dataset(name);
        let report = max_curvature(&curve).unwrap();
        let elapsed = started.elapsed();
        let rel = (report.kappa_max - kappa_expected).abs() / kappa_expected;
        if rel > 1e-6 {
            violations.push(format!(
                "{name}: kappa_max = {:.12} but the reference value is {kappa_expected}; \
                 relative error {rel:.3e} exceeds 1e-6",
                report.kappa_max
            ));
        }
        let dt = report
            .argmax
            .iter()
            .map(|a| (a - t_expected).abs())
            .fold(f64::INFINITY, f64::min);
        if dt > 1e-5 {
            violations.push(format!(
                "{name}: argmax {:?} but the reference location is {t_expected}; \
                 distance {dt:.3e} exceeds 1e-5",
                report.argmax
            ));
        }
        assert!(
            elapsed < Duration::from_secs(1),
            "{name}: took {elapsed:?}, budget is 1 s"
        );
    }
    finish("criterion 1 (golden literal datasets)", violations);
}

/// Criterion 2 — curvature maxima of the generator-defined datasets match
/// the release reference values to 1e-4 relative, under one second each.
#[test]
fn acceptance_golden_generated_datasets() {
    let cases: [(&str, f64); 3] = [
        ("t2", 7.637353635),
        ("t5", 0.95866364048),
        ("e3", 2.184629218),
    ];
    let mut violations = Vec::new();
    for (name, kappa_expected) in cases {
        let started = Instant::now();
        let (_, curve) = fit_dataset(name);
        let report = max_curvature(&curve).unwrap();
        let elapsed = started.elapsed();
        let rel = (report.kappa_max - kappa_expected).abs() / kappa_expected;
        if rel > 1e-4 {
            violations.push(format!(
                "{name}: kappa_max = {:.12} but the reference value is {kappa_expected}; \
                 relative error {rel:.3e} exceeds 1e-4",
                report.kappa_max
            ));
        }
        assert!(
            elapsed < Duration::from_secs(1),
            "{name}: took {elapsed:?}, budget is 1 s"
        );
    }
    finish("criterion 2 (golden generated datasets)", violations);
}

/// Criterion 3 — closed-form control points match the direct tridiagonal /
/// cyclic-tridiagonal solves to 1e-9·scale for 100 random point sets per
/// (dimension, mode) configuration with 3 ..= 51 sites, within 10 seconds.
#[test]
fn acceptance_solver_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(9001);
    let mut violations = Vec::new();
    for &dim in &[2usize, 3] {
        for &kind in &[SplineKind::Relaxed, SplineKind::Periodic] {
            for case in 0..100 {
                let count = rng.random_range(3..=51);
                let set = PointSet::from_rows(&random_rows(&mut rng, count, dim)).unwrap();
                let closed = solve(&set, kind);
                let reference = reference_solve(&set, kind);
                let deviation = closed
                    .iter()
                    .zip(&reference)
                    .map(|(a, b)| a.dist(b))
                    .fold(0.0, f64::max);
                let tol = 1e-9 * set.scale();
                if deviation > tol {
                    violations.push(format!(
                        "dim {dim} {kind} case {case} ({count} sites): \
                         deviation {deviation:.3e} exceeds {tol:.3e}"
                    ));
                }
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "oracle equivalence took {elapsed:?}, budget is 10 s"
    );
    finish("criterion 3 (solver/oracle equivalence)", violations);
}

/// Criterion 4 — geometric invariant suites, each over ≥ 100 randomized
/// cases: interpolation exactness (1e-12·scale), C² knot continuity
/// (1e-9·scale), periodic closure through order 2, vanishing relaxed end
/// second derivatives, affine equivariance of the solvers, similarity
/// scaling κ → κ/λ with the argmax fixed, and 2D-vs-3D embedding curvature
/// equality (1e-12 relative).
#[test]
fn acceptance_geometric_invariants() {
    let mut violations = Vec::new();

    // Suite 1: interpolation exactness.
    let mut rng = StdRng::seed_from_u64(41);
    for case in 0..100 {
        let dim = 2 + case % 2;
        let kind = if case % 4 < 2 {
            SplineKind::Relaxed
        } else {
            SplineKind::Periodic
        };
        let count = rng.random_range(3..=30);
        let set = PointSet::from_rows(&random_rows(&mut rng, count, dim)).unwrap();
        let curve = fit(&set, kind).unwrap();
        let tol = 1e-12 * set.scale();
        for (k, site) in set.points().iter().enumerate() {
            let gap = curve.eval(k as f64, 0).unwrap().dist(site);
            if gap > tol {
                violations.push(format!(
                    "interpolation case {case}: site {k} missed by {gap:.3e} (tol {tol:.3e})"
                ));
            }
        }
    }

    // Suite 2: C² continuity at interior knots.
    let mut rng = StdRng::seed_from_u64(42);
    for case in 0..100 {
        let dim = 2 + case % 2;
        let kind = if case % 4 < 2 {
            SplineKind::Relaxed
        } else {
            SplineKind::Periodic
        };
        let count = rng.random_range(4..=30);
        let set = PointSet::from_rows(&random_rows(&mut rng, count, dim)).unwrap();
        let curve = fit(&set, kind).unwrap();
        let tol = 1e-9 * set.scale();
        for pair in curve.segments().windows(2) {
            for order in 0..=2u8 {
                let jump = pair[0]
                    .eval_local(1.0, order)
                    .dist(&pair[1].eval_local(0.0, order));
                if jump > tol {
                    violations.push(format!(
                        "continuity case {case}: order-{order} jump {jump:.3e} (tol {tol:.3e})"
                    ));
                }
            }
        }
    }

    // Suite 3: periodic closure through order 2.
    let mut rng = StdRng::seed_from_u64(43);
    for case in 0..100 {
        let dim = 2 + case % 2;
        let count = rng.random_range(3..=30);
        let set = PointSet::from_rows(&random_rows(&mut rng, count, dim)).unwrap();
        let curve = fit(&set, SplineKind::Periodic).unwrap();
        let tol = 1e-9 * set.scale();
        let first = &curve.segments()[0];
        let last = curve.segments().last().unwrap();
        for order in 0..=2u8 {
            let gap = last.eval_local(1.0, order).dist(&first.eval_local(0.0, order));
            if gap > tol {
                violations.push(format!(
                    "closure case {case}: order-{order} seam gap {gap:.3e} (tol {tol:.3e})"
                ));
            }
        }
    }

    // Suite 4: relaxed end second derivatives vanish.
    let mut rng = StdRng::seed_from_u64(44);
    for case in 0..100 {
        let dim = 2 + case % 2;
        let count = rng.random_range(3..=30);
        let set = PointSet::from_rows(&random_rows(&mut rng, count, dim)).unwrap();
        let curve = fit(&set, SplineKind::Relaxed).unwrap();
        let tol = 1e-9 * set.scale();
        let head = curve.segments()[0].eval_local(0.0, 2).norm();
        let tail = curve.segments().last().unwrap().eval_local(1.0, 2).norm();
        if head > tol || tail > tol {
            violations.push(format!(
                "end-condition case {case}: f''(0) = {head:.3e}, f''(end) = {tail:.3e} \
                 (tol {tol:.3e})"
            ));
        }
    }

    // Suite 5: affine equivariance of the solvers.
    let mut rng = StdRng::seed_from_u64(45);
    for case in 0..100 {
        let dim = 2 + case % 2;
        let kind = if case % 4 < 2 {
            SplineKind::Relaxed
        } else {
            SplineKind::Periodic
        };
        let count = rng.random_range(3..=20);
        let rows = random_rows(&mut rng, count, dim);
        let matrix: Vec<Vec<f64>> = (0..dim)
            .map(|_| (0..dim).map(|_| rng.random_range(-2.0..2.0)).collect())
            .collect();
        let shift: Vec<f64> = (0..dim).map(|_| rng.random_range(-3.0..3.0)).collect();
        let apply = |r: &[f64]| -> Vec<f64> {
            matrix
                .iter()
                .zip(&shift)
                .map(|(m, s)| m.iter().zip(r).map(|(a, x)| a * x).sum::<f64>() + s)
                .collect()
        };
        let mapped_rows: Vec<Vec<f64>> = rows.iter().map(|r| apply(r)).collect();
        let (Ok(base), Ok(mapped)) = (
            PointSet::from_rows(&rows),
            PointSet::from_rows(&mapped_rows),
        ) else {
            continue; // a near-singular map collapsed two sites
        };
        let b = solve(&base, kind);
        let mapped_b = solve(&mapped, kind);
        let tol = 1e-9 * mapped.scale().max(base.scale());
        for (bk, mk) in b.iter().zip(&mapped_b) {
            let image = Vector::from_slice(&apply(bk.coords()), 0).unwrap();
            let gap = image.dist(mk);
            if gap > tol {
                violations.push(format!(
                    "affine case {case}: control-point gap {gap:.3e} (tol {tol:.3e})"
                ));
            }
        }
    }

    // Suite 6: similarity scaling κ → κ/λ with the argmax fixed. Pointwise
    // ratios are asserted at 1e-9; the argmax is asserted by mutual
    // attainment (each argmax attains the other report's maximum to 1e-6)
    // plus a coarse location backstop, because the location itself is
    // conditioning-limited wherever the maximum is flat. Configurations
    // whose curvature radius falls below 1e-4 of the coordinate scale are
    // numerically singular and are skipped (the accepted count stays ≥ 100).
    let mut rng = StdRng::seed_from_u64(46);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 100 && attempts < 400 {
        attempts += 1;
        let dim = 2 + attempts % 2;
        let kind = if attempts % 4 < 2 {
            SplineKind::Relaxed
        } else {
            SplineKind::Periodic
        };
        let count = rng.random_range(4..=14);
        let rows = random_rows(&mut rng, count, dim);
        let lambda: f64 = rng.random_range(0.3..4.0);
        let rotation = random_rotation(&mut rng, dim);
        let shift: Vec<f64> = (0..dim).map(|_| rng.random_range(-3.0..3.0)).collect();
        let mapped_rows: Vec<Vec<f64>> = rows
            .iter()
            .map(|r| {
                let scaled: Vec<f64> = r.iter().map(|x| lambda * x).collect();
                rotation
                    .iter()
                    .zip(&shift)
                    .map(|(m, s)| m.iter().zip(&scaled).map(|(a, x)| a * x).sum::<f64>() + s)
                    .collect()
            })
            .collect();
        let base = fit(&PointSet::from_rows(&rows).unwrap(), kind).unwrap();
        let image = fit(&PointSet::from_rows(&mapped_rows).unwrap(), kind).unwrap();
        let base_report = max_curvature(&base).unwrap();
        let image_report = max_curvature(&image).unwrap();
        if base_report.degenerate || image_report.degenerate {
            continue;
        }
        if base_report.kappa_max * 5.0 > 1e4 {
            continue; // numerically singular: curvature radius < 1e-4·scale
        }
        accepted += 1;

        let end = base.domain_end();
        for i in 1..20 {
            let t = end * i as f64 / 20.0;
            let (Ok(kappa), Ok(mapped_kappa)) =
                (curvature_at(&base, t), curvature_at(&image, t))
            else {
                continue;
            };
            if kappa < 1e-12 {
                continue;
            }
            let rel = (mapped_kappa - kappa / lambda).abs() / (kappa / lambda);
            if rel > 1e-9 {
                violations.push(format!(
                    "similarity case {attempts}: pointwise ratio error {rel:.3e} at t={t}"
                ));
            }
        }
        let rel_max = (image_report.kappa_max - base_report.kappa_max / lambda).abs()
            / (base_report.kappa_max / lambda);
        if rel_max > 1e-6 {
            violations.push(format!(
                "similarity case {attempts}: kappa_max ratio error {rel_max:.3e}"
            ));
        }
        let cross_a = curvature_at(&image, base_report.argmax[0]).unwrap();
        let cross_b = curvature_at(&base, image_report.argmax[0]).unwrap();
        let attain_a = (cross_a - image_report.kappa_max).abs() / image_report.kappa_max;
        let attain_b = (cross_b - base_report.kappa_max).abs() / base_report.kappa_max;
        if attain_a > 1e-6 || attain_b > 1e-6 {
            violations.push(format!(
                "similarity case {attempts}: argmax not fixed (attainment gaps \
                 {attain_a:.3e}, {attain_b:.3e})"
            ));
        }
        let drift = (base_report.argmax[0] - image_report.argmax[0]).abs();
        if drift > 1e-3 {
            violations.push(format!(
                "similarity case {attempts}: argmax drifted by {drift:.3e}"
            ));
        }
    }
    assert!(accepted >= 100, "only {accepted} similarity cases accepted");

    // Suite 7: embedding a planar curve into space preserves curvature.
    let mut rng = StdRng::seed_from_u64(47);
    for case in 0..100 {
        let kind = if case % 2 == 0 {
            SplineKind::Relaxed
        } else {
            SplineKind::Periodic
        };
        let count = rng.random_range(4..=14);
        let rows = random_rows(&mut rng, count, 2);
        let lifted: Vec<Vec<f64>> = rows.iter().map(|r| vec![r[0], r[1], 0.0]).collect();
        let flat = fit(&PointSet::from_rows(&rows).unwrap(), kind).unwrap();
        let spatial = fit(&PointSet::from_rows(&lifted).unwrap(), kind).unwrap();
        let end = flat.domain_end();
        for i in 0..=40 {
            let t = end * i as f64 / 40.0;
            let (Ok(a), Ok(b)) = (curvature_at(&flat, t), curvature_at(&spatial, t)) else {
                continue;
            };
            let denom = a.abs().max(b.abs());
            if denom > 0.0 && (a - b).abs() / denom > 1e-12 {
                violations.push(format!(
                    "embedding case {case}: planar {a} vs embedded {b} at t={t}"
                ));
            }
        }
    }

    finish("criterion 4 (geometric invariants)", violations);
}

fn random_rotation(rng: &mut StdRng, dim: usize) -> Vec<Vec<f64>> {
    if dim == 2 {
        let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        return vec![
            vec![theta.cos(), -theta.sin()],
            vec![theta.sin(), theta.cos()],
        ];
    }
    let mut axis = [0.0f64; 3];
    loop {
        for a in &mut axis {
            *a = rng.random_range(-1.0..1.0);
        }
        let n = (axis.iter().map(|a| a * a).sum::<f64>()).sqrt();
        if n > 0.1 {
            for a in &mut axis {
                *a /= n;
            }
            break;
        }
    }
    let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let (sin, cos) = theta.sin_cos();
    let [x, y, z] = axis;
    vec![
        vec![
            cos + x * x * (1.0 - cos),
            x * y * (1.0 - cos) - z * sin,
            x * z * (1.0 - cos) + y * sin,
        ],
        vec![
            y * x * (1.0 - cos) + z * sin,
            cos + y * y * (1.0 - cos),
            y * z * (1.0 - cos) - x * sin,
        ],
        vec![
            z * x * (1.0 - cos) - y * sin,
            z * y * (1.0 - cos) + x * sin,
            cos + z * z * (1.0 - cos),
        ],
    ]
}

/// Criterion 5 — on 500 random space segments: the naive stationarity
/// expansion has its two top coefficients at rounding level (the true degree
/// is at most 7); every returned root satisfies the residual bound; and every
/// extremum seen by a 10⁵-point finite-difference grid is matched by a found
/// root within grid spacing.
#[test]
fn acceptance_stationarity_polynomials() {
    let mut rng = StdRng::seed_from_u64(555);
    let params = RootParams::default();
    let mut violations = Vec::new();
    let grid = 100_000usize;
    let spacing = 1.0 / grid as f64;
    for case in 0..500 {
        let index = rng.random_range(1..=6);
        let controls = std::array::from_fn(|_| {
            Vector::new3(
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
            )
        });
        let seg = CubicSegment::new(controls, index);

        let naive = oracle::naive_stationarity(&seg);
        let peak = naive.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if naive[8].abs() > 1e-9 * peak || naive[9].abs() > 1e-9 * peak {
            violations.push(format!(
                "case {case}: naive expansion top coefficients {:.3e}, {:.3e} \
                 exceed 1e-9 of peak {peak:.3e}",
                naive[8], naive[9]
            ));
        }

        let st = stationarity(&seg);
        if st.is_degenerate() {
            continue;
        }
        let (lo, _) = st.interval();
        let roots = st.roots(&params).unwrap();
        let StationarityKind::Spatial { q } = st.kind() else {
            panic!("space segment must build a single spatial polynomial")
        };
        // The polynomial lives in the segment-local parameter; roots come
        // back in the global parameter.
        let scale = q.eval_scale(0.0, 1.0);
        for &r in &roots {
            let residual = q.eval(r - lo).abs();
            if residual > 1e-9 * scale {
                violations.push(format!(
                    "case {case}: root {r} has residual {residual:.3e} \
                     exceeding 1e-9·scale = {:.3e}",
                    1e-9 * scale
                ));
            }
        }

        for t_fd in oracle::fd_extrema(&seg, grid) {
            let matched = roots.iter().any(|&r| (r - t_fd).abs() <= spacing);
            if !matched {
                violations.push(format!(
                    "case {case}: grid extremum at t = {t_fd} unmatched by roots {roots:?}"
                ));
            }
        }
    }
    finish("criterion 5 (stationarity polynomials)", violations);
}

/// Criterion 6 — for every shipped dataset the analytic maximum dominates a
/// 10⁵-sample-per-segment curvature grid (to cross-arithmetic rounding) and
/// the grid comes within 1e-4·κ_max of it, all within 30 seconds.
#[test]
fn acceptance_dense_grid_dominance() {
    let started = Instant::now();
    let mut violations = Vec::new();
    for name in ["t1", "t2", "t3", "t4", "t5", "e1", "e2", "e3"] {
        let (_, curve) = fit_dataset(name);
        let report = max_curvature(&curve).unwrap();
        let (grid_max, grid_t) = oracle::dense_max_curvature(&curve, 100_000).unwrap();
        if grid_max > report.kappa_max * (1.0 + 1e-12) {
            violations.push(format!(
                "{name}: grid maximum {grid_max:.15} at t = {grid_t} exceeds the \
                 analytic maximum {:.15}",
                report.kappa_max
            ));
        }
        let gap = report.kappa_max - grid_max;
        if gap > 1e-4 * report.kappa_max {
            violations.push(format!(
                "{name}: grid missed the analytic maximum by {gap:.3e} \
                 (> 1e-4 · kappa_max)"
            ));
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "dense-grid dominance took {elapsed:?}, budget is 30 s"
    );
    finish("criterion 6 (dense-grid dominance)", violations);
}

fn curvelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvelab"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Criterion 7 — running any command twice on the same input yields
/// byte-identical output files (and stdout), and `verify` exits 0 on every
/// shipped dataset.
#[test]
fn acceptance_cli_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let mut violations = Vec::new();
    for name in ["t1", "t2", "t3", "t4", "t5", "e1", "e2", "e3"] {
        let (ds, curve) = fit_dataset(name);
        let input = dataset_path(name);
        let input = input.to_str().unwrap();
        let mid = format!("{}", curve.domain_end() * 0.37);
        let mut command_lines: Vec<Vec<String>> = vec![
            vec!["fit".into(), "--input".into(), input.into()],
            vec![
                "sample".into(),
                "--input".into(),
                input.into(),
                "--samples".into(),
                "137".into(),
            ],
            vec![
                "curvature".into(),
                "--input".into(),
                input.into(),
                "--at".into(),
                mid.clone(),
            ],
            vec!["maxcurv".into(), "--input".into(), input.into()],
            vec![
                "svg".into(),
                "--input".into(),
                input.into(),
                "--show-control-polygon".into(),
            ],
            vec!["verify".into(), "--input".into(), input.into()],
        ];
        if ds.dim == 3 {
            command_lines.push(vec![
                "frame".into(),
                "--input".into(),
                input.into(),
                "--at".into(),
                mid.clone(),
            ]);
        }
        for (ci, line) in command_lines.iter().enumerate() {
            let mut outputs = Vec::new();
            for run in 0..2 {
                let path = dir.path().join(format!("{name}-{ci}-{run}.out"));
                let mut args: Vec<String> = line.clone();
                args.push("--output".into());
                args.push(path.to_str().unwrap().into());
                let arg_refs: Vec<&str> = args.iter().map(String::as_str).collect();
                let output = curvelab(&arg_refs);
                if !output.status.success() {
                    violations.push(format!(
                        "{name} {}: exit {:?}: {}",
                        line[0],
                        output.status.code(),
                        String::from_utf8_lossy(&output.stderr)
                    ));
                    continue;
                }
                outputs.push((std::fs::read(&path).unwrap(), output.stdout));
            }
            if outputs.len() == 2 && outputs[0] != outputs[1] {
                violations.push(format!("{name} {}: runs differ", line[0]));
            }
        }
    }
    finish("criterion 7 (CLI determinism)", violations);
}
