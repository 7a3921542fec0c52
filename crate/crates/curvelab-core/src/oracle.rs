//! Slow-but-simple reference implementations used to cross-check the
//! closed-form solvers and the exact extremum search.
//!
//! Everything here is deliberately independent of the main code paths: the
//! control points come from a banded linear solve instead of the closed
//! forms, curve points from the Bernstein basis instead of de Casteljau, the
//! curvature maximum from a dense sample instead of root isolation, and the
//! stationarity coefficients from raw convolutions instead of the polynomial
//! type. Agreement between the two routes is what the verification tests
//! (and the CLI `verify` command) assert.

use crate::error::{Error, Result};
use crate::geometry::Vector;
use crate::spline::{CubicSegment, PointSet, SplineCurve};

/// Solves a tridiagonal system with unit sub- and super-diagonals and the
/// given main diagonal (Thomas algorithm), overwriting `rhs` with the
/// solution.
fn solve_unit_tridiagonal(diag: &[f64], rhs: &mut [f64]) {
    let n = diag.len();
    debug_assert_eq!(n, rhs.len());
    let mut upper = vec![0.0; n];
    upper[0] = 1.0 / diag[0];
    rhs[0] /= diag[0];
    for i in 1..n {
        let pivot = diag[i] - upper[i - 1];
        upper[i] = 1.0 / pivot;
        rhs[i] = (rhs[i] - rhs[i - 1]) / pivot;
    }
    for i in (0..n - 1).rev() {
        rhs[i] -= upper[i] * rhs[i + 1];
    }
}

/// Solves the cyclic tridiagonal system with unit off-diagonals, diagonal 4,
/// and wraparound corners 1 (size ≥ 3), via the rank-one update of a plain
/// tridiagonal solve.
fn solve_cyclic(rhs_rows: &mut [Vec<f64>]) {
    let m = rhs_rows[0].len();
    let gamma = -4.0;
    let mut diag = vec![4.0; m];
    diag[0] = 4.0 - gamma;
    diag[m - 1] = 4.0 - 1.0 / gamma;

    let mut z = vec![0.0; m];
    z[0] = gamma;
    z[m - 1] = 1.0;
    solve_unit_tridiagonal(&diag, &mut z);
    let denom = 1.0 + z[0] + z[m - 1] / gamma;

    for rhs in rhs_rows.iter_mut() {
        solve_unit_tridiagonal(&diag, rhs);
        let factor = (rhs[0] + rhs[m - 1] / gamma) / denom;
        for (x, zi) in rhs.iter_mut().zip(&z) {
            *x -= factor * zi;
        }
    }
}

fn coordinate_rows(points: &[Vector], dim: usize) -> Vec<Vec<f64>> {
    (0..dim)
        .map(|c| points.iter().map(|p| p.get(c)).collect())
        .collect()
}

fn rows_to_vectors(rows: &[Vec<f64>], len: usize) -> Vec<Vector> {
    (0..len)
        .map(|i| {
            let coords: Vec<f64> = rows.iter().map(|r| r[i]).collect();
            Vector::from_slice(&coords, i).expect("solver output is finite")
        })
        .collect()
}

/// Control points of the relaxed spline, from the banded linear system
/// b_{k−1} + 4 b_k + b_{k+1} = 6 s_k with b₀ = s₀ and b_n = s_n.
pub fn relaxed_control_points(s: &PointSet) -> Result<Vec<Vector>> {
    let n = s.n();
    let pts = s.points();
    let interior = n - 1;
    let mut rows: Vec<Vec<f64>> = (0..s.dim())
        .map(|c| {
            (1..n)
                .map(|k| {
                    let mut r = 6.0 * pts[k].get(c);
                    if k == 1 {
                        r -= pts[0].get(c);
                    }
                    if k == n - 1 {
                        r -= pts[n].get(c);
                    }
                    r
                })
                .collect()
        })
        .collect();
    let diag = vec![4.0; interior];
    for row in rows.iter_mut() {
        solve_unit_tridiagonal(&diag, row);
    }
    let mut b = Vec::with_capacity(n + 1);
    b.push(pts[0]);
    b.extend(rows_to_vectors(&rows, interior));
    b.push(pts[n]);
    Ok(b)
}

/// Control points of the periodic spline, from the cyclic system
/// b_{k−1} + 4 b_k + b_{k+1} = 6 s_k with indices mod n+1.
pub fn periodic_control_points(s: &PointSet) -> Result<Vec<Vector>> {
    let n = s.n();
    let pts = s.points();
    if pts[0].dist(&pts[n]) == 0.0 {
        return Err(Error::DuplicatePoint { first: 0, second: n });
    }
    let mut rows = coordinate_rows(pts, s.dim());
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            *x *= 6.0;
        }
    }
    solve_cyclic(&mut rows);
    Ok(rows_to_vectors(&rows, n + 1))
}

/// Evaluates a Bézier curve through the explicit Bernstein basis,
/// independently of de Casteljau recursion. `t` must lie in [0, 1].
pub fn bernstein_eval(controls: &[Vector], t: f64) -> Result<Vector> {
    if controls.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: controls.len(),
        });
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfDomain { t, max: 1.0 });
    }
    let d = controls.len() - 1;
    // Pascal's row of binomial coefficients C(d, i).
    let mut binom = vec![1.0f64; d + 1];
    for i in 1..=d {
        binom[i] = binom[i - 1] * (d - i + 1) as f64 / i as f64;
    }
    let mut acc = Vector::zero(controls[0].dim());
    for (i, c) in controls.iter().enumerate() {
        let basis = binom[i] * t.powi(i as i32) * (1.0 - t).powi((d - i) as i32);
        acc = acc + *c * basis;
    }
    Ok(acc)
}

fn curvature_inline(seg: &CubicSegment, u: f64) -> Option<f64> {
    let v = seg.eval_local(u, 1);
    let a = seg.eval_local(u, 2);
    let speed = v.norm();
    if speed < 1e-12 * 3.0 * seg.scale() || speed == 0.0 {
        return None;
    }
    let numerator = if seg.dim() == 2 {
        (v.get(0) * a.get(1) - v.get(1) * a.get(0)).abs()
    } else {
        v.cross(&a).expect("3D segment").norm()
    };
    Some(numerator / (speed * speed * speed))
}

/// Minimum grid density [`dense_max_curvature`] accepts.
pub const MIN_DENSE_SAMPLES: usize = 1000;

/// Brute-force curvature maximum: samples every segment on a uniform grid
/// (inclusive of both endpoints) and returns the largest value with the
/// earliest parameter attaining it. Grid points where the parameterization
/// is stationary are skipped.
///
/// Doubling `samples_per_segment` refines the grid in place (the coarse grid
/// is a subset of the fine one), so reported maxima are nondecreasing under
/// doubling — which is what makes this usable as a lower-bound oracle.
pub fn dense_max_curvature(
    curve: &SplineCurve,
    samples_per_segment: usize,
) -> Result<(f64, f64)> {
    if samples_per_segment < MIN_DENSE_SAMPLES {
        return Err(Error::TooFewSamples {
            got: samples_per_segment,
            min: MIN_DENSE_SAMPLES,
        });
    }
    let mut best = 0.0f64;
    let mut best_t = 0.0f64;
    let mut found = false;
    for seg in curve.segments() {
        let lo = seg.index() as f64 - 1.0;
        for i in 0..=samples_per_segment {
            let u = i as f64 / samples_per_segment as f64;
            if let Some(kappa) = curvature_inline(seg, u) {
                if !found || kappa > best {
                    best = kappa;
                    best_t = lo + u;
                    found = true;
                }
            }
        }
    }
    Ok((best, best_t))
}

/// The raw degree-9 coefficient vector (ascending, length 10, untrimmed) of
/// the spatial stationarity numerator (v·v)(c·c′) − 3(c·c)(v·a), c = v × a,
/// in the segment's local parameter. Built with plain array convolutions.
/// The two top coefficients cancel in exact arithmetic; what this build
/// leaves in them measures the rounding floor of the construction.
pub fn naive_stationarity(seg: &CubicSegment) -> Vec<f64> {
    assert_eq!(seg.dim(), 3, "spatial stationarity needs a space segment");
    let m = seg.monomial_coeffs();
    // Local-parameter coefficient arrays per coordinate.
    let coord = |i: usize| [m[0].get(i), m[1].get(i), m[2].get(i), m[3].get(i)];
    let deriv = |p: &[f64]| -> Vec<f64> {
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| i as f64 * c)
            .collect()
    };
    let conv = |a: &[f64], b: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let axpy = |acc: &mut Vec<f64>, s: f64, p: &[f64]| {
        if acc.len() < p.len() {
            acc.resize(p.len(), 0.0);
        }
        for (slot, c) in acc.iter_mut().zip(p) {
            *slot += s * c;
        }
    };

    let pos: Vec<[f64; 4]> = (0..3).map(coord).collect();
    let v: Vec<Vec<f64>> = pos.iter().map(|p| deriv(p)).collect();
    let a: Vec<Vec<f64>> = v.iter().map(|p| deriv(p)).collect();
    let cross = |x: &[Vec<f64>], y: &[Vec<f64>], i: usize, j: usize| -> Vec<f64> {
        let mut out = conv(&x[i], &y[j]);
        axpy(&mut out, -1.0, &conv(&x[j], &y[i]));
        out
    };
    let c = [cross(&v, &a, 1, 2), cross(&v, &a, 2, 0), cross(&v, &a, 0, 1)];
    let cp: Vec<Vec<f64>> = c.iter().map(|p| deriv(p)).collect();

    let dot3 = |x: &[Vec<f64>], y: &[Vec<f64>]| -> Vec<f64> {
        let mut out = Vec::new();
        for (a, b) in x.iter().zip(y) {
            axpy(&mut out, 1.0, &conv(a, b));
        }
        out
    };
    let vv = dot3(&v, &v);
    let va = dot3(&v, &a);
    let c_slices: Vec<Vec<f64>> = c.to_vec();
    let ccp = dot3(&c_slices, &cp);
    let cc = dot3(&c_slices, &c_slices);

    let mut q = vec![0.0; 10];
    axpy(&mut q, 1.0, &conv(&vv, &ccp));
    axpy(&mut q, -3.0, &conv(&cc, &va));
    q.resize(10, 0.0);
    q
}

/// Locations of local extrema of the curvature along one segment, detected
/// by sign changes of forward differences on a uniform grid. Returns global
/// parameters at the grid points where the slope flips; resolution is one
/// grid step.
pub fn fd_extrema(seg: &CubicSegment, samples: usize) -> Vec<f64> {
    let lo = seg.index() as f64 - 1.0;
    let kappa: Vec<Option<f64>> = (0..=samples)
        .map(|i| curvature_inline(seg, i as f64 / samples as f64))
        .collect();
    let mut out = Vec::new();
    for i in 1..samples {
        let (Some(prev), Some(here), Some(next)) = (kappa[i - 1], kappa[i], kappa[i + 1]) else {
            continue;
        };
        let before = here - prev;
        let after = next - here;
        if (before > 0.0 && after < 0.0) || (before < 0.0 && after > 0.0) {
            out.push(lo + i as f64 / samples as f64);
        }
    }
    out
}
