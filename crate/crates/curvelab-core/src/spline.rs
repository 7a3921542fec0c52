//! Interpolating C² cubic splines through ordered point sets.
//!
//! Two boundary kinds are supported: *relaxed* (open curve, vanishing second
//! derivative — hence zero curvature — at both ends) and *periodic* (closed
//! curve with cyclic control-point indexing). Control points come from
//! closed-form formulas built on the three-term integer sequence β, not from
//! a linear solve; the independent solver in [`crate::oracle`] exists to
//! cross-check them.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::geometry::Vector;

/// Largest admissible β index: β grows like (2+√3)^ℓ and leaves `f64` range
/// shortly beyond ℓ ≈ 537, so the table stops comfortably before that.
pub const BETA_MAX: i64 = 500;

/// The sequence β₋₁ = 0, β₀ = 1, β_{ℓ+1} = 4β_ℓ − β_{ℓ−1} (0, 1, 4, 15, 56,
/// 209, …), precomputed once. The recurrence is exact integer arithmetic
/// carried in `f64`; entries are exact until they exceed 2⁵³ and drift by at
/// most a few ulps per step after that.
#[derive(Clone, Debug)]
pub struct BetaTable {
    /// `values[i]` holds β_{i−1}, so the table starts at β₋₁.
    values: Vec<f64>,
}

impl BetaTable {
    /// Builds the table up to β_max (inclusive).
    pub fn up_to(max: i64) -> Result<Self> {
        if max > BETA_MAX {
            return Err(Error::IndexTooLarge {
                index: max,
                max: BETA_MAX,
            });
        }
        let len = (max + 2).max(2) as usize;
        let mut values = vec![0.0; len];
        values[1] = 1.0;
        for i in 2..len {
            values[i] = 4.0 * values[i - 1] - values[i - 2];
        }
        Ok(BetaTable { values })
    }

    /// β_ℓ for ℓ ≥ −1.
    pub fn get(&self, l: i64) -> Result<f64> {
        if !(-1..=BETA_MAX).contains(&l) {
            return Err(Error::IndexTooLarge {
                index: l,
                max: BETA_MAX,
            });
        }
        Ok(self.values[(l + 1) as usize])
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

fn beta_table() -> &'static BetaTable {
    static TABLE: OnceLock<BetaTable> = OnceLock::new();
    TABLE.get_or_init(|| BetaTable::up_to(BETA_MAX).expect("static bound"))
}

/// β_ℓ from the shared table.
pub fn beta(l: i64) -> Result<f64> {
    beta_table().get(l)
}

/// Which boundary condition a spline (or its control polygon) uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplineKind {
    Relaxed,
    Periodic,
}

impl std::fmt::Display for SplineKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SplineKind::Relaxed => write!(f, "relaxed"),
            SplineKind::Periodic => write!(f, "periodic"),
        }
    }
}

/// An ordered set of interpolation points s₀ … s_n (n ≥ 2), all of one
/// dimension, with consecutive points distinct.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<Vector>,
    dim: usize,
}

impl PointSet {
    pub fn new(points: Vec<Vector>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::TooFewPoints {
                needed: 3,
                got: points.len(),
            });
        }
        let dim = points[0].dim();
        for (i, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: p.dim(),
                });
            }
            if i > 0 && p.dist(&points[i - 1]) == 0.0 {
                return Err(Error::DuplicatePoint {
                    first: i - 1,
                    second: i,
                });
            }
        }
        Ok(PointSet { points, dim })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let points = rows
            .iter()
            .enumerate()
            .map(|(i, row)| Vector::from_slice(row, i))
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// n, the largest point index (the set holds n+1 points).
    pub fn n(&self) -> usize {
        self.points.len() - 1
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    /// The magnitude yardstick used by relative tolerances: the largest
    /// absolute coordinate, floored at 1.
    pub fn scale(&self) -> f64 {
        self.points
            .iter()
            .flat_map(|p| p.coords())
            .fold(1.0f64, |m, c| m.max(c.abs()))
    }
}

/// Solved control points b₀ … b_n for one boundary kind.
#[derive(Clone, Debug)]
pub struct ControlPolygon {
    b: Vec<Vector>,
    kind: SplineKind,
    dim: usize,
}

impl ControlPolygon {
    pub fn points(&self) -> &[Vector] {
        &self.b
    }

    pub fn kind(&self) -> SplineKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Solves the relaxed (open, end-curvature-zero) interpolation problem in
/// closed form.
///
/// The boundary conditions pin b₀ = s₀ and b_n = s_n; each interior control
/// point is the alternating β-weighted combination of the data. Ratios of β
/// values are formed before any multiplication so no intermediate overflows
/// even near the `BETA_MAX` guard; every weight that touches a data point is
/// O(1).
pub fn solve_relaxed(s: &PointSet) -> Result<ControlPolygon> {
    let n = s.n();
    let pts = s.points();
    let beta_n1 = beta(n as i64 - 1)?;
    let mut b = Vec::with_capacity(n + 1);
    b.push(pts[0]);
    for k in 1..n {
        let r_left = beta((n - 1 - k) as i64)? / beta_n1;
        let r_right = beta(k as i64 - 1)? / beta_n1;
        let mut acc = pts[0] * (r_left * sign(k)) + pts[n] * (r_right * sign(n - k));
        for (j, p) in pts.iter().enumerate().take(k).skip(1) {
            acc = acc + *p * (6.0 * r_left * beta(j as i64 - 1)? * sign(k - j));
        }
        for (j, p) in pts.iter().enumerate().take(n).skip(k) {
            acc = acc + *p * (6.0 * r_right * beta((n - 1 - j) as i64)? * sign(j - k));
        }
        b.push(acc);
    }
    b.push(pts[n]);
    Ok(ControlPolygon {
        b,
        kind: SplineKind::Relaxed,
        dim: s.dim(),
    })
}

/// Solves the periodic (closed) interpolation problem in closed form.
///
/// b₀ comes first, from the cyclic elimination of the wraparound system; the
/// remaining control points follow from the same alternating β-weighted sums
/// as the relaxed case, with b₀ standing in for both boundary values. The
/// closing segment requires s₀ ≠ s_n.
pub fn solve_periodic(s: &PointSet) -> Result<ControlPolygon> {
    let n = s.n();
    let pts = s.points();
    if pts[0].dist(&pts[n]) == 0.0 {
        return Err(Error::DuplicatePoint { first: 0, second: n });
    }
    let beta_n = beta(n as i64)?;
    // Denominator of the cyclic elimination; |d| grows like β_n, so every
    // weight below is formed as a ratio against it.
    let d = beta(n as i64 - 1)? - 2.0 * beta_n + sign(n - 1);
    let mut b0 = pts[0] * (-3.0 * (beta_n / d));
    for (j, p) in pts.iter().enumerate().take(n + 1).skip(1) {
        let w = sign(j - 1) * (beta((n - j) as i64)? / d) + sign(n - j) * (beta(j as i64 - 1)? / d);
        b0 = b0 + *p * (3.0 * w);
    }

    let mut b = Vec::with_capacity(n + 1);
    b.push(b0);
    for k in 1..=n {
        let r_left = beta((n - k) as i64)? / beta_n;
        let r_right = beta(k as i64 - 1)? / beta_n;
        let mut acc = b0 * (r_left * sign(k) + r_right * sign(n + 1 - k));
        for (j, p) in pts.iter().enumerate().take(k).skip(1) {
            acc = acc + *p * (6.0 * r_left * beta(j as i64 - 1)? * sign(k - j));
        }
        for (j, p) in pts.iter().enumerate().take(n + 1).skip(k) {
            acc = acc + *p * (6.0 * r_right * beta((n - j) as i64)? * sign(j - k));
        }
        b.push(acc);
    }
    Ok(ControlPolygon {
        b,
        kind: SplineKind::Periodic,
        dim: s.dim(),
    })
}

fn sign(exp: usize) -> f64 {
    if exp.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// One cubic Bézier piece of a spline. Segment k covers the global parameter
/// interval [k−1, k]; its control points are (s_{k−1}, p_{k−1}, q_k, s_k),
/// where the inner two trisect the control-polygon edge b_{k−1}b_k.
#[derive(Clone, Debug)]
pub struct CubicSegment {
    c: [Vector; 4],
    index: usize,
}

impl CubicSegment {
    pub fn new(c: [Vector; 4], index: usize) -> Self {
        CubicSegment { c, index }
    }

    /// 1-based segment index k; the segment parameterizes [k−1, k].
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn controls(&self) -> &[Vector; 4] {
        &self.c
    }

    pub fn dim(&self) -> usize {
        self.c[0].dim()
    }

    /// Monomial coefficients (a₀, a₁, a₂, a₃) of the segment in its local
    /// parameter u ∈ [0, 1]: f(u) = a₀ + a₁u + a₂u² + a₃u³.
    pub fn monomial_coeffs(&self) -> [Vector; 4] {
        let [c0, c1, c2, c3] = self.c;
        [
            c0,
            (c1 - c0) * 3.0,
            (c0 - c1 * 2.0 + c2) * 3.0,
            c3 - c0 + (c1 - c2) * 3.0,
        ]
    }

    /// Position or derivative (order 0–3) at local parameter u.
    pub fn eval_local(&self, u: f64, order: u8) -> Vector {
        let [a0, a1, a2, a3] = self.monomial_coeffs();
        match order {
            0 => a0 + (a1 + (a2 + a3 * u) * u) * u,
            1 => a1 + (a2 * 2.0 + a3 * (3.0 * u)) * u,
            2 => a2 * 2.0 + a3 * (6.0 * u),
            3 => a3 * 6.0,
            o => panic!("derivative order {o} out of range 0..=3"),
        }
    }

    /// The segment's magnitude yardstick: its longest control-net edge. The
    /// speed ‖f′‖ is bounded by three times this value.
    pub fn scale(&self) -> f64 {
        self.c
            .windows(2)
            .map(|w| w[0].dist(&w[1]))
            .fold(0.0f64, f64::max)
    }
}

/// A piecewise-cubic C² spline on the global parameter domain [0, m], where
/// m = n for relaxed splines and n+1 for periodic ones.
#[derive(Clone, Debug)]
pub struct SplineCurve {
    segments: Vec<CubicSegment>,
    kind: SplineKind,
    source: PointSet,
}

impl SplineCurve {
    pub fn segments(&self) -> &[CubicSegment] {
        &self.segments
    }

    pub fn kind(&self) -> SplineKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.source.dim()
    }

    /// Upper end m of the parameter domain [0, m].
    pub fn domain_end(&self) -> f64 {
        self.segments.len() as f64
    }

    pub fn source(&self) -> &PointSet {
        &self.source
    }

    /// Position (order 0) or derivative (orders 1–3) at global parameter t.
    ///
    /// Knot ownership: every knot t = k is evaluated with segment k — the
    /// segment to its left — except t = 0, which only segment 1 covers. By C²
    /// continuity the choice is invisible through order 2; order 3 is
    /// piecewise constant and genuinely two-valued at interior knots, so the
    /// left-segment convention is part of this function's contract.
    pub fn eval(&self, t: f64, order: u8) -> Result<Vector> {
        let m = self.domain_end();
        if !(0.0..=m).contains(&t) {
            return Err(Error::OutOfDomain { t, max: m });
        }
        let seg_index = (t.ceil() as usize).max(1);
        let seg = &self.segments[seg_index - 1];
        Ok(seg.eval_local(t - (seg_index - 1) as f64, order))
    }
}

/// Assembles the piecewise-cubic spline from a solved control polygon.
///
/// Each segment k takes control points (s_{k−1}, p_{k−1}, q_k, s_k) with
/// p_{k−1} = (2b_{k−1} + b_k)/3 and q_k = (b_{k−1} + 2b_k)/3; the periodic
/// kind wraps around with b_{n+1} = b₀ and s_{n+1} = s₀. The pairing of
/// polygon and point set is validated by checking the defining relation
/// b_{k−1} + 4b_k + b_{k+1} = 6s_k (and the relaxed boundary identities), so
/// passing a polygon solved from different data or for the other kind is
/// rejected rather than silently assembled.
pub fn build_spline(polygon: &ControlPolygon, s: &PointSet) -> Result<SplineCurve> {
    let n = s.n();
    let b = polygon.points();
    if b.len() != n + 1 || polygon.dim() != s.dim() {
        return Err(Error::KindMismatch);
    }
    let pts = s.points();
    let tol = 1e-6 * s.scale();
    let defining_ok = |k: usize, prev: &Vector, cur: &Vector, next: &Vector| {
        let residual = *prev + *cur * 4.0 + *next - pts[k % (n + 1)] * 6.0;
        residual.norm() <= 6.0 * tol
    };
    let consistent = match polygon.kind() {
        SplineKind::Relaxed => {
            b[0].dist(&pts[0]) <= tol
                && b[n].dist(&pts[n]) <= tol
                && (1..n).all(|k| defining_ok(k, &b[k - 1], &b[k], &b[k + 1]))
        }
        SplineKind::Periodic => (0..=n).all(|k| {
            defining_ok(
                k,
                &b[(k + n) % (n + 1)],
                &b[k],
                &b[(k + 1) % (n + 1)],
            )
        }),
    };
    if !consistent {
        return Err(Error::KindMismatch);
    }

    let count = match polygon.kind() {
        SplineKind::Relaxed => n,
        SplineKind::Periodic => n + 1,
    };
    let mut segments = Vec::with_capacity(count);
    for k in 1..=count {
        let i0 = k - 1;
        let i1 = k % (n + 1);
        let p = (b[i0] * 2.0 + b[i1]) * (1.0 / 3.0);
        let q = (b[i0] + b[i1] * 2.0) * (1.0 / 3.0);
        segments.push(CubicSegment::new([pts[i0], p, q, pts[i1]], k));
    }
    Ok(SplineCurve {
        segments,
        kind: polygon.kind(),
        source: s.clone(),
    })
}

/// Convenience: solve + assemble in one call.
pub fn fit(s: &PointSet, kind: SplineKind) -> Result<SplineCurve> {
    let polygon = match kind {
        SplineKind::Relaxed => solve_relaxed(s)?,
        SplineKind::Periodic => solve_periodic(s)?,
    };
    build_spline(&polygon, s)
}

/// Evaluates a Bézier curve of arbitrary degree (≥ 1) by de Casteljau's
/// algorithm. `t` must lie in [0, 1].
pub fn bezier_eval(controls: &[Vector], t: f64) -> Result<Vector> {
    if controls.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: controls.len(),
        });
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfDomain { t, max: 1.0 });
    }
    let dim = controls[0].dim();
    for c in controls {
        if c.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: c.dim(),
            });
        }
    }
    let mut layer = controls.to_vec();
    while layer.len() > 1 {
        for i in 0..layer.len() - 1 {
            layer[i] = layer[i] * (1.0 - t) + layer[i + 1] * t;
        }
        layer.pop();
    }
    Ok(layer[0])
}
