//! Plane/space vectors and the polynomial kernel (coefficient arithmetic,
//! Horner evaluation, real-root isolation) that the spline and curvature
//! modules build on.

use crate::error::{Error, Result};

/// Largest polynomial degree the root finder accepts.
pub const MAX_ROOT_DEGREE: usize = 9;

/// A 2- or 3-component vector over `f64`.
///
/// The two widths are distinct variants rather than a 3D embedding with a
/// zero z-component: plane-curve operations (such as [`Vector::rot90`]) exist
/// only in 2D, and mixing widths is a reported error, not a silent promotion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Vector {
    D2([f64; 2]),
    D3([f64; 3]),
}

impl Vector {
    pub fn new2(x: f64, y: f64) -> Self {
        Vector::D2([x, y])
    }

    pub fn new3(x: f64, y: f64, z: f64) -> Self {
        Vector::D3([x, y, z])
    }

    /// Builds a vector from a coordinate slice, rejecting unsupported widths
    /// and non-finite coordinates. `index` labels error messages with the
    /// position of the offending point in its containing sequence.
    pub fn from_slice(coords: &[f64], index: usize) -> Result<Self> {
        if let Some(coord) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index, coord });
        }
        match coords {
            [x, y] => Ok(Vector::D2([*x, *y])),
            [x, y, z] => Ok(Vector::D3([*x, *y, *z])),
            other => Err(Error::DimensionMismatch {
                left: other.len(),
                right: 2,
            }),
        }
    }

    /// The all-zero vector of the given width (2 or 3).
    pub fn zero(dim: usize) -> Self {
        match dim {
            2 => Vector::D2([0.0; 2]),
            3 => Vector::D3([0.0; 3]),
            d => panic!("unsupported vector width {d}"),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Vector::D2(_) => 2,
            Vector::D3(_) => 3,
        }
    }

    pub fn coords(&self) -> &[f64] {
        match self {
            Vector::D2(c) => c,
            Vector::D3(c) => c,
        }
    }

    pub fn get(&self, i: usize) -> f64 {
        self.coords()[i]
    }

    pub fn norm_sq(&self) -> f64 {
        self.coords().iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist(&self, other: &Vector) -> f64 {
        (*self - *other).norm()
    }

    /// Euclidean inner product. Errors when the widths differ.
    pub fn dot(&self, other: &Vector) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .coords()
            .iter()
            .zip(other.coords())
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Right-handed cross product; defined for space vectors only.
    pub fn cross(&self, other: &Vector) -> Result<Vector> {
        match (self, other) {
            (Vector::D3(a), Vector::D3(b)) => Ok(Vector::D3([
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ])),
            _ => Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            }),
        }
    }

    /// Counterclockwise quarter turn `(x, y) -> (-y, x)`; plane vectors only.
    pub fn rot90(&self) -> Result<Vector> {
        match self {
            Vector::D2([x, y]) => Ok(Vector::D2([-y, *x])),
            Vector::D3(_) => Err(Error::DimensionMismatch { left: 3, right: 2 }),
        }
    }

    fn check_dim(&self, other: &Vector) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    fn map2(&self, other: &Vector, f: impl Fn(f64, f64) -> f64) -> Vector {
        match (self, other) {
            (Vector::D2(a), Vector::D2(b)) => Vector::D2([f(a[0], b[0]), f(a[1], b[1])]),
            (Vector::D3(a), Vector::D3(b)) => {
                Vector::D3([f(a[0], b[0]), f(a[1], b[1]), f(a[2], b[2])])
            }
            _ => panic!(
                "vector width mismatch in arithmetic: {} vs {}",
                self.dim(),
                other.dim()
            ),
        }
    }

    fn map(&self, f: impl Fn(f64) -> f64) -> Vector {
        match self {
            Vector::D2(a) => Vector::D2([f(a[0]), f(a[1])]),
            Vector::D3(a) => Vector::D3([f(a[0]), f(a[1]), f(a[2])]),
        }
    }
}

// Operator arithmetic panics on width mismatch; it is meant for code that has
// already established a uniform dimension (solvers, evaluators). Boundary-
// crossing code uses the fallible named operations above instead.
impl std::ops::Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        self.map2(&rhs, |a, b| a + b)
    }
}

impl std::ops::Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        self.map2(&rhs, |a, b| a - b)
    }
}

impl std::ops::Mul<f64> for Vector {
    type Output = Vector;
    fn mul(self, s: f64) -> Vector {
        self.map(|a| a * s)
    }
}

impl std::ops::Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.map(|a| -a)
    }
}

/// A real polynomial stored as ascending coefficients.
///
/// Construction trims trailing coefficients that are exactly zero, and only
/// those: a tiny leading coefficient can still matter on intervals away from
/// the origin (its contribution grows like `|a_d| * t^d`), so magnitude-based
/// trimming is left to callers who know the interval. The coefficient list is
/// never empty; the zero polynomial is the single coefficient `0.0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs = vec![0.0];
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![0.0] }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0.0; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.coeffs.get(i).copied().unwrap_or(0.0)
                + other.coeffs.get(i).copied().unwrap_or(0.0);
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// The composition self(inner(t)), expanded to coefficients by Horner's
    /// scheme over polynomial arithmetic.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Polynomial::constant(c));
        }
        acc
    }

    /// Drops trailing coefficients whose magnitude is at most `rel` times the
    /// largest coefficient. For use where the true degree is known to be
    /// lower and the tail is cancellation residue.
    pub fn trim_rel(&self, rel: f64) -> Polynomial {
        let tau = rel * self.max_abs_coeff();
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() > 1 && coeffs.last().unwrap().abs() <= tau {
            coeffs.pop();
        }
        if coeffs.len() == 1 && coeffs[0].abs() <= tau {
            coeffs[0] = 0.0;
        }
        Polynomial { coeffs }
    }

    /// Formal derivative; a constant differentiates to the zero polynomial.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * (i as f64 + 1.0))
                .collect(),
        )
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// Compensated (error-free-transform) Horner evaluation. Returns the
    /// corrected value together with `Σ|a_i||x|^i`, the magnitude that scales
    /// the rounding floor of evaluation at `x`. The corrected value is
    /// accurate to `O(ε²)` relative to that magnitude, which is what lets the
    /// root finder distinguish "this local extremum is exactly zero" from
    /// "this local extremum is merely small".
    pub fn eval_with_floor(&self, x: f64) -> (f64, f64) {
        let mut value = 0.0f64;
        let mut correction = 0.0f64;
        let mut abs_sum = 0.0f64;
        for &a in self.coeffs.iter().rev() {
            let product = value * x;
            let product_err = f64::mul_add(value, x, -product);
            let sum = product + a;
            // Knuth's branchless two-sum error term.
            let shifted = sum - product;
            let sum_err = (product - (sum - shifted)) + (a - shifted);
            value = sum;
            correction = correction * x + (product_err + sum_err);
            abs_sum = abs_sum * x.abs() + a.abs();
        }
        (value + correction, abs_sum)
    }

    /// The natural evaluation magnitude of the polynomial on `[lo, hi]`:
    /// `max_i |a_i| * B^i` with `B = max(1, |lo|, |hi|)`. Residual tolerances
    /// are relative to this scale, which bounds the rounding noise Horner
    /// evaluation accumulates on the interval.
    pub fn eval_scale(&self, lo: f64, hi: f64) -> f64 {
        let b = 1.0f64.max(lo.abs()).max(hi.abs());
        let mut pow = 1.0;
        let mut scale = 0.0f64;
        for c in &self.coeffs {
            scale = scale.max(c.abs() * pow);
            pow *= b;
        }
        scale
    }
}

/// Knobs for [`find_roots_with`]. The defaults match the library-wide
/// guarantees; the CLI exposes `residual_rel` as `--tol-root`.
#[derive(Clone, Copy, Debug)]
pub struct RootParams {
    /// Acceptance bound for reported roots: every returned `r` satisfies
    /// `|p(r)| <= residual_rel * eval_scale(lo, hi)`. This is a final filter,
    /// not the detection threshold (detection runs at the much tighter
    /// compensated-evaluation floor), so loosening it never invents roots.
    pub residual_rel: f64,
    /// Roots closer than this are merged (the smaller survives).
    pub dedup: f64,
    /// Refinement target for the step size of the final polish.
    pub refine: f64,
}

impl Default for RootParams {
    fn default() -> Self {
        RootParams {
            residual_rel: 1e-9,
            dedup: 1e-9,
            refine: 1e-13,
        }
    }
}

/// Result of a root search: the sorted roots strictly inside the interval,
/// plus a flag marking the identically-zero polynomial (for which "every
/// point is a root" is reported as no roots + `degenerate`).
#[derive(Clone, Debug, Default)]
pub struct Roots {
    pub roots: Vec<f64>,
    pub degenerate: bool,
}

/// Finds every real root of `p` in the open interval `(lo, hi)` with the
/// default [`RootParams`].
pub fn find_roots(p: &Polynomial, lo: f64, hi: f64) -> Result<Roots> {
    find_roots_with(p, lo, hi, &RootParams::default())
}

/// Finds every real root of `p` (degree <= 9) in the open interval
/// `(lo, hi)`.
///
/// Strategy: recursively find the roots of `p'`, which split the interval
/// into monotone pieces; bisect every piece whose end values change sign,
/// then polish with Newton steps until the update is below `params.refine`.
/// Even-multiplicity roots produce no sign change, so breakpoints are also
/// classified directly: a breakpoint counts as a root when its compensated
/// evaluation sits at the `O(ε²)` rounding floor — far below any genuinely
/// nonzero local extremum — and bracketing is suppressed next to such a
/// breakpoint (the flanking sign information there is pure noise). Reported
/// roots are finally checked against `params.residual_rel` relative to
/// [`Polynomial::eval_scale`] on the interval.
pub fn find_roots_with(p: &Polynomial, lo: f64, hi: f64, params: &RootParams) -> Result<Roots> {
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::InvalidInterval { lo, hi });
    }
    if p.degree() > MAX_ROOT_DEGREE {
        return Err(Error::DegreeTooHigh {
            degree: p.degree(),
            max: MAX_ROOT_DEGREE,
        });
    }
    if p.is_zero() {
        return Ok(Roots {
            roots: Vec::new(),
            degenerate: true,
        });
    }
    if p.degree() == 0 {
        return Ok(Roots::default());
    }

    let deriv = p.derivative();

    // Monotone decomposition: breakpoints are lo, the roots of p', and hi.
    let mut breaks = vec![lo];
    if p.degree() >= 2 {
        breaks.extend(find_roots_with(&deriv, lo, hi, params)?.roots);
    }
    breaks.push(hi);

    // Compensated evaluation at every breakpoint: the corrected values carry
    // trustworthy signs all the way down to the ε² floor.
    let values: Vec<(f64, f64)> = breaks.iter().map(|&b| p.eval_with_floor(b)).collect();
    let degree_factor = (p.degree() + 1) as f64;
    let class_rel = 1024.0 * degree_factor * degree_factor * f64::EPSILON * f64::EPSILON;

    let mut roots = Vec::new();
    let mut is_flat_root = vec![false; breaks.len()];
    for i in 1..breaks.len() - 1 {
        let (value, magnitude) = values[i];
        if value.abs() <= class_rel * magnitude {
            roots.push(breaks[i]);
            is_flat_root[i] = true;
        }
    }

    for i in 0..breaks.len() - 1 {
        if is_flat_root[i] || is_flat_root[i + 1] {
            // The extremum itself is the root here; any sign change the noisy
            // flank suggests would duplicate it.
            continue;
        }
        let (a, b) = (breaks[i], breaks[i + 1]);
        if b - a <= f64::EPSILON * a.abs().max(b.abs()).max(1.0) {
            continue;
        }
        let (fa, fb) = (values[i].0, values[i + 1].0);
        if fa == 0.0 || fb == 0.0 {
            // Exact zero at an excluded endpoint of the open interval;
            // monotonicity rules out another zero inside this piece.
            continue;
        }
        if (fa < 0.0) != (fb < 0.0) {
            roots.push(refine_root(p, &deriv, a, b, fa, params));
        }
    }

    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots.dedup_by(|next, kept| (*next - *kept).abs() <= params.dedup);
    let accept = params.residual_rel * p.eval_scale(lo, hi);
    roots.retain(|&r| r > lo && r < hi && p.eval_with_floor(r).0.abs() <= accept);
    Ok(Roots {
        roots,
        degenerate: false,
    })
}

/// Bisection on a bracketing monotone piece, then Newton polish.
///
/// Both stages evaluate through the compensated scheme: the polynomials that
/// reach this point routinely cancel ten or more leading digits near their
/// roots, so plain Horner signs go random in a band many orders of magnitude
/// wider than the refinement target, and bisection would stall at a random
/// point inside that band.
fn refine_root(
    p: &Polynomial,
    deriv: &Polynomial,
    mut a: f64,
    mut b: f64,
    fa: f64,
    params: &RootParams,
) -> f64 {
    let negative_left = fa < 0.0;
    for _ in 0..100 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b || b - a <= params.refine {
            break;
        }
        let fm = p.eval_with_floor(m).0;
        if fm == 0.0 {
            return m;
        }
        if (fm < 0.0) == negative_left {
            a = m;
        } else {
            b = m;
        }
    }
    let mut x = 0.5 * (a + b);
    for _ in 0..8 {
        let d = deriv.eval(x);
        if d == 0.0 {
            break;
        }
        let step = p.eval_with_floor(x).0 / d;
        let next = (x - step).clamp(a, b);
        let moved = (next - x).abs();
        x = next;
        if moved <= params.refine {
            break;
        }
    }
    x
}
