//! Curvature of spline curves: pointwise values, Frenet frames, and the
//! exact search for the curvature maximum.
//!
//! The search is not sampling-based. On each segment the derivative of the
//! squared curvature is a rational function whose numerator is a polynomial
//! in the curve parameter; its real roots are the interior stationary points,
//! so the segment maximum is attained either there or at a segment endpoint.
//! Collecting those finitely many candidates per segment and comparing them
//! is exhaustive, not heuristic.

use crate::error::{Error, Result};
use crate::geometry::{find_roots_with, Polynomial, RootParams, Vector};
use crate::spline::{CubicSegment, SplineCurve};

/// Velocity, acceleration, and jerk of one segment at a local parameter.
#[derive(Clone, Copy, Debug)]
pub struct KinematicState {
    pub v: Vector,
    pub a: Vector,
    pub jerk: Vector,
}

/// First three derivatives of the segment at local parameter `u`.
pub fn kinematics(seg: &CubicSegment, u: f64) -> KinematicState {
    KinematicState {
        v: seg.eval_local(u, 1),
        a: seg.eval_local(u, 2),
        jerk: seg.eval_local(u, 3),
    }
}

/// Speeds below this are treated as zero for the segment: `1e-12` times the
/// a-priori speed bound `3 * scale`, where `scale` is the longest edge of the
/// segment's control net.
pub fn speed_floor(seg: &CubicSegment) -> f64 {
    1e-12 * 3.0 * seg.scale()
}

/// Curvature from a kinematic state. `floor` is the minimum admissible speed
/// (see [`speed_floor`]); `t` only labels the error when the state sits at a
/// stationary point of the parameterization.
///
/// Plane curves use the signed-area form |a · Jv| / ‖v‖³ (J the quarter
/// turn), space curves ‖v × a‖ / ‖v‖³; both are parameterization-invariant.
pub fn curvature_state(state: &KinematicState, floor: f64, t: f64) -> Result<f64> {
    let speed = state.v.norm();
    if speed < floor || speed == 0.0 {
        return Err(Error::ZeroVelocity { t });
    }
    let numerator = match state.v.dim() {
        2 => state.a.dot(&state.v.rot90()?)?.abs(),
        _ => state.v.cross(&state.a)?.norm(),
    };
    Ok(numerator / (speed * speed * speed))
}

fn segment_at(curve: &SplineCurve, p: f64) -> Result<(&CubicSegment, f64)> {
    let m = curve.domain_end();
    if !(0.0..=m).contains(&p) {
        return Err(Error::OutOfDomain { t: p, max: m });
    }
    // Pointwise quantities use the segment to the right of a knot (the last
    // segment owns t = m). Velocity and acceleration are continuous across
    // knots, so the choice never shows up in the values.
    let count = curve.segments().len();
    let i = if p >= m { count } else { p.floor() as usize + 1 };
    let seg = &curve.segments()[i - 1];
    Ok((seg, p - (i as f64 - 1.0)))
}

/// Curvature of the curve at global parameter `p`.
pub fn curvature_at(curve: &SplineCurve, p: f64) -> Result<f64> {
    let (seg, u) = segment_at(curve, p)?;
    curvature_state(&kinematics(seg, u), speed_floor(seg), p)
}

/// A right-handed orthonormal Frenet frame.
#[derive(Clone, Copy, Debug)]
pub struct Frame {
    pub tangent: Vector,
    pub normal: Vector,
    pub binormal: Vector,
}

/// The Frenet frame of a space curve at global parameter `t`.
///
/// Errors with [`Error::NotSpaceCurve`] for plane curves (their normal is a
/// quarter turn, not a frame), [`Error::ZeroVelocity`] where the
/// parameterization is stationary, and [`Error::ZeroCurvature`] where the
/// binormal direction `v × a` is numerically undefined.
pub fn frenet_frame(curve: &SplineCurve, t: f64) -> Result<Frame> {
    if curve.dim() != 3 {
        return Err(Error::NotSpaceCurve);
    }
    let (seg, u) = segment_at(curve, t)?;
    let state = kinematics(seg, u);
    let speed = state.v.norm();
    if speed < speed_floor(seg) || speed == 0.0 {
        return Err(Error::ZeroVelocity { t });
    }
    let c = state.v.cross(&state.a)?;
    let speed_bound = 3.0 * seg.scale();
    if c.norm() <= 1e-12 * speed_bound * speed_bound {
        return Err(Error::ZeroCurvature { t });
    }
    let tangent = state.v * (1.0 / speed);
    let binormal = c * (1.0 / c.norm());
    let normal = binormal.cross(&tangent)?;
    Ok(Frame {
        tangent,
        normal,
        binormal,
    })
}

/// The stationarity numerator(s) of the squared curvature on one segment,
/// expressed in the segment-local parameter `u ∈ [0, 1]`.
///
/// For space curves the single polynomial `q = (v·v)(c·c') − 3(c·c)(v·a)`
/// with `c = v × a`; for plane curves the product decomposition
/// `r = a · Jv` (the curvature numerator) and `w = (v·v)(j · Jv) − 3r(v·a)`,
/// whose combined roots are the stationary points.
///
/// The local basis is deliberate: re-expanding these polynomials in the
/// global parameter multiplies the coefficient magnitudes by powers of the
/// knot index, and the rounding noise of that expansion displaces roots by
/// amounts that grow with the index. In the local basis on `[0, 1]` the
/// coefficients stay at the scale of the segment data and root locations are
/// limited only by the conditioning of the segment itself.
#[derive(Clone, Debug)]
pub enum StationarityKind {
    Planar { r: Polynomial, w: Polynomial },
    Spatial { q: Polynomial },
}

/// Stationarity data for one segment: the polynomial(s), the segment's
/// parameter interval, and a degeneracy flag for segments where the squared
/// curvature is constant (the polynomials cancel to rounding residue).
#[derive(Clone, Debug)]
pub struct SegmentStationarity {
    segment: usize,
    kind: StationarityKind,
    degenerate: bool,
}

impl SegmentStationarity {
    /// 1-based segment index.
    pub fn segment(&self) -> usize {
        self.segment
    }

    /// Global parameter interval [k−1, k] covered by the segment.
    pub fn interval(&self) -> (f64, f64) {
        (self.segment as f64 - 1.0, self.segment as f64)
    }

    pub fn kind(&self) -> &StationarityKind {
        &self.kind
    }

    /// True when the assembled polynomial(s) are numerically zero relative to
    /// the magnitude of the terms they were assembled from, i.e. the squared
    /// curvature is constant on the segment and "stationary points" is not a
    /// meaningful finite set.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Interior stationary points of the squared curvature, strictly inside
    /// the segment interval, sorted ascending. Empty for degenerate segments.
    ///
    /// The search runs in the segment-local parameter (where the polynomials
    /// live) and the results are mapped to the global parameter.
    pub fn roots(&self, params: &RootParams) -> Result<Vec<f64>> {
        if self.degenerate {
            return Ok(Vec::new());
        }
        let (lo, _) = self.interval();
        let mut roots = match &self.kind {
            StationarityKind::Spatial { q } => find_roots_with(q, 0.0, 1.0, params)?.roots,
            StationarityKind::Planar { r, w } => {
                let mut all = find_roots_with(r, 0.0, 1.0, params)?.roots;
                all.extend(find_roots_with(w, 0.0, 1.0, params)?.roots);
                all
            }
        };
        for u in &mut roots {
            *u += lo;
        }
        roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
        roots.dedup_by(|next, kept| (*next - *kept).abs() <= params.dedup);
        Ok(roots)
    }
}

/// Ratio below which an assembled polynomial counts as cancelled: its largest
/// coefficient is at most this fraction of the largest coefficient of the
/// terms it was assembled from.
const CANCEL_REL: f64 = 1e-9;

fn coordinate_polys(seg: &CubicSegment) -> Vec<Polynomial> {
    let [a0, a1, a2, a3] = seg.monomial_coeffs();
    (0..seg.dim())
        .map(|i| Polynomial::new(vec![a0.get(i), a1.get(i), a2.get(i), a3.get(i)]))
        .collect()
}

fn poly_dot(a: &[Polynomial], b: &[Polynomial]) -> Polynomial {
    a.iter()
        .zip(b)
        .fold(Polynomial::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

fn poly_cross3(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    vec![
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

/// Builds the stationarity polynomial(s) of one segment in the segment-local
/// parameter (see [`StationarityKind`] for why the basis matters).
pub fn stationarity(seg: &CubicSegment) -> SegmentStationarity {
    let pos = coordinate_polys(seg);
    let v: Vec<Polynomial> = pos.iter().map(Polynomial::derivative).collect();
    let a: Vec<Polynomial> = v.iter().map(Polynomial::derivative).collect();
    let vv = poly_dot(&v, &v);
    let va = poly_dot(&v, &a);

    if seg.dim() == 2 {
        let u_perp = [v[1].scale(-1.0), v[0].clone()];
        let j: Vec<Polynomial> = a.iter().map(Polynomial::derivative).collect();
        let r_parts = [a[0].mul(&u_perp[0]), a[1].mul(&u_perp[1])];
        let r = r_parts[0].add(&r_parts[1]);
        let r_scale = r_parts[0].max_abs_coeff().max(r_parts[1].max_abs_coeff());

        let w_term1 = vv.mul(&poly_dot(&j, &u_perp));
        let w_term2 = r.mul(&va).scale(3.0);
        let w = w_term1.sub(&w_term2);
        let w_scale = w_term1.max_abs_coeff().max(w_term2.max_abs_coeff());

        let degenerate = r.max_abs_coeff() <= CANCEL_REL * r_scale
            || w.max_abs_coeff() <= CANCEL_REL * w_scale;
        SegmentStationarity {
            segment: seg.index(),
            kind: StationarityKind::Planar { r, w },
            degenerate,
        }
    } else {
        let c = poly_cross3(&v, &a);
        // Reference scale for the cross product before its internal
        // cancellation: if every coefficient of v × a sits at rounding level
        // relative to this, velocity and acceleration are numerically
        // parallel throughout and the segment is a straight line.
        let v_scale = v.iter().map(Polynomial::max_abs_coeff).fold(0.0, f64::max);
        let a_scale = a.iter().map(Polynomial::max_abs_coeff).fold(0.0, f64::max);
        let c_scale = v_scale * a_scale;
        let c_max = c.iter().map(Polynomial::max_abs_coeff).fold(0.0, f64::max);
        let cp: Vec<Polynomial> = c.iter().map(Polynomial::derivative).collect();
        let term1 = vv.mul(&poly_dot(&c, &cp));
        let term2 = poly_dot(&c, &c).mul(&va).scale(3.0);
        let build_scale = term1.max_abs_coeff().max(term2.max_abs_coeff());
        let naive = term1.sub(&term2);
        // The degree-8 and degree-9 coefficients of the expansion cancel
        // identically (the true degree is at most 7); what survives in them
        // is rounding residue, which is dropped rather than handed to the
        // root finder as a fake leading term.
        let coeffs: Vec<f64> = naive.coeffs().iter().copied().take(8).collect();
        let q = Polynomial::new(coeffs);
        let degenerate =
            c_max <= CANCEL_REL * c_scale || q.max_abs_coeff() <= CANCEL_REL * build_scale;
        SegmentStationarity {
            segment: seg.index(),
            kind: StationarityKind::Spatial { q },
            degenerate,
        }
    }
}

/// Curvature maximum of one segment's parameter interval.
#[derive(Clone, Debug)]
pub struct IntervalMax {
    /// 1-based segment index.
    pub index: usize,
    /// Largest curvature attained on the closed interval.
    pub max: f64,
    /// Parameters attaining it, within relative tie tolerance, sorted.
    pub locations: Vec<f64>,
}

/// Result of the global curvature-extremum search.
#[derive(Clone, Debug)]
pub struct CurvatureReport {
    /// Largest curvature over the whole curve (0 when `degenerate`).
    pub kappa_max: f64,
    /// Every parameter attaining the maximum, deduplicated and sorted
    /// (empty when `degenerate`).
    pub argmax: Vec<f64>,
    /// Per-segment maxima, one entry per segment in order.
    pub per_interval: Vec<IntervalMax>,
    /// True when every segment has constant squared curvature (for instance
    /// a straight polyline's spline); the maximum is reported as 0 and no
    /// argmax is singled out.
    pub degenerate: bool,
}

/// Relative tolerance for treating a candidate as tied with a maximum.
const TIE_REL: f64 = 1e-9;
/// Parameters closer than this are reported once (the smaller survives).
const LOCATION_DEDUP: f64 = 1e-9;

/// Global curvature maximum with default root-finder parameters.
pub fn max_curvature(curve: &SplineCurve) -> Result<CurvatureReport> {
    max_curvature_with(curve, &RootParams::default())
}

/// Global curvature maximum of the curve.
///
/// Per segment, the candidate parameters are both interval endpoints plus
/// every interior stationary point of the squared curvature; on degenerate
/// (constant-curvature) segments, the midpoint stands in for the interior.
/// Candidates where the parameterization is stationary (zero velocity) are
/// skipped. The interval maximum and the global maximum are exact maxima
/// over these candidate sets; ties are collected within a relative
/// tolerance of 1e-9 and deduplicated at spacing 1e-9.
pub fn max_curvature_with(curve: &SplineCurve, params: &RootParams) -> Result<CurvatureReport> {
    let mut per_interval = Vec::with_capacity(curve.segments().len());
    let mut evaluated: Vec<(f64, f64)> = Vec::new();
    let mut all_degenerate = true;

    for seg in curve.segments() {
        let st = stationarity(seg);
        let (lo, hi) = st.interval();
        let mut candidates = vec![lo];
        if st.is_degenerate() {
            candidates.push(lo + 0.5);
        } else {
            all_degenerate = false;
            candidates.extend(st.roots(params)?);
        }
        candidates.push(hi);

        let floor = speed_floor(seg);
        let mut values = Vec::with_capacity(candidates.len());
        for &t in &candidates {
            match curvature_state(&kinematics(seg, t - lo), floor, t) {
                Ok(kappa) => values.push((t, kappa)),
                Err(Error::ZeroVelocity { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        let seg_max = values.iter().fold(0.0f64, |m, &(_, k)| m.max(k));
        let locations = tied_locations(&values, seg_max);
        evaluated.extend(values);
        per_interval.push(IntervalMax {
            index: seg.index(),
            max: seg_max,
            locations,
        });
    }

    if all_degenerate {
        return Ok(CurvatureReport {
            kappa_max: 0.0,
            argmax: Vec::new(),
            per_interval,
            degenerate: true,
        });
    }

    let kappa_max = per_interval.iter().fold(0.0f64, |m, i| m.max(i.max));
    let argmax = tied_locations(&evaluated, kappa_max);
    Ok(CurvatureReport {
        kappa_max,
        argmax,
        per_interval,
        degenerate: false,
    })
}

fn tied_locations(values: &[(f64, f64)], max: f64) -> Vec<f64> {
    let threshold = max * (1.0 - TIE_REL);
    let mut locations: Vec<f64> = values
        .iter()
        .filter(|&&(_, k)| k >= threshold)
        .map(|&(t, _)| t)
        .collect();
    locations.sort_by(|x, y| x.partial_cmp(y).unwrap());
    locations.dedup_by(|next, kept| (*next - *kept).abs() <= LOCATION_DEDUP);
    locations
}
