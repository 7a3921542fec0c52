//! Interpolating C² cubic spline curves through ordered 2D/3D point sets,
//! with an exact (root-isolation based, not sampled) search for the curvature
//! maximum.
//!
//! The pipeline: a [`PointSet`] is solved into a [`ControlPolygon`] by
//! closed-form formulas (relaxed or periodic boundary), assembled into a
//! piecewise-Bézier [`SplineCurve`], and interrogated pointwise
//! ([`curvature_at`], [`frenet_frame`]) or globally ([`max_curvature`], which
//! reduces the extremum search to polynomial root isolation per segment).
//! The [`oracle`] module carries independent reference implementations used
//! to cross-check every stage, and [`dataset`] a small JSON/CSV format for
//! named point sets.

pub mod curvature;
pub mod dataset;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod spline;

pub use curvature::{
    curvature_at, frenet_frame, kinematics, max_curvature, max_curvature_with, speed_floor,
    stationarity, CurvatureReport, Frame, IntervalMax, KinematicState, SegmentStationarity,
    StationarityKind,
};
pub use dataset::{generator_point, generator_points, Dataset, GeneratorSpec};
pub use error::{Error, Result};
pub use geometry::{find_roots, find_roots_with, Polynomial, RootParams, Roots, Vector};
pub use spline::{
    bezier_eval, beta, build_spline, fit, solve_periodic, solve_relaxed, ControlPolygon,
    CubicSegment, PointSet, SplineCurve, SplineKind,
};
