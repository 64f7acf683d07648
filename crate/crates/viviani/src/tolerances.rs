//! Numerical tolerances used across the crate.
//!
//! Geometric thresholds scale with the instance (bounding-box diagonal of
//! the polygon or point set at hand); quantities built from unit normals
//! are dimensionless and use absolute thresholds.

/// Relative geometric tolerance, multiplied by the instance scale
/// (bounding-box diagonal). Governs boundary membership, chord-vs-vertex
/// decisions, and repeated-vertex rejection.
pub const REL_GEOM: f64 = 1e-9;

/// Area degeneracy factor: a triangle (or convexity cross product) is
/// rejected when twice its signed area is not above
/// `REL_AREA * diagonal²`.
pub const REL_AREA: f64 = 1e-9;

/// Degeneracy threshold for line construction and normalization checks,
/// multiplied by the coordinate scale of the defining points.
pub const LINE_EPS: f64 = 1e-12;

/// Vanishing-gradient threshold for the distance sum function. The
/// gradient is a sum of unit normals, hence dimensionless; the test is
/// absolute.
pub const GRAD_EPS: f64 = 1e-9;

/// Classification band around the minimal squared sum, multiplied by
/// `max(1, k_min)`: below is empty, inside degenerates to the minimizer,
/// above is an ellipse.
pub const LEVEL_REL: f64 = 1e-9;

/// Eigenvalue tie threshold, relative to the trace: at or below it the
/// level set counts as a circle and its rotation is reported as 0.
pub const EIGEN_TIE_REL: f64 = 1e-9;

/// Relative tolerance for triangle side and angle comparisons
/// (equilateral / isosceles / right-angle tests).
pub const REL_CLASSIFY: f64 = 1e-9;
