//! Loci of points with constant sums of distances to a set of lines.
//!
//! Given a convex polygon, the sum of distances from an interior point to
//! the side lines is a linear function of the point, so its level sets are
//! parallel chords of the polygon (a single constant for equilateral
//! triangles and other "isoperimetric" polygons). The sum of *squared*
//! distances is a positive-definite quadratic, so its level sets are
//! concentric homothetic ellipses — circles exactly for equilateral
//! triangles — and every canonical ellipse arises this way from an
//! isosceles triangle.
//!
//! The crate is organised around those two questions:
//!
//! - [`geometry`] — points, oriented unit-normalized lines, triangles,
//!   convex polygons, line clipping, triangle classification.
//! - [`linear`] — the distance sum function, its level-set loci inside a
//!   polygon, the attainable range, and constancy tests.
//! - [`quadratic`] — the squared-distance quadratic form for any finite
//!   line set, conic classification, ellipse extraction, minimal sums.
//! - [`inverse`] — from a canonical ellipse back to an isosceles triangle
//!   and constant realizing it as a squared-distance locus.
//! - [`oracle`] — brute-force grid search backends used for independent
//!   verification.

pub mod error;
pub mod geometry;
pub mod inverse;
pub mod linear;
pub mod oracle;
pub mod quadratic;
pub mod tolerances;

pub use error::Error;
pub use geometry::{ConvexPolygon, LineClip, OrientedLine, Point, Triangle, TriangleClass, TriangleShape};
pub use inverse::{canonical_rhs, triangle_from_ellipse, InverseParams, InverseResult};
pub use linear::{
    distance_sum_form, is_viviani, k_range, level_direction, sum_locus, three_point_test,
    LevelDirection, LinearForm, SumLocus,
};
pub use oracle::{grid_level_points, grid_min, GridSpec};
pub use quadratic::{
    classify_squared_locus, ellipse_geometry, is_circle_locus, min_squared_sum, squared_sum_form,
    DegenerateKind, EllipseGeometry, MinSquaredSum, Minimizer, QuadraticForm, SquaredLocus,
};
