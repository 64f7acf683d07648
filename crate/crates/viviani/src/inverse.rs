//! From a canonical ellipse back to a triangle.
//!
//! Every origin-centered, axis-aligned ellipse `x²/α² + y²/β² = 1` with
//! `α ≥ β > 0` is the squared-distance level set of an isosceles triangle.
//! Choosing `a` and `b` with `β² = 2a²` and `α² = a² + 3b²` makes the
//! level set of the apex-up triangle `(0,a), (−b,0), (b,0)` an axis-aligned
//! ellipse centered at `(0, l)` with exactly those semi-axes for the right
//! constant; translating the triangle down by `l = 2ab²/(a²+3b²)` recenters
//! the ellipse at the origin.

use crate::error::Error;
use crate::geometry::{Point, Triangle};

/// Construction parameters: apex height `a`, half-base `b`, and the
/// recentering shift `l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseParams {
    pub a: f64,
    pub b: f64,
    pub l: f64,
}

/// An isosceles triangle and constant whose squared-distance level set is
/// the requested canonical ellipse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseResult {
    pub triangle: Triangle,
    pub k: f64,
    pub params: InverseParams,
}

/// Right-hand side of the recentered level-set equation for the triangle
/// `(0,a), (−b,0), (b,0)`:
///
/// `((a²+b²)k − 2a²b²) / (2a²(a²+3b²)) + 2b⁴/(a²+3b²)²`
///
/// Value 1 means the level set is the canonical ellipse with
/// `α² = a²+3b²`, `β² = 2a²`; value 0 means the level set has shrunk to
/// the minimizing point.
pub fn canonical_rhs(a: f64, b: f64, k: f64) -> f64 {
    let a2 = a * a;
    let b2 = b * b;
    let denom = a2 + 3.0 * b2;
    ((a2 + b2) * k - 2.0 * a2 * b2) / (2.0 * a2 * denom) + 2.0 * b2 * b2 / (denom * denom)
}

/// Constant making the recentered level set exactly canonical:
/// `k = 2a²(a⁴ + 7a²b² + 10b⁴) / ((a²+b²)(a²+3b²))`.
fn level_constant(a: f64, b: f64) -> f64 {
    let a2 = a * a;
    let b2 = b * b;
    2.0 * a2 * (a2 * a2 + 7.0 * a2 * b2 + 10.0 * b2 * b2) / ((a2 + b2) * (a2 + 3.0 * b2))
}

/// Builds the isosceles triangle and constant whose squared-distance level
/// set is the ellipse `x²/alpha² + y²/beta² = 1`.
///
/// Of the two mirror-image triangles realizing the ellipse, the one with
/// the apex up is returned.
pub fn triangle_from_ellipse(alpha: f64, beta: f64) -> Result<InverseResult, Error> {
    if !(alpha.is_finite() && beta.is_finite()) || beta <= 0.0 || beta > alpha {
        return Err(Error::InvalidAxes { alpha, beta });
    }
    let a = (beta * beta / 2.0).sqrt();
    let b = ((alpha * alpha - beta * beta / 2.0) / 3.0).sqrt();
    let l = 2.0 * a * b * b / (a * a + 3.0 * b * b);
    let k = level_constant(a, b);
    let triangle = Triangle::new(
        Point::new(0.0, a - l),
        Point::new(-b, -l),
        Point::new(b, -l),
    )
    .expect("positive a and b give a non-degenerate triangle");
    Ok(InverseResult {
        triangle,
        k,
        params: InverseParams { a, b, l },
    })
}
