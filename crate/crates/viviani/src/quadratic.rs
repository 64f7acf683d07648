//! The squared-distance quadratic form of a finite line set and its
//! level-set conics.
//!
//! For unit-normalized lines the sum of squared signed evaluations is
//! `Q(x,y) = A·x² + B·x·y + C·y² + D·x + E·y + F₀` with `A + C` equal to
//! the number of lines. When the lines are not all parallel the quadratic
//! part is positive definite, so every level set `Q = k` above the minimum
//! is an ellipse centered at the unique minimizer; the level sets for
//! different `k` are homothetic about that center. All-parallel pencils
//! degenerate to a rank-1 form whose minimizers fill a line.

use crate::error::Error;
use crate::geometry::{OrientedLine, Point, Triangle};
use crate::tolerances::{EIGEN_TIE_REL, GRAD_EPS, LEVEL_REL};

/// `Q(x,y) = a·x² + b·x·y + c·y² + d·x + e·y + f0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticForm {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f0: f64,
}

impl QuadraticForm {
    pub fn eval(&self, p: Point) -> f64 {
        self.a * p.x * p.x
            + self.b * p.x * p.y
            + self.c * p.y * p.y
            + self.d * p.x
            + self.e * p.y
            + self.f0
    }

    /// Conic discriminant `b² − 4ac`; negative exactly for ellipses.
    pub fn discriminant(&self) -> f64 {
        self.b * self.b - 4.0 * self.a * self.c
    }
}

/// Minimizing set of the squared-distance sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Minimizer {
    /// Positive-definite case: a single stationary point.
    UniquePoint(Point),
    /// All lines parallel: the minimum is attained along a whole line.
    LineOfMinima(OrientedLine),
}

/// Minimal squared-distance sum together with where it is attained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinSquaredSum {
    pub k_min: f64,
    pub argmin: Minimizer,
}

/// Extracted geometry of an elliptical level set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseGeometry {
    pub center: Point,
    /// Semi-major axis; `semi_major >= semi_minor > 0`.
    pub semi_major: f64,
    pub semi_minor: f64,
    /// Angle of the major axis from the x-axis, in `[0, π)`;
    /// 0 by convention for circles.
    pub rotation: f64,
}

/// Kind of a non-elliptic level set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegenerateKind {
    /// All lines parallel; the level sets are unions of parallel lines.
    ParallelPencil,
    /// Anything else the classification cannot resolve.
    Other,
}

/// The level set `{P : Q(P) = k}` of a line set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SquaredLocus {
    Empty,
    DegeneratePoint(Point),
    Ellipse(EllipseGeometry),
    DegenerateNonElliptic(DegenerateKind),
}

/// Sum of squared signed evaluations over the line set.
pub fn squared_sum_form(lines: &[OrientedLine]) -> Result<QuadraticForm, Error> {
    if lines.is_empty() {
        return Err(Error::EmptyLineSet);
    }
    let mut q = QuadraticForm {
        a: 0.0,
        b: 0.0,
        c: 0.0,
        d: 0.0,
        e: 0.0,
        f0: 0.0,
    };
    for line in lines {
        let (a, b, c) = (line.a(), line.b(), line.c());
        q.a += a * a;
        q.b += 2.0 * a * b;
        q.c += b * b;
        q.d += 2.0 * a * c;
        q.e += 2.0 * b * c;
        q.f0 += c * c;
    }
    Ok(q)
}

/// Whether every line of the set is parallel to the first, within the
/// dimensionless cross-product tolerance.
fn all_parallel(lines: &[OrientedLine]) -> bool {
    let first = lines[0].normal();
    lines[1..]
        .iter()
        .all(|l| first.cross(l.normal()).abs() <= GRAD_EPS)
}

/// Minimizes `Q` over the plane.
///
/// Non-parallel sets have a positive-definite quadratic part and a unique
/// stationary point; all-parallel pencils are minimized along a line
/// parallel to the pencil. A single line yields its own zero set with
/// `k_min = 0`.
pub fn min_squared_sum(lines: &[OrientedLine]) -> Result<MinSquaredSum, Error> {
    let q = squared_sum_form(lines)?;
    if all_parallel(lines) {
        // Project on the common normal: Q = Σ (u + σᵢcᵢ)² with u = n·p.
        let normal = lines[0].normal();
        let n = lines.len() as f64;
        let mut sum_signed_c = 0.0;
        let mut sum_c2 = 0.0;
        for line in lines {
            let sigma = if line.normal().dot(normal) >= 0.0 { 1.0 } else { -1.0 };
            sum_signed_c += sigma * line.c();
            sum_c2 += line.c() * line.c();
        }
        let u_star = -sum_signed_c / n;
        let k_min = (sum_c2 - sum_signed_c * sum_signed_c / n).max(0.0);
        let line = OrientedLine::from_coefficients(normal.x, normal.y, -u_star)
            .expect("unit normal is non-degenerate");
        return Ok(MinSquaredSum {
            k_min,
            argmin: Minimizer::LineOfMinima(line),
        });
    }

    // Stationarity: [2a b; b 2c]·(x,y) = (−d,−e). The determinant is
    // 4ac − b² = −discriminant > 0 for non-parallel sets.
    let det = 4.0 * q.a * q.c - q.b * q.b;
    if det <= 0.0 {
        // Numerically unreachable for unit-normalized, non-parallel lines.
        let line = lines[0];
        return Ok(MinSquaredSum {
            k_min: q.eval(line.anchor()).max(0.0),
            argmin: Minimizer::LineOfMinima(line),
        });
    }
    let x = (-q.d * 2.0 * q.c - (-q.e) * q.b) / det;
    let y = (2.0 * q.a * (-q.e) - q.b * (-q.d)) / det;
    let argmin = Point::new(x, y);
    Ok(MinSquaredSum {
        k_min: q.eval(argmin).max(0.0),
        argmin: Minimizer::UniquePoint(argmin),
    })
}

/// Eigen-decomposition of the symmetric matrix `[[m11, m12], [m12, m22]]`,
/// returned as `((λ_lo, v_lo), (λ_hi, v_hi))` with unit eigenvectors.
fn sym_eigen_2x2(m11: f64, m12: f64, m22: f64) -> ((f64, Point), (f64, Point)) {
    let half_trace = 0.5 * (m11 + m22);
    let radius = (0.25 * (m11 - m22) * (m11 - m22) + m12 * m12).sqrt();
    let lo = half_trace - radius;
    let hi = half_trace + radius;

    let eigenvector = |lambda: f64, other: Point| -> Point {
        let cand1 = Point::new(m12, lambda - m11);
        let cand2 = Point::new(lambda - m22, m12);
        let v = if cand1.norm() >= cand2.norm() { cand1 } else { cand2 };
        let n = v.norm();
        if n > 0.0 {
            v * (1.0 / n)
        } else {
            other
        }
    };
    let v_lo = eigenvector(lo, Point::new(1.0, 0.0));
    let v_hi = eigenvector(hi, Point::new(-v_lo.y, v_lo.x));
    ((lo, v_lo), (hi, v_hi))
}

fn rotation_in_half_turn(v: Point) -> f64 {
    let mut angle = v.y.atan2(v.x);
    if angle < 0.0 {
        angle += std::f64::consts::PI;
    }
    if angle >= std::f64::consts::PI {
        angle -= std::f64::consts::PI;
    }
    angle
}

fn extract_ellipse(q: &QuadraticForm, center: Point, excess: f64) -> EllipseGeometry {
    let ((lambda_lo, v_lo), (lambda_hi, _)) = sym_eigen_2x2(q.a, 0.5 * q.b, q.c);
    // smaller eigenvalue → longer semi-axis
    let semi_major = (excess / lambda_lo).sqrt();
    let semi_minor = (excess / lambda_hi).sqrt();
    let rotation = if lambda_hi - lambda_lo <= EIGEN_TIE_REL * (lambda_hi + lambda_lo) {
        0.0
    } else {
        rotation_in_half_turn(v_lo)
    };
    EllipseGeometry {
        center,
        semi_major,
        semi_minor,
        rotation,
    }
}

/// Classifies the level set `Q = k` relative to the minimal sum.
/// Non-finite `k` yields `Empty`.
pub fn classify_squared_locus(lines: &[OrientedLine], k: f64) -> Result<SquaredLocus, Error> {
    let q = squared_sum_form(lines)?;
    if !k.is_finite() {
        return Ok(SquaredLocus::Empty);
    }
    let min = min_squared_sum(lines)?;
    let excess = k - min.k_min;
    let band = LEVEL_REL * min.k_min.max(1.0);
    if excess < -band {
        return Ok(SquaredLocus::Empty);
    }
    match min.argmin {
        Minimizer::LineOfMinima(_) => {
            Ok(SquaredLocus::DegenerateNonElliptic(DegenerateKind::ParallelPencil))
        }
        Minimizer::UniquePoint(center) => {
            if excess.abs() <= band {
                Ok(SquaredLocus::DegeneratePoint(center))
            } else if q.discriminant() < 0.0 {
                Ok(SquaredLocus::Ellipse(extract_ellipse(&q, center, excess)))
            } else {
                Ok(SquaredLocus::DegenerateNonElliptic(DegenerateKind::Other))
            }
        }
    }
}

/// Center, semi-axes, and rotation of the elliptical level set `Q = k`.
pub fn ellipse_geometry(lines: &[OrientedLine], k: f64) -> Result<EllipseGeometry, Error> {
    match classify_squared_locus(lines, k)? {
        SquaredLocus::Ellipse(geometry) => Ok(geometry),
        _ => Err(Error::NotAnEllipse),
    }
}

/// Whether the squared-distance level sets of the triangle are circles:
/// the quadratic part must be a multiple of the identity. Holds exactly
/// for equilateral triangles.
pub fn is_circle_locus(triangle: &Triangle) -> bool {
    let q = squared_sum_form(&triangle.sides()).expect("triangle has three sides");
    let trace = q.a + q.c;
    (q.a - q.c).abs() <= EIGEN_TIE_REL * trace && q.b.abs() <= EIGEN_TIE_REL * trace
}
