//! Shared generators and independent oracles for the test suites.
//!
//! Distances here are computed straight from vertex pairs, never through
//! `OrientedLine` coefficients, so they can serve as an independent route
//! against the library's analytic forms.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use viviani::{ConvexPolygon, Point, Triangle};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pt(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

/// Random non-sliver triangle with vertices in `[-10, 10]²`.
pub fn random_triangle(rng: &mut impl Rng) -> Triangle {
    loop {
        let v: Vec<Point> = (0..3)
            .map(|_| pt(rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0)))
            .collect();
        let twice_area = (v[1] - v[0]).cross(v[2] - v[0]).abs();
        let diag = bbox_diagonal(&v);
        if twice_area > 0.05 * diag * diag {
            if let Ok(t) = Triangle::new(v[0], v[1], v[2]) {
                return t;
            }
        }
    }
}

/// Random strictly convex polygon: jittered angles on a random ellipse.
pub fn random_convex_polygon(rng: &mut impl Rng) -> ConvexPolygon {
    let n = rng.random_range(3..=8usize);
    let center = pt(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
    let rx = rng.random_range(0.5..4.0);
    let ry = rng.random_range(0.5..4.0);
    let tau = std::f64::consts::TAU;
    let vertices: Vec<Point> = (0..n)
        .map(|i| {
            let jitter: f64 = rng.random_range(0.0..0.6);
            let angle = tau * (i as f64 + jitter) / n as f64;
            pt(center.x + rx * angle.cos(), center.y + ry * angle.sin())
        })
        .collect();
    ConvexPolygon::new(vertices).expect("points on an ellipse are strictly convex")
}

/// Random rotation angle and translation.
pub fn random_motion(rng: &mut impl Rng) -> (f64, Point) {
    (
        rng.random_range(0.0..std::f64::consts::TAU),
        pt(rng.random_range(-20.0..20.0), rng.random_range(-20.0..20.0)),
    )
}

pub fn apply_motion(p: Point, angle: f64, translation: Point) -> Point {
    let (sin, cos) = angle.sin_cos();
    pt(
        p.x * cos - p.y * sin + translation.x,
        p.x * sin + p.y * cos + translation.y,
    )
}

/// Equilateral triangle of the given side under a rigid motion.
pub fn moved_equilateral(side: f64, angle: f64, translation: Point) -> Triangle {
    let base = [
        pt(0.0, 0.0),
        pt(side, 0.0),
        pt(side / 2.0, side * 3f64.sqrt() / 2.0),
    ];
    Triangle::new(
        apply_motion(base[0], angle, translation),
        apply_motion(base[1], angle, translation),
        apply_motion(base[2], angle, translation),
    )
    .expect("rigid motion preserves non-degeneracy")
}

/// Random point strictly inside a convex polygon: a convex combination
/// with weights bounded away from zero.
pub fn interior_point(poly: &ConvexPolygon, rng: &mut impl Rng) -> Point {
    let vertices = poly.vertices();
    let weights: Vec<f64> = vertices
        .iter()
        .map(|_| rng.random_range(0.05..1.0))
        .collect();
    let total: f64 = weights.iter().sum();
    let mut p = pt(0.0, 0.0);
    for (v, w) in vertices.iter().zip(&weights) {
        p = p + *v * (w / total);
    }
    p
}

pub fn bbox_diagonal(points: &[Point]) -> f64 {
    let mut min = points[0];
    let mut max = points[0];
    for p in points {
        min.x = min.x.min(p.x);
        min.y = min.y.min(p.y);
        max.x = max.x.max(p.x);
        max.y = max.y.max(p.y);
    }
    (max - min).norm()
}

/// Distance from `x` to the infinite line through `p` and `q`, computed
/// from the vertex pair alone.
pub fn distance_to_line_through(p: Point, q: Point, x: Point) -> f64 {
    (q - p).cross(x - p).abs() / (q - p).norm()
}

/// Sum of distances from `x` to the side lines of a polygon, by the
/// vertex-pair route.
pub fn distance_sum_direct(poly: &ConvexPolygon, x: Point) -> f64 {
    let vertices = poly.vertices();
    let n = vertices.len();
    (0..n)
        .map(|i| distance_to_line_through(vertices[i], vertices[(i + 1) % n], x))
        .sum()
}

/// Sum of squared distances from `x` to the side lines of a triangle, by
/// the vertex-pair route.
pub fn squared_sum_direct(triangle: &Triangle, x: Point) -> f64 {
    let [v0, v1, v2] = triangle.vertices();
    [(v0, v1), (v1, v2), (v2, v0)]
        .iter()
        .map(|&(p, q)| distance_to_line_through(p, q, x).powi(2))
        .sum()
}

/// Distance from a point to a segment.
pub fn distance_to_segment(a: Point, b: Point, x: Point) -> f64 {
    let ab = b - a;
    let t = ((x - a).dot(ab) / ab.dot(ab)).clamp(0.0, 1.0);
    (x - (a + ab * t)).norm()
}

/// Distance from a point to an ellipse boundary, by dense parameter
/// sampling.
pub fn distance_to_ellipse(geometry: &viviani::EllipseGeometry, x: Point, samples: usize) -> f64 {
    let (sin, cos) = geometry.rotation.sin_cos();
    let mut best = f64::INFINITY;
    for i in 0..samples {
        let t = std::f64::consts::TAU * (i as f64) / (samples as f64);
        let local = pt(geometry.semi_major * t.cos(), geometry.semi_minor * t.sin());
        let world = pt(
            geometry.center.x + local.x * cos - local.y * sin,
            geometry.center.y + local.x * sin + local.y * cos,
        );
        best = best.min(world.distance(x));
    }
    best
}
