//! Planar primitives: points, oriented normalized lines, triangles,
//! convex polygons, line clipping, and triangle classification.
//!
//! Lines are stored as `a·x + b·y + c = 0` with `a² + b² = 1`, so the
//! signed evaluation at a point is its signed distance to the line. Side
//! lines of a polygon are oriented positive toward the centroid; with that
//! convention the distance sum over the interior is a plain sum of signed
//! evaluations.

use crate::error::Error;
use crate::tolerances::{LINE_EPS, REL_AREA, REL_CLASSIFY, REL_GEOM};
use std::ops::{Add, Mul, Neg, Sub};

/// A point in the plane, also used as a 2-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product, treating both points as vectors.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Coordinate scale of a point set: the diagonal of its bounding box,
/// floored at 1 so that tolerances stay meaningful near the origin.
fn coordinate_scale(points: &[Point]) -> f64 {
    let mut max_abs: f64 = 1.0;
    for p in points {
        max_abs = max_abs.max(p.x.abs()).max(p.y.abs());
    }
    max_abs
}

/// Bounding-box diagonal of a point set.
fn bbox_diagonal(points: &[Point]) -> f64 {
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

/// A line `a·x + b·y + c = 0`, normalized to `a² + b² = 1`, with the sign
/// of the triple fixing which half-plane evaluates positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedLine {
    a: f64,
    b: f64,
    c: f64,
}

impl OrientedLine {
    /// Line through `p` and `q`, oriented so that `positive_toward`
    /// evaluates positive.
    pub fn through(p: Point, q: Point, positive_toward: Point) -> Result<Self, Error> {
        let line = Self::through_pair(p, q)?;
        let scale = coordinate_scale(&[p, q, positive_toward]);
        let side = line.signed_eval(positive_toward);
        if side.abs() <= LINE_EPS * scale {
            return Err(Error::AmbiguousOrientation);
        }
        Ok(if side < 0.0 { line.flipped() } else { line })
    }

    /// Line through `p` and `q`, with the left side of the travel
    /// direction `p → q` evaluating positive.
    pub fn through_pair(p: Point, q: Point) -> Result<Self, Error> {
        let dir = q - p;
        let len = dir.norm();
        if len <= LINE_EPS * coordinate_scale(&[p, q]) {
            return Err(Error::DegenerateLine);
        }
        let a = -dir.y / len;
        let b = dir.x / len;
        let c = -(a * p.x + b * p.y);
        Ok(Self { a, b, c })
    }

    /// Normalize raw coefficients of `a·x + b·y + c = 0`, keeping their sign.
    pub fn from_coefficients(a: f64, b: f64, c: f64) -> Result<Self, Error> {
        let n = a.hypot(b);
        if !n.is_finite() || n <= LINE_EPS {
            return Err(Error::DegenerateLine);
        }
        Ok(Self {
            a: a / n,
            b: b / n,
            c: c / n,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Unit normal pointing into the positive half-plane.
    pub fn normal(&self) -> Point {
        Point::new(self.a, self.b)
    }

    /// Unit vector along the line.
    pub fn direction(&self) -> Point {
        Point::new(-self.b, self.a)
    }

    /// Signed evaluation `a·x + b·y + c`; its absolute value is the
    /// Euclidean distance from `p` to the line.
    pub fn signed_eval(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    /// Same line with the positive side swapped.
    pub fn flipped(&self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
            c: -self.c,
        }
    }

    /// Foot of the perpendicular from the origin; a convenient anchor
    /// point on the line.
    pub fn anchor(&self) -> Point {
        Point::new(-self.c * self.a, -self.c * self.b)
    }

    /// Rigid motion: rotate by `angle` about the origin, then translate.
    pub fn transformed(&self, angle: f64, translation: Point) -> Self {
        let (sin, cos) = angle.sin_cos();
        let a = self.a * cos - self.b * sin;
        let b = self.a * sin + self.b * cos;
        // eval of a moved point must match the original eval
        let c = self.c - (a * translation.x + b * translation.y);
        Self { a, b, c }
    }
}

/// Result of intersecting a line with a closed convex polygon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LineClip {
    Empty,
    PointHit(Point),
    Segment(Point, Point),
}

/// Triangle shape by side-length comparison. Equilateral wins ties: an
/// equilateral triangle is not separately reported as isosceles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleShape {
    Equilateral,
    Isosceles,
    Scalene,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleClass {
    pub shape: TriangleShape,
    pub right_angled: bool,
}

/// A non-degenerate triangle, stored counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    vertices: [Point; 3],
}

impl Triangle {
    /// Builds a triangle, reordering to counterclockwise if needed.
    /// Rejects slivers whose doubled area is at most
    /// `REL_AREA × (bounding-box diagonal)²`.
    pub fn new(v0: Point, v1: Point, v2: Point) -> Result<Self, Error> {
        if !(v0.is_finite() && v1.is_finite() && v2.is_finite()) {
            return Err(Error::DegenerateTriangle);
        }
        let mut vertices = [v0, v1, v2];
        let twice_area = (v1 - v0).cross(v2 - v0);
        if twice_area < 0.0 {
            vertices.swap(1, 2);
        }
        let diag = bbox_diagonal(&vertices);
        let twice_area = (vertices[1] - vertices[0]).cross(vertices[2] - vertices[0]);
        if twice_area <= REL_AREA * diag * diag {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.vertices
    }

    pub fn area(&self) -> f64 {
        0.5 * (self.vertices[1] - self.vertices[0]).cross(self.vertices[2] - self.vertices[0])
    }

    pub fn centroid(&self) -> Point {
        (self.vertices[0] + self.vertices[1] + self.vertices[2]) * (1.0 / 3.0)
    }

    /// The same triangle as a convex polygon.
    pub fn polygon(&self) -> ConvexPolygon {
        ConvexPolygon::new(self.vertices.to_vec()).expect("a valid triangle is a convex polygon")
    }

    /// Side lines oriented positive toward the interior, one per edge
    /// `v_i → v_{i+1}`.
    pub fn sides(&self) -> [OrientedLine; 3] {
        let sides = self.polygon().sides();
        [sides[0], sides[1], sides[2]]
    }

    /// Side lengths indexed by the opposite vertex.
    pub fn side_lengths(&self) -> [f64; 3] {
        let [v0, v1, v2] = self.vertices;
        [v1.distance(v2), v2.distance(v0), v0.distance(v1)]
    }

    /// Altitude from each vertex onto the opposite side.
    pub fn altitudes(&self) -> [f64; 3] {
        let twice_area = 2.0 * self.area();
        let sides = self.side_lengths();
        [
            twice_area / sides[0],
            twice_area / sides[1],
            twice_area / sides[2],
        ]
    }

    /// Side-length classification plus a right-angle flag, with relative
    /// tolerance `REL_CLASSIFY`.
    pub fn classify(&self) -> TriangleClass {
        let sides = self.side_lengths();
        let close = |p: f64, q: f64| (p - q).abs() <= REL_CLASSIFY * p.max(q);
        let eq01 = close(sides[0], sides[1]);
        let eq12 = close(sides[1], sides[2]);
        let eq20 = close(sides[2], sides[0]);
        let shape = if eq01 && eq12 && eq20 {
            TriangleShape::Equilateral
        } else if eq01 || eq12 || eq20 {
            TriangleShape::Isosceles
        } else {
            TriangleShape::Scalene
        };

        let [v0, v1, v2] = self.vertices;
        let mut right_angled = false;
        for (apex, p, q) in [(v0, v1, v2), (v1, v2, v0), (v2, v0, v1)] {
            let e1 = p - apex;
            let e2 = q - apex;
            if e1.dot(e2).abs() <= REL_CLASSIFY * e1.norm() * e2.norm() {
                right_angled = true;
            }
        }
        TriangleClass { shape, right_angled }
    }
}

/// A strictly convex polygon, stored counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Builds a polygon from at least three vertices, reversing clockwise
    /// input. Rejects repeated vertices and any non-strictly-convex corner
    /// (collinear runs included).
    pub fn new(mut vertices: Vec<Point>) -> Result<Self, Error> {
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices {
                got: vertices.len(),
            });
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::NotStrictlyConvex { index: 0 });
        }
        let diag = bbox_diagonal(&vertices);

        // Shoelace; negative means clockwise input.
        let n = vertices.len();
        let mut twice_area = 0.0;
        for i in 0..n {
            twice_area += vertices[i].cross(vertices[(i + 1) % n]);
        }
        if twice_area < 0.0 {
            vertices.reverse();
        }

        for i in 0..n {
            let p = vertices[i];
            let q = vertices[(i + 1) % n];
            if p.distance(q) <= REL_GEOM * diag {
                return Err(Error::RepeatedVertex { index: i });
            }
        }
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            let cross = (cur - prev).cross(next - cur);
            if cross <= REL_AREA * diag * diag {
                return Err(Error::NotStrictlyConvex { index: i });
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex average; interior because the polygon is convex.
    pub fn centroid(&self) -> Point {
        let mut sum = Point::default();
        for p in &self.vertices {
            sum = sum + *p;
        }
        sum * (1.0 / self.vertices.len() as f64)
    }

    /// Bounding-box diagonal; the instance scale for tolerances.
    pub fn diameter(&self) -> f64 {
        bbox_diagonal(&self.vertices)
    }

    /// Side lines oriented positive toward the centroid, in edge order.
    pub fn sides(&self) -> Vec<OrientedLine> {
        let centroid = self.centroid();
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let p = self.vertices[i];
                let q = self.vertices[(i + 1) % n];
                OrientedLine::through(p, q, centroid)
                    .expect("valid polygon edges define valid side lines")
            })
            .collect()
    }

    /// Closed membership test with boundary slack `REL_GEOM × diameter`.
    pub fn contains(&self, p: Point) -> bool {
        let slack = REL_GEOM * self.diameter();
        self.sides().iter().all(|s| s.signed_eval(p) >= -slack)
    }

    /// Strict interior test: every side evaluation positive.
    pub fn strictly_contains(&self, p: Point) -> bool {
        self.sides().iter().all(|s| s.signed_eval(p) > 0.0)
    }

    /// Intersects the zero-set of `line` with the closed polygon.
    ///
    /// Chords no longer than `REL_GEOM × diameter` collapse to a
    /// `PointHit`; segments are returned with endpoints in lexicographic
    /// order.
    pub fn clip_line(&self, line: &OrientedLine) -> LineClip {
        let anchor = line.anchor();
        let dir = line.direction();
        let tol = REL_GEOM * self.diameter();

        let mut t_lo = f64::NEG_INFINITY;
        let mut t_hi = f64::INFINITY;
        for side in self.sides() {
            // side.signed_eval(anchor + t·dir) = value + t·slope >= 0
            let value = side.signed_eval(anchor);
            let slope = side.normal().dot(dir);
            if slope.abs() <= LINE_EPS {
                if value < -tol {
                    return LineClip::Empty;
                }
                continue;
            }
            let t = -value / slope;
            if slope > 0.0 {
                t_lo = t_lo.max(t);
            } else {
                t_hi = t_hi.min(t);
            }
        }

        if t_lo - t_hi > tol {
            return LineClip::Empty;
        }
        if t_hi - t_lo <= tol {
            let mid = anchor + dir * (0.5 * (t_lo + t_hi));
            return LineClip::PointHit(mid);
        }
        let p = anchor + dir * t_lo;
        let q = anchor + dir * t_hi;
        if (p.x, p.y) <= (q.x, q.y) {
            LineClip::Segment(p, q)
        } else {
            LineClip::Segment(q, p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    /// Right triangle with legs 3 and 4 on the axes; hypotenuse altitude 2.4.
    fn leg34_triangle() -> Triangle {
        Triangle::new(pt(0.0, 0.0), pt(0.0, 3.0), pt(4.0, 0.0)).unwrap()
    }

    #[test]
    fn line_through_x_axis() {
        let line = OrientedLine::through(pt(0.0, 0.0), pt(4.0, 0.0), pt(1.0, 1.0)).unwrap();
        assert!((line.a() - 0.0).abs() < 1e-15);
        assert!((line.b() - 1.0).abs() < 1e-15);
        assert!(line.c().abs() < 1e-15);
    }

    #[test]
    fn line_through_oriented_toward_origin() {
        // 3x + 4y - 12 = 0 normalized, flipped so the origin is positive.
        let line = OrientedLine::through(pt(0.0, 3.0), pt(4.0, 0.0), pt(0.0, 0.0)).unwrap();
        assert!((line.a() + 3.0 / 5.0).abs() < 1e-12);
        assert!((line.b() + 4.0 / 5.0).abs() < 1e-12);
        assert!((line.c() - 12.0 / 5.0).abs() < 1e-12);
        // cross-check against the point-line distance formula
        let probe = pt(2.0, 2.0);
        let expected = (3.0 * probe.x + 4.0 * probe.y - 12.0).abs() / 5.0;
        assert!((line.signed_eval(probe).abs() - expected).abs() < 1e-12);
    }

    #[test]
    fn line_through_rejects_coincident_points() {
        let err = OrientedLine::through(pt(1.0, 1.0), pt(1.0, 1.0), pt(0.0, 0.0)).unwrap_err();
        assert_eq!(err, Error::DegenerateLine);
    }

    #[test]
    fn line_through_rejects_hint_on_line() {
        let err = OrientedLine::through(pt(0.0, 0.0), pt(4.0, 0.0), pt(2.0, 0.0)).unwrap_err();
        assert_eq!(err, Error::AmbiguousOrientation);
    }

    #[test]
    fn signed_eval_is_distance() {
        let up = OrientedLine::through(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)).unwrap();
        assert!((up.signed_eval(pt(3.0, 5.0)) - 5.0).abs() < 1e-15);
        assert!(up.signed_eval(pt(7.0, 0.0)).abs() < 1e-15);
    }

    #[test]
    fn hypotenuse_distance_from_right_angle_corner() {
        // smallest altitude of the 3-4-5 triangle
        let t = leg34_triangle();
        let sides = t.sides();
        let from_corner: Vec<f64> = sides.iter().map(|s| s.signed_eval(pt(0.0, 0.0))).collect();
        let max = from_corner.iter().cloned().fold(f64::MIN, f64::max);
        assert!((max - 2.4).abs() < 1e-12);
    }

    #[test]
    fn unit_square_sides_evaluate_half_at_center() {
        let square = ConvexPolygon::new(vec![
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(1.0, 1.0),
            pt(0.0, 1.0),
        ])
        .unwrap();
        let sides = square.sides();
        assert_eq!(sides.len(), 4);
        for s in &sides {
            assert!((s.signed_eval(pt(0.5, 0.5)) - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn triangle_sides_positive_inside() {
        let t = leg34_triangle();
        for s in t.sides() {
            assert!(s.signed_eval(pt(1.0, 1.0)) > 0.0);
        }
        // x = 0, y = 0 and the hypotenuse each at distance 1 from (1,1)
        let evals: Vec<f64> = t.sides().iter().map(|s| s.signed_eval(pt(1.0, 1.0))).collect();
        for e in evals {
            assert!((e - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn polygon_rejects_collinear_vertices() {
        let err = ConvexPolygon::new(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NotStrictlyConvex { .. }));
    }

    #[test]
    fn polygon_rejects_repeated_vertices() {
        let err = ConvexPolygon::new(vec![
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(1.0, 0.0),
            pt(0.0, 1.0),
        ])
        .unwrap_err();
        assert!(matches!(err, Error::RepeatedVertex { .. }));
    }

    #[test]
    fn polygon_rejects_reflex_vertex() {
        let err = ConvexPolygon::new(vec![
            pt(0.0, 0.0),
            pt(2.0, 0.0),
            pt(2.0, 2.0),
            pt(1.0, 0.5),
            pt(0.0, 2.0),
        ])
        .unwrap_err();
        assert!(matches!(err, Error::NotStrictlyConvex { .. }));
    }

    #[test]
    fn clockwise_input_is_reversed() {
        let poly = ConvexPolygon::new(vec![pt(0.0, 0.0), pt(0.0, 1.0), pt(1.0, 1.0), pt(1.0, 0.0)])
            .unwrap();
        let n = poly.vertices().len();
        let mut twice_area = 0.0;
        for i in 0..n {
            twice_area += poly.vertices()[i].cross(poly.vertices()[(i + 1) % n]);
        }
        assert!(twice_area > 0.0);
    }

    #[test]
    fn clip_chord_through_triangle() {
        let t = leg34_triangle().polygon();
        let line = OrientedLine::from_coefficients(2.0, 1.0, -2.0).unwrap();
        match t.clip_line(&line) {
            LineClip::Segment(p, q) => {
                assert!(p.distance(pt(0.0, 2.0)) < 1e-9);
                assert!(q.distance(pt(1.0, 0.0)) < 1e-9);
            }
            other => panic!("expected segment, got {:?}", other),
        }
    }

    #[test]
    fn clip_vertex_touch() {
        let t = leg34_triangle().polygon();
        let line = OrientedLine::from_coefficients(2.0, 1.0, 0.0).unwrap();
        match t.clip_line(&line) {
            LineClip::PointHit(p) => assert!(p.distance(pt(0.0, 0.0)) < 1e-9),
            other => panic!("expected point hit, got {:?}", other),
        }
    }

    #[test]
    fn clip_miss() {
        let t = leg34_triangle().polygon();
        let line = OrientedLine::from_coefficients(2.0, 1.0, -20.0).unwrap();
        assert_eq!(t.clip_line(&line), LineClip::Empty);
    }

    #[test]
    fn classify_equilateral() {
        let t = Triangle::new(pt(0.0, 3f64.sqrt()), pt(-1.0, 0.0), pt(1.0, 0.0)).unwrap();
        let class = t.classify();
        assert_eq!(class.shape, TriangleShape::Equilateral);
        assert!(!class.right_angled);
    }

    #[test]
    fn classify_isosceles() {
        let t = Triangle::new(pt(0.0, 2.0), pt(-1.0, 0.0), pt(1.0, 0.0)).unwrap();
        let class = t.classify();
        assert_eq!(class.shape, TriangleShape::Isosceles );
        assert!(!class.right_angled);
    }

    #[test]
    fn classify_right_scalene() {
        let class = leg34_triangle().classify();
        assert_eq!(class.shape, TriangleShape::Scalene);
        assert!(class.right_angled);
    }

    #[test]
    fn altitudes_of_leg34() {
        let mut alt = leg34_triangle().altitudes();
        alt.sort_by(f64::total_cmp);
        assert!((alt[0] - 2.4).abs() < 1e-12);
        assert!((alt[1] - 3.0).abs() < 1e-12);
        assert!((alt[2] - 4.0).abs() < 1e-12);
    }

    #[test]
    fn altitudes_of_equilateral() {
        let t = Triangle::new(pt(0.0, 3f64.sqrt()), pt(-1.0, 0.0), pt(1.0, 0.0)).unwrap();
        for h in t.altitudes() {
            assert!((h - 3f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn sliver_triangle_rejected() {
        let err = Triangle::new(pt(0.0, 0.0), pt(10.0, 0.0), pt(5.0, 1e-12)).unwrap_err();
        assert_eq!(err, Error::DegenerateTriangle);
    }

    #[test]
    fn triangle_reorders_clockwise_input() {
        let t = leg34_triangle();
        let [v0, v1, v2] = t.vertices();
        assert!((v1 - v0).cross(v2 - v0) > 0.0);
        assert!(t.area() > 0.0);
    }
}
