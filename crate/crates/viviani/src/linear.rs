//! The distance sum function of a convex polygon and its level-set loci.
//!
//! With side lines oriented positive toward the interior, the sum of
//! distances from an interior point to all side lines is the linear
//! function `V(x,y) = A·x + B·y + C` whose coefficients are the sums of
//! the side-line coefficients. Its level sets inside the polygon are
//! parallel chords; when the gradient vanishes, `V` is constant on the
//! whole polygon.

use crate::error::Error;
use crate::geometry::{ConvexPolygon, LineClip, OrientedLine, Point};
use crate::tolerances::{GRAD_EPS, REL_AREA, REL_GEOM};

/// `V(x,y) = a·x + b·y + c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearForm {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl LinearForm {
    pub fn eval(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    /// Norm of the gradient `(a, b)`. The side normals are unit vectors,
    /// so this is dimensionless regardless of the polygon's size.
    pub fn gradient_norm(&self) -> f64 {
        self.a.hypot(self.b)
    }

    /// Whether `V` is constant, i.e. the unit-normal sum cancels.
    pub fn is_constant(&self) -> bool {
        self.gradient_norm() <= GRAD_EPS
    }
}

/// The set of points of the polygon where `V = k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SumLocus {
    Empty,
    Vertex(Point),
    Segment(Point, Point),
    WholePolygon,
}

/// Direction of the level lines of `V`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LevelDirection {
    /// Unit vector parallel to every level segment, canonicalized to
    /// positive x (positive y when vertical).
    Direction(Point),
    /// `V` is constant; every direction is a level direction.
    IsotropicConstant,
}

/// Sum of the side-line coefficients: the distance sum function.
pub fn distance_sum_form(poly: &ConvexPolygon) -> LinearForm {
    let mut form = LinearForm {
        a: 0.0,
        b: 0.0,
        c: 0.0,
    };
    for side in poly.sides() {
        form.a += side.a();
        form.b += side.b();
        form.c += side.c();
    }
    form
}

/// The locus `{P in poly : V(P) = k}`. Non-finite `k` yields `Empty`.
pub fn sum_locus(poly: &ConvexPolygon, k: f64) -> SumLocus {
    if !k.is_finite() {
        return SumLocus::Empty;
    }
    let form = distance_sum_form(poly);
    if form.is_constant() {
        return if (k - form.c).abs() <= REL_GEOM * form.c.abs() {
            SumLocus::WholePolygon
        } else {
            SumLocus::Empty
        };
    }
    let line = OrientedLine::from_coefficients(form.a, form.b, form.c - k)
        .expect("non-vanishing gradient yields a valid line");
    match poly.clip_line(&line) {
        LineClip::Empty => SumLocus::Empty,
        LineClip::PointHit(p) => SumLocus::Vertex(p),
        LineClip::Segment(p, q) => SumLocus::Segment(p, q),
    }
}

/// Extremes of `V` over the polygon; attained at vertices. For a triangle
/// these are its smallest and largest altitudes.
pub fn k_range(poly: &ConvexPolygon) -> (f64, f64) {
    let form = distance_sum_form(poly);
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in poly.vertices() {
        let value = form.eval(v);
        lo = lo.min(value);
        hi = hi.max(value);
    }
    (lo, hi)
}

/// Direction of the level segments of `V`, perpendicular to its gradient.
pub fn level_direction(poly: &ConvexPolygon) -> LevelDirection {
    let form = distance_sum_form(poly);
    let g = form.gradient_norm();
    if g <= GRAD_EPS {
        return LevelDirection::IsotropicConstant;
    }
    let mut dir = Point::new(-form.b / g, form.a / g);
    if dir.x < 0.0 || (dir.x == 0.0 && dir.y < 0.0) {
        dir = -dir;
    }
    LevelDirection::Direction(dir)
}

/// Whether the distance sum is constant on the polygon. For triangles this
/// holds exactly for equilateral ones.
pub fn is_viviani(poly: &ConvexPolygon) -> bool {
    distance_sum_form(poly).is_constant()
}

/// Tests whether `V` takes the same value at three non-collinear interior
/// points; by linearity that forces `V` constant on the whole polygon.
pub fn three_point_test(
    poly: &ConvexPolygon,
    p1: Point,
    p2: Point,
    p3: Point,
) -> Result<bool, Error> {
    let probes = [p1, p2, p3];
    if probes.iter().any(|&p| !poly.strictly_contains(p)) {
        return Err(Error::OutsideDomain);
    }
    let diag = {
        let dx = probes
            .iter()
            .map(|p| p.x)
            .fold(f64::NEG_INFINITY, f64::max)
            - probes.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
        let dy = probes
            .iter()
            .map(|p| p.y)
            .fold(f64::NEG_INFINITY, f64::max)
            - probes.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
        dx.hypot(dy)
    };
    let twice_area = (p2 - p1).cross(p3 - p1).abs();
    if twice_area <= 2.0 * REL_AREA * diag * diag {
        return Err(Error::CollinearProbe);
    }
    let form = distance_sum_form(poly);
    let values = [form.eval(p1), form.eval(p2), form.eval(p3)];
    let scale = values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    Ok(values.iter().all(|v| (v - values[0]).abs() <= REL_GEOM * scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Triangle;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn leg34() -> ConvexPolygon {
        Triangle::new(pt(0.0, 0.0), pt(0.0, 3.0), pt(4.0, 0.0))
            .unwrap()
            .polygon()
    }

    fn equilateral() -> ConvexPolygon {
        Triangle::new(pt(0.0, 3f64.sqrt()), pt(-1.0, 0.0), pt(1.0, 0.0))
            .unwrap()
            .polygon()
    }

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)]).unwrap()
    }

    #[test]
    fn form_of_leg34_triangle() {
        let form = distance_sum_form(&leg34());
        assert!((form.a - 0.4).abs() < 1e-12);
        assert!((form.b - 0.2).abs() < 1e-12);
        assert!((form.c - 2.4).abs() < 1e-12);
    }

    #[test]
    fn form_of_unit_square_is_constant_two() {
        let form = distance_sum_form(&unit_square());
        assert!(form.a.abs() < 1e-15);
        assert!(form.b.abs() < 1e-15);
        assert!((form.c - 2.0).abs() < 1e-15);
    }

    #[test]
    fn form_of_equilateral_is_altitude() {
        let form = distance_sum_form(&equilateral());
        assert!(form.gradient_norm() < 1e-14);
        assert!((form.c - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn locus_interior_chord() {
        // V = 2.8 cuts the chord from (0,2) to (1,0)
        match sum_locus(&leg34(), 2.8) {
            SumLocus::Segment(p, q) => {
                assert!(p.distance(pt(0.0, 2.0)) < 1e-9);
                assert!(q.distance(pt(1.0, 0.0)) < 1e-9);
            }
            other => panic!("expected segment, got {:?}", other),
        }
    }

    #[test]
    fn locus_at_range_ends_is_a_vertex() {
        match sum_locus(&leg34(), 2.4) {
            SumLocus::Vertex(p) => assert!(p.distance(pt(0.0, 0.0)) < 1e-9),
            other => panic!("expected vertex, got {:?}", other),
        }
        match sum_locus(&leg34(), 4.0) {
            SumLocus::Vertex(p) => assert!(p.distance(pt(4.0, 0.0)) < 1e-9),
            other => panic!("expected vertex, got {:?}", other),
        }
    }

    #[test]
    fn locus_above_range_is_empty() {
        assert_eq!(sum_locus(&leg34(), 5.0), SumLocus::Empty);
    }

    #[test]
    fn locus_of_square_at_two_is_everything() {
        assert_eq!(sum_locus(&unit_square(), 2.0), SumLocus::WholePolygon);
        assert_eq!(sum_locus(&unit_square(), 1.5), SumLocus::Empty);
    }

    #[test]
    fn k_range_matches_altitudes() {
        let (lo, hi) = k_range(&leg34());
        assert!((lo - 2.4).abs() < 1e-12);
        assert!((hi - 4.0).abs() < 1e-12);

        let (lo, hi) = k_range(&equilateral());
        assert!((lo - 3f64.sqrt()).abs() < 1e-12);
        assert!((hi - 3f64.sqrt()).abs() < 1e-12);

        let (lo, hi) = k_range(&unit_square());
        assert!((lo - 2.0).abs() < 1e-12);
        assert!((hi - 2.0).abs() < 1e-12);
    }

    #[test]
    fn level_direction_of_leg34() {
        // level lines parallel to 2x + y = 0
        match level_direction(&leg34()) {
            LevelDirection::Direction(d) => {
                assert!((d.x - 1.0 / 5f64.sqrt()).abs() < 1e-12);
                assert!((d.y + 2.0 / 5f64.sqrt()).abs() < 1e-12);
            }
            other => panic!("expected direction, got {:?}", other),
        }
    }

    #[test]
    fn level_direction_of_isosceles_is_base_parallel() {
        let iso = Triangle::new(pt(0.0, 2.0), pt(-1.0, 0.0), pt(1.0, 0.0))
            .unwrap()
            .polygon();
        match level_direction(&iso) {
            LevelDirection::Direction(d) => {
                assert!((d.x.abs() - 1.0).abs() < 1e-12);
                assert!(d.y.abs() < 1e-12);
            }
            other => panic!("expected direction, got {:?}", other),
        }
    }

    #[test]
    fn level_direction_of_square_is_isotropic() {
        assert_eq!(level_direction(&unit_square()), LevelDirection::IsotropicConstant);
    }

    #[test]
    fn viviani_polygons() {
        assert!(is_viviani(&equilateral()));
        assert!(!is_viviani(&leg34()));
        // opposite sides of a rectangle cancel; V is width + height
        let rect =
            ConvexPolygon::new(vec![pt(0.0, 0.0), pt(3.0, 0.0), pt(3.0, 1.0), pt(0.0, 1.0)])
                .unwrap();
        assert!(is_viviani(&rect));
        for probe in [pt(0.5, 0.25), pt(1.7, 0.9), pt(2.9, 0.5)] {
            let direct: f64 = rect.sides().iter().map(|s| s.signed_eval(probe).abs()).sum();
            assert!((direct - 4.0).abs() < 1e-12);
            assert!((distance_sum_form(&rect).eval(probe) - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn three_point_test_detects_variation() {
        let result =
            three_point_test(&leg34(), pt(1.0, 0.5), pt(2.0, 0.5), pt(1.0, 1.0)).unwrap();
        assert!(!result);
        // V there evaluates to 2.9, 3.3 and 3.0
        let form = distance_sum_form(&leg34());
        assert!((form.eval(pt(1.0, 0.5)) - 2.9).abs() < 1e-12);
        assert!((form.eval(pt(2.0, 0.5)) - 3.3).abs() < 1e-12);
        assert!((form.eval(pt(1.0, 1.0)) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn three_point_test_constant_on_equilateral() {
        let result =
            three_point_test(&equilateral(), pt(0.0, 0.5), pt(0.3, 0.4), pt(-0.2, 0.9)).unwrap();
        assert!(result);
    }

    #[test]
    fn three_point_test_rejects_collinear_probes() {
        // all on 2x + y = 2
        let err = three_point_test(&leg34(), pt(0.3, 1.4), pt(0.5, 1.0), pt(0.7, 0.6)).unwrap_err();
        assert_eq!(err, Error::CollinearProbe);
    }

    #[test]
    fn three_point_test_rejects_outside_probe() {
        let err = three_point_test(&leg34(), pt(1.0, 0.5), pt(2.0, 0.5), pt(5.0, 5.0)).unwrap_err();
        assert_eq!(err, Error::OutsideDomain);
    }
}
