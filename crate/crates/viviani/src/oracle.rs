//! Brute-force grid backends for independent verification.
//!
//! These deliberately share no code with the analytic paths: minimization
//! is plain scanning with local refinement, and level sets are read off
//! by thresholding. Scans are row-major with strict improvement, so the
//! results are deterministic.

use crate::error::Error;
use crate::geometry::Point;

/// A sampling grid over an axis-aligned box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    min: Point,
    max: Point,
    resolution: usize,
}

impl GridSpec {
    /// Grid of `resolution × resolution` samples over `[min, max]`.
    /// The resolution must lie in `16..=4096` and the box must have
    /// positive extent on both axes.
    pub fn new(min: Point, max: Point, resolution: usize) -> Result<Self, Error> {
        if !(min.is_finite() && max.is_finite())
            || !(max.x > min.x && max.y > min.y)
            || !(16..=4096).contains(&resolution)
        {
            return Err(Error::InvalidGrid);
        }
        Ok(Self {
            min,
            max,
            resolution,
        })
    }

    pub fn bbox(&self) -> (Point, Point) {
        (self.min, self.max)
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// Largest sample spacing of the grid.
    pub fn cell_size(&self) -> f64 {
        let n = (self.resolution - 1) as f64;
        ((self.max.x - self.min.x) / n).max((self.max.y - self.min.y) / n)
    }

    fn point(&self, i: usize, j: usize) -> Point {
        let n = (self.resolution - 1) as f64;
        Point::new(
            self.min.x + (self.max.x - self.min.x) * (i as f64) / n,
            self.min.y + (self.max.y - self.min.y) * (j as f64) / n,
        )
    }
}

fn scan_min(objective: &impl Fn(Point) -> f64, min: Point, max: Point, res: usize) -> (f64, Point) {
    let mut best_value = f64::INFINITY;
    let mut best_point = min;
    let n = (res - 1) as f64;
    for j in 0..res {
        for i in 0..res {
            let p = Point::new(
                min.x + (max.x - min.x) * (i as f64) / n,
                min.y + (max.y - min.y) * (j as f64) / n,
            );
            let value = objective(p);
            if value < best_value {
                best_value = value;
                best_point = p;
            }
        }
    }
    (best_value, best_point)
}

/// Minimum of `objective` over the grid, then three refinement rounds,
/// each re-scanning a 10× smaller box around the best sample (kept inside
/// the original box).
pub fn grid_min(objective: impl Fn(Point) -> f64, grid: &GridSpec) -> (f64, Point) {
    let (orig_min, orig_max) = grid.bbox();
    let res = grid.resolution();
    let (mut best_value, mut best_point) = scan_min(&objective, orig_min, orig_max, res);

    let mut width = Point::new(orig_max.x - orig_min.x, orig_max.y - orig_min.y);
    for _ in 0..3 {
        width = width * 0.1;
        let mut lo = best_point - width * 0.5;
        // translate the shrunk box to stay inside the original domain
        lo.x = lo.x.clamp(orig_min.x, orig_max.x - width.x);
        lo.y = lo.y.clamp(orig_min.y, orig_max.y - width.y);
        let hi = lo + width;
        let (value, point) = scan_min(&objective, lo, hi, res);
        if value < best_value {
            best_value = value;
            best_point = point;
        }
    }
    (best_value, best_point)
}

/// All grid samples where `|objective − k| <= tol`, in row-major order.
pub fn grid_level_points(
    objective: impl Fn(Point) -> f64,
    k: f64,
    grid: &GridSpec,
    tol: f64,
) -> Vec<Point> {
    let mut points = Vec::new();
    for j in 0..grid.resolution() {
        for i in 0..grid.resolution() {
            let p = grid.point(i, j);
            if (objective(p) - k).abs() <= tol {
                points.push(p);
            }
        }
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn paraboloid_minimum() {
        let grid = GridSpec::new(pt(-2.0, -2.0), pt(2.0, 2.0), 64).unwrap();
        let (value, point) = grid_min(|p| p.x * p.x + p.y * p.y, &grid);
        assert!(value < 1e-6);
        assert!(point.norm() < 1e-3);
    }

    #[test]
    fn shifted_quadratic_minimum() {
        let grid = GridSpec::new(pt(-2.0, -2.0), pt(2.0, 2.0), 64).unwrap();
        let f = |p: Point| 3.0 * (p.x - 0.5) * (p.x - 0.5) + (p.y + 0.25) * (p.y + 0.25) + 7.0;
        let (value, point) = grid_min(f, &grid);
        assert!((value - 7.0).abs() < 1e-4 * 7.0);
        assert!(point.distance(pt(0.5, -0.25)) < 1e-2);
    }

    #[test]
    fn squared_sum_minima_from_scratch() {
        use crate::geometry::Triangle;
        use crate::quadratic::squared_sum_form;

        // equilateral: minimum 1 at the incenter (0, √3/3)
        let t = Triangle::new(pt(0.0, 3f64.sqrt()), pt(-1.0, 0.0), pt(1.0, 0.0)).unwrap();
        let q = squared_sum_form(&t.sides()).unwrap();
        let grid = GridSpec::new(pt(-2.0, -2.0), pt(2.0, 2.0), 128).unwrap();
        let (value, point) = grid_min(|p| q.eval(p), &grid);
        assert!((value - 1.0).abs() < 1e-4);
        assert!(point.distance(pt(0.0, 3f64.sqrt() / 3.0)) < 1e-2);

        // legs-3-and-4 right triangle: minimum 2.88 at (0.72, 0.96)
        let t = Triangle::new(pt(0.0, 0.0), pt(0.0, 3.0), pt(4.0, 0.0)).unwrap();
        let q = squared_sum_form(&t.sides()).unwrap();
        let grid = GridSpec::new(pt(-1.0, -1.0), pt(5.0, 4.0), 128).unwrap();
        let (value, point) = grid_min(|p| q.eval(p), &grid);
        assert!((value - 2.88).abs() < 1e-4 * 2.88);
        assert!(point.distance(pt(0.72, 0.96)) < 1e-2);
    }

    #[test]
    fn level_points_of_constant_objective() {
        let grid = GridSpec::new(pt(0.0, 0.0), pt(1.0, 1.0), 16).unwrap();
        let points = grid_level_points(|_| 2.0, 3.0, &grid, 0.5);
        assert!(points.is_empty());
        let points = grid_level_points(|_| 2.0, 2.0, &grid, 0.5);
        assert_eq!(points.len(), 16 * 16);
    }

    #[test]
    fn invalid_grids_are_rejected() {
        assert_eq!(
            GridSpec::new(pt(0.0, 0.0), pt(0.0, 1.0), 64).unwrap_err(),
            Error::InvalidGrid
        );
        assert_eq!(
            GridSpec::new(pt(0.0, 0.0), pt(1.0, 1.0), 8).unwrap_err(),
            Error::InvalidGrid
        );
        assert_eq!(
            GridSpec::new(pt(0.0, 0.0), pt(1.0, 1.0), 100_000).unwrap_err(),
            Error::InvalidGrid
        );
    }

    #[test]
    fn grid_min_is_deterministic() {
        let grid = GridSpec::new(pt(-3.0, -1.0), pt(2.0, 4.0), 48).unwrap();
        let f = |p: Point| (p.x - 0.3).powi(2) + 2.0 * (p.y - 1.7).powi(2);
        let first = grid_min(f, &grid);
        let second = grid_min(f, &grid);
        assert_eq!(first, second);
    }
}
