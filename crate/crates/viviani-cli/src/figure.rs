//! Static SVG figures.
//!
//! The viewport is the scene bounding box plus a 20% margin; loci get a
//! distinct dash pattern and color per level. Numbers are written with the
//! report formatter, so figures are deterministic too.

use crate::report::fmt_sig;
use viviani::{ConvexPolygon, EllipseGeometry, OrientedLine, LineClip, Point};

const PIXEL_WIDTH: f64 = 800.0;
const PADDING: f64 = 20.0;

const DASHES: [&str; 6] = ["", "10,5", "2,4", "8,3,2,3", "5,5", "1,3"];
const COLORS: [&str; 6] = [
    "#1b6ca8", "#b34700", "#2e7d32", "#7b1fa2", "#c2185b", "#00838f",
];

pub struct Figure {
    min: Point,
    scale: f64,
    width: f64,
    height: f64,
    body: String,
}

impl Figure {
    /// Viewport over the bounding box of `points`, inflated by 20% per axis.
    pub fn new(points: &[Point]) -> Self {
        let mut min = points[0];
        let mut max = points[0];
        for p in points {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        let extent = max - min;
        let fallback = extent.x.max(extent.y).max(1.0);
        let margin = Point::new(
            0.2 * if extent.x > 0.0 { extent.x } else { fallback },
            0.2 * if extent.y > 0.0 { extent.y } else { fallback },
        );
        let min = min - margin;
        let max = max + margin;
        let extent = max - min;
        let scale = (PIXEL_WIDTH - 2.0 * PADDING) / extent.x;
        Self {
            min,
            scale,
            width: PIXEL_WIDTH,
            height: extent.y * scale + 2.0 * PADDING,
            body: String::new(),
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (
            (p.x - self.min.x) * self.scale + PADDING,
            self.height - ((p.y - self.min.y) * self.scale + PADDING),
        )
    }

    /// World-space rectangle of the viewport, for clipping infinite lines.
    pub fn viewport(&self) -> ConvexPolygon {
        let max = self.min
            + Point::new(
                (self.width - 2.0 * PADDING) / self.scale,
                (self.height - 2.0 * PADDING) / self.scale,
            );
        ConvexPolygon::new(vec![
            self.min,
            Point::new(max.x, self.min.y),
            max,
            Point::new(self.min.x, max.y),
        ])
        .expect("viewport is a rectangle")
    }

    fn style(index: usize) -> (String, &'static str) {
        let color = COLORS[index % COLORS.len()];
        let dash = DASHES[index % DASHES.len()];
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(" stroke-dasharray=\"{}\"", dash)
        };
        (dash_attr, color)
    }

    pub fn outline(&mut self, vertices: &[Point]) {
        let points: Vec<String> = vertices
            .iter()
            .map(|&v| {
                let (x, y) = self.map(v);
                format!("{},{}", fmt_sig(x), fmt_sig(y))
            })
            .collect();
        self.body.push_str(&format!(
            "  <polygon points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n",
            points.join(" ")
        ));
    }

    pub fn segment(&mut self, a: Point, b: Point, index: usize) {
        let (dash, color) = Self::style(index);
        let (x1, y1) = self.map(a);
        let (x2, y2) = self.map(b);
        self.body.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"1.5\"{}/>\n",
            fmt_sig(x1), fmt_sig(y1), fmt_sig(x2), fmt_sig(y2), color, dash
        ));
    }

    pub fn dot(&mut self, p: Point, index: usize) {
        let (_, color) = Self::style(index);
        let (cx, cy) = self.map(p);
        self.body.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{}\"/>\n",
            fmt_sig(cx),
            fmt_sig(cy),
            color
        ));
    }

    pub fn ellipse(&mut self, geometry: &EllipseGeometry, index: usize) {
        let (dash, color) = Self::style(index);
        let (cx, cy) = self.map(geometry.center);
        let rx = geometry.semi_major * self.scale;
        let ry = geometry.semi_minor * self.scale;
        // SVG y points down, so the world rotation flips sign
        let degrees = -geometry.rotation.to_degrees();
        self.body.push_str(&format!(
            "  <ellipse cx=\"0\" cy=\"0\" rx=\"{}\" ry=\"{}\" transform=\"translate({} {}) rotate({})\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{}/>\n",
            fmt_sig(rx), fmt_sig(ry), fmt_sig(cx), fmt_sig(cy), fmt_sig(degrees), color, dash
        ));
    }

    /// Draws the part of an infinite line that crosses the viewport.
    pub fn line(&mut self, line: &OrientedLine, index: usize) {
        match self.viewport().clip_line(line) {
            LineClip::Segment(a, b) => self.segment(a, b, index),
            LineClip::PointHit(p) => self.dot(p, index),
            LineClip::Empty => {}
        }
    }

    pub fn render(&self) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n{}</svg>\n",
            fmt_sig(self.width),
            fmt_sig(self.height),
            fmt_sig(self.width),
            fmt_sig(self.height),
            self.body
        )
    }
}
