//! Scene inputs: inline flags or a JSON file.
//!
//! Inline syntax: points are `x,y` separated by whitespace
//! (`--triangle "0,0 0,3 4,0"`); line sets separate the two defining
//! points of each line with whitespace and the lines with semicolons
//! (`--lines "0,0 1,0; 0,2 1,2"`).
//!
//! Scene files hold a single JSON object with one of the keys `triangle`,
//! `polygon` (vertex arrays) or `lines` (arrays of two-point arrays).

use crate::AppError;
use std::path::Path;
use viviani::{ConvexPolygon, OrientedLine, Point, Triangle};

/// Parsed and validated scene.
pub enum Scene {
    Triangle(Triangle),
    Polygon(ConvexPolygon),
    Lines(Vec<OrientedLine>),
}

/// A scene plus the raw input echoed back in reports.
pub struct SceneInput {
    pub scene: Scene,
    pub raw: RawShape,
}

pub enum RawShape {
    Triangle(Vec<Point>),
    Polygon(Vec<Point>),
    Lines(Vec<(Point, Point)>),
}

impl SceneInput {
    /// The polygon of a triangle or polygon scene; line scenes have none.
    pub fn polygon(&self) -> Result<ConvexPolygon, AppError> {
        match &self.scene {
            Scene::Triangle(t) => Ok(t.polygon()),
            Scene::Polygon(p) => Ok(p.clone()),
            Scene::Lines(_) => Err(AppError::scene(
                "this analysis requires a triangle or polygon scene",
            )),
        }
    }

    /// Side lines of a polygonal scene, or the given line set.
    pub fn lines(&self) -> Vec<OrientedLine> {
        match &self.scene {
            Scene::Triangle(t) => t.sides().to_vec(),
            Scene::Polygon(p) => p.sides(),
            Scene::Lines(lines) => lines.clone(),
        }
    }

    pub fn triangle(&self) -> Option<&Triangle> {
        match &self.scene {
            Scene::Triangle(t) => Some(t),
            _ => None,
        }
    }

    /// Points spanning the scene, for the figure viewport.
    pub fn extent_points(&self) -> Vec<Point> {
        match &self.raw {
            RawShape::Triangle(v) | RawShape::Polygon(v) => v.clone(),
            RawShape::Lines(segments) => segments.iter().flat_map(|&(p, q)| [p, q]).collect(),
        }
    }
}

fn parse_number(token: &str) -> Result<f64, AppError> {
    let value: f64 = token
        .trim()
        .parse()
        .map_err(|_| AppError::parse(format!("not a number: '{}'", token)))?;
    if !value.is_finite() {
        return Err(AppError::parse(format!("not a finite number: '{}'", token)));
    }
    Ok(value)
}

fn parse_point(token: &str) -> Result<Point, AppError> {
    let (x, y) = token
        .trim()
        .split_once(',')
        .ok_or_else(|| AppError::parse(format!("expected 'x,y', got '{}'", token)))?;
    Ok(Point::new(parse_number(x)?, parse_number(y)?))
}

fn parse_points(text: &str) -> Result<Vec<Point>, AppError> {
    text.split_whitespace().map(parse_point).collect()
}

pub fn triangle_from_flag(text: &str) -> Result<SceneInput, AppError> {
    let points = parse_points(text)?;
    if points.len() != 3 {
        return Err(AppError::parse(format!(
            "a triangle needs exactly 3 points, got {}",
            points.len()
        )));
    }
    build_triangle(points)
}

pub fn polygon_from_flag(text: &str) -> Result<SceneInput, AppError> {
    build_polygon(parse_points(text)?)
}

pub fn lines_from_flag(text: &str) -> Result<SceneInput, AppError> {
    let mut segments = Vec::new();
    for chunk in text.split(';') {
        let points = parse_points(chunk)?;
        if points.len() != 2 {
            return Err(AppError::parse(format!(
                "a line needs exactly 2 points, got {} in '{}'",
                points.len(),
                chunk.trim()
            )));
        }
        segments.push((points[0], points[1]));
    }
    build_lines(segments)
}

pub fn from_file(path: &Path) -> Result<SceneInput, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::scene(format!("cannot read scene file: {}", e)))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| AppError::scene(format!("scene file is not valid JSON: {}", e)))?;
    let object = value
        .as_object()
        .ok_or_else(|| AppError::scene("scene file must hold a JSON object"))?;

    let json_point = |v: &serde_json::Value| -> Result<Point, AppError> {
        let pair = v
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| AppError::scene("points must be [x, y] arrays"))?;
        let x = pair[0]
            .as_f64()
            .ok_or_else(|| AppError::scene("point coordinates must be numbers"))?;
        let y = pair[1]
            .as_f64()
            .ok_or_else(|| AppError::scene("point coordinates must be numbers"))?;
        if !(x.is_finite() && y.is_finite()) {
            return Err(AppError::scene("point coordinates must be finite"));
        }
        Ok(Point::new(x, y))
    };
    let json_points = |v: &serde_json::Value| -> Result<Vec<Point>, AppError> {
        v.as_array()
            .ok_or_else(|| AppError::scene("expected an array of points"))?
            .iter()
            .map(json_point)
            .collect()
    };

    match (
        object.get("triangle"),
        object.get("polygon"),
        object.get("lines"),
    ) {
        (Some(v), None, None) => {
            let points = json_points(v)?;
            if points.len() != 3 {
                return Err(AppError::scene("'triangle' must list exactly 3 points"));
            }
            build_triangle(points)
        }
        (None, Some(v), None) => build_polygon(json_points(v)?),
        (None, None, Some(v)) => {
            let mut segments = Vec::new();
            for entry in v
                .as_array()
                .ok_or_else(|| AppError::scene("'lines' must be an array"))?
            {
                let points = json_points(entry)?;
                if points.len() != 2 {
                    return Err(AppError::scene("each line must list exactly 2 points"));
                }
                segments.push((points[0], points[1]));
            }
            build_lines(segments)
        }
        _ => Err(AppError::scene(
            "scene file must hold exactly one of 'triangle', 'polygon' or 'lines'",
        )),
    }
}

fn build_triangle(points: Vec<Point>) -> Result<SceneInput, AppError> {
    let triangle = Triangle::new(points[0], points[1], points[2])
        .map_err(|e| AppError::scene(format!("invalid triangle: {}", e)))?;
    Ok(SceneInput {
        scene: Scene::Triangle(triangle),
        raw: RawShape::Triangle(points),
    })
}

fn build_polygon(points: Vec<Point>) -> Result<SceneInput, AppError> {
    let polygon = ConvexPolygon::new(points.clone())
        .map_err(|e| AppError::scene(format!("invalid polygon: {}", e)))?;
    Ok(SceneInput {
        scene: Scene::Polygon(polygon),
        raw: RawShape::Polygon(points),
    })
}

fn build_lines(segments: Vec<(Point, Point)>) -> Result<SceneInput, AppError> {
    if segments.is_empty() {
        return Err(AppError::scene("line set is empty"));
    }
    let lines = segments
        .iter()
        .map(|&(p, q)| {
            OrientedLine::through_pair(p, q)
                .map_err(|e| AppError::scene(format!("invalid line: {}", e)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SceneInput {
        scene: Scene::Lines(lines),
        raw: RawShape::Lines(segments),
    })
}

/// Comma-separated level list from `--k`.
pub fn parse_k_list(text: &str) -> Result<Vec<f64>, AppError> {
    text.split(',').map(parse_number).collect()
}
