//! Error type shared by all modules.

use std::fmt;

/// Errors reported by constructors and locus operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The two points defining a line coincide.
    DegenerateLine,
    /// The orientation hint lies on the line, so no positive side is defined.
    AmbiguousOrientation,
    /// Triangle vertices are (nearly) collinear.
    DegenerateTriangle,
    /// A polygon needs at least three vertices.
    TooFewVertices { got: usize },
    /// Two consecutive polygon vertices coincide.
    RepeatedVertex { index: usize },
    /// The vertex list is not strictly convex (includes collinear runs).
    NotStrictlyConvex { index: usize },
    /// The three probe points are collinear.
    CollinearProbe,
    /// A probe point lies outside the polygon.
    OutsideDomain,
    /// An operation over a line set received no lines.
    EmptyLineSet,
    /// The requested level set is not an ellipse.
    NotAnEllipse,
    /// Semi-axes must satisfy `alpha >= beta > 0`.
    InvalidAxes { alpha: f64, beta: f64 },
    /// Grid specification is degenerate or out of the supported range.
    InvalidGrid,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DegenerateLine => write!(f, "line endpoints coincide"),
            Self::AmbiguousOrientation => write!(f, "orientation hint lies on the line"),
            Self::DegenerateTriangle => write!(f, "triangle vertices are collinear"),
            Self::TooFewVertices { got } => {
                write!(f, "polygon needs at least 3 vertices, got {}", got)
            }
            Self::RepeatedVertex { index } => {
                write!(f, "repeated polygon vertex at index {}", index)
            }
            Self::NotStrictlyConvex { index } => {
                write!(f, "polygon is not strictly convex at vertex {}", index)
            }
            Self::CollinearProbe => write!(f, "probe points are collinear"),
            Self::OutsideDomain => write!(f, "probe point lies outside the polygon"),
            Self::EmptyLineSet => write!(f, "line set is empty"),
            Self::NotAnEllipse => write!(f, "locus is not an ellipse"),
            Self::InvalidAxes { alpha, beta } => {
                write!(f, "invalid semi-axes: alpha={}, beta={}", alpha, beta)
            }
            Self::InvalidGrid => write!(f, "invalid grid specification"),
        }
    }
}

impl std::error::Error for Error {}
