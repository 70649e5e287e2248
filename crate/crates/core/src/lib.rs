//! Exact-arithmetic toolkit for triangle orthology.
//!
//! The orthology deficit `MA·B1C1 + MB·C1A1 + MC·A1B1` decides whether the
//! perpendiculars from the vertices of one triangle onto the sides of another
//! are concurrent. All decisions are exact rational zero-tests; the only
//! floating-point code lives in [`constructions::approx`].

pub mod constructions;
pub mod doc;
pub mod error;
pub mod explorer;
pub mod geometry;
pub mod homology;
pub mod linalg;
pub mod orthology;
pub mod rational;
pub mod sampling;
pub mod space3d;

pub use error::{Error, Result};
pub use geometry::{
    collinear, concurrent, dot, intersect_lines, line_through, midpoint, perpendicular_through,
    HPoint, Intersection, Line2, Point2, Triangle2, Vec2,
};
pub use orthology::{Correspondence, OrthologyEntry, OrthologyReport, TrianglePair};
pub use rational::{format_rational, parse_rational, Rational};

/// Schema tag carried by every persisted document.
pub const SCHEMA: &str = "orthology-lab/1";
