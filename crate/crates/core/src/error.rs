use crate::rational::ParseRationalError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("points coincide")]
    CoincidentPoints,
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("two of the lines coincide")]
    CoincidentLines,
    #[error("degenerate triangle: vertices are collinear")]
    DegenerateTriangle,
    #[error("triangles are not orthologic under {0}")]
    NotOrthologic(&'static str),
    #[error("perpendicular pencil is degenerate: center not unique")]
    PencilDegenerate,
    #[error("pair is not bi-orthologic")]
    NotBiorthologic,
    #[error("generation failed after {0} attempts")]
    GenerationFailed(usize),
    #[error("point does not lie on the circle")]
    PointNotOnCircle,
    #[error("line is tangent to the circle")]
    TangentLine,
    #[error("point is outside or on the circumcircle")]
    OutsideOrOnCircle,
    #[error("point coincides with a vertex")]
    VertexPoint,
    #[error("a vertex coincides with its image; connecting line undefined")]
    DegenerateCevian,
    #[error("triangles are not homological under {0}")]
    NotHomological(&'static str),
    #[error("point lies on the line; perpendicular not unique")]
    PointOnLine,
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

impl From<ParseRationalError> for Error {
    fn from(e: ParseRationalError) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
