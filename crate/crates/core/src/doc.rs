//! JSON document types shared by the explorer and the command line.
//!
//! Exact values are written as canonical `"p/q"` strings. Inputs may also
//! use `"p"` or bare JSON integers. Approximate values are structurally
//! distinct and carry `"approx": true`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::constructions::approx::ApproxPoint;
use crate::constructions::Circle;
use crate::geometry::{HPoint, Point2, Triangle2};
use crate::homology::{HomologyEntry, HomologyReport};
use crate::orthology::{Correspondence, OrthologyEntry, OrthologyReport, TrianglePair};
use crate::rational::{format_rational, parse_rational, ParseRationalError, Rational};
use crate::space3d::{Point3, Triangle3};
use crate::SCHEMA;

/// Validation failure tied to the offending document field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub field: String,
    pub message: String,
}

impl DocError {
    fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        DocError {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

impl std::error::Error for DocError {}

/// A rational token as written in a document, unvalidated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalText(pub String);

impl RationalText {
    pub fn from_rational(r: &Rational) -> Self {
        RationalText(format_rational(r))
    }

    pub fn parse(&self) -> Result<Rational, ParseRationalError> {
        parse_rational(&self.0)
    }
}

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = RationalText;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<RationalText, E> {
                Ok(RationalText(v.to_string()))
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<RationalText, E> {
                Ok(RationalText(v.to_string()))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<RationalText, E> {
                Ok(RationalText(v.to_string()))
            }
            fn visit_f64<E: serde::de::Error>(self, v: f64) -> Result<RationalText, E> {
                Err(E::custom(format!(
                    "floating-point coordinate {v} not allowed; use \"p/q\""
                )))
            }
        }
        d.deserialize_any(V)
    }
}

pub type PointDoc = Vec<RationalText>;

pub fn point_doc(p: &Point2) -> PointDoc {
    vec![
        RationalText::from_rational(&p.x),
        RationalText::from_rational(&p.y),
    ]
}

pub fn point3_doc(p: &Point3) -> PointDoc {
    vec![
        RationalText::from_rational(&p.x),
        RationalText::from_rational(&p.y),
        RationalText::from_rational(&p.z),
    ]
}

fn parse_coords(doc: &PointDoc, field: &str, dim: usize) -> Result<Vec<Rational>, DocError> {
    if doc.len() != dim {
        return Err(DocError::new(
            field,
            format!("expected {dim} coordinates, found {}", doc.len()),
        ));
    }
    doc.iter()
        .enumerate()
        .map(|(i, t)| {
            t.parse()
                .map_err(|e| DocError::new(format!("{field}[{i}]"), e.to_string()))
        })
        .collect()
}

pub fn parse_point2(doc: &PointDoc, field: &str) -> Result<Point2, DocError> {
    let mut c = parse_coords(doc, field, 2)?.into_iter();
    Ok(Point2::new(c.next().unwrap(), c.next().unwrap()))
}

pub fn parse_point3(doc: &PointDoc, field: &str) -> Result<Point3, DocError> {
    let mut c = parse_coords(doc, field, 3)?.into_iter();
    Ok(Point3::new(
        c.next().unwrap(),
        c.next().unwrap(),
        c.next().unwrap(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleDoc {
    #[serde(rename = "A")]
    pub a: PointDoc,
    #[serde(rename = "B")]
    pub b: PointDoc,
    #[serde(rename = "C")]
    pub c: PointDoc,
}

impl TriangleDoc {
    pub fn from_triangle2(t: &Triangle2) -> Self {
        let [a, b, c] = t.vertices().each_ref().map(point_doc);
        TriangleDoc { a, b, c }
    }

    pub fn from_triangle3(t: &Triangle3) -> Self {
        let [a, b, c] = t.vertices().each_ref().map(point3_doc);
        TriangleDoc { a, b, c }
    }

    /// Coordinate count shared by all vertices, if consistent.
    pub fn dimension(&self) -> Option<usize> {
        let n = self.a.len();
        (self.b.len() == n && self.c.len() == n).then_some(n)
    }

    pub fn to_triangle2(&self, field: &str) -> Result<Triangle2, DocError> {
        let a = parse_point2(&self.a, &format!("{field}.A"))?;
        let b = parse_point2(&self.b, &format!("{field}.B"))?;
        let c = parse_point2(&self.c, &format!("{field}.C"))?;
        Triangle2::new(a, b, c).map_err(|e| DocError::new(field, e.to_string()))
    }

    pub fn to_triangle3(&self, field: &str) -> Result<Triangle3, DocError> {
        let a = parse_point3(&self.a, &format!("{field}.A"))?;
        let b = parse_point3(&self.b, &format!("{field}.B"))?;
        let c = parse_point3(&self.c, &format!("{field}.C"))?;
        Triangle3::new(a, b, c).map_err(|e| DocError::new(field, e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDocument {
    #[serde(default = "default_schema")]
    pub schema: String,
    pub triangle1: TriangleDoc,
    pub triangle2: TriangleDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

fn default_schema() -> String {
    SCHEMA.to_string()
}

fn json_error(e: serde_json::Error) -> DocError {
    // serde_json names missing or unknown fields in its message.
    DocError::new("document", e.to_string())
}

fn check_schema(schema: &str) -> Result<(), DocError> {
    if schema != SCHEMA {
        return Err(DocError::new(
            "schema",
            format!("unsupported schema {schema:?}, expected {SCHEMA:?}"),
        ));
    }
    Ok(())
}

impl PairDocument {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        let doc: PairDocument = serde_json::from_str(text).map_err(json_error)?;
        check_schema(&doc.schema)?;
        Ok(doc)
    }

    pub fn from_pair(pair: &TrianglePair, metadata: Option<serde_json::Value>) -> Self {
        PairDocument {
            schema: SCHEMA.to_string(),
            triangle1: TriangleDoc::from_triangle2(&pair.t1),
            triangle2: TriangleDoc::from_triangle2(&pair.t2),
            metadata,
        }
    }

    pub fn from_pair3(t1: &Triangle3, t2: &Triangle3, metadata: Option<serde_json::Value>) -> Self {
        PairDocument {
            schema: SCHEMA.to_string(),
            triangle1: TriangleDoc::from_triangle3(t1),
            triangle2: TriangleDoc::from_triangle3(t2),
            metadata,
        }
    }

    pub fn dimension(&self) -> Result<usize, DocError> {
        let d1 = self
            .triangle1
            .dimension()
            .ok_or_else(|| DocError::new("triangle1", "vertices have mixed dimensions"))?;
        let d2 = self
            .triangle2
            .dimension()
            .ok_or_else(|| DocError::new("triangle2", "vertices have mixed dimensions"))?;
        match (d1, d2) {
            (2, 2) => Ok(2),
            (3, 3) => Ok(3),
            (a, b) if a == b => Err(DocError::new(
                "triangle1.A",
                format!("unsupported dimension {a}"),
            )),
            _ => Err(DocError::new(
                "triangle2",
                "dimension differs from triangle1",
            )),
        }
    }

    pub fn to_pair(&self) -> Result<TrianglePair, DocError> {
        Ok(TrianglePair::new(
            self.triangle1.to_triangle2("triangle1")?,
            self.triangle2.to_triangle2("triangle2")?,
        ))
    }

    pub fn to_pair3(&self) -> Result<(Triangle3, Triangle3), DocError> {
        Ok((
            self.triangle1.to_triangle3("triangle1")?,
            self.triangle2.to_triangle3("triangle2")?,
        ))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Single-triangle input for constructions. Accepts `triangle`, or a pair
/// document's `triangle1`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct TriangleDocument {
    #[serde(default = "default_schema")]
    pub schema: String,
    #[serde(default)]
    pub triangle: Option<TriangleDoc>,
    #[serde(default)]
    pub triangle1: Option<TriangleDoc>,
}

impl TriangleDocument {
    pub fn parse(text: &str) -> Result<Triangle2, DocError> {
        let doc: TriangleDocument = serde_json::from_str(text).map_err(json_error)?;
        check_schema(&doc.schema)?;
        match (&doc.triangle, &doc.triangle1) {
            (Some(t), _) => t.to_triangle2("triangle"),
            (None, Some(t)) => t.to_triangle2("triangle1"),
            (None, None) => Err(DocError::new("triangle", "missing field")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HPointDoc {
    Finite([String; 2]),
    /// Direction of a point at infinity.
    Infinite([String; 2]),
}

impl From<&HPoint> for HPointDoc {
    fn from(h: &HPoint) -> Self {
        let [x, y, _] = h.coordinates();
        let pair = [format_rational(x), format_rational(y)];
        if h.is_finite() {
            HPointDoc::Finite(pair)
        } else {
            HPointDoc::Infinite(pair)
        }
    }
}

impl fmt::Display for HPointDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HPointDoc::Finite([x, y]) => write!(f, "{x},{y}"),
            HPointDoc::Infinite([x, y]) => write!(f, "infinity({x},{y})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthologyEntryDoc {
    pub correspondence: Correspondence,
    pub deficit: String,
    pub orthologic: bool,
    pub center: Option<HPointDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub issue: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthologyReportDoc {
    pub k_count: usize,
    pub k_count_cyclic: usize,
    pub entries: Vec<OrthologyEntryDoc>,
}

impl From<&OrthologyEntry> for OrthologyEntryDoc {
    fn from(e: &OrthologyEntry) -> Self {
        OrthologyEntryDoc {
            correspondence: e.correspondence,
            deficit: format_rational(&e.deficit),
            orthologic: e.orthologic,
            center: e.center.as_ref().map(HPointDoc::from),
            issue: e.issue.map(|i| i.name().to_string()),
        }
    }
}

impl From<&OrthologyReport> for OrthologyReportDoc {
    fn from(r: &OrthologyReport) -> Self {
        OrthologyReportDoc {
            k_count: r.k_count,
            k_count_cyclic: r.cyclic_count(),
            entries: r.entries.iter().map(OrthologyEntryDoc::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyEntryDoc {
    pub correspondence: Correspondence,
    pub homological: bool,
    pub perspector: Option<HPointDoc>,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReportDoc {
    pub k_count: usize,
    pub k_count_cyclic: usize,
    pub entries: Vec<HomologyEntryDoc>,
}

impl From<&HomologyEntry> for HomologyEntryDoc {
    fn from(e: &HomologyEntry) -> Self {
        HomologyEntryDoc {
            correspondence: e.correspondence,
            homological: e.homological,
            perspector: e.perspector.as_ref().map(HPointDoc::from),
            degenerate: e.degenerate,
        }
    }
}

impl From<&HomologyReport> for HomologyReportDoc {
    fn from(r: &HomologyReport) -> Self {
        HomologyReportDoc {
            k_count: r.k_count,
            k_count_cyclic: r.cyclic_count(),
            entries: r.entries.iter().map(HomologyEntryDoc::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproxPointDoc {
    pub x: f64,
    pub y: f64,
    pub tol: f64,
    pub approx: bool,
}

impl From<&ApproxPoint> for ApproxPointDoc {
    fn from(p: &ApproxPoint) -> Self {
        ApproxPointDoc {
            x: p.x,
            y: p.y,
            tol: p.tol,
            approx: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleDoc {
    pub center: PointDoc,
    pub radius_squared: String,
}

impl From<&Circle> for CircleDoc {
    fn from(c: &Circle) -> Self {
        CircleDoc {
            center: point_doc(&c.center),
            radius_squared: format_rational(&c.radius_squared),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = r#"{
        "schema": "orthology-lab/1",
        "triangle1": {"A": [0, 0], "B": ["4", "0/1"], "C": [1, 3]},
        "triangle2": {"A": ["5/2", "3/2"], "B": ["1/2", "3/2"], "C": ["2", 0]}
    }"#;

    #[test]
    fn parses_mixed_rational_forms() {
        let doc = PairDocument::parse(WORKED).unwrap();
        assert_eq!(doc.dimension(), Ok(2));
        let pair = doc.to_pair().unwrap();
        assert_eq!(pair.t1.b(), &Point2::from_ints(4, 0));
    }

    #[test]
    fn canonical_round_trip() {
        let pair = PairDocument::parse(WORKED).unwrap().to_pair().unwrap();
        let doc = PairDocument::from_pair(&pair, None);
        let text = doc.to_json();
        let again = PairDocument::parse(&text).unwrap();
        assert_eq!(again, doc);
        assert!(text.contains("\"5/2\"") && text.contains("\"0/1\""));
    }

    #[test]
    fn errors_name_the_field() {
        let bad = WORKED.replace("\"4\"", "\"1/0\"");
        let err = PairDocument::parse(&bad).unwrap().to_pair().unwrap_err();
        assert_eq!(err.field, "triangle1.B[0]");
        assert!(err.message.contains("zero denominator"), "{err}");

        let collinear = WORKED.replace("[1, 3]", "[8, 0]");
        let err = PairDocument::parse(&collinear)
            .unwrap()
            .to_pair()
            .unwrap_err();
        assert_eq!(err.field, "triangle1");

        let err =
            PairDocument::parse(r#"{"triangle1": {"A":[0,0],"B":[1,0],"C":[0,1]}}"#).unwrap_err();
        assert!(err.message.contains("triangle2"), "{err}");

        let err = PairDocument::parse(&WORKED.replace("orthology-lab/1", "other/9")).unwrap_err();
        assert_eq!(err.field, "schema");

        let err = PairDocument::parse(&WORKED.replace("[1, 3]", "[1.5, 3]")).unwrap_err();
        assert!(err.message.contains("floating-point"), "{err}");

        let short = WORKED.replace("[1, 3]", "[1]");
        let err = PairDocument::parse(&short)
            .unwrap()
            .dimension()
            .unwrap_err();
        assert_eq!(err.field, "triangle1");
    }

    #[test]
    fn construct_input_accepts_either_key() {
        let t = TriangleDocument::parse(WORKED).unwrap();
        assert_eq!(t.a(), &Point2::origin());
        let single = r#"{"triangle": {"A": [0,0], "B": [2,0], "C": [0,2]}}"#;
        assert_eq!(
            TriangleDocument::parse(single).unwrap().b(),
            &Point2::from_ints(2, 0)
        );
        let err = TriangleDocument::parse("{}").unwrap_err();
        assert_eq!(err.field, "triangle");
    }
}
