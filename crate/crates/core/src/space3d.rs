//! Spatial analogs: the deficit with 3-component dot products and two
//! readings of "perpendicular from a vertex onto the opposite image side".
//!
//! * Plane reading: `{X : (X - A)·(c1 - b1) = 0}` is a plane; the three
//!   planes are intersected.
//! * Line reading: the unique line through `A` meeting line `b1c1` at a right
//!   angle; the three lines are tested for a common point.
//!
//! The three plane normals are the side vectors of the image triangle and
//! sum to zero, so the plane reading never yields a unique point: the planes
//! share a line exactly when the deficit vanishes.

use std::ops::{Add, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{Point2, Triangle2};
use crate::linalg::Echelon;
use crate::orthology::{images_of, Correspondence};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec3 {
    pub dx: Rational,
    pub dy: Rational,
    pub dz: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        use crate::rational::int;
        Point3::new(int(x), int(y), int(z))
    }

    pub fn origin() -> Self {
        Point3::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn to_vec(&self) -> Vec3 {
        Vec3::new(self.x.clone(), self.y.clone(), self.z.clone())
    }
}

impl Vec3 {
    pub fn new(dx: Rational, dy: Rational, dz: Rational) -> Self {
        Vec3 { dx, dy, dz }
    }

    pub fn from_ints(dx: i64, dy: i64, dz: i64) -> Self {
        use crate::rational::int;
        Vec3::new(int(dx), int(dy), int(dz))
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero() && self.dz.is_zero()
    }

    pub fn dot(&self, o: &Vec3) -> Rational {
        &self.dx * &o.dx + &self.dy * &o.dy + &self.dz * &o.dz
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3::new(
            &self.dy * &o.dz - &self.dz * &o.dy,
            &self.dz * &o.dx - &self.dx * &o.dz,
            &self.dx * &o.dy - &self.dy * &o.dx,
        )
    }

    pub fn scale(&self, k: &Rational) -> Vec3 {
        Vec3::new(&self.dx * k, &self.dy * k, &self.dz * k)
    }

    fn components(&self) -> [&Rational; 3] {
        [&self.dx, &self.dy, &self.dz]
    }
}

impl Sub for &Point3 {
    type Output = Vec3;
    fn sub(self, o: &Point3) -> Vec3 {
        Vec3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Add<&Vec3> for &Point3 {
    type Output = Point3;
    fn add(self, v: &Vec3) -> Point3 {
        Point3::new(&self.x + &v.dx, &self.y + &v.dy, &self.z + &v.dz)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangle3 {
    vertices: [Point3; 3],
}

impl Triangle3 {
    pub fn new(a: Point3, b: Point3, c: Point3) -> Result<Self> {
        if (&b - &a).cross(&(&c - &a)).is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Triangle3 {
            vertices: [a, b, c],
        })
    }

    pub fn vertices(&self) -> &[Point3; 3] {
        &self.vertices
    }

    pub fn translate(&self, v: &Vec3) -> Triangle3 {
        Triangle3 {
            vertices: self.vertices.clone().map(|p| &p + v),
        }
    }

    pub fn normal(&self) -> Vec3 {
        let [a, b, c] = &self.vertices;
        (b - a).cross(&(c - a))
    }
}

/// `anchor + t·direction`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line3 {
    pub anchor: Point3,
    pub direction: Vec3,
}

impl Line3 {
    pub fn new(anchor: Point3, direction: Vec3) -> Result<Self> {
        if direction.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(Line3 { anchor, direction })
    }

    pub fn through(p: &Point3, q: &Point3) -> Result<Self> {
        if p == q {
            return Err(Error::CoincidentPoints);
        }
        Line3::new(p.clone(), q - p)
    }

    pub fn contains(&self, p: &Point3) -> bool {
        (p - &self.anchor).cross(&self.direction).is_zero()
    }
}

pub fn embed(p: &Point2) -> Point3 {
    Point3::new(p.x.clone(), p.y.clone(), Rational::zero())
}

pub fn embed_triangle(t: &Triangle2) -> Triangle3 {
    let [a, b, c] = t.vertices().each_ref().map(embed);
    Triangle3::new(a, b, c).expect("proper planar triangle embeds properly")
}

pub fn deficit3_points(
    src: &[Point3; 3],
    dst: &[Point3; 3],
    corr: Correspondence,
    m: &Point3,
) -> Rational {
    let [a1, b1, c1] = images_of(dst, corr);
    let sides = [c1 - b1, a1 - c1, b1 - a1];
    src.iter()
        .zip(&sides)
        .map(|(p, s)| (p - m).dot(s))
        .fold(Rational::zero(), |acc, v| acc + v)
}

pub fn deficit3(t1: &Triangle3, t2: &Triangle3, corr: Correspondence, m: &Point3) -> Rational {
    deficit3_points(t1.vertices(), t2.vertices(), corr, m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneMeet {
    Unique(Point3),
    /// The normal matrix has `rank < 3`; `consistent` says whether the
    /// planes still share a common line or point set.
    NoUniquePoint {
        rank: usize,
        consistent: bool,
    },
}

pub fn normal_plane_meet(
    t1: &Triangle3,
    t2: &Triangle3,
    corr: Correspondence,
) -> Result<PlaneMeet> {
    let [a1, b1, c1] = images_of(t2.vertices(), corr);
    let normals = [c1 - b1, a1 - c1, b1 - a1];
    if normals.iter().any(Vec3::is_zero) {
        return Err(Error::ZeroDirection);
    }
    let rows: Vec<Vec<Rational>> = normals
        .iter()
        .map(|n| n.components().map(Clone::clone).to_vec())
        .collect();
    let rhs: Vec<Rational> = normals
        .iter()
        .zip(t1.vertices())
        .map(|(n, p)| n.dot(&p.to_vec()))
        .collect();
    let e = Echelon::reduce(rows, rhs);
    if e.rank() == 3 {
        let [x, y, z]: [Rational; 3] = e
            .solve_with(&[])
            .expect("full rank is consistent")
            .try_into()
            .expect("three unknowns");
        Ok(PlaneMeet::Unique(Point3::new(x, y, z)))
    } else {
        Ok(PlaneMeet::NoUniquePoint {
            rank: e.rank(),
            consistent: e.is_consistent(),
        })
    }
}

/// Foot of the perpendicular from `p` onto line `seg_a seg_b`.
pub fn foot_point(p: &Point3, seg_a: &Point3, seg_b: &Point3) -> Result<Point3> {
    if seg_a == seg_b {
        return Err(Error::CoincidentPoints);
    }
    let d = seg_b - seg_a;
    let t = (p - seg_a).dot(&d) / d.dot(&d);
    Ok(seg_a + &d.scale(&t))
}

/// The line through `p` meeting line `seg_a seg_b` at a right angle,
/// anchored at `p` and pointing at the foot.
pub fn foot_perpendicular_line(p: &Point3, seg_a: &Point3, seg_b: &Point3) -> Result<Line3> {
    let f = foot_point(p, seg_a, seg_b)?;
    if &f == p {
        return Err(Error::PointOnLine);
    }
    Line3::new(p.clone(), &f - p)
}

/// Feet-line pencil from `A, B, C` onto the image sides.
pub fn foot_lines(t1: &Triangle3, t2: &Triangle3, corr: Correspondence) -> Result<[Line3; 3]> {
    let [a1, b1, c1] = images_of(t2.vertices(), corr);
    let [a, b, c] = t1.vertices();
    Ok([
        foot_perpendicular_line(a, b1, c1)?,
        foot_perpendicular_line(b, c1, a1)?,
        foot_perpendicular_line(c, a1, b1)?,
    ])
}

/// Finite intersection point of two lines, if they meet in exactly one
/// point.
pub fn meet3(l1: &Line3, l2: &Line3) -> Option<Point3> {
    let n = l1.direction.cross(&l2.direction);
    if n.is_zero() {
        return None;
    }
    let w = &l2.anchor - &l1.anchor;
    if !w.dot(&n).is_zero() {
        return None; // skew
    }
    let t = w.cross(&l2.direction).dot(&n) / n.dot(&n);
    Some(&l1.anchor + &l1.direction.scale(&t))
}

/// Common point of three lines, `None` when any pair is skew or parallel or
/// the third line misses the meet of the first two.
pub fn three_lines_concurrent3(l1: &Line3, l2: &Line3, l3: &Line3) -> Option<Point3> {
    let p = meet3(l1, l2).or_else(|| meet3(l1, l3))?;
    (l1.contains(&p) && l2.contains(&p) && l3.contains(&p)).then_some(p)
}

/// Vertex-to-image lines in space.
pub fn cevian_lines3(t1: &Triangle3, t2: &Triangle3, corr: Correspondence) -> Result<[Line3; 3]> {
    let img = images_of(t2.vertices(), corr);
    let src = t1.vertices();
    let line = |i: usize| Line3::through(&src[i], img[i]).map_err(|_| Error::DegenerateCevian);
    Ok([line(0)?, line(1)?, line(2)?])
}

/// Three lines sharing one direction (a common point at infinity).
pub fn all_parallel(lines: &[Line3; 3]) -> bool {
    lines[0].direction.cross(&lines[1].direction).is_zero()
        && lines[0].direction.cross(&lines[2].direction).is_zero()
}

pub fn coplanar(t1: &Triangle3, t2: &Triangle3) -> bool {
    let n = t1.normal();
    let a = &t1.vertices()[0];
    t2.vertices().iter().all(|p| (p - a).dot(&n).is_zero())
}
