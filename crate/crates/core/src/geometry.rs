//! Exact planar primitives: points, vectors, homogeneous lines and points,
//! and the determinant predicates the rest of the crate builds on.
//!
//! Every predicate here is an exact zero-test over [`Rational`]. Lines and
//! points at infinity are stored in a canonical form so that structural
//! equality coincides with geometric equality.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec2 {
    pub dx: Rational,
    pub dy: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(int(x), int(y))
    }

    pub fn origin() -> Self {
        Point2::new(Rational::zero(), Rational::zero())
    }

    /// Position vector from the origin.
    pub fn to_vec(&self) -> Vec2 {
        Vec2::new(self.x.clone(), self.y.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            crate::rational::to_f64(&self.x),
            crate::rational::to_f64(&self.y),
        )
    }
}

impl Vec2 {
    pub fn new(dx: Rational, dy: Rational) -> Self {
        Vec2 { dx, dy }
    }

    pub fn from_ints(dx: i64, dy: i64) -> Self {
        Vec2::new(int(dx), int(dy))
    }

    pub fn zero() -> Self {
        Vec2::new(Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Vec2 {
        Vec2::new(&self.dx * k, &self.dy * k)
    }

    pub fn norm_squared(&self) -> Rational {
        dot(self, self)
    }
}

pub fn dot(u: &Vec2, v: &Vec2) -> Rational {
    &u.dx * &v.dx + &u.dy * &v.dy
}

/// z-component of the planar cross product.
pub fn cross(u: &Vec2, v: &Vec2) -> Rational {
    &u.dx * &v.dy - &u.dy * &v.dx
}

impl Sub for &Point2 {
    type Output = Vec2;
    fn sub(self, rhs: &Point2) -> Vec2 {
        Vec2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Add<&Vec2> for &Point2 {
    type Output = Point2;
    fn add(self, rhs: &Vec2) -> Point2 {
        Point2::new(&self.x + &rhs.dx, &self.y + &rhs.dy)
    }
}

impl Add for &Vec2 {
    type Output = Vec2;
    fn add(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.dx + &rhs.dx, &self.dy + &rhs.dy)
    }
}

impl Sub for &Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.dx - &rhs.dx, &self.dy - &rhs.dy)
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-&self.dx, -&self.dy)
    }
}

impl Mul<&Rational> for &Vec2 {
    type Output = Vec2;
    fn mul(self, k: &Rational) -> Vec2 {
        self.scale(k)
    }
}

/// Scales a rational tuple to coprime integers whose first nonzero entry is
/// positive. The tuple must not be all zero.
pub(crate) fn canonical_integer_tuple<const N: usize>(values: [Rational; N]) -> [Rational; N] {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: [BigInt; N] =
        std::array::from_fn(|i| (values[i].numer() * (&lcm / values[i].denom())).clone());
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    debug_assert!(!gcd.is_zero());
    let negate = ints
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(|v| v.is_negative());
    for v in ints.iter_mut() {
        *v = &*v / &gcd;
        if negate {
            *v = -&*v;
        }
    }
    ints.map(Rational::from_integer)
}

/// A line `a·x + b·y + c = 0` in canonical projective form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line2 {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl Line2 {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let [a, b, c] = canonical_integer_tuple([a, b, c]);
        Ok(Line2 { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Line2::new(int(a), int(b), int(c))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn coefficients(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Signed residual `a·x + b·y + c`.
    pub fn eval(&self, p: &Point2) -> Rational {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.eval(p).is_zero()
    }

    pub fn contains_h(&self, p: &HPoint) -> bool {
        (&self.a * &p.x + &self.b * &p.y + &self.c * &p.w).is_zero()
    }

    /// Direction vector along the line.
    pub fn direction(&self) -> Vec2 {
        Vec2::new(-&self.b, self.a.clone())
    }
}

/// Homogeneous point `(x, y, w)`; `w = 0` is a point at infinity.
///
/// Canonical form: finite points have `w = 1`, directions are coprime
/// integers with the first nonzero component positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPoint {
    x: Rational,
    y: Rational,
    w: Rational,
}

impl HPoint {
    pub fn new(x: Rational, y: Rational, w: Rational) -> Result<Self> {
        if w.is_zero() {
            if x.is_zero() && y.is_zero() {
                return Err(Error::ZeroDirection);
            }
            let [x, y] = canonical_integer_tuple([x, y]);
            Ok(HPoint { x, y, w })
        } else {
            Ok(HPoint {
                x: &x / &w,
                y: &y / &w,
                w: Rational::one(),
            })
        }
    }

    pub fn finite(p: Point2) -> Self {
        HPoint {
            x: p.x,
            y: p.y,
            w: Rational::one(),
        }
    }

    pub fn at_infinity(direction: &Vec2) -> Result<Self> {
        HPoint::new(direction.dx.clone(), direction.dy.clone(), Rational::zero())
    }

    pub fn is_finite(&self) -> bool {
        !self.w.is_zero()
    }

    pub fn to_point(&self) -> Option<Point2> {
        self.is_finite()
            .then(|| Point2::new(self.x.clone(), self.y.clone()))
    }

    pub fn direction(&self) -> Option<Vec2> {
        (!self.is_finite()).then(|| Vec2::new(self.x.clone(), self.y.clone()))
    }

    pub fn coordinates(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.w]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection {
    Point(HPoint),
    Coincident,
}

pub fn line_through(p: &Point2, q: &Point2) -> Result<Line2> {
    if p == q {
        return Err(Error::CoincidentPoints);
    }
    let d = q - p;
    // Normal (dy, -dx) through p.
    let a = d.dy.clone();
    let b = -&d.dx;
    let c = -(&a * &p.x + &b * &p.y);
    Line2::new(a, b, c)
}

/// The line through `p` perpendicular to `direction`.
pub fn perpendicular_through(p: &Point2, direction: &Vec2) -> Result<Line2> {
    if direction.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let c = -dot(direction, &p.to_vec());
    Line2::new(direction.dx.clone(), direction.dy.clone(), c)
}

pub fn intersect_lines(l1: &Line2, l2: &Line2) -> Intersection {
    let x = &l1.b * &l2.c - &l1.c * &l2.b;
    let y = &l1.c * &l2.a - &l1.a * &l2.c;
    let w = &l1.a * &l2.b - &l1.b * &l2.a;
    match HPoint::new(x, y, w) {
        Ok(p) => Intersection::Point(p),
        Err(_) => Intersection::Coincident,
    }
}

pub fn det3(m: [[&Rational; 3]; 3]) -> Rational {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Exact concurrency of three pairwise distinct lines, counting a common
/// point at infinity (three parallels) as concurrent.
pub fn concurrent(l1: &Line2, l2: &Line2, l3: &Line2) -> Result<bool> {
    if l1 == l2 || l2 == l3 || l1 == l3 {
        return Err(Error::CoincidentLines);
    }
    Ok(det3([l1.coefficients(), l2.coefficients(), l3.coefficients()]).is_zero())
}

pub fn midpoint(p: &Point2, q: &Point2) -> Point2 {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    Point2::new((&p.x + &q.x) * &half, (&p.y + &q.y) * &half)
}

/// Twice the signed area of `pqr`.
pub fn orientation(p: &Point2, q: &Point2, r: &Point2) -> Rational {
    cross(&(q - p), &(r - p))
}

pub fn collinear(p: &Point2, q: &Point2, r: &Point2) -> bool {
    orientation(p, q, r).is_zero()
}

/// An ordered, non-collinear vertex triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangle2 {
    vertices: [Point2; 3],
}

impl Triangle2 {
    pub fn new(a: Point2, b: Point2, c: Point2) -> Result<Self> {
        if collinear(&a, &b, &c) {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Triangle2 {
            vertices: [a, b, c],
        })
    }

    pub fn from_ints(v: [(i64, i64); 3]) -> Result<Self> {
        let [a, b, c] = v.map(|(x, y)| Point2::from_ints(x, y));
        Triangle2::new(a, b, c)
    }

    pub fn a(&self) -> &Point2 {
        &self.vertices[0]
    }

    pub fn b(&self) -> &Point2 {
        &self.vertices[1]
    }

    pub fn c(&self) -> &Point2 {
        &self.vertices[2]
    }

    pub fn vertices(&self) -> &[Point2; 3] {
        &self.vertices
    }

    pub fn into_vertices(self) -> [Point2; 3] {
        self.vertices
    }

    pub fn centroid(&self) -> Point2 {
        let three = int(3);
        let [a, b, c] = &self.vertices;
        Point2::new((&a.x + &b.x + &c.x) / &three, (&a.y + &b.y + &c.y) / &three)
    }

    pub fn translate(&self, v: &Vec2) -> Triangle2 {
        Triangle2 {
            vertices: self.vertices.clone().map(|p| &p + v),
        }
    }

    /// Side opposite vertex `i`, as the pair of its endpoints.
    pub fn side(&self, i: usize) -> (&Point2, &Point2) {
        (&self.vertices[(i + 1) % 3], &self.vertices[(i + 2) % 3])
    }
}
