//! Named triangle constructions.
//!
//! Everything expressible over the rationals is exact. The incenter and arc
//! midpoints need square roots and live in [`approx`].

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{
    dot, intersect_lines, midpoint, perpendicular_through, Intersection, Line2, Point2, Triangle2,
};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    pub center: Point2,
    pub radius_squared: Rational,
}

impl Circle {
    pub fn new(center: Point2, radius_squared: Rational) -> Result<Self> {
        if !radius_squared.is_positive() {
            return Err(Error::InvariantViolated(
                "radius_squared must be positive".into(),
            ));
        }
        Ok(Circle {
            center,
            radius_squared,
        })
    }

    /// `|p - center|² - r²`: negative inside, zero on, positive outside.
    pub fn power(&self, p: &Point2) -> Rational {
        (p - &self.center).norm_squared() - &self.radius_squared
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.power(p).is_zero()
    }
}

/// Medial triangle: `A1 = mid(B, C)`, `B1 = mid(C, A)`, `C1 = mid(A, B)`.
pub fn complementary_triangle(t: &Triangle2) -> Triangle2 {
    let [a, b, c] = t.vertices();
    Triangle2::new(midpoint(b, c), midpoint(c, a), midpoint(a, b))
        .expect("medial triangle of a proper triangle is proper")
}

fn meet(l1: &Line2, l2: &Line2) -> Point2 {
    match intersect_lines(l1, l2) {
        Intersection::Point(h) => h
            .to_point()
            .expect("non-parallel lines of a proper triangle meet finitely"),
        Intersection::Coincident => unreachable!("distinct lines of a proper triangle"),
    }
}

pub fn altitude(t: &Triangle2, i: usize) -> Line2 {
    let (p, q) = t.side(i);
    perpendicular_through(&t.vertices()[i], &(q - p)).expect("proper triangle side")
}

pub fn orthocenter(t: &Triangle2) -> Point2 {
    let h = meet(&altitude(t, 0), &altitude(t, 1));
    debug_assert!(altitude(t, 2).contains(&h));
    h
}

pub fn perpendicular_bisector(p: &Point2, q: &Point2) -> Result<Line2> {
    if p == q {
        return Err(Error::CoincidentPoints);
    }
    perpendicular_through(&midpoint(p, q), &(q - p))
}

pub fn circumcenter(t: &Triangle2) -> Point2 {
    let [a, b, c] = t.vertices();
    let l1 = perpendicular_bisector(b, c).expect("distinct vertices");
    let l2 = perpendicular_bisector(c, a).expect("distinct vertices");
    let o = meet(&l1, &l2);
    debug_assert!(perpendicular_bisector(a, b).unwrap().contains(&o));
    o
}

pub fn circumcircle(t: &Triangle2) -> Circle {
    let center = circumcenter(t);
    let radius_squared = (t.a() - &center).norm_squared();
    Circle {
        center,
        radius_squared,
    }
}

/// Second point where the line `on, through` meets `circle`, given that `on`
/// already lies on it. With `X = on + t·(through - on)` the known root is
/// `t = 0`, so the other root `t = -2 (on - O)·v / |v|²` is rational.
pub fn second_circle_intersection(
    circle: &Circle,
    on: &Point2,
    through: &Point2,
) -> Result<Point2> {
    if on == through {
        return Err(Error::CoincidentPoints);
    }
    if !circle.contains(on) {
        return Err(Error::PointNotOnCircle);
    }
    let v = through - on;
    let t = -(int(2) * dot(&(on - &circle.center), &v)) / v.norm_squared();
    if t.is_zero() {
        return Err(Error::TangentLine);
    }
    Ok(on + &v.scale(&t))
}

/// Second intersections of the cevians `AD`, `BD`, `CD` with the
/// circumcircle.
pub fn circum_pedal_triangle(t: &Triangle2, d: &Point2) -> Result<Triangle2> {
    if t.vertices().contains(d) {
        return Err(Error::VertexPoint);
    }
    let circle = circumcircle(t);
    if !circle.power(d).is_negative() {
        return Err(Error::OutsideOrOnCircle);
    }
    let [a1, b1, c1] = [0, 1, 2].map(|i| second_circle_intersection(&circle, &t.vertices()[i], d));
    Triangle2::new(a1?, b1?, c1?)
}

/// Floating-point layer for square-root constructions.
///
/// Values here carry an absolute tolerance and are never mixed into exact
/// predicates.
pub mod approx {
    use super::*;

    /// Default tolerance factor, multiplied by the triangle diameter.
    pub const DEFAULT_REL_TOL: f64 = 1e-9;

    #[derive(Debug, Clone, Copy, PartialEq)]
    pub struct ApproxPoint {
        pub x: f64,
        pub y: f64,
        pub tol: f64,
    }

    impl ApproxPoint {
        pub fn new(x: f64, y: f64, tol: f64) -> Self {
            assert!(tol > 0.0, "tolerance must be positive");
            ApproxPoint { x, y, tol }
        }

        pub fn distance(&self, x: f64, y: f64) -> f64 {
            (self.x - x).hypot(self.y - y)
        }

        pub fn approx_eq(&self, x: f64, y: f64) -> bool {
            self.distance(x, y) <= self.tol
        }
    }

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub enum Side {
        BC,
        CA,
        AB,
    }

    impl Side {
        pub fn opposite_vertex(self) -> usize {
            match self {
                Side::BC => 0,
                Side::CA => 1,
                Side::AB => 2,
            }
        }
    }

    pub(crate) fn vertices_f64(t: &Triangle2) -> [(f64, f64); 3] {
        [t.a().to_f64(), t.b().to_f64(), t.c().to_f64()]
    }

    fn dist(p: (f64, f64), q: (f64, f64)) -> f64 {
        (p.0 - q.0).hypot(p.1 - q.1)
    }

    pub fn diameter(t: &Triangle2) -> f64 {
        let [a, b, c] = vertices_f64(t);
        dist(a, b).max(dist(b, c)).max(dist(c, a))
    }

    pub fn default_tol(t: &Triangle2) -> f64 {
        DEFAULT_REL_TOL * diameter(t)
    }

    pub fn incenter_approx(t: &Triangle2) -> ApproxPoint {
        incenter_approx_with_tol(t, default_tol(t))
    }

    /// `(a·A + b·B + c·C) / (a + b + c)` with `a, b, c` the opposite side
    /// lengths.
    pub fn incenter_approx_with_tol(t: &Triangle2, tol: f64) -> ApproxPoint {
        let [pa, pb, pc] = vertices_f64(t);
        let (a, b, c) = (dist(pb, pc), dist(pc, pa), dist(pa, pb));
        let s = a + b + c;
        ApproxPoint::new(
            (a * pa.0 + b * pb.0 + c * pc.0) / s,
            (a * pa.1 + b * pb.1 + c * pc.1) / s,
            tol,
        )
    }

    /// Midpoint of the arc cut off by `side` that does not contain the
    /// opposite vertex.
    pub fn arc_midpoint_approx(t: &Triangle2, side: Side) -> ApproxPoint {
        let i = side.opposite_vertex();
        let (p, q) = t.side(i);
        let circle = circumcircle(t);
        let (ox, oy) = circle.center.to_f64();
        let r = crate::rational::to_f64(&circle.radius_squared).sqrt();
        let (px, py) = p.to_f64();
        let (qx, qy) = q.to_f64();
        let (dx, dy) = (qx - px, qy - py);
        let len = dx.hypot(dy);
        let (nx, ny) = (-dy / len, dx / len);
        // The side-of-line sign is exact.
        let opposite_sign = crate::geometry::orientation(p, q, &t.vertices()[i]).signum();
        // orientation(p, q, p + n) has the sign of cross(q - p, n) = len > 0.
        let k = if opposite_sign.is_positive() { -r } else { r };
        ApproxPoint::new(ox + k * nx, oy + k * ny, default_tol(t))
    }

    fn second_intersection_f64(o: (f64, f64), on: (f64, f64), through: (f64, f64)) -> (f64, f64) {
        let v = (through.0 - on.0, through.1 - on.1);
        let w = (on.0 - o.0, on.1 - o.1);
        let t = -2.0 * (w.0 * v.0 + w.1 * v.1) / (v.0 * v.0 + v.1 * v.1);
        (on.0 + t * v.0, on.1 + t * v.1)
    }

    /// Circum-pedal triangle of an approximate point, in binary64.
    pub fn circum_pedal_approx(t: &Triangle2, d: &ApproxPoint) -> [ApproxPoint; 3] {
        let o = circumcenter(t).to_f64();
        let tol = default_tol(t);
        vertices_f64(t).map(|v| {
            let (x, y) = second_intersection_f64(o, v, (d.x, d.y));
            ApproxPoint::new(x, y, tol)
        })
    }

    /// Distance from `(x, y)` to the line through `p` and `q`.
    pub fn distance_to_line(x: f64, y: f64, p: (f64, f64), q: (f64, f64)) -> f64 {
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        ((x - p.0) * dy - (y - p.1) * dx).abs() / dx.hypot(dy)
    }

    /// Distance from `target` to the line through `from` perpendicular to
    /// `p q`.
    pub fn distance_to_perpendicular(
        target: (f64, f64),
        from: (f64, f64),
        p: (f64, f64),
        q: (f64, f64),
    ) -> f64 {
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        ((target.0 - from.0) * dx + (target.1 - from.1) * dy).abs() / dx.hypot(dy)
    }
}
