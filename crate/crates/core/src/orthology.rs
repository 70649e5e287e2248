//! Orthology deficits, predicates and centers.
//!
//! For a source triangle `ABC`, a target `A1B1C1` and a vertex
//! correspondence, the deficit is
//!
//! ```text
//! E(M) = MA·(c1 - b1) + MB·(a1 - c1) + MC·(b1 - a1)
//! ```
//!
//! where `a1, b1, c1` are the images of `A, B, C`. It does not depend on `M`
//! and vanishes exactly when the perpendiculars from `A, B, C` onto the image
//! sides are concurrent. The three cyclic deficits always sum to zero, which
//! is the algebraic content of "bi-orthologic implies tri-orthologic".

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{
    concurrent, dot, intersect_lines, perpendicular_through, HPoint, Intersection, Line2, Point2,
    Triangle2,
};
use crate::linalg::solve_unique;
use crate::rational::{int, Rational};
use crate::sampling::{rng_from_seed, sample_point, RESAMPLE_LIMIT};

/// A vertex bijection from the first triangle onto the second.
///
/// `S0` is `A→A1, B→B1, C→C1`; `S1` pairs `ABC` with `B1C1A1` and `S2` with
/// `C1A1B1`. The odd bijections `T0`, `T1`, `T2` fix `A`, `B`, `C`
/// respectively and swap the other two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Correspondence {
    S0,
    S1,
    S2,
    T0,
    T1,
    T2,
}

impl Correspondence {
    pub const ALL: [Correspondence; 6] = [
        Correspondence::S0,
        Correspondence::S1,
        Correspondence::S2,
        Correspondence::T0,
        Correspondence::T1,
        Correspondence::T2,
    ];

    pub const CYCLIC: [Correspondence; 3] =
        [Correspondence::S0, Correspondence::S1, Correspondence::S2];

    /// `images()[i]` is the index in the second triangle of the image of
    /// vertex `i` of the first.
    pub fn images(self) -> [usize; 3] {
        match self {
            Correspondence::S0 => [0, 1, 2],
            Correspondence::S1 => [1, 2, 0],
            Correspondence::S2 => [2, 0, 1],
            Correspondence::T0 => [0, 2, 1],
            Correspondence::T1 => [2, 1, 0],
            Correspondence::T2 => [1, 0, 2],
        }
    }

    fn from_images(images: [usize; 3]) -> Correspondence {
        *Correspondence::ALL
            .iter()
            .find(|c| c.images() == images)
            .expect("every permutation of three indices is a correspondence")
    }

    pub fn inverse(self) -> Correspondence {
        let img = self.images();
        let mut inv = [0; 3];
        for (i, &j) in img.iter().enumerate() {
            inv[j] = i;
        }
        Correspondence::from_images(inv)
    }

    /// Apply `other` first, then `self`, as index permutations.
    pub fn compose(self, other: Correspondence) -> Correspondence {
        let (f, g) = (self.images(), other.images());
        Correspondence::from_images([f[g[0]], f[g[1]], f[g[2]]])
    }

    pub fn is_cyclic(self) -> bool {
        matches!(
            self,
            Correspondence::S0 | Correspondence::S1 | Correspondence::S2
        )
    }

    /// Permutation sign: `+1` for the cyclic shifts, `-1` for the odd ones.
    pub fn sign(self) -> i64 {
        if self.is_cyclic() {
            1
        } else {
            -1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Correspondence::S0 => "σ0",
            Correspondence::S1 => "σ1",
            Correspondence::S2 => "σ2",
            Correspondence::T0 => "τ0",
            Correspondence::T1 => "τ1",
            Correspondence::T2 => "τ2",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Correspondence {
    type Err = Error;

    /// Accepts `σ0`, `s0`, `sigma0` and the `τ`/`t`/`tau` forms.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_lowercase();
        let bad = || Error::Parse(format!("unknown correspondence {s:?}"));
        let digit = lower.chars().last().ok_or_else(bad)?;
        let family = &lower[..lower.len() - digit.len_utf8()];
        let cyclic = match family {
            "σ" | "s" | "sigma" => true,
            "τ" | "t" | "tau" => false,
            _ => return Err(bad()),
        };
        let i = match digit {
            '0' => 0,
            '1' => 1,
            '2' => 2,
            _ => return Err(bad()),
        };
        Ok(if cyclic {
            Correspondence::CYCLIC[i]
        } else {
            Correspondence::ALL[3 + i]
        })
    }
}

impl serde::Serialize for Correspondence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> serde::Deserialize<'de> for Correspondence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered pair of proper triangles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrianglePair {
    pub t1: Triangle2,
    pub t2: Triangle2,
}

impl TrianglePair {
    pub fn new(t1: Triangle2, t2: Triangle2) -> Self {
        TrianglePair { t1, t2 }
    }

    pub fn swapped(&self) -> TrianglePair {
        TrianglePair::new(self.t2.clone(), self.t1.clone())
    }

    /// Images `(a1, b1, c1)` of `(A, B, C)` under `corr`.
    pub fn images(&self, corr: Correspondence) -> [&Point2; 3] {
        images_of(self.t2.vertices(), corr)
    }
}

pub(crate) fn images_of<T>(dst: &[T; 3], corr: Correspondence) -> [&T; 3] {
    corr.images().map(|j| &dst[j])
}

/// Deficit over raw vertex triples; neither triple needs to be proper.
pub fn deficit_points(
    src: &[Point2; 3],
    dst: &[Point2; 3],
    corr: Correspondence,
    m: &Point2,
) -> Rational {
    let [a1, b1, c1] = images_of(dst, corr);
    let sides = [c1 - b1, a1 - c1, b1 - a1];
    src.iter()
        .zip(sides.iter())
        .map(|(p, side)| dot(&(p - m), side))
        .fold(Rational::zero(), |acc, v| acc + v)
}

/// Deficit at the origin.
pub fn deficit(pair: &TrianglePair, corr: Correspondence) -> Rational {
    deficit_at(pair, corr, &Point2::origin())
}

pub fn deficit_at(pair: &TrianglePair, corr: Correspondence, m: &Point2) -> Rational {
    deficit_points(pair.t1.vertices(), pair.t2.vertices(), corr, m)
}

/// `E(M) - E(N)`; always zero.
pub fn drift(pair: &TrianglePair, corr: Correspondence, m: &Point2, n: &Point2) -> Rational {
    deficit_at(pair, corr, m) - deficit_at(pair, corr, n)
}

pub fn is_orthologic(pair: &TrianglePair, corr: Correspondence) -> bool {
    deficit(pair, corr).is_zero()
}

pub fn pencil_points(
    src: &[Point2; 3],
    dst: &[Point2; 3],
    corr: Correspondence,
) -> Result<[Line2; 3]> {
    let [a1, b1, c1] = images_of(dst, corr);
    Ok([
        perpendicular_through(&src[0], &(c1 - b1))?,
        perpendicular_through(&src[1], &(a1 - c1))?,
        perpendicular_through(&src[2], &(b1 - a1))?,
    ])
}

/// Perpendiculars from `A, B, C` onto the image sides `b1c1, c1a1, a1b1`.
pub fn perpendicular_pencil(pair: &TrianglePair, corr: Correspondence) -> Result<[Line2; 3]> {
    pencil_points(pair.t1.vertices(), pair.t2.vertices(), corr)
}

/// Concurrency verdict computed from the pencil determinant alone, without
/// touching the deficit. `Err` when the pencil is not well-posed.
pub fn pencil_concurrent(pair: &TrianglePair, corr: Correspondence) -> Result<bool> {
    let [l1, l2, l3] = perpendicular_pencil(pair, corr)?;
    concurrent(&l1, &l2, &l3)
}

pub fn center_points(src: &[Point2; 3], dst: &[Point2; 3], corr: Correspondence) -> Result<HPoint> {
    if !deficit_points(src, dst, corr, &Point2::origin()).is_zero() {
        return Err(Error::NotOrthologic(corr.name()));
    }
    let lines = pencil_points(src, dst, corr)?;
    let (i, j, k) = match (
        lines[0] == lines[1],
        lines[1] == lines[2],
        lines[0] == lines[2],
    ) {
        (true, true, _) => return Err(Error::PencilDegenerate),
        (true, false, _) => (0, 2, 1),
        _ => (0, 1, 2),
    };
    let Intersection::Point(center) = intersect_lines(&lines[i], &lines[j]) else {
        return Err(Error::PencilDegenerate);
    };
    if !lines[k].contains_h(&center) {
        return Err(Error::InvariantViolated(
            "zero deficit but third perpendicular misses the center".into(),
        ));
    }
    Ok(center)
}

pub fn orthology_center(pair: &TrianglePair, corr: Correspondence) -> Result<HPoint> {
    center_points(pair.t1.vertices(), pair.t2.vertices(), corr)
}

/// `E_σ0(M) + E_σ1(M) + E_σ2(M)`; always zero.
pub fn cyclic_deficit_sum(pair: &TrianglePair, m: &Point2) -> Rational {
    Correspondence::CYCLIC
        .iter()
        .map(|&c| deficit_at(pair, c, m))
        .fold(Rational::zero(), |acc, v| acc + v)
}

pub fn is_biorthologic(pair: &TrianglePair) -> bool {
    is_orthologic(pair, Correspondence::S0) && is_orthologic(pair, Correspondence::S1)
}

/// Orthology under `σ2` for a bi-orthologic pair.
pub fn pantazi_verdict(pair: &TrianglePair) -> Result<bool> {
    if !is_biorthologic(pair) {
        return Err(Error::NotBiorthologic);
    }
    Ok(is_orthologic(pair, Correspondence::S2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PencilIssue {
    ZeroDirection,
    PencilDegenerate,
}

impl PencilIssue {
    pub fn name(self) -> &'static str {
        match self {
            PencilIssue::ZeroDirection => "zero_direction",
            PencilIssue::PencilDegenerate => "pencil_degenerate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthologyEntry {
    pub correspondence: Correspondence,
    pub deficit: Rational,
    pub orthologic: bool,
    pub center: Option<HPoint>,
    pub issue: Option<PencilIssue>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthologyReport {
    /// One entry per correspondence, in [`Correspondence::ALL`] order.
    pub entries: Vec<OrthologyEntry>,
    pub k_count: usize,
}

impl OrthologyReport {
    pub fn entry(&self, corr: Correspondence) -> &OrthologyEntry {
        &self.entries[corr.index()]
    }

    /// Number of orthologic cyclic correspondences.
    pub fn cyclic_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.correspondence.is_cyclic() && e.orthologic)
            .count()
    }
}

pub fn spectrum_points(src: &[Point2; 3], dst: &[Point2; 3]) -> OrthologyReport {
    let entries: Vec<OrthologyEntry> = Correspondence::ALL
        .iter()
        .map(|&corr| {
            let deficit = deficit_points(src, dst, corr, &Point2::origin());
            let orthologic = deficit.is_zero();
            let (center, issue) = if orthologic {
                match center_points(src, dst, corr) {
                    Ok(c) => (Some(c), None),
                    Err(Error::ZeroDirection) => (None, Some(PencilIssue::ZeroDirection)),
                    Err(_) => (None, Some(PencilIssue::PencilDegenerate)),
                }
            } else {
                // Still flag a collapsed image side.
                let issue = pencil_points(src, dst, corr)
                    .err()
                    .map(|_| PencilIssue::ZeroDirection);
                (None, issue)
            };
            OrthologyEntry {
                correspondence: corr,
                deficit,
                orthologic,
                center,
                issue,
            }
        })
        .collect();
    let k_count = entries.iter().filter(|e| e.orthologic).count();
    OrthologyReport { entries, k_count }
}

pub fn orthology_spectrum(pair: &TrianglePair) -> OrthologyReport {
    spectrum_points(pair.t1.vertices(), pair.t2.vertices())
}

/// Range of the numerators and denominators the generators sample.
pub const GENERATOR_RANGE: u32 = 10;

/// Given `a1`, `b1`, solves for the `c1` that makes both correspondences
/// orthologic. Each deficit is affine in `c1`, so this is a 2×2 solve.
pub fn complete_third_vertex(
    t1: &Triangle2,
    a1: &Point2,
    b1: &Point2,
    corrs: [Correspondence; 2],
) -> Option<Point2> {
    let src = t1.vertices();
    let origin = Point2::origin();
    let eval = |c1: Point2, corr| deficit_points(src, &[a1.clone(), b1.clone(), c1], corr, &origin);
    let mut rows = Vec::with_capacity(2);
    let mut rhs = Vec::with_capacity(2);
    for corr in corrs {
        let f0 = eval(Point2::origin(), corr);
        let fx = eval(Point2::from_ints(1, 0), corr) - &f0;
        let fy = eval(Point2::from_ints(0, 1), corr) - &f0;
        rows.push(vec![fx, fy]);
        rhs.push(-f0);
    }
    let sol = solve_unique(rows, rhs)?;
    let [x, y]: [Rational; 2] = sol.try_into().ok()?;
    Some(Point2::new(x, y))
}

/// Builds an orthologic-under-both pair from caller-supplied `(a1, b1)`
/// draws, resampling singular systems and degenerate targets.
pub fn generate_with<F>(
    t1: &Triangle2,
    corrs: [Correspondence; 2],
    mut draw: F,
) -> Result<TrianglePair>
where
    F: FnMut() -> (Point2, Point2),
{
    for _ in 0..RESAMPLE_LIMIT {
        let (a1, b1) = draw();
        let Some(c1) = complete_third_vertex(t1, &a1, &b1, corrs) else {
            continue;
        };
        let Ok(t2) = Triangle2::new(a1, b1, c1) else {
            continue;
        };
        let pair = TrianglePair::new(t1.clone(), t2);
        if corrs.iter().all(|&c| is_orthologic(&pair, c)) {
            return Ok(pair);
        }
    }
    Err(Error::GenerationFailed(RESAMPLE_LIMIT))
}

pub fn generate_orthologic_pair(
    t1: &Triangle2,
    corrs: [Correspondence; 2],
    seed: u64,
) -> Result<TrianglePair> {
    let mut rng = rng_from_seed(seed);
    generate_with(t1, corrs, || {
        let a1 = sample_point(&mut rng, GENERATOR_RANGE);
        let b1 = sample_point(&mut rng, GENERATOR_RANGE);
        (a1, b1)
    })
}

/// A pair orthologic under `σ0` and `σ1`, deterministic in `(t1, seed)`.
pub fn generate_biorthologic(t1: &Triangle2, seed: u64) -> Result<TrianglePair> {
    generate_orthologic_pair(t1, [Correspondence::S0, Correspondence::S1], seed)
}

/// Coefficient of the deficit as a linear form in the six target
/// coordinates `[a1x, a1y, b1x, b1y, c1x, c1y]`, for a fixed source.
/// The deficit is bilinear, so there is no constant term.
pub fn deficit_row(src: &[Point2; 3], corr: Correspondence) -> Vec<Rational> {
    let origin = Point2::origin();
    let zero = [Point2::origin(), Point2::origin(), Point2::origin()];
    (0..6)
        .map(|k| {
            let mut dst = zero.clone();
            let p = &mut dst[k / 2];
            if k % 2 == 0 {
                p.x = int(1);
            } else {
                p.y = int(1);
            }
            deficit_points(src, &dst, corr, &origin)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::complementary_triangle;
    use crate::rational::rat;
    use Correspondence::*;

    fn tri(v: [(i64, i64); 3]) -> Triangle2 {
        Triangle2::from_ints(v).unwrap()
    }

    fn worked() -> TrianglePair {
        TrianglePair::new(tri([(0, 0), (1, 0), (0, 1)]), tri([(2, 1), (5, 3), (5, 7)]))
    }

    fn worked_medial() -> TrianglePair {
        let t = tri([(0, 0), (4, 0), (1, 3)]);
        let m = complementary_triangle(&t);
        TrianglePair::new(t, m)
    }

    #[test]
    fn correspondence_algebra() {
        for c in Correspondence::ALL {
            assert_eq!(c.compose(c.inverse()), S0);
            assert_eq!(c.inverse().inverse(), c);
            assert_eq!(c.name().parse::<Correspondence>().unwrap(), c);
        }
        assert_eq!(S1.inverse(), S2);
        assert_eq!(T0.inverse(), T0);
        for a in Correspondence::CYCLIC {
            for b in Correspondence::CYCLIC {
                assert!(a.compose(b).is_cyclic());
            }
        }
        assert_eq!("sigma1".parse::<Correspondence>().unwrap(), S1);
        assert_eq!("t2".parse::<Correspondence>().unwrap(), T2);
        assert!("x3".parse::<Correspondence>().is_err());
        assert!("s3".parse::<Correspondence>().is_err());
    }

    #[test]
    fn deficit_examples() {
        let pair = worked();
        assert_eq!(deficit(&pair, S0), int(-1));
        assert_eq!(deficit(&pair, S1), int(7));
        assert_eq!(deficit(&pair, S2), int(-6));
        let t = tri([(3, -1), (7, 2), (-4, 5)]);
        assert_eq!(deficit(&TrianglePair::new(t.clone(), t), S0), int(0));
    }

    #[test]
    fn drift_examples() {
        let pair = worked();
        let n = Point2::new(rat(17, 3), int(-5));
        for c in Correspondence::ALL {
            assert_eq!(drift(&pair, c, &Point2::origin(), &n), int(0));
            assert_eq!(drift(&pair, c, &n, &n), int(0));
        }
    }

    #[test]
    fn orthologic_examples() {
        assert!(is_orthologic(&worked_medial(), S0));
        assert!(!is_orthologic(&worked(), S0));
        let t = tri([(1, 2), (5, -3), (0, 7)]);
        assert!(is_orthologic(&TrianglePair::new(t.clone(), t), S0));
    }

    #[test]
    fn pencil_examples() {
        let lines = perpendicular_pencil(&worked_medial(), S0).unwrap();
        assert_eq!(lines[0], Line2::from_ints(1, -1, 0).unwrap());
        assert_eq!(lines[1], Line2::from_ints(1, 3, -4).unwrap());
        assert_eq!(lines[2], Line2::from_ints(1, 0, -1).unwrap());

        let src = [
            Point2::from_ints(0, 0),
            Point2::from_ints(1, 0),
            Point2::from_ints(0, 1),
        ];
        let dst = [
            Point2::from_ints(0, 0),
            Point2::from_ints(3, 3),
            Point2::from_ints(3, 3),
        ];
        assert_eq!(pencil_points(&src, &dst, S0), Err(Error::ZeroDirection));
    }

    #[test]
    fn self_pencil_is_altitudes() {
        // Equilateral-ish rational stand-in: self pencil of any triangle is
        // its altitudes, concurrent at the orthocenter.
        let t = tri([(0, 0), (6, 0), (3, 5)]);
        let pair = TrianglePair::new(t.clone(), t.clone());
        let lines = perpendicular_pencil(&pair, S0).unwrap();
        let h = crate::constructions::orthocenter(&t);
        assert!(lines.iter().all(|l| l.contains(&h)));
    }

    #[test]
    fn center_examples() {
        let pair = worked_medial();
        assert_eq!(
            orthology_center(&pair, S0).unwrap(),
            HPoint::finite(Point2::from_ints(1, 1))
        );
        assert_eq!(
            orthology_center(&pair.swapped(), S0).unwrap(),
            HPoint::finite(Point2::from_ints(2, 1))
        );
        assert_eq!(
            orthology_center(&worked(), S0),
            Err(Error::NotOrthologic("σ0"))
        );
    }

    #[test]
    fn center_at_infinity_and_degenerate_pencil() {
        // Collinear target: all perpendiculars share one direction.
        let src = [
            Point2::from_ints(0, 0),
            Point2::from_ints(1, 1),
            Point2::from_ints(3, 0),
        ];
        let dst = [
            Point2::from_ints(0, 0),
            Point2::from_ints(1, 0),
            Point2::from_ints(3, 0),
        ];
        assert_eq!(deficit_points(&src, &dst, S0, &Point2::origin()), int(0));
        let h = center_points(&src, &dst, S0).unwrap();
        assert!(!h.is_finite());
        assert_eq!(h.direction(), Some(crate::geometry::Vec2::from_ints(0, 1)));

        // All three perpendiculars are the line y = 0.
        let src = [
            Point2::from_ints(0, 0),
            Point2::from_ints(1, 0),
            Point2::from_ints(2, 0),
        ];
        let dst = [
            Point2::from_ints(0, 0),
            Point2::from_ints(0, 1),
            Point2::from_ints(0, 3),
        ];
        assert_eq!(deficit_points(&src, &dst, S0, &Point2::origin()), int(0));
        assert_eq!(center_points(&src, &dst, S0), Err(Error::PencilDegenerate));
    }

    #[test]
    fn cyclic_sum_examples() {
        assert_eq!(cyclic_deficit_sum(&worked(), &Point2::origin()), int(0));
        let t = tri([(2, 9), (-1, 4), (6, 6)]);
        let m = Point2::new(rat(1, 7), rat(-3, 2));
        assert_eq!(
            cyclic_deficit_sum(&TrianglePair::new(t.clone(), t), &m),
            int(0)
        );
    }

    #[test]
    fn biorthologic_examples() {
        let bi = TrianglePair::new(
            tri([(0, 0), (1, 0), (0, 1)]),
            tri([(0, 0), (1, 0), (0, -1)]),
        );
        assert!(is_biorthologic(&bi));
        assert_eq!(pantazi_verdict(&bi), Ok(true));
        assert_ne!(deficit(&worked_medial(), S1), int(0));
        assert!(!is_biorthologic(&worked_medial()));
        assert!(!is_biorthologic(&worked()));

        let t = tri([(0, 0), (4, 0), (1, 3)]);
        assert_eq!(
            pantazi_verdict(&TrianglePair::new(t.clone(), t)),
            Err(Error::NotBiorthologic)
        );
    }

    #[test]
    fn spectrum_examples() {
        let r = orthology_spectrum(&worked_medial());
        let e = r.entry(S0);
        assert!(e.orthologic);
        assert_eq!(e.center, Some(HPoint::finite(Point2::from_ints(1, 1))));
        assert!(r.k_count >= 1);
        assert_eq!(r.entries.len(), 6);

        let r = orthology_spectrum(&worked());
        assert_eq!(r.k_count, 0);
        assert!(r
            .entries
            .iter()
            .all(|e| e.center.is_none() && e.issue.is_none()));
    }

    #[test]
    fn completes_worked_generator_instance() {
        let t1 = tri([(0, 0), (1, 0), (0, 1)]);
        let c1 = complete_third_vertex(
            &t1,
            &Point2::from_ints(0, 0),
            &Point2::from_ints(1, 0),
            [S0, S1],
        );
        assert_eq!(c1, Some(Point2::from_ints(0, -1)));
    }

    #[test]
    fn generator_is_deterministic_and_valid() {
        let t1 = tri([(0, 0), (4, 0), (1, 3)]);
        let a = generate_biorthologic(&t1, 99).unwrap();
        let b = generate_biorthologic(&t1, 99).unwrap();
        assert_eq!(a, b);
        assert!(is_biorthologic(&a));
        assert_eq!(pantazi_verdict(&a), Ok(true));
        let r = orthology_spectrum(&a);
        assert!(r.cyclic_count() == 3 && r.k_count >= 3);
    }

    #[test]
    fn generator_resamples_degenerate_draw() {
        let t1 = tri([(0, 0), (1, 0), (0, 1)]);
        let mut calls = 0;
        let pair = generate_with(&t1, [S0, S1], || {
            calls += 1;
            if calls == 1 {
                // a1 = b1 forces c1 = a1: a collapsed target.
                (Point2::from_ints(0, 0), Point2::from_ints(0, 0))
            } else {
                (Point2::from_ints(0, 0), Point2::from_ints(1, 0))
            }
        })
        .unwrap();
        assert_eq!(calls, 2);
        assert_eq!(pair.t2.c(), &Point2::from_ints(0, -1));
    }

    #[test]
    fn generator_gives_up_after_bound() {
        let t1 = tri([(0, 0), (1, 0), (0, 1)]);
        let mut calls = 0;
        let r = generate_with(&t1, [S0, S1], || {
            calls += 1;
            (Point2::from_ints(2, 2), Point2::from_ints(2, 2))
        });
        assert_eq!(r, Err(Error::GenerationFailed(RESAMPLE_LIMIT)));
        assert_eq!(calls, RESAMPLE_LIMIT);
    }

    #[test]
    fn odd_correspondence_swap_keeps_sign() {
        let pair = worked();
        assert_eq!(deficit(&pair, T0), int(3));
        assert_eq!(deficit(&pair.swapped(), T0.inverse()), int(3));
        assert_eq!(deficit(&pair.swapped(), S1.inverse()), -deficit(&pair, S1));
    }

    #[test]
    fn deficit_row_matches_direct_evaluation() {
        let pair = worked();
        let coords: Vec<Rational> = pair
            .t2
            .vertices()
            .iter()
            .flat_map(|p| [p.x.clone(), p.y.clone()])
            .collect();
        for c in Correspondence::ALL {
            let row = deficit_row(pair.t1.vertices(), c);
            let v = row
                .iter()
                .zip(&coords)
                .fold(Rational::zero(), |acc, (r, x)| acc + r * x);
            assert_eq!(v, deficit(&pair, c));
        }
    }
}
