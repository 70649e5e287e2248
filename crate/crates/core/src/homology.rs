//! Homology (perspectivity from a point) of triangle pairs.
//!
//! Two triangles are homological under a correspondence when the lines
//! joining each vertex to its image are concurrent; the common point is the
//! perspector. "Orthohomological" is the conjunction of orthology and
//! homology under the same correspondence.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{
    det3, intersect_lines, line_through, HPoint, Intersection, Line2, Point2, Triangle2,
};
use crate::linalg::solve_unique;
use crate::orthology::{images_of, is_orthologic, Correspondence, TrianglePair, GENERATOR_RANGE};
use crate::rational::{int, Rational};
use crate::sampling::{rng_from_seed, sample_point, RESAMPLE_LIMIT};

/// The three vertex-to-image lines.
pub fn connecting_lines_points(
    src: &[Point2; 3],
    dst: &[Point2; 3],
    corr: Correspondence,
) -> Result<[Line2; 3]> {
    let img = images_of(dst, corr);
    let line = |i: usize| line_through(&src[i], img[i]).map_err(|_| Error::DegenerateCevian);
    Ok([line(0)?, line(1)?, line(2)?])
}

pub fn connecting_lines(pair: &TrianglePair, corr: Correspondence) -> Result<[Line2; 3]> {
    connecting_lines_points(pair.t1.vertices(), pair.t2.vertices(), corr)
}

pub fn is_homological(pair: &TrianglePair, corr: Correspondence) -> Result<bool> {
    let [l1, l2, l3] = connecting_lines(pair, corr)?;
    Ok(det3([l1.coefficients(), l2.coefficients(), l3.coefficients()]).is_zero())
}

fn perspector_of(lines: &[Line2; 3]) -> Result<HPoint> {
    if lines[0] == lines[1] || lines[1] == lines[2] || lines[0] == lines[2] {
        return Err(Error::CoincidentLines);
    }
    match intersect_lines(&lines[0], &lines[1]) {
        Intersection::Point(p) if lines[2].contains_h(&p) => Ok(p),
        Intersection::Point(_) => Err(Error::InvariantViolated(
            "zero determinant but third line misses the meet".into(),
        )),
        Intersection::Coincident => unreachable!("checked distinct above"),
    }
}

pub fn homology_perspector(pair: &TrianglePair, corr: Correspondence) -> Result<HPoint> {
    let lines = connecting_lines(pair, corr)?;
    if !det3([
        lines[0].coefficients(),
        lines[1].coefficients(),
        lines[2].coefficients(),
    ])
    .is_zero()
    {
        return Err(Error::NotHomological(corr.name()));
    }
    perspector_of(&lines)
}

pub fn is_orthohomological(pair: &TrianglePair, corr: Correspondence) -> Result<bool> {
    Ok(is_orthologic(pair, corr) && is_homological(pair, corr)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyEntry {
    pub correspondence: Correspondence,
    pub homological: bool,
    pub perspector: Option<HPoint>,
    /// Some vertex coincides with its image.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub entries: Vec<HomologyEntry>,
    pub k_count: usize,
}

impl HomologyReport {
    pub fn entry(&self, corr: Correspondence) -> &HomologyEntry {
        self.entries
            .iter()
            .find(|e| e.correspondence == corr)
            .expect("report covers every correspondence")
    }

    pub fn cyclic_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.correspondence.is_cyclic() && e.homological)
            .count()
    }
}

pub fn homology_spectrum(pair: &TrianglePair) -> HomologyReport {
    let entries: Vec<HomologyEntry> = Correspondence::ALL
        .iter()
        .map(|&corr| match connecting_lines(pair, corr) {
            Err(_) => HomologyEntry {
                correspondence: corr,
                homological: false,
                perspector: None,
                degenerate: true,
            },
            Ok(lines) => {
                let homological = det3([
                    lines[0].coefficients(),
                    lines[1].coefficients(),
                    lines[2].coefficients(),
                ])
                .is_zero();
                let perspector = if homological {
                    perspector_of(&lines).ok()
                } else {
                    None
                };
                HomologyEntry {
                    correspondence: corr,
                    homological,
                    perspector,
                    degenerate: false,
                }
            }
        })
        .collect();
    let k_count = entries.iter().filter(|e| e.homological).count();
    HomologyReport { entries, k_count }
}

/// Unnormalized homogeneous line through two affine points.
fn raw_line(p: &Point2, q: &Point2) -> [Rational; 3] {
    [&p.y - &q.y, &q.x - &p.x, &p.x * &q.y - &p.y * &q.x]
}

/// Concurrency determinant of the raw connecting lines. Multilinear in the
/// target vertices, so affine in each target vertex's coordinates.
pub fn cevian_determinant(src: &[Point2; 3], dst: &[Point2; 3], corr: Correspondence) -> Rational {
    let img = images_of(dst, corr);
    let rows = [0, 1, 2].map(|i| raw_line(&src[i], img[i]));
    det3([
        [&rows[0][0], &rows[0][1], &rows[0][2]],
        [&rows[1][0], &rows[1][1], &rows[1][2]],
        [&rows[2][0], &rows[2][1], &rows[2][2]],
    ])
}

/// Solves for `a1` making the pair homological under `σ0` and `σ1`, given
/// `b1` and `c1`.
pub fn complete_first_vertex(t1: &Triangle2, b1: &Point2, c1: &Point2) -> Option<Point2> {
    let src = t1.vertices();
    let eval = |a1: Point2, corr| cevian_determinant(src, &[a1, b1.clone(), c1.clone()], corr);
    let mut rows = Vec::with_capacity(2);
    let mut rhs = Vec::with_capacity(2);
    for corr in [Correspondence::S0, Correspondence::S1] {
        let f0 = eval(Point2::origin(), corr);
        let fx = eval(Point2::new(int(1), int(0)), corr) - &f0;
        let fy = eval(Point2::new(int(0), int(1)), corr) - &f0;
        rows.push(vec![fx, fy]);
        rhs.push(-f0);
    }
    let [x, y]: [Rational; 2] = solve_unique(rows, rhs)?.try_into().ok()?;
    Some(Point2::new(x, y))
}

pub fn generate_bihomological_with<F>(t1: &Triangle2, mut draw: F) -> Result<TrianglePair>
where
    F: FnMut() -> (Point2, Point2),
{
    for _ in 0..RESAMPLE_LIMIT {
        let (b1, c1) = draw();
        let Some(a1) = complete_first_vertex(t1, &b1, &c1) else {
            continue;
        };
        let Ok(t2) = Triangle2::new(a1, b1, c1) else {
            continue;
        };
        let pair = TrianglePair::new(t1.clone(), t2);
        let ok = [Correspondence::S0, Correspondence::S1]
            .iter()
            .all(|&c| is_homological(&pair, c) == Ok(true));
        if ok {
            return Ok(pair);
        }
    }
    Err(Error::GenerationFailed(RESAMPLE_LIMIT))
}

/// A pair homological under `σ0` and `σ1`, deterministic in `(t1, seed)`.
pub fn generate_bihomological(t1: &Triangle2, seed: u64) -> Result<TrianglePair> {
    let mut rng = rng_from_seed(seed);
    generate_bihomological_with(t1, || {
        let b1 = sample_point(&mut rng, GENERATOR_RANGE);
        let c1 = sample_point(&mut rng, GENERATOR_RANGE);
        (b1, c1)
    })
}
