//! Seeded search harness for the open extension questions.
//!
//! Each trial draws its own RNG from `(config.seed, trial)`, builds a witness
//! pair by exact solving, and records a [`Finding`]. A finding carries its
//! exact input, so [`verify_finding`] can recompute every spectrum and
//! verdict from scratch. Summaries report frequencies only; nothing here
//! asserts an answer to the questions themselves.
//!
//! | question | witness family                                          |
//! |----------|---------------------------------------------------------|
//! | `Q1`     | `k = 3 + trial % 4` orthology conditions solved for `t2` |
//! | `Q2`     | bi-homological pairs (`σ0`, `σ1`)                        |
//! | `Q2o`    | alternates bi-homological and bi-orthologic pairs        |
//! | `Q3`     | 3D pairs with vanishing `σ0`, `σ1` deficits              |
//! | `Q4`     | 3D pairs perspective from a point under `σ0`             |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::doc::{HomologyReportDoc, OrthologyReportDoc, PointDoc, TriangleDoc};
use crate::error::{Error, Result};
use crate::geometry::{Point2, Triangle2};
use crate::homology::{generate_bihomological_with, homology_spectrum};
use crate::linalg::{rank, Echelon};
use crate::orthology::{
    deficit_row, generate_with, orthology_spectrum, Correspondence, TrianglePair,
};
use crate::rational::{format_rational, Rational};
use crate::sampling::{
    derive_seed, rng_from_seed, sample_point, sample_point3, sample_rational, sample_triangle,
    sample_triangle3, SeededRng, RESAMPLE_LIMIT,
};
use crate::space3d::{
    all_parallel, cevian_lines3, coplanar, deficit3, deficit3_points, foot_lines,
    normal_plane_meet, three_lines_concurrent3, PlaneMeet, Point3, Triangle3,
};
use crate::SCHEMA;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Question {
    #[serde(rename = "Q1")]
    KOrthology,
    #[serde(rename = "Q2")]
    Bihomology,
    #[serde(rename = "Q2o")]
    Orthohomology,
    #[serde(rename = "Q3")]
    Orthology3d,
    #[serde(rename = "Q4")]
    Homology3d,
}

impl Question {
    pub fn id(self) -> &'static str {
        match self {
            Question::KOrthology => "Q1",
            Question::Bihomology => "Q2",
            Question::Orthohomology => "Q2o",
            Question::Orthology3d => "Q3",
            Question::Homology3d => "Q4",
        }
    }
}

impl fmt::Display for Question {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Question {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q1" | "q1_k_orthology" => Ok(Question::KOrthology),
            "q2" | "q2_bihomology" => Ok(Question::Bihomology),
            "q2o" | "q2_orthohomology" => Ok(Question::Orthohomology),
            "q3" | "q3_3d_orthology" => Ok(Question::Orthology3d),
            "q4" | "q4_3d_homology" => Ok(Question::Homology3d),
            _ => Err(Error::ConfigInvalid(format!("unknown question {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub question: Question,
    pub trials: u64,
    pub seed: u64,
    pub coordinate_range: u32,
}

impl TrialConfig {
    pub fn new(question: Question, trials: u64, seed: u64, coordinate_range: u32) -> Self {
        TrialConfig {
            question,
            trials,
            seed,
            coordinate_range,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::ConfigInvalid("trials must be at least 1".into()));
        }
        if self.coordinate_range < 2 {
            return Err(Error::ConfigInvalid(
                "coordinate_range must be at least 2".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialInput {
    pub base: TriangleDoc,
    pub partner: Option<TriangleDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectra {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orthology: Option<OrthologyReportDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologyReportDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<Vec<SpaceEntry>>,
}

/// Per-correspondence outcome of both spatial readings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceEntry {
    pub correspondence: Correspondence,
    pub deficit: String,
    /// Plane reading: `"unique"`, `"common_line"` or `"empty"`.
    pub planes: String,
    pub plane_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane_point: Option<PointDoc>,
    /// Line reading: `"concurrent"`, `"not_concurrent"` or `"undefined"`.
    pub feet: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feet_point: Option<PointDoc>,
}

/// Spatial homology outcome per correspondence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceHomologyEntry {
    pub correspondence: Correspondence,
    /// `"concurrent"`, `"parallel"`, `"not_concurrent"` or `"degenerate"`.
    pub cevians: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<PointDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Bihomological,
    Biorthologic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    KOrthology {
        imposed_k: usize,
        conditions: Vec<Correspondence>,
        rank: usize,
        cyclic_rank: usize,
        solvable: bool,
        conditions_hold: bool,
        k_count: usize,
        k_count_cyclic: usize,
    },
    Bihomology {
        generated: bool,
        bi_homological: bool,
        tri_homological: bool,
        k_count: usize,
        k_count_cyclic: usize,
    },
    Orthohomology {
        family: Family,
        generated: bool,
        k_orthology: usize,
        k_homology: usize,
        orthohomological: Vec<Correspondence>,
        bi_orthologic_and_bi_homological: bool,
        bi_orthohomological: bool,
    },
    Orthology3d {
        deficit_zero: Vec<Correspondence>,
        planes_common_line: Vec<Correspondence>,
        feet_concurrent: Vec<Correspondence>,
        tri_orthologic: bool,
        feet_tri_concurrent: bool,
        coplanar: bool,
    },
    Homology3d {
        generated: bool,
        homological: Vec<Correspondence>,
        k_count: usize,
        bi_homological: bool,
        tri_homological: bool,
        coplanar: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub schema: String,
    pub question: Question,
    pub trial: u64,
    pub input: TrialInput,
    pub spectra: Spectra,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space_homology: Option<Vec<SpaceHomologyEntry>>,
    pub verdict: Verdict,
    pub exact: bool,
}

impl Finding {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("finding serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub schema: String,
    pub question: Question,
    pub trials: u64,
    pub seed: u64,
    pub coordinate_range: u32,
    pub counts: BTreeMap<String, u64>,
    pub frequencies: BTreeMap<String, f64>,
}

/// Conditions imposed by a `Q1` trial: the cyclic three, then `τ0..τ2`.
pub fn q1_conditions(trial: u64) -> Vec<Correspondence> {
    let k = 3 + (trial % 4) as usize;
    Correspondence::ALL[..k].to_vec()
}

fn q2o_family(trial: u64) -> Family {
    if trial.is_multiple_of(2) {
        Family::Bihomological
    } else {
        Family::Biorthologic
    }
}

fn parse_doc_err(e: crate::doc::DocError) -> Error {
    Error::Parse(e.to_string())
}

fn members(cond: impl Fn(Correspondence) -> bool, set: &[Correspondence]) -> Vec<Correspondence> {
    set.iter().copied().filter(|&c| cond(c)).collect()
}

/// Recomputes spectra and verdict for a trial input. Pure in its arguments.
pub fn assess(
    question: Question,
    trial: u64,
    input: &TrialInput,
) -> Result<(Spectra, Option<Vec<SpaceHomologyEntry>>, Verdict)> {
    let empty = Spectra {
        orthology: None,
        homology: None,
        space: None,
    };
    match question {
        Question::KOrthology => {
            let t1 = input.base.to_triangle2("base").map_err(parse_doc_err)?;
            let conditions = q1_conditions(trial);
            let rows: Vec<Vec<Rational>> = conditions
                .iter()
                .map(|&c| deficit_row(t1.vertices(), c))
                .collect();
            let cyclic_rank = rank(rows[..3].to_vec());
            if cyclic_rank > 2 {
                return Err(Error::InvariantViolated(format!(
                    "cyclic condition rank {cyclic_rank} exceeds 2"
                )));
            }
            let system_rank = rank(rows);
            let Some(partner) = &input.partner else {
                return Ok((
                    empty,
                    None,
                    Verdict::KOrthology {
                        imposed_k: conditions.len(),
                        conditions,
                        rank: system_rank,
                        cyclic_rank,
                        solvable: false,
                        conditions_hold: false,
                        k_count: 0,
                        k_count_cyclic: 0,
                    },
                ));
            };
            let t2 = partner.to_triangle2("partner").map_err(parse_doc_err)?;
            let report = orthology_spectrum(&TrianglePair::new(t1, t2));
            let conditions_hold = conditions.iter().all(|&c| report.entry(c).orthologic);
            let verdict = Verdict::KOrthology {
                imposed_k: conditions.len(),
                conditions,
                rank: system_rank,
                cyclic_rank,
                solvable: true,
                conditions_hold,
                k_count: report.k_count,
                k_count_cyclic: report.cyclic_count(),
            };
            Ok((
                Spectra {
                    orthology: Some((&report).into()),
                    ..empty
                },
                None,
                verdict,
            ))
        }
        Question::Bihomology => {
            let Some(partner) = &input.partner else {
                return Ok((
                    empty,
                    None,
                    Verdict::Bihomology {
                        generated: false,
                        bi_homological: false,
                        tri_homological: false,
                        k_count: 0,
                        k_count_cyclic: 0,
                    },
                ));
            };
            let t1 = input.base.to_triangle2("base").map_err(parse_doc_err)?;
            let t2 = partner.to_triangle2("partner").map_err(parse_doc_err)?;
            let report = homology_spectrum(&TrianglePair::new(t1, t2));
            let h = |c| report.entry(c).homological;
            let verdict = Verdict::Bihomology {
                generated: true,
                bi_homological: h(Correspondence::S0) && h(Correspondence::S1),
                tri_homological: Correspondence::CYCLIC.iter().all(|&c| h(c)),
                k_count: report.k_count,
                k_count_cyclic: report.cyclic_count(),
            };
            Ok((
                Spectra {
                    homology: Some((&report).into()),
                    ..empty
                },
                None,
                verdict,
            ))
        }
        Question::Orthohomology => {
            let family = q2o_family(trial);
            let Some(partner) = &input.partner else {
                return Ok((
                    empty,
                    None,
                    Verdict::Orthohomology {
                        family,
                        generated: false,
                        k_orthology: 0,
                        k_homology: 0,
                        orthohomological: vec![],
                        bi_orthologic_and_bi_homological: false,
                        bi_orthohomological: false,
                    },
                ));
            };
            let t1 = input.base.to_triangle2("base").map_err(parse_doc_err)?;
            let t2 = partner.to_triangle2("partner").map_err(parse_doc_err)?;
            let pair = TrianglePair::new(t1, t2);
            let ortho = orthology_spectrum(&pair);
            let homo = homology_spectrum(&pair);
            let o = |c| ortho.entry(c).orthologic;
            let h = |c| homo.entry(c).homological;
            let orthohomological = members(|c| o(c) && h(c), &Correspondence::ALL);
            let bi_o = o(Correspondence::S0) && o(Correspondence::S1);
            let bi_h = h(Correspondence::S0) && h(Correspondence::S1);
            let verdict = Verdict::Orthohomology {
                family,
                generated: true,
                k_orthology: ortho.k_count,
                k_homology: homo.k_count,
                bi_orthohomological: orthohomological.len() >= 2,
                orthohomological,
                bi_orthologic_and_bi_homological: bi_o && bi_h,
            };
            Ok((
                Spectra {
                    orthology: Some((&ortho).into()),
                    homology: Some((&homo).into()),
                    space: None,
                },
                None,
                verdict,
            ))
        }
        Question::Orthology3d => {
            let t1 = input.base.to_triangle3("base").map_err(parse_doc_err)?;
            let Some(partner) = &input.partner else {
                return Ok((
                    empty,
                    None,
                    Verdict::Orthology3d {
                        deficit_zero: vec![],
                        planes_common_line: vec![],
                        feet_concurrent: vec![],
                        tri_orthologic: false,
                        feet_tri_concurrent: false,
                        coplanar: false,
                    },
                ));
            };
            let t2 = partner.to_triangle3("partner").map_err(parse_doc_err)?;
            let entries: Vec<SpaceEntry> = Correspondence::ALL
                .iter()
                .map(|&c| space_entry(&t1, &t2, c))
                .collect::<Result<_>>()?;
            let find = |c: Correspondence| &entries[c as usize];
            let deficit_zero = members(|c| find(c).deficit == "0/1", &Correspondence::ALL);
            let planes_common_line =
                members(|c| find(c).planes == "common_line", &Correspondence::ALL);
            let feet_concurrent = members(|c| find(c).feet == "concurrent", &Correspondence::ALL);
            let verdict = Verdict::Orthology3d {
                tri_orthologic: Correspondence::CYCLIC
                    .iter()
                    .all(|c| deficit_zero.contains(c)),
                feet_tri_concurrent: Correspondence::CYCLIC
                    .iter()
                    .all(|c| feet_concurrent.contains(c)),
                deficit_zero,
                planes_common_line,
                feet_concurrent,
                coplanar: coplanar(&t1, &t2),
            };
            Ok((
                Spectra {
                    space: Some(entries),
                    ..empty
                },
                None,
                verdict,
            ))
        }
        Question::Homology3d => {
            let t1 = input.base.to_triangle3("base").map_err(parse_doc_err)?;
            let Some(partner) = &input.partner else {
                return Ok((
                    empty,
                    None,
                    Verdict::Homology3d {
                        generated: false,
                        homological: vec![],
                        k_count: 0,
                        bi_homological: false,
                        tri_homological: false,
                        coplanar: false,
                    },
                ));
            };
            let t2 = partner.to_triangle3("partner").map_err(parse_doc_err)?;
            let entries: Vec<SpaceHomologyEntry> = Correspondence::ALL
                .iter()
                .map(|&c| space_homology_entry(&t1, &t2, c))
                .collect();
            let homological = members(
                |c| {
                    matches!(
                        entries[c as usize].cevians.as_str(),
                        "concurrent" | "parallel"
                    )
                },
                &Correspondence::ALL,
            );
            let has = |c| homological.contains(&c);
            let verdict = Verdict::Homology3d {
                generated: true,
                k_count: homological.len(),
                bi_homological: has(Correspondence::S0) && has(Correspondence::S1),
                tri_homological: Correspondence::CYCLIC.iter().all(|&c| has(c)),
                homological,
                coplanar: coplanar(&t1, &t2),
            };
            Ok((empty, Some(entries), verdict))
        }
    }
}

pub fn space_entry(t1: &Triangle3, t2: &Triangle3, corr: Correspondence) -> Result<SpaceEntry> {
    let deficit = deficit3(t1, t2, corr, &Point3::origin());
    let (planes, plane_rank, plane_point) = match normal_plane_meet(t1, t2, corr)? {
        PlaneMeet::Unique(p) => ("unique", 3, Some(crate::doc::point3_doc(&p))),
        PlaneMeet::NoUniquePoint { rank, consistent } => {
            (if consistent { "common_line" } else { "empty" }, rank, None)
        }
    };
    let (feet, feet_point) = match foot_lines(t1, t2, corr) {
        Err(_) => ("undefined", None),
        Ok([l1, l2, l3]) => match three_lines_concurrent3(&l1, &l2, &l3) {
            Some(p) => ("concurrent", Some(crate::doc::point3_doc(&p))),
            None => ("not_concurrent", None),
        },
    };
    Ok(SpaceEntry {
        correspondence: corr,
        deficit: format_rational(&deficit),
        planes: planes.into(),
        plane_rank,
        plane_point,
        feet: feet.into(),
        feet_point,
    })
}

pub fn space_homology_entry(
    t1: &Triangle3,
    t2: &Triangle3,
    corr: Correspondence,
) -> SpaceHomologyEntry {
    let (cevians, point) = match cevian_lines3(t1, t2, corr) {
        Err(_) => ("degenerate", None),
        Ok(lines) => match three_lines_concurrent3(&lines[0], &lines[1], &lines[2]) {
            Some(p) => ("concurrent", Some(crate::doc::point3_doc(&p))),
            None if all_parallel(&lines) => ("parallel", None),
            None => ("not_concurrent", None),
        },
    };
    SpaceHomologyEntry {
        correspondence: corr,
        cevians: cevians.into(),
        point,
    }
}

/// Solves the `Q1` condition system for `t2`, sampling the free coordinates.
fn solve_q1(
    t1: &Triangle2,
    conditions: &[Correspondence],
    rng: &mut SeededRng,
    range: u32,
) -> Option<Triangle2> {
    let rows: Vec<Vec<Rational>> = conditions
        .iter()
        .map(|&c| deficit_row(t1.vertices(), c))
        .collect();
    let n = rows.len();
    let e = Echelon::reduce(rows, vec![Rational::zero(); n]);
    let free = e.free_columns().len();
    for _ in 0..RESAMPLE_LIMIT {
        let values: Vec<Rational> = (0..free).map(|_| sample_rational(rng, range)).collect();
        let x = e.solve_with(&values)?;
        let p = |i: usize| Point2::new(x[2 * i].clone(), x[2 * i + 1].clone());
        if let Ok(t2) = Triangle2::new(p(0), p(1), p(2)) {
            return Some(t2);
        }
    }
    None
}

/// `t2` with `deficit3(σ0) = deficit3(σ1) = 0`: `a1`, `b1` sampled, `c1`
/// solved with one free coordinate.
fn solve_q3(t1: &Triangle3, rng: &mut SeededRng, range: u32) -> Option<Triangle3> {
    let src = t1.vertices();
    for _ in 0..RESAMPLE_LIMIT {
        let a1 = sample_point3(rng, range);
        let b1 = sample_point3(rng, range);
        let eval = |c1: Point3, corr| {
            deficit3_points(src, &[a1.clone(), b1.clone(), c1], corr, &Point3::origin())
        };
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for corr in [Correspondence::S0, Correspondence::S1] {
            let f0 = eval(Point3::origin(), corr);
            let row = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
                .map(|(x, y, z)| eval(Point3::from_ints(x, y, z), corr) - &f0)
                .to_vec();
            rows.push(row);
            rhs.push(-f0);
        }
        let e = Echelon::reduce(rows, rhs);
        let free: Vec<Rational> = e
            .free_columns()
            .iter()
            .map(|_| sample_rational(rng, range))
            .collect();
        let Some(x) = e.solve_with(&free) else {
            continue;
        };
        let c1 = Point3::new(x[0].clone(), x[1].clone(), x[2].clone());
        if let Ok(t2) = Triangle3::new(a1.clone(), b1.clone(), c1) {
            return Some(t2);
        }
    }
    None
}

/// `t2` perspective from a random point `S` under `σ0`:
/// each image is `S + λ(V - S)` with `λ ∉ {0, 1}`.
fn solve_q4(t1: &Triangle3, rng: &mut SeededRng, range: u32) -> Option<Triangle3> {
    for _ in 0..RESAMPLE_LIMIT {
        let s = sample_point3(rng, range);
        let imgs: Vec<Point3> = t1
            .vertices()
            .iter()
            .map(|v| {
                let mut l = sample_rational(rng, range);
                while l.is_zero() || l == Rational::from_integer(1.into()) {
                    l = sample_rational(rng, range);
                }
                &s + &(v - &s).scale(&l)
            })
            .collect();
        if t1.vertices().contains(&s) {
            continue;
        }
        let [a, b, c]: [Point3; 3] = imgs.try_into().ok()?;
        if let Ok(t2) = Triangle3::new(a, b, c) {
            return Some(t2);
        }
    }
    None
}

fn build_input(config: &TrialConfig, trial: u64) -> TrialInput {
    let mut rng = rng_from_seed(derive_seed(config.seed, trial));
    let range = config.coordinate_range;
    let planar = |rng: &mut SeededRng| sample_triangle(rng, range);
    match config.question {
        Question::KOrthology => {
            let t1 = planar(&mut rng);
            let t2 = solve_q1(&t1, &q1_conditions(trial), &mut rng, range);
            TrialInput {
                base: TriangleDoc::from_triangle2(&t1),
                partner: t2.as_ref().map(TriangleDoc::from_triangle2),
            }
        }
        Question::Bihomology => {
            let t1 = planar(&mut rng);
            let pair = bihomological(&t1, &mut rng, range);
            TrialInput {
                base: TriangleDoc::from_triangle2(&t1),
                partner: pair.map(|p| TriangleDoc::from_triangle2(&p.t2)),
            }
        }
        Question::Orthohomology => {
            let t1 = planar(&mut rng);
            let pair = match q2o_family(trial) {
                Family::Bihomological => bihomological(&t1, &mut rng, range),
                Family::Biorthologic => {
                    generate_with(&t1, [Correspondence::S0, Correspondence::S1], || {
                        (sample_point(&mut rng, range), sample_point(&mut rng, range))
                    })
                    .ok()
                }
            };
            TrialInput {
                base: TriangleDoc::from_triangle2(&t1),
                partner: pair.map(|p| TriangleDoc::from_triangle2(&p.t2)),
            }
        }
        Question::Orthology3d => {
            // Fresh base triangles until a witness exists.
            let mut t1 = sample_triangle3(&mut rng, range);
            for _ in 0..RESAMPLE_LIMIT {
                if let Some(t2) = solve_q3(&t1, &mut rng, range) {
                    return TrialInput {
                        base: TriangleDoc::from_triangle3(&t1),
                        partner: Some(TriangleDoc::from_triangle3(&t2)),
                    };
                }
                t1 = sample_triangle3(&mut rng, range);
            }
            TrialInput {
                base: TriangleDoc::from_triangle3(&t1),
                partner: None,
            }
        }
        Question::Homology3d => {
            let t1 = sample_triangle3(&mut rng, range);
            let t2 = solve_q4(&t1, &mut rng, range);
            TrialInput {
                base: TriangleDoc::from_triangle3(&t1),
                partner: t2.as_ref().map(TriangleDoc::from_triangle3),
            }
        }
    }
}

fn bihomological(t1: &Triangle2, rng: &mut SeededRng, range: u32) -> Option<TrianglePair> {
    generate_bihomological_with(t1, || (sample_point(rng, range), sample_point(rng, range))).ok()
}

/// Runs a single trial. Depends only on `(config, trial)`.
pub fn run_trial(config: &TrialConfig, trial: u64) -> Result<Finding> {
    let input = build_input(config, trial);
    let (spectra, space_homology, verdict) = assess(config.question, trial, &input)?;
    Ok(Finding {
        schema: SCHEMA.to_string(),
        question: config.question,
        trial,
        input,
        spectra,
        space_homology,
        verdict,
        exact: true,
    })
}

const CHUNK: u64 = 64;

/// Runs every trial, calling `sink` in trial-index order. Trials within a
/// chunk run in parallel.
pub fn for_each_finding<F>(config: &TrialConfig, mut sink: F) -> Result<()>
where
    F: FnMut(&Finding) -> Result<()>,
{
    config.validate()?;
    let mut start = 0;
    while start < config.trials {
        let end = (start + CHUNK).min(config.trials);
        let chunk: Vec<Result<Finding>> = (start..end)
            .into_par_iter()
            .map(|t| run_trial(config, t))
            .collect();
        for f in chunk {
            sink(&f?)?;
        }
        start = end;
    }
    Ok(())
}

pub struct SearchOutput {
    pub findings: Vec<Finding>,
    pub summary: Summary,
}

pub fn run_search(config: &TrialConfig) -> Result<SearchOutput> {
    let mut findings = Vec::with_capacity(config.trials as usize);
    for_each_finding(config, |f| {
        findings.push(f.clone());
        Ok(())
    })?;
    let summary = summarize(config, &findings);
    Ok(SearchOutput { findings, summary })
}

/// Incremental summary builder.
#[derive(Debug, Default, Clone)]
pub struct Tally {
    counts: BTreeMap<String, u64>,
}

impl Tally {
    fn bump(&mut self, key: impl Into<String>) {
        *self.counts.entry(key.into()).or_default() += 1;
    }

    fn get(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn add(&mut self, f: &Finding) {
        self.bump("trials");
        match &f.verdict {
            Verdict::KOrthology {
                imposed_k,
                rank,
                solvable,
                conditions_hold,
                k_count,
                k_count_cyclic,
                ..
            } => {
                let k = imposed_k;
                self.bump(format!("k{k}.trials"));
                self.bump(format!("k{k}.rank_{rank}"));
                if *solvable {
                    self.bump(format!("k{k}.solvable"));
                    self.bump(format!("k{k}.achieved_k_{k_count}"));
                    self.bump(format!("k{k}.achieved_cyclic_{k_count_cyclic}"));
                    if *conditions_hold {
                        self.bump(format!("k{k}.conditions_hold"));
                    }
                    if *k_count_cyclic == 3 {
                        self.bump(format!("k{k}.tri_orthologic"));
                    }
                } else {
                    self.bump(format!("k{k}.degenerate_only"));
                }
            }
            Verdict::Bihomology {
                generated,
                bi_homological,
                tri_homological,
                k_count,
                ..
            } => {
                if *generated {
                    self.bump("generated");
                    self.bump(format!("k_count_{k_count}"));
                }
                if *bi_homological {
                    self.bump("bi_homological");
                }
                if *tri_homological {
                    self.bump("tri_homological");
                }
            }
            Verdict::Orthohomology {
                family,
                generated,
                k_orthology,
                k_homology,
                orthohomological,
                bi_orthologic_and_bi_homological,
                bi_orthohomological,
            } => {
                let fam = match family {
                    Family::Bihomological => "bihomological",
                    Family::Biorthologic => "biorthologic",
                };
                if *generated {
                    self.bump(format!("{fam}.generated"));
                    self.bump(format!("{fam}.k_orthology_{k_orthology}"));
                    self.bump(format!("{fam}.k_homology_{k_homology}"));
                    self.bump(format!("{fam}.orthohomological_{}", orthohomological.len()));
                }
                if *bi_orthologic_and_bi_homological {
                    self.bump("bi_orthologic_and_bi_homological");
                }
                if *bi_orthohomological {
                    self.bump("bi_orthohomological");
                }
            }
            Verdict::Orthology3d {
                deficit_zero,
                planes_common_line,
                feet_concurrent,
                tri_orthologic,
                feet_tri_concurrent,
                coplanar,
            } => {
                self.bump(format!("deficit_zero_{}", deficit_zero.len()));
                if planes_common_line == deficit_zero {
                    self.bump("planes_match_deficit");
                }
                for c in feet_concurrent {
                    self.bump(format!("feet_concurrent.{}", c.name()));
                }
                if *tri_orthologic {
                    self.bump("tri_orthologic");
                }
                if *feet_tri_concurrent {
                    self.bump("feet_tri_concurrent");
                }
                if *coplanar {
                    self.bump("coplanar");
                }
            }
            Verdict::Homology3d {
                generated,
                k_count,
                bi_homological,
                tri_homological,
                coplanar,
                ..
            } => {
                if *generated {
                    self.bump("generated");
                    self.bump(format!("k_count_{k_count}"));
                }
                if *bi_homological {
                    self.bump("bi_homological");
                }
                if *tri_homological {
                    self.bump("tri_homological");
                }
                if *coplanar {
                    self.bump("coplanar");
                }
            }
        }
    }

    pub fn finish(self, config: &TrialConfig) -> Summary {
        let mut frequencies = BTreeMap::new();
        let ratio = |n: u64, d: u64| if d == 0 { 0.0 } else { n as f64 / d as f64 };
        match config.question {
            Question::Bihomology => {
                frequencies.insert(
                    "tri_homology_frequency".to_string(),
                    ratio(self.get("tri_homological"), self.get("bi_homological")),
                );
            }
            Question::Homology3d => {
                frequencies.insert(
                    "bi_homology_frequency".to_string(),
                    ratio(self.get("bi_homological"), self.get("generated")),
                );
                frequencies.insert(
                    "tri_homology_frequency".to_string(),
                    ratio(self.get("tri_homological"), self.get("bi_homological")),
                );
            }
            Question::KOrthology => {
                for k in 3..=6 {
                    frequencies.insert(
                        format!("k{k}.solvable_frequency"),
                        ratio(
                            self.get(&format!("k{k}.solvable")),
                            self.get(&format!("k{k}.trials")),
                        ),
                    );
                }
            }
            Question::Orthohomology => {
                let total =
                    self.get("bihomological.generated") + self.get("biorthologic.generated");
                frequencies.insert(
                    "bi_orthohomology_frequency".to_string(),
                    ratio(self.get("bi_orthohomological"), total),
                );
            }
            Question::Orthology3d => {
                frequencies.insert(
                    "feet_tri_concurrent_frequency".to_string(),
                    ratio(self.get("feet_tri_concurrent"), self.get("trials")),
                );
            }
        }
        Summary {
            schema: SCHEMA.to_string(),
            question: config.question,
            trials: config.trials,
            seed: config.seed,
            coordinate_range: config.coordinate_range,
            counts: self.counts,
            frequencies,
        }
    }
}

pub fn summarize(config: &TrialConfig, findings: &[Finding]) -> Summary {
    let mut tally = Tally::default();
    findings.iter().for_each(|f| tally.add(f));
    tally.finish(config)
}

/// Re-derives a finding from its serialized input and compares.
pub fn verify_finding(line: &str) -> Result<bool> {
    let f: Finding = serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))?;
    if f.schema != SCHEMA || !f.exact {
        return Ok(false);
    }
    match assess(f.question, f.trial, &f.input) {
        Ok((spectra, space_homology, verdict)) => {
            Ok(spectra == f.spectra && space_homology == f.space_homology && verdict == f.verdict)
        }
        Err(Error::Parse(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(TrialConfig::new(Question::KOrthology, 0, 1, 5)
            .validate()
            .is_err());
        assert!(TrialConfig::new(Question::KOrthology, 1, 1, 1)
            .validate()
            .is_err());
        assert!(TrialConfig::new(Question::KOrthology, 1, 1, 2)
            .validate()
            .is_ok());
        assert!(matches!(
            run_search(&TrialConfig::new(Question::Bihomology, 0, 1, 5)),
            Err(Error::ConfigInvalid(_))
        ));
    }

    #[test]
    fn question_names() {
        for q in ["Q1", "Q2", "Q2o", "Q3", "Q4"] {
            assert_eq!(q.parse::<Question>().unwrap().id(), q);
        }
        assert_eq!(
            "Q3_3d_orthology".parse::<Question>().unwrap(),
            Question::Orthology3d
        );
        assert!("Q9".parse::<Question>().is_err());
    }

    #[test]
    fn single_trial_single_finding() {
        for q in ["Q1", "Q2", "Q2o", "Q3", "Q4"] {
            let cfg = TrialConfig::new(q.parse().unwrap(), 1, 11, 6);
            let out = run_search(&cfg).unwrap();
            assert_eq!(out.findings.len(), 1);
            assert_eq!(out.summary.counts["trials"], 1);
            assert!(verify_finding(&out.findings[0].to_line()).unwrap());
        }
    }

    #[test]
    fn q1_cyclic_trials_are_tri_orthologic() {
        let cfg = TrialConfig::new(Question::KOrthology, 24, 3, 8);
        let out = run_search(&cfg).unwrap();
        for f in &out.findings {
            let Verdict::KOrthology {
                imposed_k,
                cyclic_rank,
                solvable,
                conditions_hold,
                k_count_cyclic,
                ..
            } = &f.verdict
            else {
                panic!("wrong verdict kind");
            };
            assert!(*cyclic_rank <= 2);
            if *solvable {
                assert!(conditions_hold);
                if *imposed_k == 3 {
                    assert_eq!(*k_count_cyclic, 3);
                }
            }
        }
        assert_eq!(out.summary.counts["k3.solvable"], 6);
    }

    #[test]
    fn perturbed_finding_fails_verification() {
        let cfg = TrialConfig::new(Question::KOrthology, 1, 9, 6);
        let f = run_search(&cfg).unwrap().findings.remove(0);
        assert!(f.input.partner.is_some());
        let mut bad = f.clone();
        let p = bad.input.partner.as_mut().unwrap();
        let x = crate::rational::parse_rational(&p.a[0].0).unwrap();
        p.a[0] = crate::doc::RationalText::from_rational(&(x + crate::rational::int(1)));
        assert!(!verify_finding(&bad.to_line()).unwrap());
        let line = f.to_line();
        assert!(matches!(
            verify_finding(&line[..line.len() / 2]),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn trials_are_order_independent() {
        let cfg = TrialConfig::new(Question::Bihomology, 10, 77, 6);
        let all = run_search(&cfg).unwrap().findings;
        assert_eq!(run_trial(&cfg, 7).unwrap(), all[7]);
    }
}
