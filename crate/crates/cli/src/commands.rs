use std::fmt;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use orthology_core::constructions::approx::incenter_approx;
use orthology_core::constructions::{
    circum_pedal_triangle, circumcenter, circumcircle, complementary_triangle, orthocenter,
};
use orthology_core::doc::{
    point_doc, ApproxPointDoc, CircleDoc, HomologyReportDoc, OrthologyReportDoc, PairDocument,
    TriangleDoc, TriangleDocument,
};
use orthology_core::explorer::{
    for_each_finding, space_entry, space_homology_entry, Question, Tally, TrialConfig,
};
use orthology_core::homology::{generate_bihomological, homology_spectrum};
use orthology_core::orthology::{generate_biorthologic, orthology_spectrum};
use orthology_core::sampling::{derive_seed, rng_from_seed, sample_triangle};
use orthology_core::{parse_rational, Correspondence, Point2, SCHEMA};
use serde_json::{json, Value};

use crate::args::{
    CheckArgs, Cli, Command, ConstructArgs, GenerateArgs, Kind, RenderArgs, SearchArgs,
};
use crate::failure::{CliResult, Failure};
use crate::render::render_svg;

pub const SEED_ENV: &str = "ORTHOLOGY_LAB_SEED";

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Check(a) => check(a),
        Command::Construct(a) => construct(a),
        Command::Generate(a) => generate(a),
        Command::Search(a) => search(a),
        Command::Render(a) => render(a),
    }
}

fn read_input(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

/// Writes one line to standard output. A closed pipe is not an error.
fn say(args: fmt::Arguments<'_>) -> CliResult<()> {
    match writeln!(io::stdout().lock(), "{args}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(value: &Value) -> CliResult<()> {
    say(format_args!(
        "{}",
        serde_json::to_string_pretty(value).expect("json serializes")
    ))
}

fn parse_correspondences(s: &str) -> CliResult<Vec<Correspondence>> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Correspondence::ALL.to_vec());
    }
    s.parse::<Correspondence>()
        .map(|c| vec![c])
        .map_err(|_| Failure::invalid(format!("--correspondence: unknown correspondence {s:?}")))
}

fn resolve_seed(flag: u64) -> CliResult<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::invalid(format!("{SEED_ENV}: not an unsigned integer: {v:?}"))),
        Err(_) => Ok(flag),
    }
}

fn check(a: CheckArgs) -> CliResult<()> {
    let doc = PairDocument::parse(&read_input(&a.input)?)?;
    let selected = parse_correspondences(&a.correspondence)?;
    let keep = |c: &Correspondence| selected.contains(c);
    if doc.dimension()? == 3 {
        let (t1, t2) = doc.to_pair3()?;
        let space = selected
            .iter()
            .map(|&c| space_entry(&t1, &t2, c))
            .collect::<Result<Vec<_>, _>>()?;
        let homology: Option<Vec<_>> = a.homology.then(|| {
            selected
                .iter()
                .map(|&c| space_homology_entry(&t1, &t2, c))
                .collect()
        });
        if a.text {
            for e in &space {
                say(format_args!(
                    "{} deficit={} planes={} feet={}",
                    e.correspondence, e.deficit, e.planes, e.feet
                ))?;
            }
            for e in homology.iter().flatten() {
                say(format_args!("{} cevians={}", e.correspondence, e.cevians))?;
            }
        } else {
            let mut out = json!({"schema": SCHEMA, "dimension": 3, "space": space});
            if let Some(h) = homology {
                out["homology"] = json!(h);
            }
            emit(&out)?;
        }
        return Ok(());
    }

    let pair = doc.to_pair()?;
    let mut orthology = OrthologyReportDoc::from(&orthology_spectrum(&pair));
    orthology.entries.retain(|e| keep(&e.correspondence));
    let homology = a.homology.then(|| {
        let mut h = HomologyReportDoc::from(&homology_spectrum(&pair));
        h.entries.retain(|e| keep(&e.correspondence));
        h
    });
    if a.text {
        for e in &orthology.entries {
            let verdict = if e.orthologic {
                "orthologic"
            } else {
                "not-orthologic"
            };
            let mut line = format!("{} {verdict} deficit={}", e.correspondence, e.deficit);
            if let Some(c) = &e.center {
                line.push_str(&format!(" center={c}"));
            }
            if let Some(i) = &e.issue {
                line.push_str(&format!(" issue={i}"));
            }
            say(format_args!("{line}"))?;
        }
        say(format_args!(
            "k_count={} k_count_cyclic={}",
            orthology.k_count, orthology.k_count_cyclic
        ))?;
        if let Some(h) = &homology {
            for e in &h.entries {
                let verdict = match (e.degenerate, e.homological) {
                    (true, _) => "degenerate",
                    (false, true) => "homological",
                    (false, false) => "not-homological",
                };
                let mut line = format!("{} {verdict}", e.correspondence);
                if let Some(p) = &e.perspector {
                    line.push_str(&format!(" perspector={p}"));
                }
                say(format_args!("{line}"))?;
            }
            say(format_args!(
                "homology_k_count={} homology_k_count_cyclic={}",
                h.k_count, h.k_count_cyclic
            ))?;
        }
    } else {
        let mut out = json!({"schema": SCHEMA, "dimension": 2, "orthology": orthology});
        if let Some(h) = homology {
            out["homology"] = json!(h);
        }
        emit(&out)?;
    }
    Ok(())
}

fn parse_point_flag(s: &str) -> CliResult<Point2> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [x, y] = parts[..] else {
        return Err(Failure::invalid(format!(
            "--point: expected x,y, found {s:?}"
        )));
    };
    let coord = |t: &str, i: usize| {
        parse_rational(t).map_err(|e| Failure::invalid(format!("--point[{i}]: {e}")))
    };
    Ok(Point2::new(coord(x, 0)?, coord(y, 1)?))
}

fn construct(a: ConstructArgs) -> CliResult<()> {
    let t = TriangleDocument::parse(&read_input(&a.input)?)?;
    let out = match a.kind {
        Kind::Medial => json!({
            "schema": SCHEMA,
            "kind": "medial",
            "triangle": TriangleDoc::from_triangle2(&complementary_triangle(&t)),
        }),
        Kind::Orthocenter => {
            json!({"schema": SCHEMA, "kind": "orthocenter", "point": point_doc(&orthocenter(&t))})
        }
        Kind::Circumcenter => {
            json!({"schema": SCHEMA, "kind": "circumcenter", "point": point_doc(&circumcenter(&t))})
        }
        Kind::Circumcircle => {
            json!({"schema": SCHEMA, "kind": "circumcircle", "circle": CircleDoc::from(&circumcircle(&t))})
        }
        Kind::Circumpedal => {
            let d = a
                .point
                .as_deref()
                .ok_or_else(|| Failure::invalid("--point: required for circumpedal"))?;
            let d = parse_point_flag(d)?;
            json!({
                "schema": SCHEMA,
                "kind": "circumpedal",
                "point": point_doc(&d),
                "triangle": TriangleDoc::from_triangle2(&circum_pedal_triangle(&t, &d)?),
            })
        }
        Kind::Incenter => json!({
            "schema": SCHEMA,
            "kind": "incenter",
            "point": ApproxPointDoc::from(&incenter_approx(&t)),
        }),
    };
    emit(&out)?;
    Ok(())
}

fn generate(a: GenerateArgs) -> CliResult<()> {
    let seed = resolve_seed(a.seed)?;
    if a.range < 2 {
        return Err(Failure::invalid("--range: must be at least 2"));
    }
    let (base, base_kind) = if a.base == "random" {
        let mut rng = rng_from_seed(derive_seed(seed, 0));
        (sample_triangle(&mut rng, a.range), "random")
    } else {
        (
            TriangleDocument::parse(&read_input(Path::new(&a.base))?)?,
            "document",
        )
    };
    let (pair, generator) = if a.bi_orthologic {
        (generate_biorthologic(&base, seed)?, "bi-orthologic")
    } else {
        (generate_bihomological(&base, seed)?, "bi-homological")
    };
    let mut metadata = json!({"generator": generator, "seed": seed, "base": base_kind});
    if base_kind == "random" {
        metadata["range"] = json!(a.range);
    }
    let text = PairDocument::from_pair(&pair, Some(metadata)).to_json();
    match &a.out {
        Some(path) => fs::write(path, format!("{text}\n"))?,
        None => say(format_args!("{text}"))?,
    }
    Ok(())
}

fn summary_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".summary.json");
    PathBuf::from(name)
}

fn search(a: SearchArgs) -> CliResult<()> {
    let question: Question = a.question.parse()?;
    let config = TrialConfig::new(question, a.trials, resolve_seed(a.seed)?, a.range);
    config.validate()?;
    let summary_file = summary_path(&a.out);
    let result = write_search(&config, &a.out, &summary_file);
    if result.is_err() {
        let _ = fs::remove_file(&a.out);
        let _ = fs::remove_file(&summary_file);
    }
    result
}

fn write_search(config: &TrialConfig, out: &Path, summary_file: &Path) -> CliResult<()> {
    let mut w = BufWriter::new(fs::File::create(out)?);
    let mut tally = Tally::default();
    let mut io_error = None;
    for_each_finding(config, |f| {
        tally.add(f);
        if let Err(e) = writeln!(w, "{}", f.to_line()) {
            io_error = Some(e);
            return Err(orthology_core::Error::InvariantViolated(
                "write failed".into(),
            ));
        }
        Ok(())
    })
    .map_err(|e| match io_error.take() {
        Some(io) => Failure::from(io),
        None => Failure::from(e),
    })?;
    w.flush()?;
    let summary = serde_json::to_string_pretty(&tally.finish(config)).expect("summary serializes");
    fs::write(summary_file, format!("{summary}\n"))?;
    say(format_args!("{summary}"))?;
    Ok(())
}

fn render(a: RenderArgs) -> CliResult<()> {
    let doc = PairDocument::parse(&read_input(&a.input)?)?;
    if doc.dimension()? != 2 {
        return Err(Failure::invalid(
            "render: only planar (2D) pairs can be rendered",
        ));
    }
    let pair = doc.to_pair()?;
    let corr = match parse_correspondences(&a.correspondence)?.as_slice() {
        [c] => *c,
        _ => {
            return Err(Failure::invalid(
                "--correspondence: render needs a single correspondence",
            ))
        }
    };
    fs::write(&a.out, render_svg(&pair, corr))?;
    Ok(())
}
