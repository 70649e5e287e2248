#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_orthology-lab")
}

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

/// Runs the binary from the tests directory with a clean seed environment.
pub fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(tests_dir())
        .env_remove("ORTHOLOGY_LAB_SEED")
        .output()
        .expect("binary runs")
}

pub fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(tests_dir())
        .env(key, value)
        .output()
        .expect("binary runs")
}

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    /// Rendered to a file instead of standard output.
    pub svg: bool,
}

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        name: "check_worked.json",
        args: &["check", "fixtures/worked_medial.json", "--homology"],
        svg: false,
    },
    GoldenCase {
        name: "check_worked.txt",
        args: &["check", "fixtures/worked_medial.json", "--text"],
        svg: false,
    },
    GoldenCase {
        name: "check_worked_sigma0.txt",
        args: &[
            "check",
            "fixtures/worked_medial.json",
            "--correspondence",
            "σ0",
            "--text",
        ],
        svg: false,
    },
    GoldenCase {
        name: "check_non_orthologic.json",
        args: &["check", "fixtures/non_orthologic.json"],
        svg: false,
    },
    GoldenCase {
        name: "check_pair3d.json",
        args: &["check", "fixtures/pair3d.json", "--homology"],
        svg: false,
    },
    GoldenCase {
        name: "construct_medial.json",
        args: &["construct", "medial", "fixtures/worked_triangle.json"],
        svg: false,
    },
    GoldenCase {
        name: "construct_orthocenter.json",
        args: &["construct", "orthocenter", "fixtures/worked_triangle.json"],
        svg: false,
    },
    GoldenCase {
        name: "construct_circumcircle.json",
        args: &["construct", "circumcircle", "fixtures/right_triangle.json"],
        svg: false,
    },
    GoldenCase {
        name: "construct_circumpedal.json",
        args: &[
            "construct",
            "circumpedal",
            "fixtures/right_triangle.json",
            "--point",
            "2/3,2/3",
        ],
        svg: false,
    },
    GoldenCase {
        name: "construct_incenter.json",
        args: &["construct", "incenter", "fixtures/right_triangle.json"],
        svg: false,
    },
    GoldenCase {
        name: "generate_biorthologic_seed7.json",
        args: &["generate", "--bi-orthologic", "--seed", "7"],
        svg: false,
    },
    GoldenCase {
        name: "generate_bihomological_seed7.json",
        args: &[
            "generate",
            "--bi-homological",
            "--seed",
            "7",
            "--base",
            "fixtures/worked_triangle.json",
        ],
        svg: false,
    },
    GoldenCase {
        name: "render_worked.svg",
        args: &[
            "render",
            "fixtures/worked_medial.json",
            "--correspondence",
            "σ0",
        ],
        svg: true,
    },
    GoldenCase {
        name: "render_non_orthologic.svg",
        args: &[
            "render",
            "fixtures/non_orthologic.json",
            "--correspondence",
            "σ1",
        ],
        svg: true,
    },
];

/// Output of a golden case, or the failure to report.
pub fn produce(case: &GoldenCase) -> Result<Vec<u8>, String> {
    if case.svg {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let out = dir.path().join("out.svg");
        let mut args: Vec<&str> = case.args.to_vec();
        let out_str = out.to_str().unwrap().to_string();
        args.extend(["--out", &out_str]);
        let o = run(&args);
        if !o.status.success() {
            return Err(String::from_utf8_lossy(&o.stderr).into_owned());
        }
        std::fs::read(&out).map_err(|e| e.to_string())
    } else {
        let o = run(case.args);
        if !o.status.success() {
            return Err(String::from_utf8_lossy(&o.stderr).into_owned());
        }
        Ok(o.stdout)
    }
}

/// Compares against the stored file. `UPDATE_GOLDEN=1` rewrites it.
pub fn check_golden(case: &GoldenCase) -> Result<(), String> {
    let actual = produce(case)?;
    let path = tests_dir().join("golden").join(case.name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{} differs from golden output", case.name))
    }
}

pub struct ExitCase {
    pub label: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
    /// Substring expected on standard error.
    pub stderr: &'static str,
}

pub const EXIT_CASES: &[ExitCase] = &[
    ExitCase {
        label: "zero denominator",
        args: &["check", "fixtures/zero_denominator.json"],
        code: 2,
        stderr: "triangle1.B[0]: zero denominator",
    },
    ExitCase {
        label: "collinear triangle",
        args: &["check", "fixtures/collinear.json"],
        code: 2,
        stderr: "triangle1",
    },
    ExitCase {
        label: "missing file",
        args: &["check", "fixtures/does_not_exist.json"],
        code: 2,
        stderr: "does_not_exist",
    },
    ExitCase {
        label: "unknown correspondence",
        args: &[
            "check",
            "fixtures/worked_medial.json",
            "--correspondence",
            "x9",
        ],
        code: 2,
        stderr: "--correspondence",
    },
    ExitCase {
        label: "point outside circle",
        args: &[
            "construct",
            "circumpedal",
            "fixtures/right_triangle.json",
            "--point",
            "5,5",
        ],
        code: 2,
        stderr: "OutsideOrOnCircle",
    },
    ExitCase {
        label: "circumpedal without point",
        args: &["construct", "circumpedal", "fixtures/right_triangle.json"],
        code: 2,
        stderr: "--point",
    },
    ExitCase {
        label: "render 3D",
        args: &["render", "fixtures/pair3d.json", "--out", "unused.svg"],
        code: 2,
        stderr: "2D",
    },
    ExitCase {
        label: "zero trials",
        args: &[
            "search",
            "--question",
            "Q1",
            "--trials",
            "0",
            "--out",
            "unused.jsonl",
        ],
        code: 2,
        stderr: "trials",
    },
    ExitCase {
        label: "unknown question",
        args: &[
            "search",
            "--question",
            "Q9",
            "--trials",
            "1",
            "--out",
            "unused.jsonl",
        ],
        code: 2,
        stderr: "Q9",
    },
    ExitCase {
        label: "bad flag",
        args: &["check"],
        code: 2,
        stderr: "",
    },
];

pub fn check_exit(case: &ExitCase) -> Result<(), String> {
    let o = run(case.args);
    let stderr = String::from_utf8_lossy(&o.stderr);
    match o.status.code() {
        Some(c) if c == case.code && stderr.contains(case.stderr) => Ok(()),
        other => Err(format!("{}: exit {other:?}, stderr {stderr:?}", case.label)),
    }
}
