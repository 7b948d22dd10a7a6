#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Run the CLI in-process. `{name}` in an argument is replaced by the fixture path.
pub fn run_cli(args: &[&str]) -> Outcome {
    let argv: Vec<String> = std::iter::once("neurocode".to_string())
        .chain(args.iter().map(|a| match a.strip_prefix('@') {
            Some(name) => fixture(name).display().to_string(),
            None => a.to_string(),
        }))
        .collect();
    let mut stdin: &[u8] = &[];
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let status = neurocode::cli::run(argv, &mut stdin, &mut stdout, &mut stderr);
    Outcome {
        status,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

/// Golden CLI cases: (golden file name, arguments). `@file` names a fixture.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("circle.complete", &["complete", "@circle.code"]),
    ("circle.complex", &["complex", "@circle.code"]),
    ("circle.homology", &["homology", "@circle.code"]),
    ("circle.pi1", &["pi1", "@circle.code"]),
    ("circle.canonical-form", &["canonical-form", "@circle.code"]),
    ("circle.relations", &["relations", "@circle.code"]),
    ("circle.dim-bound", &["dim-bound", "@circle.code"]),
    (
        "circle.path",
        &["path", "@circle.code", "--from", "1", "--to", "3"],
    ),
    ("circle.cover-code", &["cover-code", "@circle.cover"]),
    ("circle.atoms", &["atoms", "@circle.cover"]),
    ("circle.nerve-check", &["nerve-check", "@circle.cover"]),
    (
        "circle.nerve-homology",
        &["homology", "--cover", "@circle.cover"],
    ),
    ("interval.complete", &["complete", "@interval.code"]),
    ("interval.complex", &["complex", "@interval.code"]),
    ("interval.homology", &["homology", "@interval.code"]),
    ("interval.pi1", &["pi1", "@interval.code"]),
    (
        "interval.canonical-form",
        &["canonical-form", "@interval.code"],
    ),
    ("interval.relations", &["relations", "@interval.code"]),
    ("interval.dim-bound", &["dim-bound", "@interval.code"]),
    (
        "interval.path",
        &["path", "@interval.code", "--from", "2", "--to", "1"],
    ),
    ("interval.cover-code", &["cover-code", "@interval.cover"]),
    ("interval.atoms", &["atoms", "@interval.cover"]),
    ("interval.nerve-check", &["nerve-check", "@interval.cover"]),
    ("sphere.complete", &["complete", "@sphere.code"]),
    ("sphere.complex", &["complex", "@sphere.code"]),
    ("sphere.homology", &["homology", "@sphere.code"]),
    ("sphere.pi1", &["pi1", "@sphere.code"]),
    ("sphere.canonical-form", &["canonical-form", "@sphere.code"]),
    ("sphere.relations", &["relations", "@sphere.code"]),
    ("sphere.dim-bound", &["dim-bound", "@sphere.code"]),
    (
        "sphere.path",
        &["path", "@sphere.code", "--from", "4", "--to", "1"],
    ),
    ("sphere.cover-code", &["cover-code", "@sphere.cover"]),
    ("sphere.atoms", &["atoms", "@sphere.cover"]),
    ("sphere.nerve-check", &["nerve-check", "@sphere.cover"]),
    (
        "sphere.nerve-pi1",
        &["pi1", "--cover", "@sphere.cover", "--basepoint", "2"],
    ),
    (
        "circle.machine.complex",
        &["--machine", "complex", "@circle.code"],
    ),
    ("circle.machine.pi1", &["--machine", "pi1", "@circle.code"]),
    (
        "sphere.machine.homology",
        &["--machine", "homology", "@sphere.code"],
    ),
    (
        "interval.machine.atoms",
        &["--machine", "atoms", "@interval.cover"],
    ),
    (
        "interval.machine.nerve-check",
        &["--machine", "nerve-check", "@interval.cover"],
    ),
];

pub fn golden_path(name: &str) -> PathBuf {
    fixture("golden").join(format!("{name}.out"))
}

/// Compare against the golden file; `UPDATE_GOLDEN=1` rewrites it instead.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = fs::read_to_string(&path)
        .map_err(|e| format!("cannot read golden file {}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "golden mismatch for {name}\n--- expected\n{expected}--- actual\n{actual}"
        ))
    }
}

/// Run every golden case; returns the failures.
pub fn run_golden_cases() -> Vec<String> {
    let mut failures = Vec::new();
    for (name, args) in GOLDEN_CASES {
        let out = run_cli(args);
        if out.status != 0 {
            failures.push(format!(
                "{name}: exit {} ({})",
                out.status,
                out.stderr.trim()
            ));
            continue;
        }
        if let Err(e) = check_golden(name, &out.stdout) {
            failures.push(e);
        }
    }
    failures
}
