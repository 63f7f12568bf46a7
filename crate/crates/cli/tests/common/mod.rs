#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// (name, arguments, exit code). Paths are relative to the crate root.
pub const GOLDEN: &[(&str, &[&str], i32)] = &[
    (
        "validate_quaternion",
        &["validate", "tests/fixtures/quaternion.json"],
        0,
    ),
    (
        "validate_octonion",
        &["validate", "tests/fixtures/octonion.json"],
        0,
    ),
    (
        "validate_idempotent",
        &["validate", "tests/fixtures/idempotent.json"],
        0,
    ),
    (
        "validate_broken_unit",
        &["validate", "tests/fixtures/broken_unit.json"],
        2,
    ),
    (
        "validate_bad_dimension",
        &["validate", "tests/fixtures/bad_dimension.json"],
        1,
    ),
    (
        "validate_malformed",
        &["validate", "tests/fixtures/malformed.json"],
        1,
    ),
    (
        "table_complex",
        &["table", "tests/fixtures/complex.json"],
        0,
    ),
    (
        "table_quaternion",
        &["table", "tests/fixtures/quaternion.json"],
        0,
    ),
    (
        "table_octonion",
        &["table", "tests/fixtures/octonion.json"],
        0,
    ),
    ("table_mat2", &["table", "tests/fixtures/mat2.json"], 0),
    (
        "check_conjugation_quaternion",
        &["check-conjugation", "tests/fixtures/quaternion.json"],
        0,
    ),
    (
        "check_conjugation_octonion",
        &["check-conjugation", "tests/fixtures/octonion.json"],
        0,
    ),
    (
        "check_conjugation_idempotent",
        &["check-conjugation", "tests/fixtures/idempotent.json"],
        3,
    ),
    (
        "center_quaternion",
        &["center", "tests/fixtures/quaternion.json"],
        0,
    ),
    (
        "center_complex",
        &["center", "tests/fixtures/complex.json"],
        0,
    ),
    (
        "center_octonion",
        &["center", "tests/fixtures/octonion.json"],
        0,
    ),
    (
        "nucleus_quaternion",
        &["nucleus", "tests/fixtures/quaternion.json"],
        0,
    ),
    (
        "nucleus_octonion",
        &["nucleus", "tests/fixtures/octonion.json"],
        0,
    ),
    (
        "classify_right_mult_j",
        &[
            "classify-map",
            "tests/fixtures/quaternion.json",
            "--matrix",
            "tests/fixtures/quaternion_right_mult_j.txt",
            "--side",
            "left",
        ],
        0,
    ),
    (
        "classify_left_mult_i",
        &[
            "classify-map",
            "tests/fixtures/quaternion.json",
            "--matrix",
            "tests/fixtures/quaternion_left_mult_i.txt",
            "--side",
            "left",
        ],
        3,
    ),
    (
        "classify_left_mult_i_right",
        &[
            "classify-map",
            "tests/fixtures/quaternion.json",
            "--matrix",
            "tests/fixtures/quaternion_left_mult_i.txt",
            "--side",
            "right",
        ],
        0,
    ),
    (
        "classify_conj_anti",
        &[
            "classify-map",
            "tests/fixtures/quaternion.json",
            "--matrix",
            "tests/fixtures/quaternion_conj.txt",
            "--anti",
        ],
        0,
    ),
    (
        "classify_right_mult_j_anti",
        &[
            "classify-map",
            "tests/fixtures/quaternion.json",
            "--matrix",
            "tests/fixtures/quaternion_right_mult_j.txt",
            "--anti",
        ],
        3,
    ),
    (
        "classify_octonion",
        &[
            "classify-map",
            "tests/fixtures/octonion.json",
            "--matrix",
            "tests/fixtures/octonion_identity.txt",
        ],
        4,
    ),
    (
        "classify_idempotent_anti",
        &[
            "classify-map",
            "tests/fixtures/idempotent.json",
            "--matrix",
            "tests/fixtures/identity2.txt",
            "--anti",
        ],
        4,
    ),
    (
        "eval_conj_quaternion",
        &["eval", "quaternion", "conj(1 + 2*i + 3*j + 4*k)"],
        0,
    ),
    (
        "eval_flag_quaternion",
        &[
            "eval",
            "tests/fixtures/quaternion.json",
            "--expr",
            "comm(i, j) + 1/2*k",
        ],
        0,
    ),
    (
        "eval_assoc_octonion",
        &["eval", "octonion", "assoc(e1, e2, e4)"],
        0,
    ),
    (
        "eval_guard_idempotent",
        &["eval", "idempotent", "conj(e1)"],
        3,
    ),
    (
        "eval_forced_idempotent",
        &["eval", "idempotent", "conj(e1)", "--force-conjugation"],
        0,
    ),
    ("eval_syntax", &["eval", "quaternion", "2i"], 1),
    ("export_complex", &["export", "complex"], 0),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.txt"))
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_binary(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_staralg"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Golden text is stdout followed by stderr, so error messages are pinned too.
pub fn transcript(run: &Run) -> String {
    format!("{}{}", run.stdout, run.stderr)
}

/// Returns the first mismatch, if any.
pub fn check_golden(name: &str, args: &[&str], code: i32) -> Result<(), String> {
    let run = run_binary(args);
    if run.code != code {
        return Err(format!("{name}: exit {} (expected {code})", run.code));
    }
    let expected =
        std::fs::read_to_string(golden_path(name)).map_err(|e| format!("{name}: {e}"))?;
    let got = transcript(&run);
    if got != expected {
        return Err(format!(
            "{name}: output differs\n--- expected\n{expected}--- got\n{got}"
        ));
    }
    Ok(())
}

pub fn fixture(name: &str) -> PathBuf {
    Path::new("tests/fixtures").join(name)
}
