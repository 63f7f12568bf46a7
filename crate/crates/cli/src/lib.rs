//! Command implementations for the `staralg` binary.
//!
//! Every command is a pure function from arguments to an [`Outcome`] so the
//! golden tests can run it in-process as well as through the binary.
//!
//! Exit codes: 0 ok, 1 parse or IO error, 2 unit axiom violated, 3 check
//! failed, 4 precondition unmet.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use clap::{Parser, Subcommand};

use staralg::catalog::{self, KEYS};
use staralg::conjugation::{check_conjugation_algebra, has_conjugation};
use staralg::exact::parse_matrix;
use staralg::expr::{self, EvalOptions};
use staralg::file::{load_algebra, AlgebraFile};
use staralg::mappings::{classify_antilinear, classify_linear, Classification, MapWitness};
use staralg::{Algebra, Error, LinearMap, Side};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_UNIT: i32 = 2;
pub const EXIT_CHECK: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "staralg", version, about = "Exact algebras with conjugation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the unit axiom and report commutativity and associativity.
    Validate {
        /// Algebra file, or a built-in key if no such file exists.
        algebra: String,
    },
    /// Print the multiplication table of the basis.
    Table { algebra: String },
    /// Decide whether the conjugation reverses products.
    CheckConjugation { algebra: String },
    /// Print a basis of the center.
    Center { algebra: String },
    /// Print a basis of the nucleus.
    Nucleus { algebra: String },
    /// Decide whether a matrix is an A★-linear (or antilinear) map.
    ClassifyMap {
        algebra: String,
        /// Matrix file: one row per line, rationals separated by spaces.
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value = "left")]
        side: Side,
        /// Classify as antilinear instead of linear.
        #[arg(long)]
        anti: bool,
    },
    /// Evaluate an element expression.
    Eval {
        algebra: String,
        #[arg(conflicts_with = "expr_flag", required_unless_present = "expr_flag")]
        expr: Option<String>,
        #[arg(long = "expr", id = "expr_flag")]
        expr_flag: Option<String>,
        /// Allow conj/re/im on an algebra that fails the conjugation check.
        #[arg(long)]
        force_conjugation: bool,
    },
    /// Print a built-in algebra in the file format.
    Export { key: String },
    /// List the built-in algebras.
    Catalog,
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stdout: String, stderr: impl Into<String>) -> Self {
        Self {
            code,
            stdout,
            stderr: stderr.into(),
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::UnitAxiom { .. } => EXIT_UNIT,
        Error::ConjugationGuard { .. } => EXIT_CHECK,
        Error::NonAssociative(_) | Error::NoConjugation(_) => EXIT_PRECONDITION,
        _ => EXIT_PARSE,
    }
}

fn error_outcome(e: Error) -> Outcome {
    let msg = match &e {
        Error::UnitAxiom { i, j, k, .. } => format!("unit axiom violated at (i={i},j={j},k={k})"),
        _ => e.to_string(),
    };
    Outcome::fail(error_code(&e), String::new(), format!("error: {msg}\n"))
}

/// Reads `arg` as a file if it exists, otherwise as a catalog key.
pub fn resolve_algebra(arg: &str) -> Result<Algebra, Error> {
    let path = Path::new(arg);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| Error::File(format!("{arg}: {e}")))?;
        return load_algebra(&text);
    }
    match catalog::builtin(arg) {
        Ok(entry) => Ok(entry.algebra),
        Err(_) => Err(Error::File(format!(
            "{arg}: no such file or built-in algebra"
        ))),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, String::new(), text)
            }
        }
    }
}

pub fn execute(command: Command) -> Outcome {
    let result = match command {
        Command::Validate { algebra } => validate(&algebra),
        Command::Table { algebra } => resolve_algebra(&algebra).map(|a| Outcome::ok(table(&a))),
        Command::CheckConjugation { algebra } => resolve_algebra(&algebra).map(|a| check(&a)),
        Command::Center { algebra } => {
            resolve_algebra(&algebra).map(|a| Outcome::ok(subspace("center", &a, a.center_basis())))
        }
        Command::Nucleus { algebra } => resolve_algebra(&algebra)
            .map(|a| Outcome::ok(subspace("nucleus", &a, a.nucleus_basis()))),
        Command::ClassifyMap {
            algebra,
            matrix,
            side,
            anti,
        } => classify(&algebra, &matrix, side, anti),
        Command::Eval {
            algebra,
            expr,
            expr_flag,
            force_conjugation,
        } => {
            let text = expr.or(expr_flag).unwrap_or_default();
            eval(&algebra, &text, force_conjugation)
        }
        Command::Export { key } => catalog::builtin(&key)
            .map(|e| Outcome::ok(AlgebraFile::from_algebra(&e.algebra).to_json())),
        Command::Catalog => Ok(Outcome::ok(list_catalog())),
    };
    result.unwrap_or_else(error_outcome)
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn names(a: &Algebra, idx: &[usize]) -> String {
    let parts: Vec<&str> = idx.iter().map(|&i| a.basis_name(i)).collect();
    format!("({})", parts.join(","))
}

fn validate(arg: &str) -> Result<Outcome, Error> {
    let a = resolve_algebra(arg)?;
    let mut out = String::new();
    writeln!(out, "name: {}", a.name()).unwrap();
    writeln!(out, "dimension: {}", a.dim()).unwrap();
    writeln!(out, "basis: {}", a.basis_names().join(" ")).unwrap();
    writeln!(out, "unit: ok").unwrap();
    match a.commutativity_witness() {
        None => writeln!(out, "commutative: yes").unwrap(),
        Some((i, j)) => writeln!(out, "commutative: no {}", names(&a, &[i, j])).unwrap(),
    }
    match a.associativity_witness() {
        None => writeln!(out, "associative: yes").unwrap(),
        Some((i, j, k)) => writeln!(out, "associative: no {}", names(&a, &[i, j, k])).unwrap(),
    }
    Ok(Outcome::ok(out))
}

/// Basis names across the top and down the side; row `i`, column `j` holds
/// `e_i * e_j`.
pub fn table(a: &Algebra) -> String {
    let n = a.dim();
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(n + 1);
    let mut header = vec![String::new()];
    header.extend(a.basis_names().iter().cloned());
    grid.push(header);
    for i in 0..n {
        let mut row = vec![a.basis_name(i).to_string()];
        row.extend((0..n).map(|j| a.basis_product(i, j).to_string()));
        grid.push(row);
    }
    let widths: Vec<usize> = (0..=n)
        .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
    }
    out
}

fn check(a: &Algebra) -> Outcome {
    let r = check_conjugation_algebra(a);
    let mut out = String::new();
    writeln!(out, "algebra: {}", a.name()).unwrap();
    match &r.antihom_witness {
        None => writeln!(
            out,
            "antihomomorphism: PASS ({} basis pairs)",
            r.pairs_checked
        ),
        Some(w) => {
            let (k, l) = (a.basis_name(w.k), a.basis_name(w.l));
            writeln!(
                out,
                "antihomomorphism: FAIL ({k}*{l})* = {} but {l}* * {k}* = {}",
                w.left, w.right
            )
        }
    }
    .unwrap();
    match &r.constants_witness {
        None => writeln!(out, "constants: PASS ({} constants)", r.constants_checked),
        Some(w) => {
            let rule = if w.m == 0 {
                "symmetric"
            } else {
                "antisymmetric"
            };
            writeln!(
                out,
                "constants: FAIL at (k={},l={},m={}): C^m_kl = {} and C^m_lk = {} are not {rule}",
                w.k, w.l, w.m, w.value, w.partner
            )
        }
    }
    .unwrap();
    writeln!(out, "criteria agree: {}", yes_no(r.criteria_agree())).unwrap();
    writeln!(out, "result: {}", if r.passed { "PASS" } else { "FAIL" }).unwrap();
    if r.passed {
        Outcome::ok(out)
    } else {
        Outcome::fail(EXIT_CHECK, out, "")
    }
}

fn subspace(label: &str, a: &Algebra, basis: Vec<staralg::Element>) -> String {
    let mut out = format!("{label} of {}: dimension {}\n", a.name(), basis.len());
    for v in basis {
        writeln!(out, "{v}").unwrap();
    }
    out
}

fn witness_text(a: &Algebra, w: &MapWitness, side: Side, anti: bool) -> String {
    let (ea, ex) = (a.basis_name(w.a), a.basis_name(w.x));
    let star = if anti { "★" } else { "" };
    let (arg, rhs) = match (side, anti) {
        (Side::Left, false) => (format!("{ea}*{ex}"), format!("{ea}*f({ex})")),
        (Side::Right, false) => (format!("{ex}*{ea}"), format!("f({ex})*{ea}")),
        (Side::Left, true) => (format!("{ex}*{ea}"), format!("{ea}{star}*f({ex})")),
        (Side::Right, true) => (format!("{ea}*{ex}"), format!("f({ex})*{ea}{star}")),
    };
    format!("f({arg}) = {} but {rhs} = {}", w.lhs, w.rhs)
}

fn classify(alg_arg: &str, matrix_path: &str, side: Side, anti: bool) -> Result<Outcome, Error> {
    let a = resolve_algebra(alg_arg)?;
    let text =
        fs::read_to_string(matrix_path).map_err(|e| Error::File(format!("{matrix_path}: {e}")))?;
    let m = LinearMap::new(&a, parse_matrix(&text)?)?;
    let result = if anti {
        classify_antilinear(&m, side)?
    } else {
        classify_linear(&m, side)?
    };
    let kind = if anti { "antilinear" } else { "linear" };
    Ok(match result {
        Classification::Accepted { generator } => {
            let form = match (side, anti) {
                (Side::Left, false) => "x*b",
                (Side::Right, false) => "b*x",
                (Side::Left, true) => "x★*b",
                (Side::Right, true) => "b*x★",
            };
            Outcome::ok(format!("{kind}: f(x) = {form} with b = {generator}\n"))
        }
        Classification::Rejected(w) => Outcome::fail(
            EXIT_CHECK,
            format!(
                "not A★-{kind} (side {side}): witness {}\n",
                witness_text(&a, &w, side, anti)
            ),
            "",
        ),
    })
}

fn eval(alg_arg: &str, text: &str, force: bool) -> Result<Outcome, Error> {
    let a = resolve_algebra(alg_arg)?;
    let ast = expr::parse(text)?;
    let opts = EvalOptions {
        force_conjugation: force,
    };
    let value = expr::eval_ast(&ast, &a, opts)?;
    let mut outcome = Outcome::ok(format!("{value}\n"));
    if force && ast.uses_conjugation() && !has_conjugation(&a) {
        outcome.stderr = format!(
            "warning: {} fails the conjugation check; conj/re/im evaluated anyway\n",
            a.name()
        );
    }
    Ok(outcome)
}

fn list_catalog() -> String {
    let mut out = String::new();
    for key in KEYS {
        let e = catalog::builtin(key).expect("catalog keys are valid");
        writeln!(out, "{key:<14} dim {}  {}", e.algebra.dim(), e.notes).unwrap();
    }
    out
}
