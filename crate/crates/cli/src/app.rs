//! Argument parsing and command dispatch. Reports are JSON on stdout.
//!
//! Exit codes: 0 success or pass, 1 a mathematical "fail" verdict, 2 usage,
//! parse or input errors, 3 an inconclusive answer.

use crate::document::{emit_algebra, parse_algebra, parse_element, DocumentError};
use crate::suites::{corpus_entries, is_suite, replay, run_suite, suite_names, Counterexample, SuiteConfig, VerifyResult};
use clap::{Parser, Subcommand, ValueEnum};
use novikov_core::families::{apn, example1, zero_algebra, ApnParams, CorpusEntry, CorpusKind};
use novikov_core::quasiregular::{qr_solve, QrKind};
use novikov_core::radicals::{
    baer_radical, derived_series, is_nilpotent, is_right_nilpotent, is_solvable, SearchMethod,
};
use novikov_core::structure::{
    andrunakievich_radical, b_ideals, enumerate_ideals, heart, in_b_class, is_prime, is_semiprime, is_simple, Verdict,
};
use novikov_core::subspaces::{nucleus, product_space, two_sided_annihilator};
use novikov_core::{Algebra, FieldSpec, Subspace};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "novikov", version, about = "Exact computations in finite-dimensional Novikov algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Novikov identities on basis triples.
    Check { file: PathBuf },
    /// Summary of structural invariants.
    Info {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// List every ideal (finite fields only).
    Ideals {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// The nucleus.
    Nucleus { file: PathBuf },
    /// The Baer or Andrunakievich radical.
    Radical {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: RadicalKind,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// The heart and membership in the idempotent-heart class.
    Heart {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Solve for a quasi-inverse of one element.
    Qr {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: QrArg,
        #[arg(long)]
        element: String,
    },
    /// Write a named algebra as a document.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_enum, default_value = "fp")]
        field: FieldArg,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        b: i64,
        /// Dimension of the zero algebra.
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites over a corpus.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "all")]
        corpus: String,
        /// Include slow suites.
        #[arg(long)]
        long: bool,
        /// Rerun a counterexample payload.
        #[arg(long, conflicts_with = "algebra")]
        replay: Option<PathBuf>,
        /// Run on this algebra instead of a corpus.
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RadicalKind {
    Baer,
    Andrunakievich,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QrArg {
    Left,
    Right,
    TwoSided,
}

impl From<QrArg> for QrKind {
    fn from(k: QrArg) -> Self {
        match k {
            QrArg::Left => QrKind::Left,
            QrArg::Right => QrKind::Right,
            QrArg::TwoSided => QrKind::TwoSided,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Example1,
    Apn,
    Zero,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldArg {
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "Fp", alias = "fp")]
    Fp,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Document(#[from] DocumentError),
    #[error("{0}")]
    Core(#[from] novikov_core::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                novikov_core::Error::CapExceeded { .. }
                | novikov_core::Error::RationalsNotEnumerable
                | novikov_core::Error::BudgetExceeded { .. },
            ) => EXIT_INCONCLUSIVE,
            _ => EXIT_USAGE,
        }
    }
}

struct Report {
    body: Value,
    code: i32,
    /// Printed verbatim instead of `body`.
    text: Option<String>,
}

impl Report {
    fn json(body: Value, code: i32) -> Self {
        Report { body, code, text: None }
    }
}

fn ok(body: Value) -> Result<Report, CliError> {
    Ok(Report::json(body, EXIT_OK))
}

/// Parses `args` (including the program name), runs the command and writes
/// the report. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(report) => {
            let _ = match &report.text {
                Some(text) => write!(out, "{text}"),
                None => writeln!(out, "{}", serde_json::to_string_pretty(&report.body).expect("serializable")),
            };
            report.code
        }
        Err(e) => {
            let code = e.exit_code();
            if code == EXIT_INCONCLUSIVE {
                let body = json!({"status": "inconclusive", "reason": e.to_string()});
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("serializable"));
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

/// `--cap`, else `NOVIKOV_CAP`, else the library default.
fn resolve_cap(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("NOVIKOV_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("NOVIKOV_CAP must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(novikov_core::DEFAULT_CAP),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load(path: &Path) -> Result<Algebra, CliError> {
    Ok(parse_algebra(&read_text(path)?)?)
}

fn basis_strings(alg: &Algebra, s: &Subspace) -> Value {
    json!(s.basis().iter().map(|v| alg.format_element(v)).collect::<Vec<_>>())
}

fn verdict(v: Verdict) -> Value {
    match v {
        Verdict::True => json!(true),
        Verdict::False => json!(false),
        Verdict::Inconclusive => json!("inconclusive"),
    }
}

fn method_name(m: SearchMethod) -> &'static str {
    match m {
        SearchMethod::Annihilator => "annihilator",
        SearchMethod::BasisClosure => "basis-closure",
        SearchMethod::DerivedTail => "derived-tail",
        SearchMethod::ElementScan => "element-scan",
        SearchMethod::SmallDimension => "small-dimension",
        SearchMethod::None => "none",
    }
}

fn dispatch(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Check { file } => check(&load(&file)?),
        Command::Info { file, cap } => info(&load(&file)?, resolve_cap(cap)?),
        Command::Ideals { file, cap } => {
            let alg = load(&file)?;
            let inv = enumerate_ideals(&alg, resolve_cap(cap)?)?;
            ok(json!({
                "count": inv.ideals.len(),
                "complete": inv.complete,
                "ideals": inv.ideals.iter().map(|s| basis_strings(&alg, s)).collect::<Vec<_>>(),
                "minimal": inv.minimal().into_iter().map(|s| basis_strings(&alg, s)).collect::<Vec<_>>(),
            }))
        }
        Command::Nucleus { file } => {
            let alg = load(&file)?;
            let n = nucleus(&alg);
            ok(json!({"dim": n.dim(), "nucleus": basis_strings(&alg, &n)}))
        }
        Command::Radical { file, kind, cap } => radical(&load(&file)?, kind, resolve_cap(cap)?),
        Command::Heart { file, cap } => {
            let alg = load(&file)?;
            let cap = resolve_cap(cap)?;
            let h = heart(&alg, cap)?;
            let idempotent = product_space(&alg, &h, &h)? == h;
            ok(json!({
                "dim": h.dim(),
                "heart": basis_strings(&alg, &h),
                "subdirectly_irreducible": !h.is_zero(),
                "idempotent": idempotent,
                "in_b_class": in_b_class(&alg, cap)?,
            }))
        }
        Command::Qr { file, kind, element } => {
            let alg = load(&file)?;
            let x = parse_element(&alg, &element)?;
            let sol = qr_solve(&alg, &x, kind.into())?;
            ok(json!({
                "kind": sol.kind.name(),
                "x": alg.format_element(x.coeffs()),
                "solvable": sol.y.is_some(),
                "y": sol.y.as_ref().map(|y| alg.format_element(y.coeffs())),
                "system_rank": sol.system_rank,
            }))
        }
        Command::Gen { family, field, p, n, a, b, dim, output } => {
            let field = match field {
                FieldArg::Q => FieldSpec::rationals(),
                FieldArg::Fp => FieldSpec::prime(p)?,
            };
            let alg = match family {
                Family::Example1 => example1(field),
                Family::Zero => zero_algebra(field, dim),
                Family::Apn => {
                    let p = field.modulus().ok_or_else(|| CliError::Usage("apn needs --field Fp".into()))?;
                    apn(&ApnParams::new(p, n, a, b)?)?
                }
            };
            let text = emit_algebra(&alg);
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
                    ok(json!({"output": path.display().to_string(), "dim": alg.dim()}))
                }
                None => Ok(Report { body: Value::Null, code: EXIT_OK, text: Some(text) }),
            }
        }
        Command::Verify { suite, corpus, long, replay: replay_path, algebra, cap } => {
            verify(&suite, &corpus, long, replay_path.as_deref(), algebra.as_deref(), resolve_cap(cap)?)
        }
    }
}

fn check(alg: &Algebra) -> Result<Report, CliError> {
    let report = alg.check_novikov();
    let derived = alg.check_derived_identity();
    let failure = report.failure.as_ref().map(|f| {
        json!({
            "identity": f.identity.to_string(),
            "indices": f.indices,
            "labels": f.indices.iter().map(|&i| alg.labels()[i].clone()).collect::<Vec<_>>(),
        })
    });
    let body = json!({
        "novikov": report.holds,
        "failure": failure,
        "derived_identity": derived.holds,
        "tuples_checked": report.tuples_checked,
    });
    Ok(Report::json(body, if report.holds { EXIT_OK } else { EXIT_FAIL }))
}

fn info(alg: &Algebra, cap: usize) -> Result<Report, CliError> {
    let full = Subspace::full(alg.field(), alg.dim());
    let square = product_space(alg, &full, &full)?;
    let n = nucleus(alg);
    let prime = match is_prime(alg, cap) {
        Ok(v) => v,
        Err(novikov_core::Error::CapExceeded { .. }) => Verdict::Inconclusive,
        Err(e) => return Err(e.into()),
    };
    let simple = is_simple(alg);
    ok(json!({
        "field": alg.field().to_string(),
        "dim": alg.dim(),
        "basis": alg.labels(),
        "novikov": alg.check_novikov().holds,
        "associative": n.is_full(),
        "nucleus": basis_strings(alg, &n),
        "annihilator": basis_strings(alg, &two_sided_annihilator(alg)),
        "square_dim": square.dim(),
        "derived_series_dims": derived_series(alg, &full)?.chain.iter().map(Subspace::dim).collect::<Vec<_>>(),
        "solvable": is_solvable(alg, &full)?,
        "right_nilpotent": is_right_nilpotent(alg, &full)?,
        "nilpotent": is_nilpotent(alg, &full)?,
        "square_nilpotent": is_nilpotent(alg, &square)?,
        "semiprime": verdict(is_semiprime(alg, cap)),
        "prime": verdict(prime),
        "simple": {"simple": simple.simple, "certified": simple.certified},
    }))
}

fn radical(alg: &Algebra, kind: RadicalKind, cap: usize) -> Result<Report, CliError> {
    match kind {
        RadicalKind::Baer => {
            let r = baer_radical(alg, cap);
            let body = json!({
                "kind": "baer",
                "dim": r.radical.dim(),
                "radical": basis_strings(alg, &r.radical),
                "certified": r.certified,
                "chain": r.chain.iter().map(|s| basis_strings(alg, s)).collect::<Vec<_>>(),
                "methods": r.methods.iter().map(|&m| method_name(m)).collect::<Vec<_>>(),
            });
            Ok(Report::json(body, if r.certified { EXIT_OK } else { EXIT_INCONCLUSIVE }))
        }
        RadicalKind::Andrunakievich => {
            let r = andrunakievich_radical(alg, cap)?;
            let ks = b_ideals(alg, cap)?;
            ok(json!({
                "kind": "andrunakievich",
                "dim": r.dim(),
                "radical": basis_strings(alg, &r),
                "b_ideals": ks.iter().map(|s| basis_strings(alg, s)).collect::<Vec<_>>(),
            }))
        }
    }
}

fn verify(
    suite: &str,
    corpus: &str,
    long: bool,
    replay_path: Option<&Path>,
    algebra: Option<&Path>,
    cap: usize,
) -> Result<Report, CliError> {
    let config = SuiteConfig { cap, ..SuiteConfig::default() };
    let results: Vec<VerifyResult> = if let Some(path) = replay_path {
        let payload: Counterexample = serde_json::from_str(&read_text(path)?).map_err(|e| DocumentError::Malformed {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        vec![replay(&payload, &config)?]
    } else {
        let names: Vec<&str> = if suite == "all" {
            suite_names(long)
        } else if is_suite(suite) {
            vec![suite]
        } else {
            return Err(CliError::Usage(format!("unknown suite {suite:?}; known: all, {}", suite_names(true).join(", "))));
        };
        let entries = match algebra {
            Some(path) => vec![CorpusEntry { name: path.display().to_string(), algebra: load(path)? }],
            None => {
                let kind = CorpusKind::parse(corpus)
                    .ok_or_else(|| CliError::Usage(format!("unknown corpus {corpus:?}; known: f3-dim2, builtin, all")))?;
                corpus_entries(kind)
            }
        };
        names.iter().map(|name| run_suite(name, &entries, &config)).collect()
    };
    let passed = results.iter().all(VerifyResult::passed);
    Ok(Report::json(json!({"passed": passed, "results": results}), if passed { EXIT_OK } else { EXIT_FAIL }))
}
