//! Verification suites: each checks one structural statement on every
//! algebra of a corpus and reports the first counterexample.

use crate::document::{algebra_value, parse_algebra};
use novikov_core::families::{apn, corpus, example1, ApnParams, CorpusEntry, CorpusKind};
use novikov_core::quasiregular::{largest_qr_ideal, lemma4_check, qr_scan, qr_solve, QrKind};
use novikov_core::radicals::{baer_radical, baer_radical_oracle, is_nilpotent, is_right_nilpotent, is_solvable};
use novikov_core::structure::{
    andrunakievich_radical, b_ideals, enumerate_ideals, heart, in_b_class, is_prime, is_semiprime, is_simple, Verdict,
};
use novikov_core::subspaces::{
    is_ideal, left_annihilator, nucleus, p_ideal, product_space, t_ideal, third_slot_associator_kernel,
};
use novikov_core::{Algebra, Element, Error, FieldSpec, Subspace};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub cap: usize,
    pub budget: u128,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { cap: novikov_core::DEFAULT_CAP, budget: novikov_core::quasiregular::DEFAULT_SCAN_BUDGET }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Everything needed to rerun a failing check on one algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub suite: String,
    pub algebra_name: String,
    pub algebra: Value,
    /// Bases of the ideals involved, as element strings.
    pub ideals: Vec<Vec<String>>,
    pub elements: Vec<String>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyResult {
    pub suite: String,
    pub status: Status,
    pub checked: usize,
    pub skipped: usize,
    pub notes: Vec<String>,
    pub counterexample: Option<Counterexample>,
}

impl VerifyResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Outcome of a suite on one algebra.
enum Check {
    Pass,
    Note(String),
    Skip(String),
    Fail(Failure),
}

struct Failure {
    message: String,
    ideals: Vec<Subspace>,
    elements: Vec<Element>,
}

fn fail(message: impl Into<String>) -> Check {
    Check::Fail(Failure { message: message.into(), ideals: Vec::new(), elements: Vec::new() })
}

fn fail_with(message: impl Into<String>, ideals: Vec<Subspace>, elements: Vec<Element>) -> Check {
    Check::Fail(Failure { message: message.into(), ideals, elements })
}

type CheckFn = fn(&SuiteConfig, &Algebra) -> Result<Check, Error>;

struct Suite {
    name: &'static str,
    check: CheckFn,
    /// Runs on its own fixed instances instead of the requested corpus.
    fixed: Option<fn() -> Vec<CorpusEntry>>,
    long: bool,
}

const SUITES: &[Suite] = &[
    Suite { name: "identities", check: identities, fixed: None, long: false },
    Suite { name: "lemma1", check: lemma1, fixed: None, long: false },
    Suite { name: "lemma2", check: lemma2, fixed: None, long: false },
    Suite { name: "lemma3", check: lemma3, fixed: None, long: false },
    Suite { name: "lemma4", check: lemma4, fixed: None, long: false },
    Suite { name: "theorem1", check: theorem1, fixed: None, long: false },
    Suite { name: "theorem2", check: theorem2, fixed: None, long: false },
    Suite { name: "theorem3", check: theorem3, fixed: None, long: false },
    Suite { name: "theorem4", check: theorem4, fixed: None, long: false },
    Suite { name: "heredity", check: heredity, fixed: None, long: false },
    Suite { name: "prop4", check: prop4, fixed: None, long: false },
    Suite { name: "shestzhang", check: shestzhang, fixed: None, long: false },
    Suite { name: "example1", check: example1_check, fixed: Some(example1_instances), long: false },
    Suite { name: "example2", check: example2_check, fixed: Some(example2_instances), long: false },
    Suite { name: "baer-oracle", check: baer_oracle, fixed: None, long: false },
    Suite { name: "prop1", check: prop1, fixed: None, long: true },
];

/// Suite names in run order. Long suites are included only on request.
pub fn suite_names(long: bool) -> Vec<&'static str> {
    SUITES.iter().filter(|s| long || !s.long).map(|s| s.name).collect()
}

pub fn is_suite(name: &str) -> bool {
    SUITES.iter().any(|s| s.name == name)
}

fn find(name: &str) -> &'static Suite {
    SUITES.iter().find(|s| s.name == name).unwrap_or_else(|| panic!("unknown suite {name}"))
}

fn format_subspace(alg: &Algebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| alg.format_element(v)).collect()
}

fn counterexample(suite: &str, entry: &CorpusEntry, f: Failure) -> Counterexample {
    let alg = &entry.algebra;
    Counterexample {
        suite: suite.to_string(),
        algebra_name: entry.name.clone(),
        algebra: algebra_value(alg),
        ideals: f.ideals.iter().map(|s| format_subspace(alg, s)).collect(),
        elements: f.elements.iter().map(|e| alg.format_element(e.coeffs())).collect(),
        message: f.message,
    }
}

fn is_infeasible(e: &Error) -> bool {
    matches!(e, Error::CapExceeded { .. } | Error::RationalsNotEnumerable | Error::BudgetExceeded { .. })
}

/// Runs one suite. Fixed-instance suites ignore `entries`.
pub fn run_suite(name: &str, entries: &[CorpusEntry], config: &SuiteConfig) -> VerifyResult {
    let suite = find(name);
    let own;
    let entries = match suite.fixed {
        Some(instances) => {
            own = instances();
            &own[..]
        }
        None => entries,
    };
    run_on(suite, entries, config)
}

fn run_on(suite: &Suite, entries: &[CorpusEntry], config: &SuiteConfig) -> VerifyResult {
    let mut result = VerifyResult {
        suite: suite.name.to_string(),
        status: Status::Pass,
        checked: 0,
        skipped: 0,
        notes: Vec::new(),
        counterexample: None,
    };
    for entry in entries {
        let outcome = match (suite.check)(config, &entry.algebra) {
            Ok(c) => c,
            Err(e) if is_infeasible(&e) => Check::Skip(e.to_string()),
            Err(e) => fail(format!("error: {e}")),
        };
        match outcome {
            Check::Pass => result.checked += 1,
            Check::Note(n) => {
                result.checked += 1;
                result.notes.push(format!("{}: {n}", entry.name));
            }
            Check::Skip(reason) => {
                result.skipped += 1;
                let note = format!("skipped: {reason}");
                if !result.notes.contains(&note) {
                    result.notes.push(note);
                }
            }
            Check::Fail(f) => {
                result.checked += 1;
                result.status = Status::Fail;
                result.counterexample = Some(counterexample(suite.name, entry, f));
                return result;
            }
        }
    }
    if result.checked == 0 {
        result.status = Status::Skipped;
    }
    result
}

/// Reruns the suite named in a counterexample on its algebra.
pub fn replay(payload: &Counterexample, config: &SuiteConfig) -> Result<VerifyResult, crate::document::DocumentError> {
    let text = serde_json::to_string(&payload.algebra).expect("value serializes");
    let algebra = parse_algebra(&text)?;
    if !is_suite(&payload.suite) {
        return Err(crate::document::DocumentError::BadField {
            field: "suite".into(),
            message: format!("unknown suite {:?}", payload.suite),
        });
    }
    let entry = CorpusEntry { name: payload.algebra_name.clone(), algebra };
    Ok(run_on(find(&payload.suite), &[entry], config))
}

pub fn corpus_entries(kind: CorpusKind) -> Vec<CorpusEntry> {
    corpus(kind)
}

fn full(alg: &Algebra) -> Subspace {
    Subspace::full(alg.field(), alg.dim())
}

fn is_associative(alg: &Algebra) -> bool {
    let basis = alg.basis();
    basis.iter().all(|x| basis.iter().all(|y| basis.iter().all(|z| alg.associator(x, y, z).expect("same algebra").is_zero())))
}

fn identities(_: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let novikov = alg.check_novikov();
    if let Some(f) = novikov.failure {
        let elements = f.indices.iter().map(|&i| alg.basis_element(i)).collect();
        return Ok(fail_with(format!("{} fails", f.identity), Vec::new(), elements));
    }
    let derived = alg.check_derived_identity();
    if let Some(f) = derived.failure {
        let elements = f.indices.iter().map(|&i| alg.basis_element(i)).collect();
        return Ok(fail_with(format!("{} fails", f.identity), Vec::new(), elements));
    }
    Ok(Check::Pass)
}

fn lemma1(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    for i in enumerate_ideals(alg, config.cap)?.ideals {
        let t = t_ideal(alg, &i)?;
        let p = p_ideal(alg, &i)?;
        let p2 = product_space(alg, &p, &p)?;
        if !is_ideal(alg, &t)? || !is_ideal(alg, &p)? {
            return Ok(fail_with("T(I) or P(I) is not an ideal", vec![i, t, p], Vec::new()));
        }
        if !t.contains(&p2)? || !p.contains(&t)? {
            return Ok(fail_with("containment P(I)^2 <= T(I) <= P(I) fails", vec![i, t, p], Vec::new()));
        }
    }
    Ok(Check::Pass)
}

fn lemma2(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    match is_semiprime(alg, config.cap) {
        Verdict::True => {}
        Verdict::False => return Ok(Check::Pass),
        Verdict::Inconclusive => return Ok(Check::Skip("semiprimality undecided".into())),
    }
    for i in enumerate_ideals(alg, config.cap)?.nonzero() {
        if t_ideal(alg, i)?.is_zero() {
            return Ok(fail_with("T(I) = 0 for a nonzero ideal of a semiprime algebra", vec![i.clone()], Vec::new()));
        }
    }
    Ok(Check::Pass)
}

fn lemma3(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let basis = alg.basis();
    for i in enumerate_ideals(alg, config.cap)?.ideals {
        let ann = left_annihilator(alg, &t_ideal(alg, &i)?)?;
        let w = third_slot_associator_kernel(alg, &i)?;
        for n in w.basis_elements() {
            for x in &basis {
                for y in &basis {
                    let a = alg.associator(x, y, &n)?;
                    if !ann.contains_vector(a.coeffs()) {
                        return Ok(fail_with("(x, y, n) outside Ann_l T(I)", vec![i, ann], vec![x.clone(), y.clone(), n]));
                    }
                }
            }
        }
        let inner = nucleus(&alg.restrict(&i)?);
        for n in i.embed(&inner).basis_elements() {
            for x in &basis {
                for y in &basis {
                    for a in [alg.associator(&n, x, y)?, alg.associator(x, &n, y)?] {
                        if !ann.contains_vector(a.coeffs()) {
                            let message = "associator with a nucleus element of I outside Ann_l T(I)";
                            return Ok(fail_with(message, vec![i, ann], vec![x.clone(), y.clone(), n]));
                        }
                    }
                }
            }
        }
    }
    Ok(Check::Pass)
}

fn lemma4(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let report = lemma4_check(alg, config.budget, 20)?;
    if let Some(z) = report.formula_mismatch {
        return Ok(fail_with("series inverse differs from the solver", Vec::new(), vec![z]));
    }
    if !report.passed() {
        return Ok(fail("a nilpotent side leaves an element without a quasi-inverse"));
    }
    Ok(Check::Pass)
}

fn theorem1(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let inv = enumerate_ideals(alg, config.cap)?;
    for m in inv.minimal() {
        let restricted = alg.restrict(m)?;
        let zero_square = product_space(alg, m, m)?.is_zero();
        if !zero_square && !is_simple(&restricted).simple {
            return Ok(fail_with("minimal ideal neither simple nor of zero square", vec![m.clone()], Vec::new()));
        }
    }
    if is_prime(alg, config.cap)? != Verdict::True || is_associative(alg) {
        return Ok(Check::Pass);
    }
    let n = nucleus(alg);
    if !n.is_zero() {
        return Ok(fail_with("prime nonassociative algebra with nonzero nucleus", vec![n], Vec::new()));
    }
    for i in inv.nonzero() {
        let r = alg.restrict(i)?;
        if is_prime(&r, config.cap)? != Verdict::True {
            return Ok(fail_with("ideal of a prime algebra is not prime", vec![i.clone()], Vec::new()));
        }
        if !nucleus(&r).is_zero() || is_associative(&r) {
            return Ok(fail_with("ideal of a prime algebra has nonzero nucleus", vec![i.clone()], Vec::new()));
        }
    }
    Ok(Check::Pass)
}

fn theorem2(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let r = andrunakievich_radical(alg, config.cap)?;
    if !is_ideal(alg, &r)? {
        return Ok(fail_with("radical is not an ideal", vec![r], Vec::new()));
    }
    let (q, _) = alg.quotient(&r)?;
    if !andrunakievich_radical(&q, config.cap)?.is_zero() {
        return Ok(fail_with("quotient by the radical has a nonzero radical", vec![r], Vec::new()));
    }
    Ok(Check::Pass)
}

fn theorem3(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let baer = baer_radical(alg, config.cap);
    if !baer.certified {
        return Ok(Check::Skip("Baer search inconclusive".into()));
    }
    let a = andrunakievich_radical(alg, config.cap)?;
    if baer.radical != a {
        return Ok(fail_with("Baer and Andrunakievich radicals differ", vec![baer.radical, a], Vec::new()));
    }
    Ok(Check::Pass)
}

fn theorem4(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let f = full(alg);
    let solvable = is_solvable(alg, &f)?;
    if !alg.field().is_finite() {
        return Ok(Check::Skip("element scan needs a finite field".into()));
    }
    let scan = qr_scan(alg, &f, QrKind::Left, config.budget)?;
    if solvable && !scan.all_qr {
        let witness = scan.witness.into_iter().collect();
        return Ok(fail_with("solvable algebra with an element that is not left quasiregular", Vec::new(), witness));
    }
    if !solvable && scan.all_qr {
        return Ok(Check::Note("left quasiregular but not solvable".into()));
    }
    Ok(Check::Pass)
}

fn heredity(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let r = andrunakievich_radical(alg, config.cap)?;
    for i in enumerate_ideals(alg, config.cap)?.ideals {
        let inner = i.embed(&andrunakievich_radical(&alg.restrict(&i)?, config.cap)?);
        if !is_ideal(alg, &inner)? {
            return Ok(fail_with("radical of an ideal is not an ideal of the algebra", vec![i, inner], Vec::new()));
        }
        if inner != i.intersect(&r)? {
            return Ok(fail_with("radical of an ideal differs from its intersection with the radical", vec![i, inner, r], Vec::new()));
        }
    }
    Ok(Check::Pass)
}

fn prop4(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    if alg.dim() == 0 || !in_b_class(alg, config.cap)? {
        return Ok(Check::Pass);
    }
    let h = heart(alg, config.cap)?;
    for i in enumerate_ideals(alg, config.cap)?.nonzero() {
        let r = alg.restrict(i)?;
        if !in_b_class(&r, config.cap)? {
            return Ok(fail_with("nonzero ideal falls outside the class", vec![i.clone()], Vec::new()));
        }
        let inner = i.embed(&heart(&r, config.cap)?);
        if inner != h {
            return Ok(fail_with("heart of an ideal differs from the heart", vec![i.clone(), inner, h], Vec::new()));
        }
    }
    Ok(Check::Pass)
}

fn shestzhang(_: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let f = full(alg);
    let square = product_space(alg, &f, &f)?;
    let verdicts = [is_solvable(alg, &f)?, is_right_nilpotent(alg, &f)?, is_nilpotent(alg, &square)?];
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Ok(fail(format!("solvable / right-nilpotent / square nilpotent disagree: {verdicts:?}")));
    }
    Ok(Check::Pass)
}

fn baer_oracle(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let cap = config.cap.min(4);
    let oracle = baer_radical_oracle(alg, cap)?;
    let cascade = baer_radical(alg, cap);
    if !cascade.certified {
        return Ok(fail("cascade did not certify within the oracle's range"));
    }
    if cascade.radical != oracle {
        return Ok(fail_with("cascade and exhaustive radicals differ", vec![cascade.radical, oracle], Vec::new()));
    }
    Ok(Check::Pass)
}

fn prop1(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let ks = b_ideals(alg, config.cap)?;
    for i in enumerate_ideals(alg, config.cap)?.ideals {
        for j in b_ideals(&alg.restrict(&i)?, config.cap)? {
            let j = i.embed(&j);
            let mut found = false;
            for k in &ks {
                if k.intersect(&i)? == j {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(fail_with("no ideal of the algebra extends this ideal of I", vec![i, j], Vec::new()));
            }
        }
    }
    Ok(Check::Pass)
}

fn prime(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("odd prime")
}

fn example1_instances() -> Vec<CorpusEntry> {
    let mut out = vec![CorpusEntry { name: "example1/Q".into(), algebra: example1(FieldSpec::rationals()) }];
    for p in [3, 5, 7] {
        out.push(CorpusEntry { name: format!("example1/F_{p}"), algebra: example1(prime(p)) });
    }
    out
}

/// The two-dimensional algebra with `ab = b`: `a + b` is not right
/// quasiregular, `Fa` and `Fb` consist of quasiregular elements, and `Fb` is
/// the largest (right) quasiregular ideal.
fn example1_check(config: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    let field = alg.field();
    let ab = alg.element(vec![field.one(), field.one()])?;
    if qr_solve(alg, &ab, QrKind::Right)?.y.is_some() {
        return Ok(fail_with("a + b is right quasiregular", Vec::new(), vec![ab]));
    }
    let alphas: Vec<_> = match field.elements() {
        Some(all) => all,
        None => ["-3", "-1", "1/2", "1", "2", "7/3"].iter().map(|s| field.parse_scalar(s).expect("rational")).collect(),
    };
    for alpha in alphas {
        for x in [alg.basis_element(0).scale(&alpha), alg.basis_element(1).scale(&alpha)] {
            if qr_solve(alg, &x, QrKind::TwoSided)?.y.is_none() {
                return Ok(fail_with("multiple of a basis vector is not quasiregular", Vec::new(), vec![x]));
            }
        }
    }
    if field.is_finite() {
        let fb = alg.coordinate_block(1, 1);
        for kind in [QrKind::TwoSided, QrKind::Right] {
            let largest = largest_qr_ideal(alg, kind, config.cap, config.budget)?;
            if largest != fb {
                return Ok(fail_with(format!("largest {} quasiregular ideal is not Fb", kind.name()), vec![largest], Vec::new()));
            }
        }
        for line in [alg.coordinate_block(0, 1), fb] {
            if !qr_scan(alg, &line, QrKind::TwoSided, config.budget)?.all_qr {
                return Ok(fail_with("coordinate line is not quasiregular", vec![line], Vec::new()));
            }
        }
    }
    Ok(Check::Pass)
}

fn example2_instances() -> Vec<CorpusEntry> {
    let mut params = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            params.push((3, 1, a, b));
        }
    }
    params.extend([(5, 1, 0, 0), (5, 1, 1, 2), (5, 1, 4, 3), (7, 1, 0, 0), (7, 1, 3, 5), (3, 2, 0, 0)]);
    params
        .into_iter()
        .map(|(p, n, a, b)| CorpusEntry {
            name: format!("apn({p},{n},{a},{b})"),
            algebra: apn(&ApnParams::new(p, n, a, b).expect("valid")).expect("valid"),
        })
        .collect()
}

/// The binomial family: Novikov identities hold, small members are certified
/// simple, and `y0` is not left quasiregular.
fn example2_check(_: &SuiteConfig, alg: &Algebra) -> Result<Check, Error> {
    if let Some(f) = alg.check_novikov().failure {
        let elements = f.indices.iter().map(|&i| alg.basis_element(i)).collect();
        return Ok(fail_with(format!("{} fails", f.identity), Vec::new(), elements));
    }
    if alg.dim() <= 5 {
        let s = is_simple(alg);
        if !(s.simple && s.certified) {
            return Ok(fail("not certified simple"));
        }
    }
    let Some(y0) = alg.label_index("y0") else {
        return Ok(fail("no basis vector labelled y0"));
    };
    let y0 = alg.basis_element(y0);
    if qr_solve(alg, &y0, QrKind::Left)?.y.is_some() {
        return Ok(fail_with("y0 is left quasiregular", Vec::new(), vec![y0]));
    }
    Ok(Check::Pass)
}
