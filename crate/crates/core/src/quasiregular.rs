//! Quasiregularity: `x` is left quasiregular when `x + y = y·x` for some `y`,
//! right quasiregular when `x + y = x·y`, and quasiregular when one `y` does
//! both.

use crate::algebra::{Algebra, Element, Side};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::radicals::{is_left_nilpotent, is_right_nilpotent};
use crate::scalars::Scalar;
use crate::structure::enumerate_ideals;
use crate::subspaces::Subspace;

/// Default limit on the number of elements a scan visits.
pub const DEFAULT_SCAN_BUDGET: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QrKind {
    Left,
    Right,
    TwoSided,
}

impl QrKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "left" => Some(QrKind::Left),
            "right" => Some(QrKind::Right),
            "two-sided" | "twosided" | "two_sided" => Some(QrKind::TwoSided),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            QrKind::Left => "left",
            QrKind::Right => "right",
            QrKind::TwoSided => "two-sided",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QrSolution {
    pub kind: QrKind,
    pub x: Element,
    pub y: Option<Element>,
    pub system_rank: usize,
}

/// Whether `y` witnesses quasiregularity of `x`.
pub fn is_qr_witness(alg: &Algebra, x: &Element, y: &Element, kind: QrKind) -> Result<bool> {
    let sum = x.add(y);
    let left = || -> Result<bool> { Ok(alg.multiply(y, x)? == sum) };
    let right = || -> Result<bool> { Ok(alg.multiply(x, y)? == sum) };
    Ok(match kind {
        QrKind::Left => left()?,
        QrKind::Right => right()?,
        QrKind::TwoSided => left()? && right()?,
    })
}

fn shifted_operator(alg: &Algebra, side: Side, x: &[Scalar]) -> Matrix {
    let mut m = alg.mul_operator_vec(side, x);
    let one = alg.field().one();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = &row[i] - &one;
    }
    m
}

/// Solves `(R_x − 1)y = x` (left), `(L_x − 1)y = x` (right), or both stacked.
/// Free variables are set to zero; the answer is checked by multiplication.
pub fn qr_solve(alg: &Algebra, x: &Element, kind: QrKind) -> Result<QrSolution> {
    alg.check_element(x)?;
    let (m, rhs): (Matrix, Vec<Scalar>) = match kind {
        QrKind::Left => (shifted_operator(alg, Side::Right, x.coeffs()), x.coeffs().to_vec()),
        QrKind::Right => (shifted_operator(alg, Side::Left, x.coeffs()), x.coeffs().to_vec()),
        QrKind::TwoSided => {
            let mut m = shifted_operator(alg, Side::Right, x.coeffs());
            m.extend(shifted_operator(alg, Side::Left, x.coeffs()));
            (m, [x.coeffs(), x.coeffs()].concat())
        }
    };
    let (solution, system_rank) = linalg::solve(alg.field(), &m, &rhs, alg.dim());
    let y = solution.map(|v| alg.element(v)).transpose()?;
    if let Some(y) = &y {
        assert!(is_qr_witness(alg, x, y, kind)?, "solver returned a non-witness");
    }
    Ok(QrSolution { kind, x: x.clone(), y, system_rank })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QrScan {
    pub all_qr: bool,
    /// First element of the region without a solution.
    pub witness: Option<Element>,
    pub examined: u128,
}

/// Tests every element of `region` in lexicographic coordinate order.
pub fn qr_scan(alg: &Algebra, region: &Subspace, kind: QrKind, budget: u128) -> Result<QrScan> {
    alg.check_subspace(region)?;
    let size = region.cardinality().ok_or(Error::RationalsNotEnumerable)?;
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    let mut examined = 0;
    for v in region.elements()? {
        examined += 1;
        let x = alg.element(v)?;
        if qr_solve(alg, &x, kind)?.y.is_none() {
            return Ok(QrScan { all_qr: false, witness: Some(x), examined });
        }
    }
    Ok(QrScan { all_qr: true, witness: None, examined })
}

/// The ideal, maximal under containment, all of whose elements are
/// quasiregular of the given kind. Errors if there is no single maximum.
pub fn largest_qr_ideal(alg: &Algebra, kind: QrKind, cap: usize, budget: u128) -> Result<Subspace> {
    let inv = enumerate_ideals(alg, cap)?;
    let mut qr = Vec::new();
    for ideal in inv.ideals {
        if qr_scan(alg, &ideal, kind, budget)?.all_qr {
            qr.push(ideal);
        }
    }
    let maximal: Vec<Subspace> =
        qr.iter().filter(|s| !qr.iter().any(|t| t.dim() > s.dim() && t.contains_unchecked(s))).cloned().collect();
    match maximal.as_slice() {
        [one] => Ok(one.clone()),
        _ => Err(Error::NoUniqueMaximum(maximal)),
    }
}

/// `z + s = s·z` with `s = x − x² + x³ − …`, `x = −z`, `x^m = x^{m−1}·x`.
/// Terminates when the powers vanish; `None` if they do not within `dim + 1`
/// steps.
pub fn left_inverse_series(alg: &Algebra, z: &Element) -> Result<Option<Element>> {
    inverse_series(alg, z, Side::Right)
}

/// The mirror of [`left_inverse_series`]: `z + s = z·s` with `x^m = x·x^{m−1}`.
pub fn right_inverse_series(alg: &Algebra, z: &Element) -> Result<Option<Element>> {
    inverse_series(alg, z, Side::Left)
}

fn inverse_series(alg: &Algebra, z: &Element, grow: Side) -> Result<Option<Element>> {
    alg.check_element(z)?;
    let x = z.neg();
    let mut power = x.clone();
    let mut s = alg.zero();
    let mut sign_positive = true;
    for _ in 0..=alg.dim() + 1 {
        if power.is_zero() {
            return Ok(Some(s));
        }
        s = if sign_positive { s.add(&power) } else { s.sub(&power) };
        sign_positive = !sign_positive;
        power = match grow {
            Side::Right => alg.multiply(&power, &x)?,
            Side::Left => alg.multiply(&x, &power)?,
        };
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma4Report {
    pub right_nilpotent: bool,
    pub left_nilpotent: bool,
    /// Scan result for left quasiregularity, when right-nilpotent.
    pub all_left_qr: Option<bool>,
    /// Scan result for right quasiregularity, when left-nilpotent.
    pub all_right_qr: Option<bool>,
    /// Elements on which the series formula was compared with the solver.
    pub formula_samples: usize,
    /// First sample where they disagreed.
    pub formula_mismatch: Option<Element>,
}

impl Lemma4Report {
    pub fn passed(&self) -> bool {
        self.all_left_qr != Some(false) && self.all_right_qr != Some(false) && self.formula_mismatch.is_none()
    }
}

/// Right-nilpotent implies every element is left quasiregular, and dually.
/// Also compares the explicit series inverse with the solver on up to
/// `samples` evenly spaced elements.
pub fn lemma4_check(alg: &Algebra, budget: u128, samples: usize) -> Result<Lemma4Report> {
    let full = Subspace::full(alg.field(), alg.dim());
    let right_nilpotent = is_right_nilpotent(alg, &full)?;
    let left_nilpotent = is_left_nilpotent(alg, &full)?;
    let all_left_qr =
        if right_nilpotent { Some(qr_scan(alg, &full, QrKind::Left, budget)?.all_qr) } else { None };
    let all_right_qr =
        if left_nilpotent { Some(qr_scan(alg, &full, QrKind::Right, budget)?.all_qr) } else { None };

    let mut formula_samples = 0;
    let mut formula_mismatch = None;
    if right_nilpotent || left_nilpotent {
        let size = full.cardinality().ok_or(Error::RationalsNotEnumerable)?;
        let stride = (size / samples.max(1) as u128).max(1) as usize;
        'outer: for v in full.elements()?.step_by(stride).take(samples) {
            let z = alg.element(v)?;
            formula_samples += 1;
            let checks = [
                (right_nilpotent, QrKind::Left, left_inverse_series(alg, &z)?),
                (left_nilpotent, QrKind::Right, right_inverse_series(alg, &z)?),
            ];
            for (applies, kind, series) in checks {
                if applies && series != qr_solve(alg, &z, kind)?.y {
                    formula_mismatch = Some(z);
                    break 'outer;
                }
            }
        }
    }
    Ok(Lemma4Report { right_nilpotent, left_nilpotent, all_left_qr, all_right_qr, formula_samples, formula_mismatch })
}
