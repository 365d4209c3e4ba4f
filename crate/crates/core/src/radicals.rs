//! Power series of ideals, solvability and nilpotency, and the Baer radical.
//!
//! The radical is computed by repeatedly quotienting out ideals with zero
//! square. A nonzero solvable ideal exists iff a nonzero ideal with zero
//! square does: the last nonzero term of the derived series of a solvable
//! ideal is again an ideal of the whole algebra. So when the final quotient
//! has no such ideal, the accumulated preimage is the largest solvable ideal.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalars::{FieldSpec, Scalar};
use crate::subspaces::{self, closure_unchecked, is_ideal_unchecked, product_unchecked, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// `I, I², (I²)², ...`
    Derived,
    /// `I, I·I, (I·I)·I, ...`
    RightPower,
    /// `I, I·I, I·(I·I), ...`
    LeftPower,
    /// `P_1 = I`, `P_m = Σ_{i+j=m} P_i P_j`.
    FullPower,
    /// `W_1 = I`, `W_{k+1} = I·W_k + W_k·I`.
    Multiplication,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Distinct successive terms, starting with `I`; ends with the zero
    /// subspace when the series terminates.
    pub chain: Vec<Subspace>,
    pub terminated_at_zero: bool,
    /// Position in `chain` of the first zero term.
    pub index: Option<usize>,
}

fn run_series(kind: SeriesKind, start: &Subspace, bound: usize, mut step: impl FnMut(&[Subspace]) -> Subspace) -> SeriesReport {
    let mut chain = vec![start.clone()];
    let mut terminated = start.is_zero();
    for _ in 0..bound {
        if terminated {
            break;
        }
        let next = step(&chain);
        if &next == chain.last().expect("nonempty") {
            break;
        }
        terminated = next.is_zero();
        chain.push(next);
    }
    let index = terminated.then(|| chain.len() - 1);
    SeriesReport { kind, chain, terminated_at_zero: terminated, index }
}

pub fn derived_series(alg: &Algebra, ideal: &Subspace) -> Result<SeriesReport> {
    alg.check_subspace(ideal)?;
    Ok(run_series(SeriesKind::Derived, ideal, alg.dim() + 1, |c| {
        let t = c.last().expect("nonempty");
        product_unchecked(alg, t, t)
    }))
}

/// Right powers need not drop in dimension at every step, so the walk stops
/// on a repeated term or after `2·dim + 2` steps.
pub fn right_power_series(alg: &Algebra, ideal: &Subspace) -> Result<SeriesReport> {
    alg.check_subspace(ideal)?;
    Ok(run_series(SeriesKind::RightPower, ideal, 2 * alg.dim() + 2, |c| {
        product_unchecked(alg, c.last().expect("nonempty"), ideal)
    }))
}

pub fn left_power_series(alg: &Algebra, ideal: &Subspace) -> Result<SeriesReport> {
    alg.check_subspace(ideal)?;
    Ok(run_series(SeriesKind::LeftPower, ideal, 2 * alg.dim() + 2, |c| {
        product_unchecked(alg, ideal, c.last().expect("nonempty"))
    }))
}

/// `W_{k+1} = I·W_k + W_k·I`. This is the orbit of `I` under the associative
/// algebra generated by the multiplication operators of `I`, so a repeated
/// term is final and the series decides nilpotency.
pub fn multiplication_series(alg: &Algebra, ideal: &Subspace) -> Result<SeriesReport> {
    alg.check_subspace(ideal)?;
    Ok(run_series(SeriesKind::Multiplication, ideal, alg.dim() + 1, |c| {
        let w = c.last().expect("nonempty");
        product_unchecked(alg, ideal, w).sum_unchecked(&product_unchecked(alg, w, ideal))
    }))
}

/// The filtration `P_m = Σ_{i+j=m} P_i P_j` (products of `m` factors from `I`
/// in any bracketing). Computed to zero when `I` is nilpotent; otherwise
/// reported up to the first repeated term.
pub fn power_filtration(alg: &Algebra, ideal: &Subspace) -> Result<SeriesReport> {
    let nilpotent = is_nilpotent(alg, ideal)?;
    // a product of 2^k factors has a root-to-leaf path of length k, i.e. lies
    // in W_{k+1}; W reaches zero within dim + 1 terms
    let bound = if nilpotent { 1usize << (ideal.dim() + 1).min(20) } else { 2 * alg.dim() + 2 };
    let mut terms: Vec<Subspace> = vec![ideal.clone()];
    let mut chain = vec![ideal.clone()];
    let mut terminated = ideal.is_zero();
    while !terminated && terms.len() < bound {
        let m = terms.len() + 1;
        let mut next = Subspace::zero(alg.field(), alg.dim());
        for i in 1..m {
            let (left, right) = (&terms[i - 1], &terms[m - i - 1]);
            next = next.sum_unchecked(&product_unchecked(alg, left, right));
        }
        terms.push(next.clone());
        if !nilpotent && &next == chain.last().expect("nonempty") {
            break;
        }
        terminated = next.is_zero();
        if &next != chain.last().expect("nonempty") {
            chain.push(next);
        }
    }
    let index = terminated.then(|| chain.len() - 1);
    Ok(SeriesReport { kind: SeriesKind::FullPower, chain, terminated_at_zero: terminated, index })
}

pub fn is_nilpotent(alg: &Algebra, ideal: &Subspace) -> Result<bool> {
    Ok(multiplication_series(alg, ideal)?.terminated_at_zero)
}

pub fn is_solvable(alg: &Algebra, ideal: &Subspace) -> Result<bool> {
    Ok(derived_series(alg, ideal)?.terminated_at_zero)
}

pub fn is_right_nilpotent(alg: &Algebra, ideal: &Subspace) -> Result<bool> {
    Ok(right_power_series(alg, ideal)?.terminated_at_zero)
}

pub fn is_left_nilpotent(alg: &Algebra, ideal: &Subspace) -> Result<bool> {
    Ok(left_power_series(alg, ideal)?.terminated_at_zero)
}

/// How a trivial ideal was found, or how its absence was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMethod {
    /// `{x : xA = Ax = 0}` is nonzero.
    Annihilator,
    /// The ideal generated by a standard basis vector squares to zero.
    BasisClosure,
    /// The algebra is solvable; its last nonzero derived term.
    DerivedTail,
    /// Every one-dimensional subspace over a finite field was closed to an
    /// ideal and tested.
    ElementScan,
    /// Dimension at most one: the only ideals are `0` and `A`.
    SmallDimension,
    /// Nothing applied.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found(Subspace),
    CertifiedNone,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub method: SearchMethod,
    /// Candidate ideals examined before the answer.
    pub examined: usize,
}

/// `J` is a nonzero ideal of `A` with `J·J = 0`.
pub fn is_trivial_ideal(alg: &Algebra, j: &Subspace) -> bool {
    !j.is_zero() && is_ideal_unchecked(alg, j) && product_unchecked(alg, j, j).is_zero()
}

/// Looks for a nonzero ideal with zero square: the annihilator, ideals
/// generated by basis vectors, the derived tail, then (finite field,
/// `dim ≤ cap`) the ideal generated by every projective point. A minimal
/// ideal inside a trivial ideal is generated by any of its nonzero vectors,
/// so the point scan is exhaustive.
pub fn trivial_ideal_search(alg: &Algebra, cap: usize) -> SearchOutcome {
    let n = alg.dim();
    let mut examined = 0;
    let found = |j: Subspace, method, examined| {
        debug_assert!(is_trivial_ideal(alg, &j));
        SearchOutcome { status: SearchStatus::Found(j), method, examined }
    };
    if n == 0 {
        return SearchOutcome { status: SearchStatus::CertifiedNone, method: SearchMethod::SmallDimension, examined };
    }

    let ann = subspaces::two_sided_annihilator(alg);
    examined += 1;
    if !ann.is_zero() {
        return found(ann, SearchMethod::Annihilator, examined);
    }

    for i in 0..n {
        let j = closure_unchecked(alg, &alg.coordinate_block(i, 1));
        examined += 1;
        if is_trivial_ideal(alg, &j) {
            return found(j, SearchMethod::BasisClosure, examined);
        }
    }

    let full = Subspace::full(alg.field(), n);
    let derived = derived_series(alg, &full).expect("same algebra");
    examined += 1;
    if derived.terminated_at_zero {
        let tail = derived.chain[derived.chain.len() - 2].clone();
        if is_trivial_ideal(alg, &tail) {
            return found(tail, SearchMethod::DerivedTail, examined);
        }
    }

    if n == 1 {
        // the annihilator step already caught A² = 0
        return SearchOutcome { status: SearchStatus::CertifiedNone, method: SearchMethod::SmallDimension, examined };
    }

    if alg.field().is_finite() && n <= cap {
        for point in projective_points(alg) {
            let j = subspaces::principal_ideal(alg, &point);
            examined += 1;
            if product_unchecked(alg, &j, &j).is_zero() {
                return found(j, SearchMethod::ElementScan, examined);
            }
        }
        return SearchOutcome { status: SearchStatus::CertifiedNone, method: SearchMethod::ElementScan, examined };
    }

    SearchOutcome { status: SearchStatus::Inconclusive, method: SearchMethod::None, examined }
}

/// Nonzero vectors of `F_q^n` whose first nonzero coordinate is 1, in
/// lexicographic order.
pub(crate) fn projective_points(alg: &Algebra) -> ProjectivePoints {
    ProjectivePoints::new(alg.field(), alg.dim())
}

/// `(q^n - 1) / (q - 1)`, the number of one-dimensional subspaces.
pub(crate) fn projective_count(q: u64, n: usize) -> u128 {
    (0..n).fold(0u128, |acc, _| acc.saturating_mul(q as u128).saturating_add(1))
}

pub(crate) struct ProjectivePoints {
    elements: Vec<Scalar>,
    n: usize,
    lead: usize,
    digits: Vec<usize>,
    done: bool,
}

impl ProjectivePoints {
    fn new(field: FieldSpec, n: usize) -> Self {
        let elements = field.elements().expect("finite field");
        ProjectivePoints { elements, n, lead: 0, digits: vec![0; n.saturating_sub(1)], done: n == 0 }
    }
}

impl Iterator for ProjectivePoints {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        if self.done {
            return None;
        }
        let zero = &self.elements[0];
        let mut v = vec![zero.clone(); self.n];
        v[self.lead] = self.elements[1].clone();
        let tail = self.n - self.lead - 1;
        for (slot, &d) in v[self.lead + 1..].iter_mut().zip(&self.digits[..tail]) {
            *slot = self.elements[d].clone();
        }
        // odometer over the coordinates after the leading one, last fastest
        let q = self.elements.len();
        let mut i = tail;
        loop {
            if i == 0 {
                self.lead += 1;
                self.digits.iter_mut().for_each(|d| *d = 0);
                self.done = self.lead == self.n;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < q {
                break;
            }
            self.digits[i] = 0;
        }
        Some(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub radical: Subspace,
    /// Accumulated radical after each quotient step, as subspaces of `A`.
    pub chain: Vec<Subspace>,
    /// The methods that produced each step, then the final certification.
    pub methods: Vec<SearchMethod>,
    /// The final quotient was certified to have no trivial ideal.
    pub certified: bool,
}

/// The largest solvable ideal, by trivial-ideal quotient recursion.
pub fn baer_radical(alg: &Algebra, cap: usize) -> RadicalReport {
    let mut radical = Subspace::zero(alg.field(), alg.dim());
    let mut chain = Vec::new();
    let mut methods = Vec::new();
    loop {
        let (quotient, map) = alg.quotient(&radical).expect("radical is an ideal");
        let outcome = trivial_ideal_search(&quotient, cap);
        methods.push(outcome.method);
        match outcome.status {
            SearchStatus::Found(j) => {
                radical = map.preimage(&j);
                chain.push(radical.clone());
            }
            SearchStatus::CertifiedNone => return RadicalReport { radical, chain, methods, certified: true },
            SearchStatus::Inconclusive => return RadicalReport { radical, chain, methods, certified: false },
        }
    }
}

/// Every solvable ideal, by walking the whole subspace lattice.
pub fn solvable_ideals_exhaustive(alg: &Algebra, cap: usize) -> Result<Vec<Subspace>> {
    if !alg.field().is_finite() {
        return Err(Error::RationalsNotEnumerable);
    }
    if alg.dim() > cap {
        return Err(Error::CapExceeded { dim: alg.dim(), cap });
    }
    let mut out = Vec::new();
    for s in subspaces::enumerate_subspaces(alg.field(), alg.dim())? {
        if is_ideal_unchecked(alg, &s) && is_solvable(alg, &s)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// Brute-force Baer radical: the unique maximal solvable ideal, checked to
/// contain every other solvable ideal.
pub fn baer_radical_oracle(alg: &Algebra, cap: usize) -> Result<Subspace> {
    let all = solvable_ideals_exhaustive(alg, cap)?;
    let top = all.iter().max_by_key(|s| s.dim()).cloned().expect("zero ideal is solvable");
    let maximal: Vec<Subspace> =
        all.iter().filter(|s| !all.iter().any(|t| t != *s && t.contains_unchecked(s))).cloned().collect();
    if maximal.len() != 1 || all.iter().any(|s| !top.contains_unchecked(s)) {
        return Err(Error::NoUniqueMaximum(maximal));
    }
    Ok(top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{apn, example1, zero_algebra, ApnParams};
    use crate::scalars::FieldSpec;

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    fn a3() -> Algebra {
        apn(&ApnParams::new(3, 1, 0, 0).unwrap()).unwrap()
    }

    fn full(a: &Algebra) -> Subspace {
        Subspace::full(a.field(), a.dim())
    }

    #[test]
    fn derived_examples() {
        let e1 = example1(f3());
        let r = derived_series(&e1, &full(&e1)).unwrap();
        assert_eq!(r.chain, vec![full(&e1), e1.coordinate_block(1, 1), Subspace::zero(e1.field(), 2)]);
        assert_eq!(r.index, Some(2));
        assert!(r.terminated_at_zero);

        let a = a3();
        let r = derived_series(&a, &full(&a)).unwrap();
        assert_eq!(r.chain, vec![full(&a)]);
        assert!(!r.terminated_at_zero);

        let z = zero_algebra(f3(), 2);
        let r = derived_series(&z, &full(&z)).unwrap();
        assert_eq!(r.chain.len(), 2);
        assert_eq!(r.index, Some(1));
    }

    #[test]
    fn right_and_left_powers() {
        let e1 = example1(f3());
        let r = right_power_series(&e1, &full(&e1)).unwrap();
        assert_eq!(r.chain, vec![full(&e1), e1.coordinate_block(1, 1), Subspace::zero(e1.field(), 2)]);
        // A·(A·A) = A·b = span{b} keeps repeating
        assert!(!is_left_nilpotent(&e1, &full(&e1)).unwrap());
        assert!(!right_power_series(&a3(), &full(&a3())).unwrap().terminated_at_zero);
        let z = zero_algebra(f3(), 3);
        assert_eq!(right_power_series(&z, &full(&z)).unwrap().chain.len(), 2);
    }

    #[test]
    fn nilpotency() {
        let e1 = example1(f3());
        assert!(is_nilpotent(&e1, &e1.coordinate_block(1, 1)).unwrap());
        // a·b = b makes L_a act as the identity on span{b}
        assert!(!is_nilpotent(&e1, &full(&e1)).unwrap());
        assert!(!is_nilpotent(&a3(), &full(&a3())).unwrap());
        let square = product_unchecked(&e1, &full(&e1), &full(&e1));
        assert!(is_nilpotent(&e1, &square).unwrap());
    }

    #[test]
    fn power_filtration_matches_verdict() {
        let e1 = example1(f3());
        let p = power_filtration(&e1, &full(&e1)).unwrap();
        assert_eq!(p.chain, vec![full(&e1), e1.coordinate_block(1, 1)]);
        assert!(!p.terminated_at_zero);
        // strictly upper triangular 3x3 matrices under composition
        let f = FieldSpec::RATIONALS;
        let heis = Algebra::from_fn(f, Algebra::default_labels(3), |i, j, k| {
            if (i, j, k) == (0, 1, 2) {
                f.one()
            } else {
                f.zero()
            }
        })
        .unwrap();
        let p = power_filtration(&heis, &full(&heis)).unwrap();
        assert!(p.terminated_at_zero);
        assert_eq!(p.index, Some(2));
    }

    #[test]
    fn projective_points_cover_lines_once() {
        for (p, n) in [(3u64, 1usize), (3, 3), (5, 2)] {
            let f = FieldSpec::prime(p).unwrap();
            let pts: Vec<_> = projective_points(&zero_algebra(f, n)).collect();
            assert_eq!(pts.len() as u128, projective_count(p, n));
            let lines: std::collections::BTreeSet<_> =
                pts.iter().map(|v| Subspace::from_vectors(f, n, vec![v.clone()])).collect();
            assert_eq!(lines.len(), pts.len());
            assert!(pts.iter().all(|v| v.iter().find(|c| !c.is_zero()).unwrap().is_one()));
        }
    }

    #[test]
    fn solvability() {
        assert!(is_solvable(&example1(f3()), &full(&example1(f3()))).unwrap());
        assert!(!is_solvable(&a3(), &full(&a3())).unwrap());
        assert!(is_solvable(&zero_algebra(f3(), 2), &full(&zero_algebra(f3(), 2))).unwrap());
    }

    #[test]
    fn trivial_ideal_searches() {
        let e1 = example1(f3());
        let out = trivial_ideal_search(&e1, 6);
        assert_eq!(out.status, SearchStatus::Found(e1.coordinate_block(1, 1)));
        assert_eq!(out.method, SearchMethod::BasisClosure);

        let out = trivial_ideal_search(&a3(), 6);
        assert_eq!(out.status, SearchStatus::CertifiedNone);
        assert_eq!(out.method, SearchMethod::ElementScan);

        let z = zero_algebra(f3(), 1);
        assert_eq!(trivial_ideal_search(&z, 6).status, SearchStatus::Found(full(&z)));

        // over Q with dim > 1 and no heuristic hit the answer is unknown
        let q_sum = crate::families::one_dim(FieldSpec::RATIONALS, FieldSpec::RATIONALS.one())
            .unwrap()
            .direct_sum(&crate::families::one_dim(FieldSpec::RATIONALS, FieldSpec::RATIONALS.from_i64(2)).unwrap())
            .unwrap();
        assert_eq!(trivial_ideal_search(&q_sum, 6).status, SearchStatus::Inconclusive);
        // and over F_3 the cap decides between certified and unknown
        assert_eq!(trivial_ideal_search(&a3(), 2).status, SearchStatus::Inconclusive);
    }

    #[test]
    fn baer_examples() {
        let e1 = example1(f3());
        let r = baer_radical(&e1, 6);
        assert!(r.certified);
        assert!(r.radical.is_full());

        let r = baer_radical(&a3(), 6);
        assert!(r.certified);
        assert!(r.radical.is_zero());

        let sum = e1.direct_sum(&a3()).unwrap();
        let r = baer_radical(&sum, 6);
        assert!(r.certified);
        assert_eq!(r.radical, sum.coordinate_block(0, 2));

        let q = example1(FieldSpec::RATIONALS);
        let r = baer_radical(&q, 6);
        assert!(r.certified);
        assert!(r.radical.is_full());
    }

    #[test]
    fn oracle_examples() {
        assert!(baer_radical_oracle(&example1(f3()), 6).unwrap().is_full());
        assert!(baer_radical_oracle(&a3(), 6).unwrap().is_zero());
        assert!(baer_radical_oracle(&zero_algebra(f3(), 2), 6).unwrap().is_full());
        assert!(matches!(baer_radical_oracle(&example1(FieldSpec::RATIONALS), 6), Err(Error::RationalsNotEnumerable)));
        assert!(matches!(baer_radical_oracle(&a3(), 2), Err(Error::CapExceeded { .. })));
    }
}
