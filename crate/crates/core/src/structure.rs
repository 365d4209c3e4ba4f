//! Ideal inventories and the structural predicates built on them: primality,
//! simplicity, the heart, the class of subdirectly irreducible algebras with
//! idempotent heart, and the Andrunakievich radical.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::radicals::{projective_count, projective_points, trivial_ideal_search, SearchStatus};
use crate::subspaces::{self, closure_unchecked, is_ideal_unchecked, product_unchecked, Subspace};

/// Largest number of one-dimensional subspaces scanned by [`is_simple`].
pub const SIMPLICITY_POINT_BUDGET: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealInventory {
    /// Sorted by dimension, then by echelon basis.
    pub ideals: Vec<Subspace>,
    pub complete: bool,
}

impl IdealInventory {
    pub fn nonzero(&self) -> impl Iterator<Item = &Subspace> {
        self.ideals.iter().filter(|s| !s.is_zero())
    }

    /// Nonzero ideals containing no other nonzero ideal.
    pub fn minimal(&self) -> Vec<&Subspace> {
        let nonzero: Vec<&Subspace> = self.nonzero().collect();
        nonzero
            .iter()
            .filter(|s| !nonzero.iter().any(|t| t.dim() < s.dim() && s.contains_unchecked(t)))
            .copied()
            .collect()
    }
}

fn require_enumerable(alg: &Algebra, cap: usize) -> Result<()> {
    if !alg.field().is_finite() {
        return Err(Error::RationalsNotEnumerable);
    }
    if alg.dim() > cap {
        return Err(Error::CapExceeded { dim: alg.dim(), cap });
    }
    Ok(())
}

/// Every ideal of an algebra over a finite field of dimension at most `cap`.
pub fn enumerate_ideals(alg: &Algebra, cap: usize) -> Result<IdealInventory> {
    require_enumerable(alg, cap)?;
    let mut ideals: Vec<Subspace> =
        subspaces::enumerate_subspaces(alg.field(), alg.dim())?.filter(|s| is_ideal_unchecked(alg, s)).collect();
    ideals.sort();
    Ok(IdealInventory { ideals, complete: true })
}

/// Three-valued answer for predicates that cannot always be decided over Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Inconclusive => None,
        }
    }
}

/// No nonzero ideal squares to zero.
pub fn is_semiprime(alg: &Algebra, cap: usize) -> Verdict {
    match trivial_ideal_search(alg, cap).status {
        SearchStatus::Found(_) => Verdict::False,
        SearchStatus::CertifiedNone => Verdict::True,
        SearchStatus::Inconclusive => Verdict::Inconclusive,
    }
}

/// `IJ ≠ 0` for all nonzero ideals `I`, `J`. Decided exactly over finite
/// fields within `cap`; elsewhere only a witness pair can decide it.
pub fn is_prime(alg: &Algebra, cap: usize) -> Result<Verdict> {
    if alg.field().is_finite() && alg.dim() <= cap {
        let inv = enumerate_ideals(alg, cap)?;
        return Ok(Verdict::from_bool(prime_from_inventory(alg, &inv)));
    }
    if is_semiprime(alg, cap) == Verdict::False {
        return Ok(Verdict::False);
    }
    let principal: Vec<Subspace> = (0..alg.dim()).map(|i| closure_unchecked(alg, &alg.coordinate_block(i, 1))).collect();
    for i in &principal {
        for j in &principal {
            if product_unchecked(alg, i, j).is_zero() {
                return Ok(Verdict::False);
            }
        }
    }
    if alg.dim() <= 1 {
        return Ok(Verdict::True);
    }
    if alg.field().is_finite() {
        return Err(Error::CapExceeded { dim: alg.dim(), cap });
    }
    Ok(Verdict::Inconclusive)
}

pub(crate) fn prime_from_inventory(alg: &Algebra, inv: &IdealInventory) -> bool {
    // every nonzero ideal contains a minimal one, so minimal pairs suffice
    let minimal = inv.minimal();
    minimal.iter().all(|i| minimal.iter().all(|j| !product_unchecked(alg, i, j).is_zero()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub simple: bool,
    /// False only when every probe generated the whole algebra but the probes
    /// did not cover every line.
    pub certified: bool,
}

/// `A² ≠ 0` and every nonzero element generates `A` as an ideal. Over a
/// finite field every line is tried, up to [`SIMPLICITY_POINT_BUDGET`];
/// otherwise basis vectors and their pairwise sums and differences are.
pub fn is_simple(alg: &Algebra) -> SimplicityReport {
    let n = alg.dim();
    let full = Subspace::full(alg.field(), n);
    if n == 0 || alg.is_zero_multiplication() {
        return SimplicityReport { simple: false, certified: true };
    }
    let generates_all = |v: &[crate::scalars::Scalar]| subspaces::principal_ideal(alg, v) == full;
    let exhaustive = alg.field().modulus().is_some_and(|q| projective_count(q, n) <= SIMPLICITY_POINT_BUDGET);
    if n == 1 || exhaustive {
        let simple = n == 1 || projective_points(alg).all(|v| generates_all(&v));
        return SimplicityReport { simple, certified: true };
    }
    for v in probes(alg) {
        if !generates_all(&v) {
            return SimplicityReport { simple: false, certified: true };
        }
    }
    SimplicityReport { simple: true, certified: false }
}

fn probes(alg: &Algebra) -> Vec<Vec<crate::scalars::Scalar>> {
    let basis: Vec<_> = alg.basis().into_iter().map(|e| e.into_coeffs()).collect();
    let mut out = basis.clone();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            out.push(crate::linalg::add_vec(&basis[i], &basis[j]));
            out.push(crate::linalg::sub_vec(&basis[i], &basis[j]));
        }
    }
    out
}

/// Intersection of all nonzero ideals. For `A ≠ 0` with no proper nonzero
/// ideal this is `A` itself.
pub fn heart(alg: &Algebra, cap: usize) -> Result<Subspace> {
    if alg.dim() == 0 {
        return Err(Error::ZeroAlgebra);
    }
    Ok(heart_from_inventory(alg, &enumerate_ideals(alg, cap)?))
}

pub(crate) fn heart_from_inventory(alg: &Algebra, inv: &IdealInventory) -> Subspace {
    inv.minimal().into_iter().fold(Subspace::full(alg.field(), alg.dim()), |acc, m| acc.intersect_unchecked(m))
}

/// The heart is nonzero.
pub fn is_subdirectly_irreducible(alg: &Algebra, cap: usize) -> Result<bool> {
    if alg.dim() == 0 {
        return Ok(false);
    }
    Ok(!heart(alg, cap)?.is_zero())
}

/// Subdirectly irreducible with idempotent heart. The zero-dimensional
/// algebra is outside the class.
pub fn in_b_class(alg: &Algebra, cap: usize) -> Result<bool> {
    if alg.dim() == 0 {
        return Ok(false);
    }
    let h = heart(alg, cap)?;
    Ok(!h.is_zero() && product_unchecked(alg, &h, &h) == h)
}

/// Ideals whose quotient lies in the class of [`in_b_class`].
pub fn b_ideals(alg: &Algebra, cap: usize) -> Result<Vec<Subspace>> {
    let inv = enumerate_ideals(alg, cap)?;
    let mut out = Vec::new();
    for k in inv.ideals {
        let (q, _) = alg.quotient(&k)?;
        if in_b_class(&q, cap)? {
            out.push(k);
        }
    }
    Ok(out)
}

/// Intersection of the ideals from [`b_ideals`]; the whole algebra when there
/// are none.
pub fn andrunakievich_radical(alg: &Algebra, cap: usize) -> Result<Subspace> {
    let full = Subspace::full(alg.field(), alg.dim());
    Ok(b_ideals(alg, cap)?.iter().fold(full, |acc, k| acc.intersect_unchecked(k)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub prime: bool,
    pub semiprime: bool,
    pub simple: bool,
    pub heart: Subspace,
    pub subdirectly_irreducible: bool,
    pub in_b_class: bool,
}

/// All predicates at once, over a finite field within `cap`.
pub fn structure_report(alg: &Algebra, cap: usize) -> Result<StructureReport> {
    if alg.dim() == 0 {
        return Err(Error::ZeroAlgebra);
    }
    let inv = enumerate_ideals(alg, cap)?;
    let heart = heart_from_inventory(alg, &inv);
    let semiprime = !inv.nonzero().any(|i| product_unchecked(alg, i, i).is_zero());
    let prime = prime_from_inventory(alg, &inv);
    let simple = !alg.is_zero_multiplication() && inv.ideals.len() == 2;
    let idempotent = product_unchecked(alg, &heart, &heart) == heart;
    Ok(StructureReport {
        prime,
        semiprime,
        simple,
        subdirectly_irreducible: !heart.is_zero(),
        in_b_class: !heart.is_zero() && idempotent,
        heart,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{apn, example1, one_dim, zero_algebra, ApnParams};
    use crate::scalars::FieldSpec;

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    fn a3() -> Algebra {
        apn(&ApnParams::new(3, 1, 0, 0).unwrap()).unwrap()
    }

    #[test]
    fn inventories() {
        let e1 = example1(f3());
        let inv = enumerate_ideals(&e1, 6).unwrap();
        assert_eq!(inv.ideals, vec![Subspace::zero(f3(), 2), e1.coordinate_block(1, 1), Subspace::full(f3(), 2)]);
        assert!(inv.complete);
        assert_eq!(enumerate_ideals(&a3(), 6).unwrap().ideals.len(), 2);
        assert_eq!(enumerate_ideals(&zero_algebra(f3(), 2), 6).unwrap().ideals.len(), 6);
        assert!(matches!(enumerate_ideals(&example1(FieldSpec::RATIONALS), 6), Err(Error::RationalsNotEnumerable)));
        assert!(matches!(enumerate_ideals(&a3(), 2), Err(Error::CapExceeded { dim: 3, cap: 2 })));
    }

    #[test]
    fn primality() {
        assert_eq!(is_prime(&a3(), 6).unwrap(), Verdict::True);
        assert_eq!(is_semiprime(&a3(), 6), Verdict::True);
        let e1 = example1(f3());
        assert_eq!(is_prime(&e1, 6).unwrap(), Verdict::False);
        assert_eq!(is_semiprime(&e1, 6), Verdict::False);
        let z = zero_algebra(f3(), 2);
        assert_eq!(is_prime(&z, 6).unwrap(), Verdict::False);
        assert_eq!(is_semiprime(&z, 6), Verdict::False);
        assert_eq!(is_prime(&example1(FieldSpec::RATIONALS), 6).unwrap(), Verdict::False);
        let idem = one_dim(FieldSpec::RATIONALS, FieldSpec::RATIONALS.one()).unwrap();
        assert_eq!(is_prime(&idem, 6).unwrap(), Verdict::True);
    }

    #[test]
    fn simplicity() {
        assert_eq!(is_simple(&a3()), SimplicityReport { simple: true, certified: true });
        assert_eq!(is_simple(&example1(f3())), SimplicityReport { simple: false, certified: true });
        assert_eq!(is_simple(&zero_algebra(f3(), 1)), SimplicityReport { simple: false, certified: true });
        assert!(!is_simple(&example1(FieldSpec::RATIONALS)).simple);
        let idem = one_dim(FieldSpec::RATIONALS, FieldSpec::RATIONALS.one()).unwrap();
        assert_eq!(is_simple(&idem), SimplicityReport { simple: true, certified: true });
    }

    #[test]
    fn hearts() {
        let e1 = example1(f3());
        assert_eq!(heart(&e1, 6).unwrap(), e1.coordinate_block(1, 1));
        assert!(heart(&a3(), 6).unwrap().is_full());
        let sum = e1.direct_sum(&e1).unwrap();
        assert!(heart(&sum, 6).unwrap().is_zero());
        assert!(!is_subdirectly_irreducible(&sum, 6).unwrap());
        assert!(matches!(heart(&zero_algebra(f3(), 0), 6), Err(Error::ZeroAlgebra)));
        assert!(heart(&zero_algebra(f3(), 1), 6).unwrap().is_full());
    }

    #[test]
    fn b_class_and_ideals() {
        let e1 = example1(f3());
        assert!(in_b_class(&a3(), 6).unwrap());
        assert!(!in_b_class(&e1, 6).unwrap());
        assert!(!in_b_class(&zero_algebra(f3(), 1), 6).unwrap());
        assert!(!in_b_class(&zero_algebra(f3(), 0), 6).unwrap());

        assert_eq!(b_ideals(&a3(), 6).unwrap(), vec![Subspace::zero(f3(), 3)]);
        assert!(b_ideals(&e1, 6).unwrap().is_empty());
        let sum = e1.direct_sum(&a3()).unwrap();
        assert_eq!(b_ideals(&sum, 6).unwrap(), vec![sum.coordinate_block(0, 2)]);
    }

    #[test]
    fn andrunakievich_examples() {
        let e1 = example1(f3());
        assert!(andrunakievich_radical(&e1, 6).unwrap().is_full());
        assert!(andrunakievich_radical(&a3(), 6).unwrap().is_zero());
        let sum = e1.direct_sum(&a3()).unwrap();
        assert_eq!(andrunakievich_radical(&sum, 6).unwrap(), sum.coordinate_block(0, 2));
    }

    #[test]
    fn report_implications() {
        for alg in [a3(), example1(f3()), zero_algebra(f3(), 2), one_dim(f3(), f3().one()).unwrap()] {
            let r = structure_report(&alg, 6).unwrap();
            assert!(!r.simple || r.prime);
            assert!(!r.prime || r.semiprime);
            assert_eq!(r.simple, is_simple(&alg).simple);
            assert_eq!(r.prime, is_prime(&alg, 6).unwrap() == Verdict::True);
            assert_eq!(r.semiprime, is_semiprime(&alg, 6) == Verdict::True);
            assert_eq!(r.in_b_class, in_b_class(&alg, 6).unwrap());
        }
    }
}
