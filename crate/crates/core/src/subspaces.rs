//! Subspaces of an algebra in canonical reduced-echelon form, and the ideal
//! constructions built on them.

use std::cmp::Ordering;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalars::{FieldSpec, Scalar};

/// A linear subspace of `F^n`, stored as its reduced row-echelon basis.
///
/// The representation is canonical: two subspaces are equal iff their bases
/// are identical, so `==` and `Hash` are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field, self.ambient, self.rows.len(), &self.rows).cmp(&(
            other.field,
            other.ambient,
            other.rows.len(),
            &other.rows,
        ))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(|i| linalg::unit_vec(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of raw coefficient vectors of length `ambient`.
    pub fn from_vectors(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        let (rows, pivots) = linalg::rref(vectors, ambient);
        Subspace { field, ambient, rows, pivots }
    }

    // Caller guarantees `rows` is already reduced echelon with these pivots.
    pub(crate) fn from_echelon(field: FieldSpec, ambient: usize, rows: Vec<Vec<Scalar>>, pivots: Vec<usize>) -> Self {
        Subspace { field, ambient, rows, pivots }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        self.rows.iter().map(|r| Element::from_vec(self.field, r.clone())).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -&r[p];
                linalg::axpy(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        linalg::is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `Σ coords[r] · row_r`.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut v = linalg::zero_vec(self.field, self.ambient);
        for (c, row) in coords.iter().zip(&self.rows) {
            linalg::axpy(&mut v, c, row);
        }
        v
    }

    /// Maps a subspace given in this subspace's echelon coordinates (as for a
    /// restricted algebra) into the ambient space.
    pub fn embed(&self, inner: &Subspace) -> Subspace {
        debug_assert_eq!(inner.ambient_dim(), self.dim());
        Subspace::from_vectors(self.field, self.ambient, inner.rows.iter().map(|r| self.combine(r)).collect())
    }

    /// The inverse of [`Subspace::embed`] for subspaces contained in `self`.
    pub fn pull_into(&self, outer: &Subspace) -> Option<Subspace> {
        let coords: Option<Vec<_>> = outer.rows.iter().map(|r| self.coordinates(r)).collect();
        Some(Subspace::from_vectors(self.field, self.dim(), coords?))
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field || self.ambient != other.ambient {
            return Err(Error::AlgebraMismatch("subspaces of different spaces".into()));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &Subspace) -> Subspace {
        if other.is_zero() || self.is_full() {
            return self.clone();
        }
        let vectors = self.rows.iter().chain(&other.rows).cloned().collect();
        Subspace::from_vectors(self.field, self.ambient, vectors)
    }

    /// Intersection via the kernel of `(α, β) ↦ Σ α_i u_i − Σ β_j v_j`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_full() {
            return self.clone();
        }
        if other.is_zero() || self.is_full() {
            return other.clone();
        }
        let (a, b) = (self.dim(), other.dim());
        // column c of the system is u_c (c < a) or −v_{c−a}
        let system: Matrix = (0..self.ambient)
            .map(|k| {
                self.rows
                    .iter()
                    .map(|u| u[k].clone())
                    .chain(other.rows.iter().map(|v| -&v[k]))
                    .collect()
            })
            .collect();
        let kernel = linalg::nullspace(self.field, system, a + b);
        let vectors = kernel.iter().map(|sol| self.combine(&sol[..a])).collect();
        Subspace::from_vectors(self.field, self.ambient, vectors)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.contains_unchecked(other))
    }

    pub(crate) fn contains_unchecked(&self, other: &Subspace) -> bool {
        other.dim() <= self.dim() && other.rows.iter().all(|r| self.contains_vector(r))
    }

    /// Every element of the subspace over a finite field, coordinates in
    /// lexicographic order (first basis coordinate slowest).
    pub fn elements(&self) -> Result<SubspaceElements<'_>> {
        let q = self.field.modulus().ok_or(Error::RationalsNotEnumerable)?;
        Ok(SubspaceElements { space: self, q, counter: vec![0; self.dim()], done: false })
    }

    /// `q^dim` over F_q.
    pub fn cardinality(&self) -> Option<u128> {
        self.field.modulus().map(|q| (q as u128).saturating_pow(self.dim() as u32))
    }
}

/// Iterator over the points of a finite subspace.
pub struct SubspaceElements<'a> {
    space: &'a Subspace,
    q: u64,
    counter: Vec<u64>,
    done: bool,
}

impl Iterator for SubspaceElements<'_> {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        if self.done {
            return None;
        }
        let field = self.space.field;
        let coords: Vec<Scalar> = self.counter.iter().map(|&c| field.residue(c)).collect();
        let item = self.space.combine(&coords);
        let mut i = self.counter.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.counter[i] += 1;
            if self.counter[i] < self.q {
                break;
            }
            self.counter[i] = 0;
        }
        Some(item)
    }
}

/// Every subspace of `F_q^n`, walked by echelon pivot pattern: dimension
/// ascending, pivot sets in lexicographic order, then free entries as a
/// base-`q` odometer.
pub fn enumerate_subspaces(field: FieldSpec, n: usize) -> Result<SubspaceWalk> {
    let q = field.modulus().ok_or(Error::RationalsNotEnumerable)?;
    let mut walk = SubspaceWalk { field, n, q, k: 0, pivots: Vec::new(), free: Vec::new(), counter: Vec::new(), done: false };
    walk.start_pattern();
    Ok(walk)
}

pub struct SubspaceWalk {
    field: FieldSpec,
    n: usize,
    q: u64,
    k: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counter: Vec<u64>,
    done: bool,
}

impl SubspaceWalk {
    fn start_pattern(&mut self) {
        self.free = self
            .pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..self.n).filter(|c| !self.pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        self.counter = vec![0; self.free.len()];
    }

    fn next_pivots(&mut self) -> bool {
        let (n, k) = (self.n, self.k);
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < n - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn advance(&mut self) {
        let mut i = self.counter.len();
        while i > 0 {
            i -= 1;
            self.counter[i] += 1;
            if self.counter[i] < self.q {
                return;
            }
            self.counter[i] = 0;
        }
        if !self.next_pivots() {
            self.k += 1;
            if self.k > self.n {
                self.done = true;
                return;
            }
            self.pivots = (0..self.k).collect();
        }
        self.start_pattern();
    }
}

impl Iterator for SubspaceWalk {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let mut rows: Vec<Vec<Scalar>> =
            self.pivots.iter().map(|&p| linalg::unit_vec(self.field, self.n, p)).collect();
        for (&(r, c), &v) in self.free.iter().zip(&self.counter) {
            rows[r][c] = self.field.residue(v);
        }
        let item = Subspace::from_echelon(self.field, self.n, rows, self.pivots.clone());
        self.advance();
        Some(item)
    }
}

/// Number of subspaces of `F_q^n` (sum of Gaussian binomials).
pub fn subspace_count(q: u64, n: usize) -> u128 {
    let q = q as u128;
    let mut total = 0u128;
    for k in 0..=n {
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num *= q.pow((n - i) as u32) - 1;
            den *= q.pow((i + 1) as u32) - 1;
        }
        total += num / den;
    }
    total
}

/// Linear span of elements of `alg`.
pub fn span(alg: &Algebra, vectors: &[Element]) -> Result<Subspace> {
    for v in vectors {
        alg.check_element(v)?;
    }
    Ok(Subspace::from_vectors(alg.field(), alg.dim(), vectors.iter().map(|v| v.coeffs().to_vec()).collect()))
}

/// `U·V`: span of products of basis vectors.
pub fn product_space(alg: &Algebra, u: &Subspace, v: &Subspace) -> Result<Subspace> {
    alg.check_subspace(u)?;
    alg.check_subspace(v)?;
    Ok(product_unchecked(alg, u, v))
}

pub(crate) fn product_unchecked(alg: &Algebra, u: &Subspace, v: &Subspace) -> Subspace {
    let mut vectors = Vec::with_capacity(u.dim() * v.dim());
    for x in u.basis() {
        for y in v.basis() {
            let p = alg.mul_vec(x, y);
            if !linalg::is_zero_vec(&p) {
                vectors.push(p);
            }
        }
    }
    Subspace::from_vectors(alg.field(), alg.dim(), vectors)
}

/// Products `e_i · u` and `u · e_i` for every basis `e_i` and every `u` in
/// the basis of `s`.
fn two_sided_images(alg: &Algebra, s: &Subspace) -> Vec<Vec<Scalar>> {
    let n = alg.dim();
    let mut out = Vec::with_capacity(2 * n * s.dim());
    for u in s.basis() {
        for i in 0..n {
            let mut left = linalg::zero_vec(alg.field(), n);
            let mut right = linalg::zero_vec(alg.field(), n);
            for (l, c) in u.iter().enumerate() {
                if !c.is_zero() {
                    linalg::axpy(&mut left, c, alg.basis_product(i, l));
                    linalg::axpy(&mut right, c, alg.basis_product(l, i));
                }
            }
            out.push(left);
            out.push(right);
        }
    }
    out
}

pub fn is_ideal(alg: &Algebra, s: &Subspace) -> Result<bool> {
    alg.check_subspace(s)?;
    Ok(is_ideal_unchecked(alg, s))
}

pub(crate) fn is_ideal_unchecked(alg: &Algebra, s: &Subspace) -> bool {
    if s.is_full() || s.is_zero() {
        return true;
    }
    let n = alg.dim();
    for u in s.basis() {
        for i in 0..n {
            let mut left = linalg::zero_vec(alg.field(), n);
            let mut right = linalg::zero_vec(alg.field(), n);
            for (l, c) in u.iter().enumerate() {
                if !c.is_zero() {
                    linalg::axpy(&mut left, c, alg.basis_product(i, l));
                    linalg::axpy(&mut right, c, alg.basis_product(l, i));
                }
            }
            if !s.contains_vector(&left) || !s.contains_vector(&right) {
                return false;
            }
        }
    }
    true
}

/// Smallest two-sided ideal containing `gens`. Each round adds `A·S + S·A`;
/// the dimension grows or the loop stops, so at most `dim A` rounds run.
pub fn ideal_closure(alg: &Algebra, gens: &Subspace) -> Result<Subspace> {
    alg.check_subspace(gens)?;
    Ok(closure_unchecked(alg, gens))
}

pub(crate) fn closure_unchecked(alg: &Algebra, gens: &Subspace) -> Subspace {
    let mut current = gens.clone();
    for _ in 0..=alg.dim() {
        let mut vectors = current.basis().to_vec();
        vectors.extend(two_sided_images(alg, &current));
        let next = Subspace::from_vectors(alg.field(), alg.dim(), vectors);
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
    current
}

/// Ideal generated by a single vector.
pub(crate) fn principal_ideal(alg: &Algebra, v: &[Scalar]) -> Subspace {
    closure_unchecked(alg, &Subspace::from_vectors(alg.field(), alg.dim(), vec![v.to_vec()]))
}

fn require_ideal(alg: &Algebra, i: &Subspace) -> Result<()> {
    if is_ideal(alg, i)? {
        Ok(())
    } else {
        Err(Error::NotAnIdeal)
    }
}

/// `T(I) = (I·I)·I`, the span of all `(ij)j` with `i, j ∈ I`.
pub fn t_ideal(alg: &Algebra, ideal: &Subspace) -> Result<Subspace> {
    require_ideal(alg, ideal)?;
    let square = product_unchecked(alg, ideal, ideal);
    Ok(product_unchecked(alg, &square, ideal))
}

/// `P(I) = (A·I)·I`, the span of all `(aj)j` with `a ∈ A`, `j ∈ I`.
pub fn p_ideal(alg: &Algebra, ideal: &Subspace) -> Result<Subspace> {
    require_ideal(alg, ideal)?;
    let full = Subspace::full(alg.field(), alg.dim());
    let ai = product_unchecked(alg, &full, ideal);
    Ok(product_unchecked(alg, &ai, ideal))
}

/// Kernel of the linear map `x ↦ (f(e_0)(x), ..., )`: `images(i)` lists the
/// images of `e_i` under each constraint map, concatenated.
fn kernel_of(alg: &Algebra, images: impl Fn(usize) -> Vec<Scalar>) -> Subspace {
    let n = alg.dim();
    let columns: Vec<Vec<Scalar>> = (0..n).map(images).collect();
    let height = columns.first().map_or(0, Vec::len);
    let system: Matrix = (0..height).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    Subspace::from_vectors(alg.field(), n, linalg::nullspace(alg.field(), system, n))
}

/// `N(A) = {x : (x,A,A) = (A,x,A) = (A,A,x) = 0}`, solved as one linear
/// system over the basis associators.
pub fn nucleus(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    let assoc = alg.basis_associators();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    kernel_of(alg, |i| {
        let mut col = Vec::with_capacity(3 * n * n * n);
        for j in 0..n {
            for k in 0..n {
                col.extend_from_slice(&assoc[idx(i, j, k)]);
                col.extend_from_slice(&assoc[idx(j, i, k)]);
                col.extend_from_slice(&assoc[idx(j, k, i)]);
            }
        }
        col
    })
}

/// `Ann_l(M) = {a : aM = 0}`.
pub fn left_annihilator(alg: &Algebra, m: &Subspace) -> Result<Subspace> {
    alg.check_subspace(m)?;
    Ok(kernel_of(alg, |i| {
        let ei = linalg::unit_vec(alg.field(), alg.dim(), i);
        m.basis().iter().flat_map(|v| alg.mul_vec(&ei, v)).collect()
    }))
}

/// `Ann_r(M) = {a : Ma = 0}`.
pub fn right_annihilator(alg: &Algebra, m: &Subspace) -> Result<Subspace> {
    alg.check_subspace(m)?;
    Ok(kernel_of(alg, |i| {
        let ei = linalg::unit_vec(alg.field(), alg.dim(), i);
        m.basis().iter().flat_map(|v| alg.mul_vec(v, &ei)).collect()
    }))
}

/// `{x : xA = Ax = 0}`; always an ideal with zero square.
pub fn two_sided_annihilator(alg: &Algebra) -> Subspace {
    let full = Subspace::full(alg.field(), alg.dim());
    let left = left_annihilator(alg, &full).expect("same algebra");
    let right = right_annihilator(alg, &full).expect("same algebra");
    left.intersect_unchecked(&right)
}

/// `{x : (i,j,x) = 0 for all i, j ∈ S}`. Linear in `x`; not an ideal in
/// general.
pub fn third_slot_associator_kernel(alg: &Algebra, s: &Subspace) -> Result<Subspace> {
    alg.check_subspace(s)?;
    Ok(kernel_of(alg, |l| {
        let el = linalg::unit_vec(alg.field(), alg.dim(), l);
        let mut col = Vec::new();
        for i in s.basis() {
            for j in s.basis() {
                col.extend(alg.associator_vec(i, j, &el));
            }
        }
        col
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{apn, example1, zero_algebra, ApnParams};

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    fn a3() -> Algebra {
        apn(&ApnParams::new(3, 1, 0, 0).unwrap()).unwrap()
    }

    fn el(alg: &Algebra, c: &[i64]) -> Element {
        alg.element_from_ints(c).unwrap()
    }

    #[test]
    fn spans() {
        let e1 = example1(FieldSpec::RATIONALS);
        assert!(span(&e1, &[el(&e1, &[1, 1]), el(&e1, &[0, 1])]).unwrap().is_full());
        assert!(span(&e1, &[]).unwrap().is_zero());
        assert_eq!(span(&e1, &[el(&e1, &[0, 2])]).unwrap(), e1.coordinate_block(1, 1));
    }

    #[test]
    fn lattice_operations() {
        let e1 = example1(FieldSpec::RATIONALS);
        let fa = e1.coordinate_block(0, 1);
        let fb = e1.coordinate_block(1, 1);
        let fab = span(&e1, &[el(&e1, &[1, 1])]).unwrap();
        assert!(fa.sum(&fb).unwrap().is_full());
        assert!(fb.intersect(&fab).unwrap().is_zero());
        let full = Subspace::full(e1.field(), 2);
        for u in [&fa, &fb, &fab, &full] {
            assert!(full.contains(u).unwrap());
        }
        assert!(!fa.contains(&fb).unwrap());
        let other = Subspace::zero(f3(), 2);
        assert!(matches!(fa.sum(&other), Err(Error::AlgebraMismatch(_))));
    }

    #[test]
    fn intersect_in_three_space() {
        let f = FieldSpec::RATIONALS;
        let alg = zero_algebra(f, 3);
        let u = span(&alg, &[el(&alg, &[1, 0, 0]), el(&alg, &[0, 1, 1])]).unwrap();
        let v = span(&alg, &[el(&alg, &[1, 1, 1]), el(&alg, &[0, 0, 1])]).unwrap();
        let w = u.intersect(&v).unwrap();
        assert_eq!(w, span(&alg, &[el(&alg, &[1, 1, 1])]).unwrap());
    }

    #[test]
    fn products() {
        let e1 = example1(f3());
        let full = Subspace::full(e1.field(), 2);
        assert_eq!(product_space(&e1, &full, &full).unwrap(), e1.coordinate_block(1, 1));
        assert!(product_space(&e1, &full, &Subspace::zero(e1.field(), 2)).unwrap().is_zero());
        let a = a3();
        let full3 = Subspace::full(a.field(), 3);
        assert!(product_space(&a, &full3, &full3).unwrap().is_full());
    }

    #[test]
    fn closures_and_ideals() {
        let e1 = example1(f3());
        let fa = e1.coordinate_block(0, 1);
        let fb = e1.coordinate_block(1, 1);
        assert!(ideal_closure(&e1, &fa).unwrap().is_full());
        assert_eq!(ideal_closure(&e1, &fb).unwrap(), fb);
        assert!(ideal_closure(&e1, &Subspace::zero(e1.field(), 2)).unwrap().is_zero());
        assert!(is_ideal(&e1, &fb).unwrap());
        assert!(!is_ideal(&e1, &fa).unwrap());
        assert!(is_ideal(&e1, &Subspace::full(e1.field(), 2)).unwrap());
    }

    #[test]
    fn t_and_p() {
        let e1 = example1(f3());
        let full = Subspace::full(e1.field(), 2);
        assert!(t_ideal(&e1, &full).unwrap().is_zero());
        assert!(p_ideal(&e1, &full).unwrap().is_zero());
        let a = a3();
        let full3 = Subspace::full(a.field(), 3);
        assert!(t_ideal(&a, &full3).unwrap().is_full());
        assert!(p_ideal(&a, &full3).unwrap().is_full());
        let zero = Subspace::zero(a.field(), 3);
        assert!(t_ideal(&a, &zero).unwrap().is_zero());
        assert!(p_ideal(&a, &zero).unwrap().is_zero());
        assert!(matches!(t_ideal(&e1, &e1.coordinate_block(0, 1)), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn nuclei() {
        assert!(nucleus(&example1(f3())).is_zero());
        assert!(nucleus(&zero_algebra(f3(), 3)).is_full());
        assert!(nucleus(&a3()).is_zero());
    }

    #[test]
    fn annihilators() {
        let e1 = example1(f3());
        let fb = e1.coordinate_block(1, 1);
        assert_eq!(left_annihilator(&e1, &fb).unwrap(), fb);
        let a = a3();
        assert!(left_annihilator(&a, &Subspace::zero(a.field(), 3)).unwrap().is_full());
        assert!(left_annihilator(&a, &Subspace::full(a.field(), 3)).unwrap().is_zero());

        assert!(two_sided_annihilator(&e1).is_zero());
        assert!(two_sided_annihilator(&zero_algebra(f3(), 3)).is_full());
        let padded = e1.direct_sum(&zero_algebra(f3(), 1)).unwrap();
        assert_eq!(two_sided_annihilator(&padded), padded.coordinate_block(2, 1));
    }

    #[test]
    fn walk_counts_match_gaussian_binomials() {
        for (q, n) in [(3u64, 0usize), (3, 1), (3, 2), (3, 3), (2, 4), (5, 2), (3, 5)] {
            let field = if q == 2 { FieldSpec::binary() } else { FieldSpec::prime(q).unwrap() };
            let all: Vec<_> = enumerate_subspaces(field, n).unwrap().collect();
            assert_eq!(all.len() as u128, subspace_count(q, n), "q={q} n={n}");
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
            for s in &all {
                assert_eq!(&Subspace::from_vectors(field, n, s.basis().to_vec()), s);
            }
        }
        assert_eq!(subspace_count(3, 5), 2664);
        assert_eq!(subspace_count(3, 2), 6);
        assert!(enumerate_subspaces(FieldSpec::RATIONALS, 2).is_err());
    }

    #[test]
    fn element_iteration() {
        let f = FieldSpec::prime(5).unwrap();
        let s = Subspace::full(f, 2);
        let all: Vec<_> = s.elements().unwrap().collect();
        assert_eq!(all.len(), 25);
        assert_eq!(all[6], vec![f.from_i64(1), f.from_i64(1)]);
        assert_eq!(Subspace::zero(f, 2).elements().unwrap().count(), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn vectors() -> impl Strategy<Value = Vec<Vec<i64>>> {
            proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 0..5)
        }

        proptest! {
            #[test]
            fn span_is_canonical(vs in vectors(), ws in vectors()) {
                let f = FieldSpec::RATIONALS;
                let to = |v: &Vec<Vec<i64>>| v.iter().map(|r| r.iter().map(|&c| f.from_i64(c)).collect()).collect::<Vec<Vec<Scalar>>>();
                let u = Subspace::from_vectors(f, 4, to(&vs));
                prop_assert_eq!(&Subspace::from_vectors(f, 4, u.basis().to_vec()), &u);
                let w = Subspace::from_vectors(f, 4, to(&ws));
                let meet = u.intersect(&w).unwrap();
                let join = u.sum(&w).unwrap();
                prop_assert_eq!(meet.dim() + join.dim(), u.dim() + w.dim());
                prop_assert!(u.contains(&meet).unwrap() && w.contains(&meet).unwrap());
                prop_assert!(join.contains(&u).unwrap() && join.contains(&w).unwrap());
            }
        }
    }
}
