//! Algebras given by structure constants.
//!
//! `e_i · e_j = Σ_k c[i][j][k] e_k`, stored densely. Everything else
//! (products of elements, associators, multiplication operators) is the
//! bilinear extension of the table.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalars::{FieldSpec, Scalar};
use crate::subspaces::Subspace;

/// Coefficient vector of an algebra element in the standard basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Element {
    pub fn new(field: FieldSpec, coeffs: Vec<Scalar>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| !field.contains(c)) {
            return Err(Error::FieldMismatch { left: field, right: bad.field() });
        }
        Ok(Element { field, coeffs })
    }

    pub(crate) fn from_vec(field: FieldSpec, coeffs: Vec<Scalar>) -> Self {
        Element { field, coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.coeffs)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element::from_vec(self.field, linalg::add_vec(&self.coeffs, &other.coeffs))
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element::from_vec(self.field, linalg::sub_vec(&self.coeffs, &other.coeffs))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element::from_vec(self.field, linalg::scale(&self.coeffs, c))
    }

    pub fn neg(&self) -> Element {
        self.scale(&-&self.field.one())
    }
}

/// Which side a multiplication operator multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `L_x : v ↦ x·v`
    Left,
    /// `R_x : v ↦ v·x`
    Right,
}

/// Which polynomial identity a basis tuple violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `(x,y,z) = (y,x,z)`
    LeftSymmetry,
    /// `(xy)z = (xz)y`
    RightCommutativity,
    /// `(xw,y,z) = (x,yw,z)`
    AssociatorShift,
    /// `(x,yw,z) = (x,y,z)w`
    AssociatorRightAction,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Identity::LeftSymmetry => "(x,y,z)=(y,x,z)",
            Identity::RightCommutativity => "(xy)z=(xz)y",
            Identity::AssociatorShift => "(xw,y,z)=(x,yw,z)",
            Identity::AssociatorRightAction => "(x,yw,z)=(x,y,z)w",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: Identity,
    /// Basis indices of the failing tuple, in the identity's variable order.
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub holds: bool,
    pub failure: Option<IdentityFailure>,
    pub tuples_checked: usize,
}

impl IdentityReport {
    fn pass(tuples_checked: usize) -> Self {
        IdentityReport { holds: true, failure: None, tuples_checked }
    }

    fn fail(identity: Identity, indices: Vec<usize>, tuples_checked: usize) -> Self {
        IdentityReport { holds: false, failure: Some(IdentityFailure { identity, indices }), tuples_checked }
    }
}

/// A finite-dimensional algebra over an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: FieldSpec,
    labels: Vec<String>,
    // c[i][j][k] at (i * n + j) * n + k
    table: Vec<Scalar>,
}

impl Algebra {
    /// Builds an algebra from a nested `n × n × n` table.
    pub fn new(field: FieldSpec, labels: Vec<String>, table: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(Error::InvalidTable(format!("table extents do not match dimension {n}")));
        }
        Self::from_flat(field, labels, table.into_iter().flatten().flatten().collect())
    }

    pub(crate) fn from_flat(field: FieldSpec, labels: Vec<String>, table: Vec<Scalar>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n * n * n {
            return Err(Error::InvalidTable(format!("expected {} constants, got {}", n * n * n, table.len())));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || !seen.insert(l.as_str()) {
                return Err(Error::InvalidTable(format!("basis label {l:?} is empty or repeated")));
            }
        }
        if let Some(bad) = table.iter().find(|c| !field.contains(c)) {
            return Err(Error::FieldMismatch { left: field, right: bad.field() });
        }
        Ok(Algebra { field, labels, table })
    }

    /// Builds an algebra from a constant function `(i, j, k) ↦ c[i][j][k]`.
    pub fn from_fn(field: FieldSpec, labels: Vec<String>, f: impl Fn(usize, usize, usize) -> Scalar) -> Result<Self> {
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    table.push(f(i, j, k));
                }
            }
        }
        Self::from_flat(field, labels, table)
    }

    /// Default labels `e0, e1, ...`.
    pub fn default_labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.table[(i * n + j) * n + k]
    }

    /// `e_i · e_j` as a coefficient slice.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.table[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn is_zero_multiplication(&self) -> bool {
        self.table.iter().all(Scalar::is_zero)
    }

    pub fn zero(&self) -> Element {
        Element::from_vec(self.field, linalg::zero_vec(self.field, self.dim()))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::from_vec(self.field, linalg::unit_vec(self.field, self.dim(), i))
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<Element> {
        let e = Element::new(self.field, coeffs)?;
        self.check_element(&e)?;
        Ok(e)
    }

    /// Element from small integer coefficients.
    pub fn element_from_ints(&self, coeffs: &[i64]) -> Result<Element> {
        self.element(coeffs.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    pub(crate) fn check_element(&self, e: &Element) -> Result<()> {
        if e.field != self.field {
            return Err(Error::AlgebraMismatch(format!("element over {} in algebra over {}", e.field, self.field)));
        }
        if e.len() != self.dim() {
            return Err(Error::AlgebraMismatch(format!(
                "element of length {} in algebra of dimension {}",
                e.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field || s.ambient_dim() != self.dim() {
            return Err(Error::AlgebraMismatch(format!(
                "subspace of {}^{} in algebra over {} of dimension {}",
                s.field(),
                s.ambient_dim(),
                self.field,
                self.dim()
            )));
        }
        Ok(())
    }

    /// Bilinear product of raw coefficient vectors.
    pub(crate) fn mul_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = linalg::zero_vec(self.field, n);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                linalg::axpy(&mut out, &(ui * vj), self.basis_product(i, j));
            }
        }
        out
    }

    pub(crate) fn associator_vec(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let left = self.mul_vec(&self.mul_vec(x, y), z);
        let right = self.mul_vec(x, &self.mul_vec(y, z));
        linalg::sub_vec(&left, &right)
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_element(u)?;
        self.check_element(v)?;
        Ok(Element::from_vec(self.field, self.mul_vec(&u.coeffs, &v.coeffs)))
    }

    /// The associator `(x,y,z) = (xy)z − x(yz)`.
    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        for e in [x, y, z] {
            self.check_element(e)?;
        }
        Ok(Element::from_vec(self.field, self.associator_vec(&x.coeffs, &y.coeffs, &z.coeffs)))
    }

    /// Matrix of `L_x` or `R_x`; column `j` holds the image of `e_j`.
    pub fn mul_operator(&self, side: Side, x: &Element) -> Result<Matrix> {
        self.check_element(x)?;
        Ok(self.mul_operator_vec(side, &x.coeffs))
    }

    #[allow(clippy::needless_range_loop)]
    pub(crate) fn mul_operator_vec(&self, side: Side, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = vec![linalg::zero_vec(self.field, n); n];
        for j in 0..n {
            let ej = linalg::unit_vec(self.field, n, j);
            let image = match side {
                Side::Left => self.mul_vec(x, &ej),
                Side::Right => self.mul_vec(&ej, x),
            };
            for (k, c) in image.into_iter().enumerate() {
                m[k][j] = c;
            }
        }
        m
    }

    // (e_i e_j) e_k for all triples, and e_i (e_j e_k).
    fn triple_products(&self) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
        let n = self.dim();
        let mut left = Vec::with_capacity(n * n * n);
        let mut right = Vec::with_capacity(n * n * n);
        let basis: Vec<_> = (0..n).map(|i| linalg::unit_vec(self.field, n, i)).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    left.push(self.mul_vec(self.basis_product(i, j), &basis[k]));
                    right.push(self.mul_vec(&basis[i], self.basis_product(j, k)));
                }
            }
        }
        (left, right)
    }

    /// All basis associators `(e_i, e_j, e_k)`, indexed `(i * n + j) * n + k`.
    pub(crate) fn basis_associators(&self) -> Vec<Vec<Scalar>> {
        let (left, right) = self.triple_products();
        left.iter().zip(&right).map(|(l, r)| linalg::sub_vec(l, r)).collect()
    }

    /// Checks left symmetry `(x,y,z) = (y,x,z)` and right commutativity
    /// `(xy)z = (xz)y` on every basis triple. Both identities are multilinear,
    /// so the basis scan decides them for all elements.
    pub fn check_novikov(&self) -> IdentityReport {
        let n = self.dim();
        let (left, right) = self.triple_products();
        let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        let mut checked = 0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    checked += 1;
                    let a_ijk = linalg::sub_vec(&left[idx(i, j, k)], &right[idx(i, j, k)]);
                    let a_jik = linalg::sub_vec(&left[idx(j, i, k)], &right[idx(j, i, k)]);
                    if a_ijk != a_jik {
                        return IdentityReport::fail(Identity::LeftSymmetry, vec![i, j, k], checked);
                    }
                    if left[idx(i, j, k)] != left[idx(i, k, j)] {
                        return IdentityReport::fail(Identity::RightCommutativity, vec![i, j, k], checked);
                    }
                }
            }
        }
        IdentityReport::pass(checked)
    }

    /// Checks `(xw,y,z) = (x,yw,z) = (x,y,z)w` on every basis quadruple;
    /// indices are reported as `[x, y, z, w]`.
    pub fn check_derived_identity(&self) -> IdentityReport {
        let n = self.dim();
        let assoc = self.basis_associators();
        let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        let mut checked = 0;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        checked += 1;
                        let mut shifted_first = linalg::zero_vec(self.field, n);
                        let mut shifted_second = linalg::zero_vec(self.field, n);
                        for l in 0..n {
                            linalg::axpy(&mut shifted_first, &self.basis_product(x, w)[l], &assoc[idx(l, y, z)]);
                            linalg::axpy(&mut shifted_second, &self.basis_product(y, w)[l], &assoc[idx(x, l, z)]);
                        }
                        let acted = self.mul_vec(&assoc[idx(x, y, z)], &linalg::unit_vec(self.field, n, w));
                        if shifted_first != shifted_second {
                            return IdentityReport::fail(Identity::AssociatorShift, vec![x, y, z, w], checked);
                        }
                        if shifted_second != acted {
                            return IdentityReport::fail(Identity::AssociatorRightAction, vec![x, y, z, w], checked);
                        }
                    }
                }
            }
        }
        IdentityReport::pass(checked)
    }

    /// `A / I` on the complement spanned by the standard basis vectors at the
    /// non-pivot columns of `I`, together with the projection.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, QuotientMap)> {
        self.check_subspace(ideal)?;
        if !crate::subspaces::is_ideal(self, ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let map = QuotientMap::new(ideal.clone());
        let m = map.complement.len();
        let labels = map.complement.iter().map(|&c| self.labels[c].clone()).collect();
        let mut table = Vec::with_capacity(m * m * m);
        for &ci in &map.complement {
            for &cj in &map.complement {
                table.extend(map.project_vec(self.basis_product(ci, cj)));
            }
        }
        Ok((Algebra::from_flat(self.field, labels, table)?, map))
    }

    /// The subalgebra on the echelon basis of `sub`, which must be closed under
    /// multiplication. Basis vector `r` of the result is row `r` of `sub`.
    pub fn restrict(&self, sub: &Subspace) -> Result<Algebra> {
        self.check_subspace(sub)?;
        let rows = sub.basis();
        let m = rows.len();
        let mut table = Vec::with_capacity(m * m * m);
        for u in rows {
            for v in rows {
                let p = self.mul_vec(u, v);
                table.extend(sub.coordinates(&p).ok_or(Error::NotClosed)?);
            }
        }
        let labels = rows
            .iter()
            .zip(sub.pivots())
            .map(|(row, &p)| {
                let unit = row.iter().enumerate().all(|(c, x)| if c == p { x.is_one() } else { x.is_zero() });
                if unit {
                    self.labels[p].clone()
                } else {
                    format!("{}'", self.labels[p])
                }
            })
            .collect();
        Algebra::from_flat(self.field, labels, table)
    }

    /// Block-diagonal direct sum. Labels are kept when disjoint, otherwise
    /// suffixed with `_1` / `_2`.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        let n1 = self.dim();
        let clash = self.labels.iter().any(|l| other.labels.contains(l));
        let labels: Vec<String> = if clash {
            self.labels
                .iter()
                .map(|l| format!("{l}_1"))
                .chain(other.labels.iter().map(|l| format!("{l}_2")))
                .collect()
        } else {
            self.labels.iter().chain(&other.labels).cloned().collect()
        };
        let field = self.field;
        Algebra::from_fn(field, labels, |i, j, k| {
            if i < n1 && j < n1 && k < n1 {
                self.constant(i, j, k).clone()
            } else if i >= n1 && j >= n1 && k >= n1 {
                other.constant(i - n1, j - n1, k - n1).clone()
            } else {
                field.zero()
            }
        })
    }

    /// Subspace spanned by a contiguous block of standard basis vectors.
    pub fn coordinate_block(&self, start: usize, len: usize) -> Subspace {
        let n = self.dim();
        Subspace::from_vectors(self.field, n, (start..start + len).map(|i| linalg::unit_vec(self.field, n, i)).collect())
    }

    /// Human-readable form such as `a + 2*b` or `-1/2*y0`.
    pub fn format_element(&self, coeffs: &[Scalar]) -> String {
        let mut out = String::new();
        for (c, label) in coeffs.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Projection `A → A/I` onto the standard complement of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    ideal: Subspace,
    complement: Vec<usize>,
}

impl QuotientMap {
    fn new(ideal: Subspace) -> Self {
        let complement = (0..ideal.ambient_dim()).filter(|c| !ideal.pivots().contains(c)).collect();
        QuotientMap { ideal, complement }
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Ambient basis indices that form the quotient basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub(crate) fn project_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.ideal.reduce(v);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    pub fn project(&self, v: &Element) -> Element {
        Element::from_vec(v.field(), self.project_vec(v.coeffs()))
    }

    /// The coset representative on the complement basis.
    pub(crate) fn lift_vec(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let field = self.ideal.field();
        let mut v = linalg::zero_vec(field, self.ideal.ambient_dim());
        for (&c, x) in self.complement.iter().zip(coords) {
            v[c] = x.clone();
        }
        v
    }

    /// Full preimage `π⁻¹(S)` of a subspace of the quotient.
    pub fn preimage(&self, sub: &Subspace) -> Subspace {
        let mut vectors: Vec<_> = sub.basis().iter().map(|r| self.lift_vec(r)).collect();
        vectors.extend(self.ideal.basis().iter().cloned());
        Subspace::from_vectors(self.ideal.field(), self.ideal.ambient_dim(), vectors)
    }
}
