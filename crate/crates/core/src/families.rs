//! Named algebra families and the verification corpus.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalars::{binomial_in_field, FieldSpec, Scalar};

pub const DEFAULT_APN_DIM_CAP: u64 = 27;

/// The two-dimensional algebra with `ab = b` and `a² = b² = ba = 0`.
pub fn example1(field: FieldSpec) -> Algebra {
    Algebra::from_fn(field, vec!["a".into(), "b".into()], |i, j, k| {
        if (i, j, k) == (0, 1, 1) {
            field.one()
        } else {
            field.zero()
        }
    })
    .expect("valid table")
}

/// Parameters of the simple algebra `A_{p^n}(a, b)` over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApnParams {
    pub p: u64,
    pub n: u32,
    pub a: Scalar,
    pub b: Scalar,
}

impl ApnParams {
    /// `a` and `b` are taken modulo `p`.
    pub fn new(p: u64, n: u32, a: i64, b: i64) -> Result<Self> {
        Self::with_cap(p, n, a, b, DEFAULT_APN_DIM_CAP)
    }

    pub fn with_cap(p: u64, n: u32, a: i64, b: i64, dim_cap: u64) -> Result<Self> {
        let field = FieldSpec::prime(p).map_err(|e| Error::InvalidParams(e.to_string()))?;
        if n == 0 {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        match p.checked_pow(n) {
            Some(d) if d <= dim_cap => {}
            _ => return Err(Error::InvalidParams(format!("{p}^{n} exceeds the dimension cap {dim_cap}"))),
        }
        Ok(ApnParams { p, n, a: field.from_i64(a), b: field.from_i64(b) })
    }

    pub fn field(&self) -> FieldSpec {
        self.a.field()
    }

    pub fn dim(&self) -> usize {
        self.p.pow(self.n) as usize
    }
}

/// Label of `y_i`: `y(-1)`, `y0`, `y1`, ...
pub fn apn_label(i: i64) -> String {
    if i < 0 {
        format!("y({i})")
    } else {
        format!("y{i}")
    }
}

/// `A_{p^n}(a,b)` on the basis `y_{-1}, y_0, ..., y_{p^n-2}` (basis index
/// `i + 1` for `y_i`):
///
/// - `y_{-1} y_{-1} = a y_top`
/// - `y_{-1} y_0 = y_{-1} + b y_top`
/// - `y_i y_j = C(i+j+1, j) y_{i+j}` for every other pair, with `C` zero
///   for a negative lower index and `y_k = 0` beyond `top = p^n − 2`.
pub fn apn(params: &ApnParams) -> Result<Algebra> {
    let field = params.field();
    if params.b.field() != field {
        return Err(Error::InvalidParams("a and b must lie in the same field".into()));
    }
    let dim = params.dim();
    let top = dim as i64 - 2;
    let labels = (-1..=top).map(apn_label).collect();
    Algebra::from_fn(field, labels, |ci, cj, ck| {
        let (i, j, k) = (ci as i64 - 1, cj as i64 - 1, ck as i64 - 1);
        match (i, j) {
            (-1, -1) => {
                if k == top {
                    params.a.clone()
                } else {
                    field.zero()
                }
            }
            (-1, 0) => {
                let mut c = field.zero();
                if k == -1 {
                    c = &c + &field.one();
                }
                if k == top {
                    c = &c + &params.b;
                }
                c
            }
            // k only ranges over -1..=top, so y_{i+j} beyond top drops out
            _ if k == i + j => binomial_in_field(i + j + 1, j, field),
            _ => field.zero(),
        }
    })
}

/// The `n`-dimensional algebra with zero multiplication.
pub fn zero_algebra(field: FieldSpec, n: usize) -> Algebra {
    Algebra::from_fn(field, Algebra::default_labels(n), |_, _, _| field.zero()).expect("valid table")
}

/// The one-dimensional algebra `F x` with `x² = βx`.
pub fn one_dim(field: FieldSpec, beta: Scalar) -> Result<Algebra> {
    if beta.field() != field {
        return Err(Error::FieldMismatch { left: field, right: beta.field() });
    }
    Algebra::from_fn(field, vec!["x".into()], |_, _, _| beta.clone())
}

/// Every structure tensor of the given dimension over a finite field that
/// satisfies the Novikov identities, in odometer order of the flattened
/// table (last constant fastest). Dimension above 2 is refused unless
/// `allow_long` is set.
pub fn enumerate_novikov(field: FieldSpec, dim: usize, allow_long: bool) -> Result<NovikovTables> {
    let q = field.modulus().ok_or(Error::RationalsNotEnumerable)?;
    if dim > 2 && !allow_long {
        return Err(Error::CapExceeded { dim, cap: 2 });
    }
    Ok(NovikovTables { field, dim, q, counter: vec![0; dim * dim * dim], done: false })
}

pub struct NovikovTables {
    field: FieldSpec,
    dim: usize,
    q: u64,
    counter: Vec<u64>,
    done: bool,
}

impl NovikovTables {
    fn advance(&mut self) {
        let mut i = self.counter.len();
        loop {
            if i == 0 {
                self.done = true;
                return;
            }
            i -= 1;
            self.counter[i] += 1;
            if self.counter[i] < self.q {
                return;
            }
            self.counter[i] = 0;
        }
    }
}

impl Iterator for NovikovTables {
    type Item = Algebra;

    fn next(&mut self) -> Option<Algebra> {
        while !self.done {
            let table = self.counter.iter().map(|&c| self.field.residue(c)).collect();
            self.advance();
            let alg = Algebra::from_flat(self.field, Algebra::default_labels(self.dim), table).expect("valid table");
            if alg.check_novikov().holds {
                return Some(alg);
            }
        }
        None
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub algebra: Algebra,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, algebra: Algebra) -> Self {
        CorpusEntry { name: name.into(), algebra }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    /// All two-dimensional Novikov algebras over F_3.
    F3Dim2,
    /// The named example families.
    Builtin,
    /// Both of the above.
    All,
}

impl CorpusKind {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "f3-dim2" => Some(CorpusKind::F3Dim2),
            "builtin" => Some(CorpusKind::Builtin),
            "all" => Some(CorpusKind::All),
            _ => None,
        }
    }
}

fn f(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("odd prime")
}

fn builtin() -> Vec<CorpusEntry> {
    let q = FieldSpec::RATIONALS;
    let mut out = vec![
        CorpusEntry::new("example1/F_3", example1(f(3))),
        CorpusEntry::new("example1/F_5", example1(f(5))),
        CorpusEntry::new("example1/Q", example1(q)),
    ];
    for a in 0..3 {
        for b in 0..3 {
            let params = ApnParams::new(3, 1, a, b).expect("valid");
            out.push(CorpusEntry::new(format!("apn(3,1,{a},{b})"), apn(&params).expect("valid")));
        }
    }
    out.push(CorpusEntry::new("apn(5,1,0,0)", apn(&ApnParams::new(5, 1, 0, 0).expect("valid")).expect("valid")));
    let a3 = apn(&ApnParams::new(3, 1, 0, 0).expect("valid")).expect("valid");
    out.push(CorpusEntry::new("example1+apn(3,1,0,0)/F_3", example1(f(3)).direct_sum(&a3).expect("same field")));
    out.push(CorpusEntry::new("example1+example1/F_3", example1(f(3)).direct_sum(&example1(f(3))).expect("same field")));
    for n in 1..=3 {
        out.push(CorpusEntry::new(format!("zero({n})/F_3"), zero_algebra(f(3), n)));
    }
    out.push(CorpusEntry::new("zero(2)/Q", zero_algebra(q, 2)));
    for field in [f(3), q] {
        for beta in [0, 1] {
            out.push(CorpusEntry::new(format!("one_dim({beta})/{field}"), one_dim(field, field.from_i64(beta)).expect("valid")));
        }
    }
    out
}

/// The standard verification corpus. Deterministic.
pub fn corpus(kind: CorpusKind) -> Vec<CorpusEntry> {
    let dim2 = || {
        enumerate_novikov(f(3), 2, false)
            .expect("dimension 2")
            .enumerate()
            .map(|(i, a)| CorpusEntry::new(format!("f3-dim2/{i}"), a))
            .collect::<Vec<_>>()
    };
    match kind {
        CorpusKind::F3Dim2 => dim2(),
        CorpusKind::Builtin => builtin(),
        CorpusKind::All => {
            let mut all = builtin();
            all.extend(dim2());
            all
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;
    use crate::subspaces::nucleus;

    fn basis_product(a: &Algebra, i: usize, j: usize) -> Element {
        a.multiply(&a.basis_element(i), &a.basis_element(j)).unwrap()
    }

    #[test]
    fn example1_table() {
        let e = example1(FieldSpec::RATIONALS);
        assert_eq!(basis_product(&e, 0, 1), e.basis_element(1));
        assert!(basis_product(&e, 1, 0).is_zero());
        assert!(example1(f(5)).check_novikov().holds);
    }

    #[test]
    fn apn_3_1_table() {
        let a = apn(&ApnParams::new(3, 1, 0, 0).unwrap()).unwrap();
        let fld = a.field();
        let y = |i: i64| a.basis_element((i + 1) as usize);
        let expect = |i: i64, j: i64, v: Element| assert_eq!(basis_product(&a, (i + 1) as usize, (j + 1) as usize), v, "y{i}·y{j}");
        expect(-1, 0, y(-1));
        expect(-1, 1, y(0));
        expect(0, 0, y(0));
        expect(0, 1, y(1).scale(&fld.from_i64(2)));
        expect(1, 0, y(1));
        for (i, j) in [(-1, -1), (0, -1), (1, -1), (1, 1)] {
            expect(i, j, a.zero());
        }
        assert_eq!(a.labels(), &["y(-1)", "y0", "y1"]);
    }

    #[test]
    fn apn_special_products() {
        let a = apn(&ApnParams::new(3, 1, 2, 1).unwrap()).unwrap();
        let fld = a.field();
        assert_eq!(basis_product(&a, 0, 0), a.basis_element(2).scale(&fld.from_i64(2)));
        assert_eq!(basis_product(&a, 0, 1), a.basis_element(0).add(&a.basis_element(2)));
    }

    #[test]
    fn apn_families_are_novikov() {
        for p in [3, 5, 7] {
            for (a, b) in [(0, 0), (1, 2), (2, 1)] {
                let alg = apn(&ApnParams::new(p, 1, a, b).unwrap()).unwrap();
                assert_eq!(alg.dim(), p as usize);
                assert!(alg.check_novikov().holds, "p={p} a={a} b={b}");
            }
        }
        let a9 = apn(&ApnParams::new(3, 2, 0, 0).unwrap()).unwrap();
        assert_eq!(a9.dim(), 9);
        assert!(a9.check_novikov().holds);
    }

    #[test]
    fn apn_noncommutative_and_nonassociative() {
        let a = apn(&ApnParams::new(3, 1, 0, 0).unwrap()).unwrap();
        assert_ne!(basis_product(&a, 1, 2), basis_product(&a, 2, 1));
        for p in [3, 5] {
            let alg = apn(&ApnParams::new(p, 1, 0, 0).unwrap()).unwrap();
            assert!(nucleus(&alg).is_zero());
        }
    }

    #[test]
    fn apn_param_validation() {
        assert!(matches!(ApnParams::new(2, 1, 0, 0), Err(Error::InvalidParams(_))));
        assert!(matches!(ApnParams::new(9, 1, 0, 0), Err(Error::InvalidParams(_))));
        assert!(matches!(ApnParams::new(3, 0, 0, 0), Err(Error::InvalidParams(_))));
        assert!(matches!(ApnParams::new(3, 4, 0, 0), Err(Error::InvalidParams(_))));
        assert!(ApnParams::new(3, 3, 0, 0).is_ok());
    }

    #[test]
    fn small_families() {
        let z = zero_algebra(f(3), 2);
        assert!(z.is_zero_multiplication());
        let e = one_dim(FieldSpec::RATIONALS, FieldSpec::RATIONALS.one()).unwrap();
        assert_eq!(basis_product(&e, 0, 0), e.basis_element(0));
        assert!(one_dim(FieldSpec::RATIONALS, FieldSpec::RATIONALS.zero()).unwrap().is_zero_multiplication());
    }

    #[test]
    fn dim2_enumeration_golden_counts() {
        // frozen from an independent brute-force scan of all q^8 tables
        let f3_tables: Vec<_> = enumerate_novikov(f(3), 2, false).unwrap().collect();
        assert_eq!(f3_tables.len(), 177);
        assert_eq!(enumerate_novikov(FieldSpec::binary(), 2, false).unwrap().count(), 52);

        let mut e1 = example1(f(3));
        e1 = Algebra::from_fn(e1.field(), Algebra::default_labels(2), |i, j, k| e1.constant(i, j, k).clone()).unwrap();
        assert!(f3_tables.contains(&e1));
        assert!(f3_tables.contains(&zero_algebra(f(3), 2)));
        assert!(matches!(enumerate_novikov(f(3), 3, false), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate_novikov(FieldSpec::RATIONALS, 2, false), Err(Error::RationalsNotEnumerable)));
    }

    #[test]
    fn corpus_is_deterministic_and_novikov() {
        let c1 = corpus(CorpusKind::All);
        let c2 = corpus(CorpusKind::All);
        assert_eq!(c1.len(), c2.len());
        for (x, y) in c1.iter().zip(&c2) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.algebra, y.algebra);
        }
        for e in &c1 {
            assert!(e.algebra.check_novikov().holds, "{}", e.name);
            assert!(e.algebra.check_derived_identity().holds, "{}", e.name);
        }
        assert_eq!(corpus(CorpusKind::F3Dim2).len(), 177);
    }
}
