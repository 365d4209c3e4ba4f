//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.
//!
//! A [`FieldSpec`] describes the base field; a [`Scalar`] is one exact element
//! of it. Mixed-field arithmetic through the operator traits panics, since
//! every algebra validates its field at construction; the `try_*` methods are
//! the checked entry points.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which kind of field a [`FieldSpec`] names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// Descriptor of the base field: ℚ or F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    kind: FieldKind,
    modulus: u64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { kind: FieldKind::Rationals, modulus: 0 };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    /// F_p for an odd prime `p < 2^32`.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidField("characteristic 2 is not supported".into()));
        }
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(FieldSpec { kind: FieldKind::PrimeField, modulus: p })
    }

    /// F_2. Only for the table-enumeration corpus, where no check divides by 2;
    /// algebra constructions elsewhere assume odd characteristic.
    pub fn binary() -> Self {
        FieldSpec { kind: FieldKind::PrimeField, modulus: 2 }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// The prime `p` for F_p, `None` for ℚ.
    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Rationals => None,
            FieldKind::PrimeField => Some(self.modulus),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.kind == FieldKind::PrimeField
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.kind {
            FieldKind::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldKind::PrimeField => Scalar::Residue(Residue {
                modulus: self.modulus,
                value: v.rem_euclid(self.modulus as i64) as u64,
            }),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.kind {
            FieldKind::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldKind::PrimeField => {
                let m = BigInt::from(self.modulus);
                let r = v.mod_floor(&m).to_u64().expect("residue fits in u64");
                Scalar::Residue(Residue { modulus: self.modulus, value: r })
            }
        }
    }

    /// Maps a rational into the field; over F_p the denominator must be a unit.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self.kind {
            FieldKind::Rationals => Ok(Scalar::Rational(q.clone())),
            FieldKind::PrimeField => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                Ok(&num * &den.inv()?)
            }
        }
    }

    /// Residue `v mod p` without going through a signed conversion.
    pub fn residue(&self, v: u64) -> Scalar {
        debug_assert!(self.is_finite());
        Scalar::Residue(Residue { modulus: self.modulus, value: v % self.modulus })
    }

    /// Parses `"int"`, `"num/den"` (with optional sign) into the field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let s = text.trim();
        let bad = || Error::BadScalar(text.to_string());
        let parse_int = |t: &str| -> Result<BigInt> {
            let t = t.trim();
            let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        let q = match s.split_once('/') {
            Some((n, d)) => {
                let n = parse_int(n)?;
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(parse_int(s)?),
        };
        self.from_rational(&q).map_err(|_| bad())
    }

    /// All field elements in residue order. `None` over ℚ.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.modulus().map(|p| (0..p).map(|v| self.residue(v)).collect())
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        x.field() == *self
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::PrimeField => write!(f, "F_{}", self.modulus),
        }
    }
}

/// A residue class modulo a prime, stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    modulus: u64,
    value: u64,
}

impl Residue {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Residue(Residue),
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::RATIONALS,
            Scalar::Residue(r) => FieldSpec { kind: FieldKind::PrimeField, modulus: r.modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(r) => r.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue(r) => r.value == 1,
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.field(), right: other.field() })
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(self * other)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::InversionOfZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue(r) => Scalar::Residue(Residue {
                modulus: r.modulus,
                value: pow_mod(r.value, r.modulus - 2, r.modulus),
            }),
        })
    }

    /// Residue value over F_p.
    pub fn residue_value(&self) -> Option<u64> {
        match self {
            Scalar::Residue(r) => Some(r.value),
            Scalar::Rational(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue(r) => write!(f, "{}", r.value),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue(a), Scalar::Residue(b)) if a.modulus == b.modulus => {
                let s = a.value + b.value;
                Scalar::Residue(Residue {
                    modulus: a.modulus,
                    value: if s >= a.modulus { s - a.modulus } else { s },
                })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue(a), Scalar::Residue(b)) if a.modulus == b.modulus => {
                let value = if a.value >= b.value {
                    a.value - b.value
                } else {
                    a.value + a.modulus - b.value
                };
                Scalar::Residue(Residue { modulus: a.modulus, value })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue(a), Scalar::Residue(b)) if a.modulus == b.modulus => {
                Scalar::Residue(Residue { modulus: a.modulus, value: a.value * b.value % a.modulus })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue(a) => Scalar::Residue(Residue {
                modulus: a.modulus,
                value: if a.value == 0 { 0 } else { a.modulus - a.value },
            }),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Exact integer binomial coefficient `C(m, k)`; zero outside `0 <= k <= m`.
pub fn binomial_integer(m: i64, k: i64) -> BigInt {
    if k < 0 || m < 0 || k > m {
        return BigInt::zero();
    }
    let k = k.min(m - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

fn binomial_small(m: u64, k: u64) -> u64 {
    if k > m {
        return 0;
    }
    binomial_integer(m as i64, k as i64).to_u64().expect("digit binomial fits in u64")
}

/// `C(m, k)` reduced into the field, with `C(m, k) = 0` for `k < 0` or `k > m`.
///
/// Over F_p this multiplies the digit binomials of `m` and `k` in base `p`
/// (Lucas), so large `m` never builds a big integer.
pub fn binomial_in_field(m: i64, k: i64, field: FieldSpec) -> Scalar {
    if k < 0 || m < 0 || k > m {
        return field.zero();
    }
    match field.modulus() {
        None => field.from_bigint(&binomial_integer(m, k)),
        Some(p) => {
            let (mut m, mut k) = (m as u64, k as u64);
            let mut acc = 1u64;
            while m > 0 || k > 0 {
                let c = binomial_small(m % p, k % p) % p;
                if c == 0 {
                    return field.zero();
                }
                acc = acc * c % p;
                m /= p;
                k /= p;
            }
            field.residue(acc)
        }
    }
}
