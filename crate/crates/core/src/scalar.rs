//! Exact scalars: rationals with a machine-word fast path, and prime-field residues.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar '{0}'")]
    Parse(String),
}

/// The base field of an algebra. Every scalar carries its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// GF(p). Moduli are limited to 32 bits so residue products fit in u64.
    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Q(Rational::from_i64(v)),
            Field::Prime(p) => Scalar::Fp(Residue::new(v.rem_euclid(p as i64) as u64, p)),
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, ScalarError> {
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        Ok(&n * &d.inv()?)
    }

    /// Parses "a", "a/b" (rationals) or "r" (residues, reduced mod p).
    pub fn parse(&self, s: &str) -> Result<Scalar, ScalarError> {
        let t = s.trim();
        let bad = || ScalarError::Parse(s.to_string());
        let (n, d) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (t, None),
        };
        let num: BigInt = n.parse().map_err(|_| bad())?;
        let den: BigInt = match d {
            Some(b) => b.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match *self {
            Field::Rational => Ok(Scalar::Q(Rational::from_big(BigRational::new(num, den)))),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let a = num.mod_floor(&m).to_u64().unwrap();
                let b = den.mod_floor(&m).to_u64().unwrap();
                let r = Residue::new(a, p);
                let q = Residue::new(b, p).inv().ok_or(ScalarError::DivisionByZero)?;
                Ok(Scalar::Fp(r.mul(q)))
            }
        }
    }
}

/// Canonical rational. Values whose numerator and denominator fit in an i64 are
/// always stored in the small form, so derived equality and hashing are exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_i64(v: i64) -> Self {
        Rational(Repr::Small(v, 1))
    }

    pub fn new(num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(n.into(), d.into())))),
        }
    }

    pub fn from_big(r: BigRational) -> Self {
        // BigRational::new already reduced; only demotion is left.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw((*n).into(), (*d).into()),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => (*n).into(),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => (*d).into(),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn add(&self, o: &Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_add(*c) {
                Some(s) => Rational(Repr::Small(s, 1)),
                None => Self::from_i128(*a as i128 + *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * d + c * b, b * d)
            }
            _ => Self::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn neg(&self) -> Rational {
        match &self.0 {
            Repr::Small(a, b) => match a.checked_neg() {
                Some(n) => Rational(Repr::Small(n, *b)),
                None => Self::from_i128(-(*a as i128), *b as i128),
            },
            Repr::Big(x) => Self::from_big(-(**x).clone()),
        }
    }

    pub fn sub(&self, o: &Rational) -> Rational {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_mul(*c) {
                Some(s) => Rational(Repr::Small(s, 1)),
                None => Self::from_i128(*a as i128 * *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * c, b * d)
            }
            _ => Self::from_big(self.to_big() * o.to_big()),
        }
    }

    pub fn inv(&self) -> Result<Rational, ScalarError> {
        match &self.0 {
            Repr::Small(0, _) => Err(ScalarError::DivisionByZero),
            Repr::Small(a, b) => Ok(Self::from_i128(*b as i128, *a as i128)),
            Repr::Big(x) => Ok(Self::from_big(x.recip())),
        }
    }

    fn cmp_value(&self, o: &Rational) -> Ordering {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&o.to_big()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(a, _) => *a < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

/// Residue modulo a prime p < 2^32, kept in [0, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Self {
        Residue { value: value % modulus, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn add(self, o: Residue) -> Residue {
        Residue::new(self.value + o.value, self.modulus)
    }

    fn neg(self) -> Residue {
        Residue::new(self.modulus - self.value, self.modulus)
    }

    fn mul(self, o: Residue) -> Residue {
        Residue::new(self.value * o.value, self.modulus)
    }

    fn inv(self) -> Option<Residue> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        let p = self.modulus;
        let mut e = p - 2;
        let mut base = self;
        let mut acc = Residue::new(1, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        Some(acc)
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Q(Rational),
    Fp(Residue),
}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Q(r) => r.hash(state),
            Scalar::Fp(r) => r.hash(state),
        }
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp(r) => Field::Prime(r.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp(r) => r.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp(r) => r.value == 1,
        }
    }

    fn check(&self, o: &Scalar) -> Result<(), ScalarError> {
        let (a, b) = (self.field(), o.field());
        if a == b {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(a, b))
        }
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(o)?;
        Ok(match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.add(*b)),
            _ => unreachable!(),
        })
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(o)?;
        Ok(match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.mul(*b)),
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Q(a) => Ok(Scalar::Q(a.inv()?)),
            Scalar::Fp(a) => a.inv().map(Scalar::Fp).ok_or(ScalarError::DivisionByZero),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp(a) => Scalar::Fp(a.neg()),
        }
    }
}

pub fn scalar_add(a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
    a.try_add(b)
}

pub fn scalar_mul(a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
    a.try_mul(b)
}

pub fn scalar_inv(a: &Scalar) -> Result<Scalar, ScalarError> {
    a.inv()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp(r) => write!(f, "{}", r.value),
        }
    }
}

// Operator impls panic on mixed fields; algebras enforce a single field at
// construction so this only fires on programming errors.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.try_add(o).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.try_add(&o.neg()).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.try_mul(o).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Field::Rational.parse(s).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q("1/2") + &q("1/3"), q("5/6"));
        assert_eq!((&q("1/2") + &q("-1/2")).to_string(), "0");
    }

    #[test]
    fn prime_inverse() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_i64(2).inv().unwrap(), f.from_i64(3));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(3));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(Field::prime(9), Err(ScalarError::NotPrime(9)));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(q("0").inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(Field::prime(7).unwrap().zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_error() {
        let a = q("1");
        let b = Field::prime(3).unwrap().one();
        assert!(matches!(scalar_add(&a, &b), Err(ScalarError::FieldMismatch(..))));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Scalar::Q(Rational::from_i64(i64::MAX));
        let two = q("2");
        let prod = &big * &two;
        assert_eq!(prod.to_string(), "18446744073709551614");
        let back = &prod * &q("1/2");
        assert_eq!(back, big);
        match back {
            Scalar::Q(Rational(Repr::Small(..))) => {}
            other => panic!("not demoted: {other:?}"),
        }
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(q("4/-6").to_string(), "-2/3");
        assert_eq!(q("0/5").to_string(), "0");
        assert_eq!(q("0"), q("0/7"));
    }
}
