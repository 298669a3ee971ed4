//! Exact field elements: arbitrary-precision rationals or residues modulo a
//! small prime.
//!
//! Every identity in this crate is checked by exact equality, so there is no
//! floating point anywhere below this module.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// The ground field every map of a structure lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals.
    Rational,
    /// Integers modulo a prime `p`.
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting composite moduli by trial division.
    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_i64(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_i64(self, 1)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The binary and unary operations exposed by [`Scalar::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// An exact element of [`Field::Rational`] or [`Field::Prime`].
///
/// Rationals are kept normalized (`BigRational` reduces on construction) and
/// residues always lie in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn from_i64(field: Field, value: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(value))),
            Field::Prime(p) => Scalar::Fp {
                residue: value.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `numer / denom` in `field`.
    pub fn ratio(field: Field, numer: i64, denom: i64) -> Result<Scalar, ScalarError> {
        Scalar::from_i64(field, numer).checked_div(&Scalar::from_i64(field, denom))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { residue, .. } => *residue == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        let (left, right) = (self.field(), other.field());
        if left == right {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch { left, right })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { residue: a, modulus }, Scalar::Fp { residue: b, .. }) => Scalar::Fp {
                residue: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { residue: a, modulus }, Scalar::Fp { residue: b, .. }) => Scalar::Fp {
                residue: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::Fp { residue, modulus } => Scalar::Fp {
                residue: (*modulus - residue) % *modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { residue, modulus } => Scalar::Fp {
                residue: pow_mod(*residue, *modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Applies `op`; unary operations ignore `other`.
    pub fn apply(&self, other: &Scalar, op: FieldOp) -> Result<Scalar, ScalarError> {
        match op {
            FieldOp::Add => self.checked_add(other),
            FieldOp::Sub => self.checked_sub(other),
            FieldOp::Mul => self.checked_mul(other),
            FieldOp::Div => self.checked_div(other),
            FieldOp::Neg => Ok(self.neg_ref()),
            FieldOp::Inv => self.inv(),
        }
    }

    /// Parses `"p"`, `"-p"` or `"p/q"` into `field`. Over `F_p` the value is
    /// reduced, so `"1/2"` is the inverse of two.
    pub fn parse(field: Field, text: &str) -> Result<Scalar, ScalarError> {
        let text = text.trim();
        let bad = || ScalarError::Parse(text.to_string());
        let (numer, denom) = match text.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(text).map_err(|_| bad())?, BigInt::one()),
        };
        if denom.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match field {
            Field::Rational => Ok(Scalar::Q(BigRational::new(numer, denom))),
            Field::Prime(p) => {
                let reduce = |v: &BigInt| {
                    let m = BigInt::from(p);
                    let r = ((v % &m) + &m) % &m;
                    Scalar::Fp {
                        residue: r.to_u64().expect("residue below modulus"),
                        modulus: p,
                    }
                };
                reduce(&numer).checked_div(&reduce(&denom))
            }
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp { residue, .. } => write!(f, "{residue}"),
        }
    }
}

// The operator impls below panic on a field mismatch. Matrix code checks
// field agreement once per map, so per-entry checks would only repeat it.

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            (lhs, rhs) => *lhs = &*lhs + rhs,
        }
    }
}
