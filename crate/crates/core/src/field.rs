//! Exact coefficient arithmetic over GF(2) and the rationals.
//!
//! Both fields sit behind one value type, [`Coeff`], so every higher layer is
//! written once. Combining elements of different fields is reported as
//! [`Error::FieldMismatch`] by the checked operations; the operator impls on
//! references panic instead, and are only used after the ring of the
//! surrounding polynomials has been checked.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient field tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Gf2,
    Rational,
}

impl Field {
    pub fn zero(self) -> Coeff {
        match self {
            Field::Gf2 => Coeff::Gf2(false),
            Field::Rational => Coeff::Q(BigRational::zero()),
        }
    }

    pub fn one(self) -> Coeff {
        match self {
            Field::Gf2 => Coeff::Gf2(true),
            Field::Rational => Coeff::Q(BigRational::one()),
        }
    }

    /// Image of an integer in this field.
    pub fn from_int(self, n: impl Into<BigInt>) -> Coeff {
        self.from_ratio(n.into(), BigInt::one())
            .expect("denominator is one")
    }

    /// Image of `num/den`. Over GF(2) an even denominator has no image.
    pub fn from_ratio(self, num: BigInt, den: BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Gf2 => {
                let two = BigInt::from(2);
                if (&den % &two).is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Coeff::Gf2(!(num % two).is_zero()))
            }
            Field::Rational => Ok(Coeff::Q(BigRational::new(num, den))),
        }
    }

    /// Keyword used in system files.
    pub fn tag(self) -> &'static str {
        match self {
            Field::Gf2 => "gf2",
            Field::Rational => "q",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gf2" => Ok(Field::Gf2),
            "q" => Ok(Field::Rational),
            other => Err(Error::InvalidRing(format!("unknown field tag `{other}`"))),
        }
    }
}

/// An element of GF(2) or Q.
///
/// Rationals are kept in lowest terms with a positive denominator, so equal
/// values compare and hash identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Gf2(bool),
    Q(BigRational),
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Gf2(_) => Field::Gf2,
            Coeff::Q(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Gf2(b) => !*b,
            Coeff::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Gf2(b) => *b,
            Coeff::Q(q) => q.is_one(),
        }
    }

    /// True for rationals below zero; never true over GF(2).
    pub fn is_negative(&self) -> bool {
        matches!(self, Coeff::Q(q) if q.is_negative())
    }

    fn mismatch(&self, other: &Coeff) -> Error {
        Error::FieldMismatch {
            left: self.field(),
            right: other.field(),
        }
    }

    pub fn checked_add(&self, other: &Coeff) -> Result<Coeff> {
        match (self, other) {
            (Coeff::Gf2(a), Coeff::Gf2(b)) => Ok(Coeff::Gf2(a ^ b)),
            (Coeff::Q(a), Coeff::Q(b)) => Ok(Coeff::Q(a + b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Coeff) -> Result<Coeff> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Coeff) -> Result<Coeff> {
        match (self, other) {
            (Coeff::Gf2(a), Coeff::Gf2(b)) => Ok(Coeff::Gf2(a & b)),
            (Coeff::Q(a), Coeff::Q(b)) => Ok(Coeff::Q(a * b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_div(&self, other: &Coeff) -> Result<Coeff> {
        self.checked_mul(&other.inv()?)
    }

    pub fn neg_ref(&self) -> Coeff {
        match self {
            Coeff::Gf2(b) => Coeff::Gf2(*b),
            Coeff::Q(q) => Coeff::Q(-q),
        }
    }

    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Coeff::Gf2(_) => Coeff::Gf2(true),
            Coeff::Q(q) => Coeff::Q(q.recip()),
        })
    }

    /// Absolute value; the identity over GF(2).
    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Gf2(b) => Coeff::Gf2(*b),
            Coeff::Q(q) => Coeff::Q(q.abs()),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Gf2(b) => write!(f, "{}", u8::from(*b)),
            Coeff::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Coeff::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        self.checked_add(rhs).expect("coefficient field mismatch")
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self.checked_sub(rhs).expect("coefficient field mismatch")
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        self.checked_mul(rhs).expect("coefficient field mismatch")
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.neg_ref()
    }
}
