//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! A [`Field`] value is a lightweight descriptor; the element type [`Coeff`]
//! is an enum so a single polynomial representation serves both fields. All
//! arithmetic is exact; no floating point anywhere in the crate.

use alloc::string::ToString;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a graded ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// Arbitrary-precision rationals.
    Rationals,
    /// The prime field `F_p`. The modulus is kept below `2^31` so products
    /// fit comfortably in `u64`.
    Prime(u32),
}

impl Field {
    /// Builds `F_p`, verifying primality by trial division.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NonprimeModulus(p));
        }
        Ok(Field::Prime(p as u32))
    }

    /// The canonical zero element.
    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::zero()),
            Field::Prime(_) => Coeff::Fp(0),
        }
    }

    /// The canonical one element.
    pub fn one(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::one()),
            Field::Prime(_) => Coeff::Fp(1),
        }
    }

    /// Embeds a signed integer.
    pub fn from_int(&self, n: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let p = *p as i64;
                Coeff::Fp(n.rem_euclid(p) as u64)
            }
        }
    }

    /// Embeds an arbitrary-precision integer.
    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let p_big = BigInt::from(*p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let digits = r.to_u64_digits().1;
                Coeff::Fp(digits.first().copied().unwrap_or(0))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % *p as u64),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x - y),
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                let p = *p as u64;
                Coeff::Fp((x + p - y) % p)
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Field::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(x * y % *p as u64),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            (Field::Prime(p), Coeff::Fp(x)) => {
                let p = *p as u64;
                Coeff::Fp((p - x) % p)
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, a) {
            (Field::Rationals, Coeff::Rat(x)) => Ok(Coeff::Rat(x.recip())),
            (Field::Prime(p), Coeff::Fp(x)) => Ok(Coeff::Fp(pow_mod(*x, *p as u64 - 2, *p as u64))),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    /// `a / b`; errors when `b` is zero.
    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An element of the coefficient field. Elements are only meaningful
/// together with the [`Field`] that produced them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Fp(u64),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_one(),
            Coeff::Fp(x) => *x == 1,
        }
    }

    /// Renders the coefficient; rationals print as `n` or `n/d`.
    pub fn to_display_string(&self) -> alloc::string::String {
        match self {
            Coeff::Rat(x) => {
                if x.is_integer() {
                    x.numer().to_string()
                } else {
                    x.to_string()
                }
            }
            Coeff::Fp(x) => x.to_string(),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        assert!(Field::prime(32003).is_ok());
        assert_eq!(Field::prime(32004), Err(Error::NonprimeModulus(32004)));
        assert_eq!(Field::prime(1), Err(Error::NonprimeModulus(1)));
    }

    #[test]
    fn fp_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_int(5);
        let b = f.from_int(4);
        assert_eq!(f.add(&a, &b), f.from_int(2));
        assert_eq!(f.mul(&a, &b), f.from_int(6));
        assert_eq!(f.sub(&b, &a), f.from_int(-1));
        let inv = f.inv(&a).unwrap();
        assert!(f.mul(&a, &inv).is_one());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Field::Rationals;
        let third = f.div(&f.from_int(1), &f.from_int(3)).unwrap();
        let sum = f.add(&f.add(&third, &third), &third);
        assert!(sum.is_one());
    }

    #[test]
    fn negative_ints_embed_canonically() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_int(-1), f.from_int(4));
        assert_eq!(f.from_bigint(&BigInt::from(-7)), f.from_int(3));
    }
}
