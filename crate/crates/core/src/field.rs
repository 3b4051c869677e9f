//! Coefficient fields: the rationals with arbitrary-precision arithmetic, and
//! prime fields with machine-word residues. No floating point anywhere.

use crate::error::{EngineError, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(EngineError::NonPrimeModulus(p));
        }
        Ok(FieldDescriptor::PrimeField(p))
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldDescriptor::Rationals => Coeff::Rat(BigRational::zero()),
            FieldDescriptor::PrimeField(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            FieldDescriptor::Rationals => Coeff::Rat(BigRational::one()),
            FieldDescriptor::PrimeField(_) => Coeff::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            FieldDescriptor::Rationals => Coeff::Rat(BigRational::from(BigInt::from(n))),
            FieldDescriptor::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Coeff::Fp(r)
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Coeff> {
        if den == 0 {
            return Err(EngineError::DivisionByZero);
        }
        match self {
            FieldDescriptor::Rationals => Ok(Coeff::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldDescriptor::PrimeField(_) => {
                let d = self.from_i64(den);
                if d.is_zero() {
                    return Err(EngineError::DivisionByZero);
                }
                Ok(self.mul(&self.from_i64(num), &self.inv(&d)?))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldDescriptor::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (FieldDescriptor::PrimeField(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp((x + y) % p)
            }
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldDescriptor::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            (FieldDescriptor::PrimeField(p), Coeff::Fp(x)) => Coeff::Fp((p - x) % p),
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldDescriptor::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (FieldDescriptor::PrimeField(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(x.wrapping_mul(*y) % p)
            }
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(EngineError::DivisionByZero);
        }
        match (self, a) {
            (FieldDescriptor::Rationals, Coeff::Rat(x)) => Ok(Coeff::Rat(x.recip())),
            (FieldDescriptor::PrimeField(p), Coeff::Fp(x)) => {
                // Fermat: x^(p-2) mod p
                let mut base = *x % p;
                let mut e = p - 2;
                let mut acc = 1u64;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc.wrapping_mul(base) % p;
                    }
                    base = base.wrapping_mul(base) % p;
                    e >>= 1;
                }
                Ok(Coeff::Fp(acc))
            }
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// A field element. The variant must match the owning field descriptor.
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
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Fp(x) => write!(f, "{}", x),
        }
    }
}

/// Sign helper for rendering: true when the coefficient renders with a leading minus.
pub fn renders_negative(c: &Coeff) -> bool {
    match c {
        Coeff::Rat(x) => x.is_negative(),
        Coeff::Fp(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_gate() {
        assert!(FieldDescriptor::prime_field(7).is_ok());
        assert!(FieldDescriptor::prime_field(2).is_ok());
        assert_eq!(
            FieldDescriptor::prime_field(6),
            Err(EngineError::NonPrimeModulus(6))
        );
        assert_eq!(
            FieldDescriptor::prime_field(1),
            Err(EngineError::NonPrimeModulus(1))
        );
    }

    #[test]
    fn fp_inverse() {
        let f = FieldDescriptor::prime_field(7).unwrap();
        for x in 1..7 {
            let c = Coeff::Fp(x);
            assert!(f.mul(&c, &f.inv(&c).unwrap()).is_one());
        }
    }

    #[test]
    fn rational_lowest_terms() {
        let f = FieldDescriptor::Rationals;
        let half = f.from_ratio(2, 4).unwrap();
        assert_eq!(half, f.from_ratio(1, 2).unwrap());
    }
}
