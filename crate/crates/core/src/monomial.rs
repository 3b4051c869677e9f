//! Monomials and monomial orders.

use crate::error::{EngineError, Result};
use std::cmp::Ordering;

/// Exponent vector; length always equals the variable count of the owning ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise quotient; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Block order: the first `block` variables are compared by grevlex first,
    /// then the remaining variables by grevlex. Used for elimination.
    Elimination { block: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // rightmost nonzero entry of a - b negative => a > b
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
        if m1.0.len() != m2.0.len() {
            return Err(EngineError::MonomialLength(m1.0.len(), m2.0.len()));
        }
        Ok(self.cmp_unchecked(m1, m2))
    }

    pub fn cmp_unchecked(&self, m1: &Monomial, m2: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(&m1.0, &m2.0),
            MonomialOrder::Lex => lex(&m1.0, &m2.0),
            MonomialOrder::Elimination { block } => {
                let k = (*block).min(m1.0.len());
                match grevlex(&m1.0[..k], &m2.0[..k]) {
                    Ordering::Equal => grevlex(&m1.0[k..], &m2.0[k..]),
                    o => o,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_same_degree() {
        // x^2 > x*y in grevlex
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        // on (x, y): y^3 < x
        let o = MonomialOrder::Lex;
        assert_eq!(o.compare(&m(&[0, 3]), &m(&[1, 0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn reflexive() {
        for o in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Elimination { block: 1 }] {
            assert_eq!(o.compare(&m(&[1, 2]), &m(&[1, 2])).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn length_mismatch_rejected() {
        let o = MonomialOrder::GrevLex;
        assert!(o.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn elimination_block_dominates() {
        // block = 1 on (t, x): any positive power of t beats any x power
        let o = MonomialOrder::Elimination { block: 1 };
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 5])).unwrap(), Ordering::Greater);
    }
}
