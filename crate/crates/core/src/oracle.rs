//! Degree-bounded linear-algebra oracle for ideal membership.
//!
//! Everything here deliberately avoids the Gröbner machinery: membership up to
//! a degree bound is a rank question about the Macaulay matrix, answered by
//! incremental Gaussian elimination over the exact coefficient field. The
//! oracle is the independent cross-check for the Buchberger pipeline — if the
//! two ever disagree below the bound, one of them is wrong.

use std::collections::BTreeMap;

use crate::error::{EngineError, Result};
use crate::field::{Coeff, FieldDescriptor};
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// All monomials in `nvars` variables of total degree at most `d`, in a fixed
/// (lex on exponent vectors) enumeration order.
pub fn monomials_upto(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(cur, i + 1, left - e, out);
            cur[i] = 0;
        }
    }
    rec(&mut cur, 0, d, &mut out);
    out
}

/// A row-echelon spanning set of coefficient vectors, built incrementally.
struct Echelon<'a> {
    field: &'a FieldDescriptor,
    /// rows normalized to leading coefficient 1, keyed by pivot column
    rows: BTreeMap<usize, Vec<Coeff>>,
    dim: usize,
}

impl<'a> Echelon<'a> {
    fn new(field: &'a FieldDescriptor, dim: usize) -> Self {
        Echelon {
            field,
            rows: BTreeMap::new(),
            dim,
        }
    }

    /// Reduce `v` against the current rows; returns the residue.
    fn reduce(&self, mut v: Vec<Coeff>) -> Result<Vec<Coeff>> {
        for (&piv, row) in &self.rows {
            if !v[piv].is_zero() {
                let c = v[piv].clone();
                for j in piv..self.dim {
                    v[j] = self.field.sub(&v[j], &self.field.mul(&c, &row[j]));
                }
            }
        }
        Ok(v)
    }

    /// Insert `v` into the span; returns false when it was already dependent.
    fn insert(&mut self, v: Vec<Coeff>) -> Result<bool> {
        let mut v = self.reduce(v)?;
        let piv = match v.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return Ok(false),
        };
        let inv = self.field.inv(&v[piv])?;
        for c in v.iter_mut() {
            *c = self.field.mul(c, &inv);
        }
        self.rows.insert(piv, v);
        Ok(true)
    }

    fn contains(&self, v: Vec<Coeff>) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|c| c.is_zero()))
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn basis(&self) -> Vec<Vec<Coeff>> {
        self.rows.values().cloned().collect()
    }
}

fn coeff_vector(
    p: &Polynomial,
    index: &BTreeMap<Monomial, usize>,
    field: &FieldDescriptor,
) -> Result<Vec<Coeff>> {
    let mut v = vec![field.zero(); index.len()];
    for (m, c) in &p.terms {
        let pos = index.get(m).ok_or_else(|| {
            EngineError::Internal("oracle degree bound exceeded by a term".into())
        })?;
        v[*pos] = c.clone();
    }
    Ok(v)
}

fn macaulay_span<'a>(
    gens: &[Polynomial],
    index: &BTreeMap<Monomial, usize>,
    field: &'a FieldDescriptor,
    nvars: usize,
    d: u32,
) -> Result<Echelon<'a>> {
    let mut ech = Echelon::new(field, index.len());
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let gdeg = g.degree().unwrap_or(0);
        if gdeg > d {
            continue;
        }
        for m in monomials_upto(nvars, d - gdeg) {
            let shifted = Polynomial::from_terms(
                &g.ring,
                g.terms
                    .iter()
                    .map(|(mm, c)| (mm.mul(&m), c.clone()))
                    .collect(),
            );
            ech.insert(coeff_vector(&shifted, index, field)?)?;
        }
    }
    Ok(ech)
}

fn monomial_index(nvars: usize, d: u32) -> BTreeMap<Monomial, usize> {
    monomials_upto(nvars, d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect()
}

/// Is f in the degree-at-most-d slice of the ideal generated by `gens`?
///
/// A true answer certifies membership outright; a false answer only certifies
/// non-membership with a representation of degree at most d.
pub fn macaulay_member(f: &Polynomial, gens: &[Polynomial], d: u32) -> Result<bool> {
    let ring = &f.ring;
    if !ring.relations.is_empty() {
        return Err(EngineError::Internal(
            "the Macaulay oracle works over polynomial rings only".into(),
        ));
    }
    if f.is_zero() {
        return Ok(true);
    }
    if f.degree().unwrap_or(0) > d {
        return Err(EngineError::Internal(
            "oracle query exceeds its degree bound".into(),
        ));
    }
    let nvars = ring.vars.len();
    let index = monomial_index(nvars, d);
    let ech = macaulay_span(gens, &index, &ring.field, nvars, d)?;
    ech.contains(coeff_vector(f, &index, &ring.field)?)
}

/// Convenience wrapper taking an `Ideal`.
pub fn macaulay_ideal_member(f: &Polynomial, ideal: &Ideal, d: u32) -> Result<bool> {
    macaulay_member(f, &ideal.gens, d)
}

/// A basis of the degree-at-most-d slice of I ∩ J, as coefficient vectors
/// turned back into polynomials.
pub fn macaulay_intersection(i: &Ideal, j: &Ideal, d: u32) -> Result<Vec<Polynomial>> {
    let ring = &i.ring;
    if !ring.relations.is_empty() {
        return Err(EngineError::Internal(
            "the Macaulay oracle works over polynomial rings only".into(),
        ));
    }
    let nvars = ring.vars.len();
    let index = monomial_index(nvars, d);
    let span_i = macaulay_span(&i.gens, &index, &ring.field, nvars, d)?;
    let span_j = macaulay_span(&j.gens, &index, &ring.field, nvars, d)?;
    // V ∩ W via dim(V ∩ W) = dim V + dim W − dim(V + W): reduce each basis
    // vector of V against an echelon of W joined with the part of V seen so
    // far; a dependent insertion exposes an intersection vector by reducing
    // against W alone.
    let mut out = Vec::new();
    let mut joint = Echelon::new(&ring.field, index.len());
    for row in span_j.basis() {
        joint.insert(row)?;
    }
    let mut partial = Echelon::new(&ring.field, index.len());
    for v in span_i.basis() {
        if joint.insert(v.clone())? {
            partial.insert(v)?;
            continue;
        }
        // v = (something in span seen so far) + (something in span_j);
        // subtract the first part to land in span_i ∩ span_j
        let residue = partial.reduce(v)?;
        if residue.iter().all(|c| c.is_zero()) {
            continue; // dependent within span_i itself
        }
        let rev: Vec<(Monomial, Coeff)> = index
            .iter()
            .filter(|(_, &pos)| !residue[pos].is_zero())
            .map(|(m, &pos)| (m.clone(), residue[pos].clone()))
            .collect();
        out.push(Polynomial::from_terms(ring, rev));
        partial.insert(residue)?;
    }
    Ok(out)
}

/// Dimension of the degree-at-most-d slice of the ideal, for rank cross-checks.
pub fn macaulay_rank(gens: &[Polynomial], ring_nvars: usize, field: &FieldDescriptor, d: u32) -> Result<usize> {
    if gens.is_empty() {
        return Ok(0);
    }
    let index = monomial_index(ring_nvars, d);
    Ok(macaulay_span(gens, &index, field, ring_nvars, d)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldDescriptor;
    use crate::groebner::{ideal_intersect, ideal_member};
    use crate::monomial::MonomialOrder;
    use crate::poly::{make_ring, parse_polynomial, Ring};

    fn qxy() -> Ring {
        make_ring(
            FieldDescriptor::Rationals,
            &["x", "y"],
            MonomialOrder::GrevLex,
            &[],
        )
        .unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_upto(2, 3).len(), 10);
        assert_eq!(monomials_upto(3, 2).len(), 10);
        assert_eq!(monomials_upto(1, 5).len(), 6);
    }

    #[test]
    fn linear_span_membership() {
        let r = qxy();
        let gens = [p(&r, "x+y"), p(&r, "x-y")];
        assert!(macaulay_member(&p(&r, "x"), &gens, 1).unwrap());
        assert!(macaulay_member(&p(&r, "y"), &gens, 1).unwrap());
        assert!(!macaulay_member(&p(&r, "1"), &gens, 3).unwrap());
    }

    #[test]
    fn unit_ideal_detected() {
        let r = qxy();
        let gens = [p(&r, "x*y-1"), p(&r, "x^2")];
        // 1 = -y^2*(x*y - 1) - ... has a degree-3 representation; bound 4 sees it
        assert!(macaulay_member(&p(&r, "1"), &gens, 4).unwrap());
    }

    #[test]
    fn agrees_with_groebner_on_colon_style_queries() {
        let r = qxy();
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        for (s, d) in [("x^3", 3u32), ("x*y^2", 3), ("y^2", 4), ("x", 4)] {
            let f = p(&r, s);
            assert_eq!(
                macaulay_ideal_member(&f, &i, d).unwrap(),
                ideal_member(&f, &i).unwrap(),
                "disagreement on {}",
                s
            );
        }
    }

    #[test]
    fn intersection_oracle_matches_engine() {
        let r = qxy();
        let i = Ideal::parse(&r, &["x"]).unwrap();
        let j = Ideal::parse(&r, &["y"]).unwrap();
        let basis = macaulay_intersection(&i, &j, 4).unwrap();
        assert!(!basis.is_empty());
        let engine = ideal_intersect(&i, &j).unwrap();
        for b in &basis {
            assert!(ideal_member(b, &engine).unwrap());
        }
        // and the engine's generator is seen by the oracle slice
        for g in &engine.gens {
            assert!(macaulay_member(g, &[p(&r, "x")], 4).unwrap());
            assert!(macaulay_member(g, &[p(&r, "y")], 4).unwrap());
        }
    }

    #[test]
    fn prime_field_membership() {
        let r = make_ring(
            FieldDescriptor::prime_field(7).unwrap(),
            &["x", "y"],
            MonomialOrder::GrevLex,
            &[],
        )
        .unwrap();
        let gens = [p(&r, "x^2+y"), p(&r, "y^2")];
        assert!(macaulay_member(&p(&r, "y^2"), &gens, 2).unwrap());
        assert!(macaulay_member(&p(&r, "x^4"), &gens, 4).unwrap());
        assert!(!macaulay_member(&p(&r, "x"), &gens, 5).unwrap());
    }
}
