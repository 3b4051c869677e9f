//! The Zariski layer: primes as certificates, closed and specialization-closed
//! sets, supports, the stalk-injective criterion, and sp-filtrations.
//!
//! Supports are represented by annihilator ideals up to radical; the engine
//! never enumerates Spec(R). Localization questions are answered on supports:
//! p lies in Supp M exactly when Ann M is contained in p.

use num::{BigInt, BigRational, Signed, Zero};

use crate::complex::{cohomology, Complex};
use crate::error::{EngineError, Result};
use crate::field::{Coeff, FieldDescriptor};
use crate::groebner::{groebner_basis, ideal_member, radical_member, Ideal};
use crate::module::PresentedModule;
use crate::poly::{check_rings, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Asserted,
    Verified(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdeal {
    pub ideal: Ideal,
    pub verified: Verification,
}

impl PrimeIdeal {
    /// Accept a user-asserted prime after attempting machine verification.
    pub fn assert(ideal: Ideal) -> Result<PrimeIdeal> {
        if groebner_basis(&ideal)?.contains_one() {
            return Err(EngineError::UnitIdeal);
        }
        let verified = match verify_prime(&ideal)? {
            Some(method) => Verification::Verified(method),
            None => Verification::Asserted,
        };
        Ok(PrimeIdeal { ideal, verified })
    }
}

fn is_scalar_times_variable(p: &Polynomial) -> Option<usize> {
    if p.terms.len() != 1 {
        return None;
    }
    let (m, _) = &p.terms[0];
    let mut var = None;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 1 && var.is_none() {
            var = Some(i);
        } else if e != 0 {
            return None;
        }
    }
    var
}

fn rational_of(c: &Coeff) -> Option<BigRational> {
    match c {
        Coeff::Rat(r) => Some(r.clone()),
        Coeff::Fp(_) => None,
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // small-number trial division; bail out on large inputs
    let n = n.abs();
    if n.is_zero() || n > BigInt::from(1_000_000u64) {
        return Vec::new();
    }
    let nn: u64 = n.to_string().parse().unwrap();
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= nn {
        if nn % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(nn / d));
        }
        d += 1;
    }
    out
}

/// Univariate coefficient extraction: f as coefficients c_0..c_d in its single
/// variable, or None if f involves more than one variable.
fn univariate_coeffs(p: &Polynomial) -> Option<(usize, Vec<Coeff>)> {
    let mut var = None;
    for (m, _) in &p.terms {
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                match var {
                    None => var = Some(i),
                    Some(v) if v == i => {}
                    _ => return None,
                }
            }
        }
    }
    let v = var?;
    let deg = p.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(0) as usize;
    let field = &p.ring.field;
    let mut coeffs = vec![field.zero(); deg + 1];
    for (m, c) in &p.terms {
        coeffs[m.0[v] as usize] = c.clone();
    }
    Some((v, coeffs))
}

fn eval_univariate(coeffs: &[Coeff], x: &Coeff, field: &FieldDescriptor) -> Coeff {
    let mut acc = field.zero();
    for c in coeffs.iter().rev() {
        acc = field.add(&field.mul(&acc, x), c);
    }
    acc
}

fn has_root(coeffs: &[Coeff], field: &FieldDescriptor) -> Option<bool> {
    match field {
        FieldDescriptor::PrimeField(p) => {
            if *p > 10_000 {
                return None;
            }
            for a in 0..*p {
                let x = Coeff::Fp(a);
                if eval_univariate(coeffs, &x, field).is_zero() {
                    return Some(true);
                }
            }
            Some(false)
        }
        FieldDescriptor::Rationals => {
            // rational root theorem on the cleared-denominator polynomial
            let rats: Vec<BigRational> = coeffs.iter().map(|c| rational_of(c).unwrap()).collect();
            let mut lcm = BigInt::from(1);
            for r in &rats {
                let d = r.denom();
                let g = num::integer::gcd(lcm.clone(), d.clone());
                lcm = lcm * d / g;
            }
            let ints: Vec<BigInt> = rats
                .iter()
                .map(|r| (r * BigRational::from(lcm.clone())).to_integer())
                .collect();
            let a0 = &ints[0];
            let an = ints.last().unwrap();
            if a0.is_zero() {
                return Some(true); // root at 0
            }
            let num_divs = divisors(a0);
            let den_divs = divisors(an);
            if num_divs.is_empty() || den_divs.is_empty() {
                return None; // coefficients too large for trial division
            }
            for p in &num_divs {
                for q in &den_divs {
                    for sign in [1i64, -1] {
                        let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                        let x = Coeff::Rat(cand);
                        if eval_univariate(coeffs, &x, field).is_zero() {
                            return Some(true);
                        }
                    }
                }
            }
            Some(false)
        }
    }
}

/// Try to certify primality. Returns the method name on success, None when no
/// supported sufficient condition applies (the caller may still assert).
pub fn verify_prime(ideal: &Ideal) -> Result<Option<String>> {
    let ring = &ideal.ring;
    if !ring.relations.is_empty() {
        return Ok(None);
    }
    let gens: Vec<&Polynomial> = ideal.gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        // the zero ideal in a polynomial ring over a field
        return Ok(Some("zero ideal in a domain".into()));
    }
    if gens.iter().all(|g| is_scalar_times_variable(g).is_some()) {
        return Ok(Some("variable subset".into()));
    }
    if gens.len() == 1 {
        if let Some((_, coeffs)) = univariate_coeffs(gens[0]) {
            let deg = coeffs.len() - 1;
            if deg == 1 {
                return Ok(Some("linear univariate".into()));
            }
            if deg == 2 || deg == 3 {
                // for degree <= 3, irreducible over the field iff no root
                match has_root(&coeffs, &ring.field) {
                    Some(false) => {
                        return Ok(Some("irreducible univariate (no roots, degree <= 3)".into()))
                    }
                    Some(true) => return Ok(None),
                    None => return Ok(None),
                }
            }
        }
    }
    Ok(None)
}

/// V(defining); equality and containment are up to radical.
#[derive(Debug, Clone)]
pub struct ClosedSet {
    pub defining: Ideal,
}

impl ClosedSet {
    pub fn new(defining: Ideal) -> ClosedSet {
        ClosedSet { defining }
    }

    pub fn whole(ring: &Ring) -> ClosedSet {
        ClosedSet::new(Ideal::zero(ring))
    }

    pub fn empty(ring: &Ring) -> ClosedSet {
        ClosedSet::new(Ideal::unit(ring))
    }

    pub fn is_empty_set(&self) -> Result<bool> {
        Ok(groebner_basis(&self.defining)?.contains_one())
    }

    /// V(self) contains V(other), i.e. defining ⊆ sqrt(other.defining).
    pub fn contains(&self, other: &ClosedSet) -> Result<bool> {
        for g in &self.defining.gens {
            if !radical_member(g, &other.defining)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn set_eq(&self, other: &ClosedSet) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }
}

/// A finite union of closed sets, kept normalized: no component inside
/// another, empty components dropped.
#[derive(Debug, Clone)]
pub struct SpcSet {
    pub ring: Ring,
    pub components: Vec<ClosedSet>,
}

impl SpcSet {
    pub fn new(ring: &Ring, components: Vec<ClosedSet>) -> Result<SpcSet> {
        for c in &components {
            check_rings(ring, &c.defining.ring)?;
        }
        let mut comps: Vec<ClosedSet> = Vec::new();
        for c in components {
            if !c.is_empty_set()? {
                comps.push(c);
            }
        }
        // drop any component contained in another; among equal sets keep the first
        let mut keep = vec![true; comps.len()];
        for i in 0..comps.len() {
            if !keep[i] {
                continue;
            }
            for j in 0..comps.len() {
                if i == j || !keep[j] {
                    continue;
                }
                if comps[j].contains(&comps[i])? {
                    let equal = comps[i].contains(&comps[j])?;
                    if !equal || j < i {
                        keep[i] = false;
                        break;
                    }
                }
            }
        }
        let kept: Vec<ClosedSet> = comps
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(c, _)| c)
            .collect();
        Ok(SpcSet {
            ring: ring.clone(),
            components: kept,
        })
    }

    pub fn empty(ring: &Ring) -> SpcSet {
        SpcSet {
            ring: ring.clone(),
            components: Vec::new(),
        }
    }

    /// All of Spec(R), as V(0).
    pub fn spec(ring: &Ring) -> SpcSet {
        SpcSet {
            ring: ring.clone(),
            components: vec![ClosedSet::whole(ring)],
        }
    }

    pub fn is_empty_set(&self) -> bool {
        self.components.is_empty()
    }

    pub fn union(&self, other: &SpcSet) -> Result<SpcSet> {
        check_rings(&self.ring, &other.ring)?;
        let mut comps = self.components.clone();
        comps.extend(other.components.clone());
        SpcSet::new(&self.ring, comps)
    }

    pub fn contains(&self, other: &SpcSet) -> Result<bool> {
        for c in &other.components {
            if !closed_in_spc(c, self)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn set_eq(&self, other: &SpcSet) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    /// Does the (asserted prime) p belong to the set? For a union of closed
    /// sets this is componentwise: some defining ideal is contained in p.
    pub fn contains_prime(&self, p: &PrimeIdeal) -> Result<bool> {
        for c in &self.components {
            let mut inside = true;
            for g in &c.defining.gens {
                if !ideal_member(g, &p.ideal)? {
                    inside = false;
                    break;
                }
            }
            if inside {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// V(c) ⊆ a, decided as: the product of the component ideals of `a` is
/// contained in sqrt(c.defining).
pub fn closed_in_spc(c: &ClosedSet, a: &SpcSet) -> Result<bool> {
    if a.components.is_empty() {
        return c.is_empty_set();
    }
    // generators of the product ideal: one generator from each component
    let mut prods: Vec<Polynomial> = vec![Polynomial::one(&a.ring)];
    for comp in &a.components {
        let gens: Vec<&Polynomial> = comp.defining.gens.iter().collect();
        let mut next = Vec::new();
        for p in &prods {
            for g in &gens {
                next.push(p.mul(g)?);
            }
        }
        prods = next;
        if prods.is_empty() {
            return Err(EngineError::Internal("component with no generators".into()));
        }
    }
    for p in &prods {
        if !radical_member(p, &c.defining)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A decreasing filtration of Spec(R) by specialization-closed sets, with
/// constant tails outside the window [lo, hi].
#[derive(Debug, Clone)]
pub struct SpFiltration {
    pub ring: Ring,
    pub lo: i64,
    pub hi: i64,
    pub steps: Vec<SpcSet>,
    pub below_lo: SpcSet,
    pub above_hi: SpcSet,
}

pub fn make_filtration(
    ring: &Ring,
    lo: i64,
    hi: i64,
    steps: Vec<SpcSet>,
    below_lo: SpcSet,
    above_hi: SpcSet,
) -> Result<SpFiltration> {
    if lo > hi || steps.len() != (hi - lo + 1) as usize {
        return Err(EngineError::Internal(format!(
            "window [{}, {}] needs {} steps, got {}",
            lo,
            hi,
            if lo > hi { 0 } else { hi - lo + 1 },
            steps.len()
        )));
    }
    if !below_lo.contains(&steps[0])? {
        return Err(EngineError::NotDecreasing(lo - 1, lo));
    }
    for k in 0..steps.len() - 1 {
        if !steps[k].contains(&steps[k + 1])? {
            return Err(EngineError::NotDecreasing(lo + k as i64, lo + k as i64 + 1));
        }
    }
    if !steps[steps.len() - 1].contains(&above_hi)? {
        return Err(EngineError::NotDecreasing(hi, hi + 1));
    }
    Ok(SpFiltration {
        ring: ring.clone(),
        lo,
        hi,
        steps,
        below_lo,
        above_hi,
    })
}

impl SpFiltration {
    pub fn at(&self, n: i64) -> &SpcSet {
        if n < self.lo {
            &self.below_lo
        } else if n > self.hi {
            &self.above_hi
        } else {
            &self.steps[(n - self.lo) as usize]
        }
    }
}

pub fn support(m: &PresentedModule) -> Result<ClosedSet> {
    Ok(ClosedSet::new(m.annihilator()?))
}

/// p ∈ Supp M, i.e. Ann(M) ⊆ p.
pub fn prime_in_support(p: &PrimeIdeal, m: &PresentedModule) -> Result<bool> {
    check_rings(&p.ideal.ring, &m.ring)?;
    let ann = m.annihilator()?;
    for g in &ann.gens {
        if !ideal_member(g, &p.ideal)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Symbolic reference to E(R/p)[-n], which sits in degree n.
#[derive(Debug, Clone)]
pub struct StalkInjectiveRef {
    pub prime: PrimeIdeal,
    pub shift: i64,
}

/// The engine's model of maps into stalk injectives: Hom(X, E(R/p)[-n]) is
/// nonzero exactly when p ∈ Supp H^n(X).
pub fn stalk_hom_nonzero(x: &Complex, e: &StalkInjectiveRef) -> Result<bool> {
    let h = cohomology(x, e.shift)?.module;
    prime_in_support(&e.prime, &h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::poly::make_ring;

    fn qxy() -> Ring {
        make_ring(
            FieldDescriptor::Rationals,
            &["x", "y"],
            MonomialOrder::GrevLex,
            &[],
        )
        .unwrap()
    }

    fn v(ring: &Ring, gens: &[&str]) -> ClosedSet {
        ClosedSet::new(Ideal::parse(ring, gens).unwrap())
    }

    #[test]
    fn verify_prime_shapes() {
        let r = qxy();
        assert_eq!(
            verify_prime(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap(),
            Some("variable subset".into())
        );
        let r1 = make_ring(
            FieldDescriptor::Rationals,
            &["x"],
            MonomialOrder::GrevLex,
            &[],
        )
        .unwrap();
        assert!(verify_prime(&Ideal::parse(&r1, &["x^2+1"]).unwrap())
            .unwrap()
            .is_some());
        // x^2 - 1 has roots, not certified
        assert!(verify_prime(&Ideal::parse(&r1, &["x^2-1"]).unwrap())
            .unwrap()
            .is_none());
        // the cusp is prime but beyond the verifier
        assert!(verify_prime(&Ideal::parse(&r, &["x^2-y^3"]).unwrap())
            .unwrap()
            .is_none());
        // zero ideal in a polynomial ring
        assert!(verify_prime(&Ideal::zero(&r)).unwrap().is_some());
    }

    #[test]
    fn unit_ideal_rejected_as_prime() {
        let r = qxy();
        let res = PrimeIdeal::assert(Ideal::parse(&r, &["x", "x+1"]).unwrap());
        assert!(matches!(res, Err(EngineError::UnitIdeal)));
    }

    #[test]
    fn closed_set_union_containments() {
        let r = qxy();
        let vx = v(&r, &["x"]);
        let vy = v(&r, &["y"]);
        let a = SpcSet::new(&r, vec![vx.clone(), vy.clone()]).unwrap();
        assert!(closed_in_spc(&vx, &a).unwrap());
        assert!(closed_in_spc(&v(&r, &["x*y"]), &a).unwrap());
        assert!(!closed_in_spc(&v(&r, &["x+y"]), &a).unwrap());
    }

    #[test]
    fn spcset_normalization() {
        let r = qxy();
        // V(x) absorbs V(x, y); empty component dropped
        let a = SpcSet::new(
            &r,
            vec![v(&r, &["x"]), v(&r, &["x", "y"]), ClosedSet::empty(&r)],
        )
        .unwrap();
        assert_eq!(a.components.len(), 1);
        assert!(a.components[0].set_eq(&v(&r, &["x"])).unwrap());
        // V(0) absorbs everything
        let b = a.union(&SpcSet::spec(&r)).unwrap();
        assert_eq!(b.components.len(), 1);
        assert!(b.set_eq(&SpcSet::spec(&r)).unwrap());
    }

    #[test]
    fn support_examples() {
        let r = qxy();
        let mx = PresentedModule::cyclic(&r, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        let my = PresentedModule::cyclic(&r, &Ideal::parse(&r, &["y"]).unwrap()).unwrap();
        assert!(support(&mx).unwrap().set_eq(&v(&r, &["x"])).unwrap());
        assert!(support(&PresentedModule::zero(&r))
            .unwrap()
            .is_empty_set()
            .unwrap());
        let sum = mx.direct_sum(&my).unwrap();
        assert!(support(&sum).unwrap().set_eq(&v(&r, &["x*y"])).unwrap());
    }

    #[test]
    fn prime_in_support_examples() {
        let r = qxy();
        let mx = PresentedModule::cyclic(&r, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        let pxy = PrimeIdeal::assert(Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap();
        let py = PrimeIdeal::assert(Ideal::parse(&r, &["y"]).unwrap()).unwrap();
        assert!(prime_in_support(&pxy, &mx).unwrap());
        assert!(!prime_in_support(&py, &mx).unwrap());
        let m2 = PresentedModule::cyclic(&r, &Ideal::parse(&r, &["x^2"]).unwrap()).unwrap();
        let px = PrimeIdeal::assert(Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert!(prime_in_support(&px, &m2).unwrap());
    }

    #[test]
    fn stalk_hom_criterion() {
        let r = qxy();
        let mx = PresentedModule::cyclic(&r, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        let x = Complex::stalk(&mx, 0);
        let pxy = PrimeIdeal::assert(Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap();
        let py = PrimeIdeal::assert(Ideal::parse(&r, &["y"]).unwrap()).unwrap();
        assert!(stalk_hom_nonzero(
            &x,
            &StalkInjectiveRef {
                prime: pxy.clone(),
                shift: 0
            }
        )
        .unwrap());
        assert!(!stalk_hom_nonzero(
            &x,
            &StalkInjectiveRef {
                prime: pxy.clone(),
                shift: 1
            }
        )
        .unwrap());
        assert!(!stalk_hom_nonzero(&x, &StalkInjectiveRef { prime: py, shift: 0 }).unwrap());
        // shift equivariance
        let shifted = x.shift(-3).unwrap();
        assert!(stalk_hom_nonzero(&shifted, &StalkInjectiveRef { prime: pxy, shift: 3 }).unwrap());
    }

    #[test]
    fn filtration_validation() {
        let r = qxy();
        let vx = SpcSet::new(&r, vec![v(&r, &["x"])]).unwrap();
        let vxy = SpcSet::new(&r, vec![v(&r, &["x", "y"])]).unwrap();
        let vy = SpcSet::new(&r, vec![v(&r, &["y"])]).unwrap();
        // valid two-step
        let phi = make_filtration(
            &r,
            0,
            1,
            vec![vx.clone(), vxy.clone()],
            SpcSet::spec(&r),
            SpcSet::empty(&r),
        )
        .unwrap();
        assert!(phi.at(-5).set_eq(&SpcSet::spec(&r)).unwrap());
        assert!(phi.at(0).set_eq(&vx).unwrap());
        assert!(phi.at(7).is_empty_set());
        // V(y) is not inside V(x): rejected with the offending pair
        let bad = make_filtration(
            &r,
            0,
            1,
            vec![vx.clone(), vy],
            SpcSet::spec(&r),
            SpcSet::empty(&r),
        );
        assert!(matches!(bad, Err(EngineError::NotDecreasing(0, 1))));
    }
}
