//! Buchberger engine and the ideal calculus: membership, radical membership,
//! intersection, quotient, saturation, elimination.
//!
//! Over a quotient ring R = k[x]/J every computation happens on the preimage
//! ideal I + J in the ambient polynomial ring; results are projected back.

use crate::error::{EngineError, Result};
use crate::field::{Coeff, FieldDescriptor};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{
    ambient, check_rings, parse_polynomial, terms_add, terms_mul_term, terms_neg,
    terms_nf, terms_nf_with_quotients, Polynomial, Ring, RingData, TermList,
};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Arc;

/// Global S-pair budget. A run that would process more pairs aborts with a
/// distinguishable resource error, never a wrong answer.
static MAX_PAIRS: AtomicUsize = AtomicUsize::new(200_000);

pub fn set_max_pairs(n: usize) {
    MAX_PAIRS.store(n, AtomicOrdering::Relaxed);
}

pub fn max_pairs() -> usize {
    MAX_PAIRS.load(AtomicOrdering::Relaxed)
}

// ---- core Buchberger on term lists --------------------------------------------------

struct Tracked {
    p: TermList,
    /// combination of the input generators, present only when tracking
    cof: Option<Vec<TermList>>,
}

fn tracked_zero_cof(n: usize, track: bool) -> Option<Vec<TermList>> {
    if track {
        Some(vec![Vec::new(); n])
    } else {
        None
    }
}

fn cof_sub_mul(
    cof: &mut Option<Vec<TermList>>,
    other: &Option<Vec<TermList>>,
    m: &Monomial,
    c: &Coeff,
    field: &FieldDescriptor,
    order: &MonomialOrder,
) {
    if let (Some(a), Some(b)) = (cof.as_mut(), other.as_ref()) {
        for (ai, bi) in a.iter_mut().zip(b) {
            let sub = terms_mul_term(bi, m, c, field);
            *ai = terms_add(ai, &terms_neg(&sub, field), field, order);
        }
    }
}

fn cof_scale(cof: &mut Option<Vec<TermList>>, c: &Coeff, field: &FieldDescriptor) {
    if let Some(a) = cof.as_mut() {
        for ai in a.iter_mut() {
            *ai = crate::poly::terms_scale(ai, c, field);
        }
    }
}

/// Fully reduce `t` against `basis`, updating cofactors.
fn reduce_tracked(
    mut t: Tracked,
    basis: &[Tracked],
    field: &FieldDescriptor,
    order: &MonomialOrder,
) -> Tracked {
    let mut out: TermList = Vec::new();
    'outer: while let Some((lm, lc)) = t.p.first().cloned() {
        for g in basis {
            if g.p.is_empty() {
                continue;
            }
            let (gm, gc) = &g.p[0];
            if let Some(q) = lm.div(gm) {
                let factor = field.div(&lc, gc).expect("nonzero leading coefficient");
                let sub = terms_mul_term(&g.p, &q, &factor, field);
                t.p = terms_add(&t.p, &terms_neg(&sub, field), field, order);
                cof_sub_mul(&mut t.cof, &g.cof, &q, &factor, field, order);
                continue 'outer;
            }
        }
        out.push((lm, lc));
        t.p.remove(0);
    }
    t.p = out;
    t
}

pub(crate) struct GroebnerOut {
    pub basis: Vec<TermList>,
    /// basis[i] = sum_j cofactors[i][j] * gens[j], when tracking was requested
    pub cofactors: Option<Vec<Vec<TermList>>>,
}

pub(crate) fn buchberger_core(
    gens: Vec<TermList>,
    field: &FieldDescriptor,
    order: &MonomialOrder,
    budget: Option<usize>,
    track: bool,
) -> Result<GroebnerOut> {
    let budget = budget.unwrap_or_else(max_pairs);
    let ngens = gens.len();
    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in gens.into_iter().enumerate() {
        if g.is_empty() {
            continue;
        }
        let nv = g[0].0 .0.len();
        let mut cof = tracked_zero_cof(ngens, track);
        if let Some(c) = cof.as_mut() {
            c[i] = vec![(Monomial::one(nv), field.one())];
        }
        basis.push(Tracked { p: g, cof });
    }
    if basis.is_empty() {
        return Ok(GroebnerOut {
            basis: Vec::new(),
            cofactors: if track { Some(Vec::new()) } else { None },
        });
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.push((i, j));
        }
    }
    let mut processed = 0usize;

    while !pending.is_empty() {
        // normal strategy: minimal lcm degree, then lcm exponents, then indices
        let mut best = 0usize;
        let mut best_key: Option<(u32, Vec<u32>, usize, usize)> = None;
        for (k, &(i, j)) in pending.iter().enumerate() {
            let l = basis[i].p[0].0.lcm(&basis[j].p[0].0);
            let key = (l.degree(), l.0.clone(), i, j);
            if best_key.as_ref().map_or(true, |b| key < *b) {
                best_key = Some(key);
                best = k;
            }
        }
        let (i, j) = pending.remove(best);
        let (lti, ltj) = (basis[i].p[0].0.clone(), basis[j].p[0].0.clone());

        // first Buchberger criterion: coprime leading terms
        if lti.coprime(&ltj) {
            continue;
        }
        // chain criterion: some k with LT(k) | lcm(i, j) and both mixed pairs done
        let l = lti.lcm(&ltj);
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j || g.p.is_empty() {
                continue;
            }
            if g.p[0].0.divides(&l) {
                let pik = (i.min(k), i.max(k));
                let pjk = (j.min(k), j.max(k));
                if !pending.contains(&pik) && !pending.contains(&pjk) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }

        processed += 1;
        if processed > budget {
            return Err(EngineError::ResourceExhausted(budget));
        }

        // S-polynomial
        let (qi, qj) = (l.div(&lti).unwrap(), l.div(&ltj).unwrap());
        let ci = field.div(&field.one(), &basis[i].p[0].1)?;
        let cj = field.div(&field.one(), &basis[j].p[0].1)?;
        let pa = terms_mul_term(&basis[i].p, &qi, &ci, field);
        let pb = terms_mul_term(&basis[j].p, &qj, &cj, field);
        let sp = terms_add(&pa, &terms_neg(&pb, field), field, order);
        let mut cof = tracked_zero_cof(ngens, track);
        if track {
            // cof = qi/ci * cof_i - qj/cj * cof_j
            let mut tmp = tracked_zero_cof(ngens, true);
            cof_sub_mul(&mut tmp, &basis[i].cof, &qi, &field.neg(&ci), field, order);
            cof_sub_mul(&mut tmp, &basis[j].cof, &qj, &cj, field, order);
            cof = tmp;
        }
        let red = reduce_tracked(Tracked { p: sp, cof }, &basis, field, order);
        if !red.p.is_empty() {
            let new_idx = basis.len();
            for k in 0..new_idx {
                pending.push((k, new_idx));
            }
            basis.push(red);
        }
    }

    // minimalize: drop elements whose leading term is divisible by another's
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if basis[j].p[0].0.divides(&basis[i].p[0].0)
                && (basis[j].p[0].0 != basis[i].p[0].0 || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Tracked> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // interreduce tails and normalize leading coefficients
    let mut i = 0;
    while i < minimal.len() {
        let cur = minimal.remove(i);
        let red = reduce_tracked(cur, &minimal, field, order);
        if red.p.is_empty() {
            continue;
        }
        minimal.insert(i, red);
        i += 1;
    }
    for g in minimal.iter_mut() {
        let lead = g.p[0].1.clone();
        if !lead.is_one() {
            let inv = field.div(&field.one(), &lead)?;
            g.p = crate::poly::terms_scale(&g.p, &inv, field);
            cof_scale(&mut g.cof, &inv, field);
        }
    }
    minimal.sort_by(|a, b| order.cmp_unchecked(&b.p[0].0, &a.p[0].0));

    let cofactors = if track {
        Some(minimal.iter().map(|g| g.cof.clone().unwrap()).collect())
    } else {
        None
    };
    Ok(GroebnerOut {
        basis: minimal.into_iter().map(|g| g.p).collect(),
        cofactors,
    })
}

/// Reduced Groebner basis of the span of `gens` in the plain polynomial ring.
pub(crate) fn buchberger_termlists(
    gens: Vec<TermList>,
    field: &FieldDescriptor,
    order: &MonomialOrder,
    budget: Option<usize>,
) -> Result<Vec<TermList>> {
    Ok(buchberger_core(gens, field, order, budget, false)?.basis)
}

// ---- public ideal API ---------------------------------------------------------------

/// A finitely generated ideal of a (possibly quotient) ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub ring: Ring,
    pub gens: Vec<Polynomial>,
}

impl Ideal {
    /// Generators are deduplicated of zeros; the zero ideal stores the single
    /// generator 0.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut clean = Vec::new();
        for g in gens {
            check_rings(ring, &g.ring)?;
            if !g.is_zero() {
                clean.push(g);
            }
        }
        if clean.is_empty() {
            clean.push(Polynomial::zero(ring));
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: clean,
        })
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|s| parse_polynomial(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::zero(ring)],
        }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
        }
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    /// Ambient generators of the preimage ideal I + J.
    pub(crate) fn ambient_gens(&self) -> Vec<TermList> {
        let mut out: Vec<TermList> = self
            .gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.terms.clone())
            .collect();
        out.extend(self.ring.relations.iter().cloned());
        out
    }
}

/// A reduced Groebner basis of the preimage I + J in the ambient polynomial ring.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ideal: Ideal,
    /// Elements live in the ambient polynomial ring.
    pub basis: Vec<Polynomial>,
    pub order: MonomialOrder,
}

impl GroebnerBasis {
    pub(crate) fn basis_terms(&self) -> Vec<TermList> {
        self.basis.iter().map(|p| p.terms.clone()).collect()
    }

    pub fn contains_one(&self) -> bool {
        self.basis
            .iter()
            .any(|p| p.terms.len() == 1 && p.terms[0].0.is_one())
    }
}

pub fn groebner_basis(ideal: &Ideal) -> Result<GroebnerBasis> {
    let amb = ambient(&ideal.ring);
    let basis = buchberger_termlists(
        ideal.ambient_gens(),
        &amb.field,
        &amb.order,
        None,
    )?;
    Ok(GroebnerBasis {
        ideal: ideal.clone(),
        basis: basis
            .into_iter()
            .map(|t| Polynomial {
                ring: amb.clone(),
                terms: t,
            })
            .collect(),
        order: amb.order,
    })
}

/// Remainder of `f` against `G`; zero exactly for ideal members.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    check_rings(&f.ring, &gb.ideal.ring)?;
    let amb = ambient(&f.ring);
    let r = terms_nf(&f.terms, &gb.basis_terms(), &amb.field, &amb.order);
    Ok(Polynomial::from_terms(&f.ring, r))
}

/// Membership decision together with a cofactor certificate on the listed
/// generators (relations of a quotient ring contribute silently).
pub struct MemberCertificate {
    pub member: bool,
    /// cofactors q_i with f = sum q_i * gens_i (+ relation part), present when member
    pub cofactors: Option<Vec<Polynomial>>,
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    let gb = groebner_basis(ideal)?;
    Ok(normal_form(f, &gb)?.is_zero())
}

pub fn ideal_member_certified(f: &Polynomial, ideal: &Ideal) -> Result<MemberCertificate> {
    check_rings(&f.ring, &ideal.ring)?;
    let amb = ambient(&ideal.ring);
    let gens = ideal.ambient_gens();
    let out = buchberger_core(gens.clone(), &amb.field, &amb.order, None, true)?;
    let (rem, quots) = terms_nf_with_quotients(&f.terms, &out.basis, &amb.field, &amb.order);
    if !rem.is_empty() {
        return Ok(MemberCertificate {
            member: false,
            cofactors: None,
        });
    }
    // combine: f = sum_k quots[k] * basis[k], basis[k] = sum_j cof[k][j] gens[j]
    let cof = out.cofactors.expect("tracking requested");
    let n_listed = ideal.gens.iter().filter(|g| !g.is_zero()).count();
    let mut acc: Vec<TermList> = vec![Vec::new(); n_listed.max(1)];
    for (k, q) in quots.iter().enumerate() {
        if q.is_empty() {
            continue;
        }
        for j in 0..n_listed.min(cof[k].len()) {
            let prod = crate::poly::terms_mul(q, &cof[k][j], &amb.field, &amb.order);
            acc[j] = terms_add(&acc[j], &prod, &amb.field, &amb.order);
        }
    }
    Ok(MemberCertificate {
        member: true,
        cofactors: Some(
            acc.into_iter()
                .map(|t| Polynomial {
                    ring: amb.clone(),
                    terms: t,
                })
                .collect(),
        ),
    })
}

// ---- extended rings for elimination tricks ------------------------------------------

fn fresh_name(vars: &[String]) -> String {
    let mut name = "t".to_string();
    while vars.contains(&name) {
        name.push('_');
    }
    name
}

/// Ambient ring with one fresh variable prepended and a block elimination order.
fn extend_front(amb: &Ring) -> (Ring, String) {
    let fresh = fresh_name(&amb.vars);
    let mut vars = vec![fresh.clone()];
    vars.extend(amb.vars.iter().cloned());
    let ring = Arc::new(RingData {
        field: amb.field,
        vars,
        order: MonomialOrder::Elimination { block: 1 },
        relations: Vec::new(),
    });
    (ring, fresh)
}

fn shift_into(terms: &TermList) -> TermList {
    terms
        .iter()
        .map(|(m, c)| {
            let mut e = vec![0u32];
            e.extend(&m.0);
            (Monomial(e), c.clone())
        })
        .collect()
}

fn shift_out_of(terms: &TermList) -> Option<TermList> {
    let mut out = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        if m.0[0] != 0 {
            return None;
        }
        out.push((Monomial(m.0[1..].to_vec()), c.clone()));
    }
    Some(out)
}

/// True iff f is in the radical of I, by the Rabinowitsch trick:
/// 1 in (I, 1 - t f) in the ring extended by a fresh variable t.
pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    check_rings(&f.ring, &ideal.ring)?;
    if f.is_zero() {
        return Ok(true);
    }
    let amb = ambient(&ideal.ring);
    let (ext, _) = extend_front(&amb);
    let mut gens: Vec<TermList> = ideal
        .ambient_gens()
        .iter()
        .map(|t| shift_into(t))
        .collect();
    // 1 - t * f
    let one = vec![(Monomial::one(ext.vars.len()), ext.field.one())];
    let tf = crate::poly::terms_mul(
        &vec![(Monomial::var(0, ext.vars.len()), ext.field.one())],
        &shift_into(&f.terms),
        &ext.field,
        &ext.order,
    );
    gens.push(terms_add(&one, &terms_neg(&tf, &ext.field), &ext.field, &ext.order));
    let basis = buchberger_termlists(gens, &ext.field, &ext.order, None)?;
    Ok(basis
        .iter()
        .any(|p| p.len() == 1 && p[0].0.is_one()))
}

/// Generators of I with zero generators and duplicates removed, projected into `ring`.
fn project_ideal(ring: &Ring, gens: Vec<TermList>) -> Result<Ideal> {
    let polys: Vec<Polynomial> = gens
        .into_iter()
        .map(|t| Polynomial::from_terms(ring, t))
        .filter(|p| !p.is_zero())
        .collect();
    let mut dedup: Vec<Polynomial> = Vec::new();
    for p in polys {
        if !dedup.contains(&p) {
            dedup.push(p);
        }
    }
    Ideal::new(ring, dedup)
}

/// I \u{2229} J via the single fresh variable t and elimination.
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_rings(&a.ring, &b.ring)?;
    let amb = ambient(&a.ring);
    let (ext, _) = extend_front(&amb);
    let nv = ext.vars.len();
    let t_term = vec![(Monomial::var(0, nv), ext.field.one())];
    let one = vec![(Monomial::one(nv), ext.field.one())];
    let one_minus_t = terms_add(&one, &terms_neg(&t_term, &ext.field), &ext.field, &ext.order);
    let mut gens: Vec<TermList> = Vec::new();
    for g in a.ambient_gens() {
        gens.push(crate::poly::terms_mul(
            &t_term,
            &shift_into(&g),
            &ext.field,
            &ext.order,
        ));
    }
    for g in b.ambient_gens() {
        gens.push(crate::poly::terms_mul(
            &one_minus_t,
            &shift_into(&g),
            &ext.field,
            &ext.order,
        ));
    }
    let basis = buchberger_termlists(gens, &ext.field, &ext.order, None)?;
    let kept: Vec<TermList> = basis.into_iter().filter_map(|t| shift_out_of(&t)).collect();
    project_ideal(&a.ring, kept)
}

/// Exact single-divisor division; errors if the remainder is nonzero.
fn divide_exact(num: &TermList, den: &TermList, field: &FieldDescriptor, order: &MonomialOrder) -> Result<TermList> {
    let (rem, quots) = terms_nf_with_quotients(num, std::slice::from_ref(den), field, order);
    if !rem.is_empty() {
        return Err(EngineError::Internal(
            "exact division left a remainder".into(),
        ));
    }
    Ok(quots.into_iter().next().unwrap())
}

/// (I : J) = { f | f J \u{2286} I }.
pub fn ideal_quotient(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_rings(&a.ring, &b.ring)?;
    let amb = ambient(&a.ring);
    let mut result: Option<Ideal> = None;
    let listed: Vec<&Polynomial> = b.gens.iter().filter(|g| !g.is_zero()).collect();
    if listed.is_empty() {
        // (I : 0) = (1)
        return Ok(Ideal::unit(&a.ring));
    }
    for g in listed {
        // (A : g) = (A \u{2229} (g)) / g, computed in the ambient ring
        let a_amb = project_ideal(&amb, a.ambient_gens())?;
        let g_amb = Ideal::new(&amb, vec![g.transfer(&amb)])?;
        let meet = ideal_intersect(&a_amb, &g_amb)?;
        let mut quots: Vec<TermList> = Vec::new();
        for h in meet.gens.iter().filter(|h| !h.is_zero()) {
            quots.push(divide_exact(
                &h.terms,
                &g.transfer(&amb).terms,
                &amb.field,
                &amb.order,
            )?);
        }
        let q = project_ideal(&a.ring, quots)?;
        result = Some(match result {
            None => q,
            Some(r) => ideal_intersect(&r, &q)?,
        });
    }
    Ok(result.unwrap())
}

pub fn ideals_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    for g in &a.gens {
        if !ideal_member(g, b)? {
            return Ok(false);
        }
    }
    for g in &b.gens {
        if !ideal_member(g, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// (I : J^\u{221e}) by iterated quotient; also returns the stabilizing exponent.
pub fn saturate(a: &Ideal, b: &Ideal) -> Result<(Ideal, u32)> {
    let mut current = a.clone();
    let mut t = 0u32;
    loop {
        let next = ideal_quotient(&current, b)?;
        if ideals_equal(&next, &current)? {
            return Ok((current, t));
        }
        current = next;
        t += 1;
        if t > 10_000 {
            return Err(EngineError::Internal("saturation failed to stabilize".into()));
        }
    }
}

/// Generators of I \u{2229} k[remaining variables], returned in the original ring.
pub fn eliminate(ideal: &Ideal, vars: &[&str]) -> Result<Ideal> {
    let ring = &ideal.ring;
    let amb = ambient(ring);
    let mut drop_idx: Vec<usize> = Vec::new();
    for v in vars {
        match amb.vars.iter().position(|w| w == v) {
            Some(i) => {
                if !drop_idx.contains(&i) {
                    drop_idx.push(i);
                }
            }
            None => return Err(EngineError::UnknownVariable(v.to_string())),
        }
    }
    drop_idx.sort_unstable();
    let keep_idx: Vec<usize> = (0..amb.vars.len())
        .filter(|i| !drop_idx.contains(i))
        .collect();
    // permuted ring: eliminated variables first, block order
    let perm: Vec<usize> = drop_idx.iter().chain(keep_idx.iter()).cloned().collect();
    let pvars: Vec<String> = perm.iter().map(|&i| amb.vars[i].clone()).collect();
    let pring = Arc::new(RingData {
        field: amb.field,
        vars: pvars,
        order: MonomialOrder::Elimination { block: drop_idx.len() },
        relations: Vec::new(),
    });
    let permute = |t: &TermList| -> TermList {
        t.iter()
            .map(|(m, c)| {
                let e: Vec<u32> = perm.iter().map(|&i| m.0[i]).collect();
                (Monomial(e), c.clone())
            })
            .collect()
    };
    let gens: Vec<TermList> = ideal.ambient_gens().iter().map(&permute).collect();
    let basis = buchberger_termlists(gens, &pring.field, &pring.order, None)?;
    // keep elements free of the eliminated block, mapped back to original positions
    let k = drop_idx.len();
    let mut kept: Vec<TermList> = Vec::new();
    'next: for p in basis {
        for (m, _) in &p {
            if m.0[..k].iter().any(|&e| e > 0) {
                continue 'next;
            }
        }
        kept.push(
            p.iter()
                .map(|(m, c)| {
                    let mut e = vec![0u32; amb.vars.len()];
                    for (pos, &orig) in perm.iter().enumerate() {
                        e[orig] = m.0[pos];
                    }
                    (Monomial(e), c.clone())
                })
                .collect(),
        );
    }
    project_ideal(ring, kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldDescriptor;
    use crate::monomial::MonomialOrder;
    use crate::poly::make_ring;

    fn qxy() -> Ring {
        make_ring(FieldDescriptor::Rationals, &["x", "y"], MonomialOrder::GrevLex, &[]).unwrap()
    }

    fn qx() -> Ring {
        make_ring(FieldDescriptor::Rationals, &["x"], MonomialOrder::GrevLex, &[]).unwrap()
    }

    #[test]
    fn gb_absorbs_redundant_generator() {
        let r = qx();
        let i = Ideal::parse(&r, &["x^2", "x"]).unwrap();
        let gb = groebner_basis(&i).unwrap();
        assert_eq!(gb.basis.len(), 1);
        assert_eq!(format!("{}", gb.basis[0]), "x");
    }

    #[test]
    fn gb_linear_span() {
        let r = qxy();
        let i = Ideal::parse(&r, &["x + y", "x - y"]).unwrap();
        let gb = groebner_basis(&i).unwrap();
        let rendered: Vec<String> = gb.basis.iter().map(|p| format!("{}", p)).collect();
        assert_eq!(rendered, vec!["x", "y"]);
    }

    #[test]
    fn gb_unit_ideal() {
        let r = qxy();
        let i = Ideal::parse(&r, &["x*y - 1", "x^2"]).unwrap();
        let gb = groebner_basis(&i).unwrap();
        assert!(gb.contains_one());
        assert_eq!(gb.basis.len(), 1);
    }

    #[test]
    fn nf_examples() {
        let r = qxy();
        let gb = groebner_basis(&Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        let x2 = parse_polynomial(&r, "x^2").unwrap();
        assert!(normal_form(&x2, &gb).unwrap().is_zero());
        let y = parse_polynomial(&r, "y").unwrap();
        assert_eq!(normal_form(&y, &gb).unwrap(), y);
        let gb2 = groebner_basis(&Ideal::parse(&r, &["x^2 - y"]).unwrap()).unwrap();
        let f = parse_polynomial(&r, "x^2 + y").unwrap();
        assert_eq!(
            normal_form(&f, &gb2).unwrap(),
            parse_polynomial(&r, "2*y").unwrap()
        );
    }

    #[test]
    fn membership_with_certificate() {
        let r = qxy();
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        let x = parse_polynomial(&r, "x").unwrap();
        assert!(!ideal_member(&x, &i).unwrap());

        let j = Ideal::parse(&r, &["x"]).unwrap();
        let xy = parse_polynomial(&r, "x*y").unwrap();
        let cert = ideal_member_certified(&xy, &j).unwrap();
        assert!(cert.member);
        let cof = cert.cofactors.unwrap();
        assert_eq!(format!("{}", cof[0]), "y");

        let k = Ideal::parse(&r, &["x - y", "2*y"]).unwrap();
        let f = parse_polynomial(&r, "x + y").unwrap();
        let cert = ideal_member_certified(&f, &k).unwrap();
        assert!(cert.member);
        // expand the certificate and compare
        let cof = cert.cofactors.unwrap();
        let mut acc = crate::poly::Polynomial::zero(&r);
        for (q, g) in cof.iter().zip(&k.gens) {
            acc = acc.add(&q.mul(g).unwrap()).unwrap();
        }
        assert_eq!(acc, f);
    }

    #[test]
    fn radical_membership() {
        let r = qxy();
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(radical_member(&parse_polynomial(&r, "x").unwrap(), &i).unwrap());
        assert!(!radical_member(&parse_polynomial(&r, "y").unwrap(), &i).unwrap());
        let j = Ideal::parse(&r, &["x^2", "y^3"]).unwrap();
        assert!(radical_member(&parse_polynomial(&r, "x + y").unwrap(), &j).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = qxy();
        let ix = Ideal::parse(&r, &["x"]).unwrap();
        let iy = Ideal::parse(&r, &["y"]).unwrap();
        let meet = ideal_intersect(&ix, &ix).unwrap();
        assert!(ideals_equal(&meet, &ix).unwrap());
        let meet = ideal_intersect(&ix, &iy).unwrap();
        assert!(ideals_equal(&meet, &Ideal::parse(&r, &["x*y"]).unwrap()).unwrap());
        let unit = Ideal::unit(&r);
        let meet = ideal_intersect(&ix, &unit).unwrap();
        assert!(ideals_equal(&meet, &ix).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let r = qxy();
        let q = ideal_quotient(
            &Ideal::parse(&r, &["x*y"]).unwrap(),
            &Ideal::parse(&r, &["x"]).unwrap(),
        )
        .unwrap();
        assert!(ideals_equal(&q, &Ideal::parse(&r, &["y"]).unwrap()).unwrap());

        let q = ideal_quotient(&Ideal::parse(&r, &["x^2"]).unwrap(), &Ideal::unit(&r)).unwrap();
        assert!(ideals_equal(&q, &Ideal::parse(&r, &["x^2"]).unwrap()).unwrap());
    }

    #[test]
    fn saturation_example() {
        let r = qxy();
        let (s, e) = saturate(
            &Ideal::parse(&r, &["x^2*y"]).unwrap(),
            &Ideal::parse(&r, &["x"]).unwrap(),
        )
        .unwrap();
        assert!(ideals_equal(&s, &Ideal::parse(&r, &["y"]).unwrap()).unwrap());
        assert_eq!(e, 2);
    }

    #[test]
    fn elimination_examples() {
        let r = qxy();
        let e = eliminate(&Ideal::parse(&r, &["x - y"]).unwrap(), &["x"]).unwrap();
        assert!(e.is_zero_ideal());

        // x^2 = (x + y^2)(x - y^2) + y * y^3, so the elimination ideal is (x^2)
        let e = eliminate(&Ideal::parse(&r, &["x - y^2", "y^3"]).unwrap(), &["y"]).unwrap();
        assert!(ideals_equal(&e, &Ideal::parse(&r, &["x^2"]).unwrap()).unwrap());
        assert!(ideal_member(&parse_polynomial(&r, "x^3").unwrap(), &e).unwrap());

        let e = eliminate(&Ideal::unit(&r), &["x"]).unwrap();
        assert!(ideals_equal(&e, &Ideal::unit(&r)).unwrap());

        assert!(eliminate(&Ideal::unit(&r), &["z"]).is_err());
    }

    #[test]
    fn quotient_ring_arithmetic() {
        // GB computations in Q[x,y]/(xy)
        let r = make_ring(
            FieldDescriptor::Rationals,
            &["x", "y"],
            MonomialOrder::GrevLex,
            &["x*y"],
        )
        .unwrap();
        let x = parse_polynomial(&r, "x").unwrap();
        let y = parse_polynomial(&r, "y").unwrap();
        assert!(x.mul(&y).unwrap().is_zero());
        // (0 : x) = (y) in R/(xy)
        let q = ideal_quotient(&Ideal::zero(&r), &Ideal::new(&r, vec![x]).unwrap()).unwrap();
        assert!(ideals_equal(&q, &Ideal::new(&r, vec![y]).unwrap()).unwrap());
    }

    #[test]
    fn budget_error_is_distinguishable() {
        let r = qxy();
        let i = Ideal::parse(&r, &["x^3 - y^2", "x^2*y - 1"]).unwrap();
        let amb = ambient(&r);
        let res = buchberger_termlists(
            i.ambient_gens(),
            &amb.field,
            &amb.order,
            Some(0),
        );
        assert!(matches!(res, Err(EngineError::ResourceExhausted(0))));
    }
}
