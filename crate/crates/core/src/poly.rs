//! Rings, quotient-ring descriptors and exact multivariate polynomial arithmetic.
//!
//! A `Ring` is a shared descriptor `k[x_1..x_v]/J`. Relations, when present, are
//! stored as a reduced Groebner basis of `J`, and every polynomial is kept in
//! normal form against it, so equality of polynomials is structural.

use crate::error::{EngineError, Result};
use crate::field::{Coeff, FieldDescriptor};
use crate::monomial::{Monomial, MonomialOrder};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ring-free term representation: monomial/coefficient pairs sorted descending
/// in the owning ring's monomial order, no zero coefficients.
pub type TermList = Vec<(Monomial, Coeff)>;

#[derive(Debug, PartialEq, Eq)]
pub struct RingData {
    pub field: FieldDescriptor,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    /// Reduced Groebner basis of the defining ideal J; empty for a polynomial ring.
    pub relations: Vec<TermList>,
}

pub type Ring = Arc<RingData>;

pub fn rings_match(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn check_rings(a: &Ring, b: &Ring) -> Result<()> {
    if rings_match(a, b) {
        Ok(())
    } else {
        Err(EngineError::RingMismatch)
    }
}

/// The plain polynomial ring underlying a quotient ring.
pub fn ambient(ring: &Ring) -> Ring {
    if ring.relations.is_empty() {
        ring.clone()
    } else {
        Arc::new(RingData {
            field: ring.field,
            vars: ring.vars.clone(),
            order: ring.order,
            relations: Vec::new(),
        })
    }
}

// ---- low-level term-list arithmetic -------------------------------------------------

pub(crate) fn normalize_terms(
    raw: Vec<(Monomial, Coeff)>,
    field: &FieldDescriptor,
    order: &MonomialOrder,
) -> TermList {
    let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
    for (m, c) in raw {
        if c.is_zero() {
            continue;
        }
        match acc.remove(&m) {
            Some(prev) => {
                let s = field.add(&prev, &c);
                if !s.is_zero() {
                    acc.insert(m, s);
                }
            }
            None => {
                acc.insert(m, c);
            }
        }
    }
    let mut out: TermList = acc.into_iter().collect();
    out.sort_by(|a, b| order.cmp_unchecked(&b.0, &a.0));
    out
}

pub(crate) fn terms_add(a: &TermList, b: &TermList, field: &FieldDescriptor, order: &MonomialOrder) -> TermList {
    let mut raw: Vec<(Monomial, Coeff)> = a.clone();
    raw.extend(b.iter().cloned());
    normalize_terms(raw, field, order)
}

pub(crate) fn terms_neg(a: &TermList, field: &FieldDescriptor) -> TermList {
    a.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect()
}

pub(crate) fn terms_mul(a: &TermList, b: &TermList, field: &FieldDescriptor, order: &MonomialOrder) -> TermList {
    let mut raw = Vec::with_capacity(a.len() * b.len());
    for (ma, ca) in a {
        for (mb, cb) in b {
            raw.push((ma.mul(mb), field.mul(ca, cb)));
        }
    }
    normalize_terms(raw, field, order)
}

pub(crate) fn terms_scale(a: &TermList, c: &Coeff, field: &FieldDescriptor) -> TermList {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(m, k)| (m.clone(), field.mul(k, c))).collect()
}

/// Multiply by a single term.
pub(crate) fn terms_mul_term(a: &TermList, m: &Monomial, c: &Coeff, field: &FieldDescriptor) -> TermList {
    a.iter()
        .map(|(ma, ca)| (ma.mul(m), field.mul(ca, c)))
        .collect()
}

/// Full normal form of `f` against `divisors`: no term of the result is
/// divisible by any divisor's leading term.
pub(crate) fn terms_nf(
    f: &TermList,
    divisors: &[TermList],
    field: &FieldDescriptor,
    order: &MonomialOrder,
) -> TermList {
    let mut work = f.clone();
    let mut out: TermList = Vec::new();
    'outer: while let Some((lm, lc)) = work.first().cloned() {
        for g in divisors {
            if g.is_empty() {
                continue;
            }
            let (gm, gc) = &g[0];
            if let Some(q) = lm.div(gm) {
                let factor = field.div(&lc, gc).expect("leading coefficient nonzero");
                let sub = terms_mul_term(g, &q, &factor, field);
                work = terms_add(&work, &terms_neg(&sub, field), field, order);
                continue 'outer;
            }
        }
        out.push((lm, lc));
        work.remove(0);
    }
    out
}

/// Normal form that also records the quotients against each divisor, so that
/// f = sum_i q_i * divisors_i + remainder.
pub(crate) fn terms_nf_with_quotients(
    f: &TermList,
    divisors: &[TermList],
    field: &FieldDescriptor,
    order: &MonomialOrder,
) -> (TermList, Vec<TermList>) {
    let mut work = f.clone();
    let mut out: TermList = Vec::new();
    let mut quots: Vec<TermList> = vec![Vec::new(); divisors.len()];
    'outer: while let Some((lm, lc)) = work.first().cloned() {
        for (i, g) in divisors.iter().enumerate() {
            if g.is_empty() {
                continue;
            }
            let (gm, gc) = &g[0];
            if let Some(q) = lm.div(gm) {
                let factor = field.div(&lc, gc).expect("leading coefficient nonzero");
                let sub = terms_mul_term(g, &q, &factor, field);
                work = terms_add(&work, &terms_neg(&sub, field), field, order);
                quots[i] = terms_add(&quots[i], &[(q, factor)].to_vec(), field, order);
                continue 'outer;
            }
        }
        out.push((lm, lc));
        work.remove(0);
    }
    (out, quots)
}

// ---- ring construction --------------------------------------------------------------

/// Build a ring descriptor. Relations are completed to a reduced Groebner basis
/// in the declared order; all later arithmetic reduces against that basis.
pub fn make_ring(
    field: FieldDescriptor,
    vars: &[&str],
    order: MonomialOrder,
    relations: &[&str],
) -> Result<Ring> {
    let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    for (i, v) in names.iter().enumerate() {
        if names[..i].contains(v) {
            return Err(EngineError::DuplicateVariable(v.clone()));
        }
    }
    let plain = Arc::new(RingData {
        field,
        vars: names.clone(),
        order,
        relations: Vec::new(),
    });
    if relations.is_empty() {
        return Ok(plain);
    }
    let rel_polys: Vec<Polynomial> = relations
        .iter()
        .map(|s| parse_polynomial(&plain, s))
        .collect::<Result<_>>()?;
    let gens: Vec<TermList> = rel_polys
        .into_iter()
        .map(|p| p.terms)
        .filter(|t| !t.is_empty())
        .collect();
    let basis = crate::groebner::buchberger_termlists(gens, &field, &order, None)?;
    Ok(Arc::new(RingData {
        field,
        vars: names,
        order,
        relations: basis,
    }))
}

/// As `make_ring`, but with relation polynomials already in hand (they must live
/// in the plain ring on the same variables).
pub fn make_quotient(plain: &Ring, relations: &[Polynomial]) -> Result<Ring> {
    let gens: Vec<TermList> = relations
        .iter()
        .map(|p| p.terms.clone())
        .filter(|t| !t.is_empty())
        .collect();
    if gens.is_empty() {
        return Ok(plain.clone());
    }
    let basis = crate::groebner::buchberger_termlists(gens, &plain.field, &plain.order, None)?;
    Ok(Arc::new(RingData {
        field: plain.field,
        vars: plain.vars.clone(),
        order: plain.order,
        relations: basis,
    }))
}

// ---- polynomials --------------------------------------------------------------------

/// A polynomial in canonical form: terms sorted descending in the ring order,
/// normal-form-reduced against the ring relations.
#[derive(Debug, Clone)]
pub struct Polynomial {
    pub ring: Ring,
    pub terms: TermList,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        rings_match(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn from_terms(ring: &Ring, raw: Vec<(Monomial, Coeff)>) -> Polynomial {
        let n = normalize_terms(raw, &ring.field, &ring.order);
        let reduced = if ring.relations.is_empty() {
            n
        } else {
            terms_nf(&n, &ring.relations, &ring.field, &ring.order)
        };
        Polynomial {
            ring: ring.clone(),
            terms: reduced,
        }
    }

    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, vec![(Monomial::one(ring.vars.len()), ring.field.one())])
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Polynomial {
        Polynomial::from_terms(ring, vec![(Monomial::one(ring.vars.len()), c)])
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        Polynomial::from_terms(
            ring,
            vec![(Monomial::var(i, ring.vars.len()), ring.field.one())],
        )
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Polynomial> {
        match ring.vars.iter().position(|v| v == name) {
            Some(i) => Ok(Polynomial::var(ring, i)),
            None => Err(EngineError::UnknownVariable(name.to_string())),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() || self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_rings(&self.ring, &other.ring)?;
        let t = terms_add(&self.terms, &other.terms, &self.ring.field, &self.ring.order);
        Ok(Polynomial::from_terms(&self.ring, t))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: terms_neg(&self.terms, &self.ring.field),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_rings(&self.ring, &other.ring)?;
        let t = terms_mul(&self.terms, &other.terms, &self.ring.field, &self.ring.order);
        Ok(Polynomial::from_terms(&self.ring, t))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        Polynomial::from_terms(
            &self.ring,
            terms_scale(&self.terms, c, &self.ring.field),
        )
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Reinterpret in another ring on the same variables (lift to ambient or
    /// project into a quotient); term data is carried over and renormalized.
    pub fn transfer(&self, target: &Ring) -> Polynomial {
        Polynomial::from_terms(target, self.terms.clone())
    }

    /// Variables actually occurring.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.ring.vars.len();
        (0..n)
            .filter(|&i| self.terms.iter().any(|(m, _)| m.0[i] > 0))
            .collect()
    }
}

pub enum PolyOp {
    Add,
    Mul,
    Scale(Coeff),
}

/// Dispatching wrapper over the basic arithmetic.
pub fn poly_op(op: PolyOp, a: &Polynomial, b: Option<&Polynomial>) -> Result<Polynomial> {
    match op {
        PolyOp::Add => a.add(b.ok_or(EngineError::Internal("Add needs two operands".into()))?),
        PolyOp::Mul => a.mul(b.ok_or(EngineError::Internal("Mul needs two operands".into()))?),
        PolyOp::Scale(c) => Ok(a.scale(&c)),
    }
}

pub fn compare_monomials(m1: &Monomial, m2: &Monomial, order: &MonomialOrder) -> Result<Ordering> {
    order.compare(m1, m2)
}

// ---- display ------------------------------------------------------------------------

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl Polynomial {
    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = crate::field::renders_negative(c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let c_abs = if neg { self.ring.field.neg(c) } else { c.clone() };
            let mut parts: Vec<String> = Vec::new();
            if !c_abs.is_one() || m.is_one() {
                parts.push(format!("{}", c_abs));
            }
            for (j, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    parts.push(self.ring.vars[j].clone());
                } else if e > 1 {
                    parts.push(format!("{}^{}", self.ring.vars[j], e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

// ---- parsing ------------------------------------------------------------------------

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn next_tok(&mut self) -> Result<Tok> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        match c {
            b'+' => Ok(Tok::Plus),
            b'-' => Ok(Tok::Minus),
            b'*' => Ok(Tok::Star),
            b'^' => Ok(Tok::Caret),
            b'/' => Ok(Tok::Slash),
            b'(' => Ok(Tok::LParen),
            b')' => Ok(Tok::RParen),
            c if c.is_ascii_digit() => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                s.parse::<i64>()
                    .map(Tok::Int)
                    .map_err(|_| EngineError::Parse(format!("integer literal `{}` out of range", s)))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Tok::Ident(
                    std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string(),
                ))
            }
            c => Err(EngineError::Parse(format!(
                "unexpected character `{}` at byte {}",
                c as char,
                self.pos - 1
            ))),
        }
    }
}

struct PolyParser<'a> {
    ring: &'a Ring,
    toks: Vec<Tok>,
    idx: usize,
}

impl<'a> PolyParser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx]
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.idx].clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut neg = false;
        if *self.peek() == Tok::Minus {
            self.bump();
            neg = true;
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            match self.bump() {
                Tok::Int(e) if e >= 0 => base.pow(e as u32),
                t => Err(EngineError::Parse(format!(
                    "expected nonnegative exponent, found {:?}",
                    t
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Tok::Ident(name) => Polynomial::var_named(self.ring, &name),
            Tok::Int(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        Tok::Int(d) => {
                            let c = self.ring.field.from_ratio(n, d)?;
                            Ok(Polynomial::constant(self.ring, c))
                        }
                        t => Err(EngineError::Parse(format!(
                            "expected denominator after `/`, found {:?}",
                            t
                        ))),
                    }
                } else {
                    Ok(Polynomial::constant(self.ring, self.ring.field.from_i64(n)))
                }
            }
            Tok::LParen => {
                let e = self.expr()?;
                match self.bump() {
                    Tok::RParen => Ok(e),
                    t => Err(EngineError::Parse(format!("expected `)`, found {:?}", t))),
                }
            }
            t => Err(EngineError::Parse(format!(
                "unexpected token {:?} in polynomial",
                t
            ))),
        }
    }
}

/// Parse the shared polynomial text syntax, e.g. `3*x^2*y - 1/2*y^3`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let mut lx = Lexer::new(text);
    let mut toks = Vec::new();
    loop {
        let t = lx.next_tok()?;
        let end = t == Tok::End;
        toks.push(t);
        if end {
            break;
        }
    }
    let mut p = PolyParser { ring, toks, idx: 0 };
    let poly = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(EngineError::Parse(format!(
            "trailing tokens starting at {:?}",
            p.peek()
        )));
    }
    Ok(poly)
}
