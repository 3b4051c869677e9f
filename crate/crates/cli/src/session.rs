//! Parser for the `.aisle` session DSL.
//!
//! A session is a sequence of declarations, one ring per session, every later
//! object tied to it. The grammar is documented in docs/dsl.md; errors carry
//! a line/column position and a short expectation message.

use std::collections::BTreeMap;

use aisle_core::complex::Complex;
use aisle_core::field::FieldDescriptor;
use aisle_core::groebner::Ideal;
use aisle_core::koszul::koszul_complex;
use aisle_core::module::{ModuleMap, PresentedModule};
use aisle_core::monomial::MonomialOrder;
use aisle_core::poly::{make_ring, parse_polynomial, Polynomial, Ring};
use aisle_core::spectrum::{make_filtration, ClosedSet, PrimeIdeal, SpFiltration, SpcSet};
use aisle_core::tstruct::CoaisleEvidence;

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

#[derive(Debug, Clone)]
pub enum Decl {
    IdealDecl(Ideal),
    PrimeDecl(PrimeIdeal),
    ModuleDecl(PresentedModule),
    ComplexDecl(Complex),
    SpcDecl(SpcSet),
    FiltrationDecl(SpFiltration),
    EvidenceDecl(CoaisleEvidence),
}

#[derive(Debug)]
pub struct Session {
    pub ring: Ring,
    pub names: BTreeMap<String, Decl>,
}

impl Session {
    pub fn get(&self, name: &str) -> Result<&Decl, String> {
        self.names
            .get(name)
            .ok_or_else(|| format!("unknown name `{}`", name))
    }
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            line: self.line,
            col: self.col,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    fn ident(&mut self) -> PResult<String> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' {
                self.bump();
            } else {
                break;
            }
        }
        if start == self.pos {
            return self.err("expected an identifier");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn integer(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.bump();
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                self.bump();
            } else {
                break;
            }
        }
        let text = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        text.parse::<i64>()
            .map_err(|_| ParseError {
                line: self.line,
                col: self.col,
                message: "expected an integer".into(),
            })
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let bytes = kw.as_bytes();
        if self.src[self.pos..].starts_with(bytes) {
            let after = self.src.get(self.pos + bytes.len()).copied();
            let boundary = match after {
                Some(c) => !c.is_ascii_alphanumeric() && c != b'_',
                None => true,
            };
            if boundary {
                for _ in 0..bytes.len() {
                    self.bump();
                }
                return true;
            }
        }
        false
    }

    /// Raw text until one of `stops` at bracket depth zero; used to hand
    /// polynomial bodies to the core parser unmodified.
    fn until_balanced(&mut self, stops: &[u8]) -> PResult<String> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0i32;
        loop {
            match self.peek() {
                None => return self.err("unterminated expression"),
                Some(c) => {
                    if depth == 0 && stops.contains(&c) {
                        break;
                    }
                    match c {
                        b'(' | b'[' | b'{' => depth += 1,
                        b')' | b']' | b'}' => {
                            depth -= 1;
                            if depth < 0 {
                                return self.err("unbalanced bracket");
                            }
                        }
                        _ => {}
                    }
                    self.bump();
                }
            }
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos])
            .trim()
            .to_string())
    }
}

fn core_err(s: &Scanner, e: impl std::fmt::Display) -> ParseError {
    ParseError {
        line: s.line,
        col: s.col,
        message: e.to_string(),
    }
}

/// `( p1, p2, ... )` — a parenthesized, comma-separated polynomial list.
fn poly_list(s: &mut Scanner, ring: &Ring) -> PResult<Vec<Polynomial>> {
    s.expect(b'(')?;
    let mut out = Vec::new();
    loop {
        let text = s.until_balanced(&[b',', b')'])?;
        if !text.is_empty() {
            out.push(parse_polynomial(ring, &text).map_err(|e| core_err(s, e))?);
        }
        if s.eat(b',') {
            continue;
        }
        s.expect(b')')?;
        break;
    }
    Ok(out)
}

/// Row-major `[[a, b], [c, d]]`.
fn matrix(s: &mut Scanner, ring: &Ring) -> PResult<Vec<Vec<Polynomial>>> {
    s.expect(b'[')?;
    let mut rows = Vec::new();
    loop {
        s.expect(b'[')?;
        let mut row = Vec::new();
        loop {
            let text = s.until_balanced(&[b',', b']'])?;
            if !text.is_empty() {
                row.push(parse_polynomial(ring, &text).map_err(|e| core_err(s, e))?);
            }
            if s.eat(b',') {
                continue;
            }
            s.expect(b']')?;
            break;
        }
        rows.push(row);
        if s.eat(b',') {
            continue;
        }
        s.expect(b']')?;
        break;
    }
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    if rows.iter().any(|r| r.len() != width) {
        return s.err("matrix rows have unequal length");
    }
    Ok(rows)
}

/// Row-major rows, column-of-relations presentation: coker of the column span.
fn rows_to_columns(rows: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    (0..width)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// `V(x, y) + V(z)` or a declared spcset name.
fn spc_expr(s: &mut Scanner, ring: &Ring, names: &BTreeMap<String, Decl>) -> PResult<SpcSet> {
    s.skip_ws();
    let mut acc: Option<SpcSet> = None;
    loop {
        let piece = if s.eat_keyword("V") {
            let gens = poly_list(s, ring)?;
            let ideal = Ideal::new(ring, gens).map_err(|e| core_err(s, e))?;
            SpcSet::new(ring, vec![ClosedSet::new(ideal)]).map_err(|e| core_err(s, e))?
        } else {
            let name = s.ident()?;
            match names.get(&name) {
                Some(Decl::SpcDecl(v)) => v.clone(),
                Some(_) => return s.err(format!("`{}` is not a spcset", name)),
                None => return s.err(format!("unknown name `{}`", name)),
            }
        };
        acc = Some(match acc {
            None => piece,
            Some(prev) => prev.union(&piece).map_err(|e| core_err(s, e))?,
        });
        if !s.eat(b'+') {
            break;
        }
    }
    Ok(acc.unwrap())
}

fn parse_ring(s: &mut Scanner) -> PResult<Ring> {
    // `Q[x, y]` or `F7[x, y, z]`, optionally `/ (rels)`, then `order grevlex`
    s.skip_ws();
    let field = if s.eat_keyword("Q") {
        FieldDescriptor::Rationals
    } else if s.peek() == Some(b'F') {
        s.bump();
        let p = s.integer()?;
        if p <= 1 {
            return s.err("field modulus must be a prime");
        }
        FieldDescriptor::prime_field(p as u64).map_err(|e| core_err(s, e))?
    } else {
        return s.err("expected a field: `Q` or `F<p>`");
    };
    s.expect(b'[')?;
    let mut vars = Vec::new();
    loop {
        vars.push(s.ident()?);
        if s.eat(b',') {
            continue;
        }
        s.expect(b']')?;
        break;
    }
    let mut rel_texts = Vec::new();
    if s.eat(b'/') {
        s.expect(b'(')?;
        loop {
            let text = s.until_balanced(&[b',', b')'])?;
            if !text.is_empty() {
                rel_texts.push(text);
            }
            if s.eat(b',') {
                continue;
            }
            s.expect(b')')?;
            break;
        }
    }
    let order = if s.eat_keyword("order") {
        let name = s.ident()?;
        match name.as_str() {
            "grevlex" => MonomialOrder::GrevLex,
            "lex" => MonomialOrder::Lex,
            other => return s.err(format!("unknown order `{}`", other)),
        }
    } else {
        MonomialOrder::GrevLex
    };
    let var_refs: Vec<&str> = vars.iter().map(|v| v.as_str()).collect();
    let rel_refs: Vec<&str> = rel_texts.iter().map(|r| r.as_str()).collect();
    make_ring(field, &var_refs, order, &rel_refs).map_err(|e| core_err(s, e))
}

fn parse_complex(
    s: &mut Scanner,
    ring: &Ring,
    names: &BTreeMap<String, Decl>,
) -> PResult<Complex> {
    // `{ 0: M }` or `{ 0: F1 -[[x]]-> 1: F0 -[[y]]-> 2: G }`
    s.expect(b'{')?;
    let lookup = |s: &Scanner, name: &str| -> PResult<PresentedModule> {
        match names.get(name) {
            Some(Decl::ModuleDecl(m)) => Ok(m.clone()),
            Some(_) => Err(core_err(s, format!("`{}` is not a module", name))),
            None => Err(core_err(s, format!("unknown name `{}`", name))),
        }
    };
    let lo = s.integer()?;
    s.expect(b':')?;
    let first = s.ident()?;
    let mut objects = vec![lookup(s, &first)?];
    let mut diffs: Vec<ModuleMap> = Vec::new();
    let mut expected = lo + 1;
    loop {
        s.skip_ws();
        if s.eat(b'}') {
            break;
        }
        s.expect(b'-')?;
        let rows = matrix(s, ring)?;
        s.expect(b'-')?;
        s.expect(b'>')?;
        let deg = s.integer()?;
        if deg != expected {
            return s.err(format!("expected degree {}, found {}", expected, deg));
        }
        s.expect(b':')?;
        let name = s.ident()?;
        let target = lookup(s, &name)?;
        let source = objects.last().unwrap().clone();
        if rows.len() != target.rank || rows.iter().any(|r| r.len() != source.rank) {
            return s.err(format!(
                "differential into degree {} must be a {} x {} matrix",
                deg, target.rank, source.rank
            ));
        }
        let map = ModuleMap::new(source, target.clone(), rows).map_err(|e| core_err(s, e))?;
        diffs.push(map);
        objects.push(target);
        expected += 1;
    }
    Complex::new(ring, lo, objects, diffs).map_err(|e| core_err(s, e))
}

fn parse_filtration(
    s: &mut Scanner,
    ring: &Ring,
    names: &BTreeMap<String, Decl>,
) -> PResult<SpFiltration> {
    // `{ below: V(0); 0: V(x); 1: V(x, y); above: V(1); }`
    s.expect(b'{')?;
    let mut below = None;
    let mut above = None;
    let mut steps: Vec<(i64, SpcSet)> = Vec::new();
    loop {
        s.skip_ws();
        if s.eat(b'}') {
            break;
        }
        if s.eat_keyword("below") {
            s.expect(b':')?;
            below = Some(spc_expr(s, ring, names)?);
        } else if s.eat_keyword("above") {
            s.expect(b':')?;
            above = Some(spc_expr(s, ring, names)?);
        } else {
            let deg = s.integer()?;
            s.expect(b':')?;
            steps.push((deg, spc_expr(s, ring, names)?));
        }
        s.expect(b';')?;
    }
    let below = match below {
        Some(b) => b,
        None => return s.err("filtration needs a `below:` tail"),
    };
    let above = match above {
        Some(a) => a,
        None => return s.err("filtration needs an `above:` tail"),
    };
    if steps.is_empty() {
        return s.err("filtration needs at least one represented step");
    }
    let lo = steps[0].0;
    for (i, (deg, _)) in steps.iter().enumerate() {
        if *deg != lo + i as i64 {
            return s.err(format!("step degrees must be consecutive from {}", lo));
        }
    }
    let hi = lo + steps.len() as i64 - 1;
    let values = steps.into_iter().map(|(_, v)| v).collect();
    make_filtration(ring, lo, hi, values, below, above).map_err(|e| core_err(s, e))
}

fn parse_evidence(
    s: &mut Scanner,
    names: &BTreeMap<String, Decl>,
) -> PResult<CoaisleEvidence> {
    // `{ primes: p, q; edges: p < q; assert: (q, 1) in V, (p, 0) not in V; }`
    s.expect(b'{')?;
    let mut primes: Vec<(String, PrimeIdeal)> = Vec::new();
    let mut edges = Vec::new();
    let mut assertions = Vec::new();
    let index_of = |s: &Scanner, primes: &[(String, PrimeIdeal)], name: &str| -> PResult<usize> {
        primes
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| core_err(s, format!("`{}` is not a listed prime", name)))
    };
    loop {
        s.skip_ws();
        if s.eat(b'}') {
            break;
        }
        if s.eat_keyword("primes") {
            s.expect(b':')?;
            loop {
                let name = s.ident()?;
                match names.get(&name) {
                    Some(Decl::PrimeDecl(p)) => primes.push((name, p.clone())),
                    Some(_) => return s.err(format!("`{}` is not a prime", name)),
                    None => return s.err(format!("unknown name `{}`", name)),
                }
                if !s.eat(b',') {
                    break;
                }
            }
        } else if s.eat_keyword("edges") {
            s.expect(b':')?;
            loop {
                let small = s.ident()?;
                s.expect(b'<')?;
                let large = s.ident()?;
                let i = index_of(s, &primes, &small)?;
                let j = index_of(s, &primes, &large)?;
                edges.push((i, j));
                if !s.eat(b',') {
                    break;
                }
            }
        } else if s.eat_keyword("assert") {
            s.expect(b':')?;
            loop {
                s.expect(b'(')?;
                let name = s.ident()?;
                s.expect(b',')?;
                let shift = s.integer()?;
                s.expect(b')')?;
                let positive = if s.eat_keyword("not") {
                    if !s.eat_keyword("in") {
                        return s.err("expected `in V`");
                    }
                    false
                } else if s.eat_keyword("in") {
                    true
                } else {
                    return s.err("expected `in V` or `not in V`");
                };
                if !s.eat_keyword("V") {
                    return s.err("expected `V`");
                }
                let i = index_of(s, &primes, &name)?;
                assertions.push((i, shift, positive));
                if !s.eat(b',') {
                    break;
                }
            }
        } else {
            return s.err("expected `primes:`, `edges:` or `assert:`");
        }
        s.expect(b';')?;
    }
    if primes.is_empty() {
        return s.err("evidence needs a nonempty `primes:` list");
    }
    Ok(CoaisleEvidence {
        primes: primes.into_iter().map(|(_, p)| p).collect(),
        edges,
        assertions,
    })
}

pub fn parse_session(text: &str) -> PResult<Session> {
    let mut s = Scanner::new(text);
    let mut ring: Option<Ring> = None;
    let mut names: BTreeMap<String, Decl> = BTreeMap::new();
    while !s.at_end() {
        let keyword = s.ident()?;
        if keyword == "ring" {
            if ring.is_some() {
                return s.err("only one ring per session");
            }
            let _name = s.ident()?;
            s.expect(b'=')?;
            ring = Some(parse_ring(&mut s)?);
            s.expect(b';')?;
            continue;
        }
        let ring = match &ring {
            Some(r) => r.clone(),
            None => return s.err("no ring declared yet; the first declaration must be a ring"),
        };
        let name = s.ident()?;
        if names.contains_key(&name) {
            return s.err(format!("duplicate name `{}`", name));
        }
        s.expect(b'=')?;
        let decl = match keyword.as_str() {
            "ideal" => {
                let gens = poly_list(&mut s, &ring)?;
                Decl::IdealDecl(Ideal::new(&ring, gens).map_err(|e| core_err(&s, e))?)
            }
            "prime" => {
                let gens = poly_list(&mut s, &ring)?;
                s.eat_keyword("assert");
                let ideal = Ideal::new(&ring, gens).map_err(|e| core_err(&s, e))?;
                Decl::PrimeDecl(PrimeIdeal::assert(ideal).map_err(|e| core_err(&s, e))?)
            }
            "module" => {
                if s.eat_keyword("coker") {
                    let rows = matrix(&mut s, &ring)?;
                    let rank = rows.len();
                    let cols = rows_to_columns(&rows);
                    Decl::ModuleDecl(
                        PresentedModule::new(&ring, rank, cols).map_err(|e| core_err(&s, e))?,
                    )
                } else if s.eat_keyword("free") {
                    let rank = s.integer()?;
                    if rank < 0 {
                        return s.err("free rank must be nonnegative");
                    }
                    Decl::ModuleDecl(PresentedModule::free(&ring, rank as usize))
                } else if s.eat_keyword("cyclic") {
                    let gens = poly_list(&mut s, &ring)?;
                    let ideal = Ideal::new(&ring, gens).map_err(|e| core_err(&s, e))?;
                    Decl::ModuleDecl(
                        PresentedModule::cyclic(&ring, &ideal).map_err(|e| core_err(&s, e))?,
                    )
                } else {
                    return s.err("expected `coker`, `free` or `cyclic`");
                }
            }
            "complex" => Decl::ComplexDecl(parse_complex(&mut s, &ring, &names)?),
            "koszul" => {
                if !s.eat_keyword("K") {
                    return s.err("expected `K(...)`");
                }
                let gens = poly_list(&mut s, &ring)?;
                Decl::ComplexDecl(
                    koszul_complex(&gens)
                        .map_err(|e| core_err(&s, e))?
                        .underlying,
                )
            }
            "spcset" => Decl::SpcDecl(spc_expr(&mut s, &ring, &names)?),
            "filtration" => Decl::FiltrationDecl(parse_filtration(&mut s, &ring, &names)?),
            "evidence" => Decl::EvidenceDecl(parse_evidence(&mut s, &names)?),
            other => return s.err(format!("unknown declaration keyword `{}`", other)),
        };
        s.expect(b';')?;
        names.insert(name, decl);
    }
    match ring {
        Some(ring) => Ok(Session { ring, names }),
        None => Err(ParseError {
            line: 1,
            col: 1,
            message: "empty session: no ring declared".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoke_parse() {
        let s = parse_session("ring R = Q[x,y] order grevlex; ideal I = (x*y);").unwrap();
        assert!(matches!(s.get("I").unwrap(), Decl::IdealDecl(_)));
    }

    #[test]
    fn ideal_before_ring_rejected() {
        let e = parse_session("ideal I = (x);").unwrap_err();
        assert!(e.message.contains("no ring"));
        assert_eq!(e.line, 1);
    }

    #[test]
    fn filtration_round_trip() {
        let s = parse_session(
            "ring R = Q[x]; filtration phi = { below: V(0); 0: V(x); above: V(1); };",
        )
        .unwrap();
        match s.get("phi").unwrap() {
            Decl::FiltrationDecl(phi) => {
                assert_eq!((phi.lo, phi.hi), (0, 0));
                assert!(phi.above_hi.is_empty_set());
            }
            _ => panic!("not a filtration"),
        }
    }

    #[test]
    fn complex_with_differential() {
        let s = parse_session(
            "ring R = Q[x]; module F = free 1; complex X = { 0: F -[[x]]-> 1: F };",
        )
        .unwrap();
        match s.get("X").unwrap() {
            Decl::ComplexDecl(x) => assert_eq!((x.lo, x.hi), (0, 1)),
            _ => panic!("not a complex"),
        }
    }

    #[test]
    fn evidence_block() {
        let s = parse_session(
            "ring R = Q[x]; prime p0 = (0) assert; prime px = (x) assert; \
             evidence E = { primes: p0, px; edges: p0 < px; assert: (px, 1) in V; };",
        )
        .unwrap();
        match s.get("E").unwrap() {
            Decl::EvidenceDecl(e) => {
                assert_eq!(e.primes.len(), 2);
                assert_eq!(e.edges, vec![(0, 1)]);
                assert_eq!(e.assertions, vec![(1, 1, true)]);
            }
            _ => panic!("not evidence"),
        }
    }

    #[test]
    fn forward_reference_rejected() {
        let e = parse_session("ring R = Q[x]; complex X = { 0: M };").unwrap_err();
        assert!(e.message.contains("unknown name"));
    }

    #[test]
    fn duplicate_name_rejected() {
        let e = parse_session("ring R = Q[x]; ideal I = (x); ideal I = (x);").unwrap_err();
        assert!(e.message.contains("duplicate"));
    }

    #[test]
    fn quotient_ring_syntax() {
        let s = parse_session("ring R = Q[x] / (x^2) order grevlex; ideal I = (x);").unwrap();
        assert_eq!(s.ring.relations.len(), 1);
    }
}
