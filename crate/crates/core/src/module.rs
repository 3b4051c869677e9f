//! Finitely presented modules, module maps, syzygies and subquotients.
//!
//! A `PresentedModule` is the cokernel of the column span of its presentation
//! matrix inside R^rank. Over a quotient ring R = k[x]/J the implicit
//! relations J * e_i are added to every span computation, so all submodule
//! arithmetic happens in the ambient polynomial ring.

use crate::error::{EngineError, Result};
use crate::groebner::{ideal_intersect, Ideal};
use crate::modgb::{module_gb, module_lift, module_nf, vp_is_zero, Ctx, ModGb, VecPoly};
use crate::poly::{ambient, check_rings, Polynomial, Ring};

/// Columns of a matrix over a ring; every column has the same length (the rank
/// of the target free module).
pub type Columns = Vec<Vec<Polynomial>>;

pub(crate) fn col_to_vecpoly(col: &[Polynomial], amb: &Ring) -> VecPoly {
    col.iter().map(|p| p.transfer(amb).terms.clone()).collect()
}

pub(crate) fn vecpoly_to_col(v: &VecPoly, ring: &Ring) -> Vec<Polynomial> {
    v.iter()
        .map(|t| Polynomial::from_terms(ring, t.clone()))
        .collect()
}

/// Relation columns of the quotient ideal acting on R^rank: g * e_i.
pub(crate) fn quotient_aug(ring: &Ring, rank: usize) -> Vec<VecPoly> {
    let mut out = Vec::new();
    for g in &ring.relations {
        for i in 0..rank {
            let mut v: VecPoly = vec![Vec::new(); rank];
            v[i] = g.clone();
            out.push(v);
        }
    }
    out
}

pub(crate) fn span_ctx(amb: &Ring) -> Ctx<'_> {
    Ctx {
        field: &amb.field,
        order: &amb.order,
        nvars: amb.vars.len(),
    }
}

/// Module Groebner basis of span(cols) + J*R^rank in the ambient ring.
pub(crate) fn span_gb(ring: &Ring, rank: usize, cols: &[VecPoly]) -> Result<ModGb> {
    let amb = ambient(ring);
    let mut all: Vec<VecPoly> = cols.to_vec();
    all.extend(quotient_aug(ring, rank));
    module_gb(&all, rank, span_ctx(&amb), false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedModule {
    pub ring: Ring,
    pub rank: usize,
    /// presentation columns, canonicalized to a reduced module Groebner basis
    pub relations: Columns,
}

impl PresentedModule {
    pub fn new(ring: &Ring, rank: usize, relations: Columns) -> Result<PresentedModule> {
        for col in &relations {
            if col.len() != rank {
                return Err(EngineError::Internal(format!(
                    "presentation column of length {} in a rank-{} module",
                    col.len(),
                    rank
                )));
            }
            for p in col {
                check_rings(ring, &p.ring)?;
            }
        }
        let amb = ambient(ring);
        let cols: Vec<VecPoly> = relations.iter().map(|c| col_to_vecpoly(c, &amb)).collect();
        let gb = span_gb(ring, rank, &cols)?;
        let canon: Columns = gb
            .basis
            .iter()
            .map(|v| vecpoly_to_col(v, ring))
            .filter(|c| c.iter().any(|p| !p.is_zero()))
            .collect();
        Ok(PresentedModule {
            ring: ring.clone(),
            rank,
            relations: canon,
        })
    }

    pub fn zero(ring: &Ring) -> PresentedModule {
        PresentedModule {
            ring: ring.clone(),
            rank: 0,
            relations: Vec::new(),
        }
    }

    pub fn free(ring: &Ring, rank: usize) -> PresentedModule {
        PresentedModule {
            ring: ring.clone(),
            rank,
            relations: Vec::new(),
        }
    }

    /// R/I as a module.
    pub fn cyclic(ring: &Ring, ideal: &Ideal) -> Result<PresentedModule> {
        let cols: Columns = ideal
            .gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| vec![g.clone()])
            .collect();
        PresentedModule::new(ring, 1, cols)
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    fn rel_gb(&self) -> Result<ModGb> {
        let amb = ambient(&self.ring);
        let cols: Vec<VecPoly> = self
            .relations
            .iter()
            .map(|c| col_to_vecpoly(c, &amb))
            .collect();
        span_gb(&self.ring, self.rank, &cols)
    }

    pub fn is_zero_module(&self) -> Result<bool> {
        if self.rank == 0 {
            return Ok(true);
        }
        let amb = ambient(&self.ring);
        let gb = self.rel_gb()?;
        for i in 0..self.rank {
            let mut e: VecPoly = vec![Vec::new(); self.rank];
            e[i] = Polynomial::one(&amb).terms;
            let (rem, _) = module_nf(&e, &gb, span_ctx(&amb));
            if !vp_is_zero(&rem) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Is `v` in the relation span (i.e. zero as an element of the module)?
    pub fn element_is_zero(&self, v: &[Polynomial]) -> Result<bool> {
        if self.rank == 0 {
            return Ok(true);
        }
        let amb = ambient(&self.ring);
        let gb = self.rel_gb()?;
        let (rem, _) = module_nf(&col_to_vecpoly(v, &amb), &gb, span_ctx(&amb));
        Ok(vp_is_zero(&rem))
    }

    pub fn direct_sum(&self, other: &PresentedModule) -> Result<PresentedModule> {
        check_rings(&self.ring, &other.ring)?;
        let rank = self.rank + other.rank;
        let mut cols: Columns = Vec::new();
        for c in &self.relations {
            let mut v = c.clone();
            v.extend(vec![Polynomial::zero(&self.ring); other.rank]);
            cols.push(v);
        }
        for c in &other.relations {
            let mut v = vec![Polynomial::zero(&self.ring); self.rank];
            v.extend(c.clone());
            cols.push(v);
        }
        PresentedModule::new(&self.ring, rank, cols)
    }

    /// Ann(M), the intersection of the column quotients of the presentation.
    pub fn annihilator(&self) -> Result<Ideal> {
        if self.rank == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        let amb = ambient(&self.ring);
        let mut acc: Option<Ideal> = None;
        for i in 0..self.rank {
            // syzygies of [e_i | relations | J-augmentation]: the first
            // coordinates generate { f : f e_i in span }
            let mut cols: Vec<VecPoly> = Vec::new();
            let mut e: VecPoly = vec![Vec::new(); self.rank];
            e[i] = Polynomial::one(&amb).terms;
            cols.push(e);
            for c in &self.relations {
                cols.push(col_to_vecpoly(c, &amb));
            }
            cols.extend(quotient_aug(&self.ring, self.rank));
            let gb = module_gb(&cols, self.rank, span_ctx(&amb), true)?;
            let gens: Vec<Polynomial> = gb
                .syzygies
                .iter()
                .map(|s| Polynomial::from_terms(&self.ring, s[0].clone()))
                .filter(|p| !p.is_zero())
                .collect();
            let idl = Ideal::new(&self.ring, gens)?;
            acc = Some(match acc {
                None => idl,
                Some(prev) => ideal_intersect(&prev, &idl)?,
            });
        }
        Ok(acc.unwrap())
    }
}

/// Columns of the kernel of a matrix between free modules (with implicit
/// quotient relations): generators of { u in R^s : m u = 0 in R^r }.
pub fn syzygies(ring: &Ring, rank: usize, cols: &Columns) -> Result<Columns> {
    let s = cols.len();
    let amb = ambient(ring);
    let mut all: Vec<VecPoly> = cols.iter().map(|c| col_to_vecpoly(c, &amb)).collect();
    let n_listed = all.len();
    all.extend(quotient_aug(ring, rank));
    let gb = module_gb(&all, rank, span_ctx(&amb), true)?;
    let raw: Vec<VecPoly> = gb
        .syzygies
        .iter()
        .map(|syz| syz[..n_listed].to_vec())
        .filter(|v| !vp_is_zero(v))
        .collect();
    // canonicalize the syzygy columns themselves
    let canon = span_gb(ring, s, &raw)?;
    Ok(canon
        .basis
        .iter()
        .map(|v| vecpoly_to_col(v, ring))
        .filter(|c| c.iter().any(|p| !p.is_zero()))
        .collect())
}

/// A map of presented modules, given on generators by a matrix; carries a
/// well-definedness certificate checked at construction.
#[derive(Debug, Clone)]
pub struct ModuleMap {
    pub source: PresentedModule,
    pub target: PresentedModule,
    /// matrix[j] = image of the j-th generator of the source, length target.rank
    pub matrix: Columns,
}

pub(crate) fn apply_matrix(
    ring: &Ring,
    matrix: &Columns,
    target_rank: usize,
    v: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    let mut out = vec![Polynomial::zero(ring); target_rank];
    for (j, col) in matrix.iter().enumerate() {
        if v[j].is_zero() {
            continue;
        }
        for (i, entry) in col.iter().enumerate() {
            out[i] = out[i].add(&entry.mul(&v[j])?)?;
        }
    }
    Ok(out)
}

pub(crate) fn matrix_product(ring: &Ring, a: &Columns, a_rows: usize, b: &Columns) -> Result<Columns> {
    b.iter()
        .map(|col| apply_matrix(ring, a, a_rows, col))
        .collect()
}

impl ModuleMap {
    pub fn new(source: PresentedModule, target: PresentedModule, matrix: Columns) -> Result<ModuleMap> {
        check_rings(&source.ring, &target.ring)?;
        if matrix.len() != source.rank {
            return Err(EngineError::Internal(format!(
                "map matrix has {} columns for a rank-{} source",
                matrix.len(),
                source.rank
            )));
        }
        for col in &matrix {
            if col.len() != target.rank {
                return Err(EngineError::Internal(
                    "map matrix column length does not match target rank".into(),
                ));
            }
        }
        // well-definedness: source relations land in the target relation span
        for (k, rel) in source.relations.iter().enumerate() {
            let img = apply_matrix(&source.ring, &matrix, target.rank, rel)?;
            if !target.element_is_zero(&img)? {
                return Err(EngineError::IllFormedMap(k));
            }
        }
        Ok(ModuleMap {
            source,
            target,
            matrix,
        })
    }

    pub fn zero(source: PresentedModule, target: PresentedModule) -> Result<ModuleMap> {
        let ring = source.ring.clone();
        let m: Columns = (0..source.rank)
            .map(|_| vec![Polynomial::zero(&ring); target.rank])
            .collect();
        ModuleMap::new(source, target, m)
    }

    pub fn identity(m: &PresentedModule) -> Result<ModuleMap> {
        let ring = m.ring.clone();
        let mat: Columns = (0..m.rank)
            .map(|j| {
                (0..m.rank)
                    .map(|i| {
                        if i == j {
                            Polynomial::one(&ring)
                        } else {
                            Polynomial::zero(&ring)
                        }
                    })
                    .collect()
            })
            .collect();
        ModuleMap::new(m.clone(), m.clone(), mat)
    }

    pub fn compose(&self, then: &ModuleMap) -> Result<ModuleMap> {
        // self: A -> B, then: B -> C
        let m = matrix_product(&self.source.ring, &then.matrix, then.target.rank, &self.matrix)?;
        ModuleMap::new(self.source.clone(), then.target.clone(), m)
    }

    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        apply_matrix(&self.source.ring, &self.matrix, self.target.rank, v)
    }

    /// Does this map send every generator into the relation span (zero map)?
    pub fn is_zero_map(&self) -> Result<bool> {
        for col in &self.matrix {
            if !self.target.element_is_zero(col)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let mut m = Vec::with_capacity(self.matrix.len());
        for (a, b) in self.matrix.iter().zip(&other.matrix) {
            let col: Vec<Polynomial> = a
                .iter()
                .zip(b)
                .map(|(x, y)| x.add(y))
                .collect::<Result<_>>()?;
            m.push(col);
        }
        ModuleMap::new(self.source.clone(), self.target.clone(), m)
    }

    pub fn neg(&self) -> Result<ModuleMap> {
        let m: Columns = self
            .matrix
            .iter()
            .map(|c| c.iter().map(|p| p.neg()).collect())
            .collect();
        ModuleMap::new(self.source.clone(), self.target.clone(), m)
    }
}

pub enum SubquotientKind {
    Kernel,
    Image,
    Cokernel,
}

/// Presentation of a kernel, image or cokernel together with its structural map
/// (inclusion into the source or target, or projection from the target).
pub struct Subquotient {
    pub module: PresentedModule,
    /// Kernel: inclusion K -> source. Image: map Im -> target given by the
    /// generator images. Cokernel: projection target -> coker.
    pub structural: ModuleMap,
}

/// Solve { u in R^s : F u in span(T) + J R^r } and return canonical generators.
fn presolve(
    ring: &Ring,
    rank: usize,
    f_cols: &Columns,
    t_cols: &Columns,
) -> Result<Columns> {
    let amb = ambient(ring);
    let s = f_cols.len();
    let mut all: Vec<VecPoly> = f_cols.iter().map(|c| col_to_vecpoly(c, &amb)).collect();
    for c in t_cols {
        all.push(col_to_vecpoly(c, &amb));
    }
    all.extend(quotient_aug(ring, rank));
    let gb = module_gb(&all, rank, span_ctx(&amb), true)?;
    let raw: Vec<VecPoly> = gb
        .syzygies
        .iter()
        .map(|syz| syz[..s].to_vec())
        .filter(|v| !vp_is_zero(v))
        .collect();
    let canon = span_gb(ring, s, &raw)?;
    Ok(canon
        .basis
        .iter()
        .map(|v| vecpoly_to_col(v, ring))
        .filter(|c| c.iter().any(|p| !p.is_zero()))
        .collect())
}

pub fn present_subquotient(kind: SubquotientKind, f: &ModuleMap) -> Result<Subquotient> {
    let ring = f.source.ring.clone();
    match kind {
        SubquotientKind::Cokernel => {
            let mut rels = f.target.relations.clone();
            rels.extend(f.matrix.iter().cloned());
            let coker = PresentedModule::new(&ring, f.target.rank, rels)?;
            let proj = ModuleMap::new(
                f.target.clone(),
                coker.clone(),
                ModuleMap::identity(&f.target)?.matrix,
            )?;
            Ok(Subquotient {
                module: coker,
                structural: proj,
            })
        }
        SubquotientKind::Image => {
            // Im(f) = R^s / { a : F a in span(target relations) }
            let rels = presolve(&ring, f.target.rank, &f.matrix, &f.target.relations)?;
            let im = PresentedModule::new(&ring, f.matrix.len(), rels)?;
            let into = ModuleMap::new(im.clone(), f.target.clone(), f.matrix.clone())?;
            Ok(Subquotient {
                module: im,
                structural: into,
            })
        }
        SubquotientKind::Kernel => {
            // generators: u with f(u) = 0 in the target
            let kappa = presolve(&ring, f.target.rank, &f.matrix, &f.target.relations)?;
            // relations among the kappa inside the source
            let rels = presolve(&ring, f.source.rank, &kappa, &f.source.relations)?;
            let ker = PresentedModule::new(&ring, kappa.len(), rels)?;
            let incl = ModuleMap::new(ker.clone(), f.source.clone(), kappa)?;
            Ok(Subquotient {
                module: ker,
                structural: incl,
            })
        }
    }
}

/// Express `v` (an element of the ambient free module of `inside`) as a
/// combination of the given generator columns, modulo the module's relations.
pub fn lift_through(
    inside: &PresentedModule,
    gens: &Columns,
    v: &[Polynomial],
) -> Result<Option<Vec<Polynomial>>> {
    let ring = &inside.ring;
    let amb = ambient(ring);
    let mut all: Vec<VecPoly> = gens.iter().map(|c| col_to_vecpoly(c, &amb)).collect();
    let n = all.len();
    for c in &inside.relations {
        all.push(col_to_vecpoly(c, &amb));
    }
    all.extend(quotient_aug(ring, inside.rank));
    let gb = module_gb(&all, inside.rank, span_ctx(&amb), false)?;
    match module_lift(&col_to_vecpoly(v, &amb), &gb, span_ctx(&amb)) {
        None => Ok(None),
        Some(co) => Ok(Some(
            co[..n]
                .iter()
                .map(|t| Polynomial::from_terms(ring, t.clone()))
                .collect(),
        )),
    }
}

/// The I-torsion submodule of M together with the least exponent t such that
/// (0 :_M I^t) has stabilized.
pub struct TorsionResult {
    pub submodule: Subquotient,
    pub exponent: u32,
}

fn ideal_power_gens(ideal: &Ideal, t: u32) -> Vec<Polynomial> {
    let ring = &ideal.ring;
    let mut gens = vec![Polynomial::one(ring)];
    for _ in 0..t {
        let mut next = Vec::new();
        for a in &gens {
            for b in &ideal.gens {
                next.push(a.mul(b).unwrap());
            }
        }
        gens = next;
    }
    gens
}

/// Generators of (0 :_M I^t) as columns in R^rank.
fn colon_step(m: &PresentedModule, power_gens: &[Polynomial]) -> Result<Columns> {
    let ring = &m.ring;
    let k = power_gens.len();
    // u is in the colon iff (g_1 u, ..., g_k u) lies in the relation span of M^k
    let stacked_rank = k * m.rank;
    let f_cols: Columns = (0..m.rank)
        .map(|j| {
            let mut col = vec![Polynomial::zero(ring); stacked_rank];
            for (b, g) in power_gens.iter().enumerate() {
                col[b * m.rank + j] = g.clone();
            }
            col
        })
        .collect();
    let mut t_cols: Columns = Vec::new();
    for b in 0..k {
        for rel in &m.relations {
            let mut col = vec![Polynomial::zero(ring); stacked_rank];
            col[b * m.rank..(b + 1) * m.rank].clone_from_slice(rel);
            t_cols.push(col);
        }
    }
    presolve(ring, stacked_rank, &f_cols, &t_cols)
}

/// Are span(a) + rels and span(b) + rels equal inside R^rank?
fn spans_equal(
    ring: &Ring,
    rank: usize,
    rels: &Columns,
    a: &Columns,
    b: &Columns,
) -> Result<bool> {
    let amb = ambient(ring);
    let with = |cols: &Columns| -> Result<ModGb> {
        let mut all: Vec<VecPoly> = cols.iter().map(|c| col_to_vecpoly(c, &amb)).collect();
        for c in rels {
            all.push(col_to_vecpoly(c, &amb));
        }
        span_gb(ring, rank, &all)
    };
    let gb_a = with(a)?;
    let gb_b = with(b)?;
    for c in a {
        let (rem, _) = module_nf(&col_to_vecpoly(c, &amb), &gb_b, span_ctx(&amb));
        if !vp_is_zero(&rem) {
            return Ok(false);
        }
    }
    for c in b {
        let (rem, _) = module_nf(&col_to_vecpoly(c, &amb), &gb_a, span_ctx(&amb));
        if !vp_is_zero(&rem) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Gamma_I(M): the union of the ascending chain (0 :_M I^t).
pub fn torsion_submodule(ideal: &Ideal, m: &PresentedModule) -> Result<TorsionResult> {
    check_rings(&ideal.ring, &m.ring)?;
    if ideal.is_zero_ideal() {
        // Gamma_0 is the identity functor: everything is 0-torsion
        let sub = Subquotient {
            module: m.clone(),
            structural: ModuleMap::identity(m)?,
        };
        return Ok(TorsionResult {
            submodule: sub,
            exponent: 0,
        });
    }
    let ring = &m.ring;
    let mut prev: Columns = Vec::new(); // (0 : I^0) = 0
    let mut t: u32 = 0;
    loop {
        let next = colon_step(m, &ideal_power_gens(ideal, t + 1))?;
        if spans_equal(ring, m.rank, &m.relations, &prev, &next)? {
            break;
        }
        prev = next;
        t += 1;
    }
    // present the stabilized submodule: generators prev, relations among them
    let rels = presolve(ring, m.rank, &prev, &m.relations)?;
    let sub = PresentedModule::new(ring, prev.len(), rels)?;
    let incl = ModuleMap::new(sub.clone(), m.clone(), prev)?;
    Ok(TorsionResult {
        submodule: Subquotient {
            module: sub,
            structural: incl,
        },
        exponent: t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldDescriptor;
    use crate::groebner::ideals_equal;
    use crate::monomial::MonomialOrder;
    use crate::poly::{make_ring, parse_polynomial};

    fn qx() -> Ring {
        make_ring(FieldDescriptor::Rationals, &["x"], MonomialOrder::GrevLex, &[]).unwrap()
    }

    fn qxy() -> Ring {
        make_ring(FieldDescriptor::Rationals, &["x", "y"], MonomialOrder::GrevLex, &[]).unwrap()
    }

    fn axes() -> Ring {
        make_ring(
            FieldDescriptor::Rationals,
            &["x", "y"],
            MonomialOrder::GrevLex,
            &["x*y"],
        )
        .unwrap()
    }

    fn mul_by(ring: &Ring, name: &str) -> ModuleMap {
        let r1 = PresentedModule::free(ring, 1);
        ModuleMap::new(
            r1.clone(),
            r1,
            vec![vec![parse_polynomial(ring, name).unwrap()]],
        )
        .unwrap()
    }

    #[test]
    fn syzygies_of_regular_element_empty() {
        let r = qx();
        let cols = vec![vec![parse_polynomial(&r, "x").unwrap()]];
        let s = syzygies(&r, 1, &cols).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn syzygies_koszul_relation() {
        let r = qxy();
        let cols = vec![
            vec![parse_polynomial(&r, "x").unwrap()],
            vec![parse_polynomial(&r, "y").unwrap()],
        ];
        let s = syzygies(&r, 1, &cols).unwrap();
        assert_eq!(s.len(), 1);
        // the column is (y, -x) up to normalization
        let y = parse_polynomial(&r, "y").unwrap();
        let neg_x = parse_polynomial(&r, "-x").unwrap();
        assert_eq!(s[0], vec![y, neg_x]);
    }

    #[test]
    fn syzygies_in_quotient_ring() {
        let r = axes();
        let cols = vec![vec![parse_polynomial(&r, "x").unwrap()]];
        let s = syzygies(&r, 1, &cols).unwrap();
        // (y) annihilates x in Q[x,y]/(xy)
        assert_eq!(s.len(), 1);
        assert_eq!(s[0], vec![parse_polynomial(&r, "y").unwrap()]);
    }

    #[test]
    fn cokernel_kernel_of_multiplication() {
        let r = qx();
        let f = mul_by(&r, "x");
        let coker = present_subquotient(SubquotientKind::Cokernel, &f).unwrap();
        // R/(x): rank 1, single relation x
        assert_eq!(coker.module.rank, 1);
        assert_eq!(coker.module.relations.len(), 1);
        assert!(!coker.module.is_zero_module().unwrap());

        let ker = present_subquotient(SubquotientKind::Kernel, &f).unwrap();
        assert!(ker.module.is_zero_module().unwrap());
    }

    #[test]
    fn kernel_over_quotient_ring() {
        // Kernel of x on Q[x,y]/(xy) is the ideal (y), with relation x
        let r = axes();
        let f = mul_by(&r, "x");
        let ker = present_subquotient(SubquotientKind::Kernel, &f).unwrap();
        assert_eq!(ker.module.rank, 1);
        assert!(!ker.module.is_zero_module().unwrap());
        // inclusion sends the generator to y
        assert_eq!(
            ker.structural.matrix[0][0],
            parse_polynomial(&r, "y").unwrap()
        );
        // presentation: multiplication by x kills the generator
        let ann = ker.module.annihilator().unwrap();
        assert!(
            ideals_equal(&ann, &Ideal::parse(&r, &["x"]).unwrap()).unwrap()
        );
    }

    #[test]
    fn annihilator_of_cyclic_sum() {
        let r = qxy();
        let mx = PresentedModule::cyclic(&r, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        let my = PresentedModule::cyclic(&r, &Ideal::parse(&r, &["y"]).unwrap()).unwrap();
        let sum = mx.direct_sum(&my).unwrap();
        let ann = sum.annihilator().unwrap();
        assert!(ideals_equal(&ann, &Ideal::parse(&r, &["x*y"]).unwrap()).unwrap());
    }

    #[test]
    fn zero_module_edge_cases() {
        let r = qx();
        let z = PresentedModule::zero(&r);
        assert!(z.is_zero_module().unwrap());
        assert!(ideals_equal(&z.annihilator().unwrap(), &Ideal::unit(&r)).unwrap());
        // R^1 with relation 1 is also zero
        let m = PresentedModule::new(&r, 1, vec![vec![Polynomial::one(&r)]]).unwrap();
        assert!(m.is_zero_module().unwrap());
    }

    #[test]
    fn torsion_of_nilpotent_quotient() {
        // Gamma_(x) of Q[x]/(x^2) is everything, seen at exponent 2
        let r = make_ring(
            FieldDescriptor::Rationals,
            &["x"],
            MonomialOrder::GrevLex,
            &["x^2"],
        )
        .unwrap();
        let m = PresentedModule::free(&r, 1);
        let t = torsion_submodule(&Ideal::parse(&r, &["x"]).unwrap(), &m).unwrap();
        assert_eq!(t.exponent, 2);
        // the inclusion is onto: 1 lies in the span of the torsion generators
        let lifted = lift_through(&m, &t.submodule.structural.matrix, &[Polynomial::one(&r)])
            .unwrap();
        assert!(lifted.is_some());
    }

    #[test]
    fn torsion_of_torsion_free_module() {
        let r = qx();
        let m = PresentedModule::free(&r, 1);
        let t = torsion_submodule(&Ideal::parse(&r, &["x"]).unwrap(), &m).unwrap();
        assert_eq!(t.exponent, 0);
        assert!(t.submodule.module.is_zero_module().unwrap());
    }

    #[test]
    fn torsion_on_the_axes() {
        // Gamma_(x) of Q[x,y]/(xy) is (y), stable already at exponent 1
        let r = axes();
        let m = PresentedModule::free(&r, 1);
        let t = torsion_submodule(&Ideal::parse(&r, &["x"]).unwrap(), &m).unwrap();
        assert_eq!(t.exponent, 1);
        assert_eq!(
            t.submodule.structural.matrix,
            vec![vec![parse_polynomial(&r, "y").unwrap()]]
        );
    }

    #[test]
    fn ill_formed_map_rejected() {
        // R/(x) -> R sending the generator to 1 is not well defined over Q[x]
        let r = qx();
        let src = PresentedModule::cyclic(&r, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        let tgt = PresentedModule::free(&r, 1);
        let res = ModuleMap::new(src, tgt, vec![vec![Polynomial::one(&r)]]);
        assert!(matches!(res, Err(EngineError::IllFormedMap(0))));
    }
}

