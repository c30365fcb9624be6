//! Images of Hecke-algebra elements under the representation generated by an
//! R-matrix: generators, baxterized intertwiners, Jucys-Murphy elements and
//! the matrix units labelled by standard tableaux.
//!
//! Tableau entries and tensor strands are matched right to left: the abstract
//! generator `σ_i` of `H_k` acts as `R_{k-i}` on `V^{⊗k}`. With this choice
//! the inclusion `H_{k-1} ⊂ H_k` that appends the entry `k` to a tableau
//! becomes the embedding of operators into the last `k-1` strands, and shifting
//! `σ_i ↦ σ_{i+1}` becomes placement into the leading strands.
//!
//! Diagonal units are spectral projectors of the additive Jucys-Murphy
//! elements `X_1 = 0`, `X_{j+1} = σ_j X_j σ_j + σ_j`, whose eigenvalue on a cell
//! of content `c` is `q^c c_q`. Unlike the multiplicative elements
//! `1 + (q - q^{-1}) X_j`, these stay separating at `q = 1`.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rmatrix::{hecke_check, yang_baxter_check, RMatrixSpec};
use crate::scalars::{content_eigenvalue, omega, qnum, Coeff, Context, Scalar};
use crate::tableaux::{content, standard_tableaux, Partition, StandardTableau, Transposed};
use crate::tensorop::SparseOperator;

pub type Op<X> = SparseOperator<<X as Context>::C>;

/// How abstract generators are matched with tensor strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrandOrder {
    /// `σ_i ↦ R_{k-i}`; the order used throughout.
    Reversed,
    /// `σ_i ↦ R_i`.
    Forward,
}

pub struct HeckeRep<X: Context> {
    ctx: X,
    spec: RMatrixSpec,
    r: Op<X>,
    order: StrandOrder,
    gens: Mutex<HashMap<usize, Arc<Vec<Op<X>>>>>,
    top_jm: Mutex<HashMap<usize, Arc<Op<X>>>>,
    units: Mutex<HashMap<StandardTableau, Arc<Op<X>>>>,
}

impl<X: Context> HeckeRep<X> {
    /// Fails unless `R` satisfies the braid and Hecke relations in `ctx`.
    pub fn new(spec: &RMatrixSpec, ctx: X) -> Result<Self> {
        Self::with_order(spec, ctx, StrandOrder::Reversed)
    }

    pub fn with_order(spec: &RMatrixSpec, ctx: X, order: StrandOrder) -> Result<Self> {
        if !yang_baxter_check(spec, &ctx)? {
            return Err(Error::VerificationFailed(format!("{} fails the braid relation", spec.label)));
        }
        if !hecke_check(spec, &ctx)? {
            return Err(Error::VerificationFailed(format!("{} fails the Hecke condition in {}", spec.label, ctx.label())));
        }
        let r = spec.lift(&ctx)?;
        Ok(HeckeRep {
            ctx,
            spec: spec.clone(),
            r,
            order,
            gens: Mutex::default(),
            top_jm: Mutex::default(),
            units: Mutex::default(),
        })
    }

    pub fn ctx(&self) -> &X {
        &self.ctx
    }

    pub fn spec(&self) -> &RMatrixSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.r.n()
    }

    pub fn order(&self) -> StrandOrder {
        self.order
    }

    pub fn identity(&self, k: usize) -> Result<Op<X>> {
        SparseOperator::identity(self.n(), k)
    }

    pub fn lift(&self, s: &Scalar) -> Result<X::C> {
        self.ctx.lift(s)
    }

    /// `R_1, …, R_{k-1}` on `V^{⊗k}`.
    pub fn generators(&self, k: usize) -> Result<Arc<Vec<Op<X>>>> {
        if let Some(g) = self.gens.lock().unwrap().get(&k) {
            return Ok(g.clone());
        }
        let g = Arc::new((1..k).map(|i| self.r.embed_at(i, k)).collect::<Result<Vec<_>>>()?);
        self.gens.lock().unwrap().insert(k, g.clone());
        Ok(g)
    }

    /// `R_i` on `V^{⊗k}`.
    pub fn generator(&self, k: usize, i: usize) -> Result<Op<X>> {
        if i == 0 || i >= k {
            return Err(Error::Range(format!("R_{i} undefined at arity {k}")));
        }
        Ok(self.generators(k)?[i - 1].clone())
    }

    /// Image of the abstract generator `σ_i` of `H_k`.
    pub fn abstract_generator(&self, k: usize, i: usize) -> Result<Op<X>> {
        if i == 0 || i >= k {
            return Err(Error::Range(format!("σ_{i} undefined in H_{k}")));
        }
        match self.order {
            StrandOrder::Reversed => self.generator(k, k - i),
            StrandOrder::Forward => self.generator(k, i),
        }
    }

    fn shift_coefficient(&self, x: i32) -> Result<X::C> {
        if x == 0 {
            return Err(Error::Domain("σ(x) needs x != 0".into()));
        }
        let c = Scalar::q_pow(-x).div(&qnum(x))?;
        self.lift(&c).map_err(|_| Error::DegenerateQ(format!("{x}_q vanishes")))
    }

    /// `R_i + (q^{-x}/x_q)·Id` on `V^{⊗k}`.
    pub fn sigma_shift(&self, k: usize, i: usize, x: i32) -> Result<Op<X>> {
        let c = self.shift_coefficient(x)?;
        Ok(self.generator(k, i)?.add_identity(&c))
    }

    /// `σ_i(x)` of `H_k`, i.e. [`Self::sigma_shift`] on the strand matched with `σ_i`.
    pub fn intertwiner(&self, k: usize, i: usize, x: i32) -> Result<Op<X>> {
        let c = self.shift_coefficient(x)?;
        Ok(self.abstract_generator(k, i)?.add_identity(&c))
    }

    /// Multiplicative Jucys-Murphy elements `J_1 = Id`, `J_{i+1} = R_i J_i R_i`.
    pub fn jm_elements(&self, k: usize) -> Result<Vec<Op<X>>> {
        let mut out = vec![self.identity(k)?];
        for i in 1..k {
            let r = self.generator(k, i)?;
            let next = r.mul(&out[i - 1])?.mul(&r)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Additive Jucys-Murphy elements `X_1, …, X_k` of `H_k`.
    pub fn additive_jm_elements(&self, k: usize) -> Result<Vec<Op<X>>> {
        let mut out = vec![SparseOperator::zero(self.n(), k)?];
        for j in 1..k {
            let g = self.abstract_generator(k, j)?;
            let next = g.mul(&out[j - 1])?.mul(&g)?.add(&g)?;
            out.push(next);
        }
        Ok(out)
    }

    fn top_jm(&self, k: usize) -> Result<Arc<Op<X>>> {
        if let Some(x) = self.top_jm.lock().unwrap().get(&k) {
            return Ok(x.clone());
        }
        let x = Arc::new(self.additive_jm_elements(k)?.pop().expect("k >= 1"));
        self.top_jm.lock().unwrap().insert(k, x.clone());
        Ok(x)
    }

    /// Places an operator of `H_{k-1}` into `H_k`.
    fn widen(&self, x: &Op<X>) -> Result<Op<X>> {
        let k = x.arity() + 1;
        match self.order {
            StrandOrder::Reversed => x.embed_at(2, k),
            StrandOrder::Forward => x.embed_at(1, k),
        }
    }

    /// Image of the primitive idempotent `E_t`.
    pub fn diagonal_unit(&self, t: &StandardTableau) -> Result<Arc<Op<X>>> {
        if let Some(u) = self.units.lock().unwrap().get(t) {
            return Ok(u.clone());
        }
        let k = t.size();
        if k == 0 {
            return Err(Error::Range("empty tableau has no operator image".into()));
        }
        let unit = if k == 1 {
            self.identity(1)?
        } else {
            let parent = t.without_largest();
            let parent_unit = self.diagonal_unit(&parent)?;
            let mut acc = self.widen(&parent_unit)?;
            let x = self.top_jm(k)?;
            let ct = t.content_of(k).expect("entry present");
            let et = content_eigenvalue(ct);
            for cell in parent.shape().addable_cells() {
                let c = content(cell);
                if c == ct {
                    continue;
                }
                let ec = content_eigenvalue(c);
                let denom = self.lift(&et.sub(&ec))?;
                let inv = denom
                    .inv()
                    .ok_or_else(|| Error::DegenerateQ(format!("eigenvalues of contents {ct} and {c} coincide")))?;
                let shifted = x.add_identity(&self.lift(&ec)?.neg());
                acc = acc.mul(&shifted)?.scale(&inv);
            }
            acc
        };
        let unit = Arc::new(unit);
        self.units.lock().unwrap().insert(t.clone(), unit.clone());
        Ok(unit)
    }

    /// The pair `(E_{α,π_k(α)}, E_{π_k(α),α})` with `α = t`.
    pub fn offdiagonal_unit(&self, t: &StandardTableau, k: usize) -> Result<OffDiagonal<X>> {
        let ell = t.ell(k)?;
        let target = match t.apply_transposition(k)? {
            Transposed::Standard(b) => b,
            Transposed::NonStandard => return Err(Error::NonStandardTarget),
        };
        let size = t.size();
        let e = self.diagonal_unit(t)?;
        let s = self.intertwiner(size, k, ell)?;
        let w_fwd = self.lift(&omega(ell)?)?;
        let w_bwd = self.lift(&omega(-ell)?)?;
        Ok(OffDiagonal {
            target,
            forward: e.mul(&s)?.scale(&w_fwd),
            backward: s.mul(&e)?.scale(&w_bwd),
        })
    }

    /// `E_{αβ}` for tableaux of one shape, built along a shortest chain of
    /// transpositions.
    pub fn unit(&self, alpha: &StandardTableau, beta: &StandardTableau) -> Result<Op<X>> {
        if alpha.shape() != beta.shape() {
            return Err(Error::Shape("matrix units need tableaux of one shape".into()));
        }
        if alpha == beta {
            return Ok((*self.diagonal_unit(alpha)?).clone());
        }
        let path = transposition_path(alpha, beta);
        let mut acc: Option<Op<X>> = None;
        let mut cur = alpha.clone();
        for k in path {
            let step = self.offdiagonal_unit(&cur, k)?;
            acc = Some(match acc {
                None => step.forward,
                Some(a) => a.mul(&step.forward)?,
            });
            cur = step.target;
        }
        Ok(acc.expect("distinct tableaux need at least one step"))
    }

    /// All diagonal units of weight `k`, in shape then tableau order.
    pub fn all_diagonal_units(&self, k: usize) -> Result<Vec<(StandardTableau, Arc<Op<X>>)>> {
        let mut out = Vec::new();
        for shape in Partition::all_of(k) {
            for t in standard_tableaux(&shape) {
                let u = self.diagonal_unit(&t)?;
                out.push((t, u));
            }
        }
        Ok(out)
    }
}

/// Off-diagonal units attached to an adjacent transposition.
pub struct OffDiagonal<X: Context> {
    pub target: StandardTableau,
    /// `E_{α,π_k(α)} = ω(ℓ) E_α σ_k(ℓ)`
    pub forward: Op<X>,
    /// `E_{π_k(α),α} = ω(-ℓ) σ_k(ℓ) E_α`
    pub backward: Op<X>,
}

/// Transposition indices leading from `a` to `b` through standard tableaux.
pub fn transposition_path(a: &StandardTableau, b: &StandardTableau) -> Vec<usize> {
    let n = a.size();
    let mut prev: HashMap<StandardTableau, (StandardTableau, usize)> = HashMap::new();
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == b {
            break;
        }
        for k in 1..n {
            if let Ok(Transposed::Standard(next)) = cur.apply_transposition(k) {
                if &next != a && !prev.contains_key(&next) {
                    prev.insert(next.clone(), (cur.clone(), k));
                    queue.push_back(next);
                }
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = b.clone();
    while &cur != a {
        let (p, k) = prev[&cur].clone();
        path.push(k);
        cur = p;
    }
    path.reverse();
    path
}

/// `Id^{⊗i} ⊗ x ⊗ Id^{⊗(total-k-i)}`: the image of `x` under `σ_j ↦ σ_{j+i}`.
pub fn embed_shift<C: Coeff>(x: &SparseOperator<C>, i: usize, total: usize) -> Result<SparseOperator<C>> {
    if x.arity() + i > total {
        return Err(Error::Range(format!("shift {i} of arity {} exceeds {total}", x.arity())));
    }
    x.embed_at(i + 1, total)
}

/// Outcome of the matrix-unit checks at one arity.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct UnitSuiteReport {
    pub arity: usize,
    pub units: usize,
    /// `Σ_α E_α = Id`.
    pub completeness: bool,
    /// `E_{αβ} E_{γτ} = δ_{βγ} E_{ατ}` across all shapes.
    pub multiplication_table: bool,
    /// Units of arity `k-1` placed on the trailing strands split into the
    /// units of the tableaux containing them; `None` at arity 1.
    pub branching: Option<bool>,
    pub first_failure: Option<String>,
}

impl UnitSuiteReport {
    pub fn passed(&self) -> bool {
        self.completeness && self.multiplication_table && self.branching != Some(false)
    }
}

/// Checks completeness, the full multiplication table and branching at arity `k`.
pub fn unit_suite<X: Context>(rep: &HeckeRep<X>, k: usize) -> Result<UnitSuiteReport> {
    let mut first_failure = None;
    let mut fail = |msg: String| {
        if first_failure.is_none() {
            first_failure = Some(msg);
        }
    };
    let mut units: Vec<(StandardTableau, StandardTableau, Op<X>)> = Vec::new();
    for shape in Partition::all_of(k) {
        let tabs = standard_tableaux(&shape);
        for a in &tabs {
            for b in &tabs {
                units.push((a.clone(), b.clone(), rep.unit(a, b)?));
            }
        }
    }
    let mut sum = SparseOperator::zero(rep.n(), k)?;
    for (a, b, e) in &units {
        if a == b {
            sum = sum.add(e)?;
        }
    }
    let completeness = sum.is_identity();
    if !completeness {
        fail(format!("units of arity {k} do not sum to the identity"));
    }
    let lookup: HashMap<(&StandardTableau, &StandardTableau), &Op<X>> = units.iter().map(|(a, b, e)| ((a, b), e)).collect();
    let mut multiplication_table = true;
    for (a, b, e1) in &units {
        for (c, d, e2) in &units {
            let prod = e1.mul(e2)?;
            let ok = if b == c { &prod == lookup[&(a, d)] } else { prod.is_zero() };
            if !ok {
                multiplication_table = false;
                fail(format!("E[{a},{b}]·E[{c},{d}] is wrong"));
            }
        }
    }
    let branching = if k >= 2 {
        let mut ok = true;
        for alpha in crate::tableaux::all_standard_tableaux(k - 1) {
            let e = rep.diagonal_unit(&alpha)?;
            let lhs = embed_shift(&e, 1, k)?;
            let mut rhs = SparseOperator::zero(rep.n(), k)?;
            for beta in crate::tableaux::all_standard_tableaux(k) {
                if alpha.is_included_in(&beta) {
                    let e = rep.diagonal_unit(&beta)?;
                    rhs = rhs.add(&e)?;
                }
            }
            if lhs != rhs {
                ok = false;
                fail(format!("unit of {alpha} does not branch at arity {k}"));
            }
        }
        Some(ok)
    } else {
        None
    };
    Ok(UnitSuiteReport { arity: k, units: units.len(), completeness, multiplication_table, branching, first_failure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::{dj_gl, dj_glmn, super_permutation};
    use crate::scalars::{AtQ, Rational, Symbolic};

    fn t(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn rep11() -> HeckeRep<Symbolic> {
        HeckeRep::new(&dj_glmn(1, 1).unwrap(), Symbolic).unwrap()
    }

    #[test]
    fn arity_two_units_are_spectral_projectors() {
        let rep = rep11();
        let r = rep.generator(2, 1).unwrap();
        let q2 = qnum(2).inv().unwrap();
        let sym = r.add_identity(&Scalar::q_pow(-1)).scale(&q2);
        let anti = r.neg().add_identity(&Scalar::q()).scale(&q2);
        assert_eq!(*rep.diagonal_unit(&t(&[&[1, 2]])).unwrap(), sym);
        assert_eq!(*rep.diagonal_unit(&t(&[&[1], &[2]])).unwrap(), anti);
        assert!(sym.add(&anti).unwrap().is_identity());
    }

    #[test]
    fn units_resolve_identity_and_are_orthogonal() {
        for rep in [rep11(), HeckeRep::new(&dj_gl(2).unwrap(), Symbolic).unwrap()] {
            let units = rep.all_diagonal_units(3).unwrap();
            let mut sum = SparseOperator::zero(rep.n(), 3).unwrap();
            for (a, ea) in &units {
                sum = sum.add(ea).unwrap();
                for (b, eb) in &units {
                    let prod = ea.mul(eb).unwrap();
                    if a == b {
                        assert_eq!(&prod, &**ea, "idempotent {a}");
                    } else {
                        assert!(prod.is_zero(), "orthogonal {a} {b}");
                    }
                }
            }
            assert!(sum.is_identity());
        }
    }

    #[test]
    fn gl2_antisymmetrizer_of_three_vanishes() {
        let rep = HeckeRep::new(&dj_gl(2).unwrap(), Symbolic).unwrap();
        assert!(rep.diagonal_unit(&t(&[&[1], &[2], &[3]])).unwrap().is_zero());
        assert!(!rep.diagonal_unit(&t(&[&[1, 2], &[3]])).unwrap().is_zero());
    }

    #[test]
    fn top_jm_acts_by_content_eigenvalue() {
        let rep = rep11();
        for k in 2..=3 {
            let xs = rep.additive_jm_elements(k).unwrap();
            for (tab, e) in rep.all_diagonal_units(k).unwrap() {
                for j in 1..=k {
                    let c = rep.lift(&content_eigenvalue(tab.content_of(j).unwrap())).unwrap();
                    assert_eq!(xs[j - 1].mul(&e).unwrap(), e.scale(&c), "{tab} entry {j}");
                }
            }
        }
    }

    #[test]
    fn multiplicative_jm_elements() {
        let rep = rep11();
        let j = rep.jm_elements(3).unwrap();
        let r1 = rep.generator(3, 1).unwrap();
        assert_eq!(j[1], r1.mul(&r1).unwrap());
        for a in &j {
            for b in &j {
                assert!(a.commutator(b).unwrap().is_zero());
            }
        }
        let sym = rep.diagonal_unit(&t(&[&[1, 2]])).unwrap();
        let j2 = &rep.jm_elements(2).unwrap()[1];
        assert_eq!(j2.mul(&sym).unwrap(), sym.scale(&Scalar::q_pow(2)));
        // (J_2 - q^2)(J_2 - q^{-2}) = 0
        let p = j2.add_identity(&Scalar::q_pow(2).neg()).mul(&j2.add_identity(&Scalar::q_pow(-2).neg())).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn intertwiners_move_units() {
        let rep = rep11();
        for n in 2..=3 {
            for alpha in crate::tableaux::all_standard_tableaux(n) {
                let ea = rep.diagonal_unit(&alpha).unwrap();
                for k in 1..n {
                    let ell = alpha.ell(k).unwrap();
                    let s = rep.intertwiner(n, k, ell).unwrap();
                    match alpha.apply_transposition(k).unwrap() {
                        Transposed::Standard(beta) => {
                            let eb = rep.diagonal_unit(&beta).unwrap();
                            let sm = rep.intertwiner(n, k, -ell).unwrap();
                            assert_eq!(s.mul(&ea).unwrap(), eb.mul(&sm).unwrap(), "{alpha} k={k}");
                            assert_eq!(ea.mul(&s).unwrap(), sm.mul(&eb).unwrap(), "{alpha} k={k}");
                        }
                        Transposed::NonStandard => {
                            assert!(s.mul(&ea).unwrap().is_zero());
                            assert!(ea.mul(&s).unwrap().is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn offdiagonal_units_multiply_back() {
        let rep = rep11();
        let alpha = t(&[&[1, 2], &[3]]);
        let off = rep.offdiagonal_unit(&alpha, 2).unwrap();
        assert_eq!(off.target, t(&[&[1, 3], &[2]]));
        let ea = rep.diagonal_unit(&alpha).unwrap();
        let eb = rep.diagonal_unit(&off.target).unwrap();
        assert_eq!(off.forward.mul(&off.backward).unwrap(), *ea);
        assert_eq!(off.backward.mul(&off.forward).unwrap(), *eb);
        assert!(off.forward.mul(&off.forward).unwrap().is_zero());
        assert!(matches!(rep.offdiagonal_unit(&alpha, 1), Err(Error::NonStandardTarget)));
    }

    #[test]
    fn conjugating_by_intertwiners_reproduces_projectors() {
        let rep = rep11();
        for n in 2..=3 {
            for alpha in crate::tableaux::all_standard_tableaux(n) {
                for k in 1..n {
                    if let Transposed::Standard(beta) = alpha.apply_transposition(k).unwrap() {
                        let ell = alpha.ell(k).unwrap();
                        let s = rep.intertwiner(n, k, ell).unwrap();
                        let c = qnum(ell + 1).mul(&qnum(ell - 1)).div(&qnum(ell).mul(&qnum(ell))).unwrap();
                        let chain = s.mul(&rep.diagonal_unit(&alpha).unwrap()).unwrap().mul(&s).unwrap();
                        assert_eq!(chain.scale(&c.inv().unwrap()), *rep.diagonal_unit(&beta).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_identities() {
        let rep = rep11();
        for x in [2, 3] {
            let a = rep.sigma_shift(2, 1, x).unwrap().mul(&rep.sigma_shift(2, 1, -x).unwrap()).unwrap();
            let c = qnum(x + 1).mul(&qnum(x - 1)).div(&qnum(x).mul(&qnum(x))).unwrap();
            assert_eq!(a.is_scalar_multiple_of_identity(), Some(c));
        }
        let (x, y) = (1, 2);
        let lhs = rep
            .sigma_shift(3, 1, x)
            .unwrap()
            .mul(&rep.sigma_shift(3, 2, x + y).unwrap())
            .unwrap()
            .mul(&rep.sigma_shift(3, 1, y).unwrap())
            .unwrap();
        let rhs = rep
            .sigma_shift(3, 2, y)
            .unwrap()
            .mul(&rep.sigma_shift(3, 1, x + y).unwrap())
            .unwrap()
            .mul(&rep.sigma_shift(3, 2, x).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(rep.sigma_shift(2, 1, 1).unwrap(), rep.generator(2, 1).unwrap().add_identity(&Scalar::q_pow(-1)));
        assert!(matches!(rep.sigma_shift(2, 1, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn shifted_units_branch_into_containing_tableaux() {
        let rep = rep11();
        for (k, m) in [(2, 3), (1, 3)] {
            for alpha in crate::tableaux::all_standard_tableaux(k) {
                let lhs = embed_shift(&rep.diagonal_unit(&alpha).unwrap(), m - k, m).unwrap();
                let mut rhs = SparseOperator::zero(rep.n(), m).unwrap();
                for beta in crate::tableaux::all_standard_tableaux(m) {
                    if alpha.is_included_in(&beta) {
                        rhs = rhs.add(&rep.diagonal_unit(&beta).unwrap()).unwrap();
                    }
                }
                assert_eq!(lhs, rhs, "{alpha}");
            }
        }
    }

    #[test]
    fn embed_shift_examples() {
        let rep = rep11();
        let e = rep.diagonal_unit(&t(&[&[1, 2]])).unwrap();
        assert_eq!(embed_shift(&e, 0, 2).unwrap(), *e);
        assert_eq!(embed_shift(&e, 1, 3).unwrap(), e.embed_at(2, 3).unwrap());
        assert!(matches!(embed_shift(&e, 2, 3), Err(Error::Range(_))));
    }

    #[test]
    fn classical_super_units_at_q_one() {
        let ctx = AtQ::new(Rational::one()).unwrap();
        let rep = HeckeRep::new(&super_permutation(1, 1).unwrap(), ctx).unwrap();
        let units = rep.all_diagonal_units(3).unwrap();
        let mut sum = SparseOperator::zero(2, 3).unwrap();
        for (_, e) in &units {
            assert_eq!(e.mul(e).unwrap(), **e);
            sum = sum.add(e).unwrap();
        }
        assert!(sum.is_identity());
    }

    #[test]
    fn q_numbers_never_vanish_at_rational_q() {
        // k_q = 0 needs q^{2k} = 1 with q != ±1, impossible over Q; q = -1 is
        // a legitimate context.
        let ctx = AtQ::new(Rational::from_int(-1)).unwrap();
        ctx.validate(12).unwrap();
        let spec = super_permutation(2, 0).unwrap();
        let neg = RMatrixSpec::new(spec.op.neg(), "-P").unwrap();
        let rep = HeckeRep::new(&neg, ctx).unwrap();
        let mut sum = SparseOperator::zero(2, 3).unwrap();
        for (_, e) in rep.all_diagonal_units(3).unwrap() {
            sum = sum.add(&e).unwrap();
        }
        assert!(sum.is_identity());
    }

    #[test]
    fn transposition_paths_connect_tableaux() {
        let a = t(&[&[1, 2, 3], &[4]]);
        let b = t(&[&[1, 3, 4], &[2]]);
        let path = transposition_path(&a, &b);
        let mut cur = a.clone();
        for k in path {
            cur = match cur.apply_transposition(k).unwrap() {
                Transposed::Standard(x) => x,
                Transposed::NonStandard => panic!("path leaves standard tableaux"),
            };
        }
        assert_eq!(cur, b);
    }
}
