//! The quantum matrix algebra `M(R,F)`: the free algebra on the entries of an
//! `N×N` matrix `M` modulo `R₁M̄₁M̄₂ = M̄₁M̄₂R₁`, where the copies `M̄_k` are
//! obtained by conjugating `M₁` with the compatible braiding `F`.
//!
//! Everything here is an element of the free algebra; identities are decided
//! afterwards by [`RewriteSystem`] normal forms or by [`ideal_member`].

mod algop;
mod ideal;
mod ncpoly;
mod rewrite;
mod suite;
mod word;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

pub use algop::{gen_letter, word_of, AlgMatrix, AlgOperator};
pub use ideal::{ideal_member, ideal_member_all};
pub use ncpoly::NCPoly;
pub use rewrite::{echelon, RewriteStats, RewriteSystem, Strategy};
pub use suite::{schur_suite, SchurReport};
pub use word::{Word, MAX_LEN};

use crate::error::{Error, Result};
use crate::heckeunits::{HeckeRep, Op};
use crate::rmatrix::{compatible_check, pair_hypotheses, twist_rf, yang_baxter_check, RMatrixSpec};
use crate::scalars::Context;
use crate::tableaux::{Partition, StandardTableau};
use crate::tensorop::{d_operator, Matrix, SparseOperator};

type Poly<X> = NCPoly<<X as Context>::C>;
type AMat<X> = AlgMatrix<<X as Context>::C>;
type MbarCache<C> = Mutex<HashMap<usize, Arc<Vec<AlgOperator<C>>>>>;

pub struct QMAlgebra<X: Context> {
    rep: HeckeRep<X>,
    f_spec: RMatrixSpec,
    f: Op<X>,
    f_inv: Op<X>,
    r_inv: Op<X>,
    d_rf: Matrix<X::C>,
    d_r: Matrix<X::C>,
    rels: Vec<Poly<X>>,
    rewrite: Mutex<Arc<RewriteSystem<X::C>>>,
    mbar: MbarCache<X::C>,
    schur: Mutex<HashMap<Partition, Poly<X>>>,
}

impl<X: Context> QMAlgebra<X> {
    /// Checks the hypotheses on the pair and computes the defining relations.
    pub fn new(r: &RMatrixSpec, f: &RMatrixSpec, ctx: X) -> Result<Self> {
        if !yang_baxter_check(f, &ctx)? {
            return Err(Error::VerificationFailed(format!("{} fails the braid relation", f.label)));
        }
        if !compatible_check(r, f, &ctx)? {
            return Err(Error::VerificationFailed(format!("{} and {} are not compatible", r.label, f.label)));
        }
        let hyp = pair_hypotheses(r, f, &ctx)?;
        if !hyp.all() {
            return Err(Error::VerificationFailed(format!("strictness hypotheses fail: {hyp:?}")));
        }
        let rep = HeckeRep::new(r, ctx.clone())?;
        let f_op = f.lift(&ctx)?;
        let f_inv = f_op.inverse()?;
        let r_inv = r.lift(&ctx)?.inverse()?;
        let d_r = d_operator(&r.lift(&ctx)?)?.d;
        let rf = twist_rf(r, f)?.lift(&ctx)?;
        let d_rf = d_operator(&rf)?.d;
        let mut alg = QMAlgebra {
            rep,
            f_spec: f.clone(),
            f: f_op,
            f_inv,
            r_inv,
            d_rf,
            d_r,
            rels: Vec::new(),
            rewrite: Mutex::new(Arc::new(RewriteSystem::build(&[], 0))),
            mbar: Mutex::default(),
            schur: Mutex::default(),
        };
        alg.rels = alg.relations_at(1)?;
        let letters = alg.n() * alg.n();
        *alg.rewrite.get_mut().unwrap() = Arc::new(RewriteSystem::build(&alg.rels, letters));
        Ok(alg)
    }

    pub fn rep(&self) -> &HeckeRep<X> {
        &self.rep
    }

    pub fn ctx(&self) -> &X {
        self.rep.ctx()
    }

    pub fn r_spec(&self) -> &RMatrixSpec {
        self.rep.spec()
    }

    pub fn f_spec(&self) -> &RMatrixSpec {
        &self.f_spec
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    pub fn letters(&self) -> usize {
        self.n() * self.n()
    }

    /// `D^R`, the weight of the R-trace.
    pub fn d_r(&self) -> &Matrix<X::C> {
        &self.d_r
    }

    /// `D^{R_f}` with `R_f = F^{-1}R^{-1}F`.
    pub fn d_rf(&self) -> &Matrix<X::C> {
        &self.d_rf
    }

    pub fn generators(&self) -> AMat<X> {
        AlgMatrix::generators(self.n())
    }

    /// The defining relations, nonzero entries of `R₁M̄₁M̄₂ - M̄₁M̄₂R₁`.
    pub fn relations(&self) -> &[Poly<X>] {
        &self.rels
    }

    /// Nonzero entries of `R_k M̄_k M̄_{k+1} - M̄_k M̄_{k+1} R_k` on `k+1` strands.
    pub fn relations_at(&self, k: usize) -> Result<Vec<Poly<X>>> {
        if k == 0 {
            return Err(Error::Range("relations start at k = 1".into()));
        }
        let arity = k + 1;
        let mb = self.mbar(arity)?;
        let prod = mb[k - 1].mul(&mb[k])?;
        let rk = self.rep.generator(arity, k)?;
        Ok(prod.left_scalar(&rk)?.sub(&prod.right_scalar(&rk)?)?.nonzero_entries())
    }

    /// `M̄_1, …, M̄_k` as operators on `k` strands.
    pub fn mbar(&self, k: usize) -> Result<Arc<Vec<AlgOperator<X::C>>>> {
        if k == 0 {
            return Err(Error::Range("arity must be positive".into()));
        }
        if let Some(v) = self.mbar.lock().unwrap().get(&k) {
            return Ok(v.clone());
        }
        let mut out = vec![AlgOperator::slot1(&self.generators(), k)?];
        for j in 1..k {
            let fj = self.f.embed_at(j, k)?;
            let fj_inv = self.f_inv.embed_at(j, k)?;
            let next = out[j - 1].left_scalar(&fj)?.right_scalar(&fj_inv)?;
            out.push(next);
        }
        let out = Arc::new(out);
        self.mbar.lock().unwrap().insert(k, out.clone());
        Ok(out)
    }

    pub fn rewrite_system(&self) -> Arc<RewriteSystem<X::C>> {
        self.rewrite.lock().unwrap().clone()
    }

    /// Extends the rewrite system by overlap completion up to `degree`.
    pub fn complete_to(&self, degree: usize) -> usize {
        let mut guard = self.rewrite.lock().unwrap();
        if guard.completed_to() >= degree {
            return 0;
        }
        let mut rs = (**guard).clone();
        let added = rs.complete(degree);
        *guard = Arc::new(rs);
        added
    }

    pub fn normal_form(&self, p: &Poly<X>) -> Poly<X> {
        self.rewrite_system().normal_form(p)
    }

    pub fn normal_form_matrix(&self, m: &AMat<X>) -> AMat<X> {
        let rs = self.rewrite_system();
        m.map_entries(|p| rs.normal_form(p))
    }

    pub fn is_member(&self, p: &Poly<X>, bound: usize) -> Result<bool> {
        ideal_member(p, &self.rels, self.letters(), bound)
    }

    /// `Tr_{R(free+1..k)}(M̄_first ⋯ M̄_k · x)` with `x` on `k` strands; the
    /// result is indexed by the untraced leading `free` strands.
    fn traced(&self, first: usize, x: &Op<X>, free: usize) -> Result<Vec<BTreeMap<usize, Poly<X>>>> {
        let k = x.arity();
        let n = self.n();
        if free > k || first == 0 {
            return Err(Error::Range("invalid traced product".into()));
        }
        let mb = self.mbar(k)?;
        let mut y = x.clone();
        for s in free + 1..=k {
            y = y.mul_slot_matrix(&self.d_r, s)?;
        }
        let rest = n.pow((k - free) as u32);
        let nfree = n.pow(free as u32);
        let mut out = vec![BTreeMap::<usize, Poly<X>>::new(); nfree];
        for idx in 0..x.dim() {
            let (fi, ri) = (idx / rest, idx % rest);
            let mut v: BTreeMap<usize, Poly<X>> = BTreeMap::from([(idx, NCPoly::one())]);
            for op in &mb[first - 1..] {
                let mut next: BTreeMap<usize, Poly<X>> = BTreeMap::new();
                for (j, p) in &v {
                    for (c, q) in op.row(*j) {
                        next.entry(*c).or_default().add_assign(&p.mul(q));
                    }
                }
                next.retain(|_, p| !p.is_zero());
                v = next;
            }
            for (kk, p) in &v {
                for fj in 0..nfree {
                    if let Some(c) = y.get(*kk, fj * rest + ri) {
                        out[fi].entry(fj).or_default().add_scaled(p, c);
                    }
                }
            }
        }
        for row in &mut out {
            row.retain(|_, p| !p.is_zero());
        }
        Ok(out)
    }

    /// `Tr_{R(2..k)}(M̄_first ⋯ M̄_k · x)` with the first strand left free.
    pub fn traced_matrix(&self, first: usize, x: &Op<X>) -> Result<AMat<X>> {
        let rows = self.traced(first, x, 1)?;
        let mut m = AlgMatrix::zero(self.n());
        for (i, row) in rows.into_iter().enumerate() {
            for (j, p) in row {
                m.set(i, j, p);
            }
        }
        Ok(m)
    }

    /// `y(x) = Tr_{R(1..k)}(M̄₁⋯M̄_k · x)`.
    pub fn y_element(&self, x: &Op<X>) -> Result<Poly<X>> {
        let mut rows = self.traced(1, x, 0)?;
        Ok(rows.pop().and_then(|mut r| r.remove(&0)).unwrap_or_default())
    }

    /// `Tr_{R(i+1..i+k)}(M̄_{i+1}⋯M̄_{i+k} · x)` for `x` on `i+k` strands,
    /// indexed by the leading `i` strands.
    pub fn partial_y(&self, x: &Op<X>, i: usize) -> Result<Vec<BTreeMap<usize, Poly<X>>>> {
        self.traced(i + 1, x, i)
    }

    /// `R_{k-1} ⋯ R_1` on `k` strands.
    pub fn braid_cycle(&self, k: usize, upto: usize) -> Result<Op<X>> {
        let mut acc = self.rep.identity(k)?;
        for i in (1..=upto).rev() {
            acc = acc.mul(&self.rep.generator(k, i)?)?;
        }
        Ok(acc)
    }

    /// The power sum `p_k = y(R_{k-1}⋯R_1)`.
    pub fn power_sum(&self, k: usize) -> Result<Poly<X>> {
        if k == 0 {
            return Err(Error::Range("power sums start at k = 1".into()));
        }
        self.y_element(&self.braid_cycle(k, k - 1)?)
    }

    /// `s_λ = y(E_t)` for the row-reading tableau `t` of `λ`; `s_∅ = 1`.
    pub fn schur(&self, shape: &Partition) -> Result<Poly<X>> {
        if shape.weight() == 0 {
            return Ok(NCPoly::one());
        }
        if let Some(s) = self.schur.lock().unwrap().get(shape) {
            return Ok(s.clone());
        }
        let s = self.schur_for(&StandardTableau::row_reading(shape))?;
        self.schur.lock().unwrap().insert(shape.clone(), s.clone());
        Ok(s)
    }

    /// `y(E_t)` for a specific tableau.
    pub fn schur_for(&self, t: &StandardTableau) -> Result<Poly<X>> {
        let e = self.rep.diagonal_unit(t)?;
        self.y_element(&e)
    }

    /// `Tr_{R(2..k)}(M̄₁⋯M̄_k · x)`.
    pub fn matrix_power_hecke(&self, x: &Op<X>) -> Result<AMat<X>> {
        self.traced_matrix(1, x)
    }

    /// `M^{(λ;i)}` from the unit `E_t`, with `i` the row of the largest entry.
    pub fn matrix_power_tableau(&self, t: &StandardTableau) -> Result<(AMat<X>, usize)> {
        let e = self.rep.diagonal_unit(t)?;
        Ok((self.matrix_power_hecke(&e)?, t.row_of_largest()))
    }

    /// `M^{\bar k} = Tr_{R(2..k)}(M̄₁⋯M̄_k R_{k-1}⋯R_1)`, `M^{\bar 0} = Id`.
    pub fn matrix_power_bar(&self, k: usize) -> Result<AMat<X>> {
        match k {
            0 => Ok(AlgMatrix::identity(self.n())),
            1 => Ok(self.generators()),
            _ => self.traced_matrix(1, &self.braid_cycle(k, k - 1)?),
        }
    }

    /// `M^{\bar k}` by the recursion `M^{\bar k} = M·φ(M^{\bar{k-1}})`.
    pub fn matrix_power_bar_iterated(&self, k: usize) -> Result<AMat<X>> {
        let mut acc = AlgMatrix::identity(self.n());
        for _ in 0..k {
            acc = self.generators().mul(&self.phi(&acc)?)?;
        }
        Ok(acc)
    }

    fn trace_second(&self, x: &AMat<X>, left: &Op<X>, right: &Op<X>, d: &Matrix<X::C>) -> Result<AMat<X>> {
        AlgOperator::slot1(x, 2)?.left_scalar(left)?.right_scalar(right)?.rtrace_last(d)?.to_matrix()
    }

    /// `φ(X) = Tr_{R(2)}(F₁X₁F₁^{-1}R₁)`.
    pub fn phi(&self, x: &AMat<X>) -> Result<AMat<X>> {
        let r = self.rep.generator(2, 1)?;
        self.trace_second(x, &self.f, &self.f_inv.mul(&r)?, &self.d_r)
    }

    /// `φ^{-1}(X) = Tr_{R_f(2)}(F₁^{-1}X₁R₁^{-1}F₁)`.
    pub fn phi_inv(&self, x: &AMat<X>) -> Result<AMat<X>> {
        self.trace_second(x, &self.f_inv, &self.r_inv.mul(&self.f)?, &self.d_rf)
    }

    /// Scalar matrix lifted into the algebra.
    pub fn scalar_matrix(&self, m: &Matrix<X::C>) -> AMat<X> {
        AlgMatrix::from_scalar(m)
    }

    /// An operator of the Hecke representation as an algebra-valued operator.
    pub fn lift_operator(&self, op: &SparseOperator<X::C>) -> AlgOperator<X::C> {
        AlgOperator::from_scalar(op)
    }
}
