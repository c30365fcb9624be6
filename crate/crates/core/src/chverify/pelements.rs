//! Traced elements attached to the distinguished tableaux of the `Λ`
//! families, their combinations `Φ_i`, and the telescoping chain that sums to
//! the characteristic identity.

use std::time::Instant;

use serde::Serialize;

use super::coeffs::ch_coefficients;
use crate::error::{Error, Result};
use crate::heckeunits::embed_shift;
use crate::qmalgebra::{ideal_member_all, AlgMatrix, QMAlgebra};
use crate::scalars::{qnum, Coeff, Context, Scalar};
use crate::tableaux::{distinguished_tableau, DistinguishedKind, Partition, StandardTableau};

type AMat<X> = AlgMatrix<<X as Context>::C>;

fn boundary_zero(kind: DistinguishedKind, m: usize, n: usize, r: usize, s: usize) -> bool {
    match kind {
        DistinguishedKind::Row => s == n + 1,
        DistinguishedKind::Col => r == m + 1,
        DistinguishedKind::PlusRow => r == 0,
        DistinguishedKind::PlusCol => s == 0,
    }
}

/// `Tr_{R(2..A)}(M̄_2⋯M̄_A · ρ(E↑(A-|λ|)) · R_t⋯R_1)` with `A = (m+1)(n+1)`,
/// `t = (m-r)+(n-s)+1` for the row and column kinds and `t-1` for the two
/// kinds with an extra cell. The unit sits on the trailing strands. Outside
/// the family the element is zero on the boundary values and an error
/// elsewhere.
pub fn p_element<X: Context>(
    alg: &QMAlgebra<X>,
    kind: DistinguishedKind,
    m: usize,
    n: usize,
    r: usize,
    s: usize,
) -> Result<AMat<X>> {
    if boundary_zero(kind, m, n, r, s) {
        return Ok(AlgMatrix::zero(alg.n()));
    }
    let tab = distinguished_tableau(kind, m, n, r, s)?;
    let a = (m + 1) * (n + 1);
    let t = (m + n + 1)
        .checked_sub(r + s)
        .ok_or_else(|| Error::Range(format!("no braid factor for r={r}, s={s}")))?;
    let len = match kind {
        DistinguishedKind::Row | DistinguishedKind::Col => t,
        DistinguishedKind::PlusRow | DistinguishedKind::PlusCol => t - 1,
    };
    if tab.size() + len != a {
        return Err(Error::Range(format!("tableau of size {} and {len} braid factors do not fill {a} strands", tab.size())));
    }
    let e = alg.rep().diagonal_unit(&tab)?;
    let unit = embed_shift(&e, a - tab.size(), a)?;
    let x = unit.mul(&alg.braid_cycle(a, len)?)?;
    alg.traced_matrix(2, &x)
}

fn q_ratio<X: Context>(alg: &QMAlgebra<X>, num: &[i32], den: &[i32]) -> Result<X::C> {
    let mut s = Scalar::one();
    for &k in num {
        s = s.mul(&qnum(k));
    }
    for &k in den {
        s = s.div(&qnum(k))?;
    }
    alg.ctx().lift(&s)
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Φ_i` for `1 <= i <= m+n`: the signed combination of row and column
/// elements at weight `mn+i`.
pub fn phi_combination<X: Context>(alg: &QMAlgebra<X>, m: usize, n: usize, i: usize) -> Result<AMat<X>> {
    if i == 0 || i > m + n {
        return Err(Error::Range(format!("Φ_{i} undefined for m+n={}", m + n)));
    }
    let (mi, ni, ii) = (m as i32, n as i32, i as i32);
    let mut acc = AlgMatrix::zero(alg.n());
    for k in i.saturating_sub(n)..=(i - 1).min(m) {
        let ki = k as i32;
        let c = q_ratio(alg, &[ii - ki, mi + ni - ii + ki + 2], &[mi + ni - ii + 2])?.mul(&X::C::from_i64(sign(k)));
        acc = acc.add(&p_element(alg, DistinguishedKind::Row, m, n, k, i - k)?.scale(&c))?;
    }
    for k in i.saturating_sub(n).max(1)..=i.min(m) {
        let ki = k as i32;
        let c = q_ratio(alg, &[ki, mi + ni - ki + 2], &[mi + ni - ii + 2])?.mul(&X::C::from_i64(-sign(k)));
        acc = acc.add(&p_element(alg, DistinguishedKind::Col, m, n, k, i - k)?.scale(&c))?;
    }
    Ok(acc)
}

/// The four families together with `Φ_1, …, Φ_{m+n}`.
pub struct PElementSet<C> {
    pub m: usize,
    pub n: usize,
    pub elements: Vec<(DistinguishedKind, usize, usize, AlgMatrix<C>)>,
    pub phis: Vec<AlgMatrix<C>>,
}

pub fn p_elements<X: Context>(alg: &QMAlgebra<X>, m: usize, n: usize) -> Result<PElementSet<X::C>> {
    let mut elements = Vec::new();
    for r in 0..=m {
        for s in 0..=n {
            for kind in [DistinguishedKind::Row, DistinguishedKind::Col, DistinguishedKind::PlusRow, DistinguishedKind::PlusCol] {
                match p_element(alg, kind, m, n, r, s) {
                    Ok(p) => elements.push((kind, r, s, p)),
                    Err(Error::Range(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    let phis = (1..=m + n).map(|i| phi_combination(alg, m, n, i)).collect::<Result<Vec<_>>>()?;
    Ok(PElementSet { m, n, elements, phis })
}

/// One identity of the chain, with both zero tests.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityCheck {
    pub name: String,
    pub index: Option<usize>,
    pub normal_form_zero: bool,
    pub ideal_member: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TelescopeReport {
    pub m: usize,
    pub n: usize,
    pub context: String,
    pub checks: Vec<IdentityCheck>,
    pub rectangle_term_zero: bool,
    pub seconds: f64,
    pub verdict: bool,
}

impl TelescopeReport {
    pub fn ensure(&self) -> Result<&Self> {
        match self.checks.iter().find(|c| !c.normal_form_zero || c.ideal_member == Some(false)) {
            None if self.verdict => Ok(self),
            Some(c) => Err(Error::VerificationFailed(format!("{} fails at index {:?}", c.name, c.index))),
            None => Err(Error::VerificationFailed("rectangle term does not vanish".into())),
        }
    }
}

/// Zero tests on `d`: normal form, and ideal membership when the degree is
/// within `ideal_bound`.
pub(crate) fn check_zero<X: Context>(
    alg: &QMAlgebra<X>,
    name: &str,
    index: Option<usize>,
    d: &AMat<X>,
    ideal_bound: Option<usize>,
) -> Result<IdentityCheck> {
    let mut nf = alg.normal_form_matrix(d);
    if !nf.is_zero() {
        if let Some(deg) = d.homogeneous_degree() {
            if alg.complete_to(deg) > 0 {
                nf = alg.normal_form_matrix(d);
            }
        }
    }
    let ideal_member = match ideal_bound {
        Some(bound) => {
            let polys: Vec<_> = d.entries().map(|(_, p)| p.clone()).collect();
            Some(ideal_member_all(&polys, alg.relations(), alg.letters(), bound)?.into_iter().all(|b| b))
        }
        None => None,
    };
    Ok(IdentityCheck { name: name.into(), index, normal_form_zero: nf.is_zero(), ideal_member })
}

/// `φ(M^{\bar k}) · C` for the coefficient combination at index `i`.
fn phi_step<X: Context>(alg: &QMAlgebra<X>, m: usize, n: usize, i: usize) -> Result<AMat<X>> {
    let plan = ch_coefficients(m, n)?;
    let c = plan.coefficient(alg, i)?;
    Ok(alg.phi(&alg.matrix_power_bar(m + n - i)?)?.mul_right(&c))
}

/// The rectangle term `(-1)^m (m+1)_q (n+1)_q Tr_{R(2..A)}(M̄_2⋯M̄_A ρ(E))`
/// for a rectangle tableau with its largest entry in the last row.
pub fn rectangle_term<X: Context>(alg: &QMAlgebra<X>, m: usize, n: usize) -> Result<AMat<X>> {
    let rect = Partition::rectangle(m + 1, n + 1);
    let tab = StandardTableau::row_reading(&rect);
    let e = alg.rep().diagonal_unit(&tab)?;
    let c = q_ratio(alg, &[m as i32 + 1, n as i32 + 1], &[])?.mul(&X::C::from_i64(sign(m)));
    Ok(alg.traced_matrix(2, &e)?.scale(&c))
}

/// Verifies the base case, every step, the top case with its rectangle term,
/// the splitting of the four neighbouring elements at `(i,k) = (1,0)`, and
/// the telescoped sum.
pub fn telescope_check<X: Context>(alg: &QMAlgebra<X>, m: usize, n: usize, ideal_bound: Option<usize>) -> Result<TelescopeReport> {
    let start = Instant::now();
    let set = p_elements(alg, m, n)?;
    let phi = |i: usize| &set.phis[i - 1];
    let mut checks = Vec::new();

    // Φ_1 = φ(M^{\bar{m+n}}) C_0
    let d = phi(1).sub(&phi_step(alg, m, n, 0)?)?;
    checks.push(check_zero(alg, "base", Some(0), &d, ideal_bound)?);

    // Φ_{i+1} - Φ_i = φ(M^{\bar{m+n-i}}) C_i
    let mut step_sum = AlgMatrix::zero(alg.n());
    for i in 1..m + n {
        let rhs = phi_step(alg, m, n, i)?;
        step_sum = step_sum.add(&rhs)?;
        let d = phi(i + 1).sub(phi(i))?.sub(&rhs)?;
        checks.push(check_zero(alg, "step", Some(i), &d, ideal_bound)?);
    }

    // Φ_{m+n} = (-1)^{m+1} q^{m-n} Id s_{Λ(m,n)} + rectangle term
    let rect = rectangle_term(alg, m, n)?;
    let plan = ch_coefficients(m, n)?;
    let top = plan.coefficients[m + n].last().expect("nonempty coefficient");
    let c = alg.ctx().lift(&Scalar::q_pow(m as i32 - n as i32).mul(&Scalar::from_i64(-sign(m))))?;
    let id_term = AlgMatrix::identity(alg.n()).mul_right(&alg.schur(&top.shape)?.scale(&c));
    let d = phi(m + n).sub(&id_term)?.sub(&rect)?;
    checks.push(check_zero(alg, "top", Some(m + n), &d, ideal_bound)?);

    // P⁺ + P₊ + P_row(k,i-k+1) + P_col(k+1,i-k) = φ(M^{\bar{m+n-i}}) s_{Λ(k,i-k)}
    if m + n >= 2 {
        let (i, k) = (1usize, 0usize);
        let mut lhs = AlgMatrix::zero(alg.n());
        for (kind, r, s) in [
            (DistinguishedKind::PlusRow, k, i - k),
            (DistinguishedKind::PlusCol, k, i - k),
            (DistinguishedKind::Row, k, i - k + 1),
            (DistinguishedKind::Col, k + 1, i - k),
        ] {
            lhs = lhs.add(&p_element(alg, kind, m, n, r, s)?)?;
        }
        let shape = crate::tableaux::lambda_family(crate::tableaux::FamilyKind::Plain, m, n, k, i - k)?;
        let rhs = alg.phi(&alg.matrix_power_bar(m + n - i)?)?.mul_right(&alg.schur(&shape)?);
        checks.push(check_zero(alg, "split", Some(i), &lhs.sub(&rhs)?, ideal_bound)?);
    }

    // Φ_{m+n} - Φ_1 equals the sum of the step right sides
    let d = phi(m + n).sub(phi(1))?.sub(&step_sum)?;
    checks.push(check_zero(alg, "telescoped", None, &d, ideal_bound)?);

    let rectangle_term_zero = rect.is_zero();
    let verdict = rectangle_term_zero && checks.iter().all(|c| c.normal_form_zero && c.ideal_member != Some(false));
    Ok(TelescopeReport { m, n, context: alg.ctx().label(), checks, rectangle_term_zero, seconds: start.elapsed().as_secs_f64(), verdict })
}
