use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::coeffs::ch_coefficients;
use crate::error::{Error, Result};
use crate::qmalgebra::{AlgMatrix, NCPoly, QMAlgebra, RewriteStats};
use crate::scalars::Context;

/// Which zero tests to run on each entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    NormalForm,
    Ideal,
    Both,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "normalform" => Ok(Mode::NormalForm),
            "ideal" => Ok(Mode::Ideal),
            "both" => Ok(Mode::Both),
            _ => Err(Error::Input(format!("unknown mode {s:?}; expected normalform, ideal or both"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CHOptions {
    pub mode: Mode,
    /// Entries passed to the ideal test: `None` for all, otherwise a seeded
    /// random sample of this size.
    pub ideal_sample: Option<usize>,
    pub seed: u64,
    /// Largest degree the ideal test accepts.
    pub degree_bound: usize,
}

impl Default for CHOptions {
    fn default() -> Self {
        CHOptions { mode: Mode::Both, ideal_sample: None, seed: 0, degree_bound: 6 }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EntryVerdict {
    pub row: usize,
    pub col: usize,
    pub terms_before_reduction: usize,
    pub normal_form_zero: Option<bool>,
    pub ideal_member: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CHReport {
    pub m: usize,
    pub n: usize,
    pub r: String,
    pub f: String,
    pub context: String,
    pub mode: Mode,
    pub degree: usize,
    pub homogeneous: bool,
    pub entries: Vec<EntryVerdict>,
    pub rewrite: RewriteStats,
    pub first_residual: Option<String>,
    pub seconds: f64,
    pub verdict: bool,
}

impl CHReport {
    /// Turns a failed report into `VerificationFailed` carrying the residual.
    pub fn ensure(&self) -> Result<&Self> {
        if self.verdict {
            return Ok(self);
        }
        Err(Error::VerificationFailed(format!(
            "characteristic identity at (m,n)=({},{}): {}",
            self.m,
            self.n,
            self.first_residual.as_deref().unwrap_or("an entry is not an ideal member")
        )))
    }
}

/// `Σ_{i=0}^{m+n} M^{\bar{m+n-i}} C_i`, unreduced.
pub fn ch_lhs<X: Context>(alg: &QMAlgebra<X>, m: usize, n: usize) -> Result<AlgMatrix<X::C>> {
    let plan = ch_coefficients(m, n)?;
    let mut acc = AlgMatrix::zero(alg.n());
    for i in 0..=m + n {
        let c = plan.coefficient(alg, i)?;
        acc = acc.add(&alg.matrix_power_bar(m + n - i)?.mul_right(&c))?;
    }
    Ok(acc)
}

/// The same sum with every factor reduced before multiplying; congruent to
/// [`ch_lhs`] modulo the relations and much smaller.
pub fn ch_lhs_reduced<X: Context>(alg: &QMAlgebra<X>, m: usize, n: usize) -> Result<AlgMatrix<X::C>> {
    let plan = ch_coefficients(m, n)?;
    let mut acc = AlgMatrix::zero(alg.n());
    for i in 0..=m + n {
        let c = alg.normal_form(&plan.coefficient(alg, i)?);
        let pw = alg.normal_form_matrix(&alg.matrix_power_bar(m + n - i)?);
        acc = acc.add(&pw.mul_right(&c))?;
    }
    Ok(alg.normal_form_matrix(&acc))
}

/// Verifies the characteristic identity entry by entry.
pub fn verify_ch<X: Context>(alg: &QMAlgebra<X>, m: usize, n: usize, opts: &CHOptions) -> Result<CHReport> {
    let start = Instant::now();
    let nn = alg.n();
    let degree = m * n + m + n;
    let raw = ch_lhs(alg, m, n)?;
    let homogeneous = raw.entries().all(|(_, p)| p.is_homogeneous_of(degree));
    let mut entries: Vec<EntryVerdict> = raw
        .entries()
        .map(|((i, j), p)| EntryVerdict {
            row: i + 1,
            col: j + 1,
            terms_before_reduction: p.len(),
            normal_form_zero: None,
            ideal_member: None,
        })
        .collect();
    let mut first_residual = None;
    if matches!(opts.mode, Mode::NormalForm | Mode::Both) {
        let mut reduced = ch_lhs_reduced(alg, m, n)?;
        if !reduced.is_zero() && alg.complete_to(degree) > 0 {
            reduced = ch_lhs_reduced(alg, m, n)?;
        }
        for (e, (_, p)) in entries.iter_mut().zip(reduced.entries()) {
            e.normal_form_zero = Some(p.is_zero());
            if !p.is_zero() && first_residual.is_none() {
                first_residual = Some(format!("entry ({},{}) reduces to {}", e.row, e.col, p.display(nn)));
            }
        }
    }
    if matches!(opts.mode, Mode::Ideal | Mode::Both) {
        let picked: Vec<usize> = match opts.ideal_sample {
            Some(k) if k < entries.len() => {
                let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                let mut v = sample(&mut rng, entries.len(), k).into_vec();
                v.sort_unstable();
                v
            }
            _ => (0..entries.len()).collect(),
        };
        let polys: Vec<NCPoly<X::C>> = picked.iter().map(|&f| raw.get(f / nn, f % nn).clone()).collect();
        let verdicts = crate::qmalgebra::ideal_member_all(&polys, alg.relations(), alg.letters(), opts.degree_bound)?;
        for (&f, v) in picked.iter().zip(verdicts) {
            entries[f].ideal_member = Some(v);
        }
    }
    let verdict = homogeneous && entries.iter().all(|e| e.normal_form_zero != Some(false) && e.ideal_member != Some(false));
    Ok(CHReport {
        m,
        n,
        r: alg.r_spec().label.clone(),
        f: alg.f_spec().label.clone(),
        context: alg.ctx().label(),
        mode: opts.mode,
        degree,
        homogeneous,
        entries,
        rewrite: alg.rewrite_system().stats(),
        first_residual,
        seconds: start.elapsed().as_secs_f64(),
        verdict,
    })
}
