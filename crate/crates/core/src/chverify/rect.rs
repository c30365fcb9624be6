use std::time::Instant;

use serde::Serialize;

use super::coeffs::ch_coefficients;
use super::pelements::{check_zero, IdentityCheck};
use crate::error::{Error, Result};
use crate::qmalgebra::{AlgMatrix, QMAlgebra};
use crate::scalars::{qnum, Coeff, Context};
use crate::tableaux::{Partition, StandardTableau};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RectReport {
    pub r: usize,
    pub s: usize,
    pub context: String,
    pub check: IdentityCheck,
    pub seconds: f64,
}

impl RectReport {
    pub fn ensure(&self) -> Result<&Self> {
        if self.check.normal_form_zero && self.check.ideal_member != Some(false) {
            Ok(self)
        } else {
            Err(Error::VerificationFailed(format!("rectangular power identity fails at (r,s)=({},{})", self.r, self.s)))
        }
    }
}

/// Expresses the power of the `(s+1)×(r+1)` rectangle through the bar powers:
/// `(-1)^s (s+1)_q (r+1)_q M^{(((r+1)^{s+1}); s+1)}
///  = Σ_{i=0}^{s+r} M^{\bar{s+r+1-i}} Σ_k (-1)^k q^{2k-i} s_{Λ(k,i-k)}`,
/// with the `Λ` family taken for `s` rows of length `r`.
pub fn rect_identity<X: Context>(alg: &QMAlgebra<X>, r: usize, s: usize, ideal_bound: Option<usize>) -> Result<RectReport> {
    let start = Instant::now();
    let rect = Partition::rectangle(s + 1, r + 1);
    let tab = StandardTableau::row_reading(&rect);
    let (power, row) = alg.matrix_power_tableau(&tab)?;
    debug_assert_eq!(row, s + 1);
    let sign = if s.is_multiple_of(2) { 1 } else { -1 };
    let c = alg.ctx().lift(&qnum(s as i32 + 1).mul(&qnum(r as i32 + 1)))?.mul(&X::C::from_i64(sign));
    let lhs = power.scale(&c);

    let mut rhs = AlgMatrix::zero(alg.n());
    if r + s == 0 {
        rhs = alg.matrix_power_bar(1)?;
    } else {
        let plan = ch_coefficients(s, r)?;
        for i in 0..=s + r {
            rhs = rhs.add(&alg.matrix_power_bar(s + r + 1 - i)?.mul_right(&plan.coefficient(alg, i)?))?;
        }
    }
    let check = check_zero(alg, "rectangle", Some((r + 1) * (s + 1)), &lhs.sub(&rhs)?, ideal_bound)?;
    Ok(RectReport { r, s, context: alg.ctx().label(), check, seconds: start.elapsed().as_secs_f64() })
}
