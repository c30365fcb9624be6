use serde::Serialize;

use crate::error::{Error, Result};
use crate::qmalgebra::{NCPoly, QMAlgebra};
use crate::scalars::{Coeff, Context, Scalar};
use crate::tableaux::{lambda_family, FamilyKind, Partition};

/// One summand `(-1)^k q^{2k-i} s_{Λ(k,i-k)}` of a coefficient `C_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CHTerm {
    pub k: usize,
    pub sign: i8,
    pub q_power: i32,
    pub shape: Partition,
}

/// The coefficients `C_0, …, C_{m+n}` of the characteristic identity, each a
/// signed combination of Schur functions of the `Λ` family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CHCoefficientPlan {
    pub m: usize,
    pub n: usize,
    pub coefficients: Vec<Vec<CHTerm>>,
}

/// `C_i = Σ_{k=max(0,i-n)}^{min(i,m)} (-1)^k q^{2k-i} s_{Λ(k,i-k)}` for
/// `i = 0..=m+n`.
pub fn ch_coefficients(m: usize, n: usize) -> Result<CHCoefficientPlan> {
    if m + n == 0 {
        return Err(Error::Range("m + n must be positive".into()));
    }
    let coefficients = (0..=m + n)
        .map(|i| {
            (i.saturating_sub(n)..=i.min(m))
                .map(|k| {
                    Ok(CHTerm {
                        k,
                        sign: if k % 2 == 0 { 1 } else { -1 },
                        q_power: 2 * k as i32 - i as i32,
                        shape: lambda_family(FamilyKind::Plain, m, n, k, i - k)?,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CHCoefficientPlan { m, n, coefficients })
}

impl CHCoefficientPlan {
    /// `C_i` as an element of the algebra.
    pub fn coefficient<X: Context>(&self, alg: &QMAlgebra<X>, i: usize) -> Result<NCPoly<X::C>> {
        let terms = self.coefficients.get(i).ok_or_else(|| Error::Range(format!("no coefficient C_{i}")))?;
        let mut acc = NCPoly::zero();
        for t in terms {
            let c = alg.ctx().lift(&Scalar::q_pow(t.q_power).mul(&Scalar::from_i64(t.sign as i64)))?;
            acc.add_scaled(&alg.schur(&t.shape)?, &c);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes(plan: &CHCoefficientPlan, i: usize) -> Vec<(i8, i32, String)> {
        plan.coefficients[i].iter().map(|t| (t.sign, t.q_power, t.shape.to_string())).collect()
    }

    #[test]
    fn one_one_plan() {
        let plan = ch_coefficients(1, 1).unwrap();
        assert_eq!(shapes(&plan, 0), vec![(1, 0, "(1)".into())]);
        assert_eq!(shapes(&plan, 1), vec![(1, -1, "(1,1)".into()), (-1, 1, "(2)".into())]);
        assert_eq!(shapes(&plan, 2), vec![(-1, 0, "(2,1)".into())]);
    }

    #[test]
    fn purely_even_plan_uses_columns() {
        let plan = ch_coefficients(3, 0).unwrap();
        for i in 0..=3 {
            let col = Partition::new(vec![1; i]).unwrap();
            let sign = if i % 2 == 0 { 1 } else { -1 };
            assert_eq!(plan.coefficients[i], vec![CHTerm { k: i, sign, q_power: i as i32, shape: col }]);
        }
    }

    #[test]
    fn weights_grow_with_the_index() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)] {
            let plan = ch_coefficients(m, n).unwrap();
            for (i, c) in plan.coefficients.iter().enumerate() {
                assert!(!c.is_empty());
                for t in c {
                    assert_eq!(t.shape.weight(), m * n + i);
                }
            }
        }
        assert!(ch_coefficients(0, 0).is_err());
    }
}
