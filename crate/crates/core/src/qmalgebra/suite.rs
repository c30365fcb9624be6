use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{echelon, ideal_member_all, NCPoly, QMAlgebra, Strategy, Word};
use crate::error::Result;
use crate::scalars::{Coeff, Context};
use crate::tableaux::{standard_tableaux, Partition};

/// Checks on the characteristic subalgebra of one quantum matrix algebra.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SchurReport {
    pub max_weight: usize,
    /// `y(E_t)` is the same for every standard tableau `t` of a shape.
    pub tableau_independent: bool,
    /// `y(E_{αβ}) = 0` for `α != β`.
    pub offdiagonal_traces_vanish: bool,
    /// `p_2 = q s_{(2)} - q^{-1} s_{(1,1)}`.
    pub second_power_sum: bool,
    /// Products of Schur functions commute modulo the relations.
    pub commutative: bool,
    /// Normal forms of the Schur functions of fat-hook shapes are linearly
    /// independent in each weight.
    pub fat_hook_independent: bool,
    /// `s` of the forbidden rectangle vanishes; `None` beyond `max_rectangle`.
    pub rectangle_vanishes: Option<bool>,
    /// Entries of `R_2 M̄_2 M̄_3 - M̄_2 M̄_3 R_2` lie in the ideal.
    pub shifted_relations_in_ideal: bool,
    /// Leftmost and rightmost rewriting agree on sampled cubic words.
    pub confluent_on_sample: bool,
    pub passed: bool,
}

fn in_fat_hook(shape: &Partition, m: usize, n: usize) -> bool {
    shape.row_len(m + 1) <= n
}

/// Runs the checks up to weight `max_weight`. The rectangle `(n+1)^(m+1)` is
/// only built when its weight is at most `max_rectangle`.
pub fn schur_suite<X: Context>(
    alg: &QMAlgebra<X>,
    m: usize,
    n: usize,
    max_weight: usize,
    max_rectangle: usize,
    seed: u64,
) -> Result<SchurReport> {
    let mut tableau_independent = true;
    let mut offdiagonal_traces_vanish = true;
    let mut fat_hook_independent = true;
    for w in 1..=max_weight {
        let mut hook_forms = Vec::new();
        for shape in Partition::all_of(w) {
            let tabs = standard_tableaux(&shape);
            let s = alg.normal_form(&alg.schur(&shape)?);
            for a in &tabs {
                if alg.normal_form(&alg.schur_for(a)?) != s {
                    tableau_independent = false;
                }
                for b in &tabs {
                    if a != b && !alg.normal_form(&alg.y_element(&alg.rep().unit(a, b)?)?).is_zero() {
                        offdiagonal_traces_vanish = false;
                    }
                }
            }
            if in_fat_hook(&shape, m, n) {
                hook_forms.push(s);
            }
        }
        if echelon(&hook_forms).len() != hook_forms.len() {
            fat_hook_independent = false;
        }
    }

    let q = alg.ctx().q();
    let qi = q.inv().expect("q is invertible");
    let two = Partition::new(vec![2])?;
    let one_one = Partition::new(vec![1, 1])?;
    let second_power_sum =
        alg.power_sum(2)? == alg.schur(&two)?.scale(&q).sub(&alg.schur(&one_one)?.scale(&qi));

    let mut commutative = true;
    let small: Vec<Partition> = (1..max_weight.min(3)).flat_map(Partition::all_of).collect();
    for a in &small {
        for b in &small {
            if a.weight() + b.weight() > max_weight.max(2) {
                continue;
            }
            let (sa, sb) = (alg.schur(a)?, alg.schur(b)?);
            if !alg.normal_form(&sa.mul(&sb).sub(&sb.mul(&sa))).is_zero() {
                commutative = false;
            }
        }
    }

    let rect = Partition::rectangle(m + 1, n + 1);
    let rectangle_vanishes = (rect.weight() <= max_rectangle).then(|| alg.schur(&rect).map(|s| alg.normal_form(&s).is_zero())).transpose()?;

    let shifted = alg.relations_at(2)?;
    let shifted_relations_in_ideal = ideal_member_all(&shifted, alg.relations(), alg.letters(), 2)?.into_iter().all(|b| b);

    let rs = alg.rewrite_system();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = alg.letters();
    let confluent_on_sample = (0..50).all(|_| {
        let ls: Vec<u8> = (0..3).map(|_| rng.gen_range(0..letters) as u8).collect();
        let p = NCPoly::monomial(Word::from_letters(&ls), X::C::one());
        rs.normal_form(&p) == rs.normal_form_with(&p, Strategy::Rightmost)
    });

    let passed = tableau_independent
        && offdiagonal_traces_vanish
        && second_power_sum
        && commutative
        && fat_hook_independent
        && rectangle_vanishes != Some(false)
        && shifted_relations_in_ideal
        && confluent_on_sample;
    Ok(SchurReport {
        max_weight,
        tableau_independent,
        offdiagonal_traces_vanish,
        second_power_sum,
        commutative,
        fat_hook_independent,
        rectangle_vanishes,
        shifted_relations_in_ideal,
        confluent_on_sample,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::{dj_gl, dj_glmn, permutation};
    use crate::scalars::Symbolic;

    #[test]
    fn rtt_and_reflection_algebras_pass_the_suite() {
        let r = dj_glmn(1, 1).unwrap();
        let rtt = QMAlgebra::new(&r, &permutation(2).unwrap(), Symbolic).unwrap();
        let rep = schur_suite(&rtt, 1, 1, 3, 4, 7).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.rectangle_vanishes, Some(true));
        let rea = QMAlgebra::new(&r, &r, Symbolic).unwrap();
        assert!(schur_suite(&rea, 1, 1, 3, 4, 7).unwrap().passed);
    }

    #[test]
    fn even_rectangle_vanishes_for_gl2() {
        let a = QMAlgebra::new(&dj_gl(2).unwrap(), &permutation(2).unwrap(), Symbolic).unwrap();
        let rep = schur_suite(&a, 2, 0, 3, 3, 1).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.rectangle_vanishes, Some(true));
    }
}
