//! Checks that the verifiers reject identities that do not hold.

use qch::chverify::{verify_ch, CHOptions, Mode};
use qch::qmalgebra::QMAlgebra;
use qch::rmatrix::{dj_gl, dj_glmn, permutation};
use qch::scalars::{AtQ, Rational, Symbolic};

fn both(bound: usize) -> CHOptions {
    CHOptions { mode: Mode::Both, ideal_sample: None, seed: 0, degree_bound: bound }
}

#[test]
fn even_algebra_fails_the_super_identity() {
    let a = QMAlgebra::new(&dj_gl(2).unwrap(), &permutation(2).unwrap(), Symbolic).unwrap();
    let rep = verify_ch(&a, 1, 1, &both(3)).unwrap();
    assert!(!rep.verdict);
    // the ideal test decides membership, so this is a proof of failure
    assert!(rep.entries.iter().any(|e| e.ideal_member == Some(false)));
    assert!(rep.ensure().is_err());
}

#[test]
fn super_algebra_fails_the_even_identity() {
    let a = QMAlgebra::new(&dj_glmn(1, 1).unwrap(), &permutation(2).unwrap(), Symbolic).unwrap();
    let rep = verify_ch(&a, 2, 0, &both(2)).unwrap();
    assert!(rep.entries.iter().any(|e| e.ideal_member == Some(false)));
}

#[test]
fn wrong_type_fails_at_numeric_q() {
    let q = AtQ::new(Rational::new(6, 5)).unwrap();
    let a = QMAlgebra::new(&dj_glmn(1, 2).unwrap(), &permutation(3).unwrap(), q).unwrap();
    let rep = verify_ch(&a, 2, 1, &CHOptions { mode: Mode::Both, ideal_sample: Some(1), seed: 0, degree_bound: 5 }).unwrap();
    assert!(!rep.verdict);
}
