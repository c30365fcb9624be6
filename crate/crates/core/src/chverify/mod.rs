//! Exact verification of the Cayley-Hamilton identity of a `GL(m|n)`-type
//! quantum matrix algebra, of the telescoping chain behind it, and of the
//! expression of rectangular powers through the bar powers.

mod coeffs;
mod lhs;
mod oracle;
mod pelements;
mod rect;

pub use coeffs::{ch_coefficients, CHCoefficientPlan, CHTerm};
pub use lhs::{ch_lhs, ch_lhs_reduced, verify_ch, CHOptions, CHReport, EntryVerdict, Mode};
pub use oracle::{super_classical_oracle, Monomial, SuperClassicalOracle};
pub use pelements::{
    p_element, p_elements, phi_combination, rectangle_term, telescope_check, IdentityCheck, PElementSet, TelescopeReport,
};
pub use rect::{rect_identity, RectReport};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmalgebra::QMAlgebra;
    use crate::rmatrix::{dj_glmn, permutation, super_permutation};
    use crate::scalars::{AtQ, Rational, Symbolic};
    use crate::tableaux::DistinguishedKind;

    fn rtt11() -> QMAlgebra<Symbolic> {
        QMAlgebra::new(&dj_glmn(1, 1).unwrap(), &permutation(2).unwrap(), Symbolic).unwrap()
    }

    #[test]
    fn flagship_identity_vanishes() {
        let a = rtt11();
        let rep = verify_ch(&a, 1, 1, &CHOptions::default()).unwrap();
        assert!(rep.homogeneous);
        assert!(rep.verdict, "{:?}", rep.first_residual);
        assert_eq!(rep.entries.len(), 4);
    }

    #[test]
    fn reflection_pair_identity_vanishes() {
        let r = dj_glmn(1, 1).unwrap();
        let a = QMAlgebra::new(&r, &r, Symbolic).unwrap();
        let rep = verify_ch(&a, 1, 1, &CHOptions::default()).unwrap();
        assert!(rep.verdict, "{:?}", rep.first_residual);
    }

    #[test]
    fn classical_super_limit_matches_oracle() {
        let sp = super_permutation(1, 1).unwrap();
        let a = QMAlgebra::new(&sp, &sp, AtQ::new(Rational::from_int(1)).unwrap()).unwrap();
        let oracle = super_classical_oracle(1, 1).unwrap();
        assert!(a.relations().iter().all(|r| oracle.vanishes(r)));
        assert_eq!(a.rewrite_system().rank(), 16 - oracle.dimension(2));
        assert!(verify_ch(&a, 1, 1, &CHOptions::default()).unwrap().verdict);
        assert!(oracle.matrix_vanishes(&ch_lhs(&a, 1, 1).unwrap()));
        // a nonzero control: the matrix of generators does not vanish
        assert!(!oracle.matrix_vanishes(&a.generators()));
    }

    #[test]
    fn telescoping_chain_holds() {
        let a = rtt11();
        let rep = telescope_check(&a, 1, 1, Some(3)).unwrap();
        assert!(rep.verdict, "{:?}", rep.checks);
        assert!(rep.rectangle_term_zero);
    }

    #[test]
    fn boundary_elements_vanish() {
        let a = rtt11();
        assert!(p_element(&a, DistinguishedKind::PlusRow, 1, 1, 0, 1).unwrap().is_zero());
        assert!(p_element(&a, DistinguishedKind::PlusCol, 1, 1, 1, 0).unwrap().is_zero());
        assert!(p_element(&a, DistinguishedKind::Row, 1, 1, 0, 2).unwrap().is_zero());
        assert!(p_element(&a, DistinguishedKind::Col, 1, 1, 2, 0).unwrap().is_zero());
        assert!(!p_element(&a, DistinguishedKind::Col, 1, 1, 1, 0).unwrap().is_zero());
    }

    #[test]
    fn rectangular_powers() {
        let a = rtt11();
        for (r, s) in [(0, 0), (1, 0), (0, 1)] {
            let rep = rect_identity(&a, r, s, Some(4)).unwrap();
            assert!(rep.ensure().is_ok(), "{r},{s}: {:?}", rep.check);
        }
    }
}
