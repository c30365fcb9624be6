//! Exact coefficient arithmetic: rationals, Laurent polynomials in `q`,
//! rational functions of `q`, q-numbers, and the scalar contexts that every
//! downstream computation is generic over.

mod laurent;
mod parse;
mod rational;
mod scalar;

use std::fmt;

pub use laurent::LaurentPoly;
pub use parse::parse_scalar;
pub use rational::Rational;
pub use scalar::Scalar;

use crate::error::{Error, Result};

/// Field operations shared by the symbolic (`Q(q)`) and numeric (`Q`)
/// coefficient types.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }
}

/// Where coefficients live: symbolic `Q(q)` or `Q` with `q` fixed to a
/// rational value.
pub trait Context: Clone + fmt::Debug + Send + Sync + 'static {
    type C: Coeff;

    /// Specializes a symbolic scalar into this context.
    fn lift(&self, s: &Scalar) -> Result<Self::C>;

    fn is_symbolic(&self) -> bool;

    /// `"symbolic"` or `"q=<value>"`.
    fn label(&self) -> String;

    fn q(&self) -> Self::C {
        self.lift(&Scalar::q()).expect("q is regular in every context")
    }

    /// Checks `k_q != 0` for `1 <= k <= bound`, the semisimplicity condition
    /// needed by the Hecke matrix units.
    fn validate(&self, bound: usize) -> Result<()> {
        for k in 1..=bound as i32 {
            let v = self.lift(&qnum(k))?;
            if v.is_zero() {
                return Err(Error::DegenerateQ(format!("{k}_q vanishes in context {}", self.label())));
            }
        }
        Ok(())
    }
}

/// Coefficients in `Q(q)` with `q` an indeterminate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Symbolic;

impl Context for Symbolic {
    type C = Scalar;

    fn lift(&self, s: &Scalar) -> Result<Scalar> {
        Ok(s.clone())
    }

    fn is_symbolic(&self) -> bool {
        true
    }

    fn label(&self) -> String {
        "symbolic".into()
    }
}

/// Coefficients in `Q` with `q = q0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtQ {
    q0: Rational,
}

impl AtQ {
    pub fn new(q0: Rational) -> Result<Self> {
        if q0.is_zero() {
            return Err(Error::ZeroQ);
        }
        Ok(AtQ { q0 })
    }

    pub fn value(&self) -> &Rational {
        &self.q0
    }
}

impl Context for AtQ {
    type C = Rational;

    fn lift(&self, s: &Scalar) -> Result<Rational> {
        s.eval_at(&self.q0)
    }

    fn is_symbolic(&self) -> bool {
        false
    }

    fn label(&self) -> String {
        format!("q={}", self.q0)
    }
}

/// The q-number `k_q = (q^k - q^{-k}) / (q - q^{-1})`, as a Laurent polynomial.
pub fn qnum(k: i32) -> Scalar {
    Scalar::from_laurent(qnum_laurent(k))
}

pub fn qnum_laurent(k: i32) -> LaurentPoly {
    let a = k.abs();
    let sign = if k < 0 { -1 } else { 1 };
    LaurentPoly::from_terms((0..a).map(|j| (a - 1 - 2 * j, Rational::from_int(sign))))
}

/// Normalization of the off-diagonal matrix units, `omega(l) = l_q / (l+1)_q`.
pub fn omega(ell: i32) -> Result<Scalar> {
    if ell == -1 {
        return Err(Error::Domain("omega(-1) has a vanishing denominator".into()));
    }
    qnum(ell).div(&qnum(ell + 1))
}

/// `q^c * c_q = (q^{2c} - 1)/(q - q^{-1})`: the eigenvalue of the additive
/// Jucys-Murphy element on a cell of content `c`.
pub fn content_eigenvalue(c: i32) -> Scalar {
    Scalar::from_laurent(qnum_laurent(c).shift(c))
}

pub fn eval_at(s: &Scalar, q0: &Rational) -> Result<Rational> {
    s.eval_at(q0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qi(k: i32) -> Scalar {
        qnum(k)
    }

    #[test]
    fn qnum_examples() {
        assert!(qnum(0).is_zero());
        assert!(qnum(1).is_one());
        let three = Scalar::q_pow(2).add(&Scalar::one()).add(&Scalar::q_pow(-2));
        assert_eq!(qnum(3), three);
        assert_eq!(qnum(-3), three.neg());
    }

    #[test]
    fn qnum_matches_defining_quotient() {
        // (q^k - q^-k) / (q - q^-1) computed as a genuine fraction.
        let den = Scalar::q().sub(&Scalar::q_pow(-1));
        for k in -7..=7 {
            let num = Scalar::q_pow(k).sub(&Scalar::q_pow(-k));
            assert_eq!(num.div(&den).unwrap(), qnum(k), "k = {k}");
        }
    }

    #[test]
    fn qnum_classical_limit() {
        for k in -8..=8 {
            assert_eq!(qnum(k).eval_at(&Rational::one()).unwrap(), Rational::from_int(k as i64));
        }
    }

    #[test]
    fn omega_examples() {
        let expected = Scalar::one().div(&Scalar::q().add(&Scalar::q_pow(-1))).unwrap();
        assert_eq!(omega(1).unwrap(), expected);
        assert!(omega(0).unwrap().is_zero());
        assert!(matches!(omega(-1), Err(Error::Domain(_))));
    }

    #[test]
    fn omega_satisfies_normalization_relation() {
        for ell in 2..=7 {
            let lhs = omega(ell).unwrap().mul(&omega(-ell).unwrap());
            let rhs = qi(ell).mul(&qi(ell)).div(&qi(ell + 1).mul(&qi(ell - 1))).unwrap();
            assert_eq!(lhs, rhs, "ell = {ell}");
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(qnum(2).eval_at(&Rational::one()).unwrap(), Rational::from_int(2));
        assert_eq!(qnum(2).eval_at(&Rational::from_int(2)).unwrap(), Rational::new(5, 2));
        let s = Scalar::one().div(&Scalar::q().sub(&Scalar::q_pow(-1))).unwrap();
        assert!(matches!(s.eval_at(&Rational::one()), Err(Error::Pole(_))));
        assert!(matches!(s.eval_at(&Rational::zero()), Err(Error::ZeroQ)));
    }

    #[test]
    fn content_eigenvalue_limits() {
        for c in -5..=5 {
            assert_eq!(content_eigenvalue(c).eval_at(&Rational::one()).unwrap(), Rational::from_int(c as i64));
            let direct = Scalar::q_pow(2 * c)
                .sub(&Scalar::one())
                .div(&Scalar::q().sub(&Scalar::q_pow(-1)))
                .unwrap();
            assert_eq!(content_eigenvalue(c), direct);
        }
    }

    #[test]
    fn canonical_form_makes_equality_syntactic() {
        let a = parse_scalar("(2*q+2)/(4*q^2-4)").unwrap();
        let b = parse_scalar("1/(2*q-2)").unwrap();
        assert_eq!(a, b);
        assert!(b.denom().min_exp() == Some(0));
        assert!(b.denom().coeff(0).is_one());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        let lp = prop::collection::vec((-3i32..=3, -4i64..=4), 0..4)
            .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, Rational::from_int(c)))));
        (lp.clone(), lp).prop_map(|(n, d)| {
            if d.is_zero() {
                Scalar::from_laurent(n)
            } else {
                Scalar::fraction(n, d).unwrap()
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn equality_agrees_with_cross_multiplication(a in arb_scalar(), b in arb_scalar()) {
            let cross = a.numer().mul(b.denom()) == b.numer().mul(a.denom());
            prop_assert_eq!(a == b, cross);
        }

        #[test]
        fn print_parse_round_trip(a in arb_scalar()) {
            prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
        }

        #[test]
        fn q_addition_formula(x in -6i32..=6, y in -6i32..=6) {
            let lhs = Scalar::q_pow(x).mul(&qi(y)).add(&Scalar::q_pow(-y).mul(&qi(x)));
            prop_assert_eq!(lhs, qi(x + y));
        }

        #[test]
        fn q_three_term_identity(x in 1i32..=6, y in -6i32..=6, z in -6i32..=6) {
            let t1 = Scalar::q_pow(-x).mul(&qi(x + y + 1)).mul(&qi(z)).div(&qi(x)).unwrap();
            let t2 = Scalar::q().mul(&qi(y)).mul(&qi(x + z + 1));
            let t3 = Scalar::q_pow(z - y).mul(&qi(x + 1));
            let rhs = qi(x + 1).mul(&qi(y + 1)).mul(&qi(x + z)).div(&qi(x)).unwrap();
            prop_assert_eq!(t1.add(&t2).add(&t3), rhs);
        }
    }
}
