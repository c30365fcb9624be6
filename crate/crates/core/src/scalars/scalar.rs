use std::fmt;
use std::hash::{Hash, Hasher};

use super::laurent::{dense, LaurentPoly};
use super::{Coeff, Rational};
use crate::error::{Error, Result};

/// Element of the field `Q(q)`, stored as a reduced fraction of Laurent
/// polynomials.
///
/// The denominator is kept as an ordinary polynomial with nonzero constant
/// term equal to 1, and all common factors are cancelled. This makes the
/// representation canonical, so `==` decides equality of rational functions.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (e, c) in self.num.terms() {
            e.hash(state);
            c.hash(state);
        }
        0xffu8.hash(state);
        for (e, c) in self.den.terms() {
            e.hash(state);
            c.hash(state);
        }
    }
}

impl Scalar {
    pub fn q() -> Self {
        Scalar::q_pow(1)
    }

    pub fn q_pow(e: i32) -> Self {
        Scalar::from_laurent(LaurentPoly::q_pow(e))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Scalar { num: p, den: LaurentPoly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Scalar::from_laurent(LaurentPoly::constant(c))
    }

    /// Builds `num / den`, reducing to canonical form.
    pub fn fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(Self::normalized(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// Returns the Laurent polynomial when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.as_laurent().and_then(|p| p.as_constant())
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Scalar { num, den: LaurentPoly::one() };
        }
        if den.is_one() {
            return Scalar { num, den };
        }
        let (nlo, mut n) = num.to_dense();
        let (dlo, mut d) = den.to_dense();
        if d.len() > 1 && n.len() > 1 {
            let g = dense::gcd(&n, &d);
            if g.len() > 1 {
                n = dense::divrem(&n, &g).0;
                d = dense::divrem(&d, &g).0;
            }
        }
        let lead_inv = d[0].inv().expect("dense form has nonzero constant term");
        for c in n.iter_mut() {
            *c = c.mul(&lead_inv);
        }
        for c in d.iter_mut() {
            *c = c.mul(&lead_inv);
        }
        Scalar { num: LaurentPoly::from_dense(nlo - dlo, &n), den: LaurentPoly::from_dense(0, &d) }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(Self::normalized(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            let inv = self.inv().ok_or_else(|| Error::Domain("zero to a negative power".into()))?;
            return inv.pow(-e);
        }
        Ok(Scalar { num: self.num.pow(e as u32), den: self.den.pow(e as u32) })
    }

    /// Exact value at `q = q0`.
    pub fn eval_at(&self, q0: &Rational) -> Result<Rational> {
        if q0.is_zero() {
            return Err(Error::ZeroQ);
        }
        let d = self.den.eval(q0).expect("q0 nonzero");
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        let n = self.num.eval(q0).expect("q0 nonzero");
        Ok(n.mul(&d.inv().unwrap()))
    }
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }
    fn one() -> Self {
        Scalar { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }
    fn from_i64(n: i64) -> Self {
        Scalar::from_rational(Rational::from_int(n))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            let num = self.num.add(&o.num);
            if self.den.is_one() {
                return Scalar { num, den: LaurentPoly::one() };
            }
            return Self::normalized(num, self.den.clone());
        }
        Self::normalized(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.mul(&o.num), den: LaurentPoly::one() };
        }
        Self::normalized(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::from_rational(c)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::from_laurent(p)
    }
}
