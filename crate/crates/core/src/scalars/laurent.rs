use std::collections::BTreeMap;
use std::fmt;

use super::{Coeff, Rational};

/// Laurent polynomial in `q` with rational coefficients. No zero coefficient
/// is ever stored, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// The coefficient at `q^e`; zero when absent.
    pub fn coeff(&self, e: i32) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Constant value when the polynomial has no `q` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, e: i32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let remove = {
            let slot = self.terms.entry(e).or_insert_with(Rational::zero);
            slot.add_assign(c);
            slot.is_zero()
        };
        if remove {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, &c.neg());
        }
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x.mul(c))).collect() }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = LaurentPoly::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Exact value at `q = q0`. Fails only for `q0 = 0` with negative exponents present.
    pub fn eval(&self, q0: &Rational) -> Option<Rational> {
        if q0.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc.add_assign(&c.mul(&q0.pow(*e)));
        }
        Some(acc)
    }

    /// Coefficients of `q^{-min} * self` in increasing degree, together with `min`.
    pub(crate) fn to_dense(&self) -> (i32, Vec<Rational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(lo: i32, v: &[Rational]) -> Self {
        LaurentPoly::from_terms(v.iter().enumerate().map(|(i, c)| (lo + i as i32, c.clone())))
    }
}

/// Ordinary polynomial helpers on dense coefficient vectors (lowest degree first).
pub(crate) mod dense {
    use super::{Coeff, Rational};

    pub fn trim(v: &mut Vec<Rational>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    /// Quotient and remainder of `a / b`; `b` must be nonzero.
    pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r: Vec<Rational> = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = b[db].inv().expect("nonzero leading coefficient");
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut quo = vec![Rational::zero(); r.len() - db];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let c = r[r.len() - 1].mul(&lead_inv);
            for (i, bc) in b.iter().enumerate() {
                r[k + i] = r[k + i].sub(&c.mul(bc));
            }
            quo[k] = c;
            r.pop();
            trim(&mut r);
        }
        (quo, r)
    }

    /// Monic gcd.
    pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut x: Vec<Rational> = a.to_vec();
        let mut y: Vec<Rational> = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y);
            x = y;
            y = r;
        }
        if let Some(l) = x.last().cloned() {
            let li = l.inv().unwrap();
            for c in x.iter_mut() {
                *c = c.mul(&li);
            }
        }
        x
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let coef_str = if a.is_integer() { a.to_string() } else { format!("({a})") };
            match *e {
                0 => write!(f, "{coef_str}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coef_str}*")?;
                    }
                    if *e == 1 {
                        write!(f, "q")?;
                    } else if *e < 0 {
                        write!(f, "q^({e})")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absent_exponent_is_zero() {
        let p = LaurentPoly::q_pow(3);
        assert!(p.coeff(2).is_zero());
        assert!(p.coeff(3).is_one());
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = LaurentPoly::q_pow(1).add(&LaurentPoly::q_pow(-1));
        let d = p.sub(&LaurentPoly::q_pow(-1));
        assert_eq!(d, LaurentPoly::q_pow(1));
        assert_eq!(d.num_terms(), 1);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn dense_gcd() {
        // (x+1)(x+2) and (x+1)(x-3)
        let r = |n| Rational::from_int(n);
        let a = vec![r(2), r(3), r(1)];
        let b = vec![r(-3), r(-2), r(1)];
        assert_eq!(dense::gcd(&a, &b), vec![r(1), r(1)]);
    }
}
