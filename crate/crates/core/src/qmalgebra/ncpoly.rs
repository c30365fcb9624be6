use std::collections::BTreeMap;

use super::word::Word;
use crate::scalars::Coeff;

/// Noncommutative polynomial in the generators `g_ij`: a map from words to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Default for NCPoly<C> {
    fn default() -> Self {
        NCPoly::zero()
    }
}

impl<C: Coeff> NCPoly<C> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Word::EMPTY, c)
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn monomial(w: Word, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn generator(letter: u8) -> Self {
        Self::monomial(Word::letter(letter), C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, C> {
        self.terms
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, C)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn coeff(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading(&self) -> Option<(&Word, &C)> {
        self.terms.iter().next_back()
    }

    pub fn pop_leading(&mut self) -> Option<(Word, C)> {
        self.terms.pop_last()
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (w, c) in &o.terms {
            self.add_term(*w, c.clone());
        }
    }

    /// `self += c·o`.
    pub fn add_scaled(&mut self, o: &Self, c: &C) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &o.terms {
            self.add_term(*w, x.mul(c));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(o, &C::one().neg());
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::one().neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, x)| (*w, x.mul(c))).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                r.add_term(a.concat(*b), x.mul(y));
            }
        }
        r
    }

    /// Multiplies by the word `u` on the left and `w` on the right.
    pub fn sandwich(&self, u: Word, w: Word) -> Self {
        NCPoly { terms: self.terms.iter().map(|(x, c)| (u.concat(*x).concat(w), c.clone())).collect() }
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|w| w.len());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// `true` for zero and for polynomials whose terms all have degree `d`.
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|w| w.len() == d)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> NCPoly<D> {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (*w, f(c))))
    }

    /// Human-readable form with generator names for `n` generators per row.
    pub fn display(&self, n: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(w, c)| format!("({c})*{}", w.display(n)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn g(l: u8) -> NCPoly<Rational> {
        NCPoly::generator(l)
    }

    #[test]
    fn products_do_not_commute() {
        let ab = g(0).mul(&g(1));
        let ba = g(1).mul(&g(0));
        assert_ne!(ab, ba);
        assert!(ab.sub(&ab).is_zero());
        assert_eq!(ab.homogeneous_degree(), Some(2));
    }

    #[test]
    fn homogeneity() {
        let p = g(0).add(&g(0).mul(&g(1)));
        assert_eq!(p.homogeneous_degree(), None);
        assert!(!p.is_homogeneous_of(1));
        assert!(NCPoly::<Rational>::zero().is_homogeneous_of(4));
        assert_eq!(NCPoly::<Rational>::one().homogeneous_degree(), Some(0));
    }

    #[test]
    fn sandwich_and_leading() {
        let p = g(1).add(&g(0).scale(&Rational::from_int(3)));
        let s = p.sandwich(Word::letter(2), Word::letter(3));
        assert_eq!(s.leading().unwrap().0.letters(), vec![2, 1, 3]);
        assert_eq!(s.coeff(&Word::from_letters(&[2, 0, 3])), Rational::from_int(3));
    }
}
