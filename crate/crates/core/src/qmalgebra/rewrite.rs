//! Normal forms modulo homogeneous relations by word rewriting.
//!
//! Rules are oriented by graded-lexicographic order on words: every rule
//! replaces its leading word by a combination of strictly smaller words.
//! The degree-2 rules come from Gaussian elimination on the defining
//! relations; [`RewriteSystem::complete`] adds the higher-degree rules found
//! by resolving overlaps, up to a fixed degree.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::ncpoly::NCPoly;
use super::word::Word;
use crate::scalars::Coeff;

/// Which redex a reduction step rewrites first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem<C> {
    rules: HashMap<Word, NCPoly<C>>,
    lens: BTreeSet<usize>,
    degree2_rank: usize,
    admissible2: Vec<Word>,
    completed_to: usize,
    added_by_completion: usize,
}

/// Summary of a rewrite system.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct RewriteStats {
    pub degree2_rank: usize,
    pub admissible_degree2: usize,
    pub rules: usize,
    pub completed_to_degree: usize,
    pub rules_added_by_completion: usize,
}

/// Echelon basis of a list of polynomials: monic rows keyed by leading word,
/// each row free of the other rows' leading words.
pub fn echelon<C: Coeff>(polys: &[NCPoly<C>]) -> BTreeMap<Word, NCPoly<C>> {
    let mut piv: BTreeMap<Word, NCPoly<C>> = BTreeMap::new();
    for p in polys {
        let mut r = p.clone();
        while let Some((&h, c)) = r.leading() {
            match piv.get(&h) {
                Some(row) => {
                    let c = c.neg();
                    r.add_scaled(row, &c);
                }
                None => {
                    let inv = c.inv().expect("nonzero leading coefficient");
                    piv.insert(h, r.scale(&inv));
                    break;
                }
            }
        }
    }
    // back-substitution, smallest leading word first
    let heads: Vec<Word> = piv.keys().copied().collect();
    for (idx, h) in heads.iter().enumerate() {
        let mut row = piv.remove(h).unwrap();
        for lower in heads[..idx].iter().rev() {
            let c = row.coeff(lower);
            if !c.is_zero() {
                row.add_scaled(&piv[lower], &c.neg());
            }
        }
        piv.insert(*h, row);
    }
    piv
}

impl<C: Coeff> RewriteSystem<C> {
    /// Degree-2 rules from homogeneous quadratic relations over `letters`
    /// generators.
    pub fn build(rels: &[NCPoly<C>], letters: usize) -> Self {
        let piv = echelon(rels);
        let mut rules = HashMap::new();
        let mut lens = BTreeSet::new();
        for (h, row) in &piv {
            let mut rhs = row.clone();
            rhs.pop_leading();
            rules.insert(*h, rhs.neg());
            lens.insert(h.len());
        }
        let mut admissible2 = Vec::new();
        for a in 0..letters {
            for b in 0..letters {
                let w = Word::from_letters(&[a as u8, b as u8]);
                if !rules.contains_key(&w) {
                    admissible2.push(w);
                }
            }
        }
        RewriteSystem { degree2_rank: piv.len(), rules, lens, admissible2, completed_to: 2, added_by_completion: 0 }
    }

    pub fn rank(&self) -> usize {
        self.degree2_rank
    }

    pub fn admissible_degree2(&self) -> &[Word] {
        &self.admissible2
    }

    pub fn num_rules(&self) -> usize {
        self.rules.len()
    }

    pub fn rule(&self, lhs: &Word) -> Option<&NCPoly<C>> {
        self.rules.get(lhs)
    }

    pub fn leading_words(&self) -> impl Iterator<Item = &Word> {
        self.rules.keys()
    }

    pub fn stats(&self) -> RewriteStats {
        RewriteStats {
            degree2_rank: self.degree2_rank,
            admissible_degree2: self.admissible2.len(),
            rules: self.rules.len(),
            completed_to_degree: self.completed_to,
            rules_added_by_completion: self.added_by_completion,
        }
    }

    fn find_redex(&self, w: Word, strategy: Strategy) -> Option<(usize, usize)> {
        let len = w.len();
        let try_at = |start: usize| {
            self.lens.iter().find(|&&l| start + l <= len && self.rules.contains_key(&w.sub(start, l))).map(|&l| (start, l))
        };
        match strategy {
            Strategy::Leftmost => (0..len).find_map(try_at),
            Strategy::Rightmost => (0..len).rev().find_map(try_at),
        }
    }

    pub fn is_normal(&self, w: Word) -> bool {
        self.find_redex(w, Strategy::Leftmost).is_none()
    }

    /// Normal form: the largest word is rewritten first, at its leftmost redex.
    pub fn normal_form(&self, p: &NCPoly<C>) -> NCPoly<C> {
        self.normal_form_with(p, Strategy::Leftmost)
    }

    pub fn normal_form_with(&self, p: &NCPoly<C>, strategy: Strategy) -> NCPoly<C> {
        let mut work = p.clone();
        let mut out = NCPoly::zero();
        while let Some((w, c)) = work.pop_leading() {
            match self.find_redex(w, strategy) {
                None => out.add_term(w, c),
                Some((start, l)) => {
                    let rhs = &self.rules[&w.sub(start, l)];
                    let (u, v) = (w.sub(0, start), w.sub(start + l, w.len() - start - l));
                    work.add_scaled(&rhs.sandwich(u, v), &c);
                }
            }
        }
        out
    }

    fn insert_poly(&mut self, p: NCPoly<C>) -> bool {
        let mut work = vec![p];
        let mut changed = false;
        while let Some(p) = work.pop() {
            let r = self.normal_form(&p);
            let Some((&h, c)) = r.leading() else { continue };
            let inv = c.inv().expect("nonzero");
            let mut rhs = r.scale(&inv);
            rhs.pop_leading();
            // rules whose leading word contains h become reducible; requeue them
            let stale: Vec<Word> = self
                .rules
                .keys()
                .filter(|&&lhs| lhs.len() >= h.len() && (0..=lhs.len() - h.len()).any(|s| lhs.sub(s, h.len()) == h))
                .copied()
                .collect();
            for lhs in stale {
                let rhs_old = self.rules.remove(&lhs).unwrap();
                work.push(NCPoly::monomial(lhs, C::one()).sub(&rhs_old));
            }
            self.rules.insert(h, rhs.neg());
            self.lens.insert(h.len());
            changed = true;
        }
        if changed {
            self.lens = self.rules.keys().map(|w| w.len()).collect();
            let keys: Vec<Word> = self.rules.keys().copied().collect();
            for k in keys {
                let rhs = self.rules[&k].clone();
                let nf = self.normal_form(&rhs);
                self.rules.insert(k, nf);
            }
        }
        changed
    }

    /// Resolves all overlaps of leading words that fit in `max_degree`,
    /// adding rules until every such overlap reduces to zero. Returns the
    /// number of rules added.
    pub fn complete(&mut self, max_degree: usize) -> usize {
        let mut added = 0;
        loop {
            let mut pending = Vec::new();
            let lhss: Vec<Word> = self.rules.keys().copied().collect();
            for &a in &lhss {
                for &b in &lhss {
                    let (la, lb) = (a.len(), b.len());
                    for o in 1..la.min(lb) {
                        if la + lb - o > max_degree {
                            continue;
                        }
                        if a.sub(la - o, o) != b.sub(0, o) {
                            continue;
                        }
                        let u = a.sub(0, la - o);
                        let v = b.sub(o, lb - o);
                        // (a - rhs_a)·v - u·(b - rhs_b)
                        let s = self.rules[&b].sandwich(u, Word::EMPTY).sub(&self.rules[&a].sandwich(Word::EMPTY, v));
                        let nf = self.normal_form(&s);
                        if !nf.is_zero() {
                            pending.push(nf);
                        }
                    }
                }
            }
            if pending.is_empty() {
                break;
            }
            for p in pending {
                if self.insert_poly(p) {
                    added += 1;
                }
            }
        }
        self.completed_to = self.completed_to.max(max_degree);
        // longer leading words never make a quadratic rule reducible
        self.added_by_completion = self.rules.len() - self.degree2_rank;
        added
    }

    pub fn completed_to(&self) -> usize {
        self.completed_to
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn w(ls: &[u8]) -> Word {
        Word::from_letters(ls)
    }

    fn commutators(letters: usize) -> Vec<NCPoly<Rational>> {
        let mut out = Vec::new();
        for a in 0..letters as u8 {
            for b in 0..letters as u8 {
                if a != b {
                    out.push(NCPoly::monomial(w(&[a, b]), Rational::one()).sub(&NCPoly::monomial(w(&[b, a]), Rational::one())));
                }
            }
        }
        out
    }

    #[test]
    fn commutative_case_sorts_words() {
        let rs = RewriteSystem::build(&commutators(4), 4);
        assert_eq!(rs.rank(), 6);
        assert_eq!(rs.admissible_degree2().len(), 10);
        for a in rs.admissible_degree2() {
            assert!(a.at(0) <= a.at(1));
        }
        let p = NCPoly::monomial(w(&[3, 1, 2, 0]), Rational::one());
        assert_eq!(rs.normal_form(&p), NCPoly::monomial(w(&[0, 1, 2, 3]), Rational::one()));
    }

    #[test]
    fn relations_reduce_to_zero_and_normal_forms_are_fixed() {
        let rels = commutators(3);
        let rs = RewriteSystem::build(&rels, 3);
        for r in &rels {
            assert!(rs.normal_form(r).is_zero());
        }
        let p = NCPoly::monomial(w(&[0, 1, 2]), Rational::from_int(2));
        assert_eq!(rs.normal_form(&p), p);
        assert!(RewriteSystem::<Rational>::build(&[], 1).num_rules() == 0);
    }

    #[test]
    fn completion_adds_missing_overlap_rules() {
        // xy = 2yx and xx = yy: the overlap x·x·y has cubic consequences
        let x = 1u8;
        let y = 0u8;
        let r1 = NCPoly::monomial(w(&[x, y]), Rational::one()).sub(&NCPoly::monomial(w(&[y, x]), Rational::from_int(2)));
        let r2 = NCPoly::monomial(w(&[x, x]), Rational::one()).sub(&NCPoly::monomial(w(&[y, y]), Rational::one()));
        let mut rs = RewriteSystem::build(&[r1, r2], 2);
        rs.complete(3);
        // after completion both strategies agree on every cubic word
        for a in 0..2u8 {
            for b in 0..2u8 {
                for c in 0..2u8 {
                    let p = NCPoly::monomial(w(&[a, b, c]), Rational::one());
                    assert_eq!(rs.normal_form(&p), rs.normal_form_with(&p, Strategy::Rightmost));
                }
            }
        }
    }
}
