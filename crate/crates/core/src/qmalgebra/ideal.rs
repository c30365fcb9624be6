//! Ideal membership in a fixed degree by exact linear algebra.
//!
//! A homogeneous `p` of degree `d` lies in the two-sided ideal generated by
//! homogeneous relations iff it is a combination of the products `u·r·w` of
//! degree `d`. Only the products sharing a connected block of words with `p`
//! can contribute, so the spanning set is cut down with a union-find pass
//! before elimination.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::ncpoly::NCPoly;
use super::rewrite::echelon;
use super::word::Word;
use crate::error::{Error, Result};
use crate::scalars::Coeff;

struct UnionFind {
    parent: HashMap<Word, Word>,
}

impl UnionFind {
    fn find(&mut self, w: Word) -> Word {
        let mut root = w;
        while let Some(&p) = self.parent.get(&root) {
            if p == root {
                break;
            }
            root = p;
        }
        let mut cur = w;
        while cur != root {
            let next = *self.parent.get(&cur).unwrap_or(&root);
            self.parent.insert(cur, root);
            cur = next;
        }
        self.parent.entry(root).or_insert(root);
        root
    }

    fn union(&mut self, a: Word, b: Word) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent.insert(ra, rb);
        }
    }
}

fn all_words(letters: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::EMPTY];
    for _ in 0..len {
        out = out.iter().flat_map(|w| (0..letters as u8).map(move |l| w.concat(Word::letter(l)))).collect();
    }
    out
}

/// Calls `f` on every product `u·r·w` of total degree `d`.
fn for_each_product<C: Coeff>(rels: &[NCPoly<C>], letters: usize, d: usize, mut f: impl FnMut(NCPoly<C>)) {
    for r in rels {
        let Some(e) = r.homogeneous_degree() else { continue };
        if e > d {
            continue;
        }
        for a in 0..=d - e {
            let us = all_words(letters, a);
            let ws = all_words(letters, d - e - a);
            for &u in &us {
                for &w in &ws {
                    f(r.sandwich(u, w));
                }
            }
        }
    }
}

/// Decides membership of each of `ps` in the ideal generated by the
/// homogeneous relations `rels` over `letters` generators. Degrees above
/// `bound` are refused.
pub fn ideal_member_all<C: Coeff>(ps: &[NCPoly<C>], rels: &[NCPoly<C>], letters: usize, bound: usize) -> Result<Vec<bool>> {
    let mut by_degree: BTreeMap<usize, Vec<(usize, NCPoly<C>)>> = BTreeMap::new();
    let mut verdict = vec![true; ps.len()];
    for (idx, p) in ps.iter().enumerate() {
        // components of different degree are tested separately
        let mut parts: BTreeMap<usize, NCPoly<C>> = BTreeMap::new();
        for (w, c) in p.terms() {
            parts.entry(w.len()).or_default().add_term(*w, c.clone());
        }
        for (d, part) in parts {
            if d > bound {
                return Err(Error::BoundExceeded(format!("ideal membership at degree {d} exceeds bound {bound}")));
            }
            by_degree.entry(d).or_default().push((idx, part));
        }
    }
    let basis: Vec<NCPoly<C>> = echelon(rels).into_values().collect();
    for (d, items) in by_degree {
        let mut uf = UnionFind { parent: HashMap::new() };
        for_each_product(&basis, letters, d, |row| {
            let mut it = row.terms().map(|(w, _)| *w);
            if let Some(first) = it.next() {
                for w in it {
                    uf.union(first, w);
                }
            }
        });
        let mut roots = HashSet::new();
        for (_, p) in &items {
            for (w, _) in p.terms() {
                roots.insert(uf.find(*w));
            }
        }
        let mut pivots: HashMap<Word, NCPoly<C>> = HashMap::new();
        for_each_product(&basis, letters, d, |row| {
            let Some((&lead, _)) = row.leading() else { return };
            if !roots.contains(&uf.find(lead)) {
                return;
            }
            if let Some(r) = head_reduce(row, &pivots) {
                let (&h, c) = r.leading().expect("nonzero");
                let inv = c.inv().expect("nonzero leading coefficient");
                pivots.insert(h, r.scale(&inv));
            }
        });
        for (idx, p) in items {
            if head_reduce(p, &pivots).is_some() {
                verdict[idx] = false;
            }
        }
    }
    Ok(verdict)
}

/// Cancels leading words against the pivots; `None` when nothing is left.
fn head_reduce<C: Coeff>(mut p: NCPoly<C>, pivots: &HashMap<Word, NCPoly<C>>) -> Option<NCPoly<C>> {
    loop {
        let (h, c) = {
            let (h, c) = p.leading()?;
            (*h, c.clone())
        };
        match pivots.get(&h) {
            Some(row) => p.add_scaled(row, &c.neg()),
            None => return Some(p),
        }
    }
}

pub fn ideal_member<C: Coeff>(p: &NCPoly<C>, rels: &[NCPoly<C>], letters: usize, bound: usize) -> Result<bool> {
    Ok(ideal_member_all(std::slice::from_ref(p), rels, letters, bound)?[0])
}
