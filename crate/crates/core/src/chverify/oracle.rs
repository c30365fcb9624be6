//! The `q = 1` limit of the `(1|1)` case as a free supercommutative algebra,
//! reduced by sorting letters with Koszul signs. Independent of the rewrite
//! machinery: only the words of the input are read.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::qmalgebra::{AlgMatrix, NCPoly};
use crate::scalars::{Coeff, Rational};

/// Supercommutative monomial: sorted letters, odd letters at most once.
pub type Monomial = Vec<u8>;

#[derive(Clone, Debug)]
pub struct SuperClassicalOracle {
    n: usize,
    odd: Vec<bool>,
}

/// The oracle for `(m,n) = (1,1)`: generators `g_ij` with parity `|i|+|j|`,
/// where index 1 is even and index 2 odd.
pub fn super_classical_oracle(m: usize, n: usize) -> Result<SuperClassicalOracle> {
    if (m, n) != (1, 1) {
        return Err(Error::Unsupported(format!("supercommutative oracle only for (1,1), not ({m},{n})")));
    }
    let size = m + n;
    let parity = |i: usize| i >= m;
    let odd = (0..size * size).map(|l| parity(l / size) ^ parity(l % size)).collect();
    Ok(SuperClassicalOracle { n: size, odd })
}

impl SuperClassicalOracle {
    pub fn is_odd(&self, letter: u8) -> bool {
        self.odd[letter as usize]
    }

    /// Sorts a word into a monomial; `None` when an odd letter repeats.
    pub fn reduce_word(&self, w: &[u8]) -> Option<(i64, Monomial)> {
        let mut v = w.to_vec();
        let mut sign = 1;
        // insertion sort, counting transpositions of two odd letters
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                if self.is_odd(v[j - 1]) && self.is_odd(v[j]) {
                    sign = -sign;
                }
                v.swap(j - 1, j);
                j -= 1;
            }
        }
        if v.windows(2).any(|p| p[0] == p[1] && self.is_odd(p[0])) {
            return None;
        }
        Some((sign, v))
    }

    pub fn reduce(&self, p: &NCPoly<Rational>) -> BTreeMap<Monomial, Rational> {
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (w, c) in p.terms() {
            if let Some((sign, mono)) = self.reduce_word(&w.letters()) {
                let e = out.entry(mono).or_insert_with(Rational::zero);
                *e = e.add(&c.mul(&Rational::from_int(sign)));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn vanishes(&self, p: &NCPoly<Rational>) -> bool {
        self.reduce(p).is_empty()
    }

    pub fn matrix_vanishes(&self, m: &AlgMatrix<Rational>) -> bool {
        m.entries().all(|(_, p)| self.vanishes(p))
    }

    /// Dimension of the degree-`d` part, counted by enumerating words.
    pub fn dimension(&self, d: usize) -> usize {
        let letters = (self.n * self.n) as u8;
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        for _ in 0..d {
            words = words.iter().flat_map(|w| (0..letters).map(move |l| [w.as_slice(), &[l]].concat())).collect();
        }
        let mut monos: Vec<Monomial> = words.iter().filter_map(|w| self.reduce_word(w).map(|x| x.1)).collect();
        monos.sort();
        monos.dedup();
        monos.len()
    }
}
