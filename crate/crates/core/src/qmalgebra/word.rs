use std::fmt;

/// Maximum word length that fits the packed encoding.
pub const MAX_LEN: usize = 15;

/// A word over at most 256 letters, packed into a `u128`: the top byte holds
/// the length and the following bytes the letters, first letter highest.
/// Integer comparison is therefore graded-lexicographic comparison.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(u128);

impl Word {
    pub const EMPTY: Word = Word(0);

    pub fn letter(l: u8) -> Word {
        Word::from_letters(&[l])
    }

    pub fn from_letters(ls: &[u8]) -> Word {
        assert!(ls.len() <= MAX_LEN, "word longer than {MAX_LEN}");
        let mut v = (ls.len() as u128) << 120;
        for (i, &l) in ls.iter().enumerate() {
            v |= (l as u128) << (112 - 8 * i);
        }
        Word(v)
    }

    pub fn len(self) -> usize {
        (self.0 >> 120) as usize
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    pub fn at(self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        (self.0 >> (112 - 8 * i)) as u8
    }

    pub fn letters(self) -> Vec<u8> {
        (0..self.len()).map(|i| self.at(i)).collect()
    }

    fn body(self) -> u128 {
        self.0 & ((1u128 << 120) - 1)
    }

    /// Concatenation `self·o`.
    pub fn concat(self, o: Word) -> Word {
        let (a, b) = (self.len(), o.len());
        assert!(a + b <= MAX_LEN, "word longer than {MAX_LEN}");
        if a == 0 {
            return o;
        }
        Word((((a + b) as u128) << 120) | self.body() | (o.body() >> (8 * a)))
    }

    /// Factor of length `len` starting at `start`.
    pub fn sub(self, start: usize, len: usize) -> Word {
        debug_assert!(start + len <= self.len());
        if len == 0 {
            return Word::EMPTY;
        }
        let shifted = self.body() << (8 * start);
        let mask = ((1u128 << (8 * len)) - 1) << (120 - 8 * len);
        Word(((len as u128) << 120) | (shifted & mask))
    }

    /// Replaces the factor at `start` of length `len` by `mid`.
    pub fn splice(self, start: usize, len: usize, mid: Word) -> Word {
        self.sub(0, start).concat(mid).concat(self.sub(start + len, self.len() - start - len))
    }

    /// Displays with generator names `g_ij`, 1-based, for `n` generators per row.
    pub fn display(self, n: usize) -> String {
        if self.is_empty() {
            return "1".into();
        }
        self.letters()
            .iter()
            .map(|&l| format!("g{}{}", l as usize / n + 1, l as usize % n + 1))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn packing_round_trips() {
        let w = Word::from_letters(&[3, 0, 7]);
        assert_eq!(w.letters(), vec![3, 0, 7]);
        assert_eq!(w.len(), 3);
        assert_eq!(Word::EMPTY.len(), 0);
    }

    #[test]
    fn order_is_graded_lexicographic() {
        let a = Word::from_letters(&[5, 5]);
        let b = Word::from_letters(&[0, 0, 0]);
        assert!(a < b);
        assert!(Word::from_letters(&[0, 5]) < Word::from_letters(&[1, 0]));
        assert!(Word::from_letters(&[1, 0]) < Word::from_letters(&[1, 1]));
    }

    #[test]
    fn display_names() {
        assert_eq!(Word::from_letters(&[0, 3]).display(2), "g11*g22");
        assert_eq!(Word::EMPTY.display(2), "1");
    }

    proptest! {
        #[test]
        fn concat_sub_splice(a in prop::collection::vec(0u8..9, 0..6), b in prop::collection::vec(0u8..9, 0..6)) {
            let (wa, wb) = (Word::from_letters(&a), Word::from_letters(&b));
            let ab = wa.concat(wb);
            let mut joined = a.clone();
            joined.extend(&b);
            prop_assert_eq!(ab.letters(), joined.clone());
            prop_assert_eq!(ab.sub(a.len(), b.len()), wb);
            prop_assert_eq!(ab.sub(0, a.len()), wa);
            if !joined.is_empty() {
                let s = ab.splice(0, 1, Word::from_letters(&[8, 8]));
                let mut e = vec![8, 8];
                e.extend(&joined[1..]);
                prop_assert_eq!(s.letters(), e);
            }
            let lex = (a.len(), a.clone()).cmp(&(b.len(), b.clone()));
            prop_assert_eq!(wa.cmp(&wb), lex);
        }
    }
}
