use super::ncpoly::NCPoly;
use super::word::Word;
use crate::error::{Error, Result};
use crate::scalars::Coeff;
use crate::tensorop::{Matrix, SparseOperator};

/// Letter of the generator `M_i^j` (0-based `i`, `j`).
pub fn gen_letter(n: usize, i: usize, j: usize) -> u8 {
    (i * n + j) as u8
}

/// `N×N` matrix with algebra-valued entries `X_i^j`.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgMatrix<C> {
    n: usize,
    entries: Vec<NCPoly<C>>,
}

impl<C: Coeff> AlgMatrix<C> {
    pub fn zero(n: usize) -> Self {
        AlgMatrix { n, entries: vec![NCPoly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = NCPoly::one();
        }
        m
    }

    /// The matrix of generators `M = ‖M_i^j‖`.
    pub fn generators(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.entries[i * n + j] = NCPoly::generator(gen_letter(n, i, j));
            }
        }
        m
    }

    pub fn from_scalar(m: &Matrix<C>) -> Self {
        let n = m.size();
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = NCPoly::constant(m.get(i, j).clone());
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly<C> {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: NCPoly<C>) {
        self.entries[i * self.n + j] = p;
    }

    /// Entries in row-major order with their 0-based positions.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &NCPoly<C>)> {
        let n = self.n;
        self.entries.iter().enumerate().map(move |(f, p)| ((f / n, f % n), p))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }

    fn zip(&self, o: &Self, f: impl Fn(&NCPoly<C>, &NCPoly<C>) -> NCPoly<C>) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::Shape("matrix sizes differ".into()));
        }
        Ok(AlgMatrix { n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| f(a, b)).collect() })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.zip(o, NCPoly::add)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.zip(o, NCPoly::sub)
    }

    pub fn scale(&self, c: &C) -> Self {
        AlgMatrix { n: self.n, entries: self.entries.iter().map(|p| p.scale(c)).collect() }
    }

    /// Right multiplication of every entry by `s`.
    pub fn mul_right(&self, s: &NCPoly<C>) -> Self {
        AlgMatrix { n: self.n, entries: self.entries.iter().map(|p| p.mul(s)).collect() }
    }

    /// Matrix product with algebra entries multiplied in order.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::Shape("matrix sizes differ".into()));
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let b = o.get(j, k);
                    if !b.is_zero() {
                        out.entries[i * n + k].add_assign(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn map_entries(&self, f: impl Fn(&NCPoly<C>) -> NCPoly<C>) -> Self {
        AlgMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    /// Common degree of all nonzero entries, `None` if mixed or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut d = None;
        for p in &self.entries {
            if p.is_zero() {
                continue;
            }
            let e = p.homogeneous_degree()?;
            if d.is_some_and(|x| x != e) {
                return None;
            }
            d = Some(e);
        }
        d
    }
}

/// Operator on `V^{⊗k}` with entries in the free algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgOperator<C> {
    n: usize,
    arity: usize,
    rows: Vec<Vec<(usize, NCPoly<C>)>>,
}

impl<C: Coeff> AlgOperator<C> {
    fn from_row_map(n: usize, arity: usize, rows: Vec<std::collections::BTreeMap<usize, NCPoly<C>>>) -> Self {
        let rows = rows.into_iter().map(|r| r.into_iter().filter(|(_, p)| !p.is_zero()).collect()).collect();
        AlgOperator { n, arity, rows }
    }

    /// `X ⊗ Id^{⊗(k-1)}`.
    pub fn slot1(x: &AlgMatrix<C>, k: usize) -> Result<Self> {
        let n = x.n();
        let rest = n.checked_pow(k as u32 - 1).ok_or_else(|| Error::BoundExceeded("arity".into()))?;
        let mut rows = Vec::with_capacity(n * rest);
        for i in 0..n {
            for a in 0..rest {
                let mut row = Vec::new();
                for j in 0..n {
                    let p = x.get(i, j);
                    if !p.is_zero() {
                        row.push((j * rest + a, p.clone()));
                    }
                }
                rows.push(row);
            }
        }
        Ok(AlgOperator { n, arity: k, rows })
    }

    pub fn from_scalar(s: &SparseOperator<C>) -> Self {
        let rows = (0..s.dim())
            .map(|i| s.row(i).iter().map(|(j, c)| (*j, NCPoly::constant(c.clone()))).collect())
            .collect();
        AlgOperator { n: s.n(), arity: s.arity(), rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &[(usize, NCPoly<C>)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&NCPoly<C>> {
        let r = &self.rows[i];
        r.binary_search_by_key(&j, |e| e.0).ok().map(|p| &r[p].1)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &NCPoly<C>)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, p)| (i, *j, p)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    fn check(&self, n: usize, k: usize) -> Result<()> {
        if self.n != n || self.arity != k {
            return Err(Error::Shape("operator shapes differ".into()));
        }
        Ok(())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        o.check(self.n, self.arity)?;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = std::collections::BTreeMap::<usize, NCPoly<C>>::new();
                for (j, a) in r {
                    for (k, b) in &o.rows[*j] {
                        acc.entry(*k).or_default().add_assign(&a.mul(b));
                    }
                }
                acc
            })
            .collect();
        Ok(Self::from_row_map(self.n, self.arity, rows))
    }

    /// `S · self` for a scalar operator `S`.
    pub fn left_scalar(&self, s: &SparseOperator<C>) -> Result<Self> {
        self.check(s.n(), s.arity())?;
        let rows = (0..self.dim())
            .map(|i| {
                let mut acc = std::collections::BTreeMap::<usize, NCPoly<C>>::new();
                for (j, c) in s.row(i) {
                    for (k, p) in &self.rows[*j] {
                        acc.entry(*k).or_default().add_scaled(p, c);
                    }
                }
                acc
            })
            .collect();
        Ok(Self::from_row_map(self.n, self.arity, rows))
    }

    /// `self · S` for a scalar operator `S`.
    pub fn right_scalar(&self, s: &SparseOperator<C>) -> Result<Self> {
        self.check(s.n(), s.arity())?;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = std::collections::BTreeMap::<usize, NCPoly<C>>::new();
                for (j, p) in r {
                    for (k, c) in s.row(*j) {
                        acc.entry(*k).or_default().add_scaled(p, c);
                    }
                }
                acc
            })
            .collect();
        Ok(Self::from_row_map(self.n, self.arity, rows))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        o.check(self.n, self.arity)?;
        let rows = (0..self.dim())
            .map(|i| {
                let mut acc = std::collections::BTreeMap::<usize, NCPoly<C>>::new();
                for (j, p) in &self.rows[i] {
                    acc.entry(*j).or_default().add_assign(p);
                }
                for (j, p) in &o.rows[i] {
                    acc.entry(*j).or_default().add_scaled(p, &C::one().neg());
                }
                acc
            })
            .collect();
        Ok(Self::from_row_map(self.n, self.arity, rows))
    }

    /// Weighted trace over the last slot, `Σ_{a,b} D_a^b X_{I b}^{J a}`.
    pub fn rtrace_last(&self, d: &Matrix<C>) -> Result<Self> {
        if self.arity < 2 || d.size() != self.n {
            return Err(Error::Shape("partial trace needs arity >= 2 and matching D".into()));
        }
        let n = self.n;
        let out_dim = self.dim() / n;
        let mut rows = vec![std::collections::BTreeMap::<usize, NCPoly<C>>::new(); out_dim];
        for (i, j, p) in self.entries() {
            let (ib, b) = (i / n, i % n);
            let (ja, a) = (j / n, j % n);
            let w = d.get(a, b);
            if !w.is_zero() {
                rows[ib].entry(ja).or_default().add_scaled(p, w);
            }
        }
        Ok(Self::from_row_map(n, self.arity - 1, rows))
    }

    /// The matrix of an arity-1 operator.
    pub fn to_matrix(&self) -> Result<AlgMatrix<C>> {
        if self.arity != 1 {
            return Err(Error::Shape("only arity-1 operators are matrices".into()));
        }
        let mut m = AlgMatrix::zero(self.n);
        for (i, j, p) in self.entries() {
            m.set(i, j, p.clone());
        }
        Ok(m)
    }

    /// All nonzero entries, flattened.
    pub fn nonzero_entries(&self) -> Vec<NCPoly<C>> {
        self.entries().map(|(_, _, p)| p.clone()).collect()
    }
}

/// Word of `M_{i_1}^{k_1} ⋯ M_{i_d}^{k_d}`.
pub fn word_of(n: usize, rows: &[usize], cols: &[usize]) -> Word {
    let ls: Vec<u8> = rows.iter().zip(cols).map(|(&i, &k)| gen_letter(n, i, k)).collect();
    Word::from_letters(&ls)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    #[test]
    fn slot1_and_trace_recover_matrix() {
        let m = AlgMatrix::<Rational>::generators(2);
        let op = AlgOperator::slot1(&m, 2).unwrap();
        let tr = op.rtrace_last(&Matrix::identity(2)).unwrap().to_matrix().unwrap();
        assert_eq!(tr, m.scale(&Rational::from_int(2)));
    }

    #[test]
    fn matrix_product_keeps_order() {
        let m = AlgMatrix::<Rational>::generators(2);
        let m2 = m.mul(&m).unwrap();
        let expected = NCPoly::generator(0).mul(&NCPoly::generator(1)).add(&NCPoly::generator(1).mul(&NCPoly::generator(3)));
        assert_eq!(m2.get(0, 1), &expected);
        assert_eq!(m2.homogeneous_degree(), Some(2));
    }

    #[test]
    fn scalar_conjugation_by_flip_moves_slot() {
        let n = 2;
        let m = AlgMatrix::<Rational>::generators(n);
        let m1 = AlgOperator::slot1(&m, 2).unwrap();
        let mut trip = Vec::new();
        for a in 0..n {
            for b in 0..n {
                trip.push((a * n + b, b * n + a, Rational::one()));
            }
        }
        let p = SparseOperator::from_triplets(n, 2, trip).unwrap();
        let m2 = m1.left_scalar(&p).unwrap().right_scalar(&p).unwrap();
        // (M_2)_{(a,i)}^{(b,j)} = δ_a^b M_i^j
        for a in 0..n {
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(m2.get(a * n + i, a * n + j).unwrap(), m.get(i, j));
                }
            }
        }
    }
}
