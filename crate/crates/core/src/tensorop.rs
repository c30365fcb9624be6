//! Sparse linear operators on `V^{⊗k}`, `dim V = N`.
//!
//! Index convention: an operator `X` is stored as a matrix whose row is the
//! input multi-index and whose column is the output multi-index, so
//! `X(v_I) = Σ_J X_I^J v_J`. Products are matrix products,
//! `(XY)_I^K = Σ_J X_I^J Y_J^K`. Multi-indices are 0-based, slot 1 most
//! significant.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{Coeff, Context, Scalar};

/// Flat position of a multi-index.
pub fn encode(idx: &[usize], n: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * n + i)
}

/// Multi-index of a flat position.
pub fn decode(mut flat: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for s in (0..k).rev() {
        out[s] = flat % n;
        flat /= n;
    }
    out
}

/// Dense `N×N` matrix with entries `M_i^j` stored at `(i, j)`.
#[derive(Clone, PartialEq)]
pub struct Matrix<C> {
    n: usize,
    data: Vec<C>,
}

impl<C: Coeff> Matrix<C> {
    pub fn zero(n: usize) -> Self {
        Matrix { n, data: vec![C::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = C::one();
        }
        m
    }

    pub fn diagonal(d: Vec<C>) -> Self {
        let mut m = Self::zero(d.len());
        let n = d.len();
        for (i, c) in d.into_iter().enumerate() {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("matrix rows must form a square".into()));
        }
        Ok(Matrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: C) {
        self.data[i * self.n + j] = c;
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.n, self.n, o.n, o.n)));
        }
        let n = self.n;
        let mut r = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let b = o.get(j, k);
                    if !b.is_zero() {
                        r.data[i * n + k].add_assign(&a.mul(b));
                    }
                }
            }
        }
        Ok(r)
    }

    pub fn trace(&self) -> C {
        let mut t = C::zero();
        for i in 0..self.n {
            t.add_assign(self.get(i, i));
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).inv()?;
            for j in 0..n {
                a.data[col * n + j] = a.data[col * n + j].mul(&p);
                inv.data[col * n + j] = inv.data[col * n + j].mul(&p);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let (x, y) = (a.data[col * n + j].mul(&f), inv.data[col * n + j].mul(&f));
                    a.data[r * n + j] = a.data[r * n + j].sub(&x);
                    inv.data[r * n + j] = inv.data[r * n + j].sub(&y);
                }
            }
        }
        Some(inv)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<Matrix<D>> {
        Ok(Matrix { n: self.n, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }
}

impl Matrix<Scalar> {
    pub fn lift<X: Context>(&self, ctx: &X) -> Result<Matrix<X::C>> {
        self.map(|c| ctx.lift(c))
    }
}

impl<C: Coeff> fmt::Debug for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<&C>> = (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect();
        write!(f, "{rows:?}")
    }
}

/// Sparse operator on `V^{⊗k}` with rows sorted by column and no stored zeros.
#[derive(Clone, PartialEq)]
pub struct SparseOperator<C> {
    n: usize,
    arity: usize,
    rows: Vec<Vec<(usize, C)>>,
}

/// Reusable dense accumulator for building one sparse row at a time.
pub(crate) struct RowAcc<C> {
    vals: Vec<Option<C>>,
    touched: Vec<usize>,
}

impl<C: Coeff> RowAcc<C> {
    pub(crate) fn new(dim: usize) -> Self {
        RowAcc { vals: vec![None; dim], touched: Vec::new() }
    }

    pub(crate) fn add(&mut self, col: usize, c: C) {
        match &mut self.vals[col] {
            Some(v) => v.add_assign(&c),
            slot @ None => {
                *slot = Some(c);
                self.touched.push(col);
            }
        }
    }

    pub(crate) fn drain(&mut self) -> Vec<(usize, C)> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &j in &self.touched {
            if let Some(v) = self.vals[j].take() {
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
        }
        self.touched.clear();
        out
    }
}

impl<C: Coeff> SparseOperator<C> {
    fn check_dims(n: usize, arity: usize) -> Result<usize> {
        if n == 0 || arity == 0 {
            return Err(Error::Shape("N and arity must be positive".into()));
        }
        n.checked_pow(arity as u32)
            .filter(|&d| d <= 1 << 20)
            .ok_or_else(|| Error::BoundExceeded(format!("N^k too large for N={n}, k={arity}")))
    }

    pub fn zero(n: usize, arity: usize) -> Result<Self> {
        let dim = Self::check_dims(n, arity)?;
        Ok(SparseOperator { n, arity, rows: vec![Vec::new(); dim] })
    }

    pub fn identity(n: usize, arity: usize) -> Result<Self> {
        let dim = Self::check_dims(n, arity)?;
        Ok(SparseOperator { n, arity, rows: (0..dim).map(|i| vec![(i, C::one())]).collect() })
    }

    /// Builds from flat `(row, col, coeff)` triplets; repeated positions add.
    pub fn from_triplets(n: usize, arity: usize, triplets: impl IntoIterator<Item = (usize, usize, C)>) -> Result<Self> {
        let dim = Self::check_dims(n, arity)?;
        let mut by_row: Vec<Vec<(usize, C)>> = vec![Vec::new(); dim];
        for (r, c, v) in triplets {
            if r >= dim || c >= dim {
                return Err(Error::Index(format!("entry ({r},{c}) outside dimension {dim}")));
            }
            by_row[r].push((c, v));
        }
        let mut acc = RowAcc::new(dim);
        let rows = by_row
            .into_iter()
            .map(|row| {
                for (c, v) in row {
                    acc.add(c, v);
                }
                acc.drain()
            })
            .collect();
        Ok(SparseOperator { n, arity, rows })
    }

    /// Builds from multi-index entries (0-based).
    pub fn from_entries<'a>(
        n: usize,
        arity: usize,
        entries: impl IntoIterator<Item = (&'a [usize], &'a [usize], C)>,
    ) -> Result<Self> {
        let mut trip = Vec::new();
        for (i, o, c) in entries {
            if i.len() != arity || o.len() != arity || i.iter().chain(o).any(|&x| x >= n) {
                return Err(Error::Index(format!("multi-index {i:?} -> {o:?} invalid for N={n}, k={arity}")));
            }
            trip.push((encode(i, n), encode(o, n), c));
        }
        Self::from_triplets(n, arity, trip)
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

    pub fn row(&self, i: usize) -> &[(usize, C)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&C> {
        let r = &self.rows[row];
        r.binary_search_by_key(&col, |e| e.0).ok().map(|p| &r[p].1)
    }

    /// Entry `X_I^J` for 0-based multi-indices, zero when absent.
    pub fn entry(&self, input: &[usize], output: &[usize]) -> C {
        self.get(encode(input, self.n), encode(output, self.n)).cloned().unwrap_or_else(C::zero)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &C)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, *j, c)))
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if self.n != o.n || self.arity != o.arity {
            return Err(Error::Shape(format!(
                "operators on (N={}, k={}) and (N={}, k={})",
                self.n, self.arity, o.n, o.arity
            )));
        }
        Ok(())
    }

    fn combine(&self, o: &Self, f: impl Fn(&C) -> C) -> Result<Self> {
        self.same_shape(o)?;
        let mut acc = RowAcc::new(self.dim());
        let rows = (0..self.dim())
            .map(|i| {
                for (j, c) in &self.rows[i] {
                    acc.add(*j, c.clone());
                }
                for (j, c) in &o.rows[i] {
                    acc.add(*j, f(c));
                }
                acc.drain()
            })
            .collect();
        Ok(SparseOperator { n: self.n, arity: self.arity, rows })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.combine(o, C::clone)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.combine(o, C::neg)
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return SparseOperator { n: self.n, arity: self.arity, rows: vec![Vec::new(); self.dim()] };
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|(j, c)| (*j, c.mul(s))).collect()).collect();
        SparseOperator { n: self.n, arity: self.arity, rows }
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::one().neg())
    }

    /// `self + s·Id`.
    pub fn add_identity(&self, s: &C) -> Self {
        let id = Self::identity(self.n, self.arity).expect("shape already validated");
        self.add(&id.scale(s)).expect("same shape")
    }

    /// Matrix product `self · o`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let mut acc = RowAcc::new(self.dim());
        let rows = self
            .rows
            .iter()
            .map(|r| {
                for (j, a) in r {
                    for (k, b) in &o.rows[*j] {
                        acc.add(*k, a.mul(b));
                    }
                }
                acc.drain()
            })
            .collect();
        Ok(SparseOperator { n: self.n, arity: self.arity, rows })
    }

    /// Product of a list of operators, left to right.
    pub fn product<'a>(n: usize, arity: usize, ops: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let mut it = ops.into_iter();
        let Some(first) = it.next() else {
            return Self::identity(n, arity);
        };
        let mut acc = first.clone();
        for op in it {
            acc = acc.mul(op)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    pub fn is_scalar_multiple_of_identity(&self) -> Option<C> {
        let first = self.rows.first()?.first()?.1.clone();
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1 == first)
            .then_some(first)
    }

    /// `Id^{⊗(i-1)} ⊗ self ⊗ Id^{⊗(k-p-i+1)}`, with `i` 1-based.
    pub fn embed_at(&self, i: usize, k: usize) -> Result<Self> {
        let p = self.arity;
        if i == 0 || i + p > k + 1 {
            return Err(Error::Range(format!("cannot place arity {p} at slot {i} of {k}")));
        }
        let dim = Self::check_dims(self.n, k)?;
        let post = self.n.pow((k + 1 - p - i) as u32);
        let mid = self.dim();
        let mut rows = Vec::with_capacity(dim);
        for row in 0..dim {
            let (hi, lo) = (row / (mid * post), row % post);
            let m = (row / post) % mid;
            rows.push(self.rows[m].iter().map(|(j, c)| ((hi * mid + j) * post + lo, c.clone())).collect());
        }
        Ok(SparseOperator { n: self.n, arity: k, rows })
    }

    /// `self ⊗ o`.
    pub fn tensor(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::Shape("tensor factors must share N".into()));
        }
        let k = self.arity + o.arity;
        let a = self.embed_at(1, k)?;
        let b = o.embed_at(self.arity + 1, k)?;
        a.mul(&b)
    }

    /// `self · D_s`: right multiplication by a matrix acting on slot `s` (1-based).
    pub fn mul_slot_matrix(&self, d: &Matrix<C>, s: usize) -> Result<Self> {
        if d.size() != self.n || s == 0 || s > self.arity {
            return Err(Error::Shape("slot matrix does not fit".into()));
        }
        let stride = self.n.pow((self.arity - s) as u32);
        let mut acc = RowAcc::new(self.dim());
        let rows = self
            .rows
            .iter()
            .map(|r| {
                for (j, c) in r {
                    let a = (j / stride) % self.n;
                    let base = j - a * stride;
                    for b in 0..self.n {
                        let dab = d.get(a, b);
                        if !dab.is_zero() {
                            acc.add(base + b * stride, c.mul(dab));
                        }
                    }
                }
                acc.drain()
            })
            .collect();
        Ok(SparseOperator { n: self.n, arity: self.arity, rows })
    }

    /// Weighted partial trace over slot `s`:
    /// `Tr_{R(s)}(X)_{I}^{J} = Σ_{a,b} D_a^b X_{I[s=b]}^{J[s=a]}`.
    pub fn partial_rtrace(&self, d: &Matrix<C>, s: usize) -> Result<Self> {
        if self.arity < 2 {
            return Err(Error::Shape("partial trace needs arity at least 2".into()));
        }
        let xd = self.mul_slot_matrix(d, s)?;
        let n = self.n;
        let stride = n.pow((self.arity - s) as u32);
        let strip = |f: usize| (f / (stride * n)) * stride + f % stride;
        let slot = |f: usize| (f / stride) % n;
        let mut trip = Vec::new();
        for (i, j, c) in xd.triplets() {
            if slot(i) == slot(j) {
                trip.push((strip(i), strip(j), c.clone()));
            }
        }
        Self::from_triplets(n, self.arity - 1, trip)
    }

    /// Full weighted trace `Tr_{R(1..k)}`.
    pub fn full_rtrace(&self, d: &Matrix<C>) -> Result<C> {
        let mut y = self.clone();
        for s in 1..=self.arity {
            y = y.mul_slot_matrix(d, s)?;
        }
        let mut t = C::zero();
        for (i, r) in y.rows.iter().enumerate() {
            if let Ok(p) = r.binary_search_by_key(&i, |e| e.0) {
                t.add_assign(&r[p].1);
            }
        }
        Ok(t)
    }

    /// Dense inverse; intended for small operators.
    pub fn inverse(&self) -> Result<Self> {
        let dim = self.dim();
        if dim > 729 {
            return Err(Error::BoundExceeded("dense inverse limited to dimension 729".into()));
        }
        let mut m = Matrix::zero(dim);
        for (i, j, c) in self.triplets() {
            m.set(i, j, c.clone());
        }
        let inv = m.inverse().ok_or(Error::NotInvertible)?;
        let trip = (0..dim).flat_map(|i| (0..dim).map(move |j| (i, j))).map(|(i, j)| (i, j, inv.get(i, j).clone()));
        Self::from_triplets(self.n, self.arity, trip.filter(|t| !t.2.is_zero()))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<SparseOperator<D>> {
        let mut rows = Vec::with_capacity(self.dim());
        for r in &self.rows {
            let mut out = Vec::with_capacity(r.len());
            for (j, c) in r {
                let v = f(c)?;
                if !v.is_zero() {
                    out.push((*j, v));
                }
            }
            rows.push(out);
        }
        Ok(SparseOperator { n: self.n, arity: self.arity, rows })
    }

    /// Commutator `self·o - o·self`.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.mul(o)?.sub(&o.mul(self)?)
    }
}

impl SparseOperator<Scalar> {
    /// Specializes a symbolic operator into a coefficient context.
    pub fn lift<X: Context>(&self, ctx: &X) -> Result<SparseOperator<X::C>> {
        self.map(|c| ctx.lift(c))
    }
}

impl<C: Coeff> fmt::Debug for SparseOperator<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseOperator(N={}, k={}, nnz={})", self.n, self.arity, self.nnz())?;
        for (i, j, c) in self.triplets() {
            writeln!(f, "  {:?} -> {:?}: {c}", decode(i, self.n, self.arity), decode(j, self.n, self.arity))?;
        }
        Ok(())
    }
}

/// Skew-inverse `Ψ` of an arity-2 operator:
/// `Σ_{a,b} X_{ia}^{kb} Ψ_{bj}^{al} = δ_i^l δ_j^k`.
pub fn skew_inverse<C: Coeff>(x: &SparseOperator<C>) -> Result<SparseOperator<C>> {
    if x.arity() != 2 {
        return Err(Error::Shape("skew inverse needs an arity-2 operator".into()));
    }
    let n = x.n();
    // A_{(i,k),(a,b)} = X_{ia}^{kb}
    let mut a = Matrix::zero(n * n);
    for (row, col, c) in x.triplets() {
        let (i, aa) = (row / n, row % n);
        let (k, b) = (col / n, col % n);
        a.set(i * n + k, aa * n + b, c.clone());
    }
    let inv = a.inverse().ok_or(Error::NotSkewInvertible)?;
    // Ψ_{bj}^{al} = (A^{-1})_{(a,b),(l,j)}
    let mut trip = Vec::new();
    for aa in 0..n {
        for b in 0..n {
            for l in 0..n {
                for j in 0..n {
                    let v = inv.get(aa * n + b, l * n + j);
                    if !v.is_zero() {
                        trip.push((b * n + j, aa * n + l, v.clone()));
                    }
                }
            }
        }
    }
    SparseOperator::from_triplets(n, 2, trip)
}

/// The operator `D^X = Tr_{(2)} Ψ^X` and whether it is invertible.
#[derive(Clone, Debug)]
pub struct DOperator<C: Coeff> {
    pub d: Matrix<C>,
    pub strict: bool,
}

pub fn d_operator<C: Coeff>(x: &SparseOperator<C>) -> Result<DOperator<C>> {
    let psi = skew_inverse(x)?;
    let n = x.n();
    let mut d = Matrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut s = C::zero();
            for b in 0..n {
                s.add_assign(&psi.entry(&[i, b], &[j, b]));
            }
            d.set(i, j, s);
        }
    }
    let strict = d.inverse().is_some();
    Ok(DOperator { d, strict })
}

/// `Σ_{i,j} D_i^j M_j^i`.
pub fn rtrace_scalar<C: Coeff>(d: &Matrix<C>, m: &Matrix<C>) -> Result<C> {
    Ok(d.mul(m)?.trace())
}
