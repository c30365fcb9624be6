//! Partitions, standard Young tableaux, contents, and the diagram families
//! used by the Cayley-Hamilton construction.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition with its zero parts dropped. The empty partition is the
/// partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates weak decrease. Trailing zeros are dropped; a zero followed
    /// by a positive part is rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Length of row `r` (1-based); zero beyond the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    /// `self ⊆ other` as diagrams.
    pub fn is_subset_of(&self, other: &Partition) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Cells `(row, column)`, 1-based, in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.0.len() + 1 {
            let len = self.row_len(r);
            if r == 1 || self.row_len(r - 1) > len {
                out.push((r, len + 1));
            }
        }
        out
    }

    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        (1..=self.0.len())
            .filter(|&r| self.row_len(r + 1) < self.row_len(r))
            .map(|r| (r, self.row_len(r)))
            .collect()
    }

    pub fn with_cell_added(&self, cell: (usize, usize)) -> Result<Partition> {
        if !self.addable_cells().contains(&cell) {
            return Err(Error::Range(format!("cell {cell:?} is not addable to {self}")));
        }
        let mut parts = self.0.clone();
        if cell.0 > parts.len() {
            parts.push(1);
        } else {
            parts[cell.0 - 1] += 1;
        }
        Ok(Partition(parts))
    }

    pub fn with_cell_removed(&self, cell: (usize, usize)) -> Result<Partition> {
        if !self.removable_cells().contains(&cell) {
            return Err(Error::Range(format!("cell {cell:?} is not removable from {self}")));
        }
        let mut parts = self.0.clone();
        parts[cell.0 - 1] -= 1;
        Partition::new(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.row_len(1);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&l| l >= c).count()).collect())
    }

    /// Number of standard tableaux, by the hook-length formula.
    pub fn hook_length_count(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.weight() as u128).product();
        let mut hooks: u128 = 1;
        for (r, c) in self.cells() {
            let arm = self.row_len(r) - c;
            let leg = conj.row_len(c) - r;
            hooks *= (arm + leg + 1) as u128;
        }
        num /= hooks;
        num
    }

    /// All partitions of `n`, in reverse lexicographic order of parts.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Partition {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `"2,1"`; surrounding parentheses allowed.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad partition part `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

/// Content `column - row` of a cell.
pub fn content((r, c): (usize, usize)) -> i32 {
    c as i32 - r as i32
}

/// A standard Young tableau. Entries are `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
    shape: Partition,
}

/// Result of swapping two consecutive entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transposed {
    Standard(StandardTableau),
    NonStandard,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|_| Error::Input("rows do not form a Young diagram".into()))?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::Input("empty row".into()));
        }
        let n = shape.weight();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || seen[e] {
                return Err(Error::Input(format!("entries must be a permutation of 1..={n}")));
            }
            seen[e] = true;
        }
        let t = StandardTableau { rows, shape };
        if !t.is_standard() {
            return Err(Error::Input("entries must increase along rows and columns".into()));
        }
        Ok(t)
    }

    fn is_standard(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            for c in 0..row.len() {
                if c + 1 < row.len() && row[c] >= row[c + 1] {
                    return false;
                }
                if r + 1 < self.rows.len() && c < self.rows[r + 1].len() && row[c] >= self.rows[r + 1][c] {
                    return false;
                }
            }
        }
        true
    }

    /// The tableau filled row by row with `1..=n`.
    pub fn row_reading(shape: &Partition) -> StandardTableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        StandardTableau { rows, shape: shape.clone() }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.weight()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at the 1-based cell, if inside the shape.
    pub fn entry_at(&self, (r, c): (usize, usize)) -> Option<usize> {
        self.rows.get(r.checked_sub(1)?)?.get(c.checked_sub(1)?).copied()
    }

    /// Cell `(row, column)` holding entry `e`.
    pub fn cell_of(&self, e: usize) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == e) {
                return Some((r + 1, c + 1));
            }
        }
        None
    }

    pub fn content_of(&self, e: usize) -> Option<i32> {
        self.cell_of(e).map(content)
    }

    /// Contents of entries `1..=n` in order.
    pub fn content_vector(&self) -> Vec<i32> {
        (1..=self.size()).map(|e| self.content_of(e).unwrap()).collect()
    }

    /// Row-reading word.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Content difference `c(k) - c(k+1)`.
    pub fn ell(&self, k: usize) -> Result<i32> {
        if k == 0 || k >= self.size() {
            return Err(Error::Index(format!("k = {k} outside 1..{}", self.size())));
        }
        Ok(self.content_of(k).unwrap() - self.content_of(k + 1).unwrap())
    }

    /// Swaps the entries `k` and `k+1`.
    pub fn apply_transposition(&self, k: usize) -> Result<Transposed> {
        if k == 0 || k >= self.size() {
            return Err(Error::Index(format!("k = {k} outside 1..{}", self.size())));
        }
        let (a, b) = (self.cell_of(k).unwrap(), self.cell_of(k + 1).unwrap());
        if a.0 == b.0 || a.1 == b.1 {
            return Ok(Transposed::NonStandard);
        }
        let mut rows = self.rows.clone();
        rows[a.0 - 1][a.1 - 1] = k + 1;
        rows[b.0 - 1][b.1 - 1] = k;
        Ok(Transposed::Standard(StandardTableau { rows, shape: self.shape.clone() }))
    }

    /// `inner ⊆ outer`: the entries `1..=|inner|` occupy the same cells.
    pub fn is_included_in(&self, outer: &StandardTableau) -> bool {
        self.shape.is_subset_of(&outer.shape) && (1..=self.size()).all(|e| self.cell_of(e) == outer.cell_of(e))
    }

    /// Row holding the largest entry.
    pub fn row_of_largest(&self) -> usize {
        self.cell_of(self.size()).map(|c| c.0).unwrap_or(0)
    }

    /// The tableau obtained by deleting the largest entry.
    pub fn without_largest(&self) -> StandardTableau {
        let n = self.size();
        let mut rows = self.rows.clone();
        if let Some((r, _)) = self.cell_of(n) {
            rows[r - 1].pop();
            if rows[r - 1].is_empty() {
                rows.pop();
            }
        }
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect()).unwrap();
        StandardTableau { rows, shape }
    }

    /// The tableau obtained by writing `n+1` into an addable cell.
    pub fn with_entry_at(&self, cell: (usize, usize)) -> Result<StandardTableau> {
        let shape = self.shape.with_cell_added(cell)?;
        let mut rows = self.rows.clone();
        if cell.0 > rows.len() {
            rows.push(Vec::new());
        }
        rows[cell.0 - 1].push(self.size() + 1);
        Ok(StandardTableau { rows, shape })
    }

    pub fn empty() -> StandardTableau {
        StandardTableau { rows: Vec::new(), shape: Partition::empty() }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All standard tableaux of a shape, sorted lexicographically by reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(t: StandardTableau, target: &Partition, out: &mut Vec<StandardTableau>) {
        if t.size() == target.weight() {
            out.push(t);
            return;
        }
        for cell in t.shape.addable_cells() {
            if target.row_len(cell.0) >= cell.1 {
                rec(t.with_entry_at(cell).unwrap(), target, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(StandardTableau::empty(), shape, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// All standard tableaux of all shapes of weight `n`.
pub fn all_standard_tableaux(n: usize) -> Vec<StandardTableau> {
    Partition::all_of(n).iter().flat_map(standard_tableaux).collect()
}

/// The three diagram families indexed by `(r, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// `((n+1)^r, n^(m-r), s)`
    Plain,
    /// `(n+2, (n+1)^(r-1), n^(m-r), s)`
    PlusRow,
    /// `((n+1)^r, n^(m-r), s, 1)`
    PlusCol,
}

fn check_family(kind: FamilyKind, m: usize, n: usize, r: usize, s: usize) -> Result<()> {
    let ok = match kind {
        FamilyKind::Plain => r <= m && s <= n,
        FamilyKind::PlusRow => (1..=m).contains(&r) && s <= n,
        FamilyKind::PlusCol => r <= m && (1..=n).contains(&s),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Range(format!("{kind:?} family undefined at m={m}, n={n}, r={r}, s={s}")))
    }
}

pub fn lambda_family(kind: FamilyKind, m: usize, n: usize, r: usize, s: usize) -> Result<Partition> {
    check_family(kind, m, n, r, s)?;
    let mut parts = Vec::new();
    match kind {
        FamilyKind::Plain | FamilyKind::PlusCol => parts.extend(std::iter::repeat_n(n + 1, r)),
        FamilyKind::PlusRow => {
            parts.push(n + 2);
            parts.extend(std::iter::repeat_n(n + 1, r - 1));
        }
    }
    parts.extend(std::iter::repeat_n(n, m - r));
    parts.push(s);
    if kind == FamilyKind::PlusCol {
        parts.push(1);
    }
    parts.retain(|&p| p > 0);
    Partition::new(parts)
}

/// Which cell of the family shape carries the largest entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistinguishedKind {
    /// `Λ(r,s)` grown from `Λ(r,s-1)`: cell `(m+1, s)`.
    Row,
    /// `Λ(r,s)` grown from `Λ(r-1,s)`: cell `(r, n+1)`.
    Col,
    /// `Λ⁺(r,s)` grown from `Λ(r,s)`: cell `(1, n+2)`.
    PlusRow,
    /// `Λ₊(r,s)` grown from `Λ(r,s)`: cell `(m+2, 1)`.
    PlusCol,
}

/// Shape and corner cell for a distinguished tableau.
pub fn distinguished_cell(
    kind: DistinguishedKind,
    m: usize,
    n: usize,
    r: usize,
    s: usize,
) -> Result<(Partition, (usize, usize))> {
    let (shape, cell) = match kind {
        DistinguishedKind::Row => {
            if s == 0 {
                return Err(Error::Range("row tableau needs s >= 1".into()));
            }
            (lambda_family(FamilyKind::Plain, m, n, r, s)?, (m + 1, s))
        }
        DistinguishedKind::Col => {
            if r == 0 {
                return Err(Error::Range("col tableau needs r >= 1".into()));
            }
            (lambda_family(FamilyKind::Plain, m, n, r, s)?, (r, n + 1))
        }
        DistinguishedKind::PlusRow => (lambda_family(FamilyKind::PlusRow, m, n, r, s)?, (1, n + 2)),
        DistinguishedKind::PlusCol => (lambda_family(FamilyKind::PlusCol, m, n, r, s)?, (m + 2, 1)),
    };
    Ok((shape, cell))
}

/// A standard tableau of the family shape with its largest entry in the
/// distinguished cell; the other entries are filled row by row.
pub fn distinguished_tableau(kind: DistinguishedKind, m: usize, n: usize, r: usize, s: usize) -> Result<StandardTableau> {
    let (shape, cell) = distinguished_cell(kind, m, n, r, s)?;
    let rest = shape.with_cell_removed(cell)?;
    StandardTableau::row_reading(&rest).with_entry_at(cell)
}
