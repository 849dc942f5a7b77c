//! Partitions, Young diagrams and standard Young tableaux.
//!
//! Partitions are value objects: parts are strictly positive and weakly
//! decreasing, trailing zeros are never stored. The canonical ordering of a
//! list of partitions of `n` is reverse lexicographic, i.e. `(4)` comes before
//! `(3,1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intpoly::QPolynomial;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails on increasing parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("interior zero in {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `λ_i` with 0-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (0..first)
                .map(|j| self.0.iter().take_while(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `mλ = (mλ₁, mλ₂, …)`.
    pub fn scaled(&self, m: u32) -> Partition {
        if m == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|p| p * m).collect())
    }

    /// Parts padded with zeros to length `n`; `None` if longer than `n`.
    pub fn padded(&self, n: usize) -> Option<Vec<u32>> {
        if self.len() > n {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Some(v)
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    pub fn hook(&self, i: usize, j: usize) -> u32 {
        let arm = self.part(i) - j as u32 - 1;
        let leg = self.0[i + 1..].iter().filter(|&&p| p as usize > j).count() as u32;
        arm + leg + 1
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_statistic(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, p)| i as u32 * p).sum()
    }

    /// Multiplicities `m_i` of each part size `i ≥ 1`, indexed by `i`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.part(0) as usize + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// Rows with an addable cell at their end.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i) < self.part(i - 1))
            .collect()
    }

    /// Rows whose last cell is removable (a corner).
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,1`, `(3,2,1)` or the empty string / `()` / `0`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::InvalidInput(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All partitions of `n` in reverse lexicographic order, optionally with at
/// most `max_length` parts.
pub fn enumerate_partitions(n: u32, max_length: Option<usize>) -> Vec<Partition> {
    fn rec(
        rest: u32,
        max_part: u32,
        slots: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_length.unwrap_or(n as usize), &mut Vec::new(), &mut out);
    out
}

/// Partitions fitting inside an `rows × max_part` box, all sizes, ordered by
/// size then reverse lexicographically.
pub fn partitions_in_box(rows: usize, max_part: u32) -> Vec<Partition> {
    let max_size = rows as u32 * max_part;
    (0..=max_size)
        .flat_map(|n| enumerate_partitions(n, Some(rows)))
        .filter(|p| p.part(0) <= max_part)
        .collect()
}

pub(crate) fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of standard Young tableaux of shape `λ`, by the hook-length formula.
pub fn count_syt(shape: &Partition) -> BigUint {
    let mut hooks = BigUint::one();
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row as usize {
            hooks *= shape.hook(i, j);
        }
    }
    factorial(shape.size()) / hooks
}

/// 0-based diagram cell: row then column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellCoord {
    pub row: u32,
    pub col: u32,
}

impl CellCoord {
    pub fn new(row: u32, col: u32) -> Self {
        CellCoord { row, col }
    }
}

/// Cells of the diagram of `μ` in row-major order.
pub fn diagram_coords(shape: &Partition) -> Vec<CellCoord> {
    shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| CellCoord::new(i as u32, j)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    /// Validates row and column strictness and that the entries are `1..=n`.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidInput("empty row in tableau".into()));
        }
        let n = shape.size() as usize;
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidInput(format!("bad entry {v}")));
            }
            seen[v as usize] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidInput(format!("row {i} not increasing")));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidInput(format!("column strictness fails in row {i}")));
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        let shape = Partition(rows.iter().map(|r| r.len() as u32).collect());
        StandardTableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> u32 {
        self.shape.size()
    }

    /// Row index of each entry, indexed by entry (slot 0 unused).
    fn row_of(&self) -> Vec<usize> {
        let mut r = vec![0; self.size() as usize + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                r[v as usize] = i;
            }
        }
        r
    }

    /// Entries `i` such that `i + 1` sits in a strictly lower row.
    pub fn descents(&self) -> Vec<u32> {
        let r = self.row_of();
        (1..self.size()).filter(|&i| r[i as usize + 1] > r[i as usize]).collect()
    }

    pub fn major_index(&self) -> u32 {
        self.descents().iter().sum()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Every standard Young tableau of shape `λ`, in the order obtained by
/// placing `1, 2, …, n` into addable cells top row first.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(
        shape: &Partition,
        rows: &mut Vec<Vec<u32>>,
        next: u32,
        n: u32,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > n {
            out.push(StandardTableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for i in 0..shape.len() {
            let len = rows.get(i).map_or(0, |r| r.len()) as u32;
            let above = if i == 0 { u32::MAX } else { rows.get(i - 1).map_or(0, |r| r.len()) as u32 };
            if len < shape.part(i) && len < above {
                if i == rows.len() {
                    rows.push(Vec::new());
                }
                rows[i].push(next);
                rec(shape, rows, next + 1, n, out);
                rows[i].pop();
                if rows[i].is_empty() {
                    rows.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, &mut Vec::new(), 1, shape.size(), &mut out);
    out
}

/// `Σ_T q^{MAJ(T)}` over standard tableaux of shape `λ`.
pub fn maj_generating_function(shape: &Partition) -> QPolynomial {
    let mut counts: Vec<BigInt> = Vec::new();
    for t in enumerate_syt(shape) {
        let m = t.major_index() as usize;
        if counts.len() <= m {
            counts.resize(m + 1, BigInt::default());
        }
        counts[m] += 1;
    }
    QPolynomial::from_coeffs(counts)
}

/// Number of standard tableaux of shape `λ` with major index `i`.
pub fn maj_multiplicity(shape: &Partition, i: u32) -> u64 {
    enumerate_syt(shape)
        .iter()
        .filter(|t| t.major_index() == i)
        .count() as u64
}

/// `[n]_q! = (1+q)(1+q+q²)⋯(1+q+⋯+q^{n-1})`.
pub fn q_factorial(n: u32) -> QPolynomial {
    (1..=n as usize).fold(QPolynomial::one(), |acc, k| &acc * &QPolynomial::q_integer(k))
}
