//! Integer partitions and skew shapes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored in canonical form: weakly decreasing, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts increase.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`. Panics if `n < self.len()`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(n >= self.len(), "partition {self} does not fit in {n} rows");
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `m_i = λ'_i − λ'_{i+1}`, the number of parts equal to `i` (1-based `i`).
    pub fn column_multiplicity(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// True if every nonzero part is distinct.
    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Partitions obtained by adding one box.
    pub fn addable(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..=self.len() {
            if r == 0 || self.part(r - 1) > self.part(r) {
                let mut p = self.0.clone();
                if r == p.len() {
                    p.push(1);
                } else {
                    p[r] += 1;
                }
                out.push(Partition(p));
            }
        }
        out
    }

    /// Partitions obtained by removing one box.
    pub fn removable(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..self.len() {
            if self.part(r) > self.part(r + 1) {
                let mut p = self.0.clone();
                p[r] -= 1;
                out.push(Partition::new(p).expect("removing a corner keeps a partition"));
            }
        }
        out
    }

    /// All partitions of `n`, in reverse lexicographic order (largest first).
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(bound: &[usize], r: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if r == bound.len() {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            for p in 0..=bound[r].min(max) {
                cur.push(p);
                go(bound, r + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Parses comma-separated parts; trailing zeros are kept by [`parse_padded`].
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_padded(s)?)
    }
}

/// Parses `"2,1,0,0"` into the raw (possibly zero-padded) part list.
pub fn parse_padded(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("part {p:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(s.to_string()));
    }
    Ok(parts)
}

/// A box of a Young diagram, 0-based `(row, col)` in English convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns occupied in row `r`: `inner[r]..outer[r]`.
    pub fn row_range(&self, r: usize) -> std::ops::Range<usize> {
        self.inner.part(r)..self.outer.part(r)
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.row_range(c.row).contains(&c.col)
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.rows()).flat_map(move |r| self.row_range(r).map(move |c| Cell::new(r, c)))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}
