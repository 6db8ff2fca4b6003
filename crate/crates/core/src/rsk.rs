//! RSK, its inverse, and the skew (external/internal insertion) variant on
//! pairs of skew tableaux.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, SkewShape};
use crate::poly::{MultiPoly, PolyT};
use crate::tableau::{enumerate_ssyt, is_semistandard, schur, Tableau};

/// A multiset of biletters `(i, j)`, stored in right-lexicographic order
/// (by `i`, then by `j`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Biword(Vec<(u32, u32)>);

impl Biword {
    pub fn new(mut letters: Vec<(u32, u32)>) -> Result<Self> {
        if letters.iter().any(|&(i, j)| i == 0 || j == 0) {
            return Err(Error::Parse("biletters must be positive".into()));
        }
        letters.sort();
        Ok(Biword(letters))
    }

    pub fn empty() -> Self {
        Biword(Vec::new())
    }

    /// Right-lexicographic representative: sorted by `i`, then `j`.
    pub fn right_lex(&self) -> &[(u32, u32)] {
        &self.0
    }

    /// Left-lexicographic representative: sorted by `j`, then `i`.
    pub fn left_lex(&self) -> Vec<(u32, u32)> {
        let mut v = self.0.clone();
        v.sort_by_key(|&(i, j)| (j, i));
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Biword {
        Biword::new(self.0.iter().map(|&(i, j)| (j, i)).collect()).expect("positive letters")
    }

    pub fn to_matrix(&self) -> SupportMatrix {
        let mut m = SupportMatrix::default();
        for &(i, j) in &self.0 {
            *m.0.entry((i, j)).or_insert(0) += 1;
        }
        m
    }
}

/// Space-separated `i,j` pairs in right-lex order, e.g. `1,2 1,2 2,1`.
impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|(i, j)| format!("{i},{j}")).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl FromStr for Biword {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|tok| {
                let (a, b) = tok.split_once(',').ok_or_else(|| Error::Parse(format!("biletter {tok:?}")))?;
                let i = a.parse::<u32>().map_err(|e| Error::Parse(format!("{a:?}: {e}")))?;
                let j = b.parse::<u32>().map_err(|e| Error::Parse(format!("{b:?}: {e}")))?;
                Ok((i, j))
            })
            .collect::<Result<Vec<_>>>()?;
        Biword::new(letters)
    }
}

/// A nonnegative integer matrix with finite support, indexed from 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportMatrix(BTreeMap<(u32, u32), u32>);

impl SupportMatrix {
    pub fn new(entries: impl IntoIterator<Item = ((u32, u32), u32)>) -> Result<Self> {
        let mut m = BTreeMap::new();
        for ((i, j), a) in entries {
            if i == 0 || j == 0 {
                return Err(Error::Parse(format!("matrix index ({i},{j}) must be positive")));
            }
            if a > 0 {
                *m.entry((i, j)).or_insert(0) += a;
            }
        }
        Ok(SupportMatrix(m))
    }

    pub fn get(&self, i: u32, j: u32) -> u32 {
        self.0.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u32)> + '_ {
        self.0.iter().map(|(k, v)| (*k, *v))
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn to_biword(&self) -> Biword {
        let mut v = Vec::new();
        for (&(i, j), &a) in &self.0 {
            v.extend(std::iter::repeat_n((i, j), a as usize));
        }
        Biword(v)
    }

    pub fn transpose(&self) -> SupportMatrix {
        SupportMatrix(self.0.iter().map(|(&(i, j), &a)| ((j, i), a)).collect())
    }

    /// Row sums `(r_1..r_n)`.
    pub fn row_sums(&self, n: usize) -> Vec<u32> {
        let mut s = vec![0; n];
        for (&(i, _), &a) in &self.0 {
            s[i as usize - 1] += a;
        }
        s
    }

    pub fn col_sums(&self, n: usize) -> Vec<u32> {
        self.transpose().row_sums(n)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson { entries: self.0.iter().map(|(&(i, j), &a)| [i, j, a]).collect() }
    }

    pub fn from_json(j: &MatrixJson) -> Result<Self> {
        SupportMatrix::new(j.entries.iter().map(|e| ((e[0], e[1]), e[2])))
    }
}

/// `{"entries":[[i,j,a],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub entries: Vec<[u32; 3]>,
}

/// All matrices with support in `rows × cols` and entry sum at most `max_sum`.
pub fn enumerate_matrices(rows: u32, cols: u32, max_sum: u32) -> Vec<SupportMatrix> {
    let cells: Vec<(u32, u32)> = (1..=rows).flat_map(|i| (1..=cols).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fn go(k: usize, left: u32, cells: &[(u32, u32)], cur: &mut Vec<u32>, out: &mut Vec<SupportMatrix>) {
        if k == cells.len() {
            out.push(SupportMatrix(
                cells.iter().zip(cur.iter()).filter(|(_, &a)| a > 0).map(|(&c, &a)| (c, a)).collect(),
            ));
            return;
        }
        for a in 0..=left {
            cur.push(a);
            go(k + 1, left - a, cells, cur, out);
            cur.pop();
        }
    }
    go(0, max_sum, &cells, &mut Vec::new(), &mut out);
    out
}

/// Row-inserts `x` into a straight-shape tableau given by rows; returns the new box.
fn row_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> Cell {
    for r in 0.. {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let row = &mut rows[r];
        match row.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return Cell::new(r, row.len() - 1);
            }
        }
    }
    unreachable!()
}

/// Reverse of [`row_insert`]: removes the box at the end of row `r` and bumps
/// upward, returning the letter ejected from the first row.
fn reverse_row_insert(rows: &mut Vec<Vec<u32>>, r: usize) -> u32 {
    let mut x = rows[r].pop().expect("corner box");
    if rows[r].is_empty() {
        rows.truncate(r);
    }
    for k in (0..r).rev() {
        let row = &mut rows[k];
        let pos = row.iter().rposition(|&y| y < x).expect("reverse bump in a semistandard tableau");
        x = std::mem::replace(&mut row[pos], x);
    }
    x
}

/// Schensted row insertion of `x` into a straight-shape SSYT.
pub fn schensted_insert(p: &Tableau, x: u32) -> Result<(Tableau, Cell)> {
    if !p.shape().is_straight() {
        return Err(Error::ShapeMismatch("Schensted insertion needs a straight shape".into()));
    }
    let mut rows = p.rows().to_vec();
    let cell = row_insert(&mut rows, x);
    Ok((Tableau::from_rows(rows)?, cell))
}

/// Classical RSK: inserts the `j` word of the right-lex biword, recording `i`.
pub fn rsk(a: &SupportMatrix) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for &(i, j) in a.to_biword().right_lex() {
        let c = row_insert(&mut p, j);
        if c.row == q.len() {
            q.push(Vec::new());
        }
        q[c.row].push(i);
    }
    let p = Tableau::from_rows(p).expect("insertion tableau is semistandard");
    let q = Tableau::from_rows(q).expect("recording tableau is semistandard");
    (p, q)
}

/// Inverse of [`rsk`]. Fails on shape mismatch or non-straight inputs.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<SupportMatrix> {
    if !p.shape().is_straight() || p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!("P has shape {}, Q has shape {}", p.shape(), q.shape())));
    }
    let mut prow = p.rows().to_vec();
    let mut qrow = q.rows().to_vec();
    let mut letters = Vec::new();
    while !qrow.is_empty() {
        // the largest entry of Q, rightmost among equals, sits at a corner
        let (r, _) = qrow
            .iter()
            .enumerate()
            .map(|(r, row)| (r, *row.last().unwrap()))
            .max_by_key(|&(r, v)| (v, qrow[r].len()))
            .unwrap();
        let i = qrow[r].pop().unwrap();
        if qrow[r].is_empty() {
            qrow.truncate(r);
        }
        let j = reverse_row_insert(&mut prow, r);
        letters.push((i, j));
    }
    Ok(Biword::new(letters)?.to_matrix())
}

/// A skew tableau under construction: rows hold the boxes `inner[r]..outer[r]`.
#[derive(Clone, Debug)]
struct SkewWork {
    inner: Vec<usize>,
    outer: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl SkewWork {
    fn from_tableau(t: &Tableau) -> Self {
        let n = t.shape().rows();
        SkewWork { inner: t.shape().inner().padded(n), outer: t.shape().outer().padded(n), rows: t.rows().to_vec() }
    }

    fn ensure_row(&mut self, r: usize) {
        while self.rows.len() <= r {
            self.rows.push(Vec::new());
            self.inner.push(0);
            self.outer.push(0);
        }
    }

    /// Row insertion starting at row `r`.
    fn insert_from(&mut self, mut r: usize, mut x: u32) -> Cell {
        loop {
            self.ensure_row(r);
            let row = &mut self.rows[r];
            match row.iter().position(|&y| y > x) {
                Some(k) => x = std::mem::replace(&mut row[k], x),
                None => {
                    row.push(x);
                    self.outer[r] += 1;
                    return Cell::new(r, self.outer[r] - 1);
                }
            }
            r += 1;
        }
    }

    /// Internal insertion at `c`, a box addable to the inner shape: the box joins
    /// the inner shape and its entry, if any, is inserted into the next row.
    fn internal_insert(&mut self, c: Cell) -> Cell {
        self.ensure_row(c.row);
        debug_assert_eq!(self.inner[c.row], c.col);
        debug_assert!(c.row == 0 || self.inner[c.row - 1] > c.col);
        if self.outer[c.row] > c.col {
            let x = self.rows[c.row].remove(0);
            self.inner[c.row] += 1;
            self.insert_from(c.row + 1, x)
        } else {
            self.inner[c.row] += 1;
            self.outer[c.row] += 1;
            c
        }
    }

    /// Undoes the insertion that created `d`, the rightmost box of its row.
    /// Returns `Ok(x)` for a letter ejected from the top row, `Err(c)` for an
    /// internal insertion that started at `c`.
    fn uninsert(&mut self, d: Cell) -> std::result::Result<u32, Cell> {
        let r = d.row;
        debug_assert_eq!(self.outer[r], d.col + 1);
        if self.inner[r] > d.col {
            self.inner[r] -= 1;
            self.outer[r] -= 1;
            return Err(d);
        }
        let mut x = self.rows[r].pop().expect("filled corner");
        self.outer[r] -= 1;
        for k in (0..r).rev() {
            let row = &mut self.rows[k];
            match row.iter().rposition(|&y| y < x) {
                Some(pos) => x = std::mem::replace(&mut row[pos], x),
                None => {
                    row.insert(0, x);
                    self.inner[k] -= 1;
                    return Err(Cell::new(k, self.inner[k]));
                }
            }
        }
        Ok(x)
    }

    fn into_tableau(mut self) -> Result<Tableau> {
        while self.outer.last() == Some(&0) {
            self.outer.pop();
            self.inner.pop();
            self.rows.pop();
        }
        let shape = SkewShape::new(Partition::new(self.outer)?, Partition::new(self.inner)?)?;
        Tableau::new(shape, self.rows)
    }
}

/// Skew RSK. Takes a biword, `T ∈ SSYT(α/μ)` and `U ∈ SSYT(β/μ)`, and returns
/// `P ∈ SSYT(λ/β)` holding the entries of `T` and the `i` letters, and
/// `Q ∈ SSYT(λ/α)` holding the entries of `U` and the `j` letters.
///
/// Values are processed in increasing order. For each value `v`, the boxes of
/// `U` containing `v` are internally inserted into `P` from left to right, then
/// the biletters `(i, v)` are externally inserted in increasing `i`. Every new
/// box of `P` is recorded in `Q` with value `v`. With `α = β = μ = ∅` this is
/// classical RSK applied to the transposed biword.
pub fn skew_rsk(biword: &Biword, t: &Tableau, u: &Tableau) -> Result<(Tableau, Tableau)> {
    if t.shape().inner() != u.shape().inner() {
        return Err(Error::ShapeMismatch(format!(
            "inner shapes differ: {} vs {}",
            t.shape().inner(),
            u.shape().inner()
        )));
    }
    let alpha = t.shape().outer().clone();
    let mut p = SkewWork::from_tableau(t);

    let mut by_value: BTreeMap<u32, (Vec<Cell>, Vec<u32>)> = BTreeMap::new();
    for (r, row) in u.rows().iter().enumerate() {
        let start = u.shape().row_range(r).start;
        for (k, &v) in row.iter().enumerate() {
            by_value.entry(v).or_default().0.push(Cell::new(r, start + k));
        }
    }
    for (i, j) in biword.left_lex() {
        by_value.entry(j).or_default().1.push(i);
    }

    let mut recorded: Vec<(Cell, u32)> = Vec::new();
    for (v, (mut cells, letters)) in by_value {
        cells.sort_by_key(|c| c.col);
        for c in cells {
            recorded.push((p.internal_insert(c), v));
        }
        for i in letters {
            recorded.push((p.insert_from(0, i), v));
        }
    }

    let lambda = Partition::new(p.outer.clone())?;
    let q_shape = SkewShape::new(lambda.clone(), alpha)?;
    let mut q_rows: Vec<Vec<u32>> = (0..q_shape.rows()).map(|r| vec![0; q_shape.row_range(r).len()]).collect();
    for (c, v) in recorded {
        q_rows[c.row][c.col - q_shape.row_range(c.row).start] = v;
    }
    let p = p.into_tableau().map_err(|e| Error::Invariant(format!("skew RSK produced a bad P: {e}")))?;
    if !is_semistandard(&q_shape, &q_rows) {
        return Err(Error::Invariant(format!("skew RSK produced a non-semistandard Q: {q_rows:?}")));
    }
    Ok((p, Tableau::new(q_shape, q_rows)?))
}

/// Inverse of [`skew_rsk`]: `(P, Q) ↦ (biword, T, U)`.
pub fn skew_rsk_inverse(p: &Tableau, q: &Tableau) -> Result<(Biword, Tableau, Tableau)> {
    if p.shape().outer() != q.shape().outer() {
        return Err(Error::ShapeMismatch(format!(
            "outer shapes differ: {} vs {}",
            p.shape().outer(),
            q.shape().outer()
        )));
    }
    let beta = p.shape().inner().clone();
    let mut work = SkewWork::from_tableau(p);
    let mut cells: Vec<(u32, Cell)> = Vec::new();
    for (r, row) in q.rows().iter().enumerate() {
        let start = q.shape().row_range(r).start;
        for (k, &v) in row.iter().enumerate() {
            cells.push((v, Cell::new(r, start + k)));
        }
    }
    // reverse creation order: larger values first, right to left within a value
    cells.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.col.cmp(&a.1.col)));

    let mut letters = Vec::new();
    let mut u_cells: Vec<(Cell, u32)> = Vec::new();
    for (v, d) in cells {
        match work.uninsert(d) {
            Ok(i) => letters.push((i, v)),
            Err(c) => u_cells.push((c, v)),
        }
    }
    let t = work.into_tableau()?;
    let mu = t.shape().inner().clone();
    let u_shape = SkewShape::new(beta, mu)?;
    let mut u_rows: Vec<Vec<u32>> = (0..u_shape.rows()).map(|r| vec![0; u_shape.row_range(r).len()]).collect();
    for (c, v) in u_cells {
        if !u_shape.contains_cell(c) {
            return Err(Error::Invariant(format!("inverse skew RSK produced box {c:?} outside {u_shape}")));
        }
        u_rows[c.row][c.col - u_shape.row_range(c.row).start] = v;
    }
    Ok((Biword::new(letters)?, t, Tableau::new(u_shape, u_rows)?))
}

fn embed(p: &MultiPoly, offset: usize, total: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(total);
    for (e, c) in p.terms() {
        let mut v = vec![0; total];
        v[offset..offset + e.len()].copy_from_slice(e);
        out.add_term(v, c);
    }
    out
}

/// Partitions containing `base` with at most `max_size` boxes.
pub(crate) fn partitions_containing(base: &Partition, max_size: usize) -> Vec<Partition> {
    (base.size()..=max_size).flat_map(Partition::all_of_size).filter(|l| l.contains(base)).collect()
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let n = a.len().max(b.len());
    Partition::new((0..n).map(|r| a.part(r).max(b.part(r))).collect()).unwrap()
}

fn intersection(a: &Partition, b: &Partition) -> Partition {
    let n = a.len().min(b.len());
    Partition::new((0..n).map(|r| a.part(r).min(b.part(r))).collect()).unwrap()
}

/// Both sides of the skew Cauchy identity in `x_1..x_nx, y_1..y_ny`, truncated
/// at total degree `d`. Variables `x` come first.
pub fn skew_cauchy_sides(alpha: &Partition, beta: &Partition, nx: usize, ny: usize, d: u32) -> (MultiPoly, MultiPoly) {
    let nv = nx + ny;
    let base = union(alpha, beta);
    let max_size = (d as usize + alpha.size() + beta.size()) / 2;
    let mut lhs = MultiPoly::zero(nv);
    for lam in partitions_containing(&base, max_size) {
        let sx = schur(&SkewShape::new(lam.clone(), beta.clone()).unwrap(), nx);
        let sy = schur(&SkewShape::new(lam.clone(), alpha.clone()).unwrap(), ny);
        lhs += &embed(&sx, 0, nv).mul_truncated(&embed(&sy, nx, nv), d);
    }
    let mut kernel = MultiPoly::one(nv);
    for i in 1..=nx {
        for j in 1..=ny {
            let xy = &MultiPoly::var(nv, i) * &MultiPoly::var(nv, nx + j);
            let mut geom = MultiPoly::zero(nv);
            for k in 0..=d / 2 {
                geom += &xy.pow(k);
            }
            kernel = kernel.mul_truncated(&geom, d);
        }
    }
    let mut rhs = MultiPoly::zero(nv);
    for mu in intersection(alpha, beta).subpartitions() {
        let sx = schur(&SkewShape::new(alpha.clone(), mu.clone()).unwrap(), nx);
        let sy = schur(&SkewShape::new(beta.clone(), mu).unwrap(), ny);
        let term = embed(&sx, 0, nv).mul_truncated(&embed(&sy, nx, nv), d);
        rhs += &term.mul_truncated(&kernel, d);
    }
    (lhs.truncate(d), rhs.truncate(d))
}

/// Checks the skew Cauchy identity coefficientwise up to total degree `d`.
pub fn verify_skew_cauchy(alpha: &Partition, beta: &Partition, nx: usize, ny: usize, d: u32) -> bool {
    let (lhs, rhs) = skew_cauchy_sides(alpha, beta, nx, ny, d);
    lhs == rhs
}

/// A point of the skew RSK domain: `(biword, T, U)`.
pub type SkewTriple = (Biword, Tableau, Tableau);

/// All `(biword, T, U)` with `T ∈ SSYT(α/μ)`, `U ∈ SSYT(β/μ)` over `μ ⊆ α∩β`,
/// entries of `T` and the `i` letters at most `nx`, entries of `U` and the `j`
/// letters at most `ny`, and at most `max_len` biletters.
pub fn skew_domain(alpha: &Partition, beta: &Partition, nx: u32, ny: u32, max_len: u32) -> Vec<SkewTriple> {
    let words: Vec<Biword> = enumerate_matrices(nx, ny, max_len).iter().map(SupportMatrix::to_biword).collect();
    let mut out = Vec::new();
    for mu in intersection(alpha, beta).subpartitions() {
        let ts = enumerate_ssyt(&SkewShape::new(alpha.clone(), mu.clone()).unwrap(), nx);
        let us = enumerate_ssyt(&SkewShape::new(beta.clone(), mu.clone()).unwrap(), ny);
        for w in &words {
            for t in &ts {
                for u in &us {
                    out.push((w.clone(), t.clone(), u.clone()));
                }
            }
        }
    }
    out
}

/// All pairs `(P, Q)` with `P ∈ SSYT(λ/β)` (entries ≤ nx), `Q ∈ SSYT(λ/α)`
/// (entries ≤ ny) over `λ ⊇ α∪β` with `|λ| ≤ max_size`.
pub fn skew_codomain(
    alpha: &Partition,
    beta: &Partition,
    nx: u32,
    ny: u32,
    max_size: usize,
) -> Vec<(Tableau, Tableau)> {
    let mut out = Vec::new();
    for lam in partitions_containing(&union(alpha, beta), max_size) {
        let ps = enumerate_ssyt(&SkewShape::new(lam.clone(), beta.clone()).unwrap(), nx);
        let qs = enumerate_ssyt(&SkewShape::new(lam.clone(), alpha.clone()).unwrap(), ny);
        for p in &ps {
            for q in &qs {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    out
}

/// Outcome of the exhaustive skew RSK check for one `(α, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCheck {
    pub domain: usize,
    pub distinct_images: usize,
    pub failure: Option<String>,
}

/// Runs skew RSK over the whole bounded domain, checking the shape and content
/// postconditions, injectivity, the inverse, and that every pair in the
/// codomain with at most `max_len` letters is hit.
pub fn check_skew_rsk(alpha: &Partition, beta: &Partition, max_entry: u32, max_len: u32) -> SkewCheck {
    let domain = skew_domain(alpha, beta, max_entry, max_entry, max_len);
    let mut images = BTreeSet::new();
    let mut failure = None;
    for (w, t, u) in &domain {
        let fail = |msg: String| Some(format!("biword {w}, T {t}, U {u}: {msg}"));
        let (p, q) = match skew_rsk(w, t, u) {
            Ok(pq) => pq,
            Err(e) => {
                failure = failure.or_else(|| fail(e.to_string()));
                continue;
            }
        };
        if p.shape().outer() != q.shape().outer() || p.shape().inner() != beta || q.shape().inner() != alpha {
            failure = failure.or_else(|| fail(format!("shapes {} and {}", p.shape(), q.shape())));
        }
        let mut pc: Vec<u32> = t.entries().chain(w.right_lex().iter().map(|b| b.0)).collect();
        let mut qc: Vec<u32> = u.entries().chain(w.right_lex().iter().map(|b| b.1)).collect();
        let mut pe: Vec<u32> = p.entries().collect();
        let mut qe: Vec<u32> = q.entries().collect();
        pc.sort_unstable();
        qc.sort_unstable();
        pe.sort_unstable();
        qe.sort_unstable();
        if pc != pe || qc != qe {
            failure = failure.or_else(|| fail("content mismatch".into()));
        }
        match skew_rsk_inverse(&p, &q) {
            Ok(back) if back == (w.clone(), t.clone(), u.clone()) => {}
            Ok(back) => failure = failure.or_else(|| fail(format!("inverse gave {back:?}"))),
            Err(e) => failure = failure.or_else(|| fail(format!("inverse failed: {e}"))),
        }
        images.insert((p, q));
    }
    if images.len() != domain.len() {
        failure = failure.or(Some(format!("{} inputs but {} images", domain.len(), images.len())));
    }
    // surjectivity onto the pairs whose preimage has at most max_len biletters
    let max_size = alpha.size() + beta.size() + max_len as usize;
    let mut hit = 0;
    for (p, q) in skew_codomain(alpha, beta, max_entry, max_entry, max_size) {
        match skew_rsk_inverse(&p, &q) {
            Ok((w, t, u)) => {
                if skew_rsk(&w, &t, &u).ok().as_ref() != Some(&(p.clone(), q.clone())) {
                    failure = failure.or(Some(format!("(P, Q) = ({p}, {q}) does not round-trip")));
                }
                if w.len() <= max_len as usize {
                    hit += 1;
                }
            }
            Err(e) => failure = failure.or(Some(format!("(P, Q) = ({p}, {q}): {e}"))),
        }
    }
    if hit != images.len() {
        failure = failure.or(Some(format!("{hit} codomain pairs vs {} images", images.len())));
    }
    SkewCheck { domain: domain.len(), distinct_images: images.len(), failure }
}

/// Sum of `x^P y^Q` (resp. `x^{i}x^T y^{j}y^U`) over the image (resp. domain)
/// of skew RSK, truncated at total degree `d`.
pub fn skew_rsk_generating_functions(
    alpha: &Partition,
    beta: &Partition,
    nx: usize,
    ny: usize,
    d: u32,
) -> (MultiPoly, MultiPoly) {
    let nv = nx + ny;
    let max_len = d / 2;
    let mut image = MultiPoly::zero(nv);
    let mut domain = MultiPoly::zero(nv);
    for (w, t, u) in skew_domain(alpha, beta, nx as u32, ny as u32, max_len) {
        let deg = t.size() + u.size() + 2 * w.len();
        if deg > d as usize {
            continue;
        }
        let mut e = vec![0u32; nv];
        for x in t.entries().chain(w.right_lex().iter().map(|b| b.0)) {
            e[x as usize - 1] += 1;
        }
        for y in u.entries().chain(w.right_lex().iter().map(|b| b.1)) {
            e[nx + y as usize - 1] += 1;
        }
        domain.add_term(e, &PolyT::one());
        let (p, q) = skew_rsk(&w, &t, &u).expect("skew RSK");
        let mut e = vec![0u32; nv];
        for x in p.entries() {
            e[x as usize - 1] += 1;
        }
        for y in q.entries() {
            e[nx + y as usize - 1] += 1;
        }
        image.add_term(e, &PolyT::one());
    }
    (image, domain)
}
