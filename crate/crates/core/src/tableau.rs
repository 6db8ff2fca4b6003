//! Semistandard tableaux on straight and skew shapes, unrestricted fillings,
//! reading words, enumeration and Schur polynomials.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, SkewShape};
use crate::poly::{MultiPoly, PolyT};

/// A finite word over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(" "))
        }
    }
}

/// Accepts `"34321222342"` (one digit per letter) or space/comma separated letters.
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<u32>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("letter {c:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        if letters.contains(&0) {
            return Err(Error::Parse("letters must be positive".into()));
        }
        Ok(Word(letters))
    }
}

/// Whether `rows` (entries of each row of `shape`, left to right) form a
/// semistandard filling: rows weakly increase, columns strictly increase.
pub fn is_semistandard(shape: &SkewShape, rows: &[Vec<u32>]) -> bool {
    if rows.len() != shape.rows() {
        return false;
    }
    for (r, row) in rows.iter().enumerate() {
        let range = shape.row_range(r);
        if row.len() != range.len() || row.contains(&0) {
            return false;
        }
        if row.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        if r == 0 {
            continue;
        }
        let above = shape.row_range(r - 1);
        for (k, &v) in row.iter().enumerate() {
            let c = range.start + k;
            if above.contains(&c) && rows[r - 1][c - above.start] >= v {
                return false;
            }
        }
    }
    true
}

/// A semistandard tableau of a (possibly skew) shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if !is_semistandard(&shape, &rows) {
            return Err(Error::InvalidTableau(format!("{rows:?} is not semistandard of shape {shape}")));
        }
        Ok(Tableau { shape, rows })
    }

    /// A straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::new(SkewShape::straight(shape), rows)
    }

    pub fn empty() -> Self {
        Tableau { shape: SkewShape::straight(Partition::empty()), rows: Vec::new() }
    }

    /// The empty filling of `outer/outer`-type shapes such as `(1)/(1)`.
    pub fn empty_of(shape: SkewShape) -> Result<Self> {
        let rows = (0..shape.rows()).map(|r| vec![0; shape.row_range(r).len()]).collect::<Vec<_>>();
        if rows.iter().any(|r| !r.is_empty()) {
            return Err(Error::InvalidTableau(format!("shape {shape} is not empty")));
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, c: Cell) -> Option<u32> {
        let range = self.shape.row_range(c.row);
        range.contains(&c.col).then(|| self.rows[c.row][c.col - range.start])
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn max_entry(&self) -> u32 {
        self.entries().max().unwrap_or(0)
    }

    /// `(c_1, …, c_n)` where `c_i` counts the entries equal to `i`.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        weight_of(self.entries(), n)
    }

    /// Rows read left to right, from the bottom row to the top row.
    pub fn reading_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Refills the boxes in reading-word order. Errors if the result is not semistandard.
    pub fn refill_from_reading_word(&self, w: &Word) -> Result<Tableau> {
        if w.len() != self.size() {
            return Err(Error::ShapeMismatch(format!("word of length {} for {} boxes", w.len(), self.size())));
        }
        let mut letters = w.0.iter().copied();
        let mut rows = vec![Vec::new(); self.rows.len()];
        for r in (0..self.rows.len()).rev() {
            rows[r] = letters.by_ref().take(self.rows[r].len()).collect();
        }
        Tableau::new(self.shape.clone(), rows)
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            outer: self.shape.outer().parts().to_vec(),
            inner: self.shape.inner().parts().to_vec(),
            rows: self.rows.clone(),
        }
    }

    pub fn from_json(j: &TableauJson) -> Result<Self> {
        let shape = SkewShape::new(Partition::new(j.outer.clone())?, Partition::new(j.inner.clone())?)?;
        let mut rows = j.rows.clone();
        rows.resize(shape.rows(), Vec::new());
        Tableau::new(shape, rows)
    }
}

pub(crate) fn weight_of(entries: impl Iterator<Item = u32>, n: usize) -> Vec<u32> {
    let mut w = vec![0; n];
    for e in entries {
        assert!(e >= 1 && (e as usize) <= n, "entry {e} outside [1, {n}]");
        w[e as usize - 1] += 1;
    }
    w
}

/// JSON form `{"outer":[...],"inner":[...],"rows":[[...],...]}`; `rows` lists only skew boxes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub outer: Vec<usize>,
    #[serde(default)]
    pub inner: Vec<usize>,
    pub rows: Vec<Vec<u32>>,
}

fn fmt_rows(f: &mut fmt::Formatter<'_>, inner: &Partition, rows: &[Vec<u32>]) -> fmt::Result {
    if rows.iter().all(Vec::is_empty) && inner.is_empty() {
        return write!(f, "∅");
    }
    let text: Vec<String> = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut items: Vec<String> = vec![".".to_string(); inner.part(r)];
            items.extend(row.iter().map(u32::to_string));
            items.join(" ")
        })
        .collect();
    write!(f, "{}", text.join(" / "))
}

/// Text form: rows separated by `/`, entries by spaces; inner boxes of a skew
/// shape are shown as `.`; the empty tableau is `∅`.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(f, self.shape.inner(), &self.rows)
    }
}

/// Outer parts, inner parts and the entries of each row.
type ParsedRows = (Vec<usize>, Vec<usize>, Vec<Vec<u32>>);

fn parse_rows(s: &str) -> Result<ParsedRows> {
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Ok((Vec::new(), Vec::new(), Vec::new()));
    }
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for row in s.split('/') {
        let mut skipped = 0;
        let mut entries = Vec::new();
        for tok in row.split_whitespace() {
            if tok == "." {
                if !entries.is_empty() {
                    return Err(Error::Parse(format!("'.' after an entry in row {row:?}")));
                }
                skipped += 1;
            } else {
                entries.push(tok.parse::<u32>().map_err(|e| Error::Parse(format!("{tok:?}: {e}")))?);
            }
        }
        outer.push(skipped + entries.len());
        inner.push(skipped);
        rows.push(entries);
    }
    Ok((outer, inner, rows))
}

impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner, rows) = parse_rows(s)?;
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        Tableau::new(shape, rows)
    }
}

/// An arbitrary filling of a straight shape by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Filling {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Filling { shape, rows })
    }

    /// Builds a filling from its columns (top to bottom).
    pub fn from_columns(cols: &[Vec<u32>]) -> Result<Self> {
        let height = cols.first().map_or(0, Vec::len);
        let mut rows = vec![Vec::new(); height];
        for col in cols {
            for (r, &v) in col.iter().enumerate() {
                rows[r].push(v);
            }
        }
        Filling::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, c: Cell) -> Option<u32> {
        self.rows.get(c.row).and_then(|r| r.get(c.col)).copied()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().filter_map(|r| r.get(j).copied()).collect()
    }

    pub fn weight(&self, n: usize) -> Vec<u32> {
        weight_of(self.rows.iter().flatten().copied(), n)
    }

    pub fn is_semistandard(&self) -> bool {
        is_semistandard(&SkewShape::straight(self.shape.clone()), &self.rows)
    }

    pub fn to_tableau(&self) -> Result<Tableau> {
        Tableau::new(SkewShape::straight(self.shape.clone()), self.rows.clone())
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(f, &Partition::empty(), &self.rows)
    }
}

impl FromStr for Filling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (_, inner, rows) = parse_rows(s)?;
        if inner.iter().any(|&k| k > 0) {
            return Err(Error::Parse("fillings have straight shapes".into()));
        }
        Filling::new(rows)
    }
}

/// All SSYT of `shape` with entries in `1..=n`, in lexicographic order of the
/// row-by-row entry sequence.
pub fn enumerate_ssyt(shape: &SkewShape, n: u32) -> Vec<Tableau> {
    let cells: Vec<Cell> = shape.cells().collect();
    let mut rows: Vec<Vec<u32>> = (0..shape.rows()).map(|r| vec![0; shape.row_range(r).len()]).collect();
    let mut out = Vec::new();
    fn go(k: usize, cells: &[Cell], shape: &SkewShape, n: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if k == cells.len() {
            out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        let Cell { row, col } = cells[k];
        let start = shape.row_range(row).start;
        let mut lo = 1;
        if col > start {
            lo = lo.max(rows[row][col - start - 1]);
        }
        if row > 0 && shape.row_range(row - 1).contains(&col) {
            lo = lo.max(rows[row - 1][col - shape.row_range(row - 1).start] + 1);
        }
        for v in lo..=n {
            rows[row][col - start] = v;
            go(k + 1, cells, shape, n, rows, out);
        }
    }
    go(0, &cells, shape, n, &mut rows, &mut out);
    out
}

/// `s_{λ/μ}(x_1..x_n)` as the sum of `x^T` over semistandard tableaux.
pub fn schur(shape: &SkewShape, n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(n);
    for t in enumerate_ssyt(shape, n as u32) {
        p.add_term(t.weight(n), &PolyT::one());
    }
    p
}

/// Number of standard fillings `f^{λ/μ}`, by removing outer corners recursively.
pub fn count_standard(shape: &SkewShape) -> BigUint {
    fn go(outer: &Partition, inner: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
        if outer == inner {
            return BigUint::one();
        }
        if let Some(v) = memo.get(outer) {
            return v.clone();
        }
        let mut total = BigUint::default();
        for r in 0..outer.len() {
            if outer.part(r) > outer.part(r + 1) && outer.part(r) > inner.part(r) {
                let mut parts = outer.parts().to_vec();
                parts[r] -= 1;
                let smaller = Partition::new(parts).expect("corner removal");
                total += go(&smaller, inner, memo);
            }
        }
        memo.insert(outer.clone(), total.clone());
        total
    }
    go(shape.outer(), shape.inner(), &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn straight(v: &[usize]) -> SkewShape {
        SkewShape::straight(p(v))
    }

    /// Every filling of the boxes by `1..=n`, filtered by the SSYT predicate.
    fn brute_force_count(shape: &SkewShape, n: u32) -> usize {
        let k = shape.size();
        let mut count = 0;
        for code in 0..(n as usize).pow(k as u32) {
            let mut c = code;
            let mut vals = Vec::new();
            for _ in 0..k {
                vals.push((c % n as usize) as u32 + 1);
                c /= n as usize;
            }
            let mut it = vals.into_iter();
            let rows: Vec<Vec<u32>> =
                (0..shape.rows()).map(|r| it.by_ref().take(shape.row_range(r).len()).collect()).collect();
            if is_semistandard(shape, &rows) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn enumerate_examples() {
        let one = enumerate_ssyt(&straight(&[1]), 2);
        assert_eq!(one.iter().map(|t| t.to_string()).collect::<Vec<_>>(), vec!["1", "2"]);
        assert_eq!(enumerate_ssyt(&straight(&[2, 1]), 3).len(), 8);
        let skew = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert_eq!(enumerate_ssyt(&skew, 2).len(), 4);
        assert_eq!(brute_force_count(&straight(&[2, 1]), 3), 8);
        assert_eq!(brute_force_count(&skew, 2), 4);
    }

    #[test]
    fn enumeration_matches_brute_force_and_is_sorted() {
        for (outer, inner, n) in
            [(&[2, 2][..], &[1][..], 3), (&[3, 1], &[], 3), (&[2, 1, 1], &[1, 1], 3), (&[3, 2], &[2], 2)]
        {
            let shape = SkewShape::new(p(outer), p(inner)).unwrap();
            let all = enumerate_ssyt(&shape, n);
            assert_eq!(all.len(), brute_force_count(&shape, n));
            let keys: Vec<Vec<u32>> = all.iter().map(|t| t.entries().collect()).collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&straight(&[1]), 2).to_string(), "x1 + x2");
        assert_eq!(schur(&straight(&[1, 1]), 2).to_string(), "x1*x2");
        assert_eq!(schur(&straight(&[2]), 2).to_string(), "x1^2 + x1*x2 + x2^2");
    }

    #[test]
    fn schur_symmetric_and_counts() {
        for size in 0..=6 {
            for lam in Partition::all_of_size(size) {
                for n in 1..=4usize {
                    let s = schur(&SkewShape::straight(lam.clone()), n);
                    assert!(s.is_symmetric(), "s_{lam} in {n} variables");
                    let count = enumerate_ssyt(&SkewShape::straight(lam.clone()), n as u32).len();
                    assert_eq!(s.at_x_ones(), PolyT::constant(count as i64));
                }
            }
        }
    }

    #[test]
    fn reading_word_examples() {
        let t: Tableau = "1 2 / 3".parse().unwrap();
        assert_eq!(t.reading_word().to_string(), "312");
        assert_eq!("1".parse::<Tableau>().unwrap().reading_word().to_string(), "1");
        assert!(Tableau::empty().reading_word().is_empty());
        assert_eq!(t.refill_from_reading_word(&t.reading_word()).unwrap(), t);
    }

    #[test]
    fn count_standard_examples() {
        assert_eq!(count_standard(&straight(&[1])), BigUint::from(1u32));
        assert_eq!(count_standard(&straight(&[2, 1])), BigUint::from(2u32));
        let skew = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert_eq!(count_standard(&skew), BigUint::from(2u32));
    }

    #[test]
    fn count_standard_is_weight_one_coefficient() {
        for (outer, inner) in [(&[3, 2][..], &[][..]), (&[3, 2, 1], &[1]), (&[2, 2, 2], &[1, 1]), (&[4, 1], &[2])] {
            let shape = SkewShape::new(p(outer), p(inner)).unwrap();
            let k = shape.size();
            let s = schur(&shape, k);
            let coeff = s.coeff(&vec![1; k]).constant_term();
            assert_eq!(coeff, count_standard(&shape).into());
        }
    }

    #[test]
    fn weights() {
        assert_eq!("1".parse::<Tableau>().unwrap().weight(2), vec![1, 0]);
        let f: Filling = "3 4 / 2".parse().unwrap();
        assert_eq!(f.weight(4), vec![0, 1, 1, 1]);
        assert_eq!(Tableau::empty().weight(3), vec![0, 0, 0]);
    }

    #[test]
    fn text_and_json_forms() {
        let t: Tableau = ". 2 / 1".parse().unwrap();
        assert_eq!(t.shape().to_string(), "(2,1)/(1)");
        assert_eq!(t.to_string(), ". 2 / 1");
        let j = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(j, r#"{"outer":[2,1],"inner":[1],"rows":[[2],[1]]}"#);
        let back: TableauJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Tableau::from_json(&back).unwrap(), t);
        assert!("2 1".parse::<Tableau>().is_err());
        assert!("1 / 1".parse::<Tableau>().is_err());
        assert_eq!(Tableau::empty().to_string(), "∅");
    }
}
