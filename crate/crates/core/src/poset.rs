//! Finite ranked posets, up/down operators, differential and sl2 structures,
//! characters, and the Peck property.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Q};
use crate::partition::Partition;

/// A finite poset with a rank function onto `0..=max_rank`, given by its covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedPoset {
    labels: Vec<String>,
    ranks: Vec<usize>,
    /// `(x, y)` with `x ⋖ y`.
    covers: Vec<(usize, usize)>,
}

impl RankedPoset {
    pub fn new(labels: Vec<String>, ranks: Vec<usize>, mut covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        if ranks.len() != n {
            return Err(Error::InvalidPoset("one rank per element".into()));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::InvalidPoset(format!("duplicate element {l}")));
            }
        }
        for &(x, y) in &covers {
            if x >= n || y >= n || ranks[y] != ranks[x] + 1 {
                return Err(Error::InvalidPoset(format!("bad cover {x} ⋖ {y}")));
            }
        }
        if let Some(&top) = ranks.iter().max() {
            if (0..=top).any(|r| !ranks.contains(&r)) {
                return Err(Error::InvalidPoset("ranks must fill an interval starting at 0".into()));
            }
        }
        covers.sort_unstable();
        covers.dedup();
        Ok(RankedPoset { labels, ranks, covers })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn max_rank(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn covers_pair(&self, x: usize, y: usize) -> bool {
        self.covers.binary_search(&(x, y)).is_ok()
    }

    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; if self.is_empty() { 0 } else { self.max_rank() + 1 }];
        for &r in &self.ranks {
            s[r] += 1;
        }
        s
    }

    pub fn elements_of_rank(&self, r: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.ranks[x] == r).collect()
    }

    /// The `k+1`-element chain `0 < 1 < … < k`.
    pub fn chain(k: usize) -> Self {
        RankedPoset::new(
            (0..=k).map(|i| i.to_string()).collect(),
            (0..=k).collect(),
            (0..k).map(|i| (i, i + 1)).collect(),
        )
        .unwrap()
    }

    pub fn point() -> Self {
        RankedPoset::chain(0)
    }

    /// Subsets of `{1..n}` ordered by inclusion.
    pub fn boolean(n: usize) -> Self {
        let size = 1usize << n;
        let label = |m: usize| {
            let v: Vec<String> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", v.join(","))
        };
        let covers =
            (0..size).flat_map(|m| (0..n).filter(move |i| m >> i & 1 == 0).map(move |i| (m, m | 1 << i))).collect();
        RankedPoset::new((0..size).map(label).collect(), (0..size).map(|m| m.count_ones() as usize).collect(), covers)
            .unwrap()
    }

    /// Young's lattice restricted to partitions of size at most `max_rank`.
    pub fn young(max_rank: usize) -> Self {
        let parts: Vec<Partition> = (0..=max_rank).flat_map(Partition::all_of_size).collect();
        let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut covers = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            if p.size() < max_rank {
                for q in p.addable() {
                    covers.push((i, index[&q]));
                }
            }
        }
        let ranks = parts.iter().map(Partition::size).collect();
        RankedPoset::new(parts.iter().map(ToString::to_string).collect(), ranks, covers).unwrap()
    }

    /// Cartesian product; element `(a, b)` has index `a·|other| + b`.
    pub fn product(&self, other: &RankedPoset) -> Self {
        let m = other.len();
        let mut labels = Vec::new();
        let mut ranks = Vec::new();
        for a in 0..self.len() {
            for b in 0..m {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
                ranks.push(self.ranks[a] + other.ranks[b]);
            }
        }
        let mut covers = Vec::new();
        for &(x, y) in &self.covers {
            covers.extend((0..m).map(|b| (x * m + b, y * m + b)));
        }
        for &(x, y) in &other.covers {
            covers.extend((0..self.len()).map(|a| (a * m + x, a * m + y)));
        }
        RankedPoset::new(labels, ranks, covers).unwrap()
    }

    /// Bit mask of the elements strictly below each element.
    pub fn strictly_below(&self) -> Vec<u64> {
        assert!(self.len() <= 64);
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.ranks[x]);
        let mut below = vec![0u64; self.len()];
        for &y in &order {
            for &(x, y2) in &self.covers {
                if y2 == y {
                    below[y] |= below[x] | 1 << x;
                }
            }
        }
        below
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: (0..self.len())
                .map(|x| ElementJson { id: ElementId::Name(self.labels[x].clone()), rank: self.ranks[x] })
                .collect(),
            covers: self
                .covers
                .iter()
                .map(|&(x, y)| [ElementId::Name(self.labels[x].clone()), ElementId::Name(self.labels[y].clone())])
                .collect(),
        }
    }

    pub fn from_json(j: &PosetJson) -> Result<Self> {
        let labels: Vec<String> = j.elements.iter().map(|e| e.id.to_string()).collect();
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let look = |id: &ElementId| {
            index
                .get(id.to_string().as_str())
                .copied()
                .ok_or_else(|| Error::InvalidPoset(format!("unknown element {id}")))
        };
        let covers = j.covers.iter().map(|[x, y]| Ok((look(x)?, look(y)?))).collect::<Result<Vec<_>>>()?;
        RankedPoset::new(labels.clone(), j.elements.iter().map(|e| e.rank).collect(), covers)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: PosetJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        RankedPoset::from_json(&j)
    }

    /// Index of the element with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Element identifiers may be numbers or strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementId {
    Number(i64),
    Name(String),
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementId::Number(n) => write!(f, "{n}"),
            ElementId::Name(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub id: ElementId,
    pub rank: usize,
}

/// `{"elements":[{"id":..,"rank":..}],"covers":[[id,id],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<ElementJson>,
    pub covers: Vec<[ElementId; 2]>,
}

/// `{"entries":[[row,col,num,den],...]}`; the dimension comes from the poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub entries: Vec<(usize, usize, i64, i64)>,
}

pub fn operator_from_json(j: &OperatorJson, dim: usize) -> Result<QMatrix> {
    let mut m = QMatrix::zeros(dim, dim);
    for &(r, c, num, den) in &j.entries {
        if r >= dim || c >= dim || den == 0 {
            return Err(Error::Parse(format!("operator entry ({r},{c},{num},{den})")));
        }
        m.set(r, c, Q::new(num.into(), den.into()));
    }
    Ok(m)
}

pub fn operator_to_json(m: &QMatrix) -> OperatorJson {
    OperatorJson {
        entries: m
            .nonzeros()
            .map(|(r, c, v)| (r, c, v.numer().to_i64().expect("small entry"), v.denom().to_i64().expect("small entry")))
            .collect(),
    }
}

/// `U x = Σ_{y ⋗ x} y` and `D = Uᵀ`, acting on column vectors.
pub fn up_down_operators(p: &RankedPoset) -> (QMatrix, QMatrix) {
    let mut u = QMatrix::zeros(p.len(), p.len());
    for &(x, y) in p.covers() {
        u.set(y, x, Q::one());
    }
    let d = u.transpose();
    (u, d)
}

/// Pass/fail per rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub ranks: Vec<(usize, bool)>,
    pub problems: Vec<String>,
}

impl RankReport {
    pub fn passed(&self) -> bool {
        self.problems.is_empty() && self.ranks.iter().all(|&(_, ok)| ok)
    }
}

/// Whether column `x` of `m` equals `v·e_x`.
fn column_is_scalar(m: &QMatrix, x: usize, v: &Q) -> bool {
    (0..m.rows()).all(|r| if r == x { m.get(r, x) == v } else { m.get(r, x).is_zero() })
}

/// Checks `(DU − UD) x = r x` for the elements of the given ranks.
pub fn check_differential(p: &RankedPoset, r: i64, ranks_to_check: &[usize]) -> RankReport {
    let (u, d) = up_down_operators(p);
    let c = &(&d * &u) - &(&u * &d);
    let want = Q::from_integer(BigInt::from(r));
    let ranks = ranks_to_check
        .iter()
        .map(|&k| (k, p.elements_of_rank(k).iter().all(|&x| column_is_scalar(&c, x, &want))))
        .collect();
    RankReport { ranks, problems: Vec::new() }
}

/// Checks that `X` raises along covers, `Y` lowers rank by one, and that
/// `XY − YX` acts on rank `i` as `(2i − n)·Id`, `n` the top rank.
pub fn check_sl2_poset(p: &RankedPoset, x: &QMatrix, y: &QMatrix) -> Result<RankReport> {
    let n = p.len();
    for m in [x, y] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::ShapeMismatch(format!("{}×{} operator on a poset of size {n}", m.rows(), m.cols())));
        }
    }
    let mut problems = Vec::new();
    for (r, c, _) in x.nonzeros() {
        if !p.covers_pair(c, r) {
            problems.push(format!("X has an entry at ({r},{c}), which is not a cover"));
        }
    }
    for (r, c, _) in y.nonzeros() {
        if p.rank(r) + 1 != p.rank(c) {
            problems.push(format!("Y has an entry at ({r},{c}), which does not lower rank by one"));
        }
    }
    let h = x.commutator(y);
    let top = p.max_rank() as i64;
    let ranks = (0..=p.max_rank())
        .map(|i| {
            let want = Q::from_integer(BigInt::from(2 * i as i64 - top));
            (i, p.elements_of_rank(i).iter().all(|&e| column_is_scalar(&h, e, &want)))
        })
        .collect();
    Ok(RankReport { ranks, problems })
}

/// The chain `0 < … < k` with `X` weighted by `j(k+1−j)` on the `j`-th cover
/// and `Y` the plain down operator.
pub fn sl2_chain(k: usize) -> (RankedPoset, QMatrix, QMatrix) {
    let p = RankedPoset::chain(k);
    let mut x = QMatrix::zeros(k + 1, k + 1);
    let mut y = QMatrix::zeros(k + 1, k + 1);
    for j in 1..=k {
        x.set(j, j - 1, Q::from_integer(BigInt::from(j * (k + 1 - j))));
        y.set(j - 1, j, Q::one());
    }
    (p, x, y)
}

/// Product structure `X = X₁⊗I + I⊗X₂`, `Y = Y₁⊗I + I⊗Y₂`.
pub fn tensor_sl2(
    a: (&RankedPoset, &QMatrix, &QMatrix),
    b: (&RankedPoset, &QMatrix, &QMatrix),
) -> (RankedPoset, QMatrix, QMatrix) {
    let (ia, ib) = (QMatrix::identity(a.0.len()), QMatrix::identity(b.0.len()));
    let x = &a.1.kron(&ib) + &ia.kron(b.1);
    let y = &a.2.kron(&ib) + &ia.kron(b.2);
    (a.0.product(b.0), x, y)
}

/// A Laurent polynomial in `q` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent(BTreeMap<i64, BigInt>);

impl Laurent {
    pub fn coeff(&self, e: i64) -> BigInt {
        self.0.get(&e).cloned().unwrap_or_default()
    }

    pub fn max_abs_degree(&self) -> i64 {
        self.0.keys().map(|e| e.abs()).max().unwrap_or(0)
    }

    /// Coefficients of `q^e` for `e ≡ parity (mod 2)` and `|e| ≤ M`, `M` the
    /// largest degree in absolute value.
    pub fn parity_sequence(&self, parity: i64) -> Vec<BigInt> {
        let m = self.max_abs_degree();
        (-m..=m).filter(|e| e.rem_euclid(2) == parity).map(|e| self.coeff(e)).collect()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.0.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match e {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{e}"),
            };
            match (mag.is_one(), var.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (true, false) => write!(f, "{var}")?,
                (false, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

/// `Σ q^{h}` over the diagonal entries `h` of `H = XY − YX`.
pub fn sl2_character(x: &QMatrix, y: &QMatrix) -> Result<Laurent> {
    let h = x.commutator(y);
    if !h.is_diagonal() {
        return Err(Error::Invariant("XY - YX is not diagonal".into()));
    }
    let mut out = BTreeMap::new();
    for i in 0..h.rows() {
        let v = h.get(i, i);
        if !v.is_integer() {
            return Err(Error::Invariant(format!("non-integer weight {v}")));
        }
        let e = v.to_integer().to_i64().ok_or_else(|| Error::Invariant("weight out of range".into()))?;
        *out.entry(e).or_insert_with(BigInt::zero) += 1;
    }
    Ok(Laurent(out))
}

/// `a_i = a_{d−i}` and `a_0 ≤ … ≤ a_j ≥ … ≥ a_d` for some `j`.
pub fn symmetric_unimodal<T: PartialOrd>(a: &[T]) -> bool {
    let symmetric = (0..a.len()).all(|i| a[i] == a[a.len() - 1 - i]);
    let peak = a.windows(2).take_while(|w| w[0] <= w[1]).count();
    symmetric && a[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// Largest `k`-families and the rank data behind the Peck property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeckReport {
    pub rank_sizes: Vec<usize>,
    /// `max_k_family[k-1]`: the largest subset with no chain of `k+1` elements.
    pub max_k_family: Vec<usize>,
    pub strongly_sperner: bool,
    pub symmetric_unimodal: bool,
}

impl PeckReport {
    pub fn is_peck(&self) -> bool {
        self.strongly_sperner && self.symmetric_unimodal
    }
}

/// Largest number of elements allowed in the exhaustive `k`-family search.
pub const PECK_SIZE_LIMIT: usize = 20;

/// Brute force over all subsets: the height of each subset is computed from the
/// strict order, and each `k`-family maximum is compared with the sum of the
/// `k` largest ranks.
pub fn peck_report(p: &RankedPoset) -> Result<PeckReport> {
    let n = p.len();
    if n > PECK_SIZE_LIMIT {
        return Err(Error::SizeGuard(format!("{n} elements exceeds the limit of {PECK_SIZE_LIMIT}")));
    }
    let below = p.strictly_below();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| p.rank(x));
    let ranks = p.rank_sizes();
    let levels = ranks.len();
    let best = (0u64..1 << n)
        .into_par_iter()
        .fold(
            || vec![0usize; levels + 1],
            |mut acc, s| {
                let mut height = [0usize; 64];
                let mut h = 0;
                for &x in &order {
                    if s >> x & 1 == 1 {
                        let mut m = s & below[x];
                        let mut hx = 0;
                        while m != 0 {
                            let y = m.trailing_zeros() as usize;
                            hx = hx.max(height[y]);
                            m &= m - 1;
                        }
                        height[x] = hx + 1;
                        h = h.max(hx + 1);
                    }
                }
                let size = s.count_ones() as usize;
                acc[h] = acc[h].max(size);
                acc
            },
        )
        .reduce(|| vec![0usize; levels + 1], |a, b| a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect());
    // a k-family is any subset of height at most k
    let max_k_family: Vec<usize> = (1..=levels).map(|k| best[..=k].iter().copied().max().unwrap()).collect();
    let mut sorted = ranks.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let strongly_sperner = (1..=levels).all(|k| max_k_family[k - 1] == sorted[..k].iter().sum::<usize>());
    Ok(PeckReport { symmetric_unimodal: symmetric_unimodal(&ranks), rank_sizes: ranks, max_k_family, strongly_sperner })
}

pub fn is_peck(p: &RankedPoset) -> Result<bool> {
    Ok(peck_report(p)?.is_peck())
}
