//! Representation diagrams: ranked posets whose cover edges carry a color and
//! a label pair `(c, d)`, the local conditions that make the induced operators
//! a Lie algebra representation, and Gelfand–Tsetlin lattices.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{solve, QMatrix, Q};
use crate::partition::{Partition, SkewShape};
use crate::poset::{PosetJson, RankedPoset};
use crate::tableau::{enumerate_ssyt, schur, Tableau};

/// A Cartan matrix indexed by colors `1..=rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    a: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn new(a: Vec<Vec<i64>>) -> Result<Self> {
        let r = a.len();
        for (i, row) in a.iter().enumerate() {
            if row.len() != r || row[i] != 2 || row.iter().enumerate().any(|(j, &v)| j != i && v > 0) {
                return Err(Error::Parse(format!("not a Cartan matrix: {a:?}")));
            }
        }
        Ok(CartanData { a })
    }

    /// Type `A_r`, i.e. `sl_{r+1}`.
    pub fn type_a(r: usize) -> Self {
        let a = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        CartanData { a }
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// `a_{ij}` for 1-based colors.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i - 1][j - 1]
    }
}

/// A ranked poset whose covers are colored by `1..=r` and optionally labeled
/// by `(c_{yx}, d_{xy})` for the edge `x → y`.
#[derive(Clone, Debug, PartialEq)]
pub struct ColoredDiagram {
    pub poset: RankedPoset,
    /// Color of each cover, in the poset's cover order.
    pub colors: Vec<usize>,
    pub labels: Option<Vec<(Q, Q)>>,
}

/// `l_i(x)`, `ρ_i(x)` and `m_i(x) = 2ρ_i(x) − l_i(x)`, indexed `[x][i-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub l: Vec<Vec<i64>>,
    pub rho: Vec<Vec<i64>>,
    pub m: Vec<Vec<i64>>,
}

/// Named pass/fail checks with a message for each failure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConditionReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

impl ColoredDiagram {
    pub fn new(poset: RankedPoset, colors: Vec<usize>, labels: Option<Vec<(Q, Q)>>) -> Result<Self> {
        let e = poset.covers().len();
        if colors.len() != e || labels.as_ref().is_some_and(|l| l.len() != e) {
            return Err(Error::ShapeMismatch(format!("{e} edges but {} colors", colors.len())));
        }
        if colors.contains(&0) {
            return Err(Error::Parse("colors start at 1".into()));
        }
        if let Some(ls) = &labels {
            if let Some(k) = ls.iter().position(|(c, d)| c.is_zero() && d.is_zero()) {
                return Err(Error::Invariant(format!("edge {k} has both labels zero")));
            }
        }
        Ok(ColoredDiagram { poset, colors, labels })
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Edges as `(x, y, color)` with `x → y`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.poset.covers().iter().zip(&self.colors).map(|(&(x, y), &i)| (x, y, i))
    }

    pub fn with_labels(&self, labels: Vec<(Q, Q)>) -> Result<Self> {
        ColoredDiagram::new(self.poset.clone(), self.colors.clone(), Some(labels))
    }

    fn labels_or_err(&self) -> Result<&[(Q, Q)]> {
        self.labels.as_deref().ok_or_else(|| Error::Invariant("diagram has no edge labels".into()))
    }

    pub fn to_json(&self) -> DiagramJson {
        let rat = |q: &Q| -> (String, String) { (q.numer().to_string(), q.denom().to_string()) };
        DiagramJson {
            poset: self.poset.to_json(),
            colors: self.colors.iter().enumerate().map(|(k, &i)| (k, i)).collect(),
            labels: self
                .labels
                .as_ref()
                .map(|ls| {
                    ls.iter()
                        .enumerate()
                        .map(|(k, (c, d))| {
                            let ((cn, cd), (dn, dd)) = (rat(c), rat(d));
                            (k, cn.parse().unwrap(), cd.parse().unwrap(), dn.parse().unwrap(), dd.parse().unwrap())
                        })
                        .collect()
                })
                .unwrap_or_default(),
        }
    }

    /// Edge indices in the JSON refer to positions in its `covers` array.
    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        let poset = RankedPoset::from_json(&j.poset)?;
        let idx = |id: &crate::poset::ElementId| poset.index_of(&id.to_string()).expect("validated by from_json");
        let json_edges: Vec<(usize, usize)> = j.poset.covers.iter().map(|[x, y]| (idx(x), idx(y))).collect();
        let position: HashMap<(usize, usize), usize> =
            poset.covers().iter().enumerate().map(|(k, &e)| (e, k)).collect();
        let internal = |k: usize| -> Result<usize> {
            json_edges.get(k).map(|e| position[e]).ok_or_else(|| Error::Parse(format!("edge index {k} out of range")))
        };
        let mut colors = vec![0; poset.covers().len()];
        for &(k, i) in &j.colors {
            colors[internal(k)?] = i;
        }
        let labels = if j.labels.is_empty() {
            None
        } else {
            let mut ls = vec![(Q::zero(), Q::zero()); colors.len()];
            for &(k, cn, cd, dn, dd) in &j.labels {
                if cd == 0 || dd == 0 {
                    return Err(Error::Parse(format!("zero denominator on edge {k}")));
                }
                ls[internal(k)?] = (Q::new(cn.into(), cd.into()), Q::new(dn.into(), dd.into()));
            }
            Some(ls)
        };
        ColoredDiagram::new(poset, colors, labels)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: DiagramJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        ColoredDiagram::from_json(&j)
    }
}

/// Poset JSON plus `"colors":[[edge_idx,i]]` and
/// `"labels":[[edge_idx,c_num,c_den,d_num,d_den]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    #[serde(flatten)]
    pub poset: PosetJson,
    pub colors: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<(usize, i64, i64, i64, i64)>,
}

/// Weights from the `i`-components: each component is ranked by its own
/// edges, with `ρ_i` the offset from its bottom and `l_i` its length.
pub fn compute_weights(d: &ColoredDiagram, colors: usize) -> Result<WeightData> {
    let n = d.poset.len();
    let mut l = vec![vec![0i64; colors]; n];
    let mut rho = vec![vec![0i64; colors]; n];
    for i in 1..=colors {
        let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        for (x, y, c) in d.edges() {
            if c == i {
                adj[x].push((y, 1));
                adj[y].push((x, -1));
            }
        }
        let mut level: Vec<Option<i64>> = vec![None; n];
        for start in 0..n {
            if level[start].is_some() {
                continue;
            }
            level[start] = Some(0);
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                let x = comp[k];
                k += 1;
                for &(y, step) in &adj[x] {
                    let want = level[x].unwrap() + step;
                    match level[y] {
                        None => {
                            level[y] = Some(want);
                            comp.push(y);
                        }
                        Some(v) if v != want => return Err(Error::UnrankedComponent(i)),
                        Some(_) => {}
                    }
                }
            }
            let lo = comp.iter().map(|&x| level[x].unwrap()).min().unwrap();
            let hi = comp.iter().map(|&x| level[x].unwrap()).max().unwrap();
            for &x in &comp {
                l[x][i - 1] = hi - lo;
                rho[x][i - 1] = level[x].unwrap() - lo;
            }
        }
    }
    let m = (0..n).map(|x| (0..colors).map(|i| 2 * rho[x][i] - l[x][i]).collect()).collect();
    Ok(WeightData { l, rho, m })
}

/// `m_j(y) − m_j(x) = a_{ji}` for every `i`-edge `x → y` and every `j`.
pub fn check_structure(d: &ColoredDiagram, cartan: &CartanData) -> Result<ConditionReport> {
    let w = compute_weights(d, cartan.rank())?;
    let mut rep = ConditionReport::default();
    for (x, y, i) in d.edges() {
        if i > cartan.rank() {
            rep.record(false, || format!("edge {x}->{y} has color {i} outside the Cartan data"));
            continue;
        }
        for j in 1..=cartan.rank() {
            let diff = w.m[y][j - 1] - w.m[x][j - 1];
            rep.record(diff == cartan.entry(j, i), || {
                format!(
                    "edge {}->{} (color {i}): m_{j} changes by {diff}, expected {}",
                    d.poset.labels()[x],
                    d.poset.labels()[y],
                    cartan.entry(j, i)
                )
            });
        }
    }
    Ok(rep)
}

/// `Σ_{x →i y} π_{xy} − Σ_{y →i z} π_{yz} = m_i(y)` with `π_{xy} = c_{yx} d_{xy}`.
pub fn check_crossing(d: &ColoredDiagram, colors: usize) -> Result<ConditionReport> {
    let labels = d.labels_or_err()?;
    let w = compute_weights(d, colors)?;
    let mut balance = vec![vec![Q::zero(); colors]; d.poset.len()];
    for (k, (x, y, i)) in d.edges().enumerate() {
        let pi = &labels[k].0 * &labels[k].1;
        balance[y][i - 1] += &pi;
        balance[x][i - 1] -= &pi;
    }
    let mut rep = ConditionReport::default();
    for (y, bal) in balance.iter().enumerate() {
        for i in 1..=colors {
            let want = Q::from_integer(BigInt::from(w.m[y][i - 1]));
            rep.record(bal[i - 1] == want, || {
                format!("vertex {} color {i}: edge products give {}, m = {want}", d.poset.labels()[y], bal[i - 1])
            });
        }
    }
    Ok(rep)
}

/// For `x, y` of equal rank and colors `(i, j)`:
/// `Σ_{x →j z, y →i z} c_{zx} d_{yz} = Σ_{u →i x, u →j y} d_{ux} c_{yu}`.
/// The case `x = y`, `i = j` is the crossing condition and is skipped.
pub fn check_diamond(d: &ColoredDiagram, colors: usize) -> Result<ConditionReport> {
    let labels = d.labels_or_err()?;
    let mut rep = ConditionReport::default();
    for ((x, y), (i, j), lhs, rhs) in diamond_sums(d, colors, |k| labels[k].clone()) {
        rep.record(lhs == rhs, || {
            format!("diamond at ({}, {}) colors ({i},{j}): {lhs} vs {rhs}", d.poset.labels()[x], d.poset.labels()[y])
        });
    }
    Ok(rep)
}

/// `(x, y)`, `(i, j)` and the two sides of one diamond equation.
type DiamondEquation<T> = ((usize, usize), (usize, usize), T, T);

/// Both sides of every diamond equation, with labels supplied per edge.
fn diamond_sums<T, F>(d: &ColoredDiagram, colors: usize, label: F) -> Vec<DiamondEquation<T>>
where
    T: Zero + Clone + std::ops::Mul<Output = T>,
    F: Fn(usize) -> (T, T),
{
    let n = d.poset.len();
    let mut up: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    let mut down: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for (k, (x, y, i)) in d.edges().enumerate() {
        up[x].push((y, i, k));
        down[y].push((x, i, k));
    }
    let mut out = Vec::new();
    for x in 0..n {
        for y in d.poset.elements_of_rank(d.poset.rank(x)) {
            for i in 1..=colors {
                for j in 1..=colors {
                    if x == y && i == j {
                        continue;
                    }
                    let mut lhs = T::zero();
                    for &(z, cj, kx) in &up[x] {
                        if cj != j {
                            continue;
                        }
                        for &(z2, ci, ky) in &up[y] {
                            if z2 == z && ci == i {
                                lhs = lhs + label(kx).0 * label(ky).1;
                            }
                        }
                    }
                    let mut rhs = T::zero();
                    for &(u, ci, kx) in &down[x] {
                        if ci != i {
                            continue;
                        }
                        for &(u2, cj, ky) in &down[y] {
                            if u2 == u && cj == j {
                                rhs = rhs + label(kx).1 * label(ky).0;
                            }
                        }
                    }
                    out.push(((x, y), (i, j), lhs, rhs));
                }
            }
        }
    }
    out
}

/// The Chevalley generators `X_i`, `Y_i`, `H_i` (index `i-1`).
#[derive(Clone, Debug, PartialEq)]
pub struct Generators {
    pub x: Vec<QMatrix>,
    pub y: Vec<QMatrix>,
    pub h: Vec<QMatrix>,
}

/// `X_i x = Σ c_{yx} y`, `Y_i y = Σ d_{xy} x`, `H_i x = m_i(x) x`.
pub fn build_generators(d: &ColoredDiagram, cartan: &CartanData) -> Result<Generators> {
    let labels = d.labels_or_err()?;
    let r = cartan.rank();
    let n = d.poset.len();
    let w = compute_weights(d, r)?;
    let mut x = vec![QMatrix::zeros(n, n); r];
    let mut y = vec![QMatrix::zeros(n, n); r];
    for (k, (a, b, i)) in d.edges().enumerate() {
        if i > r {
            return Err(Error::ShapeMismatch(format!("color {i} exceeds Cartan rank {r}")));
        }
        x[i - 1].set(b, a, labels[k].0.clone());
        y[i - 1].set(a, b, labels[k].1.clone());
    }
    let h = (0..r)
        .map(|i| QMatrix::diagonal(&(0..n).map(|v| Q::from_integer(BigInt::from(w.m[v][i]))).collect::<Vec<_>>()))
        .collect();
    Ok(Generators { x, y, h })
}

/// `ad(a)^k (b)`.
fn ad_power(a: &QMatrix, b: &QMatrix, k: i64) -> QMatrix {
    (0..k).fold(b.clone(), |acc, _| a.commutator(&acc))
}

/// Checks the Chevalley–Serre relations on the generator matrices, one entry
/// per relation.
pub fn verify_representation(d: &ColoredDiagram, cartan: &CartanData) -> Result<Vec<(String, bool)>> {
    let g = build_generators(d, cartan)?;
    let r = cartan.rank();
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let a = Q::from_integer(BigInt::from(cartan.entry(i + 1, j + 1)));
            let want = if i == j { g.h[i].clone() } else { QMatrix::zeros(d.poset.len(), d.poset.len()) };
            out.push((
                format!("[X{},Y{}] = {}", i + 1, j + 1, if i == j { format!("H{}", i + 1) } else { "0".into() }),
                g.x[i].commutator(&g.y[j]) == want,
            ));
            out.push((
                format!("[H{},X{}] = {}*X{}", i + 1, j + 1, a, j + 1),
                g.h[i].commutator(&g.x[j]) == g.x[j].scale(&a),
            ));
            out.push((
                format!("[H{},Y{}] = {}*Y{}", i + 1, j + 1, -a.clone(), j + 1),
                g.h[i].commutator(&g.y[j]) == g.y[j].scale(&-a.clone()),
            ));
            out.push((format!("[H{},H{}] = 0", i + 1, j + 1), g.h[i].commutator(&g.h[j]).is_zero()));
            if i != j {
                let k = 1 - cartan.entry(i + 1, j + 1);
                out.push((format!("ad(X{})^{k}(X{}) = 0", i + 1, j + 1), ad_power(&g.x[i], &g.x[j], k).is_zero()));
                out.push((format!("ad(Y{})^{k}(Y{}) = 0", i + 1, j + 1), ad_power(&g.y[i], &g.y[j], k).is_zero()));
            }
        }
    }
    Ok(out)
}

pub fn representation_holds(d: &ColoredDiagram, cartan: &CartanData) -> Result<bool> {
    Ok(verify_representation(d, cartan)?.iter().all(|(_, ok)| *ok))
}

/// The Gelfand–Tsetlin lattice: SSYT of shape `λ` with entries in `[n]`, with
/// an `i`-colored edge from a tableau to the one obtained by changing a single
/// `i+1` into `i`. Rank is `Σ (n − entry)` shifted to start at 0.
pub fn gt_lattice(lambda: &Partition, n: usize) -> Result<(ColoredDiagram, Vec<Tableau>)> {
    if lambda.len() > n {
        return Err(Error::InvalidPartition(format!("{lambda} does not fit in {n} rows")));
    }
    let tabs = enumerate_ssyt(&SkewShape::straight(lambda.clone()), n as u32);
    let index: HashMap<&Tableau, usize> = tabs.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let height: Vec<usize> = tabs.iter().map(|t| t.entries().map(|e| n - e as usize).sum()).collect();
    let low = height.iter().copied().min().unwrap_or(0);
    let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (k, t) in tabs.iter().enumerate() {
        for (r, row) in t.rows().iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v < 2 {
                    continue;
                }
                let mut rows = t.rows().to_vec();
                rows[r][c] = v - 1;
                if let Ok(t2) = Tableau::from_rows(rows) {
                    edges.insert((k, index[&t2]), v as usize - 1);
                }
            }
        }
    }
    let poset = RankedPoset::new(
        tabs.iter().map(ToString::to_string).collect(),
        height.iter().map(|h| h - low).collect(),
        edges.keys().copied().collect(),
    )?;
    let colors = poset.covers().iter().map(|e| edges[e]).collect();
    Ok((ColoredDiagram::new(poset, colors, None)?, tabs))
}

/// Weight vectors `(c_i − c_{i+1})_i` of the monomials of `s_λ(x_1..x_n)`,
/// with multiplicity, sorted.
pub fn schur_weight_multiset(lambda: &Partition, n: usize) -> Vec<Vec<i64>> {
    let s = schur(&SkewShape::straight(lambda.clone()), n);
    let mut out = Vec::new();
    for (e, c) in s.terms() {
        let k: i64 = c.constant_term().try_into().expect("small coefficient");
        let v: Vec<i64> = (0..n - 1).map(|i| e[i] as i64 - e[i + 1] as i64).collect();
        out.extend(std::iter::repeat_n(v, k as usize));
    }
    out.sort();
    out
}

/// The sorted multiset of `(m_1(x), …, m_r(x))` over vertices.
pub fn h_eigenvalue_multiset(d: &ColoredDiagram, colors: usize) -> Result<Vec<Vec<i64>>> {
    let mut m = compute_weights(d, colors)?.m;
    m.sort();
    Ok(m)
}

/// Outcome of [`solve_edge_labels`].
#[derive(Clone, Debug, PartialEq)]
pub enum LabelSolution {
    Solved(Vec<(Q, Q)>),
    Infeasible,
}

/// Upper bound on the number of `d` assignments tried off the spanning tree.
pub const GAUGE_SEARCH_LIMIT: usize = 20_000;

/// Small positive rationals in order of height: 1, 2, 1/2, 3, 1/3, 3/2, 2/3, …
fn gauge_candidates() -> Vec<Q> {
    let mut out = Vec::new();
    for h in 1..=4i64 {
        for num in 1..=h {
            for den in 1..=h {
                if num.max(den) == h && num_integer::gcd(num, den) == 1 {
                    out.push(Q::new(num.into(), den.into()));
                }
            }
        }
    }
    out
}

/// Finds edge labels satisfying the crossing and diamond conditions.
///
/// Rescaling basis vectors multiplies `d` on `x → y` by `s_y / s_x`, so `d = 1`
/// may be imposed on a spanning forest of the diagram without loss. For fixed
/// `d` both conditions are linear in `c`. The solver first tries `d = 1` on
/// every edge; if that is inconsistent it searches small positive rationals
/// for `d` on the remaining edges (at most [`GAUGE_SEARCH_LIMIT`]
/// assignments) and solves for `c` exactly each time.
pub fn solve_edge_labels(d: &ColoredDiagram, cartan: &CartanData) -> Result<LabelSolution> {
    let r = cartan.rank();
    let w = compute_weights(d, r)?;
    let e = d.poset.covers().len();
    let ones = vec![Q::one(); e];
    if let Some(c) = solve_for_c(d, r, &w, &ones) {
        return Ok(LabelSolution::Solved(c.into_iter().zip(ones).collect()));
    }
    let free = non_tree_edges(d);
    let cands = gauge_candidates();
    let mut idx = vec![0usize; free.len()];
    for _ in 0..GAUGE_SEARCH_LIMIT {
        // odometer over candidate indices, skipping the all-ones start
        let Some(k) = idx.iter().position(|&v| v + 1 < cands.len()) else { break };
        idx[k] += 1;
        idx[..k].iter_mut().for_each(|v| *v = 0);
        let mut dv = ones.clone();
        for (&edge, &ci) in free.iter().zip(&idx) {
            dv[edge] = cands[ci].clone();
        }
        if let Some(c) = solve_for_c(d, r, &w, &dv) {
            return Ok(LabelSolution::Solved(c.into_iter().zip(dv).collect()));
        }
    }
    Ok(LabelSolution::Infeasible)
}

/// Edges outside a breadth-first spanning forest of the underlying graph.
fn non_tree_edges(d: &ColoredDiagram) -> Vec<usize> {
    let n = d.poset.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (k, (x, y, _)) in d.edges().enumerate() {
        adj[x].push((y, k));
        adj[y].push((x, k));
    }
    let mut seen = vec![false; n];
    let mut tree = vec![false; d.poset.covers().len()];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(y, k) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    tree[k] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    (0..tree.len()).filter(|&k| !tree[k]).collect()
}

/// Solves crossing and diamond for `c` with `d` fixed.
fn solve_for_c(d: &ColoredDiagram, r: usize, w: &WeightData, dv: &[Q]) -> Option<Vec<Q>> {
    let e = dv.len();
    let mut rows: Vec<(Vec<Q>, Q)> = Vec::new();
    for y in 0..d.poset.len() {
        for i in 1..=r {
            let mut row = vec![Q::zero(); e];
            for (k, (a, b, c)) in d.edges().enumerate() {
                if c == i && b == y {
                    row[k] += &dv[k];
                }
                if c == i && a == y {
                    row[k] -= &dv[k];
                }
            }
            rows.push((row, Q::from_integer(BigInt::from(w.m[y][i - 1]))));
        }
    }
    let label = |k: usize| {
        let mut c = vec![Q::zero(); e + 1];
        c[k] = Q::one();
        let mut dk = vec![Q::zero(); e + 1];
        dk[e] = dv[k].clone();
        (Affine(c), Affine(dk))
    };
    for (_, _, lhs, rhs) in diamond_sums(d, r, label) {
        let mut diff = lhs - rhs;
        diff.0.resize(e + 1, Q::zero());
        let constant = -diff.0[e].clone();
        let row = diff.0[..e].to_vec();
        if row.iter().any(|v| !v.is_zero()) || !constant.is_zero() {
            rows.push((row, constant));
        }
    }
    let mut a = QMatrix::zeros(rows.len(), e);
    let mut b = Vec::with_capacity(rows.len());
    for (k, (row, rhs)) in rows.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            a.set(k, j, v);
        }
        b.push(rhs);
    }
    solve(&a, &b)
}

/// An affine expression `Σ a_k c_k + a_const` with the constant stored last.
/// Products only ever pair a `c` term with the constant `1`.
#[derive(Clone, Debug, PartialEq)]
struct Affine(Vec<Q>);

impl Zero for Affine {
    fn zero() -> Self {
        Affine(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl std::ops::Add for Affine {
    type Output = Affine;
    fn add(self, rhs: Affine) -> Affine {
        let len = self.0.len().max(rhs.0.len());
        Affine(
            (0..len)
                .map(|k| self.0.get(k).cloned().unwrap_or_default() + rhs.0.get(k).cloned().unwrap_or_default())
                .collect(),
        )
    }
}

impl std::ops::Sub for Affine {
    type Output = Affine;
    fn sub(self, rhs: Affine) -> Affine {
        let len = self.0.len().max(rhs.0.len());
        Affine(
            (0..len)
                .map(|k| self.0.get(k).cloned().unwrap_or_default() - rhs.0.get(k).cloned().unwrap_or_default())
                .collect(),
        )
    }
}

impl std::ops::Mul for Affine {
    type Output = Affine;
    fn mul(self, rhs: Affine) -> Affine {
        let constant = |a: &Affine| -> Option<Q> {
            let (last, rest) = a.0.split_last()?;
            rest.iter().all(Zero::is_zero).then(|| last.clone())
        };
        match (constant(&self), constant(&rhs)) {
            (Some(k), _) => Affine(rhs.0.into_iter().map(|v| v * &k).collect()),
            (_, Some(k)) => Affine(self.0.into_iter().map(|v| v * &k).collect()),
            _ => panic!("product of two non-constant label expressions"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::sl2_chain;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn chain_diagram(k: usize) -> ColoredDiagram {
        let (poset, x, y) = sl2_chain(k);
        let labels = poset.covers().iter().map(|&(a, b)| (x.get(b, a).clone(), y.get(a, b).clone())).collect();
        ColoredDiagram::new(poset.clone(), vec![1; poset.covers().len()], Some(labels)).unwrap()
    }

    #[test]
    fn weights_small() {
        let d = chain_diagram(1);
        let w = compute_weights(&d, 1).unwrap();
        assert_eq!(w.m, vec![vec![-1], vec![1]]);
        let w = compute_weights(&chain_diagram(0), 2).unwrap();
        assert_eq!(w.m, vec![vec![0, 0]]);
        let (gt, tabs) = gt_lattice(&p(&[1]), 3).unwrap();
        let w = compute_weights(&gt, 2).unwrap();
        let by_tab: Vec<(String, Vec<i64>)> = tabs.iter().map(ToString::to_string).zip(w.m).collect();
        assert_eq!(by_tab, vec![("1".into(), vec![1, 0]), ("2".into(), vec![-1, 1]), ("3".into(), vec![0, -1])]);
        // the chain runs 3 → 2 → 1
        let edges: Vec<(&str, &str, usize)> =
            gt.edges().map(|(x, y, i)| (gt.poset.labels()[x].as_str(), gt.poset.labels()[y].as_str(), i)).collect();
        assert_eq!(edges, vec![("2", "1", 1), ("3", "2", 2)]);
    }

    #[test]
    fn structure_checks() {
        let cartan = CartanData::type_a(1);
        assert!(check_structure(&chain_diagram(3), &cartan).unwrap().passed());
        let (gt, _) = gt_lattice(&p(&[1]), 3).unwrap();
        assert!(check_structure(&gt, &CartanData::type_a(2)).unwrap().passed());
        let mut bad = gt.clone();
        bad.colors[0] = 3 - bad.colors[0];
        assert!(!check_structure(&bad, &CartanData::type_a(2)).unwrap().passed());
    }

    #[test]
    fn crossing_checks() {
        for k in 0..=5 {
            assert!(check_crossing(&chain_diagram(k), 1).unwrap().passed(), "k={k}");
        }
        let b2 = crate::poset::RankedPoset::boolean(2);
        let ones = vec![(q(1), q(1)); b2.covers().len()];
        // one color: a single component of length 2, so m = (-2, 0, 0, 2) and
        // each middle vertex balances one incoming against one outgoing edge
        let d = ColoredDiagram::new(b2.clone(), vec![1; 4], Some(ones)).unwrap();
        assert!(check_crossing(&d, 1).unwrap().passed());
        assert!(check_diamond(&d, 1).unwrap().passed());
        assert!(representation_holds(&d, &CartanData::type_a(1)).unwrap());
        let twos = vec![(q(2), q(1)); b2.covers().len()];
        let d = ColoredDiagram::new(b2, vec![1; 4], Some(twos)).unwrap();
        let rep = check_crossing(&d, 1).unwrap();
        assert_eq!(rep.failures.len(), 2);
    }

    #[test]
    fn diamond_on_chains() {
        for k in 0..=4 {
            assert!(check_diamond(&chain_diagram(k), 1).unwrap().passed());
        }
    }

    #[test]
    fn chain_generators() {
        let g = build_generators(&chain_diagram(1), &CartanData::type_a(1)).unwrap();
        assert_eq!(g.x[0].nonzeros().count(), 1);
        assert_eq!(g.h[0], QMatrix::diagonal(&[q(-1), q(1)]));
        for k in 0..=4 {
            assert!(representation_holds(&chain_diagram(k), &CartanData::type_a(1)).unwrap());
        }
    }

    #[test]
    fn chain_labels_solve() {
        for k in 1..=5 {
            let d = chain_diagram(k);
            let unl = ColoredDiagram::new(d.poset.clone(), d.colors.clone(), None).unwrap();
            let LabelSolution::Solved(ls) = solve_edge_labels(&unl, &CartanData::type_a(1)).unwrap() else {
                panic!("chain {k} infeasible")
            };
            let cs: Vec<Q> = ls.iter().map(|(c, _)| c.clone()).collect();
            let want: Vec<Q> = (1..=k).map(|j| q((j * (k + 1 - j)) as i64)).collect();
            assert_eq!(cs, want);
        }
    }

    #[test]
    fn gt_lattices() {
        for (lam, n, size) in [(p(&[1]), 2, 2), (p(&[1]), 3, 3), (p(&[2, 1]), 3, 8), (p(&[1, 1]), 3, 3)] {
            let (gt, _) = gt_lattice(&lam, n).unwrap();
            assert_eq!(gt.poset.len(), size);
            let cartan = CartanData::type_a(n - 1);
            assert!(check_structure(&gt, &cartan).unwrap().passed(), "λ={lam}");
            let LabelSolution::Solved(ls) = solve_edge_labels(&gt, &cartan).unwrap() else {
                panic!("λ={lam} infeasible")
            };
            let solved = gt.with_labels(ls).unwrap();
            assert!(check_crossing(&solved, n - 1).unwrap().passed());
            assert!(check_diamond(&solved, n - 1).unwrap().passed());
            assert!(representation_holds(&solved, &cartan).unwrap(), "λ={lam}");
            assert_eq!(h_eigenvalue_multiset(&solved, n - 1).unwrap(), schur_weight_multiset(&lam, n));
        }
        let (gt, _) = gt_lattice(&p(&[1]), 3).unwrap();
        let LabelSolution::Solved(ls) = solve_edge_labels(&gt, &CartanData::type_a(2)).unwrap() else { panic!() };
        assert!(ls.iter().all(|(c, d)| c == &q(1) && d == &q(1)));
    }

    #[test]
    fn unit_gauge_is_not_enough_for_the_adjoint() {
        let (gt, _) = gt_lattice(&p(&[2, 1]), 3).unwrap();
        let w = compute_weights(&gt, 2).unwrap();
        let ones = vec![q(1); gt.poset.covers().len()];
        assert!(solve_for_c(&gt, 2, &w, &ones).is_none());
        assert_eq!(non_tree_edges(&gt).len(), gt.poset.covers().len() + 1 - gt.poset.len());
    }

    #[test]
    fn perturbations_break_the_representation() {
        let (gt, _) = gt_lattice(&p(&[2, 1]), 3).unwrap();
        let cartan = CartanData::type_a(2);
        let LabelSolution::Solved(ls) = solve_edge_labels(&gt, &cartan).unwrap() else { panic!() };
        for k in 0..ls.len() {
            let mut bumped = ls.clone();
            bumped[k].0 += Q::one();
            let d = gt.with_labels(bumped).unwrap();
            let local = check_crossing(&d, 2).unwrap().passed() && check_diamond(&d, 2).unwrap().passed();
            assert!(!local, "edge {k}");
            assert!(!representation_holds(&d, &cartan).unwrap(), "edge {k}");
        }
    }

    #[test]
    fn json_round_trip() {
        let d = chain_diagram(2);
        let s = serde_json::to_string(&d.to_json()).unwrap();
        assert_eq!(ColoredDiagram::from_json_str(&s).unwrap(), d);
    }
}
