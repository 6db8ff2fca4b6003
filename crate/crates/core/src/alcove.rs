//! Type A alcove model for Hall–Littlewood polynomials `P_λ(x_1..x_n; t)`:
//! λ-chains, admissible pairs, the Ram–Yip sum, the filling and column-sorting
//! maps, and the two compressions onto fillings and onto SSYT.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::perm::{Permutation, Transposition};
use crate::poly::{MultiPoly, PolyT};
use crate::tableau::{enumerate_ssyt, Filling, Tableau};

/// The sequence `Γ_λ = Γ_{λ'_1} Γ_{λ'_2} …` where
/// `Γ_k = Γ_{k,k} … Γ_{k,1}` and `Γ_{k,i} = ((i,k+1), …, (i,n))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaChain {
    n: usize,
    blocks: Vec<Vec<Transposition>>,
}

impl LambdaChain {
    pub fn new(lambda: &Partition, n: usize) -> Result<Self> {
        check_fits(lambda, n)?;
        let blocks = lambda
            .conjugate()
            .parts()
            .iter()
            .map(|&k| (1..=k).rev().flat_map(|i| (k + 1..=n).map(move |j| Transposition(i, j))).collect())
            .collect();
        Ok(LambdaChain { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<Transposition>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(block index, transposition)` for every chain position.
    pub fn positions(&self) -> Vec<(usize, Transposition)> {
        self.blocks.iter().enumerate().flat_map(|(b, ts)| ts.iter().map(move |&t| (b, t))).collect()
    }

    /// Parses a subword written block by block, e.g. `(1,3) | (1,4)`, into chain
    /// positions. Trailing blocks may be omitted.
    pub fn parse_subword(&self, s: &str) -> Result<Vec<usize>> {
        let parts: Vec<&str> = if s.trim().is_empty() { Vec::new() } else { s.split('|').collect() };
        if parts.len() > self.blocks.len() {
            return Err(Error::Parse(format!("{} blocks given, chain has {}", parts.len(), self.blocks.len())));
        }
        let mut out = Vec::new();
        let mut offset = 0;
        for (b, block) in self.blocks.iter().enumerate() {
            if let Some(part) = parts.get(b) {
                let mut from = 0;
                for tok in part.split(')').map(str::trim).filter(|t| !t.is_empty()) {
                    let t: Transposition = format!("{tok})").parse()?;
                    let k = block[from..]
                        .iter()
                        .position(|&x| x == t)
                        .ok_or_else(|| Error::Parse(format!("{t} is not a subword letter of block {}", b + 1)))?;
                    out.push(offset + from + k);
                    from += k + 1;
                }
            }
            offset += block.len();
        }
        Ok(out)
    }
}

/// Blocks separated by `|`, e.g. `(2,3) (2,4) (1,3) (1,4) | (1,2) (1,3) (1,4)`.
impl fmt::Display for LambdaChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> =
            self.blocks.iter().map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", blocks.join(" | "))
    }
}

fn check_fits(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::InvalidPartition(format!("{lambda} has more than {n} parts")));
    }
    Ok(())
}

/// `w` lies in `S_n^λ` when `w(i) < w(i+1)` whenever `λ_i = λ_{i+1}` (λ padded to n).
pub fn in_parabolic_quotient(w: &Permutation, lambda: &Partition) -> bool {
    let lam = lambda.padded(w.n());
    (1..w.n()).all(|i| lam[i - 1] != lam[i] || w.apply(i) < w.apply(i + 1))
}

/// A pair `(w, T)` with `T` stored as increasing chain positions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissiblePair {
    pub w: Permutation,
    pub positions: Vec<usize>,
}

impl AdmissiblePair {
    pub fn mask(&self) -> u128 {
        self.positions.iter().map(|&p| 1u128 << p).sum()
    }

    /// The chain `w, w t_1, w t_1 t_2, …`.
    pub fn walk(&self, chain: &LambdaChain) -> Vec<Permutation> {
        let ts = chain.positions();
        let mut cur = self.w.clone();
        let mut out = vec![cur.clone()];
        for &p in &self.positions {
            cur = cur.apply_transposition(ts[p].1).expect("chain letters lie in S_n");
            out.push(cur.clone());
        }
        out
    }

    pub fn end(&self, chain: &LambdaChain) -> Permutation {
        self.walk(chain).pop().unwrap()
    }

    /// `π_j = w T_1 … T_j` for each block `j`.
    pub fn pis(&self, chain: &LambdaChain) -> Vec<Permutation> {
        let ts = chain.positions();
        let mut cur = self.w.clone();
        let mut next = self.positions.iter().peekable();
        let mut out = Vec::new();
        for b in 0..chain.blocks.len() {
            while let Some(&&p) = next.peek() {
                if ts[p].0 != b {
                    break;
                }
                cur = cur.apply_transposition(ts[p].1).expect("chain letters lie in S_n");
                next.next();
            }
            out.push(cur.clone());
        }
        out
    }

    /// `T` written block by block, e.g. `(1,3) | (1,4)`.
    pub fn subword_string(&self, chain: &LambdaChain) -> String {
        let ts = chain.positions();
        let blocks: Vec<String> = (0..chain.blocks.len())
            .map(|b| {
                self.positions
                    .iter()
                    .filter(|&&p| ts[p].0 == b)
                    .map(|&p| ts[p].1.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        blocks.join(" | ")
    }
}

/// Whether the walk increases in Bruhat order at every step and ends in `S_n^λ`.
pub fn is_admissible(chain: &LambdaChain, lambda: &Partition, pair: &AdmissiblePair) -> bool {
    let ts = chain.positions();
    if pair.w.n() != chain.n
        || pair.positions.windows(2).any(|p| p[0] >= p[1])
        || pair.positions.iter().any(|&p| p >= ts.len())
    {
        return false;
    }
    let mut cur = pair.w.clone();
    for &p in &pair.positions {
        let t = ts[p].1;
        if !cur.bruhat_increases(t) {
            return false;
        }
        cur = cur.apply_transposition(t).unwrap();
    }
    in_parabolic_quotient(&cur, lambda)
}

/// All admissible pairs, ordered by `w` (lexicographic) and then by the bit
/// mask of `T`. The search is depth-first with Bruhat pruning; membership of
/// `wT` in `S_n^λ` is checked at the leaves.
pub fn enumerate_admissible(lambda: &Partition, n: usize) -> Result<(LambdaChain, Vec<AdmissiblePair>)> {
    let chain = LambdaChain::new(lambda, n)?;
    let ts: Vec<Transposition> = chain.positions().into_iter().map(|(_, t)| t).collect();
    assert!(ts.len() <= 128, "chain too long for position masks");
    let per_w: Vec<Vec<AdmissiblePair>> = Permutation::all(n)
        .into_par_iter()
        .map(|w| {
            let mut found = Vec::new();
            let mut stack = Vec::new();
            search(&ts, lambda, 0, &w, &mut stack, &mut found);
            let mut pairs: Vec<AdmissiblePair> =
                found.into_iter().map(|positions| AdmissiblePair { w: w.clone(), positions }).collect();
            pairs.sort_by_key(AdmissiblePair::mask);
            pairs
        })
        .collect();
    Ok((chain, per_w.into_iter().flatten().collect()))
}

fn search(
    ts: &[Transposition],
    lambda: &Partition,
    from: usize,
    cur: &Permutation,
    stack: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if in_parabolic_quotient(cur, lambda) {
        found.push(stack.clone());
    }
    for p in from..ts.len() {
        if cur.bruhat_increases(ts[p]) {
            stack.push(p);
            search(ts, lambda, p + 1, &cur.apply_transposition(ts[p]).unwrap(), stack, found);
            stack.pop();
        }
    }
}

/// The filling `σ(w, T)`: column `j` lists `π_j(1), …, π_j(λ'_j)`.
pub fn filling_of(chain: &LambdaChain, lambda: &Partition, pair: &AdmissiblePair) -> Filling {
    let heights = lambda.conjugate();
    let cols: Vec<Vec<u32>> = pair
        .pis(chain)
        .iter()
        .zip(heights.parts())
        .map(|(pi, &h)| (1..=h).map(|r| pi.apply(r) as u32).collect())
        .collect();
    Filling::from_columns(&cols).expect("columns of a partition shape")
}

/// `x^σ` as an exponent vector.
pub fn monomial_of(rows: &[Vec<u32>], n: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    for &v in rows.iter().flatten() {
        e[v as usize - 1] += 1;
    }
    e
}

/// `t^{(ℓ(w) + ℓ(wT) − |T|)/2} (1 − t)^{|T|}`. Panics if the exponent is not an
/// integer, which cannot happen for an admissible pair.
pub fn ram_yip_weight(chain: &LambdaChain, pair: &AdmissiblePair) -> PolyT {
    let k = pair.positions.len();
    let total = pair.w.length() + pair.end(chain).length();
    assert!(total >= k && (total - k).is_multiple_of(2), "odd exponent for {pair:?}");
    &PolyT::t_pow(((total - k) / 2) as u32) * &PolyT::one_minus_t_pow(1).pow(k as u32)
}

/// The Ram–Yip sum over admissible pairs.
pub fn hl_ram_yip(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    let (chain, pairs) = enumerate_admissible(lambda, n)?;
    let mut out = MultiPoly::zero(n);
    for pair in &pairs {
        let sigma = filling_of(&chain, lambda, pair);
        out.add_term(monomial_of(sigma.rows(), n), &ram_yip_weight(&chain, pair));
    }
    Ok(out)
}

/// Rows weakly increase; no equal entries in attacking boxes (same column, or
/// adjacent columns with the right box strictly lower); the first column is
/// strictly increasing along each run of equal parts.
pub fn is_hl_filling(sigma: &Filling, n: usize) -> bool {
    let rows = sigma.rows();
    let lam = sigma.shape();
    if rows.iter().flatten().any(|&v| v == 0 || v as usize > n) {
        return false;
    }
    if rows.iter().any(|r| r.windows(2).any(|p| p[0] > p[1])) {
        return false;
    }
    let boxes: Vec<(usize, usize, u32)> =
        rows.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v))).collect();
    for &(r1, c1, v1) in &boxes {
        for &(r2, c2, v2) in &boxes {
            let attacking = (c1 == c2 && r1 != r2) || (c2 == c1 + 1 && r2 > r1);
            if attacking && v1 == v2 {
                return false;
            }
        }
    }
    (1..lam.len()).all(|r| lam.part(r) != lam.part(r - 1) || rows[r - 1][0] < rows[r][0])
}

/// All fillings satisfying [`is_hl_filling`], filled column by column.
pub fn enumerate_hl_fillings(lambda: &Partition, n: usize) -> Vec<Filling> {
    let cols = lambda.conjugate();
    let cells: Vec<(usize, usize)> =
        cols.parts().iter().enumerate().flat_map(|(c, &h)| (0..h).map(move |r| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = (0..lambda.len()).map(|r| vec![0; lambda.part(r)]).collect();
    let mut out = Vec::new();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        n: u32,
        grid: &mut Vec<Vec<u32>>,
        out: &mut Vec<Filling>,
    ) {
        let Some(&(r, c)) = cells.get(k) else {
            out.push(Filling::new(grid.clone()).unwrap());
            return;
        };
        let lo = if c > 0 { grid[r][c - 1] } else { 1 };
        for v in lo..=n {
            let same_col = (0..r).any(|r2| grid[r2][c] == v);
            let attack_left = c > 0 && (0..r).any(|r2| grid[r2][c - 1] == v);
            let first_col = c == 0 && r > 0 && lambda.part(r) == lambda.part(r - 1) && grid[r - 1][0] >= v;
            if same_col || attack_left || first_col {
                continue;
            }
            grid[r][c] = v;
            go(k + 1, cells, lambda, n, grid, out);
        }
        grid[r][c] = 0;
    }
    go(0, &cells, lambda, n as u32, &mut grid, &mut out);
    out.sort();
    out
}

fn require_distinct_parts(lambda: &Partition) -> Result<()> {
    if !lambda.has_distinct_parts() {
        return Err(Error::InvalidPartition(format!("{lambda} has repeated parts; compression needs distinct parts")));
    }
    Ok(())
}

/// Ram–Yip terms grouped by `σ(w, T)`. Checks that every group sums to
/// `t^a (1 − t)^b` and that the groups are indexed by exactly the fillings of
/// [`enumerate_hl_fillings`].
pub fn aggregate_by_filling(lambda: &Partition, n: usize) -> Result<BTreeMap<Filling, PolyT>> {
    require_distinct_parts(lambda)?;
    let (chain, pairs) = enumerate_admissible(lambda, n)?;
    let mut groups: BTreeMap<Filling, PolyT> = BTreeMap::new();
    for pair in &pairs {
        *groups.entry(filling_of(&chain, lambda, pair)).or_insert_with(PolyT::zero) += &ram_yip_weight(&chain, pair);
    }
    for (sigma, c) in &groups {
        if c.as_t_power_one_minus_t().is_none() {
            return Err(Error::Invariant(format!("aggregate over {sigma} is {c}, not of the form t^a(1-t)^b")));
        }
    }
    let keys: Vec<&Filling> = groups.keys().collect();
    let expected = enumerate_hl_fillings(lambda, n);
    if keys != expected.iter().collect::<Vec<_>>() {
        return Err(Error::Invariant(format!(
            "image of the filling map has {} fillings, expected {}",
            keys.len(),
            expected.len()
        )));
    }
    Ok(groups)
}

/// `Σ_σ t^a (1 − t)^b x^σ` with `(a, b)` read off the aggregates.
pub fn hl_from_fillings(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    let groups = aggregate_by_filling(lambda, n)?;
    let mut out = MultiPoly::zero(n);
    for (sigma, c) in &groups {
        let (a, b) = c.as_t_power_one_minus_t().expect("checked by aggregate_by_filling");
        let coeff = &PolyT::t_pow(a) * &PolyT::one_minus_t_pow(1).pow(b);
        out.add_term(monomial_of(sigma.rows(), n), &coeff);
    }
    Ok(out)
}

/// Which multiplicity enters the factor `1 − t^{m_j}` of `φ_{λ/μ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripFactor {
    /// `m_j` of the larger partition (the classical convention).
    Outer,
    /// `m_j` of the smaller partition, as the formula is sometimes printed.
    Inner,
}

/// `φ_{λ/μ}(t) = Π_{j∈I} (1 − t^{m_j})` over `I = {j : θ'_j > θ'_{j+1}}`,
/// `θ = λ/μ`.
pub fn strip_factor(lambda: &Partition, mu: &Partition, conv: StripFactor) -> PolyT {
    let (lc, mc) = (lambda.conjugate(), mu.conjugate());
    let theta = |j: usize| lc.part(j) - mc.part(j);
    let mult = |p: &Partition, j: usize| p.conjugate().part(j) - p.conjugate().part(j + 1);
    let mut out = PolyT::one();
    for j in 0..lc.len() {
        if theta(j) > theta(j + 1) {
            let m = match conv {
                StripFactor::Outer => mult(lambda, j),
                StripFactor::Inner => mult(mu, j),
            };
            out = &out * &PolyT::one_minus_t_pow(m as u32);
        }
    }
    out
}

/// `b_λ(t) = Π_i φ_{m_i(λ)}(t)`.
pub fn b_lambda(lambda: &Partition) -> PolyT {
    let c = lambda.conjugate();
    (0..c.len()).fold(PolyT::one(), |acc, j| &acc * &PolyT::phi((c.part(j) - c.part(j + 1)) as u32))
}

/// `φ_σ(t) / b_λ(t)` for an SSYT `σ` with entries at most `n`, read along the
/// chain of shapes `λ^(0) ⊆ … ⊆ λ^(n)`. Fails if the quotient is not a polynomial.
pub fn tableau_coefficient(sigma: &Tableau, n: usize, conv: StripFactor) -> Result<PolyT> {
    if !sigma.shape().is_straight() {
        return Err(Error::ShapeMismatch("straight shape expected".into()));
    }
    let lambda = sigma.shape().outer();
    let shape_upto = |i: u32| {
        Partition::new(sigma.rows().iter().map(|r| r.iter().filter(|&&v| v <= i).count()).filter(|&k| k > 0).collect())
            .expect("entries ≤ i form a partition")
    };
    let mut phi = PolyT::one();
    for i in 1..=n as u32 {
        phi = &phi * &strip_factor(&shape_upto(i), &shape_upto(i - 1), conv);
    }
    phi.div_exact(&b_lambda(lambda))
        .ok_or_else(|| Error::Invariant(format!("φ_σ = {phi} is not divisible by b_λ for σ = {sigma}")))
}

pub fn hl_tableau_formula_with(lambda: &Partition, n: usize, conv: StripFactor) -> Result<MultiPoly> {
    check_fits(lambda, n)?;
    let mut out = MultiPoly::zero(n);
    for sigma in enumerate_ssyt(&SkewShape::straight(lambda.clone()), n as u32) {
        out.add_term(monomial_of(sigma.rows(), n), &tableau_coefficient(&sigma, n, conv)?);
    }
    Ok(out)
}

/// The SSYT formula for `P_λ` with the classical strip factors.
pub fn hl_tableau_formula(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    hl_tableau_formula_with(lambda, n, StripFactor::Outer)
}

/// Sorts every column increasingly; fails if the result is not semistandard.
pub fn sort_columns(sigma: &Filling) -> Result<Tableau> {
    let cols: Vec<Vec<u32>> = (0..sigma.shape().part(0))
        .map(|j| {
            let mut c = sigma.column(j);
            c.sort_unstable();
            c
        })
        .collect();
    Filling::from_columns(&cols)?.to_tableau()
}

/// Per-SSYT comparison of the grouped Ram–Yip sum with the tableau coefficient.
#[derive(Clone, Debug)]
pub struct CompressionEntry {
    pub tableau: Tableau,
    pub aggregate: PolyT,
    pub expected: PolyT,
}

impl CompressionEntry {
    pub fn passed(&self) -> bool {
        self.aggregate == self.expected
    }
}

#[derive(Clone, Debug)]
pub struct CompressionReport {
    pub entries: Vec<CompressionEntry>,
}

impl CompressionReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(CompressionEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CompressionEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }
}

/// Groups Ram–Yip terms by the column-sorted filling and compares each group
/// with `φ_σ / b_λ`. Every SSYT appears, with aggregate zero if it is not hit.
pub fn verify_compression(lambda: &Partition, n: usize) -> Result<CompressionReport> {
    require_distinct_parts(lambda)?;
    let (chain, pairs) = enumerate_admissible(lambda, n)?;
    let mut groups: BTreeMap<Tableau, PolyT> = BTreeMap::new();
    for pair in &pairs {
        let sorted = sort_columns(&filling_of(&chain, lambda, pair))
            .map_err(|e| Error::Invariant(format!("column sorting left SSYT: {e}")))?;
        *groups.entry(sorted).or_insert_with(PolyT::zero) += &ram_yip_weight(&chain, pair);
    }
    let mut entries = Vec::new();
    for sigma in enumerate_ssyt(&SkewShape::straight(lambda.clone()), n as u32) {
        let aggregate = groups.remove(&sigma).unwrap_or_else(PolyT::zero);
        let expected = tableau_coefficient(&sigma, n, StripFactor::Outer)?;
        entries.push(CompressionEntry { tableau: sigma, aggregate, expected });
    }
    if let Some((t, _)) = groups.into_iter().next() {
        return Err(Error::Invariant(format!("column sorting produced {t}, which is not an SSYT of shape {lambda}")));
    }
    Ok(CompressionReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::schur;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn chains() {
        assert_eq!(
            LambdaChain::new(&p(&[2, 1]), 4).unwrap().to_string(),
            "(2,3) (2,4) (1,3) (1,4) | (1,2) (1,3) (1,4)"
        );
        assert!(LambdaChain::new(&Partition::empty(), 3).unwrap().is_empty());
        assert_eq!(LambdaChain::new(&p(&[1]), 2).unwrap().to_string(), "(1,2)");
        assert!(LambdaChain::new(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn worked_pair() {
        let lam = p(&[2, 1]);
        let chain = LambdaChain::new(&lam, 4).unwrap();
        let positions = chain.parse_subword("(1,3) | (1,4)").unwrap();
        assert_eq!(positions, vec![2, 6]);
        let pair = AdmissiblePair { w: Permutation::identity(4), positions };
        assert!(is_admissible(&chain, &lam, &pair));
        assert_eq!(pair.walk(&chain), vec![perm("1234"), perm("3214"), perm("4213")]);
        assert_eq!(pair.subword_string(&chain), "(1,3) | (1,4)");
        let sigma = filling_of(&chain, &lam, &pair);
        assert_eq!(sigma.to_string(), "3 4 / 2");
        assert_eq!(MultiPoly::monomial(monomial_of(sigma.rows(), 4), PolyT::one()).to_string(), "x2*x3*x4");
        assert_eq!(sort_columns(&sigma).unwrap().to_string(), "2 4 / 3");
        assert!(chain.parse_subword("(1,4) (1,3)").is_err());
    }

    #[test]
    fn smallest_case() {
        let (chain, pairs) = enumerate_admissible(&p(&[1]), 2).unwrap();
        let shown: Vec<(String, String)> = pairs.iter().map(|q| (q.w.to_string(), q.subword_string(&chain))).collect();
        assert_eq!(shown, vec![("12".into(), "".into()), ("12".into(), "(1,2)".into()), ("21".into(), "".into())]);
        assert_eq!(filling_of(&chain, &p(&[1]), &pairs[1]).to_string(), "2");
        assert_eq!(hl_ram_yip(&p(&[1]), 2).unwrap().to_string(), "x1 + x2");
        assert_eq!(hl_ram_yip(&Partition::empty(), 3).unwrap().to_string(), "1");
    }

    #[test]
    fn empty_subword_admissible_iff_in_quotient() {
        let lam = p(&[2]);
        let chain = LambdaChain::new(&lam, 3).unwrap();
        for w in Permutation::all(3) {
            let pair = AdmissiblePair { w: w.clone(), positions: vec![] };
            assert_eq!(is_admissible(&chain, &lam, &pair), in_parabolic_quotient(&w, &lam));
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (lam, n) in [(p(&[2, 1]), 3), (p(&[1, 1]), 3), (p(&[2]), 3), (p(&[2, 1]), 4)] {
            let (chain, pairs) = enumerate_admissible(&lam, n).unwrap();
            let len = chain.len();
            let mut brute = Vec::new();
            for w in Permutation::all(n) {
                let mut found: Vec<AdmissiblePair> = (0u32..1 << len)
                    .map(|m| AdmissiblePair {
                        w: w.clone(),
                        positions: (0..len).filter(|&k| m >> k & 1 == 1).collect(),
                    })
                    .filter(|q| is_admissible(&chain, &lam, q))
                    .collect();
                found.sort_by_key(AdmissiblePair::mask);
                brute.extend(found);
            }
            assert_eq!(pairs, brute, "λ={lam} n={n}");
        }
    }

    #[test]
    fn hl_examples() {
        assert_eq!(hl_tableau_formula(&p(&[1]), 2).unwrap().to_string(), "x1 + x2");
        assert_eq!(hl_tableau_formula(&p(&[1, 1]), 2).unwrap().to_string(), "x1*x2");
        // the inner-multiplicity reading kills P_(1)
        assert!(hl_tableau_formula_with(&p(&[1]), 2, StripFactor::Inner).unwrap().is_zero());
        assert_eq!(hl_ram_yip(&p(&[2, 1]), 2).unwrap().to_string(), "x1^2*x2 + x1*x2^2");
    }

    #[test]
    fn hl_fillings() {
        let show = |lam: &[usize], n| -> Vec<String> {
            enumerate_hl_fillings(&p(lam), n).iter().map(ToString::to_string).collect()
        };
        assert_eq!(show(&[1], 2), vec!["1", "2"]);
        assert_eq!(show(&[1, 1], 2), vec!["1 / 2"]);
        for (lam, n) in [(p(&[2, 1]), 3), (p(&[3, 1]), 3), (p(&[2, 2]), 3), (p(&[2, 1, 1]), 3)] {
            let all = enumerate_hl_fillings(&lam, n);
            let mut brute = Vec::new();
            let cells = lam.size();
            for code in 0..(n as u32).pow(cells as u32) {
                let mut c = code;
                let rows: Vec<Vec<u32>> = lam
                    .parts()
                    .iter()
                    .map(|&len| {
                        (0..len)
                            .map(|_| {
                                let v = c % n as u32 + 1;
                                c /= n as u32;
                                v
                            })
                            .collect()
                    })
                    .collect();
                let f = Filling::new(rows).unwrap();
                if is_hl_filling(&f, n) {
                    brute.push(f);
                }
            }
            brute.sort();
            assert_eq!(all, brute, "λ={lam}");
        }
    }

    #[test]
    fn aggregates() {
        let g = aggregate_by_filling(&p(&[1]), 2).unwrap();
        let shown: Vec<(String, String)> = g.iter().map(|(f, c)| (f.to_string(), c.to_string())).collect();
        assert_eq!(shown, vec![("1".into(), "1".into()), ("2".into(), "1".into())]);
        assert!(aggregate_by_filling(&p(&[1, 1]), 2).is_err());
        assert_eq!(hl_from_fillings(&p(&[2, 1]), 3).unwrap(), hl_ram_yip(&p(&[2, 1]), 3).unwrap());
    }

    #[test]
    fn compression_small() {
        assert!(verify_compression(&p(&[1]), 2).unwrap().passed());
        assert!(verify_compression(&p(&[2, 1]), 3).unwrap().passed());
        assert!(verify_compression(&p(&[3, 1]), 3).unwrap().passed());
    }

    #[test]
    fn schur_specialization_and_symmetry() {
        for size in 0..=4 {
            for lam in Partition::all_of_size(size) {
                for n in lam.len().max(1)..=3 {
                    let hl = hl_ram_yip(&lam, n).unwrap();
                    assert!(hl.is_symmetric(), "λ={lam} n={n}");
                    assert_eq!(hl.at_t_zero(), schur(&SkewShape::straight(lam.clone()), n), "λ={lam} n={n}");
                    assert_eq!(hl, hl_tableau_formula(&lam, n).unwrap(), "λ={lam} n={n}");
                }
            }
        }
    }
}
