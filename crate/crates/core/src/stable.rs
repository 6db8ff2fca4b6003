//! Power-sum expansions, the internal (Kronecker) product, principal
//! specialization, and stable graded multiplicities `G_{αβ}(q) = s_α ∗ s_β (q, q², …)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::partition::{Partition, SkewShape};
use crate::poly::MultiPoly;
use crate::series::TruncSeries;
use crate::tableau::schur;

/// Largest degree accepted by the character computations.
pub const MAX_DEGREE: usize = 12;

/// `z_μ = Π_i m_i! · i^{m_i}`.
pub fn z_of(mu: &Partition) -> BigUint {
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    counts.iter().fold(BigUint::one(), |acc, (&i, &m)| {
        let fact: BigUint = (1..=m).map(BigUint::from).product();
        acc * fact * BigUint::from(i).pow(m)
    })
}

/// A symmetric function of homogeneous degree, `Σ_μ c_μ p_μ` over `μ ⊢ degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumExpansion {
    degree: usize,
    coeffs: BTreeMap<Partition, Q>,
}

impl PowerSumExpansion {
    pub fn zero(degree: usize) -> Self {
        PowerSumExpansion { degree, coeffs: BTreeMap::new() }
    }

    pub fn new(degree: usize, coeffs: impl IntoIterator<Item = (Partition, Q)>) -> Result<Self> {
        let mut out = PowerSumExpansion::zero(degree);
        for (mu, c) in coeffs {
            if mu.size() != degree {
                return Err(Error::ShapeMismatch(format!("p_{mu} in an expansion of degree {degree}")));
            }
            if !c.is_zero() {
                out.coeffs.insert(mu, c);
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> Q {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.coeffs.iter()
    }

    /// Expands into monomials in `n` variables.
    pub fn to_monomials(&self, n: usize) -> BTreeMap<Vec<u32>, Q> {
        let mut out: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
        for (mu, c) in &self.coeffs {
            let mut prod: BTreeMap<Vec<u32>, BigInt> = BTreeMap::from([(vec![0; n], BigInt::one())]);
            for &k in mu.parts() {
                let mut next = BTreeMap::new();
                for (e, v) in &prod {
                    for i in 0..n {
                        let mut e2 = e.clone();
                        e2[i] += k as u32;
                        *next.entry(e2).or_insert_with(BigInt::zero) += v;
                    }
                }
                prod = next;
            }
            for (e, v) in prod {
                *out.entry(e).or_insert_with(Q::zero) += c * Q::from_integer(v);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// `c*p1^2*p2` style, terms in increasing order of `μ`.
impl fmt::Display for PowerSumExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (mu, c)) in self.coeffs.iter().enumerate() {
            let neg = c < &Q::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for &p in mu.parts() {
                *counts.entry(p).or_insert(0) += 1;
            }
            let factors: Vec<String> =
                counts.iter().map(|(&p, &m)| if m == 1 { format!("p{p}") } else { format!("p{p}^{m}") }).collect();
            match (mag.is_one(), factors.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (true, false) => write!(f, "{}", factors.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

type CharKey = (Vec<usize>, Vec<usize>);

/// Memoized irreducible character values `χ^λ(μ)`.
pub struct CharacterTable {
    memo: Mutex<HashMap<CharKey, BigInt>>,
}

impl Default for CharacterTable {
    fn default() -> Self {
        CharacterTable { memo: Mutex::new(HashMap::new()) }
    }
}

impl CharacterTable {
    /// Murnaghan–Nakayama: strip border strips of size `μ_1`, `μ_2`, … in turn.
    /// Strips are read off the beta-set `{λ_i + ℓ − i}`: moving a bead from `b`
    /// to a free `b − r` removes a strip of size `r` whose height is the number of
    /// beads strictly between.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        if lambda.size() != mu.size() {
            return Err(Error::ShapeMismatch(format!("χ^{lambda}({mu}): sizes differ")));
        }
        if lambda.size() > MAX_DEGREE {
            return Err(Error::SizeGuard(format!("degree {} exceeds {MAX_DEGREE}", lambda.size())));
        }
        Ok(self.mn(lambda.parts().to_vec(), mu.parts().to_vec()))
    }

    fn mn(&self, lambda: Vec<usize>, mu: Vec<usize>) -> BigInt {
        if mu.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let l = lambda.len();
        let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
        let r = mu[0];
        let rest = mu[1..].to_vec();
        let mut total = BigInt::zero();
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let mut nb = beta.clone();
            nb[i] = b - r;
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let smaller: Vec<usize> = nb.iter().enumerate().map(|(k, &x)| x + k + 1 - l).filter(|&p| p > 0).collect();
            let v = self.mn(smaller, rest.clone());
            if between % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.lock().unwrap().insert(key, total.clone());
        total
    }
}

/// `s_λ = Σ_μ χ^λ(μ)/z_μ · p_μ`.
pub fn schur_to_powersum(lambda: &Partition, table: &CharacterTable) -> Result<PowerSumExpansion> {
    let k = lambda.size();
    let mut terms = Vec::new();
    for mu in Partition::all_of_size(k) {
        let chi = table.value(lambda, &mu)?;
        terms.push((mu.clone(), Q::new(chi, BigInt::from(z_of(&mu)))));
    }
    PowerSumExpansion::new(k, terms)
}

/// Re-expands the power-sum form of `s_λ` into monomials in `|λ|` variables and
/// compares with the tableau-generated Schur polynomial.
pub fn check_schur_expansion(lambda: &Partition, table: &CharacterTable) -> Result<bool> {
    let n = lambda.size().max(1);
    let ps = schur_to_powersum(lambda, table)?.to_monomials(n);
    let s = schur(&SkewShape::straight(lambda.clone()), n);
    let s_map: BTreeMap<Vec<u32>, Q> =
        s.terms().into_iter().map(|(e, c)| (e.clone(), Q::from_integer(c.constant_term()))).collect();
    Ok(ps == s_map)
}

/// `p_λ ∗ p_μ = δ_{λμ} z_λ p_λ`, extended bilinearly; zero across degrees.
pub fn internal_product(f: &PowerSumExpansion, g: &PowerSumExpansion) -> PowerSumExpansion {
    if f.degree != g.degree {
        return PowerSumExpansion::zero(f.degree);
    }
    let terms = f.coeffs.iter().filter_map(|(mu, a)| {
        let b = g.coeffs.get(mu)?;
        Some((mu.clone(), a * b * Q::from_integer(BigInt::from(z_of(mu)))))
    });
    PowerSumExpansion::new(f.degree, terms).expect("same degree")
}

/// `p_k ↦ q^k + q^{2k} + …`, truncated at degree `d`.
pub fn principal_specialize(f: &PowerSumExpansion, d: usize) -> TruncSeries {
    let mut out = TruncSeries::zero(d);
    for (mu, c) in &f.coeffs {
        let term =
            mu.parts().iter().fold(TruncSeries::one(d), |acc, &k| &acc * &TruncSeries::principal_power_sum(k, d));
        out = &out + &term.scale(c);
    }
    out
}

/// `G_{αβ}(q)` up to `q^d`.
pub fn stable_multiplicity(
    alpha: &Partition,
    beta: &Partition,
    d: usize,
    table: &CharacterTable,
) -> Result<TruncSeries> {
    if alpha.size() != beta.size() {
        return Ok(TruncSeries::zero(d));
    }
    let f = schur_to_powersum(alpha, table)?;
    let g = schur_to_powersum(beta, table)?;
    Ok(principal_specialize(&internal_product(&f, &g), d))
}

/// Writes a power-sum expansion in the Schur basis by solving against the
/// expansions of all `s_λ`, `λ ⊢ degree`.
pub fn powersum_to_schur(f: &PowerSumExpansion, table: &CharacterTable) -> Result<BTreeMap<Partition, Q>> {
    // p_μ = Σ_λ χ^λ(μ) s_λ
    let mut out: BTreeMap<Partition, Q> = BTreeMap::new();
    for (mu, c) in f.terms() {
        for lam in Partition::all_of_size(f.degree) {
            let chi = table.value(&lam, mu)?;
            *out.entry(lam).or_insert_with(Q::zero) += c * Q::from_integer(chi);
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// `s_λ` as a polynomial in `n` variables, for callers that want `MultiPoly`.
pub fn schur_poly(lambda: &Partition, n: usize) -> MultiPoly {
    schur(&SkewShape::straight(lambda.clone()), n)
}

/// Checks that `s_(k) ∗ s_λ = s_λ` for every `λ ⊢ k`.
pub fn trivial_is_identity(k: usize, table: &CharacterTable) -> Result<bool> {
    let triv = schur_to_powersum(&Partition::new(if k == 0 { vec![] } else { vec![k] })?, table)?;
    for lam in Partition::all_of_size(k) {
        let s = schur_to_powersum(&lam, table)?;
        if internal_product(&triv, &s) != s {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q(a: i64, b: i64) -> Q {
        Q::new(a.into(), b.into())
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&p(&[1])), 1u32.into());
        assert_eq!(z_of(&p(&[2])), 2u32.into());
        assert_eq!(z_of(&p(&[1, 1])), 2u32.into());
        assert_eq!(z_of(&p(&[2, 1])), 2u32.into());
        assert_eq!(z_of(&p(&[2, 2, 1, 1, 1])), (2u32 * 4 * 6).into());
    }

    #[test]
    fn small_expansions() {
        let t = CharacterTable::default();
        assert_eq!(schur_to_powersum(&p(&[1]), &t).unwrap().to_string(), "p1");
        assert_eq!(schur_to_powersum(&p(&[2]), &t).unwrap().to_string(), "1/2*p1^2 + 1/2*p2");
        assert_eq!(schur_to_powersum(&p(&[1, 1]), &t).unwrap().to_string(), "1/2*p1^2 - 1/2*p2");
        assert_eq!(schur_to_powersum(&Partition::empty(), &t).unwrap().to_string(), "1");
    }

    #[test]
    fn known_character_values() {
        let t = CharacterTable::default();
        // χ^{(2,1)} on classes (1,1,1), (2,1), (3)
        let vals: Vec<BigInt> =
            [p(&[1, 1, 1]), p(&[2, 1]), p(&[3])].iter().map(|mu| t.value(&p(&[2, 1]), mu).unwrap()).collect();
        assert_eq!(vals, vec![2.into(), 0.into(), BigInt::from(-1)]);
        assert_eq!(t.value(&p(&[3, 2, 1]), &p(&[1; 6])).unwrap(), 16.into());
        assert!(t.value(&p(&[13]), &p(&[13])).is_err());
    }

    #[test]
    fn expansions_match_tableaux() {
        let t = CharacterTable::default();
        for k in 0..=6 {
            for lam in Partition::all_of_size(k) {
                assert!(check_schur_expansion(&lam, &t).unwrap(), "λ={lam}");
            }
        }
    }

    #[test]
    fn internal_product_rules() {
        let t = CharacterTable::default();
        let p1 = PowerSumExpansion::new(1, [(p(&[1]), q(1, 1))]).unwrap();
        assert_eq!(internal_product(&p1, &p1), p1);
        let s1 = schur_to_powersum(&p(&[1]), &t).unwrap();
        let s2 = schur_to_powersum(&p(&[2]), &t).unwrap();
        assert!(internal_product(&s1, &s2).is_zero());
        assert_eq!(internal_product(&s2, &s2), s2);
        for k in 0..=6 {
            assert!(trivial_is_identity(k, &t).unwrap());
        }
    }

    #[test]
    fn specializations() {
        let p1 = PowerSumExpansion::new(1, [(p(&[1]), q(1, 1))]).unwrap();
        assert_eq!(principal_specialize(&p1, 4).to_string(), "q + q^2 + q^3 + q^4 + O(q^5)");
        let p2 = PowerSumExpansion::new(2, [(p(&[2]), q(1, 1))]).unwrap();
        assert_eq!(principal_specialize(&p2, 5).to_string(), "q^2 + q^4 + O(q^6)");
        assert!(principal_specialize(&PowerSumExpansion::zero(3), 5).is_zero());
    }

    #[test]
    fn stable_examples() {
        let t = CharacterTable::default();
        let g = stable_multiplicity(&p(&[1]), &p(&[1]), 6, &t).unwrap();
        assert_eq!(g.to_string(), "q + q^2 + q^3 + q^4 + q^5 + q^6 + O(q^7)");
        assert!(stable_multiplicity(&p(&[1]), &p(&[2]), 5, &t).unwrap().is_zero());
        // sign ⊗ sign is trivial, and h_2(q, q², …) = Σ_{i ≤ j} q^{i+j}
        let g = stable_multiplicity(&p(&[1, 1]), &p(&[1, 1]), 6, &t).unwrap();
        assert_eq!(g.to_string(), "q^2 + q^3 + 2*q^4 + 2*q^5 + 3*q^6 + O(q^7)");
    }

    #[test]
    fn diagonal_multiplicities_are_counts() {
        let t = CharacterTable::default();
        for k in 1..=5 {
            for a in Partition::all_of_size(k) {
                assert!(stable_multiplicity(&a, &a, 10, &t).unwrap().is_nonnegative_integral(), "α={a}");
            }
        }
    }

    #[test]
    fn kronecker_coefficients_are_nonnegative_integers() {
        let t = CharacterTable::default();
        for a in Partition::all_of_size(4) {
            for b in Partition::all_of_size(4) {
                let prod = internal_product(&schur_to_powersum(&a, &t).unwrap(), &schur_to_powersum(&b, &t).unwrap());
                for (_, c) in powersum_to_schur(&prod, &t).unwrap() {
                    assert!(c.is_integer() && c > Q::zero());
                }
            }
        }
    }

    fn partition_of(k: usize) -> impl Strategy<Value = Partition> {
        let all = Partition::all_of_size(k);
        (0..all.len()).prop_map(move |i| all[i].clone())
    }

    proptest! {
        #[test]
        fn internal_product_commutes_and_associates(
            (a, b, c) in (1usize..=5).prop_flat_map(|k| (partition_of(k), partition_of(k), partition_of(k)))
        ) {
            let t = CharacterTable::default();
            let (fa, fb, fc) = (
                schur_to_powersum(&a, &t).unwrap(),
                schur_to_powersum(&b, &t).unwrap(),
                schur_to_powersum(&c, &t).unwrap(),
            );
            prop_assert_eq!(internal_product(&fa, &fb), internal_product(&fb, &fa));
            prop_assert_eq!(
                internal_product(&internal_product(&fa, &fb), &fc),
                internal_product(&fa, &internal_product(&fb, &fc))
            );
        }
    }
}
