//! Character values by brute force: expand `p_μ` into monomials and peel off
//! Schur polynomials by leading monomial. Independent of Murnaghan–Nakayama.

use std::collections::BTreeMap;

use combrep_core::poly::{MultiPoly, PolyT};
use combrep_core::{schur, Partition, SkewShape};
use num_bigint::BigInt;
use num_traits::Zero;

fn power_sum(r: usize, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    for i in 0..n {
        let mut e = vec![0u32; n];
        e[i] = r as u32;
        out.add_term(e, &PolyT::one());
    }
    out
}

fn p_mu(mu: &Partition, n: usize) -> MultiPoly {
    mu.parts().iter().fold(MultiPoly::one(n), |acc, &r| &acc * &power_sum(r, n))
}

/// `χ^λ(μ)` for every `λ ⊢ |μ|`, from `p_μ = Σ_λ χ^λ(μ) s_λ` in `|μ|` variables.
pub fn characters_at(mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let n = mu.size().max(1);
    let mut rest = p_mu(mu, n);
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        // the lex-largest monomial of a symmetric polynomial is dominant
        let (lead, coeff) = {
            let terms = rest.terms();
            let (e, c) = terms.iter().max_by(|a, b| a.0.cmp(b.0)).expect("nonzero");
            ((*e).clone(), c.constant_term())
        };
        let lam = Partition::new(lead.iter().map(|&v| v as usize).filter(|&v| v > 0).collect())
            .expect("leading exponent is a partition");
        let s = schur(&SkewShape::straight(lam.clone()), n);
        rest = &rest - &s.scale(&PolyT::constant(coeff.clone()));
        out.insert(lam, coeff);
    }
    for lam in Partition::all_of_size(mu.size()) {
        out.entry(lam).or_insert_with(BigInt::zero);
    }
    out
}
