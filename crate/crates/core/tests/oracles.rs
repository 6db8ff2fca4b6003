mod support;

use std::collections::BTreeSet;

use combrep_core::alcove::hl_ram_yip;
use combrep_core::poly::{MultiPoly, PolyT};
use combrep_core::stable::{internal_product, schur_to_powersum, z_of, CharacterTable, PowerSumExpansion};
use combrep_core::{Partition, Q};
use num_bigint::BigInt;
use num_traits::One;
use support::character_oracle::characters_at;

#[test]
fn murnaghan_nakayama_matches_the_monomial_oracle() {
    let table = CharacterTable::default();
    for k in 0..=6 {
        for mu in Partition::all_of_size(k) {
            for (lam, chi) in characters_at(&mu) {
                assert_eq!(table.value(&lam, &mu).unwrap(), chi, "χ^{lam}({mu})");
            }
        }
    }
}

fn oracle_expansion(lam: &Partition) -> PowerSumExpansion {
    let terms = Partition::all_of_size(lam.size()).into_iter().map(|mu| {
        let chi = characters_at(&mu)[lam].clone();
        let z = BigInt::from(z_of(&mu));
        (mu, Q::new(chi, z))
    });
    PowerSumExpansion::new(lam.size(), terms).unwrap()
}

#[test]
fn trivial_character_is_the_identity_under_the_oracle() {
    let table = CharacterTable::default();
    for k in 1..=6 {
        let triv = oracle_expansion(&Partition::new(vec![k]).unwrap());
        for lam in Partition::all_of_size(k) {
            let s = oracle_expansion(&lam);
            assert_eq!(internal_product(&triv, &s), s, "λ={lam}");
            assert_eq!(schur_to_powersum(&lam, &table).unwrap(), s, "λ={lam}");
        }
    }
}

/// `m_λ(x_1..x_n)` from the distinct rearrangements of the padded parts.
fn monomial_symmetric(lam: &Partition, n: usize) -> MultiPoly {
    fn perms(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if rest.is_empty() {
            out.insert(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            cur.push(v);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(k, v);
        }
    }
    let mut seen = BTreeSet::new();
    let mut parts: Vec<u32> = lam.padded(n).into_iter().map(|p| p as u32).collect();
    perms(&mut parts, &mut Vec::new(), &mut seen);
    let mut out = MultiPoly::zero(n);
    for e in seen {
        out.add_term(e, &PolyT::one());
    }
    out
}

fn at_t_one(p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars());
    for (e, c) in p.terms() {
        out.add_term(e.clone(), &PolyT::constant(c.eval(&BigInt::one())));
    }
    out
}

#[test]
fn hall_littlewood_at_t_one_is_monomial_symmetric() {
    for k in 0..=5 {
        for lam in Partition::all_of_size(k) {
            for n in lam.len().max(1)..=4 {
                let p = hl_ram_yip(&lam, n).unwrap();
                assert_eq!(at_t_one(&p), monomial_symmetric(&lam, n), "λ={lam}, n={n}");
            }
        }
    }
}
