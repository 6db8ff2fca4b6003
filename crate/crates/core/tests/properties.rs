use combrep_core::alcove::hl_ram_yip;
use combrep_core::crystal::{e_tilde_tableau, f_tilde_tableau};
use combrep_core::poset::{check_sl2_poset, sl2_chain, sl2_character, symmetric_unimodal, tensor_sl2};
use combrep_core::repdiag::{compute_weights, gt_lattice, schur_weight_multiset};
use combrep_core::rsk::{rsk, rsk_inverse, schensted_insert, SupportMatrix};
use combrep_core::{enumerate_ssyt, schur, Partition, SkewShape, Tableau};
use proptest::prelude::*;

fn partition_up_to(max: usize, rows: usize) -> impl Strategy<Value = Partition> {
    let all: Vec<Partition> = (0..=max).flat_map(Partition::all_of_size).filter(|p| p.len() <= rows).collect();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn matrix(max_dim: u32) -> impl Strategy<Value = SupportMatrix> {
    prop::collection::vec(((1..=max_dim, 1..=max_dim), 1u32..=3), 0..=5)
        .prop_map(|cells| SupportMatrix::new(cells.into_iter().collect::<std::collections::BTreeMap<_, _>>()).unwrap())
}

fn ssyt(max: usize, n: u32) -> impl Strategy<Value = Tableau> {
    partition_up_to(max, n as usize).prop_flat_map(move |lam| {
        let all = enumerate_ssyt(&SkewShape::straight(lam), n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn rsk_is_a_bijection_compatible_with_transpose(a in matrix(4)) {
        let (p, q) = rsk(&a);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(p.weight(4), a.col_sums(4));
        prop_assert_eq!(q.weight(4), a.row_sums(4));
        prop_assert_eq!(rsk_inverse(&p, &q).unwrap(), a.clone());
        prop_assert_eq!(rsk(&a.transpose()), (q, p));
    }

    #[test]
    fn insertion_adds_an_outer_corner(t in ssyt(5, 4), x in 1u32..=4) {
        let (t2, cell) = schensted_insert(&t, x).unwrap();
        prop_assert_eq!(t2.size(), t.size() + 1);
        prop_assert!(!t.shape().contains_cell(cell));
        prop_assert!(t2.shape().contains_cell(cell));
    }

    #[test]
    fn conjugation_is_an_involution(lam in partition_up_to(8, 8)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn hall_littlewood_is_symmetric_and_specializes(lam in partition_up_to(4, 3), extra in 0usize..=1) {
        let n = lam.len().max(1) + extra;
        let p = hl_ram_yip(&lam, n).unwrap();
        prop_assert!(p.is_symmetric());
        prop_assert_eq!(p.at_t_zero(), schur(&SkewShape::straight(lam), n));
    }

    #[test]
    fn tableau_crystal_moves_one_letter(t in ssyt(5, 3), i in 1u32..=2) {
        if let Some(f) = f_tilde_tableau(&t, i).unwrap() {
            let (w, wf) = (t.weight(3), f.weight(3));
            prop_assert_eq!(wf[i as usize - 1] + 1, w[i as usize - 1]);
            prop_assert_eq!(wf[i as usize], w[i as usize] + 1);
            prop_assert_eq!(e_tilde_tableau(&f, i).unwrap(), Some(t.clone()));
        }
    }

    #[test]
    fn tensor_products_of_chains_are_sl2(a in 0usize..=3, b in 0usize..=3) {
        let (pa, xa, ya) = sl2_chain(a);
        let (pb, xb, yb) = sl2_chain(b);
        let (p, x, y) = tensor_sl2((&pa, &xa, &ya), (&pb, &xb, &yb));
        prop_assert!(check_sl2_poset(&p, &x, &y).unwrap().passed());
        let ch = sl2_character(&x, &y).unwrap();
        for parity in [0, 1] {
            prop_assert!(symmetric_unimodal(&ch.parity_sequence(parity)));
        }
    }

    #[test]
    fn gt_weights_are_the_schur_weights(lam in partition_up_to(4, 3)) {
        let (gt, _) = gt_lattice(&lam, 3).unwrap();
        let w = compute_weights(&gt, 2).unwrap();
        let mut m = w.m.clone();
        m.sort();
        prop_assert_eq!(m, schur_weight_multiset(&lam, 3));
    }
}
