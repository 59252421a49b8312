//! Randomized invariants over the crystal structures.

use dcrystal::burge::{kappa_nw, kappa_nw_inv, kappa_se, kappa_se_inv, lambda_of};
use dcrystal::paths::shape_from_paths;
use dcrystal::pbw::{e_full, eps_full, f_full, pairing, phi_full, LusztigDatum, Support};
use dcrystal::tableaux::{
    columns_even, p_tableau, rectify, reverse_insert, tableau_e, tableau_f, Letter,
};
use proptest::prelude::*;

fn upper_datum(n: u8, bound: u32) -> impl Strategy<Value = LusztigDatum> {
    let m = (n as usize) * (n as usize - 1) / 2;
    proptest::collection::vec(0..=bound, m).prop_map(move |vals| {
        let mut c = LusztigDatum::zero(n, Support::JUpper);
        for (k, v) in vals.into_iter().enumerate() {
            c.set_by_index(k, v);
        }
        c
    })
}

fn full_datum(n: u8, bound: u32) -> impl Strategy<Value = LusztigDatum> {
    let len = (n as usize) * (n as usize - 1);
    proptest::collection::vec(0..=bound, len)
        .prop_map(move |vals| LusztigDatum::from_values(n, Support::Full, vals).unwrap())
}

fn word(n: u8, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    proptest::collection::vec(1..=n, 0..=max_len)
        .prop_map(|vals| vals.into_iter().map(Letter).collect())
}

proptest! {
    #[test]
    fn insertion_keeps_knuth_class(w in word(5, 10)) {
        let p = p_tableau(&w);
        p.validate().unwrap();
        prop_assert!(p.is_normal());
        // the reading word of P(w) inserts back to P(w)
        prop_assert_eq!(p_tableau(&p.row_word()), p);
    }

    #[test]
    fn reverse_insertion_prepends_to_the_word(w in word(5, 8), b in (1u8..=5).prop_map(Letter)) {
        // build an anti-normal tableau, reverse-insert, compare Knuth classes
        let v = dcrystal::tableaux::anti_rectify(&p_tableau(&w), 5);
        let (grown, _) = reverse_insert(&v, b, 5);
        grown.validate().unwrap();
        let mut expect = vec![b];
        expect.extend(v.row_word());
        prop_assert_eq!(rectify(&grown), p_tableau(&expect));
    }

    #[test]
    fn reverse_insertion_chain_rotates_the_shape(w in word(5, 10)) {
        // folding the word backwards through reverse insertions lands in the
        // same Knuth class with the rotated shape
        let mut anti = dcrystal::tableaux::Tableau::empty();
        for &x in w.iter().rev() {
            anti = reverse_insert(&anti, x, 5).0;
        }
        let p = p_tableau(&w);
        let mut rotated = p.shape();
        rotated.reverse();
        let mut anti_rows: Vec<usize> = anti.rows().iter().map(Vec::len).collect();
        anti_rows.retain(|&l| l > 0);
        prop_assert_eq!(anti_rows, rotated);
        prop_assert_eq!(rectify(&anti), p);
    }

    #[test]
    fn burge_roundtrips_and_shapes(c in upper_datum(6, 4)) {
        let se = kappa_se(&c);
        prop_assert!(columns_even(&se.shape()));
        prop_assert!(se.shape().len() <= 6);
        prop_assert_eq!(kappa_se_inv(&se, 6).unwrap(), c.clone());
        let nw = kappa_nw(&c);
        prop_assert_eq!(kappa_nw_inv(&nw, 6).unwrap(), c.clone());
        prop_assert_eq!(rectify(&se), nw);
        // the shape computed by insertion matches the path maximization
        prop_assert_eq!(lambda_of(&c), shape_from_paths(&c));
    }

    #[test]
    fn full_operators_invert(c in full_datum(4, 3), i in 1u8..=4) {
        let down = f_full(&c, i);
        prop_assert_eq!(e_full(&down, i), Some(c.clone()));
        if let Some(up) = e_full(&c, i) {
            prop_assert_eq!(f_full(&up, i), c.clone());
        }
        // weight drops by the simple root along a lowering edge
        let mut alpha = vec![0i64; 4];
        dcrystal::roots::Root::simple(i, 4).add_into(&mut alpha, 1);
        let wt_before = c.weight();
        let wt_after = down.weight();
        for k in 0..4 {
            prop_assert_eq!(wt_after[k], wt_before[k] - alpha[k]);
        }
        // string statistics stay consistent
        prop_assert_eq!(phi_full(&c, i) - eps_full(&c, i) as i64, pairing(&c.weight(), i));
    }

    #[test]
    fn tableau_operators_preserve_family(c in upper_datum(5, 2), i in 1u8..=4) {
        let t = kappa_se(&c);
        if let Some(moved) = tableau_f(&t, i) {
            moved.validate().unwrap();
            prop_assert_eq!(moved.shape(), t.shape());
            prop_assert_eq!(tableau_e(&moved, i), Some(t));
        }
    }
}

#[test]
fn rank_six_equivariance_samples() {
    // wider tableaux stress the corner-node signatures; node 0 passes
    // through rectification on the normal side
    use dcrystal::kr;
    use dcrystal::tableaux::{e_0_nw, e_n_se, f_0_nw, f_n_se};
    let n = 6u8;
    let mut rng = dcrystal::verify::XorShift::new(0xfeed);
    for _ in 0..300 {
        let c = dcrystal::verify::random_upper_datum(n, 3, &mut rng);
        let cap = 200u64;
        let t_se = kappa_se(&c);
        // node n on the anti-normal side
        let lowered = kr::f_affine(&c, n, cap).unwrap();
        assert_eq!(kappa_se(&lowered), f_n_se(&t_se, n));
        match (kr::e_affine(&c, n, cap), e_n_se(&t_se, n)) {
            (None, None) => {}
            (Some(cl), Some(tr)) => assert_eq!(kappa_se(&cl), tr),
            _ => panic!("node n raising defined on one side only"),
        }
        // node 0 on the normal side
        let t_nw = kappa_nw(&c);
        let raised = kr::e_affine(&c, 0, cap).unwrap();
        assert_eq!(kappa_nw(&raised), e_0_nw(&t_nw));
        match (kr::f_affine(&c, 0, cap), f_0_nw(&t_nw)) {
            (None, None) => {}
            (Some(cl), Some(tr)) => assert_eq!(kappa_nw(&cl), tr),
            _ => panic!("node 0 lowering defined on one side only"),
        }
        // a classical node on both sides
        for i in 1..n {
            match (
                dcrystal::pbw::f_upper(&c, i),
                dcrystal::tableaux::tableau_f(&t_se, i),
            ) {
                (None, None) => {}
                (Some(cl), Some(tr)) => assert_eq!(kappa_se(&cl), tr),
                _ => panic!("classical node defined on one side only"),
            }
        }
    }
}
