mod common;

use common::*;
use proptest::prelude::*;
use toeplitz_core::domination::{family_formula_applies, first_deficient};
use toeplitz_core::*;

fn subsets_of_size(m: usize, size: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << m).filter(move |s| s.count_ones() as usize == size)
}

#[test]
fn gamma_1_of_family_is_two() {
    for n in (4..=12).step_by(2) {
        let r = k_domination_number(&build_family(n).unwrap(), 1).unwrap();
        assert_eq!(r.value, 2, "n = {n}");
    }
}

#[test]
fn gamma_k_of_family_is_2k() {
    for n in (6..=12).step_by(2) {
        let g = build_family(n).unwrap();
        for k in 2..n / 2 {
            assert!(family_formula_applies(n, k));
            let r = k_domination_number(&g, k).unwrap();
            assert_eq!(r.value, 2 * k, "n = {n}, k = {k}");
            assert!(is_k_dominating(&g, r.witness, k));
            assert!(is_k_dominating(&g, family_kdom_witness(n, k).unwrap(), k));
        }
    }
}

#[test]
fn no_smaller_k_dominating_set_in_family() {
    for n in [6, 8, 10] {
        let g = build_family(n).unwrap();
        for k in 2..n / 2 {
            assert!(subsets_of_size(2 * n, 2 * k - 1).all(|s| !naive_k_dominating(&g, s, k)));
        }
    }
}

#[test]
fn family_witness_rejects_out_of_range_k() {
    assert_eq!(family_kdom_witness(6, 3), Err(Error::DominationRange { n: 6, k: 3, max: 2 }));
    assert_eq!(family_kdom_witness(4, 2), Err(Error::DominationRange { n: 4, k: 2, max: 1 }));
    assert!(!family_formula_applies(4, 2));
    assert_eq!(family_kdom_witness(8, 3).unwrap(), VertexSet::from_labels(1..=6));
}

#[test]
fn outside_formula_range_is_computed() {
    // k = n/2 lies outside the closed form; the solver still answers exactly
    let g = build_family(6).unwrap();
    assert_eq!(k_domination_number(&g, 3).unwrap().value, brute_k_domination(&g, 3));
}

#[test]
fn agrees_with_brute_force_on_corpus() {
    for g in connected_corpus(7) {
        for k in 1..=3 {
            assert_eq!(k_domination_number(&g, k).unwrap().value, brute_k_domination(&g, k));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dominating_is_monotone_in_the_set(g in arb_connected(10), k in 1usize..4, a in any::<u64>(), b in any::<u64>()) {
        let d = VertexSet::from_bits(a).intersection(g.vertices());
        let sup = d.union(VertexSet::from_bits(b).intersection(g.vertices()));
        if is_k_dominating(&g, d, k) {
            prop_assert!(is_k_dominating(&g, sup, k));
        }
        prop_assert_eq!(is_k_dominating(&g, d, k), naive_k_dominating(&g, d.bits(), k));
        if let Some(v) = first_deficient(&g, d, k) {
            prop_assert!(!d.contains(v));
            prop_assert!(g.neighbors(v).intersection(d).len() < k);
        }
    }

    #[test]
    fn agrees_with_brute_force_up_to_twelve_vertices(g in arb_connected(12), k in 1usize..5) {
        prop_assert_eq!(k_domination_number(&g, k).unwrap().value, brute_k_domination(&g, k));
    }

    #[test]
    fn gamma_is_monotone_in_k(g in arb_connected(9)) {
        let values: Vec<usize> = (1..=3).map(|k| k_domination_number(&g, k).unwrap().value).collect();
        prop_assert!(values.windows(2).all(|w| w[0] <= w[1]));
    }
}
