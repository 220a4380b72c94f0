mod common;

use posr_core::analysis::{analyze_elements, check_conditions};
use posr_core::enumerate::{enumerate_lattices, enumerate_posemirings, Mode, FAST_CAP};
use posr_core::graphs::{clique_number, posemiring_zdgraph};

#[test]
fn lattice_counts_match_brute_force() {
    for n in 2..=6 {
        assert_eq!(
            enumerate_lattices(n).len(),
            common::lattices(n).len(),
            "order {n}"
        );
    }
}

#[test]
fn census_counts_match_brute_force() {
    for n in 2..=5 {
        let census = enumerate_posemirings(n, Mode::Fast).unwrap();
        assert_eq!(census.count_up_to_iso, common::census_count(n), "order {n}");
    }
}

#[test]
fn element_classes_match_definitions() {
    for n in 2..=FAST_CAP {
        for a in enumerate_posemirings(n, Mode::Fast).unwrap().instances {
            let e = analyze_elements(&a);
            assert_eq!(e.zero_divisors.to_vec(), common::zero_divisors(&a));
            assert_eq!(e.primes.to_vec(), common::primes(&a));
            assert_eq!(e.maximals.to_vec(), common::maximals(&a));
            assert_eq!(e.minimals.to_vec(), common::minimals(&a));
            assert_eq!(check_conditions(&a).c2(), common::condition_c2(&a));
            assert_eq!(
                clique_number(&posemiring_zdgraph(&a)),
                common::clique_number(&a)
            );
        }
    }
}
