mod common;

use std::sync::OnceLock;

use posr_core::analysis::{analyze_elements, check_conditions};
use posr_core::constructions::direct_product;
use posr_core::enumerate::{canonical_form, enumerate_posemirings, Mode, FAST_CAP};
use posr_core::format::{parse_psr, write_psr};
use posr_core::graphs::{classify_shape, posemiring_zdgraph};
use posr_core::iso::{find_isomorphism, transports};
use posr_core::PoSemiringTable;
use proptest::prelude::*;

fn census() -> &'static [PoSemiringTable] {
    static ALL: OnceLock<Vec<PoSemiringTable>> = OnceLock::new();
    ALL.get_or_init(|| {
        (2..=FAST_CAP)
            .flat_map(|n| enumerate_posemirings(n, Mode::Fast).unwrap().instances)
            .collect()
    })
}

fn member() -> impl Strategy<Value = PoSemiringTable> {
    (0..census().len()).prop_map(|i| census()[i].clone())
}

fn member_with_perm() -> impl Strategy<Value = (PoSemiringTable, Vec<usize>)> {
    member().prop_flat_map(|a| {
        let n = a.order();
        let interior: Vec<usize> = (1..n - 1).collect();
        Just(interior).prop_shuffle().prop_map(move |mid| {
            let mut perm = vec![0];
            perm.extend(mid);
            perm.push(n - 1);
            (a.clone(), perm)
        })
    })
}

fn small_member() -> impl Strategy<Value = PoSemiringTable> {
    member().prop_filter("factor of order at most 4", |a| a.order() <= 4)
}

proptest! {
    #[test]
    fn relabeling_preserves_invariants((a, perm) in member_with_perm()) {
        let b = a.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&a), canonical_form(&b));
        prop_assert!(transports(&a, &b, &perm));
        let iso = find_isomorphism(&a, &b).unwrap();
        prop_assert!(transports(&a, &b, &iso));
        let (ea, eb) = (analyze_elements(&a), analyze_elements(&b));
        prop_assert_eq!(ea.zero_divisors.len(), eb.zero_divisors.len());
        prop_assert_eq!(ea.primes.len(), eb.primes.len());
        prop_assert_eq!(ea.idempotents.len(), eb.idempotents.len());
        let (ca, cb) = (check_conditions(&a), check_conditions(&b));
        prop_assert_eq!((ca.c1(), ca.c2(), ca.c3()), (cb.c1(), cb.c2(), cb.c3()));
        prop_assert_eq!(
            classify_shape(&posemiring_zdgraph(&a)),
            classify_shape(&posemiring_zdgraph(&b))
        );
    }

    #[test]
    fn products_stay_within_the_axioms(a in small_member(), b in small_member()) {
        let p = direct_product(&a, &b);
        prop_assert!(PoSemiringTable::from_raw(&p.to_raw()).is_ok());
        let n = p.order();
        for x in 0..n {
            for y in 0..n {
                let xy = p.mul(x, y);
                prop_assert!(common::leq(&p, xy, x) && common::leq(&p, xy, y));
            }
        }
        let z = common::zero_divisors(&p);
        let za = common::zero_divisors(&a).len();
        let zb = common::zero_divisors(&b).len();
        let (na, nb) = (a.order(), b.order());
        // (x, y) is a zero divisor unless both coordinates are nonzero
        // non-zero-divisors; (0, 0) is excluded.
        prop_assert_eq!(z.len(), na * nb - 1 - (na - 1 - za) * (nb - 1 - zb));
    }

    #[test]
    fn text_format_round_trips(a in member()) {
        let back = PoSemiringTable::from_raw(&parse_psr(&write_psr(&a)).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }
}
