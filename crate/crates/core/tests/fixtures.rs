use posr_core::analysis::{analyze_elements, check_conditions, least_nonzero};
use posr_core::constructions::{
    direct_product, example_2_6, example_3_2, example_4_6, example_4_7, trivial, USquare,
};
use posr_core::enumerate::{enumerate_posemirings, Mode};
use posr_core::graphs::{classify_shape, posemiring_zdgraph, ShapeTag};
use posr_core::ringlab::{annihilating_ideal_graph, make_ring, ring_zdgraph};
use posr_core::PoSemiringTable;

fn shape(a: &PoSemiringTable) -> ShapeTag {
    classify_shape(&posemiring_zdgraph(a)).tag
}

fn named(a: &PoSemiringTable, xs: &[&str]) -> Vec<usize> {
    let mut v: Vec<usize> = xs.iter().map(|x| a.index_of(x).unwrap()).collect();
    v.sort();
    v
}

fn b_names(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("b{i}")).collect()
}

#[test]
fn chain_with_annihilated_atom() {
    for k in 1..=3 {
        let a = example_2_6(k).unwrap();
        let e = analyze_elements(&a);
        let bs = b_names(k);
        let mut interior: Vec<&str> = vec!["a"];
        interior.extend(bs.iter().map(String::as_str));
        assert_eq!(e.zero_divisors.to_vec(), named(&a, &interior));
        assert_eq!(e.primes.to_vec(), named(&a, &interior));
        // Finitely many b_i: the top one is a coatom.
        assert_eq!(e.maximals.to_vec(), named(&a, &[bs[k - 1].as_str()]));
        let c = check_conditions(&a);
        assert!(!c.c2() && c.c3());
        let tag = shape(&a);
        assert!(tag.is_star_like(), "{tag}");
        let g = posemiring_zdgraph(&a);
        assert_eq!(g.vertex_count(), k + 1);
        assert_eq!(g.degree(g.position(1).unwrap()), k);
    }
}

#[test]
fn single_zero_divisor_chain() {
    for k in 1..=3 {
        let a = example_3_2(k).unwrap();
        assert_eq!(
            analyze_elements(&a).zero_divisors.to_vec(),
            named(&a, &["a"])
        );
        assert_eq!(shape(&a), ShapeTag::SingleVertex);
        let c = check_conditions(&a);
        assert!(!c.c2() && c.c3());
    }
}

#[test]
fn boolean_times_chain_is_a_two_star() {
    for k in 1..=3 {
        let a2 = example_3_2(k).unwrap();
        let a = direct_product(&trivial(), &a2);
        assert_eq!(
            shape(&a),
            ShapeTag::TwoStar {
                r: 1,
                s: a2.order() - 2
            }
        );
        assert!(check_conditions(&a).c3());
        let e = analyze_elements(&a);
        assert_eq!(e.minimals.len(), 2);
        let one_zero = a.index_of("1×0").unwrap();
        let zero_a = a.index_of("0×a").unwrap();
        assert!(e.minimals.contains(one_zero) && e.minimals.contains(zero_a));
    }
}

#[test]
fn ring_graphs_with_two_stars() {
    let two_star = ShapeTag::TwoStar { r: 1, s: 2 };
    assert_eq!(
        ring_zdgraph(&make_ring("prod(zn:2,zn:4)").unwrap()).1.tag,
        two_star
    );
    assert_eq!(
        ring_zdgraph(&make_ring("prod(zn:2,zpx:2:0:0)").unwrap())
            .1
            .tag,
        two_star
    );
    // Taken alone, Z_2[x]/(x^2) has the single zero divisor x.
    assert_eq!(
        ring_zdgraph(&make_ring("zpx:2:0:0").unwrap()).1.tag,
        ShapeTag::SingleVertex
    );
}

#[test]
fn boolean_times_nil_atom_is_the_small_two_star() {
    let census = enumerate_posemirings(3, Mode::Fast).unwrap().instances;
    let nil = census.iter().find(|a| a.mul(1, 1) == 0).unwrap();
    let a = direct_product(&trivial(), nil);
    assert_eq!(shape(&a), ShapeTag::TwoStar { r: 1, s: 1 });
    let (_, s, _) = annihilating_ideal_graph(&make_ring("zn:12").unwrap()).unwrap();
    assert_eq!(s.tag, ShapeTag::TwoStar { r: 1, s: 1 });
}

#[test]
fn two_and_three_element_census() {
    assert_eq!(
        enumerate_posemirings(2, Mode::Fast)
            .unwrap()
            .count_up_to_iso,
        1
    );
    let three = enumerate_posemirings(3, Mode::Fast).unwrap().instances;
    let mut squares: Vec<usize> = three.iter().map(|a| a.mul(1, 1)).collect();
    squares.sort();
    assert_eq!(squares, vec![0, 1]);
}

#[test]
fn two_zero_divisors_on_a_chain() {
    for k in 1..=3 {
        for (u2, square_zero) in [
            (USquare::Zero, true),
            (USquare::C, false),
            (USquare::U, false),
        ] {
            let a = example_4_6(k, u2).unwrap();
            let z = analyze_elements(&a).zero_divisors;
            assert_eq!(z.to_vec(), named(&a, &["c", "u"]));
            let zz = z.iter().all(|x| z.iter().all(|y| a.mul(x, y) == 0));
            assert_eq!(zz, square_zero, "k={k} {u2:?}");
        }
    }
}

#[test]
fn incomparable_zero_divisor() {
    for k in 2..=3 {
        for n in 2..=k {
            let a = example_4_7(k, n).unwrap();
            let e = analyze_elements(&a);
            let (c, u) = (a.index_of("c").unwrap(), a.index_of("u").unwrap());
            assert_eq!(e.zero_divisors.to_vec(), vec![c, u]);
            assert!([c, u]
                .iter()
                .all(|&x| [c, u].iter().all(|&y| a.mul(x, y) == 0)));
            assert_eq!(least_nonzero(&a), Some(c));
            assert!(check_conditions(&a).c3());
            for i in 1..=k {
                let b = a.index_of(&format!("b{i}")).unwrap();
                let comparable = a.leq(u, b) || a.leq(b, u);
                assert_eq!(comparable, i >= n, "k={k} n={n} i={i}");
            }
            for p in e.primes.iter().filter(|&p| p != c && p != u) {
                assert!(a.lt(u, p));
            }
        }
    }
}
