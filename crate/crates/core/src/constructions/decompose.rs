use serde::Serialize;

use super::{
    adjoin_z1, adjoin_z2_chain, adjoin_z2_incomparable, boolean_power, direct_product, trivial,
    ConstructionError, USquare,
};
use crate::analysis::{check_conditions, complements_of, is_minimal, least_nonzero, zero_divisors};
use crate::elemset::{Elem, ElemSet};
use crate::graphs::{classify_shape, posemiring_zdgraph, ShapeTag};
use crate::iso::find_isomorphism;
use crate::table::PoSemiringTable;

/// A structural splitting of an instance into smaller ones. `iso` maps each
/// index of [`Decomposition::rebuild`] to the corresponding index of the
/// original instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Decomposition {
    Z1 {
        a1: PoSemiringTable,
        iso: Vec<Elem>,
    },
    Z2Incomparable {
        a1: PoSemiringTable,
        /// Least nonzero element of `a1`.
        a0: Elem,
        iso: Vec<Elem>,
    },
    Z2Chain {
        a1: PoSemiringTable,
        u_square: USquare,
        iso: Vec<Elem>,
    },
    BooleanPeel {
        n: usize,
        a1: PoSemiringTable,
        iso: Vec<Elem>,
    },
    TwoStarSplit {
        s: PoSemiringTable,
        /// Number of leaves on the idempotent centre, `|S| - 2`.
        r: usize,
        iso: Vec<Elem>,
    },
}

impl Decomposition {
    /// The instance assembled from the components.
    pub fn rebuild(&self) -> PoSemiringTable {
        match self {
            Decomposition::Z1 { a1, .. } => adjoin_z1(a1).expect("recorded base is integral"),
            Decomposition::Z2Incomparable { a1, .. } => {
                adjoin_z2_incomparable(a1).expect("recorded base is valid")
            }
            Decomposition::Z2Chain { a1, u_square, .. } => {
                adjoin_z2_chain(a1, *u_square).expect("recorded base is valid")
            }
            Decomposition::BooleanPeel { n, a1, .. } => boolean_times(*n, a1),
            Decomposition::TwoStarSplit { s, .. } => direct_product(&trivial(), s),
        }
    }

    pub fn iso(&self) -> &[Elem] {
        match self {
            Decomposition::Z1 { iso, .. }
            | Decomposition::Z2Incomparable { iso, .. }
            | Decomposition::Z2Chain { iso, .. }
            | Decomposition::BooleanPeel { iso, .. }
            | Decomposition::TwoStarSplit { iso, .. } => iso,
        }
    }
}

fn boolean_times(n: usize, a1: &PoSemiringTable) -> PoSemiringTable {
    if n == 0 {
        a1.clone()
    } else {
        direct_product(&boolean_power(n).expect("peel depth within cap"), a1)
    }
}

fn matched(
    rebuilt: &PoSemiringTable,
    a: &PoSemiringTable,
    what: &str,
) -> Result<Vec<Elem>, ConstructionError> {
    find_isomorphism(rebuilt, a).ok_or_else(|| {
        ConstructionError::Counterexample(format!("{what} rebuild is not isomorphic to the input"))
    })
}

/// One condition of the square-zero characterization, with the first
/// offending tuple when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub id: &'static str,
    pub holds: bool,
    pub witness: Option<Vec<Elem>>,
}

impl ConditionCheck {
    fn new(id: &'static str, witness: Option<Vec<Elem>>) -> Self {
        ConditionCheck {
            id,
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Report for `Z = {c, u}` with `Z^2 = 0`, where no constructor rebuild is
/// available. `c` is the smaller zero divisor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareZeroReport {
    pub c: Elem,
    pub u: Elem,
    pub a1: PoSemiringTable,
    /// New index in `a1` to index in the input.
    pub a1_map: Vec<Elem>,
    pub a1_integral: bool,
    pub c3: bool,
    pub conditions: Vec<ConditionCheck>,
}

impl SquareZeroReport {
    pub fn all_hold(&self) -> bool {
        self.a1_integral && self.c3 && self.conditions.iter().all(|c| c.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum SmallZ {
    Decomposed(Decomposition),
    SquareZero(SquareZeroReport),
}

fn first<I: Iterator<Item = Vec<Elem>>>(mut it: I) -> Option<Vec<Elem>> {
    it.next()
}

fn square_zero_conditions(
    a: &PoSemiringTable,
    c: Elem,
    u: Elem,
    a1: &[Elem],
) -> Vec<ConditionCheck> {
    let n = a.order();
    let one = a.one();
    let a1_star: Vec<Elem> = a1.iter().copied().filter(|&x| x != 0).collect();
    let z = [c, u];
    let cond1 = first(
        z.iter()
            .filter(|&&x| a.add(0, x) != x)
            .map(|&x| vec![0, x])
            .chain((1..n).filter(|&y| a.add(c, y) != y).map(|y| vec![c, y]))
            .chain((a.add(u, one) != one).then(|| vec![u, one]))
            .chain((a.add(u, u) != u).then(|| vec![u, u]))
            .chain(a1_star.iter().flat_map(|&x| {
                a1_star.iter().filter_map(move |&y| {
                    let bad = a.add(u, a.add(x, y)) != a.add(a.add(u, x), y)
                        || a.add(u, a.add(u, x)) != a.add(u, x);
                    bad.then(|| vec![u, x, y])
                })
            })),
    );
    let cond3 = first(
        z.iter()
            .flat_map(|&x| z.iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| a.mul(x, y) != 0)
            .map(|(x, y)| vec![x, y])
            .chain(z.iter().filter(|&&x| a.mul(0, x) != 0).map(|&x| vec![0, x]))
            .chain(
                a1_star
                    .iter()
                    .filter(|&&x| a.mul(c, x) != c)
                    .map(|&x| vec![c, x]),
            )
            .chain(
                a1_star
                    .iter()
                    .filter(|&&x| a.mul(u, x) == 0)
                    .map(|&x| vec![u, x]),
            ),
    );
    let cond4 = first(a1.iter().flat_map(|&x| {
        a1.iter()
            .filter(move |&&y| a.mul(x, u) == u && a.mul(y, u) == u && a.mul(a.mul(x, y), u) != u)
            .map(move |&y| vec![x, y])
    }));
    let cond5 = first(a1.iter().flat_map(|&x| {
        a1.iter()
            .filter(move |&&y| a.leq(y, x) && a.mul(y, u) == u && a.mul(x, u) != u)
            .map(move |&y| vec![x, y])
    }));
    let cond6 = first(
        a1.iter()
            .flat_map(|&x| {
                a1.iter()
                    .filter(move |&&y| a.mul(x, a.add(y, u)) != a.add(a.mul(x, y), a.mul(x, u)))
                    .map(move |&y| vec![x, y])
            })
            .chain(a1.iter().flat_map(|&y| {
                a1.iter()
                    .filter(move |&&w| {
                        a.mul(u, y) == c && a.mul(u, w) == c && a.mul(u, a.add(y, w)) != c
                    })
                    .map(move |&w| vec![y, w])
            })),
    );
    vec![
        ConditionCheck::new("1", cond1),
        ConditionCheck::new("3", cond3),
        ConditionCheck::new("4", cond4),
        ConditionCheck::new("5", cond5),
        ConditionCheck::new("6", cond6),
    ]
}

/// Recognizes instances with one or two zero divisors as extensions of the
/// integral part `A1 = A \ Z(A)`.
///
/// With `|Z| = 1` or `|Z| = 2` and `Z^2 != 0` the result is rebuilt with the
/// matching constructor and matched against the input; with `Z^2 = 0` the
/// defining conditions are evaluated instead.
pub fn recognize_small_z(a: &PoSemiringTable) -> Result<SmallZ, ConstructionError> {
    let n = a.order();
    let z = zero_divisors(a);
    if !(1..=2).contains(&z.len()) {
        return Err(ConstructionError::NotApplicable(format!(
            "|Z(A)| = {}, expected 1 or 2",
            z.len()
        )));
    }
    let members = ElemSet::from_iter_in(n, (0..n).filter(|&x| !z.contains(x)));
    let (a1, a1_map) = a.restrict(&members, a.one()).map_err(|_| {
        ConstructionError::Counterexample("A \\ Z(A) is not closed under the operations".into())
    })?;
    let zs = z.to_vec();
    if zs.len() == 1 {
        let rebuilt = adjoin_z1(&a1)?;
        let iso = matched(&rebuilt, a, "one-point")?;
        return Ok(SmallZ::Decomposed(Decomposition::Z1 { a1, iso }));
    }
    let (mut c, mut u) = (zs[0], zs[1]);
    if a.lt(u, c) {
        std::mem::swap(&mut c, &mut u);
    }
    let square_zero = [(c, c), (c, u), (u, u)]
        .iter()
        .all(|&(x, y)| a.mul(x, y) == 0);
    if square_zero {
        let a1_integral = zero_divisors(&a1).is_empty();
        let conditions = square_zero_conditions(a, c, u, &a1_map);
        return Ok(SmallZ::SquareZero(SquareZeroReport {
            c,
            u,
            a1,
            a1_map,
            a1_integral,
            c3: check_conditions(a).c3(),
            conditions,
        }));
    }
    if !a.leq(c, u) {
        let a0 = least_nonzero(&a1).ok_or(ConstructionError::NoLeastNonzero)?;
        let rebuilt = adjoin_z2_incomparable(&a1)?;
        let iso = matched(&rebuilt, a, "incomparable two-point")?;
        return Ok(SmallZ::Decomposed(Decomposition::Z2Incomparable {
            a1,
            a0,
            iso,
        }));
    }
    let u_square = match a.mul(u, u) {
        x if x == c => USquare::C,
        x if x == u => USquare::U,
        x => {
            return Err(ConstructionError::Counterexample(format!(
                "u^2 = {} lies outside {{c, u}}",
                a.name(x)
            )))
        }
    };
    let rebuilt = adjoin_z2_chain(&a1, u_square)?;
    let iso = matched(&rebuilt, a, "chain two-point")?;
    Ok(SmallZ::Decomposed(Decomposition::Z2Chain {
        a1,
        u_square,
        iso,
    }))
}

/// The sub-po-semiring on `{x : x <= f}` with identity `f`.
pub(crate) fn lower_part(
    a: &PoSemiringTable,
    f: Elem,
) -> Result<PoSemiringTable, ConstructionError> {
    let members = ElemSet::from_iter_in(a.order(), a.elements().filter(|&x| a.leq(x, f)));
    a.restrict(&members, f).map(|(t, _)| t).map_err(|e| {
        ConstructionError::Counterexample(format!(
            "lower part of {} is not a po-semiring: {e}",
            a.name(f)
        ))
    })
}

/// Splits off two-element factors, one idempotent minimal element at a time,
/// until none is left or only `{0, 1}` remains. Requires (C3).
pub fn peel_boolean(a: &PoSemiringTable) -> Result<Decomposition, ConstructionError> {
    if !check_conditions(a).c3() {
        return Err(ConstructionError::NotApplicable(
            "condition (C3) fails".into(),
        ));
    }
    let mut rest = a.clone();
    let mut n = 0;
    while rest.order() > 2 {
        let split = (1..rest.order())
            .filter(|&e| rest.is_idempotent(e) && is_minimal(&rest, e))
            .find_map(|e| complements_of(&rest, e, rest.one()).first().copied());
        let Some(f) = split else { break };
        rest = lower_part(&rest, f)?;
        n += 1;
    }
    let rebuilt = boolean_times(n, &rest);
    let iso = matched(&rebuilt, a, "boolean peel")?;
    Ok(Decomposition::BooleanPeel { n, a1: rest, iso })
}

/// For a two-star graph `K1+K1+K1+D_r`, recovers `A = {0,1} x S` with
/// `|Z(S)| = 1` from the idempotent centre `e` and its complement `f`,
/// taking `S` to be the part below `f`. Requires (C3).
pub fn split_two_star(a: &PoSemiringTable) -> Result<Decomposition, ConstructionError> {
    if !check_conditions(a).c3() {
        return Err(ConstructionError::NotApplicable(
            "condition (C3) fails".into(),
        ));
    }
    let g = posemiring_zdgraph(a);
    let shape = classify_shape(&g);
    let ShapeTag::TwoStar { r: 1, s } = shape.tag else {
        return Err(ConstructionError::NotApplicable(format!(
            "graph is {}, not a two-star K1+K1+K1+D_r",
            shape.tag
        )));
    };
    let centres: Vec<usize> = (0..g.vertex_count())
        .filter(|&i| g.degree(i) >= 2)
        .collect();
    for &ci in &centres {
        let e = g.vertices[ci];
        if !a.is_idempotent(e) {
            continue;
        }
        for f in complements_of(a, e, a.one()) {
            let s_part = lower_part(a, f)?;
            if zero_divisors(&s_part).len() != 1 || g.degree(ci) != s_part.order() - 1 {
                continue;
            }
            let rebuilt = direct_product(&trivial(), &s_part);
            if let Some(iso) = find_isomorphism(&rebuilt, a) {
                let r = s_part.order() - 2;
                if r != s {
                    return Err(ConstructionError::Counterexample(format!(
                        "two-star has r = {s} but |S| - 2 = {r}"
                    )));
                }
                return Ok(Decomposition::TwoStarSplit { s: s_part, r, iso });
            }
        }
    }
    Err(ConstructionError::Counterexample(
        "no idempotent centre splits off a two-element factor".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{chain_lattice, example_2_6, example_3_2, example_4_6, example_4_7};

    #[test]
    fn recognizes_the_three_rebuildable_cases() {
        let SmallZ::Decomposed(d) = recognize_small_z(&example_3_2(2).unwrap()).unwrap() else {
            panic!("expected a rebuild");
        };
        match &d {
            Decomposition::Z1 { a1, .. } => {
                assert!(find_isomorphism(a1, &chain_lattice(2).unwrap()).is_some())
            }
            other => panic!("{other:?}"),
        }
        let sq = boolean_power(2).unwrap();
        let SmallZ::Decomposed(Decomposition::Z2Incomparable { a1, a0, .. }) =
            recognize_small_z(&sq).unwrap()
        else {
            panic!("expected incomparable case");
        };
        assert_eq!((a1.order(), a0), (2, 1));
        let ch = example_4_6(1, USquare::U).unwrap();
        assert!(matches!(
            recognize_small_z(&ch).unwrap(),
            SmallZ::Decomposed(Decomposition::Z2Chain {
                u_square: USquare::U,
                ..
            })
        ));
    }

    #[test]
    fn square_zero_instances_satisfy_the_conditions() {
        for a in [
            example_4_6(2, USquare::Zero).unwrap(),
            example_4_7(4, 2).unwrap(),
        ] {
            let SmallZ::SquareZero(report) = recognize_small_z(&a).unwrap() else {
                panic!("expected a condition report");
            };
            assert!(report.all_hold(), "{report:?}");
            assert_eq!(a.name(report.c), "c");
        }
    }

    #[test]
    fn recognition_needs_one_or_two_zero_divisors() {
        assert!(matches!(
            recognize_small_z(&example_2_6(2).unwrap()),
            Err(ConstructionError::NotApplicable(_))
        ));
    }

    #[test]
    fn peeling() {
        let d = peel_boolean(&boolean_power(3).unwrap()).unwrap();
        let Decomposition::BooleanPeel { n, a1, .. } = &d else {
            unreachable!()
        };
        assert_eq!((*n, a1.order()), (2, 2));
        let ex = example_2_6(2).unwrap();
        let Decomposition::BooleanPeel { n, a1, .. } = peel_boolean(&ex).unwrap() else {
            unreachable!()
        };
        assert_eq!(n, 0);
        assert_eq!(a1, ex);
        let prod = direct_product(&trivial(), &example_3_2(1).unwrap());
        let d = peel_boolean(&prod).unwrap();
        let Decomposition::BooleanPeel { n, a1, .. } = &d else {
            unreachable!()
        };
        assert_eq!(*n, 1);
        assert!(find_isomorphism(a1, &example_3_2(1).unwrap()).is_some());
        assert!(crate::iso::transports(&d.rebuild(), &prod, d.iso()));
    }

    #[test]
    fn two_star_splitting() {
        let ex = example_3_2(2).unwrap();
        let d = split_two_star(&direct_product(&trivial(), &ex)).unwrap();
        let Decomposition::TwoStarSplit { s, r, .. } = &d else {
            unreachable!()
        };
        assert_eq!(*r, 3);
        assert!(find_isomorphism(s, &ex).is_some());
        let nil = adjoin_z1(&trivial()).unwrap();
        let d = split_two_star(&direct_product(&trivial(), &nil)).unwrap();
        let Decomposition::TwoStarSplit { s, r, .. } = &d else {
            unreachable!()
        };
        assert_eq!((*r, s.order()), (1, 3));
        assert!(matches!(
            split_two_star(&boolean_power(2).unwrap()),
            Err(ConstructionError::NotApplicable(_))
        ));
    }
}
