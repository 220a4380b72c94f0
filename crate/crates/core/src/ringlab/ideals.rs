use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use super::{FiniteRing, RingError};
use crate::elemset::{Elem, ElemSet};
use crate::graphs::{
    build_zdgraph, classify_shape, posemiring_zdgraph, GraphShape, ShapeTag, SourceKind, ZdGraph,
};
use crate::table::PoSemiringTable;

/// Default bound on the number of ideals turned into a po-semiring table.
pub const DEFAULT_IDEAL_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Ideal {
    pub members: ElemSet,
    /// A generating set, least indices first, when one was recorded.
    pub generators: Option<Vec<Elem>>,
}

impl Ideal {
    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Display name such as `(4)` or `(2,3)`, from the generators.
    pub fn label(&self, r: &FiniteRing) -> String {
        let gens = self
            .generators
            .clone()
            .unwrap_or_else(|| generators_of(r, &self.members));
        let names: Vec<&str> = gens.iter().map(|&g| r.name(g)).collect();
        format!("({})", names.join(","))
    }
}

/// Additive closure of a set of elements (with zero).
fn additive_closure(r: &FiniteRing, seed: impl IntoIterator<Item = Elem>) -> ElemSet {
    let n = r.order();
    let mut set = ElemSet::empty(n);
    set.insert(0);
    let mut queue: VecDeque<Elem> = VecDeque::new();
    for x in seed {
        if set.insert(x) {
            queue.push_back(x);
        }
    }
    let mut members: Vec<Elem> = set.iter().collect();
    while let Some(x) = queue.pop_front() {
        let snapshot = members.clone();
        for y in snapshot {
            let s = r.add(x, y);
            if set.insert(s) {
                members.push(s);
                queue.push_back(s);
            }
        }
    }
    set
}

fn principal(r: &FiniteRing, a: Elem) -> ElemSet {
    additive_closure(r, (0..r.order()).map(|x| r.mul(x, a)))
}

/// `I + J`.
pub fn ideal_sum(r: &FiniteRing, i: &ElemSet, j: &ElemSet) -> ElemSet {
    let sums: BTreeSet<Elem> = i
        .iter()
        .flat_map(|x| j.iter().map(move |y| r.add(x, y)))
        .collect();
    ElemSet::from_iter_in(r.order(), sums)
}

/// `IJ`: the additive closure of all products `ab` with `a` in `I`, `b` in `J`.
pub fn ideal_product(r: &FiniteRing, i: &ElemSet, j: &ElemSet) -> ElemSet {
    let products: BTreeSet<Elem> = i
        .iter()
        .flat_map(|x| j.iter().map(move |y| r.mul(x, y)))
        .collect();
    additive_closure(r, products)
}

/// Greedy generating set: least-index elements not yet covered.
fn generators_of(r: &FiniteRing, members: &ElemSet) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut covered = ElemSet::from_iter_in(r.order(), [0]);
    for x in members.iter() {
        if !covered.contains(x) {
            gens.push(x);
            covered = ideal_sum(r, &covered, &principal(r, x));
        }
    }
    if gens.is_empty() {
        gens.push(0);
    }
    gens
}

/// Every ideal, sorted by size and then by members.
///
/// Principal ideals are computed directly; the family is then closed under
/// pairwise sums.
pub fn enumerate_ring_ideals(r: &FiniteRing) -> Vec<Ideal> {
    let n = r.order();
    let mut family: Vec<ElemSet> = Vec::new();
    let mut index: HashMap<ElemSet, usize> = HashMap::new();
    for a in 0..n {
        let p = principal(r, a);
        if !index.contains_key(&p) {
            index.insert(p.clone(), family.len());
            family.push(p);
        }
    }
    let mut i = 0;
    while i < family.len() {
        for j in 0..i {
            let s = ideal_sum(r, &family[i], &family[j]);
            if !index.contains_key(&s) {
                index.insert(s.clone(), family.len());
                family.push(s);
            }
        }
        i += 1;
    }
    family.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.lex_cmp(y)));
    family
        .into_iter()
        .map(|members| Ideal {
            generators: Some(generators_of(r, &members)),
            members,
        })
        .collect()
}

/// The ideal po-semiring `I(R)`: ideals under sum and product, zero ideal
/// first and `R` last, with the index-to-ideal mapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSemiring {
    pub table: PoSemiringTable,
    pub ideals: Vec<Ideal>,
}

impl IdealSemiring {
    pub fn index_of(&self, members: &ElemSet) -> Option<Elem> {
        self.ideals.iter().position(|i| &i.members == members)
    }
}

pub fn ideal_semiring(r: &FiniteRing) -> Result<IdealSemiring, RingError> {
    ideal_semiring_with_cap(r, DEFAULT_IDEAL_CAP)
}

pub fn ideal_semiring_with_cap(r: &FiniteRing, cap: usize) -> Result<IdealSemiring, RingError> {
    let ideals = enumerate_ring_ideals(r);
    if ideals.len() > cap {
        return Err(RingError::TooManyIdeals {
            count: ideals.len(),
            cap,
        });
    }
    let lookup: HashMap<&ElemSet, usize> = ideals
        .iter()
        .enumerate()
        .map(|(i, x)| (&x.members, i))
        .collect();
    let m = ideals.len();
    let mut names: Vec<String> = ideals.iter().map(|i| i.label(r)).collect();
    let mut seen = std::collections::HashSet::new();
    for name in names.iter_mut() {
        while !seen.insert(name.clone()) {
            name.push('\'');
        }
    }
    let table = PoSemiringTable::from_fn(
        names,
        |x, y| lookup[&ideal_sum(r, &ideals[x].members, &ideals[y].members)],
        |x, y| lookup[&ideal_product(r, &ideals[x].members, &ideals[y].members)],
    )
    .map_err(|e| RingError::Law {
        law: "ideal-semiring",
        witness: match e {
            crate::error::TableError::Axioms(rep) => rep
                .violations
                .first()
                .map(|v| v.witness_elems().to_vec())
                .unwrap_or_default(),
            _ => vec![m],
        },
    })?;
    Ok(IdealSemiring { table, ideals })
}

/// `AG(R)`: the zero-divisor graph of `I(R)`.
pub fn annihilating_ideal_graph(
    r: &FiniteRing,
) -> Result<(ZdGraph, GraphShape, IdealSemiring), RingError> {
    let sr = ideal_semiring(r)?;
    let g = posemiring_zdgraph(&sr.table);
    let shape = classify_shape(&g);
    Ok((g, shape, sr))
}

/// Zero-divisor graph of the multiplicative semigroup of `R`.
pub fn ring_zdgraph(r: &FiniteRing) -> (ZdGraph, GraphShape) {
    let g = build_zdgraph(r.mul_table(), &[], SourceKind::Ring)
        .expect("ring multiplication is commutative with absorbing zero");
    let shape = classify_shape(&g);
    (g, shape)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Radicals {
    pub nilradical: Ideal,
    pub jacobson: Ideal,
    pub idempotents: ElemSet,
}

fn is_nilpotent(r: &FiniteRing, x: Elem) -> bool {
    let mut p = x;
    for _ in 0..=r.order() {
        if p == 0 {
            return true;
        }
        p = r.mul(p, x);
    }
    false
}

/// Maximal proper ideals by inclusion.
fn maximal_ideals(r: &FiniteRing, ideals: &[Ideal]) -> Vec<ElemSet> {
    let n = r.order();
    let proper: Vec<&Ideal> = ideals.iter().filter(|i| i.len() < n).collect();
    proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| j.len() > i.len() && i.members.is_subset(&j.members))
        })
        .map(|i| i.members.clone())
        .collect()
}

pub fn radicals(r: &FiniteRing) -> Radicals {
    let n = r.order();
    let ideals = enumerate_ring_ideals(r);
    let nil = ElemSet::from_iter_in(n, (0..n).filter(|&x| is_nilpotent(r, x)));
    let jac = maximal_ideals(r, &ideals)
        .into_iter()
        .fold(ElemSet::full(n), |acc, m| acc.intersection(&m));
    let idempotents = ElemSet::from_iter_in(n, (0..n).filter(|&x| r.mul(x, x) == x));
    Radicals {
        nilradical: Ideal {
            generators: Some(generators_of(r, &nil)),
            members: nil,
        },
        jacobson: Ideal {
            generators: Some(generators_of(r, &jac)),
            members: jac,
        },
        idempotents,
    }
}

/// True when the ideal `Re` is a field with identity `e`.
fn corner_is_field(r: &FiniteRing, e: Elem) -> bool {
    let re: Vec<Elem> = principal(r, e).iter().collect();
    re.len() >= 2
        && re
            .iter()
            .filter(|&&x| x != 0)
            .all(|&x| re.iter().any(|&y| r.mul(x, y) == e))
}

/// An idempotent `e` other than 0 and 1 with `Re` and `R(1 - e)` both
/// fields, witnessing `R = F1 x F2`.
pub fn product_of_fields_split(r: &FiniteRing) -> Option<Elem> {
    let one = r.one();
    (1..r.order()).find(|&e| {
        e != one && r.mul(e, e) == e && {
            let f = r.add(one, r.neg(e));
            corner_is_field(r, e) && corner_is_field(r, f)
        }
    })
}

/// The three equivalent descriptions of rings whose annihilating ideal
/// graph is `K2`, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoFieldCriteria {
    pub product_of_two_fields: Option<Elem>,
    pub local: bool,
    pub nontrivial_ideals: usize,
    /// An `alpha` with `J(R) = R alpha`, `alpha^3 = 0` and `alpha^2 != 0`.
    pub cube_zero_generator: Option<Elem>,
    pub ideals_form: bool,
    pub graph_is_k2: bool,
    pub radical_form: bool,
}

impl TwoFieldCriteria {
    pub fn agree(&self) -> bool {
        self.ideals_form == self.graph_is_k2 && self.graph_is_k2 == self.radical_form
    }
}

pub fn two_field_criteria(r: &FiniteRing) -> Result<TwoFieldCriteria, RingError> {
    let ideals = enumerate_ring_ideals(r);
    let local = maximal_ideals(r, &ideals).len() == 1;
    let nontrivial_ideals = ideals.len().saturating_sub(2);
    let split = product_of_fields_split(r);
    let (_, shape, _) = annihilating_ideal_graph(r)?;
    let graph_is_k2 = shape.tag == ShapeTag::Complete { n: 2 };
    let jac = radicals(r).jacobson.members;
    let cube_zero_generator = if local {
        jac.iter().find(|&a| {
            let a2 = r.mul(a, a);
            principal(r, a) == jac && a2 != 0 && r.mul(a2, a) == 0
        })
    } else {
        None
    };
    Ok(TwoFieldCriteria {
        product_of_two_fields: split,
        local,
        nontrivial_ideals,
        cube_zero_generator,
        ideals_form: split.is_some() || (local && nontrivial_ideals == 2),
        graph_is_k2,
        radical_form: split.is_some() || (local && cube_zero_generator.is_some()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringlab::make_ring;

    fn labels(r: &FiniteRing) -> Vec<String> {
        enumerate_ring_ideals(r)
            .iter()
            .map(|i| i.label(r))
            .collect()
    }

    #[test]
    fn ideals_of_z12() {
        let r = make_ring("zn:12").unwrap();
        assert_eq!(labels(&r), ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]);
        assert_eq!(ideal_semiring(&r).unwrap().table.order(), 6);
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(enumerate_ring_ideals(&make_ring("zn:7").unwrap()).len(), 2);
        assert_eq!(
            enumerate_ring_ideals(&make_ring("prod(zn:2,zn:4)").unwrap()).len(),
            6
        );
    }

    #[test]
    fn graphs_of_small_rings() {
        let shape = |s: &str| {
            annihilating_ideal_graph(&make_ring(s).unwrap())
                .unwrap()
                .1
                .tag
        };
        assert_eq!(shape("zn:8"), ShapeTag::Complete { n: 2 });
        assert_eq!(shape("zn:6"), ShapeTag::Complete { n: 2 });
        assert_eq!(shape("zn:12"), ShapeTag::TwoStar { r: 1, s: 1 });
        let zd = |s: &str| ring_zdgraph(&make_ring(s).unwrap()).1.tag;
        assert_eq!(zd("prod(zn:2,zn:4)"), ShapeTag::TwoStar { r: 1, s: 2 });
        assert_eq!(zd("zn:9"), ShapeTag::Complete { n: 2 });
        assert_eq!(zd("zn:5"), ShapeTag::Empty);
        assert_eq!(zd("zpx:2:0:0"), ShapeTag::SingleVertex);
    }

    #[test]
    fn radicals_of_small_rings() {
        let r = make_ring("zn:12").unwrap();
        let rad = radicals(&r);
        assert_eq!(rad.nilradical.members.to_vec(), [0, 6]);
        assert_eq!(rad.jacobson, rad.nilradical);
        let f = radicals(&make_ring("zn:7").unwrap());
        assert_eq!(f.jacobson.members.to_vec(), [0]);
        let d = make_ring("zpx:2:0:0").unwrap();
        let rd = radicals(&d);
        assert_eq!(rd.nilradical.label(&d), "(x)");
        assert_eq!(rd.jacobson.label(&d), "(x)");
    }

    #[test]
    fn two_field_criteria_on_examples() {
        for (spec, positive) in [
            ("zn:6", true),
            ("zn:8", true),
            ("zn:27", true),
            ("prod(zn:2,zn:3)", true),
            ("prod(zpx:2:1:1,zn:2)", true),
            ("zpx:3:0:0", false),
            ("zn:12", false),
            ("zn:4", false),
        ] {
            let c = two_field_criteria(&make_ring(spec).unwrap()).unwrap();
            assert!(c.agree(), "{spec}: {c:?}");
            assert_eq!(c.graph_is_k2, positive, "{spec}");
        }
    }
}
