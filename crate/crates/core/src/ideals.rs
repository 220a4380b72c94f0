//! Ideals of a po-semiring: subsets containing zero, closed under addition
//! and absorbing multiplication by any element.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::elemset::{Elem, ElemSet};
use crate::table::PoSemiringTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealSubset {
    pub members: ElemSet,
    /// Downward closed in the derived order.
    pub hereditary: bool,
    /// Proper, and `xy` in the ideal forces `x` or `y` into it.
    pub prime: bool,
    /// Equal to `ann(u)` for some element `u`.
    pub principal_annihilating: bool,
    /// The `u` with `members = <u>`, when one exists (it is unique).
    pub lower_principal: Option<Elem>,
}

impl IdealSubset {
    /// Computes every flag for a subset already known to be an ideal.
    pub fn with_flags(a: &PoSemiringTable, members: ElemSet) -> Self {
        let n = a.order();
        let hereditary = members
            .iter()
            .all(|u| (0..n).all(|x| !a.leq(x, u) || members.contains(x)));
        let prime = members.len() < n
            && (0..n).all(|x| {
                members.contains(x)
                    || (0..n).all(|y| !members.contains(a.mul(x, y)) || members.contains(y))
            });
        let principal_annihilating = (0..n).any(|u| annihilator_set(a, u) == members);
        let lower_principal = (0..n).find(|&u| lower_set(a, u) == members);
        IdealSubset {
            members,
            hereditary,
            prime,
            principal_annihilating,
            lower_principal,
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Membership test straight from the definition.
pub fn is_ideal(a: &PoSemiringTable, s: &ElemSet) -> bool {
    let n = a.order();
    s.contains(0)
        && s.iter().all(|x| {
            s.iter().all(|y| s.contains(a.add(x, y))) && (0..n).all(|r| s.contains(a.mul(x, r)))
        })
}

fn annihilator_set(a: &PoSemiringTable, u: Elem) -> ElemSet {
    ElemSet::from_iter_in(a.order(), a.elements().filter(|&x| a.mul(x, u) == 0))
}

fn lower_set(a: &PoSemiringTable, u: Elem) -> ElemSet {
    ElemSet::from_iter_in(a.order(), a.elements().filter(|&x| a.leq(x, u)))
}

/// `ann(u) = { x : xu = 0 }`.
pub fn annihilator(a: &PoSemiringTable, u: Elem) -> IdealSubset {
    IdealSubset::with_flags(a, annihilator_set(a, u))
}

/// `<u> = { x : x <= u }`.
pub fn lower_ideal(a: &PoSemiringTable, u: Elem) -> IdealSubset {
    IdealSubset::with_flags(a, lower_set(a, u))
}

/// Smallest ideal containing `seed` (and zero).
pub fn ideal_closure(a: &PoSemiringTable, seed: &ElemSet) -> ElemSet {
    let n = a.order();
    let mut set = seed.clone();
    set.insert(0);
    let mut queue: VecDeque<Elem> = set.iter().collect();
    while let Some(x) = queue.pop_front() {
        for r in 0..n {
            let p = a.mul(x, r);
            if set.insert(p) {
                queue.push_back(p);
            }
        }
        let current: Vec<Elem> = set.iter().collect();
        for y in current {
            let s = a.add(x, y);
            if set.insert(s) {
                queue.push_back(s);
            }
        }
    }
    set
}

/// Every ideal with all flags set, ordered by size and then members.
///
/// Ideals are closed under intersection, so each one is the closure of
/// its members; the search grows closures one element at a time starting
/// from `{0}`.
pub fn enumerate_ideals(a: &PoSemiringTable) -> Vec<IdealSubset> {
    let n = a.order();
    let bottom = ideal_closure(a, &ElemSet::empty(n));
    let mut seen: HashSet<ElemSet> = HashSet::from([bottom.clone()]);
    let mut queue = VecDeque::from([bottom]);
    while let Some(ideal) = queue.pop_front() {
        for x in 0..n {
            if ideal.contains(x) {
                continue;
            }
            let mut seed = ideal.clone();
            seed.insert(x);
            let next = ideal_closure(a, &seed);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut ideals: Vec<ElemSet> = seen.into_iter().collect();
    ideals.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.lex_cmp(y)));
    ideals
        .into_iter()
        .map(|m| IdealSubset::with_flags(a, m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::table_from_rows;

    #[test]
    fn order_two_has_two_ideals() {
        let b = table_from_rows(&["0", "1"], &[&[0, 1], &[1, 1]], &[&[0, 0], &[0, 1]]).unwrap();
        let ideals = enumerate_ideals(&b);
        assert_eq!(ideals.len(), 2);
        assert_eq!(ideals[0].members.to_vec(), vec![0]);
        assert!(ideals[0].prime);
        assert!(!ideals[1].prime);
    }

    #[test]
    fn lower_ideal_extremes() {
        let b = table_from_rows(
            &["0", "c", "1"],
            &[&[0, 1, 2], &[1, 1, 2], &[2, 2, 2]],
            &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 2]],
        )
        .unwrap();
        assert_eq!(lower_ideal(&b, 0).members.to_vec(), vec![0]);
        assert_eq!(lower_ideal(&b, 2).members.to_vec(), vec![0, 1, 2]);
        assert_eq!(lower_ideal(&b, 2).lower_principal, Some(2));
        let ann0 = annihilator(&b, 0);
        assert_eq!(ann0.len(), 3);
        assert!(ann0.hereditary && ann0.principal_annihilating);
    }
}
