//! Element-level classification: zero divisors, nilpotency, idempotents,
//! primes, maximal and minimal elements, orthogonal complements and the
//! (C1)/(C2)/(C3) complement conditions.
//!
//! Every classification is an exhaustive scan of the tables. Scans run in
//! increasing index order, so all witnesses are the lexicographically
//! first ones.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::elemset::{Elem, ElemSet};
use crate::error::DomainError;
use crate::table::PoSemiringTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementAnalysis {
    pub zero_divisors: ElemSet,
    /// Nonzero elements only; `None` for elements with no vanishing power.
    pub nilpotency: BTreeMap<Elem, Option<usize>>,
    /// Nonzero idempotents.
    pub idempotents: ElemSet,
    pub primitive_idempotents: ElemSet,
    pub primes: ElemSet,
    pub maximals: ElemSet,
    pub minimals: ElemSet,
}

impl ElementAnalysis {
    pub fn is_nilpotent(&self, x: Elem) -> bool {
        x == 0 || matches!(self.nilpotency.get(&x), Some(Some(_)))
    }

    pub fn is_integral(&self) -> bool {
        self.zero_divisors.is_empty()
    }
}

pub fn analyze_elements(a: &PoSemiringTable) -> ElementAnalysis {
    let n = a.order();
    let zero_divisors = zero_divisors(a);
    let nilpotency = (1..n)
        .map(|x| (x, nilpotency_index(a, x).expect("nonzero element")))
        .collect();
    let idempotents = ElemSet::from_iter_in(n, (1..n).filter(|&x| a.is_idempotent(x)));
    let primitive_idempotents = ElemSet::from_iter_in(
        n,
        idempotents
            .iter()
            .filter(|&e| is_primitive_idempotent(a, e)),
    );
    let primes = ElemSet::from_iter_in(n, (0..n).filter(|&p| is_prime(a, p)));
    let maximals = ElemSet::from_iter_in(n, (0..n).filter(|&m| is_maximal(a, m)));
    let minimals = ElemSet::from_iter_in(n, (0..n).filter(|&m| is_minimal(a, m)));
    ElementAnalysis {
        zero_divisors,
        nilpotency,
        idempotents,
        primitive_idempotents,
        primes,
        maximals,
        minimals,
    }
}

/// Nonzero `x` with `xy = 0` for some nonzero `y`.
pub fn zero_divisors(a: &PoSemiringTable) -> ElemSet {
    let n = a.order();
    ElemSet::from_iter_in(n, (1..n).filter(|&x| (1..n).any(|y| a.mul(x, y) == 0)))
}

/// Least `k >= 1` with `x^k = 0`, if any. Powers of `x` enter a cycle
/// within `n` steps, so the search stops there.
pub fn nilpotency_index(a: &PoSemiringTable, x: Elem) -> Result<Option<usize>, DomainError> {
    if x >= a.order() {
        return Err(DomainError::OutOfRange(x));
    }
    if x == 0 {
        return Err(DomainError::ZeroNilpotency);
    }
    let mut p = x;
    for k in 1..=a.order() {
        if p == 0 {
            return Ok(Some(k));
        }
        p = a.mul(p, x);
    }
    Ok(None)
}

/// `p != 1` and `xy <= p` implies `x <= p` or `y <= p`.
pub fn is_prime(a: &PoSemiringTable, p: Elem) -> bool {
    if p == a.one() {
        return false;
    }
    let n = a.order();
    (0..n).all(|x| a.leq(x, p) || (0..n).all(|y| !a.leq(a.mul(x, y), p) || a.leq(y, p)))
}

/// `m != 1` and `m <= x < 1` implies `m = x`.
pub fn is_maximal(a: &PoSemiringTable, m: Elem) -> bool {
    let one = a.one();
    m != one && (0..a.order()).all(|x| x == one || x == m || !a.leq(m, x))
}

/// `x != 0` and `0 < y <= x` implies `y = x`.
pub fn is_minimal(a: &PoSemiringTable, x: Elem) -> bool {
    x != 0 && (1..a.order()).all(|y| y == x || !a.leq(y, x))
}

/// Nonzero idempotent that is not a sum of two orthogonal nonzero idempotents.
pub fn is_primitive_idempotent(a: &PoSemiringTable, e: Elem) -> bool {
    e != 0 && a.is_idempotent(e) && orthogonal_split(a, e, |_| true).is_none()
}

/// First `(p, q)` of nonzero idempotents with `p + q = e`, `pq = 0` and
/// `accept(p)`, scanning `p` by index.
fn orthogonal_split(
    a: &PoSemiringTable,
    e: Elem,
    accept: impl Fn(Elem) -> bool,
) -> Option<(Elem, Elem)> {
    let n = a.order();
    (1..n)
        .filter(|&p| a.is_idempotent(p) && accept(p))
        .find_map(|p| {
            (1..n)
                .find(|&q| a.is_idempotent(q) && a.mul(p, q) == 0 && a.add(p, q) == e)
                .map(|q| (p, q))
        })
}

/// Result of searching for an orthogonal idempotent complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Complement {
    /// Least-index complement.
    pub complement: Option<Elem>,
    /// Every complement, increasing.
    pub all: Vec<Elem>,
}

/// Idempotents `v` with `w + v = 1` and `wv = 0`, for a nonzero idempotent `w`.
pub fn orthogonal_complement(a: &PoSemiringTable, w: Elem) -> Result<Complement, DomainError> {
    if w >= a.order() {
        return Err(DomainError::OutOfRange(w));
    }
    if w == 0 || !a.is_idempotent(w) {
        return Err(DomainError::NotNonzeroIdempotent(w));
    }
    let all: Vec<Elem> = complements_of(a, w, a.one());
    Ok(Complement {
        complement: all.first().copied(),
        all,
    })
}

/// Complements of `w` relative to the top `top`.
pub(crate) fn complements_of(a: &PoSemiringTable, w: Elem, top: Elem) -> Vec<Elem> {
    a.elements()
        .filter(|&v| a.is_idempotent(v) && a.add(w, v) == top && a.mul(w, v) == 0)
        .collect()
}

/// Splits a nonzero idempotent into pairwise orthogonal primitive
/// idempotents, least-index primitive summand first. Requires (C2).
pub fn primitive_decomposition(a: &PoSemiringTable, e: Elem) -> Result<Vec<Elem>, DomainError> {
    if e >= a.order() {
        return Err(DomainError::OutOfRange(e));
    }
    if e == 0 || !a.is_idempotent(e) {
        return Err(DomainError::NotNonzeroIdempotent(e));
    }
    let conditions = check_conditions(a);
    if !conditions.c2.holds {
        return Err(DomainError::NotApplicable(format!(
            "condition (C2) fails at {}",
            a.name(
                conditions
                    .c2
                    .counterexample
                    .expect("failing condition has a counterexample")
            )
        )));
    }
    let mut parts = Vec::new();
    let mut rest = e;
    loop {
        if is_primitive_idempotent(a, rest) {
            parts.push(rest);
            break;
        }
        let (p, q) = orthogonal_split(a, rest, |p| is_primitive_idempotent(a, p))
            .expect("a non-primitive idempotent splits off a primitive summand");
        parts.push(p);
        rest = q;
    }
    Ok(parts)
}

/// Outcome of one complement condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionOutcome {
    pub holds: bool,
    /// First element at which the condition fails.
    pub counterexample: Option<Elem>,
    /// For every element the condition quantifies over and satisfies:
    /// a nonzero idempotent `w <= u` and its complement `v`.
    pub witnesses: BTreeMap<Elem, (Elem, Elem)>,
}

impl ConditionOutcome {
    fn evaluate(a: &PoSemiringTable, domain: impl Iterator<Item = Elem>) -> Self {
        let mut witnesses = BTreeMap::new();
        let mut counterexample = None;
        for u in domain {
            match complemented_idempotent_below(a, u) {
                Some(w) => {
                    witnesses.insert(u, w);
                }
                None => {
                    if counterexample.is_none() {
                        counterexample = Some(u);
                    }
                }
            }
        }
        ConditionOutcome {
            holds: counterexample.is_none(),
            counterexample,
            witnesses,
        }
    }

    /// Replays every witness against the tables.
    pub fn witnesses_replay(&self, a: &PoSemiringTable) -> bool {
        self.witnesses.iter().all(|(&u, &(w, v))| {
            w != 0
                && a.leq(w, u)
                && a.add(w, v) == a.one()
                && a.mul(w, v) == 0
                && a.is_idempotent(w)
                && a.is_idempotent(v)
        })
    }
}

/// First nonzero idempotent `w <= u` with a complement, and that complement.
fn complemented_idempotent_below(a: &PoSemiringTable, u: Elem) -> Option<(Elem, Elem)> {
    (1..a.order())
        .filter(|&w| a.leq(w, u) && a.is_idempotent(w))
        .find_map(|w| complements_of(a, w, a.one()).first().map(|&v| (w, v)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    /// Every non-nilpotent element dominates a complemented nonzero idempotent.
    pub c1: ConditionOutcome,
    /// Every nonzero idempotent dominates a complemented nonzero idempotent.
    pub c2: ConditionOutcome,
    /// Every idempotent minimal element has a complement.
    pub c3: ConditionOutcome,
}

impl ConditionReport {
    pub fn c1(&self) -> bool {
        self.c1.holds
    }
    pub fn c2(&self) -> bool {
        self.c2.holds
    }
    pub fn c3(&self) -> bool {
        self.c3.holds
    }
}

pub fn check_conditions(a: &PoSemiringTable) -> ConditionReport {
    let n = a.order();
    let non_nilpotent: Vec<Elem> = (1..n)
        .filter(|&x| matches!(nilpotency_index(a, x), Ok(None)))
        .collect();
    let c1 = ConditionOutcome::evaluate(a, non_nilpotent.into_iter());
    let c2 = ConditionOutcome::evaluate(a, (1..n).filter(|&x| a.is_idempotent(x)));
    let c3 = ConditionOutcome::evaluate(
        a,
        (1..n).filter(|&x| a.is_idempotent(x) && is_minimal(a, x)),
    );
    ConditionReport { c1, c2, c3 }
}

/// Least nonzero element: a nonzero element below every nonzero element.
pub fn least_nonzero(a: &PoSemiringTable) -> Option<Elem> {
    let n = a.order();
    (1..n).find(|&x| (1..n).all(|y| a.leq(x, y)))
}
