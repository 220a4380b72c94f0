//! Axiom checklist for po-semiring tables.
//!
//! The checked list is the reduced one: two commutative monoids,
//! distributivity, zero absorption and `1 + x = 1`. Idempotent addition,
//! the order laws and order compatibility follow from these and are
//! exposed separately through [`derived_violations`].

use serde::Serialize;

use crate::elemset::Elem;
use crate::error::StructureError;
use crate::table::{CayleyTable, PoSemiringTable, RawTables};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdentity,
    MulCommutative,
    MulAssociative,
    MulIdentity,
    ZeroAbsorbs,
    Distributive,
    OneIsTop,
    // Derived consequences, never reported by `verify_axioms`.
    AddIdempotent,
    OrderAntisymmetric,
    OrderTransitive,
    MulBelowFactors,
    AddCompatible,
    MulCompatible,
}

impl Axiom {
    pub const CHECKLIST: [Axiom; 9] = [
        Axiom::AddCommutative,
        Axiom::AddAssociative,
        Axiom::AddIdentity,
        Axiom::MulCommutative,
        Axiom::MulAssociative,
        Axiom::MulIdentity,
        Axiom::ZeroAbsorbs,
        Axiom::Distributive,
        Axiom::OneIsTop,
    ];

    pub const DERIVED: [Axiom; 6] = [
        Axiom::AddIdempotent,
        Axiom::OrderAntisymmetric,
        Axiom::OrderTransitive,
        Axiom::MulBelowFactors,
        Axiom::AddCompatible,
        Axiom::MulCompatible,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddAssociative => "add-associative",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulCommutative => "mul-commutative",
            Axiom::MulAssociative => "mul-associative",
            Axiom::MulIdentity => "mul-identity",
            Axiom::ZeroAbsorbs => "zero-absorbs",
            Axiom::Distributive => "distributive",
            Axiom::OneIsTop => "one-is-top",
            Axiom::AddIdempotent => "add-idempotent",
            Axiom::OrderAntisymmetric => "order-antisymmetric",
            Axiom::OrderTransitive => "order-transitive",
            Axiom::MulBelowFactors => "mul-below-factors",
            Axiom::AddCompatible => "add-compatible",
            Axiom::MulCompatible => "mul-compatible",
        }
    }

    /// Number of meaningful witness slots.
    pub fn arity(self) -> usize {
        match self {
            Axiom::AddIdentity
            | Axiom::MulIdentity
            | Axiom::ZeroAbsorbs
            | Axiom::OneIsTop
            | Axiom::AddIdempotent => 1,
            Axiom::AddCommutative
            | Axiom::MulCommutative
            | Axiom::OrderAntisymmetric
            | Axiom::MulBelowFactors => 2,
            Axiom::AddAssociative
            | Axiom::MulAssociative
            | Axiom::Distributive
            | Axiom::OrderTransitive
            | Axiom::AddCompatible
            | Axiom::MulCompatible => 3,
        }
    }

    /// Whether the law fails at `w`. Unused witness slots are ignored.
    pub fn fails_at(self, add: &CayleyTable, mul: &CayleyTable, w: [Elem; 3]) -> bool {
        let n = add.order();
        let [x, y, z] = w;
        let leq = |a: Elem, b: Elem| add.get(a, b) == b;
        match self {
            Axiom::AddCommutative => add.get(x, y) != add.get(y, x),
            Axiom::MulCommutative => mul.get(x, y) != mul.get(y, x),
            Axiom::AddAssociative => add.get(add.get(x, y), z) != add.get(x, add.get(y, z)),
            Axiom::MulAssociative => mul.get(mul.get(x, y), z) != mul.get(x, mul.get(y, z)),
            Axiom::AddIdentity => add.get(0, x) != x || add.get(x, 0) != x,
            Axiom::MulIdentity => mul.get(n - 1, x) != x || mul.get(x, n - 1) != x,
            Axiom::ZeroAbsorbs => mul.get(0, x) != 0 || mul.get(x, 0) != 0,
            Axiom::Distributive => {
                mul.get(x, add.get(y, z)) != add.get(mul.get(x, y), mul.get(x, z))
            }
            Axiom::OneIsTop => add.get(n - 1, x) != n - 1,
            Axiom::AddIdempotent => add.get(x, x) != x,
            Axiom::OrderAntisymmetric => x != y && leq(x, y) && leq(y, x),
            Axiom::OrderTransitive => leq(x, y) && leq(y, z) && !leq(x, z),
            Axiom::MulBelowFactors => !leq(mul.get(x, y), x) || !leq(mul.get(x, y), y),
            Axiom::AddCompatible => leq(x, y) && !leq(add.get(x, z), add.get(y, z)),
            Axiom::MulCompatible => leq(y, z) && !leq(mul.get(x, y), mul.get(x, z)),
        }
    }

    fn first_witness(self, add: &CayleyTable, mul: &CayleyTable) -> Option<[Elem; 3]> {
        let n = add.order();
        match self.arity() {
            1 => (0..n)
                .map(|x| [x, 0, 0])
                .find(|&w| self.fails_at(add, mul, w)),
            2 => (0..n)
                .flat_map(|x| (0..n).map(move |y| [x, y, 0]))
                .find(|&w| self.fails_at(add, mul, w)),
            _ => (0..n)
                .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| [x, y, z])))
                .find(|&w| self.fails_at(add, mul, w)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// Element indices; only the first `axiom.arity()` are meaningful.
    pub witness: [Elem; 3],
}

impl Violation {
    pub fn witness_elems(&self) -> &[Elem] {
        &self.witness[..self.axiom.arity()]
    }

    /// Re-evaluates the law at the witness; true if it still fails.
    pub fn replays(&self, raw: &RawTables) -> bool {
        match raw.check_structure() {
            Ok((add, mul)) => self.axiom.fails_at(&add, &mul, self.witness),
            Err(_) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn summary(&self) -> String {
        if self.valid {
            return "valid".into();
        }
        self.violations
            .iter()
            .map(|v| format!("{} at {:?}", v.axiom.id(), v.witness_elems()))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Checks a raw candidate. Malformed input is an `Err`; axiom failures are
/// reported in the returned value, one minimal witness per failing axiom.
pub fn verify_axioms(raw: &RawTables) -> Result<AxiomReport, StructureError> {
    let (add, mul) = raw.check_structure()?;
    Ok(check_tables(&add, &mul))
}

pub(crate) fn check_tables(add: &CayleyTable, mul: &CayleyTable) -> AxiomReport {
    let violations: Vec<Violation> = Axiom::CHECKLIST
        .iter()
        .filter_map(|&axiom| {
            axiom
                .first_witness(add, mul)
                .map(|witness| Violation { axiom, witness })
        })
        .collect();
    AxiomReport {
        valid: violations.is_empty(),
        violations,
    }
}

/// Consequences of the axioms, re-checked independently. Always empty for a
/// valid table; exposed so tests can assert it.
pub fn derived_violations(a: &PoSemiringTable) -> Vec<Violation> {
    Axiom::DERIVED
        .iter()
        .filter_map(|&axiom| {
            axiom
                .first_witness(a.add_table(), a.mul_table())
                .map(|witness| Violation { axiom, witness })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(names: &[&str], add: &[&[usize]], mul: &[&[usize]]) -> RawTables {
        RawTables {
            names: names.iter().map(|s| s.to_string()).collect(),
            add: add.iter().map(|r| r.to_vec()).collect(),
            mul: mul.iter().map(|r| r.to_vec()).collect(),
        }
    }

    #[test]
    fn idempotent_chain_is_valid() {
        let r = raw(
            &["0", "a", "1"],
            &[&[0, 1, 2], &[1, 1, 2], &[2, 2, 2]],
            &[&[0, 0, 0], &[0, 1, 1], &[0, 1, 2]],
        );
        let report = verify_axioms(&r).unwrap();
        assert!(report.valid, "{}", report.summary());
    }

    #[test]
    fn ring_z2_fails_one_is_top_only() {
        let r = raw(&["0", "1"], &[&[0, 1], &[1, 0]], &[&[0, 0], &[0, 1]]);
        let report = verify_axioms(&r).unwrap();
        assert!(!report.valid);
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!(v.axiom, Axiom::OneIsTop);
        assert_eq!(v.witness_elems(), &[1]);
        assert!(v.replays(&r));
    }

    #[test]
    fn one_not_top_witness_is_a() {
        // a + 1 = a
        let r = raw(
            &["0", "a", "1"],
            &[&[0, 1, 2], &[1, 1, 1], &[2, 1, 2]],
            &[&[0, 0, 0], &[0, 1, 1], &[0, 1, 2]],
        );
        let report = verify_axioms(&r).unwrap();
        let top = report
            .violations
            .iter()
            .find(|v| v.axiom == Axiom::OneIsTop)
            .expect("one-is-top violation");
        assert_eq!(top.witness_elems(), &[1]);
        assert!(report.violations.iter().all(|v| v.replays(&r)));
    }

    #[test]
    fn structural_errors_are_distinct() {
        let short = raw(&["0", "1"], &[&[0, 1]], &[&[0, 0], &[0, 1]]);
        assert!(matches!(
            verify_axioms(&short),
            Err(StructureError::RowCount { table: "add", .. })
        ));
        let range = raw(&["0", "1"], &[&[0, 1], &[1, 2]], &[&[0, 0], &[0, 1]]);
        assert!(matches!(
            verify_axioms(&range),
            Err(StructureError::EntryOutOfRange { value: 2, .. })
        ));
        let tiny = raw(&["0"], &[&[0]], &[&[0]]);
        assert_eq!(verify_axioms(&tiny), Err(StructureError::TooSmall(1)));
        let dup = raw(&["x", "x"], &[&[0, 1], &[1, 1]], &[&[0, 0], &[0, 1]]);
        assert!(matches!(
            verify_axioms(&dup),
            Err(StructureError::DuplicateName(_))
        ));
    }

    #[test]
    fn non_distributive_reports_first_triple() {
        // 0 < a < 1 chain with a*a = 1 breaks distributivity and more
        let r = raw(
            &["0", "a", "1"],
            &[&[0, 1, 2], &[1, 1, 2], &[2, 2, 2]],
            &[&[0, 0, 0], &[0, 2, 1], &[0, 1, 2]],
        );
        let report = verify_axioms(&r).unwrap();
        assert!(!report.valid);
        for v in &report.violations {
            assert!(v.replays(&r), "{v:?}");
        }
    }
}
