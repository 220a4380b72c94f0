//! Executable catalog of structural results, evaluated over finite corpora.
//!
//! Each check is a hypothesis, a finite domain of witness tuples and a
//! predicate on one tuple. A check passes on an instance when the
//! hypothesis holds, the domain is nonempty and the predicate holds on every
//! tuple; the first tuple where it fails is reported as the witness, and
//! re-evaluating the predicate on that tuple reproduces the failure.

mod catalog;
mod context;
mod corpus;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::elemset::Elem;

pub use catalog::{catalog, find_check, NOT_COVERED};
pub use context::{PairCtx, PsrCtx, RingCtx};
pub use corpus::{
    census_corpus, file_corpus, grid_corpus, parse_corpus, ring_corpus, Instance, InstanceKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("bad corpus {spec:?}: {message}")]
    Corpus { spec: String, message: String },
    #[error("invalid instance {id}: {message}")]
    InvalidInstance { id: String, message: String },
    #[error("check {check} does not apply to instance {instance} of another scope")]
    ScopeMismatch { check: String, instance: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Posemiring,
    ProductPair,
    Ring,
}

pub type Hypothesis<C> = fn(&C) -> Result<(), String>;
pub type Domain<C> = fn(&C) -> Vec<Vec<Elem>>;
pub type Predicate<C> = fn(&C, &[Elem]) -> bool;

pub struct Rule<C> {
    pub hypothesis: Hypothesis<C>,
    pub domain: Domain<C>,
    pub holds_at: Predicate<C>,
}

impl<C> Rule<C> {
    fn evaluate(&self, ctx: &C) -> (CheckResult, Option<Vec<Elem>>, Option<String>) {
        if let Err(why) = (self.hypothesis)(ctx) {
            return (CheckResult::NotApplicable, None, Some(why));
        }
        let domain = (self.domain)(ctx);
        if domain.is_empty() {
            return (
                CheckResult::NotApplicable,
                None,
                Some("no tuples to check".into()),
            );
        }
        match domain.into_iter().find(|t| !(self.holds_at)(ctx, t)) {
            Some(w) => (CheckResult::Fail, Some(w), None),
            None => (CheckResult::Pass, None, None),
        }
    }
}

pub enum Body {
    Posemiring(Rule<PsrCtx>),
    Pair(Rule<PairCtx>),
    Ring(Rule<RingCtx>),
}

pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    /// Notes attached to every report line, such as `finite-case` for
    /// chain conditions that hold automatically on finite instances.
    pub annotations: &'static [&'static str],
    pub body: Body,
}

impl TheoremCheck {
    pub fn scope(&self) -> Scope {
        match self.body {
            Body::Posemiring(_) => Scope::Posemiring,
            Body::Pair(_) => Scope::ProductPair,
            Body::Ring(_) => Scope::Ring,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckResult {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub check: String,
    pub instance: String,
    pub result: CheckResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Elem>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

impl Counts {
    fn add(&mut self, r: CheckResult) {
        match r {
            CheckResult::Pass => self.pass += 1,
            CheckResult::Fail => self.fail += 1,
            CheckResult::NotApplicable => self.not_applicable += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    /// Ordered by check (catalog order), then instance (corpus order).
    pub entries: Vec<ReportEntry>,
    pub per_check: BTreeMap<String, Counts>,
    pub totals: Counts,
    pub failures: Vec<ReportEntry>,
}

impl TheoremReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Resolves `all` or a comma-separated list of ids against the catalog.
pub fn select_checks(selection: &str) -> Result<Vec<&'static TheoremCheck>, HarnessError> {
    let all = catalog();
    if selection.trim() == "all" {
        return Ok(all.iter().collect());
    }
    selection
        .split(',')
        .map(|id| find_check(id.trim()).ok_or_else(|| HarnessError::UnknownCheck(id.trim().into())))
        .collect()
}

enum Prepared {
    Posemiring(PsrCtx),
    Pair(PairCtx),
    Ring(RingCtx),
}

fn prepare(instance: &Instance) -> Prepared {
    match &instance.kind {
        InstanceKind::Posemiring(a) => Prepared::Posemiring(PsrCtx::new(a.clone())),
        InstanceKind::Pair(a, b) => Prepared::Pair(PairCtx::new(a.clone(), b.clone())),
        InstanceKind::Ring(r) => Prepared::Ring(RingCtx::new(r.clone())),
    }
}

fn evaluate(
    check: &TheoremCheck,
    ctx: &Prepared,
) -> Option<(CheckResult, Option<Vec<Elem>>, Option<String>)> {
    match (&check.body, ctx) {
        (Body::Posemiring(rule), Prepared::Posemiring(c)) => Some(rule.evaluate(c)),
        (Body::Pair(rule), Prepared::Pair(c)) => Some(rule.evaluate(c)),
        (Body::Ring(rule), Prepared::Ring(c)) => Some(rule.evaluate(c)),
        _ => None,
    }
}

/// Runs every selected check on every instance of matching scope.
pub fn run_catalog(corpus: &[Instance], checks: &[&TheoremCheck]) -> TheoremReport {
    let prepared: Vec<Prepared> = corpus.par_iter().map(prepare).collect();
    let rows: Vec<Vec<Option<ReportEntry>>> = prepared
        .par_iter()
        .zip(corpus.par_iter())
        .map(|(ctx, inst)| {
            checks
                .iter()
                .map(|check| {
                    evaluate(check, ctx).map(|(result, witness, detail)| ReportEntry {
                        check: check.id.to_string(),
                        instance: inst.id.clone(),
                        result,
                        witness,
                        detail,
                        annotations: check.annotations.iter().map(|s| s.to_string()).collect(),
                    })
                })
                .collect()
        })
        .collect();
    let mut entries = Vec::new();
    for ci in 0..checks.len() {
        for row in &rows {
            if let Some(e) = &row[ci] {
                entries.push(e.clone());
            }
        }
    }
    let mut per_check: BTreeMap<String, Counts> = BTreeMap::new();
    let mut totals = Counts::default();
    for e in &entries {
        per_check.entry(e.check.clone()).or_default().add(e.result);
        totals.add(e.result);
    }
    let failures = entries
        .iter()
        .filter(|e| e.result == CheckResult::Fail)
        .cloned()
        .collect();
    TheoremReport {
        entries,
        per_check,
        totals,
        failures,
    }
}

/// Re-evaluates a check's predicate on a recorded witness. Returns `true`
/// when the failure reproduces.
pub fn replay(check_id: &str, instance: &Instance, witness: &[Elem]) -> Result<bool, HarnessError> {
    let check = find_check(check_id).ok_or_else(|| HarnessError::UnknownCheck(check_id.into()))?;
    let ctx = prepare(instance);
    let holds = match (&check.body, &ctx) {
        (Body::Posemiring(rule), Prepared::Posemiring(c)) => (rule.holds_at)(c, witness),
        (Body::Pair(rule), Prepared::Pair(c)) => (rule.holds_at)(c, witness),
        (Body::Ring(rule), Prepared::Ring(c)) => (rule.holds_at)(c, witness),
        _ => {
            return Err(HarnessError::ScopeMismatch {
                check: check_id.into(),
                instance: instance.id.clone(),
            })
        }
    };
    Ok(!holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_2_6, example_3_2, trivial};

    fn psr(id: &str, a: crate::table::PoSemiringTable) -> Instance {
        Instance {
            id: id.into(),
            kind: InstanceKind::Posemiring(a),
        }
    }

    #[test]
    fn condition_two_gates_prime_maximal() {
        let corpus = [psr("ex26", example_2_6(2).unwrap())];
        let report = run_catalog(&corpus, &select_checks("T2.7").unwrap());
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].result, CheckResult::NotApplicable);
    }

    #[test]
    fn scopes_filter_instances() {
        let corpus = [
            psr("b", trivial()),
            Instance {
                id: "pair".into(),
                kind: InstanceKind::Pair(trivial(), example_3_2(1).unwrap()),
            },
        ];
        let report = run_catalog(&corpus, &select_checks("P2.1a,L3.3b").unwrap());
        let seen: Vec<(&str, &str)> = report
            .entries
            .iter()
            .map(|e| (e.check.as_str(), e.instance.as_str()))
            .collect();
        assert_eq!(seen, vec![("P2.1a", "b"), ("L3.3b", "pair")]);
        assert!(report.is_clean());
    }

    #[test]
    fn predicates_bite_where_the_hypothesis_is_dropped() {
        let a = example_2_6(2).unwrap();
        let primes = crate::analysis::analyze_elements(&a).primes;
        let inst = psr("ex26", a);
        let reproduced: Vec<Elem> = primes
            .iter()
            .filter(|&p| replay("T2.7", &inst, &[p]).unwrap())
            .collect();
        assert!(!reproduced.is_empty());
    }

    #[test]
    fn unknown_ids_are_rejected() {
        assert_eq!(
            select_checks("P2.1a,X9").err(),
            Some(HarnessError::UnknownCheck("X9".into()))
        );
    }

    #[test]
    fn replay_of_a_holding_tuple_does_not_reproduce() {
        let inst = psr("ex32", example_3_2(2).unwrap());
        assert!(!replay("P2.16", &inst, &[1]).unwrap());
        assert!(matches!(
            replay("C4.4", &inst, &[]),
            Err(HarnessError::ScopeMismatch { .. })
        ));
    }
}
