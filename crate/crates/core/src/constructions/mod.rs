//! Explicit po-semiring families, direct products, and one-point or
//! two-point extensions of integral po-semirings.

mod decompose;
mod spec;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::analysis::{least_nonzero, zero_divisors};
use crate::elemset::Elem;
use crate::error::TableError;
use crate::table::PoSemiringTable;

pub(crate) use decompose::lower_part;
pub use decompose::{
    peel_boolean, recognize_small_z, split_two_star, ConditionCheck, Decomposition, SmallZ,
    SquareZeroReport,
};
pub use spec::{parse_construction, ConstructionSpec};

/// Largest exponent accepted by [`boolean_power`].
pub const BOOLEAN_POWER_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse construction {spec:?}: {message}")]
    Syntax { spec: String, message: String },
    #[error("base instance is not integral: {0}")]
    NotIntegral(String),
    #[error("base instance has no least nonzero element")]
    NoLeastNonzero,
    #[error("boolean power {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    /// A structural claim failed on a concrete instance.
    #[error("counterexample: {0}")]
    Counterexample(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// Value of `u^2` in the two-point extensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum USquare {
    Zero,
    C,
    U,
}

impl fmt::Display for USquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            USquare::Zero => "0",
            USquare::C => "c",
            USquare::U => "u",
        })
    }
}

pub fn construct(spec: &ConstructionSpec) -> Result<PoSemiringTable, ConstructionError> {
    use ConstructionSpec as S;
    match spec {
        S::Trivial => Ok(trivial()),
        S::ChainLattice { k } => chain_lattice(*k),
        S::Example26 { k } => example_2_6(*k),
        S::Example32 { k } => example_3_2(*k),
        S::Example46 { k, u_square } => example_4_6(*k, *u_square),
        S::Example47 { k, n } => example_4_7(*k, *n),
        S::AdjoinZ1(base) => adjoin_z1(&construct(base)?),
        S::AdjoinZ2Incomparable(base) => adjoin_z2_incomparable(&construct(base)?),
        S::AdjoinZ2Chain(base, u_square) => adjoin_z2_chain(&construct(base)?, *u_square),
        S::Product(a, b) => Ok(direct_product(&construct(a)?, &construct(b)?)),
        S::BooleanPower { n } => boolean_power(*n),
    }
}

/// The two-element po-semiring `{0, 1}`.
pub fn trivial() -> PoSemiringTable {
    PoSemiringTable::from_fn(names(&["0", "1"]), |x, y| x.max(y), |x, y| x.min(y))
        .expect("{0,1} is a po-semiring")
}

fn names(s: &[&str]) -> Vec<String> {
    s.iter().map(|x| x.to_string()).collect()
}

fn chain_names(head: &[&str], prefix: &str, k: usize) -> Vec<String> {
    let mut out = names(head);
    out.extend((1..=k).map(|i| format!("{prefix}{i}")));
    out.push("1".into());
    out
}

fn require_k(k: usize) -> Result<(), ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::InvalidParameter(
            "chain length k must be at least 1".into(),
        ));
    }
    Ok(())
}

/// `0 < b1 < ... < bk < 1` with max as addition and min as multiplication.
pub fn chain_lattice(k: usize) -> Result<PoSemiringTable, ConstructionError> {
    require_k(k)?;
    Ok(PoSemiringTable::from_fn(
        chain_names(&["0"], "b", k),
        |x, y| x.max(y),
        |x, y| x.min(y),
    )?)
}

/// `0 < a < b1 < ... < bk < 1`, max addition, `a b_i = a^2 = 0` and
/// `b_i b_j = b_min(i,j)`. Every element other than 0 and 1 is a zero divisor.
pub fn example_2_6(k: usize) -> Result<PoSemiringTable, ConstructionError> {
    require_k(k)?;
    let top = k + 2;
    Ok(PoSemiringTable::from_fn(
        chain_names(&["0", "a"], "b", k),
        |x, y| x.max(y),
        |x, y| {
            if x == top || y == top {
                x.min(y)
            } else if x == 1 || y == 1 {
                0
            } else {
                x.min(y)
            }
        },
    )?)
}

/// Same chain as [`example_2_6`] with `a^2 = 0` and min for every other
/// product, so that `a` is the only zero divisor.
pub fn example_3_2(k: usize) -> Result<PoSemiringTable, ConstructionError> {
    require_k(k)?;
    Ok(PoSemiringTable::from_fn(
        chain_names(&["0", "a"], "b", k),
        |x, y| x.max(y),
        |x, y| if x == 1 && y == 1 { 0 } else { x.min(y) },
    )?)
}

/// `0 < c < u < b1 < ... < bk < 1`, max addition, `cu = c^2 = 0`, `u^2`
/// as given, min otherwise.
pub fn example_4_6(k: usize, u_square: USquare) -> Result<PoSemiringTable, ConstructionError> {
    require_k(k)?;
    let u2 = match u_square {
        USquare::Zero => 0,
        USquare::C => 1,
        USquare::U => 2,
    };
    Ok(PoSemiringTable::from_fn(
        chain_names(&["0", "c", "u"], "b", k),
        |x, y| x.max(y),
        |x, y| match (x.min(y), x.max(y)) {
            (1, 1) | (1, 2) => 0,
            (2, 2) => u2,
            (lo, _) => lo,
        },
    )?)
}

/// Chain `0 < b1 < ... < bk < 1` with `b_i b_j = b1`, extended by `c < u < b_n`
/// where `u` is incomparable with `b1, ..., b_{n-1}`, `u b_i = c` and
/// `Z^2 = 0`. Requires `2 <= n <= k`.
pub fn example_4_7(k: usize, n: usize) -> Result<PoSemiringTable, ConstructionError> {
    if n < 2 || n > k {
        return Err(ConstructionError::InvalidParameter(format!(
            "example-4.7 needs 2 <= n <= k, got k={k} n={n}"
        )));
    }
    let (c, u, top) = (1, 2, k + 3);
    let b = |i: usize| i + 2;
    let is_b = |x: Elem| (3..top).contains(&x);
    let add = |x: Elem, y: Elem| {
        let (lo, hi) = (x.min(y), x.max(y));
        match (lo, hi) {
            (0, _) => hi,
            (1, _) => hi,
            (2, h) if is_b(h) && h < b(n) => b(n),
            _ => hi,
        }
    };
    let mul = |x: Elem, y: Elem| {
        let (lo, hi) = (x.min(y), x.max(y));
        if lo == 0 {
            0
        } else if hi == top {
            lo
        } else if lo == c || lo == u {
            if hi == c || hi == u {
                0
            } else {
                c
            }
        } else {
            b(1)
        }
    };
    Ok(PoSemiringTable::from_fn(
        chain_names(&["0", "c", "u"], "b", k),
        add,
        mul,
    )?)
}

fn product_name(a: &str, b: &str) -> String {
    let wrap = |s: &str| {
        if s.contains('×') {
            format!("({s})")
        } else {
            s.to_string()
        }
    };
    format!("{}×{}", wrap(a), wrap(b))
}

/// Componentwise tables on pairs, pair `(i, j)` at index `i * |B| + j`.
pub fn direct_product(a: &PoSemiringTable, b: &PoSemiringTable) -> PoSemiringTable {
    let m = b.order();
    let n = a.order() * m;
    let names = (0..n)
        .map(|p| product_name(a.name(p / m), b.name(p % m)))
        .collect();
    PoSemiringTable::from_fn(
        names,
        |x, y| a.add(x / m, y / m) * m + b.add(x % m, y % m),
        |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m),
    )
    .expect("direct product of po-semirings is a po-semiring")
}

/// `{0,1}^(n)` with bitstring names, first coordinate most significant.
pub fn boolean_power(n: usize) -> Result<PoSemiringTable, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::InvalidParameter(
            "boolean power needs n >= 1".into(),
        ));
    }
    if n > BOOLEAN_POWER_CAP {
        return Err(ConstructionError::CapExceeded {
            n,
            cap: BOOLEAN_POWER_CAP,
        });
    }
    if n == 1 {
        return Ok(trivial());
    }
    let size = 1usize << n;
    let names = (0..size).map(|x| format!("{x:0n$b}")).collect();
    Ok(PoSemiringTable::from_fn(names, |x, y| x | y, |x, y| x & y)?)
}

fn fresh_name(base: &PoSemiringTable, want: &str) -> String {
    let mut name = want.to_string();
    while base.index_of(&name).is_some() {
        name.push('\'');
    }
    name
}

fn require_integral(a1: &PoSemiringTable) -> Result<(), ConstructionError> {
    let first = zero_divisors(a1).iter().next();
    match first {
        None => Ok(()),
        Some(x) => Err(ConstructionError::NotIntegral(format!(
            "{} is a zero divisor",
            a1.name(x)
        ))),
    }
}

/// Inserts a new element `c` between zero and every nonzero element of an
/// integral `A1`, with `c^2 = 0` and `cy = c` for nonzero `y`.
///
/// Layout: `0, c`, then the nonzero elements of `A1` in their order.
pub fn adjoin_z1(a1: &PoSemiringTable) -> Result<PoSemiringTable, ConstructionError> {
    require_integral(a1)?;
    let mut names = vec![a1.name(0).to_string(), fresh_name(a1, "c")];
    names.extend(a1.names()[1..].iter().cloned());
    let old = |x: Elem| x.saturating_sub(1);
    let c = 1;
    Ok(PoSemiringTable::from_fn(
        names,
        |x, y| match (x, y) {
            (0, z) | (z, 0) => z,
            (1, z) | (z, 1) => z,
            _ => a1.add(old(x), old(y)) + 1,
        },
        |x, y| match (x, y) {
            (0, _) | (_, 0) => 0,
            (1, 1) => 0,
            (1, _) | (_, 1) => c,
            _ => match a1.mul(old(x), old(y)) {
                0 => 0,
                z => z + 1,
            },
        },
    )?)
}

fn two_point_names(a1: &PoSemiringTable) -> Vec<String> {
    let c = fresh_name(a1, "c");
    let mut u = fresh_name(a1, "u");
    while u == c {
        u.push('\'');
    }
    let mut names = vec![a1.name(0).to_string(), c, u];
    names.extend(a1.names()[1..].iter().cloned());
    names
}

fn lift2(z: Elem) -> Elem {
    if z == 0 {
        0
    } else {
        z + 2
    }
}

/// Two incomparable idempotent zero divisors `c`, `u` below every nonzero
/// element of `A1`, with `cu = 0` and `c + u` the least nonzero element of `A1`.
///
/// Layout: `0, c, u`, then the nonzero elements of `A1`.
pub fn adjoin_z2_incomparable(a1: &PoSemiringTable) -> Result<PoSemiringTable, ConstructionError> {
    require_integral(a1)?;
    let a0 = least_nonzero(a1).ok_or(ConstructionError::NoLeastNonzero)?;
    let old = |x: Elem| x - 2;
    Ok(PoSemiringTable::from_fn(
        two_point_names(a1),
        |x, y| match (x.min(y), x.max(y)) {
            (0, z) => z,
            (1, 1) => 1,
            (2, 2) => 2,
            (1, 2) => lift2(a0),
            (1 | 2, z) => z,
            (p, q) => lift2(a1.add(old(p), old(q))),
        },
        |x, y| match (x.min(y), x.max(y)) {
            (0, _) => 0,
            (1, 1) => 1,
            (2, 2) => 2,
            (1, 2) => 0,
            (p @ (1 | 2), _) => p,
            (p, q) => lift2(a1.mul(old(p), old(q))),
        },
    )?)
}

/// A chain `0 < c < u` below every nonzero element of `A1`, max addition
/// against `c` and `u`, `c^2 = cu = 0`, `u^2` as given (`c` or `u`), and
/// `xy = x` for `x` in `{c, u}` and nonzero `y` in `A1`.
pub fn adjoin_z2_chain(
    a1: &PoSemiringTable,
    u_square: USquare,
) -> Result<PoSemiringTable, ConstructionError> {
    require_integral(a1)?;
    let u2 = match u_square {
        USquare::Zero => {
            return Err(ConstructionError::InvalidParameter(
                "u^2 must be c or u for the chain extension".into(),
            ))
        }
        USquare::C => 1,
        USquare::U => 2,
    };
    let old = |x: Elem| x - 2;
    Ok(PoSemiringTable::from_fn(
        two_point_names(a1),
        |x, y| match (x.min(y), x.max(y)) {
            (p, q) if p <= 2 => q,
            (p, q) => lift2(a1.add(old(p), old(q))),
        },
        |x, y| match (x.min(y), x.max(y)) {
            (0, _) => 0,
            (1, 1) | (1, 2) => 0,
            (2, 2) => u2,
            (p @ (1 | 2), _) => p,
            (p, q) => lift2(a1.mul(old(p), old(q))),
        },
    )?)
}
