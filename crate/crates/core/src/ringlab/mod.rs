//! Finite commutative rings with identity, their ideals, and the ideal
//! po-semiring built from them.

mod ideals;

use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::elemset::Elem;
use crate::error::{ParseError, StructureError};
use crate::format::{parse_ring_text, write_ring_text};
use crate::table::{check_names, CayleyTable, RawTables};

pub use ideals::{
    annihilating_ideal_graph, enumerate_ring_ideals, ideal_product, ideal_semiring,
    ideal_semiring_with_cap, ideal_sum, product_of_fields_split, radicals, ring_zdgraph,
    two_field_criteria, Ideal, IdealSemiring, Radicals, TwoFieldCriteria, DEFAULT_IDEAL_CAP,
};

/// Largest ring order accepted by [`make_ring`].
pub const MAX_RING_ORDER: usize = 512;
/// Largest prime accepted by the `zpx` constructor.
pub const MAX_ZPX_PRIME: usize = 13;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("bad ring spec {spec:?}: {message}")]
    Spec { spec: String, message: String },
    #[error("{0} is not a prime")]
    NotPrime(usize),
    #[error("ring order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("ring law {law} fails at {witness:?}")]
    Law {
        law: &'static str,
        witness: Vec<Elem>,
    },
    #[error("identity index {0} is out of range")]
    BadIdentity(Elem),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{count} ideals exceed the cap {cap}")]
    TooManyIdeals { count: usize, cap: usize },
}

/// A verified finite commutative ring with identity; zero is index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    names: Vec<String>,
    add: CayleyTable,
    mul: CayleyTable,
    one: Elem,
}

fn law_check(
    n: usize,
    law: &'static str,
    fails: impl Fn(Elem, Elem, Elem) -> bool + Sync,
) -> Result<(), RingError> {
    let witness = (0..n).into_par_iter().find_map_first(|x| {
        (0..n).find_map(|y| (0..n).find(|&z| fails(x, y, z)).map(|z| vec![x, y, z]))
    });
    match witness {
        None => Ok(()),
        Some(witness) => Err(RingError::Law { law, witness }),
    }
}

impl FiniteRing {
    /// Checks every ring law and returns the ring.
    pub fn new(
        names: Vec<String>,
        add: CayleyTable,
        mul: CayleyTable,
        one: Elem,
    ) -> Result<Self, RingError> {
        let n = names.len();
        if n < 1 {
            return Err(StructureError::TooSmall(n).into());
        }
        check_names(&names, n)?;
        if one >= n {
            return Err(RingError::BadIdentity(one));
        }
        let (a, m) = (&add, &mul);
        if let Some(x) = (0..n).find(|&x| a.get(0, x) != x) {
            return Err(RingError::Law {
                law: "additive-identity",
                witness: vec![x],
            });
        }
        if let Some(x) = (0..n).find(|&x| !(0..n).any(|y| a.get(x, y) == 0)) {
            return Err(RingError::Law {
                law: "additive-inverse",
                witness: vec![x],
            });
        }
        if let Some(x) = (0..n).find(|&x| m.get(one, x) != x) {
            return Err(RingError::Law {
                law: "multiplicative-identity",
                witness: vec![x],
            });
        }
        if let Some((x, y)) = a.commutativity_witness() {
            return Err(RingError::Law {
                law: "add-commutative",
                witness: vec![x, y],
            });
        }
        if let Some((x, y)) = m.commutativity_witness() {
            return Err(RingError::Law {
                law: "mul-commutative",
                witness: vec![x, y],
            });
        }
        law_check(n, "add-associative", |x, y, z| {
            a.get(a.get(x, y), z) != a.get(x, a.get(y, z))
        })?;
        law_check(n, "mul-associative", |x, y, z| {
            m.get(m.get(x, y), z) != m.get(x, m.get(y, z))
        })?;
        law_check(n, "distributive", |x, y, z| {
            m.get(x, a.get(y, z)) != a.get(m.get(x, y), m.get(x, z))
        })?;
        Ok(FiniteRing {
            names,
            add,
            mul,
            one,
        })
    }

    pub fn from_raw(raw: &RawTables, one: Elem) -> Result<Self, RingError> {
        let (add, mul) = raw.check_structure()?;
        FiniteRing::new(raw.names.clone(), add, mul, one)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add.get(x, y)
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul.get(x, y)
    }

    pub fn add_table(&self) -> &CayleyTable {
        &self.add
    }

    pub fn mul_table(&self) -> &CayleyTable {
        &self.mul
    }

    /// Additive inverse.
    pub fn neg(&self, x: Elem) -> Elem {
        (0..self.order())
            .find(|&y| self.add(x, y) == 0)
            .expect("verified ring has additive inverses")
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        (0..self.order()).any(|y| self.mul(x, y) == self.one)
    }

    pub fn is_field(&self) -> bool {
        self.order() >= 2 && (1..self.order()).all(|x| self.is_unit(x))
    }

    pub fn to_text(&self) -> String {
        let raw = RawTables {
            names: self.names.clone(),
            add: self.add.rows(),
            mul: self.mul.rows(),
        };
        write_ring_text(&raw, self.one)
    }
}

fn is_prime_number(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Integers modulo `n`.
pub fn zn(n: usize) -> Result<FiniteRing, RingError> {
    if !(2..=MAX_RING_ORDER).contains(&n) {
        return Err(RingError::Spec {
            spec: format!("zn:{n}"),
            message: format!("modulus must lie in 2..={MAX_RING_ORDER}"),
        });
    }
    FiniteRing::new(
        (0..n).map(|i| i.to_string()).collect(),
        CayleyTable::from_fn(n, |x, y| (x + y) % n),
        CayleyTable::from_fn(n, |x, y| (x * y) % n),
        1,
    )
}

/// `Z_p[x]/(x^2 + c1 x + c0)`; the element `a + b x` has index `a + b p`.
pub fn zpx(p: usize, c1: usize, c0: usize) -> Result<FiniteRing, RingError> {
    if !is_prime_number(p) {
        return Err(RingError::NotPrime(p));
    }
    if p > MAX_ZPX_PRIME {
        return Err(RingError::Spec {
            spec: format!("zpx:{p}:{c1}:{c0}"),
            message: format!("prime must be at most {MAX_ZPX_PRIME}"),
        });
    }
    let (c1, c0) = (c1 % p, c0 % p);
    let n = p * p;
    let name = |i: usize| {
        let (a, b) = (i % p, i / p);
        let xb = match b {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("{b}x"),
        };
        match (a, b) {
            (_, 0) => a.to_string(),
            (0, _) => xb,
            _ => format!("{a}+{xb}"),
        }
    };
    let mul = |i: usize, j: usize| {
        let (a, b, c, d) = (i % p, i / p, j % p, j / p);
        let bd = b * d % p;
        let lo = (a * c + p * p - bd * c0 % p) % p;
        let hi = (a * d + b * c + p * p - bd * c1 % p) % p;
        lo + hi * p
    };
    FiniteRing::new(
        (0..n).map(name).collect(),
        CayleyTable::from_fn(n, |i, j| (i % p + j % p) % p + ((i / p + j / p) % p) * p),
        CayleyTable::from_fn(n, mul),
        1,
    )
}

/// Componentwise product; `(x, y)` has index `x * |S| + y`.
pub fn ring_product(r: &FiniteRing, s: &FiniteRing) -> Result<FiniteRing, RingError> {
    let m = s.order();
    let n = r.order() * m;
    if n > MAX_RING_ORDER {
        return Err(RingError::TooLarge {
            order: n,
            limit: MAX_RING_ORDER,
        });
    }
    FiniteRing::new(
        (0..n)
            .map(|i| format!("({},{})", r.name(i / m), s.name(i % m)))
            .collect(),
        CayleyTable::from_fn(n, |x, y| r.add(x / m, y / m) * m + s.add(x % m, y % m)),
        CayleyTable::from_fn(n, |x, y| r.mul(x / m, y / m) * m + s.mul(x % m, y % m)),
        r.one() * m + s.one(),
    )
}

/// Reads a `ring 1` file.
pub fn read_ring_file(path: &Path) -> Result<FiniteRing, RingError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| RingError::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    let (raw, one) = parse_ring_text(&text).map_err(|source| RingError::Parse {
        path: shown,
        source,
    })?;
    FiniteRing::from_raw(&raw, one)
}

fn spec_error(spec: &str, message: impl Into<String>) -> RingError {
    RingError::Spec {
        spec: spec.to_string(),
        message: message.into(),
    }
}

/// Builds a ring from `zn:N`, `prod(<spec>,<spec>)`, `zpx:p:c1:c0` or
/// `file:<path>`.
pub fn make_ring(spec: &str) -> Result<FiniteRing, RingError> {
    let s = spec.trim();
    if let Some(path) = s.strip_prefix("file:") {
        return read_ring_file(Path::new(path));
    }
    if let Some(inner) = s.strip_prefix("prod(").and_then(|r| r.strip_suffix(')')) {
        let mut depth = 0i32;
        let split = inner.char_indices().find(|&(_, ch)| {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            ch == ',' && depth == 0
        });
        let Some((i, _)) = split else {
            return Err(spec_error(s, "prod needs two comma-separated rings"));
        };
        return ring_product(&make_ring(&inner[..i])?, &make_ring(&inner[i + 1..])?);
    }
    let num = |t: &str| -> Result<usize, RingError> {
        t.parse()
            .map_err(|_| spec_error(s, format!("{t:?} is not a non-negative integer")))
    };
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["zn", n] => zn(num(n)?),
        ["zpx", p, c1, c0] => zpx(num(p)?, num(c1)?, num(c0)?),
        _ => Err(spec_error(
            s,
            "expected zn:N, zpx:p:c1:c0, prod(a,b) or file:path",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_grammar() {
        assert_eq!(make_ring("zn:4").unwrap().order(), 4);
        let r = make_ring("zpx:2:0:0").unwrap();
        assert_eq!(r.order(), 4);
        let x = r.names().iter().position(|n| n == "x").unwrap();
        assert_eq!(r.mul(x, x), 0);
        assert_eq!(make_ring("prod(zn:2,zn:4)").unwrap().order(), 8);
        assert_eq!(make_ring("prod(prod(zn:2,zn:2),zn:3)").unwrap().order(), 12);
        assert!(matches!(
            make_ring("zpx:4:0:0"),
            Err(RingError::NotPrime(4))
        ));
        assert!(make_ring("zn:1").is_err());
        assert!(make_ring("zn:513").is_err());
        assert!(make_ring("prod(zn:2)").is_err());
        assert!(make_ring("q:3").is_err());
    }

    #[test]
    fn fields_and_units() {
        assert!(make_ring("zn:7").unwrap().is_field());
        assert!(make_ring("zpx:2:1:1").unwrap().is_field());
        assert!(!make_ring("zpx:3:0:0").unwrap().is_field());
        assert!(!make_ring("zn:6").unwrap().is_field());
        assert_eq!(make_ring("zn:5").unwrap().neg(2), 3);
    }

    #[test]
    fn file_round_trip() {
        let r = make_ring("prod(zn:2,zn:3)").unwrap();
        let dir = std::env::temp_dir().join(format!("posr-ring-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("z6.ring");
        std::fs::write(&path, r.to_text()).unwrap();
        let back = make_ring(&format!("file:{}", path.display())).unwrap();
        assert_eq!(back, r);
        std::fs::write(&path, "ring 1\norder 2\n").unwrap();
        let err = read_ring_file(&path).unwrap_err();
        assert!(matches!(err, RingError::Parse { .. }));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn law_violations_are_reported() {
        let add = CayleyTable::from_fn(2, |x, y| (x + y) % 2);
        let mul = CayleyTable::from_fn(2, |x, y| (x + y) % 2);
        assert!(matches!(
            FiniteRing::new(vec!["0".into(), "1".into()], add, mul, 1),
            Err(RingError::Law { .. })
        ));
    }
}
