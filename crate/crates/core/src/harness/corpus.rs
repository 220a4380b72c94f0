use std::path::Path;

use super::HarnessError;
use crate::constructions::{construct, ConstructionSpec, USquare};
use crate::enumerate::{enumerate_posemirings, Mode, FAST_CAP};
use crate::format::parse_psr;
use crate::ringlab::{make_ring, read_ring_file, ring_product, zn, zpx, FiniteRing};
use crate::table::PoSemiringTable;

pub enum InstanceKind {
    Posemiring(PoSemiringTable),
    /// Two factors, checked through their direct product.
    Pair(PoSemiringTable, PoSemiringTable),
    Ring(FiniteRing),
}

pub struct Instance {
    pub id: String,
    pub kind: InstanceKind,
}

impl Instance {
    pub fn posemiring(id: impl Into<String>, a: PoSemiringTable) -> Self {
        Instance {
            id: id.into(),
            kind: InstanceKind::Posemiring(a),
        }
    }
}

fn corpus_error(spec: &str, message: impl ToString) -> HarnessError {
    HarnessError::Corpus {
        spec: spec.to_string(),
        message: message.to_string(),
    }
}

fn census_members(max: usize) -> Vec<(String, PoSemiringTable)> {
    (2..=max)
        .flat_map(|n| {
            let census = enumerate_posemirings(n, Mode::Fast).expect("order within the fast cap");
            census
                .instances
                .into_iter()
                .enumerate()
                .map(move |(i, a)| (format!("census:n={n}#{i}"), a))
        })
        .collect()
}

/// Every po-semiring of order `2..=max`, one per isomorphism class.
pub fn census_corpus(max: usize) -> Result<Vec<Instance>, HarnessError> {
    if !(2..=FAST_CAP).contains(&max) {
        return Err(corpus_error(
            &format!("census:{max}"),
            format!("order must lie in 2..={FAST_CAP}"),
        ));
    }
    Ok(census_members(max)
        .into_iter()
        .map(|(id, a)| Instance::posemiring(id, a))
        .collect())
}

fn grid_specs() -> Vec<ConstructionSpec> {
    use ConstructionSpec as S;
    let mut specs = vec![S::Trivial];
    for k in 1..=3 {
        specs.push(S::ChainLattice { k });
        specs.push(S::Example26 { k });
        specs.push(S::Example32 { k });
        for u_square in [USquare::Zero, USquare::C, USquare::U] {
            specs.push(S::Example46 { k, u_square });
        }
        for n in 2..=k {
            specs.push(S::Example47 { k, n });
        }
    }
    for n in 1..=4 {
        specs.push(S::BooleanPower { n });
    }
    let bases: Vec<ConstructionSpec> = std::iter::once(S::Trivial)
        .chain((1..=3).map(|k| S::ChainLattice { k }))
        .collect();
    for b in &bases {
        specs.push(S::AdjoinZ1(Box::new(b.clone())));
        specs.push(S::AdjoinZ2Incomparable(Box::new(b.clone())));
        specs.push(S::AdjoinZ2Chain(Box::new(b.clone()), USquare::C));
        specs.push(S::AdjoinZ2Chain(Box::new(b.clone()), USquare::U));
    }
    for k in 1..=3 {
        specs.push(S::Product(
            Box::new(S::Trivial),
            Box::new(S::Example32 { k }),
        ));
    }
    specs.push(S::Product(
        Box::new(S::Trivial),
        Box::new(S::AdjoinZ1(Box::new(S::Trivial))),
    ));
    specs.push(S::Product(
        Box::new(S::Example26 { k: 1 }),
        Box::new(S::Example26 { k: 1 }),
    ));
    specs
}

/// The explicit families over small parameters, extensions of small
/// integral instances, and products of census pairs: census orders up to 3
/// as product instances, up to 4 as factor pairs.
pub fn grid_corpus() -> Vec<Instance> {
    let mut out: Vec<Instance> = grid_specs()
        .into_iter()
        .map(|s| {
            let a = construct(&s).expect("grid parameters are valid");
            Instance::posemiring(s.to_string(), a)
        })
        .collect();
    let small = census_members(4);
    for (i, (x, a)) in small.iter().enumerate() {
        for (y, b) in &small[i..] {
            if a.order() <= 3 && b.order() <= 3 {
                out.push(Instance::posemiring(
                    format!("product({x},{y})"),
                    crate::constructions::direct_product(a, b),
                ));
            }
            out.push(Instance {
                id: format!("pair({x},{y})"),
                kind: InstanceKind::Pair(a.clone(), b.clone()),
            });
        }
    }
    out
}

/// `Z_n` for `n <= 64`, every `Z_p[x]/(x^2 + c1 x + c0)` for `p` in
/// `{2, 3, 5}`, and products of pairs of rings of order at most 8.
pub fn ring_corpus() -> Vec<Instance> {
    let mut rings: Vec<(String, FiniteRing)> = (2..=64)
        .map(|n| (format!("zn:{n}"), zn(n).expect("order within range")))
        .collect();
    for p in [2, 3, 5] {
        for c1 in 0..p {
            for c0 in 0..p {
                rings.push((
                    format!("zpx:{p}:{c1}:{c0}"),
                    zpx(p, c1, c0).expect("small prime"),
                ));
            }
        }
    }
    let small: Vec<(String, FiniteRing)> = rings
        .iter()
        .filter(|(_, r)| r.order() <= 8)
        .cloned()
        .collect();
    for (i, (x, r)) in small.iter().enumerate() {
        for (y, s) in &small[i..] {
            let prod = ring_product(r, s).expect("order at most 64");
            rings.push((format!("prod({x},{y})"), prod));
        }
    }
    rings
        .into_iter()
        .map(|(id, r)| Instance {
            id,
            kind: InstanceKind::Ring(r),
        })
        .collect()
}

/// Every `*.psr` and `*.ring` file in a directory, by file name.
pub fn file_corpus(dir: &Path) -> Result<Vec<Instance>, HarnessError> {
    let shown = dir.display().to_string();
    let entries = std::fs::read_dir(dir).map_err(|e| corpus_error(&shown, e))?;
    let mut paths: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| matches!(p.extension().and_then(|x| x.to_str()), Some("psr" | "ring")))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let id = p.display().to_string();
            let invalid = |message: String| HarnessError::InvalidInstance {
                id: id.clone(),
                message,
            };
            if p.extension().and_then(|x| x.to_str()) == Some("ring") {
                let r = read_ring_file(&p).map_err(|e| invalid(e.to_string()))?;
                return Ok(Instance {
                    id,
                    kind: InstanceKind::Ring(r),
                });
            }
            let text = std::fs::read_to_string(&p).map_err(|e| invalid(e.to_string()))?;
            let raw = parse_psr(&text).map_err(|e| invalid(e.to_string()))?;
            let a = PoSemiringTable::from_raw(&raw).map_err(|e| invalid(e.to_string()))?;
            Ok(Instance::posemiring(id, a))
        })
        .collect()
}

/// Parses a `+`-separated list of `census:N`, `grid`, `rings:default`,
/// `ring:<spec>`, `files:<dir>` and construction specs prefixed `psr:`.
pub fn parse_corpus(spec: &str) -> Result<Vec<Instance>, HarnessError> {
    let mut out = Vec::new();
    for part in split_top(spec) {
        let part = part.trim();
        if let Some(n) = part.strip_prefix("census:") {
            let n = n
                .parse()
                .map_err(|_| corpus_error(part, "expected an order"))?;
            out.extend(census_corpus(n)?);
        } else if part == "grid" {
            out.extend(grid_corpus());
        } else if part == "rings:default" {
            out.extend(ring_corpus());
        } else if let Some(r) = part.strip_prefix("ring:") {
            let ring = make_ring(r).map_err(|e| corpus_error(part, e))?;
            out.push(Instance {
                id: r.to_string(),
                kind: InstanceKind::Ring(ring),
            });
        } else if let Some(dir) = part.strip_prefix("files:") {
            out.extend(file_corpus(Path::new(dir))?);
        } else if let Some(c) = part.strip_prefix("psr:") {
            let s: ConstructionSpec = c.parse().map_err(|e| corpus_error(part, e))?;
            let a = construct(&s).map_err(|e| corpus_error(part, e))?;
            out.push(Instance::posemiring(s.to_string(), a));
        } else {
            return Err(corpus_error(part, "unknown corpus kind"));
        }
    }
    Ok(out)
}

fn split_top(s: &str) -> Vec<&str> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut parts = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_ids_and_sizes() {
        let c = census_corpus(3).unwrap();
        let ids: Vec<&str> = c.iter().map(|i| i.id.as_str()).collect();
        assert_eq!(ids, vec!["census:n=2#0", "census:n=3#0", "census:n=3#1"]);
        assert!(census_corpus(7).is_err());
    }

    #[test]
    fn mixed_corpus_spec() {
        let c = parse_corpus("census:2+ring:prod(zn:2,zn:3)+psr:example-4.6:k=1,u2=u").unwrap();
        let ids: Vec<&str> = c.iter().map(|i| i.id.as_str()).collect();
        assert_eq!(
            ids,
            vec!["census:n=2#0", "prod(zn:2,zn:3)", "example-4.6:k=1,u2=u"]
        );
        assert!(parse_corpus("moon").is_err());
    }

    #[test]
    fn invalid_file_is_named() {
        let dir = std::env::temp_dir().join(format!("posr-corpus-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let bad = dir.join("bad.psr");
        std::fs::write(
            &bad,
            "psr 1\norder 2\nnames 0 1\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n",
        )
        .unwrap();
        let err = file_corpus(&dir).err().unwrap();
        std::fs::remove_dir_all(&dir).unwrap();
        match err {
            HarnessError::InvalidInstance { id, .. } => assert!(id.ends_with("bad.psr")),
            other => panic!("{other:?}"),
        }
    }
}
