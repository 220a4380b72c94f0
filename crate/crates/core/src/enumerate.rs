//! Exhaustive generation of all po-semirings of a small order, one per
//! isomorphism class, plus a brute-force oracle for cross-checking.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::axioms::verify_axioms;
use crate::elemset::Elem;
use crate::iso::{automorphism_count, element_invariant};
use crate::table::{default_names, CayleyTable, PoSemiringTable, RawTables};

pub const FAST_CAP: usize = 6;
pub const NAIVE_CAP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Lattice-based search with incremental pruning.
    Fast,
    /// Every commutative table pair, filtered by the axioms.
    Naive,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {n} is below 2")]
    TooSmall { n: usize },
    #[error("order {n} exceeds the {mode:?} cap {cap}")]
    CapExceeded { n: usize, cap: usize, mode: Mode },
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusResult {
    pub order: usize,
    pub mode: Mode,
    pub count_up_to_iso: usize,
    /// Tables on the fixed labels 0 and 1, counted without identification.
    pub count_labeled: usize,
    /// Canonical representatives, in increasing canonical-form order.
    pub instances: Vec<PoSemiringTable>,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

fn all_orders(class: &[Elem]) -> Vec<Vec<Elem>> {
    if class.len() <= 1 {
        return vec![class.to_vec()];
    }
    (0..class.len())
        .flat_map(|i| {
            let mut rest = class.to_vec();
            let head = rest.remove(i);
            all_orders(&rest).into_iter().map(move |mut tail| {
                tail.insert(0, head);
                tail
            })
        })
        .collect()
}

/// Calls `visit` with every concatenation of one ordering per class.
fn permutations_within(classes: &[Vec<Elem>], mut visit: impl FnMut(&[Elem])) {
    let orders: Vec<Vec<Vec<Elem>>> = classes.iter().map(|c| all_orders(c)).collect();
    let mut choice = vec![0usize; classes.len()];
    let mut slots = Vec::new();
    loop {
        slots.clear();
        for (ci, &k) in choice.iter().enumerate() {
            slots.extend_from_slice(&orders[ci][k]);
        }
        visit(&slots);
        let mut ci = 0;
        loop {
            if ci == choice.len() {
                return;
            }
            choice[ci] += 1;
            if choice[ci] < orders[ci].len() {
                break;
            }
            choice[ci] = 0;
            ci += 1;
        }
    }
}

fn encode(tables: &[&CayleyTable], slots: &[Elem]) -> Vec<u8> {
    let n = slots.len();
    let mut pos = vec![0usize; n];
    for (i, &x) in slots.iter().enumerate() {
        pos[x] = i;
    }
    let mut out = Vec::with_capacity(1 + tables.len() * n * n);
    out.push(n as u8);
    for t in tables {
        for &x in slots {
            for &y in slots {
                out.push(pos[t.get(x, y)] as u8);
            }
        }
    }
    out
}

/// Minimal encoding of `tables` over the relabelings that keep elements
/// sorted by `invariant`, together with the minimizing order of elements.
fn minimal_encoding(
    n: usize,
    tables: &[&CayleyTable],
    invariant: impl Fn(Elem) -> Vec<u32>,
) -> (Vec<u8>, Vec<Elem>) {
    let mut keyed: Vec<(Vec<u32>, Elem)> = (0..n).map(|x| (invariant(x), x)).collect();
    keyed.sort();
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    for (i, (key, x)) in keyed.iter().enumerate() {
        if i > 0 && keyed[i - 1].0 == *key {
            classes.last_mut().expect("nonempty").push(*x);
        } else {
            classes.push(vec![*x]);
        }
    }
    let mut best: Option<(Vec<u8>, Vec<Elem>)> = None;
    permutations_within(&classes, |slots| {
        let code = encode(tables, slots);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, slots.to_vec()));
        }
    });
    best.expect("at least one ordering")
}

/// Label-independent byte string: equal exactly for isomorphic instances.
pub fn canonical_form(a: &PoSemiringTable) -> Vec<u8> {
    minimal_encoding(a.order(), &[a.add_table(), a.mul_table()], |x| {
        element_invariant(a, x)
    })
    .0
}

/// The canonical relabeling of `a`, with default names.
pub fn canonicalize(a: &PoSemiringTable) -> PoSemiringTable {
    let n = a.order();
    let (_, slots) = minimal_encoding(n, &[a.add_table(), a.mul_table()], |x| {
        element_invariant(a, x)
    });
    let mut perm = vec![0; n];
    for (i, &x) in slots.iter().enumerate() {
        perm[x] = i;
    }
    let relabeled = a
        .relabel(&perm)
        .expect("invariant order fixes zero and one");
    PoSemiringTable::from_tables(
        default_names(n),
        relabeled.add_table().clone(),
        relabeled.mul_table().clone(),
    )
    .expect("renaming keeps validity")
}

fn leq_of(join: &CayleyTable, x: Elem, y: Elem) -> bool {
    join.get(x, y) == y
}

/// Join tables of all lattices on `n` elements with bottom 0 and top
/// `n - 1`, one per isomorphism class.
pub fn enumerate_lattices(n: usize) -> Vec<CayleyTable> {
    assert!(n >= 2);
    let top = n - 1;
    // Natural labeling: x < y only when x < y as indices.
    let pairs: Vec<(Elem, Elem)> = (1..top)
        .flat_map(|i| (i + 1..top).map(move |j| (i, j)))
        .collect();
    let mut found: BTreeMap<Vec<u8>, CayleyTable> = BTreeMap::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut le = vec![vec![false; n]; n];
        for x in 0..n {
            le[x][x] = true;
            le[0][x] = true;
            le[x][top] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                le[i][j] = true;
            }
        }
        let transitive =
            (0..n).all(|x| (0..n).all(|y| !le[x][y] || (0..n).all(|z| !le[y][z] || le[x][z])));
        if !transitive {
            continue;
        }
        let mut join = vec![vec![usize::MAX; n]; n];
        let mut lattice = true;
        'outer: for x in 0..n {
            for y in 0..n {
                let ubs: Vec<Elem> = (0..n).filter(|&z| le[x][z] && le[y][z]).collect();
                match ubs.iter().find(|&&z| ubs.iter().all(|&w| le[z][w])) {
                    Some(&z) => join[x][y] = z,
                    None => {
                        lattice = false;
                        break 'outer;
                    }
                }
            }
        }
        if !lattice {
            continue;
        }
        let table = CayleyTable::from_fn(n, |x, y| join[x][y]);
        let (code, _) = minimal_encoding(n, &[&table], |x| {
            let below = (0..n).filter(|&y| leq_of(&table, y, x)).count() as u32;
            let above = (0..n).filter(|&y| leq_of(&table, x, y)).count() as u32;
            vec![below, above]
        });
        found.entry(code).or_insert(table);
    }
    found.into_values().collect()
}

/// Backtracking over the interior cells of a multiplication table for one
/// fixed join table.
struct MulSearch<'a> {
    n: usize,
    join: &'a CayleyTable,
    meet: Vec<Vec<Elem>>,
    cells: Vec<(Elem, Elem)>,
    mul: Vec<Vec<Option<Elem>>>,
}

impl MulSearch<'_> {
    fn get(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.mul[x][y]
    }

    fn consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.get(x, y) else { continue };
                for z in 0..n {
                    if let (Some(l), Some(yz)) = (self.get(xy, z), self.get(y, z)) {
                        if let Some(r) = self.get(x, yz) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                    if let (Some(xz), Some(lhs)) =
                        (self.get(x, z), self.get(x, self.join.get(y, z)))
                    {
                        if lhs != self.join.get(xy, xz) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize, out: &mut Vec<CayleyTable>) {
        if k == self.cells.len() {
            out.push(CayleyTable::from_fn(self.n, |x, y| {
                self.mul[x][y].expect("complete")
            }));
            return;
        }
        let (x, y) = self.cells[k];
        let m = self.meet[x][y];
        for z in 0..self.n {
            if !leq_of(self.join, z, m) {
                continue;
            }
            self.mul[x][y] = Some(z);
            self.mul[y][x] = Some(z);
            if self.consistent() {
                self.run(k + 1, out);
            }
        }
        self.mul[x][y] = None;
        self.mul[y][x] = None;
    }
}

fn multiplications(join: &CayleyTable) -> Vec<CayleyTable> {
    let n = join.order();
    let top = n - 1;
    let meet = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    (0..n)
                        .filter(|&z| leq_of(join, z, x) && leq_of(join, z, y))
                        .find(|&z| {
                            (0..n).all(|w| {
                                !(leq_of(join, w, x) && leq_of(join, w, y)) || leq_of(join, w, z)
                            })
                        })
                        .expect("lattice has meets")
                })
                .collect()
        })
        .collect();
    let mut mul = vec![vec![None; n]; n];
    for x in 0..n {
        mul[0][x] = Some(0);
        mul[x][0] = Some(0);
        mul[top][x] = Some(x);
        mul[x][top] = Some(x);
    }
    let cells = (1..top)
        .flat_map(|x| (x..top).map(move |y| (x, y)))
        .collect();
    let mut search = MulSearch {
        n,
        join,
        meet,
        cells,
        mul,
    };
    let mut out = Vec::new();
    search.run(0, &mut out);
    out
}

fn fast_candidates(n: usize) -> Vec<PoSemiringTable> {
    enumerate_lattices(n)
        .par_iter()
        .flat_map_iter(|join| {
            multiplications(join).into_iter().map(move |mul| {
                PoSemiringTable::from_tables(default_names(n), join.clone(), mul)
                    .expect("search emits valid tables")
            })
        })
        .collect()
}

fn naive_candidates(n: usize) -> Vec<PoSemiringTable> {
    let top = n - 1;
    let cells: Vec<(Elem, Elem)> = (1..top)
        .flat_map(|x| (x..top).map(move |y| (x, y)))
        .collect();
    let free = 2 * cells.len();
    let total = n.pow(free as u32);
    (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut add = vec![vec![0; n]; n];
            let mut mul = vec![vec![0; n]; n];
            for x in 0..n {
                add[0][x] = x;
                add[x][0] = x;
                add[top][x] = top;
                add[x][top] = top;
                mul[top][x] = x;
                mul[x][top] = x;
            }
            let mut c = code;
            for &(x, y) in &cells {
                add[x][y] = c % n;
                add[y][x] = c % n;
                c /= n;
            }
            for &(x, y) in &cells {
                mul[x][y] = c % n;
                mul[y][x] = c % n;
                c /= n;
            }
            let raw = RawTables {
                names: default_names(n),
                add,
                mul,
            };
            let report = verify_axioms(&raw).expect("well-formed candidate");
            report
                .valid
                .then(|| PoSemiringTable::from_raw(&raw).expect("valid candidate"))
        })
        .collect()
}

/// All po-semirings of order `n` up to isomorphism.
pub fn enumerate_posemirings(n: usize, mode: Mode) -> Result<CensusResult, EnumerateError> {
    if n < 2 {
        return Err(EnumerateError::TooSmall { n });
    }
    let cap = match mode {
        Mode::Fast => FAST_CAP,
        Mode::Naive => NAIVE_CAP,
    };
    if n > cap {
        return Err(EnumerateError::CapExceeded { n, cap, mode });
    }
    let start = Instant::now();
    let candidates = match mode {
        Mode::Fast => fast_candidates(n),
        Mode::Naive => naive_candidates(n),
    };
    let raw_count = candidates.len();
    let keyed: Vec<(Vec<u8>, PoSemiringTable)> = candidates
        .into_par_iter()
        .map(|t| (canonical_form(&t), t))
        .collect();
    let mut classes: BTreeMap<Vec<u8>, PoSemiringTable> = BTreeMap::new();
    for (code, t) in keyed {
        classes.entry(code).or_insert(t);
    }
    let instances: Vec<PoSemiringTable> = classes.into_values().map(|t| canonicalize(&t)).collect();
    // The naive search visits every labeled table once; the fast search
    // sees only some labelings, so it counts orbits instead.
    let count_labeled = match mode {
        Mode::Naive => raw_count,
        Mode::Fast => {
            let interior: usize = (1..=n - 2).product();
            instances
                .par_iter()
                .map(|t| interior / automorphism_count(t))
                .sum()
        }
    };
    Ok(CensusResult {
        order: n,
        mode,
        count_up_to_iso: instances.len(),
        count_labeled,
        instances,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::find_isomorphism;

    #[test]
    fn small_orders() {
        assert_eq!(
            enumerate_posemirings(2, Mode::Fast)
                .unwrap()
                .count_up_to_iso,
            1
        );
        let three = enumerate_posemirings(3, Mode::Fast).unwrap();
        assert_eq!(three.count_up_to_iso, 2);
        assert_eq!(three.count_labeled, 2);
        assert!(find_isomorphism(&three.instances[0], &three.instances[1]).is_none());
    }

    #[test]
    fn caps() {
        assert!(matches!(
            enumerate_posemirings(5, Mode::Naive),
            Err(EnumerateError::CapExceeded { cap: 4, .. })
        ));
        assert!(enumerate_posemirings(7, Mode::Fast).is_err());
        assert!(enumerate_posemirings(1, Mode::Fast).is_err());
    }

    #[test]
    fn lattice_counts() {
        let counts: Vec<usize> = (2..=6).map(|n| enumerate_lattices(n).len()).collect();
        // Independent brute force for n <= 5 is in the integration tests.
        assert_eq!(counts[..3], [1, 1, 2]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = crate::constructions::example_2_6(1).unwrap();
        let b = a.relabel(&[0, 2, 1, 3]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        let c = crate::constructions::boolean_power(2).unwrap();
        let d = c.relabel(&[0, 2, 1, 3]).unwrap();
        assert_eq!(canonical_form(&c), canonical_form(&d));
        assert_eq!(canonical_form(&canonicalize(&c)), canonical_form(&c));
    }
}
