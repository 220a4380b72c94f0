//! Brute-force reference computations written straight from the
//! definitions, sharing nothing with the library beyond table lookups.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use posr_core::ringlab::FiniteRing;
use posr_core::PoSemiringTable;

pub fn leq(a: &PoSemiringTable, x: usize, y: usize) -> bool {
    a.add(x, y) == y
}

pub fn zero_divisors(a: &PoSemiringTable) -> Vec<usize> {
    let n = a.order();
    (1..n)
        .filter(|&x| (1..n).any(|y| a.mul(x, y) == 0))
        .collect()
}

pub fn minimals(a: &PoSemiringTable) -> Vec<usize> {
    let n = a.order();
    (1..n)
        .filter(|&x| !(1..n).any(|y| y != x && leq(a, y, x)))
        .collect()
}

pub fn maximals(a: &PoSemiringTable) -> Vec<usize> {
    let n = a.order();
    let top = n - 1;
    (0..top)
        .filter(|&x| !(0..top).any(|y| y != x && leq(a, x, y)))
        .collect()
}

pub fn primes(a: &PoSemiringTable) -> Vec<usize> {
    let n = a.order();
    (0..n - 1)
        .filter(|&p| {
            (0..n).all(|x| (0..n).all(|y| !leq(a, a.mul(x, y), p) || leq(a, x, p) || leq(a, y, p)))
        })
        .collect()
}

/// `{x : x <= p}` is a proper ideal closed under the prime rule.
pub fn lower_set_is_prime_ideal(a: &PoSemiringTable, p: usize) -> bool {
    let n = a.order();
    let inside: Vec<bool> = (0..n).map(|x| leq(a, x, p)).collect();
    if inside.iter().all(|&b| b) {
        return false;
    }
    let closed = (0..n).all(|x| {
        (0..n).all(|y| {
            let sum_ok = !(inside[x] && inside[y]) || inside[a.add(x, y)];
            let mul_ok = !inside[x] || inside[a.mul(x, y)];
            sum_ok && mul_ok
        })
    });
    closed && (0..n).all(|x| (0..n).all(|y| !inside[a.mul(x, y)] || inside[x] || inside[y]))
}

fn idempotent(a: &PoSemiringTable, x: usize) -> bool {
    a.mul(x, x) == x
}

fn has_complemented_idempotent_below(a: &PoSemiringTable, u: usize) -> bool {
    let n = a.order();
    let top = n - 1;
    (1..n).any(|w| {
        idempotent(a, w)
            && leq(a, w, u)
            && (0..n).any(|v| idempotent(a, v) && a.add(w, v) == top && a.mul(w, v) == 0)
    })
}

/// Every nonzero idempotent dominates a nonzero idempotent with an
/// orthogonal idempotent complement.
pub fn condition_c2(a: &PoSemiringTable) -> bool {
    (1..a.order())
        .filter(|&u| idempotent(a, u))
        .all(|u| has_complemented_idempotent_below(a, u))
}

/// Distances in the zero-divisor graph from `src`, keyed by element.
pub fn distances(a: &PoSemiringTable, src: usize) -> Vec<Option<usize>> {
    let z = zero_divisors(a);
    let mut dist = vec![None; a.order()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &w in &z {
            if w != u && a.mul(u, w) == 0 && dist[w].is_none() {
                dist[w] = Some(dist[u].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn clique_number(a: &PoSemiringTable) -> usize {
    let z = zero_divisors(a);
    let mut best = 0;
    for mask in 0u32..(1 << z.len()) {
        let members: Vec<usize> = (0..z.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| z[i])
            .collect();
        let clique = members
            .iter()
            .enumerate()
            .all(|(i, &x)| members[i + 1..].iter().all(|&y| a.mul(x, y) == 0));
        if clique {
            best = best.max(members.len());
        }
    }
    best
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Relabelings of `n` elements fixing the first and the last.
pub fn interior_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(&(1..n - 1).collect::<Vec<_>>())
        .into_iter()
        .map(|mid| {
            let mut p = vec![0];
            p.extend(mid);
            p.push(n - 1);
            p
        })
        .collect()
}

/// Least relabeled encoding over all interior permutations.
fn min_code(tables: &[&[Vec<usize>]], perms: &[Vec<usize>]) -> Vec<usize> {
    let n = tables[0].len();
    perms
        .iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (i, &x) in p.iter().enumerate() {
                inv[x] = i;
            }
            let mut code = Vec::new();
            for t in tables {
                for i in 0..n {
                    for j in 0..n {
                        code.push(inv[t[p[i]][p[j]]]);
                    }
                }
            }
            code
        })
        .min()
        .unwrap()
}

/// Join tables of bounded lattices on `n` elements, one per isomorphism
/// class, by scanning every relation on the interior elements.
pub fn lattices(n: usize) -> Vec<Vec<Vec<usize>>> {
    let m = n - 2;
    let top = n - 1;
    let pairs: Vec<(usize, usize)> = (1..=m)
        .flat_map(|i| (1..=m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let perms = interior_permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
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
        let antisymmetric = (0..n).all(|x| (0..n).all(|y| x == y || !(le[x][y] && le[y][x])));
        let transitive =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(le[x][y] && le[y][z]) || le[x][z])));
        if !antisymmetric || !transitive {
            continue;
        }
        let mut join = vec![vec![0; n]; n];
        let mut lattice = true;
        'outer: for x in 0..n {
            for y in 0..n {
                let ups: Vec<usize> = (0..n).filter(|&z| le[x][z] && le[y][z]).collect();
                match ups.iter().find(|&&z| ups.iter().all(|&w| le[z][w])) {
                    Some(&z) => join[x][y] = z,
                    None => {
                        lattice = false;
                        break 'outer;
                    }
                }
            }
        }
        if lattice && seen.insert(min_code(&[&join], &perms)) {
            out.push(join);
        }
    }
    out
}

fn satisfies_axioms(add: &[Vec<usize>], mul: &[Vec<usize>]) -> bool {
    let n = add.len();
    let top = n - 1;
    for x in 0..n {
        if mul[0][x] != 0 || mul[top][x] != x {
            return false;
        }
        for y in 0..n {
            if mul[x][y] != mul[y][x] {
                return false;
            }
            for z in 0..n {
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]
                    || mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Number of po-semirings of order `n` up to isomorphism: every lattice,
/// every commutative multiplication with absorbing 0 and neutral top.
pub fn census_count(n: usize) -> usize {
    let top = n - 1;
    let perms = interior_permutations(n);
    let cells: Vec<(usize, usize)> = (1..top)
        .flat_map(|i| (i..top).map(move |j| (i, j)))
        .collect();
    let mut seen = BTreeSet::new();
    for add in lattices(n) {
        let mut choice = vec![0usize; cells.len()];
        loop {
            let mut mul = vec![vec![0; n]; n];
            for x in 0..n {
                mul[top][x] = x;
                mul[x][top] = x;
            }
            for (&(i, j), &v) in cells.iter().zip(&choice) {
                mul[i][j] = v;
                mul[j][i] = v;
            }
            if satisfies_axioms(&add, &mul) {
                seen.insert(min_code(&[&add, &mul], &perms));
            }
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < n {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
    }
    seen.len()
}

fn ring_unit(r: &FiniteRing, x: usize) -> bool {
    (0..r.order()).any(|y| r.mul(x, y) == r.one())
}

/// Every ideal, as a sorted member list, built from principal ideals by
/// repeated sums.
pub fn ring_ideals(r: &FiniteRing) -> BTreeSet<Vec<usize>> {
    let n = r.order();
    let principal = |x: usize| -> Vec<usize> {
        let s: BTreeSet<usize> = (0..n).map(|y| r.mul(x, y)).collect();
        s.into_iter().collect()
    };
    let mut all: BTreeSet<Vec<usize>> = (0..n).map(principal).collect();
    loop {
        let current: Vec<Vec<usize>> = all.iter().cloned().collect();
        let mut grew = false;
        for i in &current {
            for j in &current {
                let s: BTreeSet<usize> = i
                    .iter()
                    .flat_map(|&x| j.iter().map(move |&y| (x, y)))
                    .map(|(x, y)| r.add(x, y))
                    .collect();
                grew |= all.insert(s.into_iter().collect());
            }
        }
        if !grew {
            return all;
        }
    }
}

/// The non-units form an ideal.
pub fn is_local(r: &FiniteRing) -> bool {
    let n = r.order();
    let non_units: Vec<usize> = (0..n).filter(|&x| !ring_unit(r, x)).collect();
    non_units
        .iter()
        .all(|&x| non_units.iter().all(|&y| !ring_unit(r, r.add(x, y))))
}

/// An idempotent `e` other than 0 and 1 with `Re` and `R(1 - e)` fields.
pub fn is_product_of_two_fields(r: &FiniteRing) -> bool {
    let n = r.order();
    let one = r.one();
    let is_field_at = |e: usize| {
        let part: Vec<usize> = (0..n)
            .map(|x| r.mul(e, x))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        part.len() >= 2
            && part
                .iter()
                .filter(|&&x| x != 0)
                .all(|&x| part.iter().any(|&y| r.mul(x, y) == e))
    };
    (1..n).filter(|&e| e != one && r.mul(e, e) == e).any(|e| {
        let f = (0..n).find(|&f| r.add(e, f) == one).unwrap();
        is_field_at(e) && is_field_at(f)
    })
}

/// Local with maximal ideal `R alpha`, `alpha^3 = 0` and `alpha^2 != 0`.
pub fn is_local_with_cubic_generator(r: &FiniteRing) -> bool {
    let n = r.order();
    if !is_local(r) {
        return false;
    }
    let non_units: BTreeSet<usize> = (0..n).filter(|&x| !ring_unit(r, x)).collect();
    non_units.iter().any(|&alpha| {
        let sq = r.mul(alpha, alpha);
        let generated: BTreeSet<usize> = (0..n).map(|y| r.mul(alpha, y)).collect();
        sq != 0 && r.mul(sq, alpha) == 0 && generated == non_units
    })
}
