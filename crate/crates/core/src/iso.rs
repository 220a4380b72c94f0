//! Isomorphism search between po-semiring tables.

use crate::analysis::nilpotency_index;
use crate::elemset::Elem;
use crate::table::PoSemiringTable;

/// Label-independent invariants of one element, used to prune candidate
/// images during search and to group elements when canonicalizing.
pub fn element_invariant(a: &PoSemiringTable, x: Elem) -> Vec<u32> {
    let n = a.order();
    let below = (0..n).filter(|&y| a.leq(y, x)).count();
    let above = (0..n).filter(|&y| a.leq(x, y)).count();
    let zd_degree = (1..n).filter(|&y| y != x && a.mul(x, y) == 0).count();
    let absorbed = (0..n).filter(|&y| a.mul(x, y) == x).count();
    let fixes = (0..n).filter(|&y| a.mul(x, y) == y).count();
    let nil = if x == 0 {
        1
    } else {
        nilpotency_index(a, x).ok().flatten().unwrap_or(0)
    };
    vec![
        below as u32,
        above as u32,
        a.is_idempotent(x) as u32,
        nil as u32,
        zd_degree as u32,
        absorbed as u32,
        fixes as u32,
    ]
}

/// True if `perm` (old index in `a` to index in `b`) carries both tables of
/// `a` onto those of `b`.
pub fn transports(a: &PoSemiringTable, b: &PoSemiringTable, perm: &[Elem]) -> bool {
    let n = a.order();
    if b.order() != n || perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            perm[a.add(x, y)] == b.add(perm[x], perm[y])
                && perm[a.mul(x, y)] == b.mul(perm[x], perm[y])
        })
    })
}

#[derive(Clone)]
struct Partial {
    fwd: Vec<Option<Elem>>,
    bwd: Vec<Option<Elem>>,
    assigned: Vec<Elem>,
}

struct Search<'a> {
    a: &'a PoSemiringTable,
    b: &'a PoSemiringTable,
    inv_a: Vec<Vec<u32>>,
    inv_b: Vec<Vec<u32>>,
}

impl Search<'_> {
    /// Assigns `x -> y` and everything it forces through the tables.
    fn assign(&self, state: &mut Partial, x: Elem, y: Elem) -> bool {
        let mut pending = vec![(x, y)];
        while let Some((x, y)) = pending.pop() {
            match (state.fwd[x], state.bwd[y]) {
                (Some(fy), _) if fy == y => continue,
                (Some(_), _) | (None, Some(_)) => return false,
                (None, None) => {}
            }
            if self.inv_a[x] != self.inv_b[y] {
                return false;
            }
            state.fwd[x] = Some(y);
            state.bwd[y] = Some(x);
            state.assigned.push(x);
            for i in 0..state.assigned.len() {
                let z = state.assigned[i];
                let w = state.fwd[z].expect("assigned");
                pending.push((self.a.add(x, z), self.b.add(y, w)));
                pending.push((self.a.mul(x, z), self.b.mul(y, w)));
            }
        }
        true
    }

    fn extend(&self, state: Partial) -> Option<Partial> {
        let n = self.a.order();
        let Some(x) = (0..n).find(|&x| state.fwd[x].is_none()) else {
            return Some(state);
        };
        for y in 0..n {
            if state.bwd[y].is_some() || self.inv_a[x] != self.inv_b[y] {
                continue;
            }
            let mut next = state.clone();
            if self.assign(&mut next, x, y) {
                if let Some(done) = self.extend(next) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// An index bijection `a -> b` fixing zero and one that transports both
/// tables, if one exists.
pub fn find_isomorphism(a: &PoSemiringTable, b: &PoSemiringTable) -> Option<Vec<Elem>> {
    let n = a.order();
    if b.order() != n {
        return None;
    }
    let search = Search {
        a,
        b,
        inv_a: (0..n).map(|x| element_invariant(a, x)).collect(),
        inv_b: (0..n).map(|x| element_invariant(b, x)).collect(),
    };
    let mut inv_sorted_a = search.inv_a.clone();
    let mut inv_sorted_b = search.inv_b.clone();
    inv_sorted_a.sort();
    inv_sorted_b.sort();
    if inv_sorted_a != inv_sorted_b {
        return None;
    }
    let mut state = Partial {
        fwd: vec![None; n],
        bwd: vec![None; n],
        assigned: Vec::with_capacity(n),
    };
    if !search.assign(&mut state, 0, 0) || !search.assign(&mut state, n - 1, n - 1) {
        return None;
    }
    let done = search.extend(state)?;
    let perm: Vec<Elem> = done.fwd.into_iter().map(|y| y.expect("complete")).collect();
    debug_assert!(transports(a, b, &perm));
    Some(perm)
}

/// All automorphisms, by exhaustive search. Intended for small orders.
pub fn automorphism_count(a: &PoSemiringTable) -> usize {
    let n = a.order();
    let search = Search {
        a,
        b: a,
        inv_a: (0..n).map(|x| element_invariant(a, x)).collect(),
        inv_b: (0..n).map(|x| element_invariant(a, x)).collect(),
    };
    fn count(search: &Search<'_>, state: Partial) -> usize {
        let n = search.a.order();
        let Some(x) = (0..n).find(|&x| state.fwd[x].is_none()) else {
            return 1;
        };
        (0..n)
            .filter(|&y| state.bwd[y].is_none())
            .map(|y| {
                let mut next = state.clone();
                if search.assign(&mut next, x, y) {
                    count(search, next)
                } else {
                    0
                }
            })
            .sum()
    }
    let mut state = Partial {
        fwd: vec![None; n],
        bwd: vec![None; n],
        assigned: Vec::new(),
    };
    assert!(search.assign(&mut state, 0, 0) && search.assign(&mut state, n - 1, n - 1));
    count(&search, state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::table_from_rows;

    fn chain(a2: usize) -> PoSemiringTable {
        table_from_rows(
            &["0", "a", "1"],
            &[&[0, 1, 2], &[1, 1, 2], &[2, 2, 2]],
            &[&[0, 0, 0], &[0, a2, 1], &[0, 1, 2]],
        )
        .unwrap()
    }

    #[test]
    fn the_two_order_three_chains_differ() {
        assert!(find_isomorphism(&chain(0), &chain(1)).is_none());
        assert_eq!(find_isomorphism(&chain(0), &chain(0)), Some(vec![0, 1, 2]));
    }

    #[test]
    fn boolean_square_has_a_swap() {
        // 0, p, q, 1 with p, q complementary atoms
        let sq = table_from_rows(
            &["0", "p", "q", "1"],
            &[&[0, 1, 2, 3], &[1, 1, 3, 3], &[2, 3, 2, 3], &[3, 3, 3, 3]],
            &[&[0, 0, 0, 0], &[0, 1, 0, 1], &[0, 0, 2, 2], &[0, 1, 2, 3]],
        )
        .unwrap();
        assert_eq!(automorphism_count(&sq), 2);
        let swapped = sq.relabel(&[0, 2, 1, 3]).unwrap();
        let perm = find_isomorphism(&sq, &swapped).unwrap();
        assert!(transports(&sq, &swapped, &perm));
    }
}
