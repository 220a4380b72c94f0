//! Zero-divisor graphs of commutative multiplication tables with zero.

mod dot;
mod shape;

use serde::Serialize;
use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::table::{CayleyTable, PoSemiringTable};

pub use dot::export_dot;
pub use shape::{
    classify_shape, clique_number, graph_metrics, maximal_cliques, GraphMetrics, GraphShape,
    ShapeTag,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SourceKind {
    Posemiring,
    Ring,
    Semigroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("multiplication is not commutative at ({0}, {1})")]
    NotCommutative(Elem, Elem),
    #[error("zero does not absorb element {0}")]
    ZeroNotAbsorbing(Elem),
}

/// Vertices are the nonzero zero divisors; `x -- y` iff `x != y` and `xy = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZdGraph {
    /// Source element index of each vertex, increasing.
    pub vertices: Vec<Elem>,
    /// Indexed by vertex position, not element index.
    pub adjacency: Vec<Vec<bool>>,
    pub source_kind: SourceKind,
}

impl ZdGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Edges as vertex-position pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let v = self.vertices.len();
        (0..v).flat_map(move |i| {
            (i + 1..v)
                .filter(move |&j| self.adjacency[i][j])
                .map(move |j| (i, j))
        })
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).count()
    }

    /// Vertex position of a source element.
    pub fn position(&self, x: Elem) -> Option<usize> {
        self.vertices.binary_search(&x).ok()
    }

    pub fn contains_triangle(&self) -> bool {
        let v = self.vertices.len();
        (0..v).any(|a| {
            (a + 1..v).any(|b| {
                self.adjacency[a][b]
                    && (b + 1..v).any(|c| self.adjacency[a][c] && self.adjacency[b][c])
            })
        })
    }

    /// A 4-cycle on distinct vertices, not necessarily induced: two distinct
    /// vertices with at least two common neighbours.
    pub fn contains_quadrilateral(&self) -> bool {
        let v = self.vertices.len();
        (0..v).any(|a| {
            (a + 1..v).any(|b| {
                (0..v)
                    .filter(|&c| c != a && c != b && self.adjacency[a][c] && self.adjacency[b][c])
                    .nth(1)
                    .is_some()
            })
        })
    }
}

/// Builds the zero-divisor graph of `mul`, skipping the elements in
/// `exclude` both as vertices and as annihilating partners.
pub fn build_zdgraph(
    mul: &CayleyTable,
    exclude: &[Elem],
    source_kind: SourceKind,
) -> Result<ZdGraph, GraphError> {
    if let Some((x, y)) = mul.commutativity_witness() {
        return Err(GraphError::NotCommutative(x, y));
    }
    let n = mul.order();
    if let Some(x) = (0..n).find(|&x| mul.get(0, x) != 0) {
        return Err(GraphError::ZeroNotAbsorbing(x));
    }
    let mut skip = ElemSet::from_iter_in(n, exclude.iter().copied().filter(|&x| x < n));
    skip.insert(0);
    let vertices: Vec<Elem> = (0..n)
        .filter(|&x| !skip.contains(x) && (0..n).any(|y| !skip.contains(y) && mul.get(x, y) == 0))
        .collect();
    let adjacency = vertices
        .iter()
        .map(|&x| {
            vertices
                .iter()
                .map(|&y| x != y && mul.get(x, y) == 0)
                .collect()
        })
        .collect();
    Ok(ZdGraph {
        vertices,
        adjacency,
        source_kind,
    })
}

/// Zero-divisor graph of a po-semiring's multiplicative semigroup.
pub fn posemiring_zdgraph(a: &PoSemiringTable) -> ZdGraph {
    build_zdgraph(a.mul_table(), &[], SourceKind::Posemiring)
        .expect("po-semiring multiplication is commutative with absorbing zero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z9_graph() {
        let mul = CayleyTable::from_fn(9, |x, y| (x * y) % 9);
        let g = build_zdgraph(&mul, &[], SourceKind::Ring).unwrap();
        assert_eq!(g.vertices, vec![3, 6]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn non_commutative_is_structural() {
        let mul = CayleyTable::from_fn(3, |x, y| if x == 0 || y == 0 { 0 } else { x });
        assert!(matches!(
            build_zdgraph(&mul, &[], SourceKind::Semigroup),
            Err(GraphError::NotCommutative(1, 2))
        ));
    }

    #[test]
    fn exclusion_prunes_partners() {
        // Z_4: 2*2 = 0; excluding 2 leaves no vertices.
        let mul = CayleyTable::from_fn(4, |x, y| (x * y) % 4);
        let g = build_zdgraph(&mul, &[2], SourceKind::Semigroup).unwrap();
        assert!(g.vertices.is_empty());
    }
}
