use std::sync::OnceLock;

use crate::analysis::{analyze_elements, check_conditions, ConditionReport, ElementAnalysis};
use crate::constructions::{direct_product, recognize_small_z, ConstructionError, SmallZ};
use crate::elemset::{Elem, ElemSet};
use crate::graphs::{classify_shape, maximal_cliques, posemiring_zdgraph, GraphShape, ZdGraph};
use crate::ringlab::{
    ideal_semiring, radicals, two_field_criteria, FiniteRing, IdealSemiring, Radicals, RingError,
    TwoFieldCriteria,
};
use crate::table::PoSemiringTable;

/// One po-semiring with its derived structure computed once.
pub struct PsrCtx {
    pub a: PoSemiringTable,
    pub analysis: ElementAnalysis,
    pub conditions: ConditionReport,
    pub graph: ZdGraph,
    pub shape: GraphShape,
    lower_sets: Vec<ElemSet>,
    cliques: OnceLock<Vec<Vec<Elem>>>,
    small_z: OnceLock<Result<SmallZ, ConstructionError>>,
}

impl PsrCtx {
    pub fn new(a: PoSemiringTable) -> Self {
        let analysis = analyze_elements(&a);
        let conditions = check_conditions(&a);
        let graph = posemiring_zdgraph(&a);
        let shape = classify_shape(&graph);
        let n = a.order();
        let lower_sets = (0..n)
            .map(|u| ElemSet::from_iter_in(n, (0..n).filter(|&x| a.leq(x, u))))
            .collect();
        PsrCtx {
            a,
            analysis,
            conditions,
            graph,
            shape,
            lower_sets,
            cliques: OnceLock::new(),
            small_z: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.a.order()
    }

    pub fn z_count(&self) -> usize {
        self.analysis.zero_divisors.len()
    }

    pub fn in_z(&self, x: Elem) -> bool {
        self.analysis.zero_divisors.contains(x)
    }

    pub fn lower_set(&self, u: Elem) -> &ElemSet {
        &self.lower_sets[u]
    }

    /// Nonzero nilpotent elements exist.
    pub fn has_nilpotent(&self) -> bool {
        (1..self.order()).any(|x| self.analysis.is_nilpotent(x))
    }

    /// Maximal cliques of the zero-divisor graph, as element indices.
    pub fn cliques(&self) -> &[Vec<Elem>] {
        self.cliques.get_or_init(|| {
            maximal_cliques(&self.graph)
                .into_iter()
                .map(|k| k.into_iter().map(|i| self.graph.vertices[i]).collect())
                .collect()
        })
    }

    pub fn small_z(&self) -> &Result<SmallZ, ConstructionError> {
        self.small_z.get_or_init(|| recognize_small_z(&self.a))
    }

    /// `x y = 0` with `x != y`, both nonzero: adjacency by element index.
    pub fn adjacent(&self, x: Elem, y: Elem) -> bool {
        x != y && x != 0 && y != 0 && self.a.mul(x, y) == 0
    }
}

/// Two factors and their direct product.
pub struct PairCtx {
    pub left: PoSemiringTable,
    pub right: PoSemiringTable,
    pub left_z: usize,
    pub right_z: usize,
    pub left_nilpotent: bool,
    pub right_nilpotent: bool,
    pub product: PsrCtx,
}

impl PairCtx {
    pub fn new(left: PoSemiringTable, right: PoSemiringTable) -> Self {
        let l = PsrCtx::new(left.clone());
        let r = PsrCtx::new(right.clone());
        PairCtx {
            product: PsrCtx::new(direct_product(&left, &right)),
            left_z: l.z_count(),
            right_z: r.z_count(),
            left_nilpotent: l.has_nilpotent(),
            right_nilpotent: r.has_nilpotent(),
            left,
            right,
        }
    }
}

/// A finite ring with its ideal po-semiring.
pub struct RingCtx {
    pub ring: FiniteRing,
    pub ideals: Result<(IdealSemiring, PsrCtx), RingError>,
    pub radicals: Radicals,
    pub criteria: Result<TwoFieldCriteria, RingError>,
}

impl RingCtx {
    pub fn new(ring: FiniteRing) -> Self {
        let ideals = ideal_semiring(&ring).map(|is| {
            let ctx = PsrCtx::new(is.table.clone());
            (is, ctx)
        });
        RingCtx {
            radicals: radicals(&ring),
            criteria: two_field_criteria(&ring),
            ideals,
            ring,
        }
    }

    pub fn semiring(&self) -> Result<&(IdealSemiring, PsrCtx), String> {
        self.ideals.as_ref().map_err(|e| e.to_string())
    }
}
