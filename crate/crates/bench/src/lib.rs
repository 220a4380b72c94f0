//! Inputs shared by the benchmarks.

use posr_core::enumerate::{enumerate_posemirings, Mode};
use posr_core::ringlab::{make_ring, FiniteRing};
use posr_core::PoSemiringTable;

/// Every census member of the given order.
pub fn census(n: usize) -> Vec<PoSemiringTable> {
    enumerate_posemirings(n, Mode::Fast)
        .expect("order within the fast cap")
        .instances
}

/// Rings with many ideals relative to their size.
pub fn rings() -> Vec<(&'static str, FiniteRing)> {
    ["zn:64", "zn:60", "prod(zn:4,zn:8)", "prod(zpx:2:0:0,zn:9)"]
        .into_iter()
        .map(|s| (s, make_ring(s).expect("valid ring spec")))
        .collect()
}
