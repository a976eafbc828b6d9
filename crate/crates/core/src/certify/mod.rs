//! Certificate checks and the structural facts the bounds rest on.

mod cyclic;
mod matching;
mod odd;

use crate::graph::{GenericGraph, VertexSet};

pub use cyclic::{
    double_count_identity, max_substrings, substrings_in_arrangement, ArrangementIter, CyclicArrangement,
    MAX_ARRANGEMENT_N,
};
pub use matching::{find_x_matching, MatchingResult};
pub use odd::{odd_expansion_check, OddExpansion};

/// True iff every vertex of `set` has at most `d` neighbours inside `set`.
pub fn check_max_degree(g: &GenericGraph, set: &VertexSet, d: usize) -> bool {
    set.ones().all(|v| v < g.order() && g.neighbors(v).intersection_count(set) <= d)
}

/// True iff removing `cover` leaves no path on three vertices, i.e. no
/// remaining vertex keeps two remaining neighbours.
pub fn check_p3_cover(g: &GenericGraph, cover: &VertexSet) -> bool {
    (0..g.order())
        .filter(|&v| !cover.contains(v))
        .all(|v| g.neighbors(v).ones().filter(|&u| !cover.contains(u)).nth(1).is_none())
}

/// `V \ set`.
pub fn complement(g: &GenericGraph, set: &VertexSet) -> VertexSet {
    let mut out = g.full_set();
    out.difference_with(set);
    out
}
