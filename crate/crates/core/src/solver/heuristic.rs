use crate::certificate::{Certificate, Provenance};
use crate::error::{Error, Result};
use crate::subset::{enumerate_k_subsets, KSubset};

/// Best explicit dissociation set of `K(n,k)` among: the center `I(1)`; all
/// `k`-subsets of `[2k]` (a perfect matching); for `k = 2` the latter is the
/// six pairs inside `{1,2,3,4}`. Ties go to the center.
pub fn heuristic_lower(n: u32, k: u32) -> Result<Certificate> {
    if k < 2 || n < 2 * k {
        return Err(Error::Domain(format!("heuristic needs n >= 2k >= 4, got ({n},{k})")));
    }
    let vertices = enumerate_k_subsets(n, k)?;
    let pick = |keep: &dyn Fn(&KSubset) -> bool| -> Vec<usize> {
        vertices.iter().enumerate().filter(|(_, s)| keep(s)).map(|(i, _)| i).collect()
    };
    let center = pick(&|s| s.contains(1));
    let low_mask = (1u64 << (2 * k)) - 1;
    let matching = pick(&|s| s.mask() & !low_mask == 0);
    let (indices, name) = if center.len() >= matching.len() {
        (center, "center-1")
    } else if k == 2 {
        (matching, "pairs-in-1234")
    } else {
        (matching, "perfect-matching-subgraph")
    };
    Ok(Certificate::new(n, k, 1, indices, Provenance::Construction(name.to_string())))
}
