//! Cyclic arrangements of `[n]` and counts of family members appearing as
//! contiguous windows.
//!
//! Arrangements are normalised with element 1 in position 0, so there are
//! `(n-1)!` of them; an arrangement and its reflection are distinct.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::subset::KSubset;

/// Largest `n` for which arrangements are enumerated exhaustively.
pub const MAX_ARRANGEMENT_N: u32 = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicArrangement {
    order: Vec<u32>,
}

impl CyclicArrangement {
    /// Validates a permutation of `[n]` and rotates it so it starts with 1.
    pub fn new(mut order: Vec<u32>) -> Result<Self> {
        let n = order.len() as u32;
        if n == 0 || n > 64 {
            return Err(Error::Domain(format!("arrangement length {n} not in 1..=64")));
        }
        let mut seen = 0u64;
        for &e in &order {
            if e == 0 || e > n || seen >> (e - 1) & 1 == 1 {
                return Err(Error::Domain(format!("{order:?} is not a permutation of [{n}]")));
            }
            seen |= 1 << (e - 1);
        }
        let start = order.iter().position(|&e| e == 1).expect("1 present");
        order.rotate_left(start);
        Ok(Self { order })
    }

    pub fn n(&self) -> u32 {
        self.order.len() as u32
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    /// Masks of the `n` cyclic windows of length `k`.
    pub fn window_masks(&self, k: u32) -> Vec<u64> {
        let n = self.order.len();
        let k = k as usize;
        (0..n).map(|start| (0..k).fold(0u64, |m, off| m | 1u64 << (self.order[(start + off) % n] - 1))).collect()
    }
}

/// Iterates all `(n-1)!` normalised arrangements of `[n]`, lexicographically.
pub struct ArrangementIter {
    inner: Box<dyn Iterator<Item = Vec<u32>>>,
}

impl ArrangementIter {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_ARRANGEMENT_N {
            return Err(Error::Capacity(format!(
                "arrangement enumeration supports 1 <= n <= {MAX_ARRANGEMENT_N}, got {n}"
            )));
        }
        let inner = (2..=n).permutations((n - 1) as usize).map(|tail| {
            let mut order = Vec::with_capacity(tail.len() + 1);
            order.push(1);
            order.extend(tail);
            order
        });
        Ok(Self { inner: Box::new(inner) })
    }
}

impl Iterator for ArrangementIter {
    type Item = CyclicArrangement;

    fn next(&mut self) -> Option<Self::Item> {
        self.inner.next().map(|order| CyclicArrangement { order })
    }
}

fn family_masks(family: &[KSubset], k: u32) -> Result<HashSet<u64>> {
    if let Some(s) = family.iter().find(|s| s.len() != k) {
        return Err(Error::Contract(format!("{s} is not a {k}-subset")));
    }
    Ok(family.iter().map(|s| s.mask()).collect())
}

fn count_in(c: &CyclicArrangement, masks: &HashSet<u64>, k: u32) -> usize {
    let windows: HashSet<u64> = c.window_masks(k).into_iter().collect();
    windows.iter().filter(|w| masks.contains(w)).count()
}

/// Number of family members whose elements fill `k` cyclically consecutive
/// positions of `c`, in any order.
pub fn substrings_in_arrangement(c: &CyclicArrangement, family: &[KSubset], k: u32) -> Result<usize> {
    if k == 0 || k > c.n() {
        return Err(Error::Domain(format!("window length {k} not in 1..={}", c.n())));
    }
    Ok(count_in(c, &family_masks(family, k)?, k))
}

/// Maximum of [`substrings_in_arrangement`] over every arrangement of `[n]`,
/// with the first arrangement attaining it.
pub fn max_substrings(n: u32, k: u32, family: &[KSubset]) -> Result<(usize, CyclicArrangement)> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("window length {k} not in 1..={n}")));
    }
    let masks = family_masks(family, k)?;
    let mut best: Option<(usize, CyclicArrangement)> = None;
    for c in ArrangementIter::new(n)? {
        let count = count_in(&c, &masks, k);
        if best.as_ref().is_none_or(|b| count > b.0) {
            best = Some((count, c));
        }
    }
    Ok(best.expect("at least one arrangement"))
}

/// Checks that the (member, arrangement) incidences total
/// `|family| k! (n-k)!` over all `(n-1)!` arrangements.
pub fn double_count_identity(n: u32, k: u32, family: &[KSubset]) -> Result<bool> {
    if k == 0 || k >= n {
        return Err(Error::Domain(format!("window length {k} not in 1..{n}")));
    }
    let masks = family_masks(family, k)?;
    let total: u64 = ArrangementIter::new(n)?.map(|c| count_in(&c, &masks, k) as u64).sum();
    let factorial = |m: u32| (1..=u64::from(m)).product::<u64>();
    Ok(total == masks.len() as u64 * factorial(k) * factorial(n - k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::enumerate_k_subsets;

    fn fam(n: u32, lists: &[&[u32]]) -> Vec<KSubset> {
        lists.iter().map(|l| KSubset::from_elements(l, n).unwrap()).collect()
    }

    #[test]
    fn normalisation() {
        let c = CyclicArrangement::new(vec![3, 1, 2]).unwrap();
        assert_eq!(c.order(), &[1, 2, 3]);
        assert!(CyclicArrangement::new(vec![1, 1, 2]).is_err());
        assert!(CyclicArrangement::new(vec![1, 4, 2]).is_err());
        assert_eq!(ArrangementIter::new(5).unwrap().count(), 24);
        assert_eq!(ArrangementIter::new(1).unwrap().count(), 1);
        assert!(ArrangementIter::new(10).is_err());
    }

    #[test]
    fn substring_counts() {
        let c = CyclicArrangement::new(vec![1, 2, 3, 4, 5]).unwrap();
        let f = fam(5, &[&[1, 2], &[3, 4]]);
        assert_eq!(substrings_in_arrangement(&c, &f, 2).unwrap(), 2);
        let c = CyclicArrangement::new(vec![1, 3, 2, 4, 5]).unwrap();
        assert_eq!(substrings_in_arrangement(&c, &fam(5, &[&[1, 2]]), 2).unwrap(), 0);
        // wrap-around window {5, 1}
        assert_eq!(substrings_in_arrangement(&c, &fam(5, &[&[1, 5]]), 2).unwrap(), 1);
        let all = enumerate_k_subsets(7, 3).unwrap();
        for c in ArrangementIter::new(7).unwrap().take(50) {
            assert_eq!(substrings_in_arrangement(&c, &all, 3).unwrap(), 7);
        }
        assert!(substrings_in_arrangement(&c, &fam(5, &[&[1, 2, 3]]), 2).is_err());
    }

    #[test]
    fn max_over_arrangements() {
        let all = enumerate_k_subsets(4, 2).unwrap();
        let (best, witness) = max_substrings(4, 2, &all).unwrap();
        assert_eq!(best, 4);
        assert_eq!(witness.order(), &[1, 2, 3, 4]);
        let six = fam(5, &[&[1, 2], &[3, 4], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let (best, witness) = max_substrings(5, 2, &six).unwrap();
        assert!(best <= 3);
        assert_eq!(substrings_in_arrangement(&witness, &six, 2).unwrap(), best);
    }

    #[test]
    fn double_counting() {
        assert!(double_count_identity(5, 2, &fam(5, &[&[1, 2]])).unwrap());
        assert!(double_count_identity(6, 2, &[]).unwrap());
        let all = enumerate_k_subsets(6, 3).unwrap();
        assert!(double_count_identity(6, 3, &all).unwrap());
    }
}
