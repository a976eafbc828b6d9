//! `k`-subsets of `[n] = {1, ..., n}` packed into one machine word.
//!
//! Element `i` lives in bit `i - 1`, so the ground set is capped at 64
//! elements. Subsets compare lexicographically by their sorted element lists,
//! which is the canonical vertex order of every Kneser graph in this crate.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::bounds::binom;
use crate::error::{Error, Result};

/// Largest ground set that fits the one-word encoding.
pub const MAX_GROUND: u32 = 64;

/// Default cap on the number of vertices a single enumeration may produce.
pub const DEFAULT_VERTEX_CAP: u64 = 2_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct KSubset {
    mask: u64,
    ground_n: u32,
}

impl KSubset {
    pub fn from_mask(mask: u64, ground_n: u32) -> Result<Self> {
        if ground_n > MAX_GROUND {
            return Err(Error::Capacity(format!(
                "ground set of size {ground_n} exceeds the {MAX_GROUND}-bit encoding"
            )));
        }
        if ground_n < 64 && mask >> ground_n != 0 {
            return Err(Error::Domain(format!("mask {mask:#x} has bits outside [1, {ground_n}]")));
        }
        Ok(Self { mask, ground_n })
    }

    /// Builds a subset from 1-based elements. Duplicates are rejected.
    pub fn from_elements(elements: &[u32], ground_n: u32) -> Result<Self> {
        if ground_n > MAX_GROUND {
            return Err(Error::Capacity(format!(
                "ground set of size {ground_n} exceeds the {MAX_GROUND}-bit encoding"
            )));
        }
        let mut mask = 0u64;
        for &e in elements {
            if e == 0 || e > ground_n {
                return Err(Error::Domain(format!("element {e} not in [1, {ground_n}]")));
            }
            let bit = 1u64 << (e - 1);
            if mask & bit != 0 {
                return Err(Error::Domain(format!("element {e} repeated")));
            }
            mask |= bit;
        }
        Ok(Self { mask, ground_n })
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn ground_n(&self) -> u32 {
        self.ground_n
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, element: u32) -> bool {
        (1..=64).contains(&element) && self.mask & (1u64 << (element - 1)) != 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &KSubset) -> bool {
        self.mask & other.mask == 0
    }

    /// Sorted 1-based elements.
    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let tz = rest.trailing_zeros();
                rest &= rest - 1;
                Some(tz + 1)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.elements().collect()
    }
}

impl Ord for KSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements().cmp(other.elements())
    }
}

impl PartialOrd for KSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elements().join(","))
    }
}

/// All `k`-subsets of `[n]` in canonical order, subject to the default vertex cap.
pub fn enumerate_k_subsets(n: u32, k: u32) -> Result<Vec<KSubset>> {
    enumerate_k_subsets_capped(n, k, DEFAULT_VERTEX_CAP)
}

pub fn enumerate_k_subsets_capped(n: u32, k: u32, vertex_cap: u64) -> Result<Vec<KSubset>> {
    if n > MAX_GROUND {
        return Err(Error::Capacity(format!("n = {n} exceeds the {MAX_GROUND}-element encoding")));
    }
    if k > n {
        return Err(Error::Domain(format!("k = {k} exceeds n = {n}")));
    }
    let count: u128 = binom(n, k)?;
    if count > vertex_cap as u128 {
        return Err(Error::Capacity(format!("C({n},{k}) = {count} exceeds the vertex cap {vertex_cap}")));
    }
    let subsets = (0..n)
        .combinations(k as usize)
        .map(|positions| KSubset { mask: positions.iter().fold(0u64, |m, &p| m | (1u64 << p)), ground_n: n })
        .collect();
    Ok(subsets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(v: &[KSubset]) -> Vec<Vec<u32>> {
        v.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn pairs_of_four() {
        let v = enumerate_k_subsets(4, 2).unwrap();
        assert_eq!(lists(&v), vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
    }

    #[test]
    fn empty_subset() {
        let v = enumerate_k_subsets(5, 0).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].is_empty());
    }

    #[test]
    fn order_is_strict_and_endpoints_fixed() {
        let v = enumerate_k_subsets(10, 5).unwrap();
        assert_eq!(v.len(), 252);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(v[0].to_vec(), vec![1, 2, 3, 4, 5]);
        assert_eq!(v[251].to_vec(), vec![6, 7, 8, 9, 10]);
        assert!(v.iter().all(|s| s.len() == 5));
    }

    #[test]
    fn full_width_ground_set() {
        let v = enumerate_k_subsets(64, 1).unwrap();
        assert_eq!(v.len(), 64);
        assert_eq!(v[63].to_vec(), vec![64]);
        assert!(KSubset::from_mask(u64::MAX, 64).is_ok());
    }

    #[test]
    fn capacity_errors() {
        assert!(matches!(enumerate_k_subsets(65, 2), Err(Error::Capacity(_))));
        assert!(matches!(enumerate_k_subsets_capped(20, 10, 1000), Err(Error::Capacity(_))));
        assert!(matches!(enumerate_k_subsets(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn element_validation() {
        assert!(KSubset::from_elements(&[0, 1], 5).is_err());
        assert!(KSubset::from_elements(&[6], 5).is_err());
        assert!(KSubset::from_elements(&[2, 2], 5).is_err());
        assert!(KSubset::from_mask(0b100000, 5).is_err());
        let s = KSubset::from_elements(&[3, 1], 5).unwrap();
        assert_eq!(s.to_vec(), vec![1, 3]);
        assert_eq!(s.to_string(), "{1,3}");
    }
}
