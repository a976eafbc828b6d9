//! Closed-form bounds and known exact values for the dissociation number of
//! `K(n,k)`.
//!
//! Every function is generic over an exact unsigned integer type so the same
//! formulas can be evaluated with machine words or with `BigUint`. All
//! arithmetic is checked; an overflow surfaces as [`Error::Overflow`] and is
//! never wrapped.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact unsigned integer backend for bound evaluation.
pub trait ExactInt:
    Clone + Ord + Debug + Display + Integer + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + ToPrimitive
{
}

impl<T> ExactInt for T where
    T: Clone + Ord + Debug + Display + Integer + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + ToPrimitive
{
}

fn lift<T: ExactInt>(v: u64) -> T {
    // every backend in use holds at least 64 bits
    T::from_u64(v).expect("integer backend narrower than u64")
}

fn add<T: ExactInt>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or_else(|| Error::Overflow(format!("{a} + {b}")))
}

fn sub<T: ExactInt>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or_else(|| Error::Overflow(format!("{a} - {b} underflows")))
}

fn mul<T: ExactInt>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or_else(|| Error::Overflow(format!("{a} * {b}")))
}

/// Exact `C(n, k)`, zero when `k > n`.
///
/// Uses the multiplicative recurrence; when a product would overflow the
/// step is reduced by a gcd first, so only a result that does not fit is
/// reported as overflow.
pub fn binom<T: ExactInt>(n: u32, k: u32) -> Result<T> {
    if k > n {
        return Ok(T::zero());
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        let num: T = lift(u64::from(n - i));
        let den: T = lift(u64::from(i + 1));
        // acc * num is divisible by den: C(n, i) (n - i) = C(n, i + 1) (i + 1)
        if let Some(prod) = acc.checked_mul(&num) {
            acc = prod / den;
            continue;
        }
        let g = acc.gcd(&den);
        let reduced_den = den / g.clone();
        // reduced_den is coprime to acc / g, hence divides num
        let factor = num / reduced_den;
        acc = mul(&(acc / g), &factor)?;
    }
    Ok(acc)
}

fn check_kneser(n: u32, k: u32, min_k: u32) -> Result<()> {
    if k < min_k {
        return Err(Error::Domain(format!("k = {k} must be at least {min_k}")));
    }
    if n < 2 * k {
        return Err(Error::Domain(format!("n = {n} is smaller than 2k = {}", 2 * k)));
    }
    Ok(())
}

/// Independence number `C(n-1, k-1)` of `K(n,k)`, attained by a center.
pub fn alpha_kneser<T: ExactInt>(n: u32, k: u32) -> Result<T> {
    check_kneser(n, k, 1)?;
    binom(n - 1, k - 1)
}

/// `alpha <= diss <= 2 alpha`, valid for every graph.
pub fn sandwich<T: ExactInt>(alpha: &T) -> Result<(T, T)> {
    Ok((alpha.clone(), add(alpha, alpha)?))
}

/// `C(2k, k)`: the induced copy of `K(2k,k)` is a perfect matching.
pub fn subgraph_lower<T: ExactInt>(n: u32, k: u32) -> Result<T> {
    check_kneser(n, k, 0)?;
    binom(2 * k, k)
}

/// Number of vertices outside `N[x] ∪ N[y]` for an edge `xy`, as the double
/// sum over how many elements a vertex takes from outside `x ∪ y` (`i`) and
/// from `x` (`j`).
pub fn edge_nonneighbor_count<T: ExactInt>(n: u32, k: u32) -> Result<T> {
    check_kneser(n, k, 2)?;
    let outside = n - 2 * k;
    let mut total = T::zero();
    for i in 0..=k - 2 {
        let mut inner = T::zero();
        for j in 1..=k - i - 1 {
            let term = mul(&binom::<T>(k, j)?, &binom::<T>(k, k - j - i)?)?;
            inner = add(&inner, &term)?;
        }
        let weighted = mul(&binom::<T>(outside, i)?, &inner)?;
        total = add(&total, &weighted)?;
    }
    Ok(total)
}

/// Inclusion-exclusion form `C(n,k) - 2 C(n-k,k) + C(n-2k,k)` of
/// [`edge_nonneighbor_count`].
pub fn edge_nonneighbor_closed_form<T: ExactInt>(n: u32, k: u32) -> Result<T> {
    check_kneser(n, k, 2)?;
    let all = binom::<T>(n, k)?;
    let one_side = binom::<T>(n - k, k)?;
    let both = binom::<T>(n - 2 * k, k)?;
    sub(&add(&all, &both)?, &add(&one_side, &one_side)?)
}

/// Largest possible size of a dissociation set that contains an edge.
pub fn nonindependent_upper<T: ExactInt>(n: u32, k: u32) -> Result<T> {
    add(&lift(2), &edge_nonneighbor_count::<T>(n, k)?)
}

/// `max(alpha, 2 + |U|)`: a dissociation set is either independent or holds an edge.
pub fn combined_upper<T: ExactInt>(n: u32, k: u32) -> Result<T> {
    let alpha = alpha_kneser::<T>(n, k)?;
    let edge = nonindependent_upper::<T>(n, k)?;
    Ok(alpha.max(edge))
}

/// Scan ceiling for [`n0prime`].
pub fn n0prime_scan_cap(k: u32) -> u32 {
    10 * k + 64
}

/// Smallest `n >= 2k` from which `alpha(K(n,k)) >= 2 + |U|` holds.
///
/// The inequality is checked at every `n` up to the scan cap; if it fails
/// again after first holding the result is a search failure instead of a
/// value.
pub fn n0prime<T: ExactInt>(k: u32) -> Result<u32> {
    if k < 2 {
        return Err(Error::Domain(format!("k = {k} must be at least 2")));
    }
    let cap = n0prime_scan_cap(k);
    let mut first = None;
    for n in 2 * k..=cap {
        let holds = alpha_kneser::<T>(n, k)? >= nonindependent_upper::<T>(n, k)?;
        match (first, holds) {
            (None, true) => first = Some(n),
            (Some(start), false) => {
                return Err(Error::SearchFailure(format!("inequality holds at n = {start} but fails again at n = {n}")))
            }
            _ => {}
        }
    }
    first.ok_or_else(|| Error::SearchFailure(format!("no n <= {cap} satisfies the inequality for k = {k}")))
}

/// Lower bound `2k + 2` on the threshold from which `diss = alpha`.
pub fn n0_lower(k: u32) -> Result<u32> {
    if k < 2 {
        return Err(Error::Domain(format!("k = {k} must be at least 2")));
    }
    Ok(2 * k + 2)
}

/// A bound known as an exact rational, floored to the integer that bounds
/// `diss`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalBound<T: ExactInt> {
    pub value: T,
    pub exact: Ratio<T>,
}

impl<T: ExactInt> RationalBound<T> {
    fn new(numer: T, denom: T) -> Self {
        let exact = Ratio::new(numer, denom);
        Self { value: exact.floor().to_integer(), exact }
    }
}

/// Cyclic-arrangement bound `(k+1)/k * C(n-1,k-1)`, applicable when `n > 3k - 2`.
pub fn katona_upper_large_r<T: ExactInt>(n: u32, k: u32) -> Result<Option<RationalBound<T>>> {
    check_kneser(n, k, 1)?;
    if n + 2 <= 3 * k {
        return Ok(None);
    }
    let alpha = alpha_kneser::<T>(n, k)?;
    let numer = mul(&lift(u64::from(k) + 1), &alpha)?;
    Ok(Some(RationalBound::new(numer, lift(u64::from(k)))))
}

/// Cyclic-arrangement bound for `n = 2k + r` with `1 <= r <= k - 2`:
/// `2 (rk + 2r + k + 1) / (k (2r + 1)) * C(n-1,k-1)`.
///
/// Evaluated exactly as displayed, i.e. with `k / (2r+1)` double points
/// rather than the ceiling.
pub fn katona_upper_small_r<T: ExactInt>(n: u32, k: u32) -> Result<Option<RationalBound<T>>> {
    check_kneser(n, k, 1)?;
    let r = n - 2 * k;
    if r < 1 || r + 2 > k {
        return Ok(None);
    }
    let alpha = alpha_kneser::<T>(n, k)?;
    let (r, k) = (u64::from(r), u64::from(k));
    let coefficient = 2 * (r * k + 2 * r + k + 1);
    let numer = mul(&lift(coefficient), &alpha)?;
    Ok(Some(RationalBound::new(numer, lift(k * (2 * r + 1)))))
}

/// Where a known exact value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExactSource {
    /// `n = 2k`: the whole graph is a perfect matching.
    PerfectMatching,
    /// `n = 2k + 1`: the odd graph, `diss = C(2k, k)`.
    OddGraph,
    /// `k = 2`, `n >= 5`: `diss = max(n - 1, 6)`.
    PairsFormula,
    /// `k = 3`, `n >= 8`: `diss = alpha`.
    TriplesThreshold,
    /// Best lower bound meets best upper bound.
    BoundClosure,
}

impl ExactSource {
    pub fn name(&self) -> &'static str {
        match self {
            ExactSource::PerfectMatching => "perfect-matching",
            ExactSource::OddGraph => "odd-graph",
            ExactSource::PairsFormula => "pairs-formula",
            ExactSource::TriplesThreshold => "triples-threshold",
            ExactSource::BoundClosure => "bound-closure",
        }
    }
}

impl Display for ExactSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact `diss(K(n,k))` when a proven formula covers `(n, k)` or the bound
/// interval is closed.
pub fn known_exact<T: ExactInt>(n: u32, k: u32) -> Result<Option<(T, ExactSource)>> {
    check_kneser(n, k, 2)?;
    if n == 2 * k {
        return Ok(Some((binom(n, k)?, ExactSource::PerfectMatching)));
    }
    if n == 2 * k + 1 {
        return Ok(Some((binom(2 * k, k)?, ExactSource::OddGraph)));
    }
    if k == 2 {
        return Ok(Some((lift(u64::from(n - 1).max(6)), ExactSource::PairsFormula)));
    }
    if k == 3 && n >= 8 {
        return Ok(Some((alpha_kneser(n, k)?, ExactSource::TriplesThreshold)));
    }
    let (lower, upper) = collect_bounds::<T>(n, k)?;
    let lo = lower.iter().map(|b| &b.value).max().expect("lower bounds nonempty");
    let hi = upper.iter().map(|b| &b.value).min().expect("upper bounds nonempty");
    if lo == hi {
        return Ok(Some((lo.clone(), ExactSource::BoundClosure)));
    }
    Ok(None)
}

/// A named bound value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry<T: ExactInt> {
    pub name: &'static str,
    pub value: T,
    /// Unfloored value for bounds that are rational.
    pub rational: Option<Ratio<T>>,
    /// Assembled from a case split rather than stated as a closed formula.
    pub derived: bool,
}

impl<T: ExactInt> BoundEntry<T> {
    fn plain(name: &'static str, value: T) -> Self {
        Self { name, value, rational: None, derived: false }
    }
}

pub const LOWER_CENTER: &str = "center";
pub const LOWER_MATCHING: &str = "perfect-matching-subgraph";
pub const UPPER_TWICE_ALPHA: &str = "twice-alpha";
pub const UPPER_KATONA: &str = "cyclic-arrangement";
pub const UPPER_KATONA_SMALL_R: &str = "cyclic-arrangement-small-r";
pub const UPPER_EDGE_SPLIT: &str = "edge-split";

type BoundLists<T> = (Vec<BoundEntry<T>>, Vec<BoundEntry<T>>, Vec<&'static str>);

fn collect_all<T: ExactInt>(n: u32, k: u32) -> Result<BoundLists<T>> {
    let alpha = alpha_kneser::<T>(n, k)?;
    let lower =
        vec![BoundEntry::plain(LOWER_CENTER, alpha.clone()), BoundEntry::plain(LOWER_MATCHING, subgraph_lower(n, k)?)];
    let mut upper = vec![BoundEntry::plain(UPPER_TWICE_ALPHA, sandwich(&alpha)?.1)];
    let mut not_applicable = Vec::new();
    for (name, bound) in
        [(UPPER_KATONA, katona_upper_large_r::<T>(n, k)?), (UPPER_KATONA_SMALL_R, katona_upper_small_r::<T>(n, k)?)]
    {
        match bound {
            Some(b) => upper.push(BoundEntry { name, value: b.value, rational: Some(b.exact), derived: false }),
            None => not_applicable.push(name),
        }
    }
    upper.push(BoundEntry { name: UPPER_EDGE_SPLIT, value: combined_upper(n, k)?, rational: None, derived: true });
    Ok((lower, upper, not_applicable))
}

/// Lower and upper bound lists.
type LowerUpper<T> = (Vec<BoundEntry<T>>, Vec<BoundEntry<T>>);

fn collect_bounds<T: ExactInt>(n: u32, k: u32) -> Result<LowerUpper<T>> {
    let (lower, upper, _) = collect_all(n, k)?;
    Ok((lower, upper))
}

/// Everything known about `diss(K(n,k))` from closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport<T: ExactInt> {
    pub n: u32,
    pub k: u32,
    /// `n - 2k`.
    pub r: u32,
    pub alpha: T,
    pub lower: Vec<BoundEntry<T>>,
    pub upper: Vec<BoundEntry<T>>,
    /// Bounds whose preconditions fail for `(n, k)`.
    pub not_applicable: Vec<&'static str>,
    pub exact: Option<(T, ExactSource)>,
    pub best_lower: T,
    pub best_upper: T,
    pub n0_lower: u32,
    /// `None` when the scan fails (never observed for small `k`).
    pub n0prime: Option<u32>,
}

impl<T: ExactInt> BoundReport<T> {
    pub fn interval(&self) -> (&T, &T) {
        (&self.best_lower, &self.best_upper)
    }

    /// Checks the report's internal consistency: every lower bound lies below
    /// every upper bound and any exact value lies inside the interval.
    pub fn is_consistent(&self) -> bool {
        let lo_ok = self.lower.iter().all(|l| self.upper.iter().all(|u| l.value <= u.value));
        let exact_ok = self.exact.as_ref().is_none_or(|(v, _)| &self.best_lower <= v && v <= &self.best_upper);
        lo_ok && exact_ok && self.best_lower <= self.best_upper
    }

    pub fn lower_named(&self, name: &str) -> Option<&T> {
        self.lower.iter().find(|b| b.name == name).map(|b| &b.value)
    }

    pub fn upper_named(&self, name: &str) -> Option<&T> {
        self.upper.iter().find(|b| b.name == name).map(|b| &b.value)
    }
}

/// Assembles every applicable bound for `(n, k)`; requires `n >= 2k >= 4`.
pub fn report<T: ExactInt>(n: u32, k: u32) -> Result<BoundReport<T>> {
    check_kneser(n, k, 2)?;
    let (lower, upper, not_applicable) = collect_all::<T>(n, k)?;
    let best_lower = lower.iter().map(|b| b.value.clone()).max().expect("nonempty");
    let best_upper = upper.iter().map(|b| b.value.clone()).min().expect("nonempty");
    Ok(BoundReport {
        n,
        k,
        r: n - 2 * k,
        alpha: alpha_kneser(n, k)?,
        lower,
        upper,
        not_applicable,
        exact: known_exact(n, k)?,
        best_lower,
        best_upper,
        n0_lower: n0_lower(k)?,
        n0prime: n0prime::<T>(k).ok(),
    })
}

/// Serializes an exact integer as a JSON number when it fits in `u128` and as
/// a decimal string otherwise.
struct Num<'a, T: ExactInt>(&'a T);

impl<T: ExactInt> Serialize for Num<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_u128() {
            Some(v) => s.serialize_u128(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<T: ExactInt> Serialize for BoundEntry<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let fields = 2 + usize::from(self.rational.is_some()) + usize::from(self.derived);
        let mut st = s.serialize_struct("BoundEntry", fields)?;
        st.serialize_field("name", self.name)?;
        st.serialize_field("value", &Num(&self.value))?;
        if let Some(r) = &self.rational {
            st.serialize_field("rational", &format!("{}/{}", r.numer(), r.denom()))?;
        }
        if self.derived {
            st.serialize_field("derived", &true)?;
        }
        st.end()
    }
}

struct Interval<'a, T: ExactInt>(&'a T, &'a T);

impl<T: ExactInt> Serialize for Interval<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&Num(self.0))?;
        seq.serialize_element(&Num(self.1))?;
        seq.end()
    }
}

#[derive(Serialize)]
#[serde(bound = "")]
struct ExactJson<'a, T: ExactInt> {
    value: Num<'a, T>,
    source: ExactSource,
}

impl<T: ExactInt> Serialize for BoundReport<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundReport", 10)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("alpha", &Num(&self.alpha))?;
        st.serialize_field("lower", &self.lower)?;
        st.serialize_field("upper", &self.upper)?;
        st.serialize_field("not_applicable", &self.not_applicable)?;
        let exact = self.exact.as_ref().map(|(v, src)| ExactJson { value: Num(v), source: *src });
        st.serialize_field("exact", &exact)?;
        st.serialize_field("interval", &Interval(&self.best_lower, &self.best_upper))?;
        st.serialize_field("n0_lower", &self.n0_lower)?;
        st.serialize_field("n0prime", &self.n0prime)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    /// Pascal-triangle oracle, independent of the multiplicative routine.
    fn pascal(n: u32, k: u32) -> u128 {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row.get(k as usize).copied().unwrap_or(0)
    }

    #[test]
    fn binom_values() {
        assert_eq!(binom::<u64>(6, 3).unwrap(), 20);
        assert_eq!(binom::<u64>(1, 2).unwrap(), 0);
        assert_eq!(binom::<u64>(20, 10).unwrap(), pascal(20, 10) as u64);
        assert_eq!(pascal(20, 10), 184_756);
        for n in 0..=64 {
            for k in 0..=n + 1 {
                assert_eq!(binom::<u128>(n, k).unwrap(), pascal(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn binom_overflow_is_reported() {
        // C(68,34) ~ 2.8e19 > u64::MAX
        assert!(matches!(binom::<u64>(68, 34), Err(Error::Overflow(_))));
        assert_eq!(binom::<u64>(67, 33).unwrap(), 14_226_520_737_620_288_370);
        assert_eq!(binom::<BigUint>(68, 34).unwrap(), BigUint::from(28_453_041_475_240_576_740u128));
    }

    #[test]
    fn alpha_and_sandwich() {
        assert_eq!(alpha_kneser::<u64>(5, 2).unwrap(), 4);
        assert_eq!(alpha_kneser::<u64>(8, 3).unwrap(), 21);
        assert_eq!(alpha_kneser::<u64>(6, 3).unwrap(), 10);
        assert!(alpha_kneser::<u64>(5, 3).is_err());
        assert_eq!(sandwich(&4u64).unwrap(), (4, 8));
        assert_eq!(sandwich(&21u64).unwrap(), (21, 42));
        assert_eq!(sandwich(&0u64).unwrap(), (0, 0));
        assert!(sandwich(&u64::MAX).is_err());
    }

    #[test]
    fn subgraph_lower_values() {
        assert_eq!(subgraph_lower::<u64>(5, 2).unwrap(), 6);
        assert_eq!(subgraph_lower::<u64>(7, 3).unwrap(), 20);
        assert_eq!(subgraph_lower::<u64>(100, 2).unwrap(), 6);
        let r = report::<u64>(100, 2).unwrap();
        assert_eq!(r.best_lower, 99);
    }

    #[test]
    fn edge_nonneighbor_values() {
        assert_eq!(edge_nonneighbor_count::<u64>(5, 2).unwrap(), 4);
        assert_eq!(edge_nonneighbor_count::<u64>(8, 3).unwrap(), 36);
        assert_eq!(edge_nonneighbor_count::<u64>(6, 3).unwrap(), 18);
        assert_eq!(edge_nonneighbor_closed_form::<u64>(6, 3).unwrap(), 18);
        assert!(edge_nonneighbor_count::<u64>(5, 1).is_err());
    }

    #[test]
    fn nonindependent_and_combined() {
        for n in 5..30 {
            assert_eq!(nonindependent_upper::<u64>(n, 2).unwrap(), 6);
        }
        assert_eq!(nonindependent_upper::<u64>(8, 3).unwrap(), 38);
        assert_eq!(nonindependent_upper::<u64>(17, 3).unwrap(), 119);
        assert_eq!(alpha_kneser::<u64>(17, 3).unwrap(), 120);
        assert_eq!(combined_upper::<u64>(9, 2).unwrap(), 8);
        assert_eq!(combined_upper::<u64>(5, 2).unwrap(), 6);
        assert_eq!(combined_upper::<u64>(9, 3).unwrap(), 47);
    }

    #[test]
    fn n0prime_values() {
        assert_eq!(n0prime::<u64>(2).unwrap(), 7);
        assert_eq!(n0prime::<u64>(3).unwrap(), 17);
        assert!(n0prime::<u64>(1).is_err());
        // k = 4: check both formulas at the answer and just below it
        let n = n0prime::<u128>(4).unwrap();
        let holds =
            |n: u32| alpha_kneser::<u128>(n, 4).unwrap() >= 2 + edge_nonneighbor_closed_form::<u128>(n, 4).unwrap();
        assert!(holds(n));
        assert!(!holds(n - 1));
        assert_eq!(n, 43);
    }

    #[test]
    fn n0_lower_values() {
        assert_eq!(n0_lower(3).unwrap(), 8);
        assert_eq!(n0_lower(2).unwrap(), 6);
        assert_eq!(n0_lower(10).unwrap(), 22);
    }

    #[test]
    fn katona_values() {
        let v = |n, k| katona_upper_large_r::<u64>(n, k).unwrap().map(|b| b.value);
        assert_eq!(v(7, 2), Some(9));
        assert_eq!(v(8, 3), Some(28));
        assert_eq!(v(5, 2), Some(6));
        assert_eq!(v(7, 3), None);
        let b = katona_upper_large_r::<u64>(9, 3).unwrap().unwrap();
        assert_eq!(b.exact, Ratio::new(112, 3));
        assert_eq!(b.value, 37);

        let s = |n, k| katona_upper_small_r::<u64>(n, k).unwrap().map(|b| b.value);
        assert_eq!(s(7, 3), Some(30));
        assert_eq!(s(10, 4), Some(142));
        assert_eq!(s(9, 3), None);
        assert_eq!(s(8, 4), None);
    }

    #[test]
    fn known_exact_values() {
        assert_eq!(known_exact::<u64>(12, 2).unwrap(), Some((11, ExactSource::PairsFormula)));
        assert_eq!(known_exact::<u64>(9, 3).unwrap(), Some((28, ExactSource::TriplesThreshold)));
        assert_eq!(known_exact::<u64>(9, 4).unwrap(), Some((70, ExactSource::OddGraph)));
        assert_eq!(known_exact::<u64>(8, 4).unwrap(), Some((70, ExactSource::PerfectMatching)));
        assert_eq!(known_exact::<u64>(12, 5).unwrap(), None);
    }

    #[test]
    fn report_examples() {
        let r = report::<u64>(7, 3).unwrap();
        assert_eq!(r.best_lower, 20);
        assert_eq!(r.upper_named(UPPER_TWICE_ALPHA), Some(&30));
        assert_eq!(r.upper_named(UPPER_KATONA_SMALL_R), Some(&30));
        assert_eq!(r.upper_named(UPPER_EDGE_SPLIT), Some(&29));
        assert_eq!(r.best_upper, 29);
        assert_eq!(r.exact, Some((20, ExactSource::OddGraph)));
        assert!(r.not_applicable.contains(&UPPER_KATONA));
        assert!(r.is_consistent());

        let r = report::<u64>(8, 3).unwrap();
        assert_eq!(r.exact.as_ref().map(|e| e.0), Some(21));
        assert!(r.best_lower <= 21 && 21 <= r.best_upper);

        let r = report::<u64>(6, 2).unwrap();
        assert_eq!(r.exact, Some((6, ExactSource::PairsFormula)));
        assert!(r.best_lower >= 6);
        assert!(report::<u64>(3, 2).is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = report::<u128>(9, 3).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["alpha"], 28);
        assert_eq!(v["exact"]["value"], 28);
        assert_eq!(v["exact"]["source"], "triples-threshold");
        assert_eq!(v["interval"], serde_json::json!([28, 37]));
        assert_eq!(v["upper"][1]["rational"], "112/3");
        let r = report::<u128>(12, 5).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert!(v["exact"].is_null());
    }

    #[test]
    fn big_backend_agrees() {
        for k in 2..=6 {
            for n in 2 * k..=2 * k + 12 {
                let small = report::<u128>(n, k).unwrap();
                let big = report::<BigUint>(n, k).unwrap();
                assert_eq!(serde_json::to_string(&small).unwrap(), serde_json::to_string(&big).unwrap());
            }
        }
    }
}
