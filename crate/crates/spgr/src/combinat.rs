//! Index-set and Weyl-group combinatorics.
//!
//! The ambient space always has even dimension `2n`. A [`IndexSet`] is a
//! strictly increasing `d`-subset of `{1,..,2n}` indexing both Plücker
//! coordinates and Schubert varieties; a [`FlagWord`] is an ordered sequence
//! of `n` distinct values indexing flag Schubert varieties and their charts.
//! Lifts to one-line permutations give the type-A and type-C length
//! functions, hence Schubert dimensions.

use crate::{Error, Result};
use itertools::Itertools;
use std::fmt;

/// Number of inversions `#{s < t : seq[s] > seq[t]}` of a sequence of
/// distinct values.
pub fn inversions<T: PartialOrd>(seq: &[T]) -> usize {
    let mut count = 0;
    for s in 0..seq.len() {
        for t in s + 1..seq.len() {
            if seq[s] > seq[t] {
                count += 1;
            }
        }
    }
    count
}

/// A sorted `d`-subset of `{1,..,2n}` with its ambient size attached.
///
/// Storing `two_n` on the value keeps comparisons across different ambient
/// spaces from silently coercing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    entries: Vec<usize>,
    two_n: usize,
}

impl IndexSet {
    /// Builds an index set, validating sortedness and range.
    pub fn new(entries: Vec<usize>, two_n: usize) -> Result<Self> {
        if two_n == 0 || two_n % 2 != 0 {
            return Err(Error::InvalidIndexSet(format!(
                "ambient size must be even and positive, got {two_n}"
            )));
        }
        for w in entries.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidIndexSet(format!(
                    "entries must be strictly increasing, got {entries:?}"
                )));
            }
        }
        if let (Some(&first), Some(&last)) = (entries.first(), entries.last()) {
            if first < 1 || last > two_n {
                return Err(Error::InvalidIndexSet(format!(
                    "entries must lie in [1, {two_n}], got {entries:?}"
                )));
            }
        }
        Ok(IndexSet { entries, two_n })
    }

    /// Sorts the values first; rejects duplicates.
    pub fn from_unsorted(mut values: Vec<usize>, two_n: usize) -> Result<Self> {
        values.sort_unstable();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidIndexSet(format!(
                "duplicate entries in {values:?}"
            )));
        }
        IndexSet::new(values, two_n)
    }

    /// The staircase `(1, 2, .., d)`, the identity coset index.
    pub fn staircase(d: usize, two_n: usize) -> Result<Self> {
        IndexSet::new((1..=d).collect(), two_n)
    }

    /// The maximal index `(2n-d+1, .., 2n)`.
    pub fn maximal(d: usize, two_n: usize) -> Result<Self> {
        IndexSet::new((two_n - d + 1..=two_n).collect(), two_n)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn two_n(&self) -> usize {
        self.two_n
    }

    pub fn n(&self) -> usize {
        self.two_n / 2
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, value: usize) -> bool {
        self.entries.binary_search(&value).is_ok()
    }

    /// True iff no two entries sum to `2n + 1`.
    pub fn is_symplectic(&self) -> bool {
        // target is odd, so target - a != a and any hit is a genuine pair
        let target = self.two_n + 1;
        self.entries.iter().all(|&a| !self.contains(target - a))
    }

    fn require_symplectic(&self) -> Result<()> {
        if self.is_symplectic() {
            Ok(())
        } else {
            Err(Error::NotSymplectic(self.to_string()))
        }
    }

    fn check_compatible(&self, other: &IndexSet) -> Result<()> {
        if self.two_n != other.two_n {
            return Err(Error::AmbientMismatch {
                left: self.two_n,
                right: other.two_n,
            });
        }
        if self.len() != other.len() {
            return Err(Error::CardinalityMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// Componentwise Bruhat order `self_t <= other_t` for all `t`.
    pub fn bruhat_leq(&self, other: &IndexSet) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a <= b))
    }

    /// Removes the entries at 1-based positions `s < t`.
    pub fn remove_positions(&self, s: usize, t: usize) -> Result<IndexSet> {
        if s == 0 || t == 0 || s >= t || t > self.len() {
            return Err(Error::InvalidArgument(format!(
                "positions must satisfy 1 <= s < t <= {}, got ({s},{t})",
                self.len()
            )));
        }
        let entries = self
            .entries
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != s - 1 && *k != t - 1)
            .map(|(_, &v)| v)
            .collect();
        IndexSet::new(entries, self.two_n)
    }

    /// The sorted union with two fresh values; `None` if either is already
    /// present (the overlap convention: such Plücker terms vanish).
    pub fn union_pair(&self, a: usize, b: usize) -> Option<IndexSet> {
        if self.contains(a) || self.contains(b) || a == b {
            return None;
        }
        let mut entries = self.entries.clone();
        entries.extend([a, b]);
        entries.sort_unstable();
        Some(IndexSet {
            entries,
            two_n: self.two_n,
        })
    }

    /// One-line lift: entries followed by the complement in ascending order.
    pub fn lift_a(&self) -> Permutation {
        let mut one_line = self.entries.clone();
        one_line.extend((1..=self.two_n).filter(|v| !self.contains(*v)));
        Permutation { one_line }
    }

    /// Symplectic one-line lift: entries, then the smaller member of each
    /// unused mirror pair in ascending order, then the mirror-forced half.
    pub fn lift_c(&self) -> Result<Permutation> {
        self.require_symplectic()?;
        let n = self.n();
        if self.len() > n {
            return Err(Error::InvalidArgument(format!(
                "symplectic lift needs d <= n, got d = {}",
                self.len()
            )));
        }
        let mut one_line = self.entries.clone();
        for t in 1..=n {
            if !self.contains(t) && !self.contains(self.two_n + 1 - t) {
                one_line.push(t);
            }
        }
        debug_assert_eq!(one_line.len(), n);
        for t in (0..n).rev() {
            let forced = self.two_n + 1 - one_line[t];
            one_line.push(forced);
        }
        Ok(Permutation { one_line })
    }

    /// Type-A length `τ(lift_a)`, the dimension of `X^A`.
    pub fn length_a(&self) -> usize {
        // closed form Σ (i_t − t); the τ route is cross-checked in tests
        self.entries
            .iter()
            .enumerate()
            .map(|(t, &v)| v - (t + 1))
            .sum()
    }

    /// Type-C length `(τ(lift_c) + m)/2` with `m = #{t <= d : i_t > n}`.
    pub fn length_c(&self) -> Result<usize> {
        let lift = self.lift_c()?;
        let tau = inversions(&lift.one_line);
        let n = self.n();
        let m = self.entries.iter().filter(|&&v| v > n).count();
        debug_assert_eq!((tau + m) % 2, 0, "parity violation in length_c");
        Ok((tau + m) / 2)
    }

    /// `(dim X^A, dim X^C)` for a symplectic index.
    pub fn dims(&self) -> Result<(usize, usize)> {
        Ok((self.length_a(), self.length_c()?))
    }

    /// Parses `"1,3,7"`; the empty string is the empty set.
    pub fn parse(text: &str, two_n: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return IndexSet::new(Vec::new(), two_n);
        }
        let entries = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad index entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IndexSet::new(entries, two_n)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexSet({}; 2n={})", self, self.two_n)
    }
}

/// All `d`-subsets of `{1,..,two_n}` in lexicographic order, optionally
/// filtered to symplectic ones and to those Bruhat-below a given index.
pub fn enumerate_indices(
    d: usize,
    two_n: usize,
    symplectic_only: bool,
    below: Option<&IndexSet>,
) -> Result<Vec<IndexSet>> {
    if two_n == 0 || two_n % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "ambient size must be even and positive, got {two_n}"
        )));
    }
    if d > two_n {
        return Err(Error::InvalidArgument(format!(
            "d = {d} exceeds ambient size {two_n}"
        )));
    }
    if symplectic_only && d > two_n / 2 {
        return Err(Error::InvalidArgument(format!(
            "symplectic enumeration needs d <= n, got d = {d}, n = {}",
            two_n / 2
        )));
    }
    if let Some(b) = below {
        if b.two_n() != two_n {
            return Err(Error::AmbientMismatch {
                left: b.two_n(),
                right: two_n,
            });
        }
        if b.len() != d {
            return Err(Error::CardinalityMismatch {
                left: b.len(),
                right: d,
            });
        }
    }
    let mut out = Vec::new();
    for combo in (1..=two_n).combinations(d) {
        let idx = IndexSet::new(combo, two_n)?;
        if symplectic_only && !idx.is_symplectic() {
            continue;
        }
        if let Some(b) = below {
            if !idx.bruhat_leq(b)? {
                continue;
            }
        }
        out.push(idx);
    }
    Ok(out)
}

/// A permutation of `{1,..,two_n}` in one-line notation.
#[derive(Clone, PartialEq, Eq)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation of 1..{n}: {one_line:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.one_line)
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(k, &v)| v == k + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.one_line.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

/// An ordered sequence of distinct values in `{1,..,2n}`; order matters.
///
/// Full words (`n` values) index complete symplectic flags and charts;
/// shorter words are prefixes, accepted wherever only the dimension
/// formulas are involved.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlagWord {
    values: Vec<usize>,
    two_n: usize,
}

impl FlagWord {
    pub fn new(values: Vec<usize>, two_n: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidFlagWord("empty word".into()));
        }
        if two_n == 0 || two_n % 2 != 0 {
            return Err(Error::InvalidFlagWord(format!(
                "ambient size must be even and positive, got {two_n}"
            )));
        }
        if values.len() > two_n / 2 {
            return Err(Error::InvalidFlagWord(format!(
                "a word carries at most n = {} values, got {}",
                two_n / 2,
                values.len()
            )));
        }
        let mut seen = vec![false; two_n + 1];
        for &v in &values {
            if v < 1 || v > two_n || seen[v] {
                return Err(Error::InvalidFlagWord(format!(
                    "values must be distinct in [1, {two_n}], got {values:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(FlagWord { values, two_n })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// True when the word has the full `n` values.
    pub fn is_full(&self) -> bool {
        self.values.len() == self.two_n / 2
    }

    pub fn n(&self) -> usize {
        self.two_n / 2
    }

    pub fn two_n(&self) -> usize {
        self.two_n
    }

    /// True iff no two values sum to `2n + 1`.
    pub fn is_symplectic(&self) -> bool {
        let target = self.two_n + 1;
        for s in 0..self.values.len() {
            for t in s + 1..self.values.len() {
                if self.values[s] + self.values[t] == target {
                    return false;
                }
            }
        }
        true
    }

    /// The sorted prefix set `w^(d)`.
    pub fn prefix(&self, d: usize) -> Result<IndexSet> {
        if d == 0 || d > self.len() {
            return Err(Error::InvalidArgument(format!(
                "prefix length must lie in [1, {}], got {d}",
                self.len()
            )));
        }
        IndexSet::from_unsorted(self.values[..d].to_vec(), self.two_n)
    }

    /// The sorted set of all values.
    pub fn sorted(&self) -> IndexSet {
        IndexSet::from_unsorted(self.values.clone(), self.two_n).expect("word values are valid")
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.values)
    }

    /// `(dim X^A(w), dim X^C(w))`; the type-C half needs a symplectic word.
    pub fn dims(&self) -> Result<(usize, usize)> {
        if !self.is_symplectic() {
            return Err(Error::NotSymplectic(self.to_string()));
        }
        let top = self.sorted();
        let tau = self.inversions();
        Ok((top.length_a() + tau, top.length_c()? + tau))
    }

    /// Type-A flag dimension, defined for every word.
    pub fn dim_a(&self) -> usize {
        self.sorted().length_a() + self.inversions()
    }

    /// Prefix-wise Bruhat order: `u <= w` iff `u^(d) <= w^(d)` for all `d`.
    pub fn bruhat_leq(&self, other: &FlagWord) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::CardinalityMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        for d in 1..=self.len() {
            if !self.prefix(d)?.bruhat_leq(&other.prefix(d)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Parses `"3,1,7"` preserving order.
    pub fn parse(text: &str, two_n: usize) -> Result<Self> {
        let values = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad flag entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FlagWord::new(values, two_n)
    }
}

impl fmt::Display for FlagWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values.iter().join(","))
    }
}

impl fmt::Debug for FlagWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FlagWord({})", self)
    }
}

/// All words of `n` distinct values in `{1,..,2n}` in lexicographic order,
/// optionally restricted to symplectic words.
pub fn enumerate_flag_words(n: usize, symplectic_only: bool) -> Result<Vec<FlagWord>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut out = Vec::new();
    for perm in (1..=2 * n).permutations(n) {
        let w = FlagWord::new(perm, 2 * n)?;
        if symplectic_only && !w.is_symplectic() {
            continue;
        }
        out.push(w);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial;

    fn idx(entries: &[usize], two_n: usize) -> IndexSet {
        IndexSet::new(entries.to_vec(), two_n).unwrap()
    }

    #[test]
    fn inversions_examples() {
        assert_eq!(inversions(&[1, 2, 3, 4]), 0);
        assert_eq!(inversions(&[2, 1]), 1);
        assert_eq!(inversions(&[1, 3, 7, 2, 4, 5, 6, 8]), 5);
        assert_eq!(inversions::<usize>(&[]), 0);
    }

    #[test]
    fn symplectic_detection() {
        assert!(idx(&[1, 3, 7], 8).is_symplectic());
        assert!(!idx(&[1, 8], 8).is_symplectic());
        assert!(idx(&[1, 2, 3], 8).is_symplectic());
    }

    #[test]
    fn bruhat_componentwise() {
        assert!(idx(&[1, 2, 7], 8).bruhat_leq(&idx(&[1, 3, 7], 8)).unwrap());
        assert!(!idx(&[1, 2, 8], 8).bruhat_leq(&idx(&[1, 3, 7], 8)).unwrap());
        let i = idx(&[1, 3, 7], 8);
        assert!(i.bruhat_leq(&i).unwrap());
        assert!(matches!(
            idx(&[1, 2], 8).bruhat_leq(&idx(&[1, 2, 3], 8)),
            Err(Error::CardinalityMismatch { .. })
        ));
        assert!(matches!(
            idx(&[1, 2], 8).bruhat_leq(&idx(&[1, 2], 6)),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn lift_a_pinned() {
        assert_eq!(
            idx(&[1, 3, 7], 8).lift_a().one_line(),
            &[1, 3, 7, 2, 4, 5, 6, 8]
        );
        assert!(idx(&[1, 2, 3], 8).lift_a().is_identity());
        assert_eq!(
            idx(&[5, 8], 8).lift_a().one_line(),
            &[5, 8, 1, 2, 3, 4, 6, 7]
        );
    }

    #[test]
    fn lift_c_pinned() {
        assert_eq!(
            idx(&[1, 3, 7], 8).lift_c().unwrap().one_line(),
            &[1, 3, 7, 4, 5, 2, 6, 8]
        );
        assert_eq!(
            idx(&[5, 8], 8).lift_c().unwrap().one_line(),
            &[5, 8, 2, 3, 6, 7, 1, 4]
        );
        assert!(idx(&[1, 2, 3, 4], 8).lift_c().unwrap().is_identity());
        assert!(idx(&[1, 8], 8).lift_c().is_err());
    }

    #[test]
    fn lengths_and_dims() {
        let i = idx(&[1, 3, 7], 8);
        assert_eq!(i.length_a(), 5);
        assert_eq!(i.length_c().unwrap(), 4);
        assert_eq!(i.dims().unwrap(), (5, 4));
        assert_eq!(idx(&[1, 2, 3], 8).dims().unwrap(), (0, 0));
        assert_eq!(idx(&[6, 7, 8], 8).length_c().unwrap(), 12);
        // maximal index: d(2n-d) and d(2n-d) - C(d,2)
        let m = IndexSet::maximal(3, 8).unwrap();
        assert_eq!(m.length_a(), 15);
        assert_eq!(m.length_c().unwrap(), 15 - 3);
    }

    #[test]
    fn length_a_two_routes_agree() {
        for two_n in [4usize, 6, 8] {
            for d in 0..=two_n {
                for i in enumerate_indices(d, two_n, false, None).unwrap() {
                    assert_eq!(i.length_a(), inversions(i.lift_a().one_line()));
                }
            }
        }
    }

    #[test]
    fn length_c_parity_is_even() {
        for two_n in [4usize, 6, 8, 10] {
            let n = two_n / 2;
            for d in 0..=n {
                for i in enumerate_indices(d, two_n, true, None).unwrap() {
                    let tau = inversions(i.lift_c().unwrap().one_line());
                    let m = i.entries().iter().filter(|&&v| v > n).count();
                    assert_eq!((tau + m) % 2, 0, "parity failed at {i:?}");
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let e = enumerate_indices(2, 4, true, None).unwrap();
        let shown: Vec<String> = e.iter().map(|i| i.to_string()).collect();
        assert_eq!(shown, ["1,2", "1,3", "2,4", "3,4"]);
        assert_eq!(enumerate_indices(3, 8, true, None).unwrap().len(), 32);
        assert_eq!(enumerate_indices(0, 8, false, None).unwrap().len(), 1);
        // 2^d * C(n,d) across the small range
        for two_n in [4usize, 6, 8] {
            let n = two_n / 2;
            for d in 0..=n {
                assert_eq!(
                    enumerate_indices(d, two_n, true, None).unwrap().len(),
                    (1 << d) * binomial(n, d)
                );
            }
        }
    }

    #[test]
    fn enumeration_below_filter() {
        let below = idx(&[1, 3, 7], 8);
        let all = enumerate_indices(3, 8, false, Some(&below)).unwrap();
        assert!(all.iter().all(|i| i.bruhat_leq(&below).unwrap()));
        // (1,2,7), (1,3,4..7) style entries only
        assert!(all.contains(&idx(&[1, 2, 7], 8)));
        assert!(!all.contains(&idx(&[1, 4, 5], 8)));
    }

    #[test]
    fn bruhat_is_partial_order_exhaustive() {
        let all = enumerate_indices(3, 6, false, None).unwrap();
        for a in &all {
            assert!(a.bruhat_leq(a).unwrap());
            for b in &all {
                let ab = a.bruhat_leq(b).unwrap();
                let ba = b.bruhat_leq(a).unwrap();
                if ab && ba {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if ab && b.bruhat_leq(c).unwrap() {
                        assert!(a.bruhat_leq(c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn length_gap_equals_heavy_pairs() {
        for two_n in [4usize, 6, 8, 10] {
            let n = two_n / 2;
            for d in 1..=n {
                for i in enumerate_indices(d, two_n, true, None).unwrap() {
                    let gap = i.length_a() - i.length_c().unwrap();
                    let pairs = i
                        .entries()
                        .iter()
                        .enumerate()
                        .flat_map(|(s, &a)| {
                            i.entries()[s + 1..].iter().map(move |&b| a + b)
                        })
                        .filter(|&sum| sum > two_n)
                        .count();
                    assert_eq!(gap, pairs, "gap mismatch at {i:?}");
                }
            }
        }
    }

    #[test]
    fn flag_word_basics() {
        let w = FlagWord::new(vec![3, 1], 6).unwrap();
        assert_eq!(w.two_n(), 6);
        assert!(!w.is_full());
        assert!(FlagWord::new(vec![1, 1, 2], 6).is_err());
        assert!(FlagWord::new(vec![1, 2, 9], 6).is_err());
        assert!(FlagWord::new(vec![1, 2, 3, 4], 6).is_err());
        // 2 + 5 = 7 = 2n+1
        assert!(!FlagWord::new(vec![2, 5, 1], 6).unwrap().is_symplectic());
    }

    #[test]
    fn flag_dims_pinned() {
        let w = FlagWord::new(vec![1, 2, 3, 4], 8).unwrap();
        assert_eq!(w.dims().unwrap(), (0, 0));
        // partial word over 2n = 8: sorted (1,3,7) with one inversion
        let w = FlagWord::new(vec![3, 1, 7], 8).unwrap();
        assert_eq!(w.prefix(3).unwrap().entries(), &[1, 3, 7]);
        assert_eq!(w.dims().unwrap(), (6, 5));
        let w = FlagWord::new(vec![2, 1], 4).unwrap();
        assert_eq!(w.dims().unwrap(), (1, 1));
    }

    #[test]
    fn flag_bruhat_prefixwise() {
        let u = FlagWord::new(vec![2, 1], 4).unwrap();
        let w = FlagWord::new(vec![3, 1], 4).unwrap();
        assert!(u.bruhat_leq(&w).unwrap());
        assert!(u.bruhat_leq(&u).unwrap());
        assert!(!w.bruhat_leq(&u).unwrap());
    }

    #[test]
    fn flag_enumeration_counts() {
        assert_eq!(enumerate_flag_words(2, true).unwrap().len(), 8);
        assert_eq!(enumerate_flag_words(2, false).unwrap().len(), 12);
        assert_eq!(enumerate_flag_words(3, true).unwrap().len(), 48);
    }

    #[test]
    fn index_set_parse_roundtrip() {
        let i = IndexSet::parse("1,3,7", 8).unwrap();
        assert_eq!(i.entries(), &[1, 3, 7]);
        assert_eq!(i.to_string(), "1,3,7");
        assert!(IndexSet::parse("3,1", 8).is_err());
        assert!(IndexSet::parse("", 8).unwrap().is_empty());
        let w = FlagWord::parse("3,1,7", 8).unwrap();
        assert_eq!(w.to_string(), "3,1,7");
        assert!(FlagWord::parse("3,1,7", 6).is_err());
    }
}
