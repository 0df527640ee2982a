//! Fixed-width vertex bitsets.
//!
//! Every set the solvers manipulate (neighborhoods, candidate pools, optimal
//! sets, legal-sequence supports) is a [`VertexSet`]. The width is fixed at
//! [`MAX_VERTICES`] bits so sets are `Copy` and all algebra is word-parallel
//! without allocation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORDS: usize = 4;

/// Largest vertex count any [`crate::Graph`] may have.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A set of vertex indices in `0..MAX_VERTICES`.
///
/// Ordering is lexicographic on the ascending element lists, so `{0,3} < {1,2}`
/// and a proper prefix sorts first (`{0} < {0,1}`). Solvers use this order to
/// pick reproducible witnesses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex set width exceeded: {n}");
        let mut s = VertexSet::new();
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    #[inline]
    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Elements strictly greater than `v`.
    pub fn above(&self, v: usize) -> VertexSet {
        if v + 1 >= MAX_VERTICES {
            return VertexSet::new();
        }
        *self - VertexSet::full(v + 1)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            idx: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = *self ^ *other;
        let Some(m) = diff.first() else {
            return Ordering::Equal;
        };
        // Both lists agree below m; exactly one contains m.
        let (lacks, ord) = if self.contains(m) {
            (other, Ordering::Less)
        } else {
            (self, Ordering::Greater)
        };
        // The side without m is a proper prefix when it has nothing above m.
        if lacks.above(m).is_empty() {
            ord.reverse()
        } else {
            ord
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Iter {
    words: [u64; WORDS],
    idx: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.idx < WORDS {
            let w = &mut self.words[self.idx];
            if *w != 0 {
                let b = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
        }
        None
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const K: usize> From<[usize; K]> for VertexSet {
    fn from(vs: [usize; K]) -> Self {
        vs.into_iter().collect()
    }
}

macro_rules! word_op {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $f:expr) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $m(self, rhs: VertexSet) -> VertexSet {
                let mut out = self;
                for (a, b) in out.words.iter_mut().zip(rhs.words) {
                    *a = $f(*a, b);
                }
                out
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $am(&mut self, rhs: VertexSet) {
                *self = $tr::$m(*self, rhs);
            }
        }
    };
}

word_op!(BitOr, bitor, BitOrAssign, bitor_assign, |a: u64, b: u64| a | b);
word_op!(BitAnd, bitand, BitAndAssign, bitand_assign, |a: u64, b: u64| a & b);
word_op!(Sub, sub, SubAssign, sub_assign, |a: u64, b: u64| a & !b);

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        let mut out = self;
        for (a, b) in out.words.iter_mut().zip(rhs.words) {
            *a ^= b;
        }
        out
    }
}

/// Complement within the full `MAX_VERTICES` universe; intersect with a
/// graph's vertex set before use.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        let mut out = self;
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} exceeds the {MAX_VERTICES}-vertex limit"
            )));
        }
        Ok(items.into_iter().collect())
    }
}

/// Calls `f` on every `k`-subset of `pool` in lexicographic order. Stops
/// early when `f` returns `false`; the return value reports whether the
/// enumeration ran to completion.
pub fn for_each_k_subset(pool: VertexSet, k: usize, mut f: impl FnMut(VertexSet) -> bool) -> bool {
    let items = pool.to_vec();
    if k > items.len() {
        return true;
    }
    if k == 0 {
        return f(VertexSet::new());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let set: VertexSet = idx.iter().map(|&i| items[i]).collect();
        if !f(set) {
            return false;
        }
        let mut j = k;
        loop {
            if j == 0 {
                return true;
            }
            j -= 1;
            if idx[j] < items.len() - k + j {
                break;
            }
        }
        idx[j] += 1;
        for t in j + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// All subsets of `pool`, by increasing size and lexicographically within a
/// size. Same early-exit contract as [`for_each_k_subset`].
pub fn for_each_subset_by_size(pool: VertexSet, mut f: impl FnMut(VertexSet) -> bool) -> bool {
    for k in 0..=pool.len() {
        if !for_each_k_subset(pool, k, &mut f) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let mut s = VertexSet::new();
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(70);
        s.insert(255);
        assert_eq!(s.to_vec(), vec![3, 70, 255]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(255));
        assert!(s.remove(70));
        assert!(!s.contains(70));
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::full(0), VertexSet::new());
    }

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from([0, 3]);
        let b = VertexSet::from([1, 2]);
        assert!(a < b);
        assert!(VertexSet::from([0]) < VertexSet::from([0, 1]));
        assert!(VertexSet::new() < VertexSet::from([5]));
        assert!(VertexSet::from([0, 2]) < VertexSet::from([1, 3]));
    }

    #[test]
    fn k_subsets_in_lex_order() {
        let mut seen = Vec::new();
        for_each_k_subset(VertexSet::from([1, 4, 6, 9]), 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![vec![1, 4], vec![1, 6], vec![1, 9], vec![4, 6], vec![4, 9], vec![6, 9]]
        );
        let mut count = 0;
        for_each_subset_by_size(VertexSet::full(5), |_| {
            count += 1;
            true
        });
        assert_eq!(count, 32);
    }

    proptest! {
        #[test]
        fn order_matches_sorted_vec_order(a in proptest::collection::btree_set(0usize..200, 0..8),
                                          b in proptest::collection::btree_set(0usize..200, 0..8)) {
            let sa: VertexSet = a.iter().copied().collect();
            let sb: VertexSet = b.iter().copied().collect();
            let va: Vec<usize> = a.into_iter().collect();
            let vb: Vec<usize> = b.into_iter().collect();
            prop_assert_eq!(sa.cmp(&sb), va.cmp(&vb));
        }

        #[test]
        fn algebra_matches_btreeset(a in proptest::collection::btree_set(0usize..256, 0..20),
                                    b in proptest::collection::btree_set(0usize..256, 0..20)) {
            let sa: VertexSet = a.iter().copied().collect();
            let sb: VertexSet = b.iter().copied().collect();
            prop_assert_eq!((sa | sb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!((sa & sb).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!((sa - sb).to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        }
    }
}
