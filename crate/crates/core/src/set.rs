//! Dense element sets over a ground set `[0, n)`.

use std::cmp::Ordering;
use std::fmt;

/// Largest ground set representable by [`ElementSet`].
pub const MAX_ELEMENTS: usize = 128;

/// Index of an element of a matroid's ground set.
pub type ElementId = usize;

/// A subset of `[0, MAX_ELEMENTS)` stored as a bit mask.
///
/// Sets compare lexicographically on their ascending element lists, so
/// `{0,1} < {0,1,2} < {0,2} < {1}`. Every sorted list of sets in the crate
/// uses this order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u128);

impl ElementSet {
    pub const fn empty() -> Self {
        ElementSet(0)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_ELEMENTS,
            "ground set of size {n} exceeds {MAX_ELEMENTS}"
        );
        if n == MAX_ELEMENTS {
            ElementSet(u128::MAX)
        } else {
            ElementSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(e: ElementId) -> Self {
        ElementSet(1u128 << e)
    }

    pub const fn from_bits(bits: u128) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: ElementId) -> bool {
        e < MAX_ELEMENTS && (self.0 >> e) & 1 == 1
    }

    pub fn insert(&mut self, e: ElementId) {
        self.0 |= 1u128 << e;
    }

    pub fn remove(&mut self, e: ElementId) {
        self.0 &= !(1u128 << e);
    }

    #[must_use]
    pub fn with(self, e: ElementId) -> Self {
        ElementSet(self.0 | (1u128 << e))
    }

    #[must_use]
    pub fn without(self, e: ElementId) -> Self {
        ElementSet(self.0 & !(1u128 << e))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<ElementId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member, if any.
    pub fn last(self) -> Option<ElementId> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<ElementId> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `k` members, in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Vec<ElementSet> {
        let members = self.to_vec();
        let mut out = Vec::new();
        if k > members.len() {
            return out;
        }
        let m = members.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.iter().map(|&i| members[i]).collect());
            // advance the rightmost index that still has room
            let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
                return out;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Members below the first differing position agree. The set owning
        // that position continues its list with it; the other one continues
        // with something larger, or has already ended.
        let p = diff.trailing_zeros();
        let self_owns = (self.0 >> p) & 1 == 1;
        let lacking = if self_owns { other.0 } else { self.0 };
        let lacking_ended = lacking >> p == 0;
        match (self_owns, lacking_ended) {
            (true, false) | (false, true) => Ordering::Less,
            (true, true) | (false, false) => Ordering::Greater,
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        let mut s = ElementSet::empty();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<'a> FromIterator<&'a ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = &'a ElementId>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for ElementSet {
    type Item = ElementId;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
#[derive(Clone)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = ElementId;

    fn next(&mut self) -> Option<ElementId> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Every subset of `[0, n)`, in increasing bit-mask order. Only sensible for small `n`.
pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    assert!(n < 64, "subset enumeration over {n} elements");
    (0u64..(1u64 << n)).map(|b| ElementSet::from_bits(b as u128))
}
