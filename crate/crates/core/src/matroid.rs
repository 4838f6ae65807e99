//! Paving matroids given by their rank and family of dependent hyperplanes.
//!
//! A matroid of rank `r` is paving when every set of fewer than `r` elements
//! is independent. Such a matroid is determined by its dependent hyperplanes:
//! the rank-`(r-1)` flats with at least `r` elements. Any two of them meet in
//! at most `r-2` elements, and a set of size `>= r-1` has rank `r-1` exactly
//! when it lies inside one of them. Circuits are derived on demand: the
//! `r`-subsets of hyperplanes, and the `(r+1)`-sets none of whose `r`-subsets
//! lies in a hyperplane.

use thiserror::Error;

use crate::set::{all_subsets, ElementId, ElementSet, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("invalid rank {r} for a ground set of {n} elements")]
    InvalidRank { n: usize, r: usize },
    #[error("ground set of {n} elements exceeds the supported maximum of {MAX_ELEMENTS}")]
    TooManyElements { n: usize },
    #[error("element {element} is outside the ground set [0, {n})")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("hyperplane {hyperplane} has fewer than r = {r} elements")]
    HyperplaneTooSmall { hyperplane: ElementSet, r: usize },
    #[error(
        "hyperplanes {first} and {second} share {shared} elements (at most r-2 = {max} allowed)"
    )]
    HyperplaneOverlap {
        first: ElementSet,
        second: ElementSet,
        shared: usize,
        max: usize,
    },
    #[error("hyperplane {0} is the whole ground set")]
    HyperplaneIsGround(ElementSet),
    #[error("hyperplane {0} is listed twice")]
    DuplicateHyperplane(ElementSet),
    #[error("element {0} is already in the basis")]
    ElementInBasis(ElementId),
    #[error("{0} is not a basis")]
    NotABasis(ElementSet),
    #[error("deleting {deleted} drops the rank to {rank} (need {r})")]
    RankDrop {
        deleted: ElementSet,
        rank: usize,
        r: usize,
    },
}

/// A paving matroid on `[0, n)`.
///
/// Immutable once built; the hyperplane list is duplicate-free and sorted
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PavingMatroid {
    n: usize,
    r: usize,
    hyperplanes: Vec<ElementSet>,
}

impl PavingMatroid {
    /// Checks the paving invariants and canonicalizes the hyperplane order.
    pub fn new(n: usize, r: usize, hyperplanes: Vec<ElementSet>) -> Result<Self, MatroidError> {
        if n > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements { n });
        }
        if r < 1 || r > n {
            return Err(MatroidError::InvalidRank { n, r });
        }
        let ground = ElementSet::full(n);
        let mut hyperplanes = hyperplanes;
        for &h in &hyperplanes {
            if let Some(e) = h.difference(ground).first() {
                return Err(MatroidError::ElementOutOfRange { element: e, n });
            }
            if h.len() < r {
                return Err(MatroidError::HyperplaneTooSmall { hyperplane: h, r });
            }
            if h == ground {
                return Err(MatroidError::HyperplaneIsGround(h));
            }
        }
        hyperplanes.sort();
        if let Some(w) = hyperplanes.windows(2).find(|w| w[0] == w[1]) {
            return Err(MatroidError::DuplicateHyperplane(w[0]));
        }
        // With r = 1 the only dependent hyperplane is the set of loops, so
        // any second one is an overlap.
        let max_shared = r.saturating_sub(2);
        for (i, &a) in hyperplanes.iter().enumerate() {
            for &b in &hyperplanes[i + 1..] {
                let shared = a.intersection(b).len();
                if r == 1 || shared > max_shared {
                    return Err(MatroidError::HyperplaneOverlap {
                        first: a,
                        second: b,
                        shared,
                        max: max_shared,
                    });
                }
            }
        }
        Ok(PavingMatroid { n, r, hyperplanes })
    }

    /// Builds a matroid from plain index lists.
    pub fn from_lists(
        n: usize,
        r: usize,
        hyperplanes: &[Vec<ElementId>],
    ) -> Result<Self, MatroidError> {
        let mut sets = Vec::with_capacity(hyperplanes.len());
        for list in hyperplanes {
            let mut s = ElementSet::empty();
            for &e in list {
                if e >= n || e >= MAX_ELEMENTS {
                    return Err(MatroidError::ElementOutOfRange { element: e, n });
                }
                s.insert(e);
            }
            sets.push(s);
        }
        Self::new(n, r, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank_of_matroid(&self) -> usize {
        self.r
    }

    pub fn hyperplanes(&self) -> &[ElementSet] {
        &self.hyperplanes
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn is_uniform(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// The dependent hyperplane containing `x`, if there is one.
    ///
    /// Only meaningful for `|x| >= r - 1`; two hyperplanes cannot both contain
    /// such a set.
    pub fn hyperplane_containing(&self, x: ElementSet) -> Option<ElementSet> {
        self.hyperplanes.iter().copied().find(|&h| x.is_subset(h))
    }

    pub fn rank(&self, x: ElementSet) -> usize {
        let size = x.len();
        if size + 1 < self.r {
            size
        } else if self.hyperplane_containing(x).is_some() {
            self.r - 1
        } else if size < self.r {
            // |x| = r - 1 outside every hyperplane
            size
        } else {
            self.r
        }
    }

    pub fn is_independent(&self, x: ElementSet) -> bool {
        let size = x.len();
        if size < self.r {
            true
        } else if size > self.r {
            false
        } else {
            self.hyperplane_containing(x).is_none()
        }
    }

    pub fn is_basis(&self, x: ElementSet) -> bool {
        x.len() == self.r && self.hyperplane_containing(x).is_none()
    }

    pub fn is_circuit(&self, x: ElementSet) -> bool {
        let size = x.len();
        if size == self.r {
            self.hyperplane_containing(x).is_some()
        } else if size == self.r + 1 {
            x.iter()
                .all(|e| self.hyperplane_containing(x.without(e)).is_none())
        } else {
            false
        }
    }

    /// Smallest flat containing `x`.
    pub fn closure(&self, x: ElementSet) -> ElementSet {
        let size = x.len();
        if size + 1 < self.r {
            return x;
        }
        if let Some(h) = self.hyperplane_containing(x) {
            return h;
        }
        if size + 1 == self.r {
            // an (r-1)-set outside every dependent hyperplane spans only itself
            x
        } else {
            self.ground()
        }
    }

    /// The unique circuit inside `basis + x` that contains `x`.
    pub fn fundamental_circuit(
        &self,
        basis: ElementSet,
        x: ElementId,
    ) -> Result<ElementSet, MatroidError> {
        if !self.is_basis(basis) {
            return Err(MatroidError::NotABasis(basis));
        }
        if basis.contains(x) {
            return Err(MatroidError::ElementInBasis(x));
        }
        if x >= self.n {
            return Err(MatroidError::ElementOutOfRange {
                element: x,
                n: self.n,
            });
        }
        let extended = basis.with(x);
        // An r-circuit through x is (r-1) basis elements plus x inside a
        // hyperplane; otherwise the whole (r+1)-set is the circuit.
        for h in &self.hyperplanes {
            if h.contains(x) {
                let inside = basis.intersection(*h);
                if inside.len() == self.r - 1 {
                    return Ok(inside.with(x));
                }
            }
        }
        Ok(extended)
    }

    /// Deletes `removed`, keeping the rank. Returns the matroid on the
    /// re-indexed ground set and the map from new indices to old ones.
    pub fn delete(
        &self,
        removed: ElementSet,
    ) -> Result<(PavingMatroid, Vec<ElementId>), MatroidError> {
        let kept = self.ground().difference(removed);
        let rank = self.rank(kept);
        if rank < self.r {
            return Err(MatroidError::RankDrop {
                deleted: removed,
                rank,
                r: self.r,
            });
        }
        let index_map: Vec<ElementId> = kept.to_vec();
        let relabel = |s: ElementSet| -> ElementSet {
            index_map
                .iter()
                .enumerate()
                .filter(|&(_, &old)| s.contains(old))
                .map(|(new, _)| new)
                .collect()
        };
        let hyperplanes = self
            .hyperplanes
            .iter()
            .map(|h| h.intersection(kept))
            .filter(|h| h.len() >= self.r)
            .map(relabel)
            .collect();
        let m = PavingMatroid::new(index_map.len(), self.r, hyperplanes)
            .expect("restriction of a paving matroid keeps the paving invariants");
        Ok((m, index_map))
    }

    /// All bases, lexicographically.
    pub fn bases(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.ground()
            .subsets_of_size(self.r)
            .into_iter()
            .filter(move |&b| self.is_basis(b))
    }

    /// All circuits (sizes `r` and `r+1`), lexicographically.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let ground = self.ground();
        let mut out: Vec<ElementSet> = ground
            .subsets_of_size(self.r)
            .into_iter()
            .chain(ground.subsets_of_size(self.r + 1))
            .filter(|&c| self.is_circuit(c))
            .collect();
        out.sort();
        out
    }

    /// Every subset of the ground set; enumeration helper for small `n`.
    pub fn all_subsets(&self) -> impl Iterator<Item = ElementSet> {
        all_subsets(self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ElementSet {
        v.iter().collect()
    }

    fn fano() -> PavingMatroid {
        PavingMatroid::from_lists(
            7,
            3,
            &[
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap()
    }

    /// Rank as the size of a largest independent subset, found by brute force
    /// over subsets using only the circuit-free definition of independence:
    /// a set is dependent iff it contains an r-set lying in a hyperplane or
    /// has more than r elements.
    fn rank_oracle(m: &PavingMatroid, x: ElementSet) -> usize {
        let r = m.rank_of_matroid();
        let indep = |s: ElementSet| {
            s.len() <= r
                && !s
                    .subsets_of_size(r)
                    .iter()
                    .any(|t| m.hyperplanes().iter().any(|h| t.is_subset(*h)))
        };
        all_subsets(m.n())
            .filter(|s| s.is_subset(x) && indep(*s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn fano_lines_meet_in_one_point() {
        let f = fano();
        for (i, a) in f.hyperplanes().iter().enumerate() {
            for b in &f.hyperplanes()[i + 1..] {
                assert_eq!(a.intersection(*b).len(), 1);
            }
        }
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            PavingMatroid::new(3, 0, vec![]).unwrap_err(),
            MatroidError::InvalidRank { n: 3, r: 0 }
        );
        assert!(matches!(
            PavingMatroid::new(3, 4, vec![]),
            Err(MatroidError::InvalidRank { .. })
        ));
        assert!(matches!(
            PavingMatroid::from_lists(4, 3, &[vec![0, 1, 2], vec![1, 2, 3]]),
            Err(MatroidError::HyperplaneOverlap { shared: 2, .. })
        ));
        assert!(matches!(
            PavingMatroid::from_lists(4, 3, &[vec![0, 1]]),
            Err(MatroidError::HyperplaneTooSmall { .. })
        ));
        assert!(matches!(
            PavingMatroid::from_lists(4, 2, &[vec![0, 1], vec![1, 0]]),
            Err(MatroidError::DuplicateHyperplane(_))
        ));
        assert!(matches!(
            PavingMatroid::from_lists(4, 2, &[vec![0, 4]]),
            Err(MatroidError::ElementOutOfRange { element: 4, .. })
        ));
        assert!(matches!(
            PavingMatroid::from_lists(3, 2, &[vec![0, 1, 2]]),
            Err(MatroidError::HyperplaneIsGround(_))
        ));
        // rank 1 allows a single loop class, never two
        assert!(PavingMatroid::from_lists(3, 1, &[vec![0]]).is_ok());
        assert!(matches!(
            PavingMatroid::from_lists(3, 1, &[vec![0], vec![1]]),
            Err(MatroidError::HyperplaneOverlap { shared: 0, .. })
        ));
    }

    #[test]
    fn hyperplanes_are_canonicalized() {
        let m = PavingMatroid::from_lists(6, 3, &[vec![3, 4, 5], vec![2, 1, 0]]).unwrap();
        assert_eq!(m.hyperplanes(), &[set(&[0, 1, 2]), set(&[3, 4, 5])]);
    }

    #[test]
    fn rank_examples() {
        let f = fano();
        assert_eq!(f.rank(set(&[0, 1])), 2);
        assert_eq!(f.rank(set(&[0, 1, 2])), 2);
        assert_eq!(f.rank(set(&[0, 1, 3])), 3);
        assert_eq!(f.rank(ElementSet::empty()), 0);
        for x in all_subsets(7) {
            assert_eq!(f.rank(x), rank_oracle(&f, x), "rank of {x}");
        }
    }

    #[test]
    fn independence_and_bases() {
        let f = fano();
        let u24 = PavingMatroid::new(4, 2, vec![]).unwrap();
        assert!(!f.is_independent(set(&[0, 1, 2])));
        assert!(u24.is_basis(set(&[0, 1])));
        assert!(f.is_basis(set(&[0, 1, 3])));
        assert_eq!(f.bases().count(), 35 - 7);
        assert_eq!(u24.bases().count(), 6);
    }

    #[test]
    fn circuit_examples() {
        let f = fano();
        let u24 = PavingMatroid::new(4, 2, vec![]).unwrap();
        assert!(f.is_circuit(set(&[0, 1, 2])));
        assert!(u24.is_circuit(set(&[0, 1, 2])));
        assert!(!f.is_circuit(set(&[0, 1, 2, 3])));
        let circuits = f.circuits();
        assert_eq!(circuits.len(), 14);
        // 4-circuits of the Fano plane are the complements of lines
        let complements: Vec<ElementSet> = f
            .hyperplanes()
            .iter()
            .map(|h| f.ground().difference(*h))
            .collect();
        for c in circuits.iter().filter(|c| c.len() == 4) {
            assert!(complements.contains(c));
        }
    }

    #[test]
    fn closure_examples() {
        let f = fano();
        assert_eq!(f.closure(set(&[0, 1])), set(&[0, 1, 2]));
        assert_eq!(
            PavingMatroid::new(6, 3, vec![])
                .unwrap()
                .closure(set(&[0, 1])),
            set(&[0, 1])
        );
        assert_eq!(f.closure(set(&[0, 1, 3])), f.ground());
        for x in all_subsets(7) {
            let cl = f.closure(x);
            let oracle: ElementSet = (0..7).filter(|&y| f.rank(x.with(y)) == f.rank(x)).collect();
            assert_eq!(cl, oracle.union(x));
        }
    }

    #[test]
    fn fundamental_circuit_examples() {
        let f = fano();
        let u24 = PavingMatroid::new(4, 2, vec![]).unwrap();
        assert_eq!(
            f.fundamental_circuit(set(&[0, 1, 3]), 2).unwrap(),
            set(&[0, 1, 2])
        );
        assert_eq!(
            u24.fundamental_circuit(set(&[0, 1]), 2).unwrap(),
            set(&[0, 1, 2])
        );
        assert_eq!(
            f.fundamental_circuit(set(&[0, 1, 3]), 5).unwrap(),
            set(&[1, 3, 5])
        );
        assert_eq!(
            f.fundamental_circuit(set(&[0, 1, 3]), 1).unwrap_err(),
            MatroidError::ElementInBasis(1)
        );
    }

    #[test]
    fn delete_examples() {
        let u38 = PavingMatroid::new(8, 3, vec![]).unwrap();
        let (d, map) = u38.delete(set(&[1, 4, 6])).unwrap();
        assert_eq!(
            (d.n(), d.rank_of_matroid(), d.hyperplanes().len()),
            (5, 3, 0)
        );
        assert_eq!(map, vec![0, 2, 3, 5, 7]);

        let f = fano();
        let (d, map) = f.delete(set(&[6])).unwrap();
        assert_eq!(d.n(), 6);
        let expected: Vec<ElementSet> = vec![
            set(&[0, 1, 2]),
            set(&[0, 3, 4]),
            set(&[1, 3, 5]),
            set(&[2, 4, 5]),
        ];
        assert_eq!(d.hyperplanes(), expected.as_slice());
        for x in all_subsets(6) {
            let original: ElementSet = x.iter().map(|e| map[e]).collect();
            assert_eq!(d.rank(x), f.rank(original));
        }

        let (d, map) = f.delete(set(&[2, 4, 5, 6])).unwrap();
        assert_eq!(map, vec![0, 1, 3]);
        assert!(d.is_basis(d.ground()));

        assert!(matches!(
            f.delete(set(&[3, 4, 5, 6])),
            Err(MatroidError::RankDrop { rank: 2, .. })
        ));
    }
}
