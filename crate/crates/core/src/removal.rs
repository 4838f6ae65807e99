//! Removing a basis without breaking the density condition.
//!
//! A basis `B` is removable when deleting it keeps the rank and leaves a
//! matroid whose ground set is still a densest subset. Such bases always
//! exist once `r >= 3` and `n >= 2r + 2`; smaller matroids may have none
//! (the Fano plane is one).

use thiserror::Error;

use crate::density::{beta_ground, gamma, is_tight};
use crate::matroid::{MatroidError, PavingMatroid};
use crate::partition::{partition_into_independent, PartitionError};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RemovalError {
    #[error("{0} is not a basis")]
    NotABasis(ElementSet),
    #[error("the ground set is not a densest subset")]
    PreconditionGammaNotTight,
    #[error("no basis can be removed while keeping the density condition")]
    NoRemovableBasis,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Which candidate family produced the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalStrategy {
    /// The last full class of the independent partition.
    WholeClass,
    /// The small class extended by part of the last full class.
    ExtendedSmallClass,
    /// Lexicographic scan over all bases.
    Exhaustive,
}

pub fn check_removable(m: &PavingMatroid, basis: ElementSet) -> Result<bool, RemovalError> {
    if !m.is_basis(basis) {
        return Err(RemovalError::NotABasis(basis));
    }
    Ok(removable(m, basis))
}

fn removable(m: &PavingMatroid, basis: ElementSet) -> bool {
    match m.delete(basis) {
        Ok((rest, _)) => gamma(&rest) == beta_ground(&rest),
        Err(MatroidError::RankDrop { .. }) => false,
        Err(e) => unreachable!("deleting a basis: {e}"),
    }
}

pub fn find_removable_basis(m: &PavingMatroid) -> Result<ElementSet, RemovalError> {
    find_removable_basis_with_strategy(m).map(|(b, _)| b)
}

pub fn find_removable_basis_with_strategy(
    m: &PavingMatroid,
) -> Result<(ElementSet, RemovalStrategy), RemovalError> {
    if !is_tight(m) {
        return Err(RemovalError::PreconditionGammaNotTight);
    }
    let partition = partition_into_independent(m)?;
    let full: Vec<ElementSet> = partition.large_parts().collect();
    let small = partition.small_part().unwrap_or_default();

    if let Some(&last) = full.last() {
        if small.is_empty() && full.len() >= 2 && removable(m, last) {
            return Ok((last, RemovalStrategy::WholeClass));
        }
        if !small.is_empty() {
            for candidate in extended_small_class_candidates(m, last, small) {
                if removable(m, candidate) {
                    return Ok((candidate, RemovalStrategy::ExtendedSmallClass));
                }
            }
        }
    }

    m.bases()
        .find(|&b| removable(m, b))
        .map(|b| (b, RemovalStrategy::Exhaustive))
        .ok_or(RemovalError::NoRemovableBasis)
}

/// For each `x` in the last full class `F`, the small class greedily extended
/// to a basis inside `F - x`, when `(F - x) + small` spans.
fn extended_small_class_candidates(
    m: &PavingMatroid,
    last: ElementSet,
    small: ElementSet,
) -> Vec<ElementSet> {
    let r = m.rank_of_matroid();
    let mut out = Vec::new();
    for x in last {
        let pool = last.without(x);
        if m.rank(pool.union(small)) < r {
            continue;
        }
        let mut basis = small;
        for y in pool {
            if basis.len() == r {
                break;
            }
            if m.is_independent(basis.with(y)) {
                basis.insert(y);
            }
        }
        if m.is_basis(basis) && !out.contains(&basis) {
            out.push(basis);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::gamma_bruteforce;

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

    #[test]
    fn uniform_bases_are_removable() {
        let m = PavingMatroid::new(8, 3, vec![]).unwrap();
        for b in m.bases() {
            assert!(check_removable(&m, b).unwrap());
        }
    }

    #[test]
    fn fano_has_no_removable_basis() {
        let f = fano();
        assert_eq!(f.bases().count(), 28);
        for b in f.bases() {
            assert!(!check_removable(&f, b).unwrap(), "{b}");
        }
        assert_eq!(
            find_removable_basis(&f),
            Err(RemovalError::NoRemovableBasis)
        );
    }

    #[test]
    fn dense_line_example_by_definition() {
        let m = PavingMatroid::from_lists(6, 3, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let b = set(&[0, 1, 5]);
        // the remainder {2,3,4} lies on the line: rank 2, so the deletion drops rank
        assert_eq!(m.rank(m.ground().difference(b)), 2);
        assert!(!check_removable(&m, b).unwrap());
        assert_eq!(
            check_removable(&m, set(&[0, 1, 2])),
            Err(RemovalError::NotABasis(set(&[0, 1, 2])))
        );
    }

    #[test]
    fn uniform_3_9() {
        let m = PavingMatroid::new(9, 3, vec![]).unwrap();
        let (b, strategy) = find_removable_basis_with_strategy(&m).unwrap();
        assert_eq!(strategy, RemovalStrategy::WholeClass);
        assert!(check_removable(&m, b).unwrap());
        let (rest, _) = m.delete(b).unwrap();
        assert_eq!(gamma_bruteforce(&rest).unwrap(), beta_ground(&rest));
    }

    #[test]
    fn not_tight_is_a_precondition_error() {
        let m = PavingMatroid::from_lists(6, 3, &[vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(
            find_removable_basis(&m),
            Err(RemovalError::PreconditionGammaNotTight)
        );
    }
}
