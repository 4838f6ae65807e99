//! Exact subset densities `|X| / r(X)` and the maximum density of a matroid.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::matroid::PavingMatroid;
use crate::set::ElementSet;

/// Largest ground set accepted by [`gamma_bruteforce`].
pub const MAX_BRUTEFORCE_DENSITY_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("density of the empty set is undefined")]
    EmptySet,
    #[error("ground set of {n} elements is too large for exhaustive density search (max {max})")]
    GroundSetTooLarge { n: usize, max: usize },
}

/// A nonnegative reduced fraction, or infinity for sets of rank zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Density {
    Finite(Ratio<u64>),
    Infinite,
}

impl Density {
    pub fn new(num: u64, den: u64) -> Self {
        if den == 0 {
            Density::Infinite
        } else {
            Density::Finite(Ratio::new(num, den))
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Density::Infinite)
    }

    pub fn numer(self) -> Option<u64> {
        match self {
            Density::Finite(q) => Some(*q.numer()),
            Density::Infinite => None,
        }
    }

    pub fn denom(self) -> Option<u64> {
        match self {
            Density::Finite(q) => Some(*q.denom()),
            Density::Infinite => None,
        }
    }

    /// Splits a finite density `k + eps` with `0 <= eps < 1` into `k` and
    /// `eps` as a fraction.
    pub fn split(self) -> Option<(u64, Ratio<u64>)> {
        match self {
            Density::Finite(q) => Some((q.to_integer(), q.fract())),
            Density::Infinite => None,
        }
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Density::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Density::Infinite => write!(f, "inf"),
        }
    }
}

/// `|X| / r(X)`.
pub fn beta(m: &PavingMatroid, x: ElementSet) -> Result<Density, DensityError> {
    if x.is_empty() {
        return Err(DensityError::EmptySet);
    }
    Ok(Density::new(x.len() as u64, m.rank(x) as u64))
}

/// Density of the whole ground set.
pub fn beta_ground(m: &PavingMatroid) -> Density {
    Density::new(m.n() as u64, m.rank_of_matroid() as u64)
}

/// Maximum density over nonempty subsets.
///
/// In a paving matroid only three kinds of sets can be densest: independent
/// sets (density 1), dependent hyperplanes (`|H| / (r-1)`), and the ground
/// set. Any other set of rank `r-1` sits inside a hyperplane, and any other
/// spanning set is smaller than the ground set.
pub fn gamma(m: &PavingMatroid) -> Density {
    let r = m.rank_of_matroid() as u64;
    let mut best = Density::new(1, 1).max(beta_ground(m));
    for h in m.hyperplanes() {
        best = best.max(Density::new(h.len() as u64, r - 1));
    }
    best
}

/// Maximum density by enumerating every nonempty subset.
pub fn gamma_bruteforce(m: &PavingMatroid) -> Result<Density, DensityError> {
    if m.n() > MAX_BRUTEFORCE_DENSITY_N {
        return Err(DensityError::GroundSetTooLarge {
            n: m.n(),
            max: MAX_BRUTEFORCE_DENSITY_N,
        });
    }
    let best = m
        .all_subsets()
        .filter(|x| !x.is_empty())
        .map(|x| Density::new(x.len() as u64, m.rank(x) as u64))
        .max()
        .expect("ground set is nonempty");
    Ok(best)
}

/// Whether the ground set is a densest subset.
pub fn is_tight(m: &PavingMatroid) -> bool {
    gamma(m) == beta_ground(m)
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

    #[test]
    fn beta_examples() {
        let f = fano();
        assert_eq!(beta(&f, f.ground()).unwrap(), Density::new(7, 3));
        assert_eq!(beta(&f, set(&[0, 1, 2])).unwrap(), Density::new(3, 2));
        assert_eq!(beta(&f, set(&[0])).unwrap(), Density::new(1, 1));
        assert_eq!(beta(&f, ElementSet::empty()), Err(DensityError::EmptySet));
    }

    #[test]
    fn gamma_examples() {
        let big_line = PavingMatroid::from_lists(6, 3, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let cases = [
            (fano(), Density::new(7, 3)),
            (
                PavingMatroid::new(6, 3, vec![]).unwrap(),
                Density::new(2, 1),
            ),
            (big_line, Density::new(5, 2)),
        ];
        for (m, want) in cases {
            assert_eq!(gamma(&m), want);
            assert_eq!(gamma_bruteforce(&m).unwrap(), want);
        }
    }

    #[test]
    fn loops_are_infinitely_dense() {
        let m = PavingMatroid::from_lists(3, 1, &[vec![2]]).unwrap();
        assert_eq!(gamma(&m), Density::Infinite);
        assert_eq!(gamma_bruteforce(&m).unwrap(), Density::Infinite);
        assert!(!is_tight(&m));
        assert_eq!(beta(&m, set(&[2])).unwrap(), Density::Infinite);
    }

    #[test]
    fn display_and_split() {
        assert_eq!(Density::new(4, 2).to_string(), "2/1");
        assert_eq!(Density::new(7, 3).to_string(), "7/3");
        assert_eq!(Density::Infinite.to_string(), "inf");
        assert_eq!(Density::new(7, 3).split(), Some((2, Ratio::new(1, 3))));
        assert!(Density::new(1, 1) < Density::Infinite);
    }

    #[test]
    fn too_large_for_bruteforce() {
        let m = PavingMatroid::new(21, 3, vec![]).unwrap();
        assert!(matches!(
            gamma_bruteforce(&m),
            Err(DensityError::GroundSetTooLarge { n: 21, .. })
        ));
    }
}
