//! Oracles shared by the integration suites. They rebuild matroid facts from
//! the enumerated circuits and S-pair facts from raw permutations, so they do
//! not go through the code paths under test.

#![allow(dead_code)]

use cyclorder::{ElementSet, PavingMatroid, SPairFamilies};
use itertools::Itertools;

/// `table[X]` says whether `X` contains a circuit, indexed by bitmask.
pub fn dependence_table(m: &PavingMatroid) -> Vec<bool> {
    let n = m.n();
    let mut dependent = vec![false; 1 << n];
    for c in m.circuits() {
        dependent[c.bits() as usize] = true;
    }
    for bit in 0..n {
        for mask in 0..(1usize << n) {
            if mask & (1 << bit) != 0 && dependent[mask & !(1 << bit)] {
                dependent[mask] = true;
            }
        }
    }
    dependent
}

/// Rank of every subset: the size of a largest independent subset.
pub fn rank_table(m: &PavingMatroid) -> Vec<usize> {
    let n = m.n();
    let dependent = dependence_table(m);
    let mut rank = vec![0usize; 1 << n];
    for mask in 1..(1usize << n) {
        rank[mask] = if dependent[mask] {
            (0..n)
                .filter(|&b| mask & (1 << b) != 0)
                .map(|b| rank[mask & !(1 << b)])
                .max()
                .unwrap_or(0)
        } else {
            mask.count_ones() as usize
        };
    }
    rank
}

/// Rank straight from the definition of a paving matroid: small sets are
/// independent, sets inside a dependent hyperplane have rank `r - 1`.
pub fn rank_by_definition(m: &PavingMatroid, x: ElementSet) -> usize {
    let r = m.rank_of_matroid();
    if x.len() < r {
        x.len()
    } else if m.hyperplanes().iter().any(|h| x.is_subset(*h)) {
        r - 1
    } else {
        r
    }
}

/// Every window of `r` cyclically consecutive elements is independent of
/// size `r`, checked against the dependence table.
pub fn windows_ok(m: &PavingMatroid, dependent: &[bool], seq: &[usize]) -> bool {
    let n = seq.len();
    let r = m.rank_of_matroid();
    (0..n).all(|i| {
        let w: ElementSet = (0..r).map(|t| seq[(i + t) % n]).collect();
        w.len() == r && !dependent[w.bits() as usize]
    })
}

/// Order consistency by trying every permutation of the labels.
pub fn order_consistent_by_permutations(p: &SPairFamilies) -> bool {
    let n = p.n();
    (0..n).permutations(n).all(|perm| {
        (1..=n).any(|i| {
            let prefix: ElementSet = perm[..i].iter().collect();
            let suffix: ElementSet = perm[i - 1..].iter().collect();
            p.fam1.contains(prefix) || p.fam2.contains(suffix)
        })
    })
}
