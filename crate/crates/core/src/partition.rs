//! Partitioning the ground set into independent sets.
//!
//! If the maximum density is `k + eps` with `0 <= eps < 1`, the ground set
//! splits into `k` independent sets plus one more independent set with at
//! most `eps * r` elements. The partition is found by matroid union over
//! `k` copies of the matroid and one copy truncated to rank `floor(eps * r)`,
//! growing the classes one element at a time along shortest augmenting paths
//! in the exchange graph.

use std::collections::VecDeque;

use thiserror::Error;

use crate::density::{gamma, Density};
use crate::matroid::PavingMatroid;
use crate::set::{ElementId, ElementSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("matroid has loops; its maximum density is infinite")]
    InfiniteDensity,
    #[error("element {0} could not be placed in any independent class")]
    NotPartitionable(ElementId),
}

/// Disjoint independent sets covering the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentPartition {
    pub parts: Vec<ElementSet>,
    /// Index of the class whose size is bounded by `eps * r`, when there is one.
    pub small_index: Option<usize>,
}

impl IndependentPartition {
    /// The sets other than the small one.
    pub fn large_parts(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.parts
            .iter()
            .enumerate()
            .filter(move |&(i, _)| Some(i) != self.small_index)
            .map(|(_, p)| *p)
    }

    pub fn small_part(&self) -> Option<ElementSet> {
        self.small_index.map(|i| self.parts[i])
    }

    /// Checks disjointness, coverage and per-part independence.
    pub fn is_valid_for(&self, m: &PavingMatroid) -> bool {
        let mut seen = ElementSet::empty();
        for &p in &self.parts {
            if !p.is_disjoint(seen) || !m.is_independent(p) {
                return false;
            }
            seen = seen.union(p);
        }
        seen == m.ground() && self.small_index.is_none_or(|i| i < self.parts.len())
    }
}

/// Class capacities: `k` full copies and an optional truncated copy.
struct Classes<'a> {
    matroid: &'a PavingMatroid,
    caps: Vec<usize>,
}

impl Classes<'_> {
    fn accepts(&self, class: usize, set: ElementSet) -> bool {
        set.len() <= self.caps[class] && self.matroid.is_independent(set)
    }
}

/// Splits `gamma(M) = k + eps` into `k` and the small-class capacity
/// `floor(eps * r)`.
pub fn class_sizes(m: &PavingMatroid) -> Result<(usize, usize), PartitionError> {
    let Density::Finite(g) = gamma(m) else {
        return Err(PartitionError::InfiniteDensity);
    };
    let k = g.to_integer() as usize;
    let eps = g.fract();
    let small = (eps.numer() * m.rank_of_matroid() as u64 / eps.denom()) as usize;
    Ok((k, small))
}

pub fn partition_into_independent(
    m: &PavingMatroid,
) -> Result<IndependentPartition, PartitionError> {
    let (k, small) = class_sizes(m)?;
    let r = m.rank_of_matroid();
    let mut caps = vec![r; k];
    if small > 0 {
        caps.push(small);
    }
    let classes = Classes { matroid: m, caps };
    let mut parts = vec![ElementSet::empty(); classes.caps.len()];
    let mut owner: Vec<Option<usize>> = vec![None; m.n()];

    for x in 0..m.n() {
        augment(&classes, &mut parts, &mut owner, x)?;
    }

    Ok(IndependentPartition {
        parts,
        small_index: (small > 0).then_some(k),
    })
}

/// Inserts `x` along a shortest augmenting path.
fn augment(
    classes: &Classes<'_>,
    parts: &mut [ElementSet],
    owner: &mut [Option<usize>],
    x: ElementId,
) -> Result<(), PartitionError> {
    let n = owner.len();
    // pred[z] = (y, c): y takes z's place in class c
    let mut pred: Vec<Option<(ElementId, usize)>> = vec![None; n];
    let mut visited = vec![false; n];
    visited[x] = true;
    let mut queue = VecDeque::from([x]);

    while let Some(y) = queue.pop_front() {
        let free =
            (0..parts.len()).find(|&c| owner[y] != Some(c) && classes.accepts(c, parts[c].with(y)));
        if let Some(c) = free {
            apply_path(parts, owner, &pred, y, c);
            return Ok(());
        }
        for (c, &part) in parts.iter().enumerate() {
            if owner[y] == Some(c) {
                continue;
            }
            for z in part {
                if !visited[z] && classes.accepts(c, part.without(z).with(y)) {
                    visited[z] = true;
                    pred[z] = Some((y, c));
                    queue.push_back(z);
                }
            }
        }
    }
    Err(PartitionError::NotPartitionable(x))
}

fn apply_path(
    parts: &mut [ElementSet],
    owner: &mut [Option<usize>],
    pred: &[Option<(ElementId, usize)>],
    end: ElementId,
    sink: usize,
) {
    parts[sink].insert(end);
    owner[end] = Some(sink);
    let mut z = end;
    while let Some((y, c)) = pred[z] {
        parts[c].remove(z);
        parts[c].insert(y);
        owner[y] = Some(c);
        z = y;
    }
}
