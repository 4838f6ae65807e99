//! Matroid constructors, seeded generators and the standard test catalog.
//!
//! Random generation uses ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, and consumes only raw `next_u64` outputs:
//!
//! * a random `k`-subset of `[0, n)` is a partial Fisher-Yates shuffle of
//!   `0..n`: for `i` in `0..k`, swap position `i` with position
//!   `i + next_u64() % (n - i)`, then take the first `k` entries;
//! * the sparse generator draws up to `64 * (target + 1)` such `r`-subsets
//!   and keeps each one that meets every kept set in at most `r - 2`
//!   elements, stopping once `target` sets are kept.
//!
//! The procedure is fixed so that a given seed yields the same matroid on any
//! platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::matroid::{MatroidError, PavingMatroid};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("non-basis {set} does not have r = {r} elements")]
    NonbasisSize { set: ElementSet, r: usize },
    #[error("random generation needs rank at least 2, got {0}")]
    RankTooSmall(usize),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// The uniform matroid `U_{r,n}`.
pub fn uniform(r: usize, n: usize) -> Result<PavingMatroid, MatroidError> {
    PavingMatroid::new(n, r, Vec::new())
}

/// The Fano plane on points `0..7`.
pub fn fano() -> PavingMatroid {
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
    .expect("the Fano lines pairwise meet in one point")
}

/// The sparse paving matroid whose non-bases are exactly `nonbases`.
pub fn sparse_paving_from_nonbases(
    r: usize,
    n: usize,
    nonbases: &[ElementSet],
) -> Result<PavingMatroid, CatalogError> {
    if let Some(&set) = nonbases.iter().find(|s| s.len() != r) {
        return Err(CatalogError::NonbasisSize { set, r });
    }
    Ok(PavingMatroid::new(n, r, nonbases.to_vec())?)
}

/// Rank-2 matroid whose parallel classes of size `>= 2` are `classes`.
pub fn rank2_from_parallel_classes(
    n: usize,
    classes: &[ElementSet],
) -> Result<PavingMatroid, MatroidError> {
    PavingMatroid::new(
        n,
        2,
        classes.iter().copied().filter(|c| c.len() >= 2).collect(),
    )
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> ElementSet {
    let mut items: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = i + (rng.next_u64() % (n - i) as u64) as usize;
        items.swap(i, j);
    }
    items[..k].iter().collect()
}

fn greedy_hyperplanes(
    rng: &mut ChaCha8Rng,
    r: usize,
    n: usize,
    target: usize,
    mut kept: Vec<ElementSet>,
) -> Vec<ElementSet> {
    let start = kept.len();
    let attempts = 64 * (target + 1);
    for _ in 0..attempts {
        if kept.len() - start >= target {
            break;
        }
        let candidate = random_subset(rng, n, r);
        if kept
            .iter()
            .all(|h| h.intersection(candidate).len() + 2 <= r)
        {
            kept.push(candidate);
        }
    }
    kept
}

/// Sparse paving matroid with up to `target_count` random non-bases.
pub fn random_sparse_paving(
    seed: u64,
    r: usize,
    n: usize,
    target_count: usize,
) -> Result<PavingMatroid, CatalogError> {
    if r < 2 {
        return Err(CatalogError::RankTooSmall(r));
    }
    if r > n {
        return Err(MatroidError::InvalidRank { n, r }.into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hyperplanes = greedy_hyperplanes(&mut rng, r, n, target_count, Vec::new());
    Ok(PavingMatroid::new(n, r, hyperplanes)?)
}

/// Paving matroid with the hyperplane `{0, ..., plane_size - 1}` plus up to
/// `extra` random `r`-element hyperplanes. A large first hyperplane makes the
/// ground set lose the density condition.
pub fn random_paving_with_plane(
    seed: u64,
    r: usize,
    n: usize,
    plane_size: usize,
    extra: usize,
) -> Result<PavingMatroid, CatalogError> {
    if r < 2 {
        return Err(CatalogError::RankTooSmall(r));
    }
    if r > n {
        return Err(MatroidError::InvalidRank { n, r }.into());
    }
    let plane = ElementSet::full(plane_size.min(n));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hyperplanes = greedy_hyperplanes(&mut rng, r, n, extra, vec![plane]);
    Ok(PavingMatroid::new(n, r, hyperplanes)?)
}

/// Rank-3 matroid on 10 elements (`e1..e7` = `0..6`, `s1 s2 s3` = `7 8 9`)
/// where the block `{7, 8, 9}` fits into the gap between 6 and 0 of the
/// ordering `0..7` in no order: the circuits `{s1, e6, e7}`, `{s2, e1, e2}`,
/// `{s2, s3, e7}` and `{s1, s3, e1}` block every arrangement.
pub fn blocked_gap_fixture() -> PavingMatroid {
    PavingMatroid::from_lists(
        10,
        3,
        &[vec![7, 5, 6], vec![8, 0, 1], vec![8, 9, 6], vec![7, 9, 0]],
    )
    .expect("the four triples pairwise meet in at most one element")
}

/// A named catalog matroid.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub matroid: PavingMatroid,
}

fn entry(name: String, matroid: PavingMatroid) -> CatalogEntry {
    CatalogEntry { name, matroid }
}

/// All integer partitions of `n` into parts of size at least 1, largest part first.
fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            current.push(part);
            go(rest - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The deterministic catalog behind the test suites and `batch-check`
/// fixtures: uniform matroids, the Fano plane, seeded sparse paving matroids,
/// rank-2 matroids for every parallel-class profile, seeded matroids with one
/// large hyperplane, and a few hand-built fixtures.
pub fn standard_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for r in 1..=5 {
        for n in r..=12 {
            out.push(entry(
                format!("uniform-r{r}-n{n}"),
                uniform(r, n).expect("1 <= r <= n"),
            ));
        }
    }
    out.push(entry("fano".into(), fano()));
    out.push(entry("blocked-gap".into(), blocked_gap_fixture()));
    out.push(entry(
        "dense-line-r3-n6".into(),
        PavingMatroid::from_lists(6, 3, &[vec![0, 1, 2, 3, 4]]).expect("single hyperplane"),
    ));
    out.push(entry(
        "four-point-lines-r3-n9".into(),
        PavingMatroid::from_lists(
            9,
            3,
            &[vec![0, 1, 2, 3], vec![0, 4, 5, 6], vec![1, 4, 7, 8]],
        )
        .expect("lines meet in one point"),
    ));

    for seed in 0..500u64 {
        let r = 2 + (seed % 3) as usize;
        let span = 10 - r;
        let n_a = r + 1 + ((seed / 3) as usize % span);
        let n_b = r + 2 + ((seed / 3 + 3) as usize % (span - 1));
        let t_a = 1 + (seed / 7) as usize % 6;
        let t_b = 2 + (seed / 5) as usize % 8;
        let a = random_sparse_paving(seed, r, n_a, t_a).expect("valid rank");
        let b = random_sparse_paving(seed + 10_000, r, n_b, t_b).expect("valid rank");
        out.push(entry(format!("sparse-s{seed}a-r{r}-n{n_a}"), a));
        out.push(entry(format!("sparse-s{seed}b-r{r}-n{n_b}"), b));
    }

    for n in 3..=9 {
        for profile in integer_partitions(n) {
            if profile.len() < 2 {
                // a single class has rank 1
                continue;
            }
            let mut classes = Vec::new();
            let mut next = 0;
            for &size in &profile {
                classes.push(ElementSet::full(next + size).difference(ElementSet::full(next)));
                next += size;
            }
            let label = profile
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("-");
            let m = rank2_from_parallel_classes(n, &classes).expect("disjoint classes");
            out.push(entry(format!("rank2-n{n}-classes-{label}"), m));
        }
    }

    for seed in 0..200u64 {
        let r = 2 + (seed % 3) as usize;
        let n = r + 2 + (seed / 3) as usize % (7 - r);
        let plane = r + (seed / 2) as usize % (n - r);
        let extra = (seed / 4) as usize % 4;
        let m = random_paving_with_plane(seed, r, n, plane, extra).expect("valid rank");
        out.push(entry(format!("plane-s{seed}-r{r}-n{n}-h{plane}"), m));
    }
    out
}
