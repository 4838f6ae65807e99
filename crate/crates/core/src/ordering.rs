//! Cyclic base orderings: checking them, and building them.
//!
//! [`find_ordering`] follows the induction on the ground set size:
//!
//! * rank 1, or `n = r`: any arrangement works;
//! * rank 2: delete an element, order the rest, and put the element back into
//!   a gap whose neighbours are not parallel to it;
//! * `n <= 2r`: cover the ground set with two bases and interleave them;
//! * `n = 2r + 1`: exhaustive search (`n` and `r` are coprime, so an
//!   ordering exists whenever the density condition holds);
//! * otherwise: remove a basis `S` keeping the density condition, order the
//!   rest recursively, and insert `S` as a block into some gap.

use thiserror::Error;

use crate::density::is_tight;
use crate::matroid::{MatroidError, PavingMatroid};
use crate::partition::{partition_into_independent, PartitionError};
use crate::removal::{find_removable_basis, RemovalError};
use crate::set::{ElementId, ElementSet};

/// Largest ground set accepted by [`find_bruteforce`].
pub const MAX_BRUTEFORCE_ORDER_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("sequence is not a permutation of the ground set")]
    NotAPermutation,
    #[error("sequence has {len} elements, fewer than the rank {r}")]
    TooShort { len: usize, r: usize },
    #[error("ground set of {n} elements is too large for exhaustive search (max {max})")]
    GroundSetTooLarge { n: usize, max: usize },
    #[error("operation needs a rank-2 matroid, got rank {0}")]
    NotRankTwo(usize),
    #[error("no gap avoids the parallel class of element {0}")]
    NoGap(ElementId),
    #[error("ground set is not covered by two bases with the density condition")]
    NotTwoBasesCase,
    #[error("no interleaving of the two bases is a cyclic ordering")]
    SearchExhausted,
    #[error("basis {0} fits into no gap in any order")]
    InsertionImpossible(ElementSet),
    #[error("invalid input ordering: {0}")]
    InvalidOrdering(String),
    #[error("constructed sequence {0:?} failed verification")]
    Unverified(Vec<ElementId>),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Removal(#[from] RemovalError),
}

/// A circular arrangement of a matroid's ground set in which every `r`
/// consecutive elements form a basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicOrdering {
    seq: Vec<ElementId>,
}

impl CyclicOrdering {
    /// Checks `seq` against `m` and rotates it to start at element 0.
    pub fn new(m: &PavingMatroid, seq: Vec<ElementId>) -> Result<Self, OrderingError> {
        if verify(m, &seq)? {
            Ok(CyclicOrdering {
                seq: rotate_to_min(seq),
            })
        } else {
            Err(OrderingError::Unverified(seq))
        }
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.seq
    }

    pub fn into_vec(self) -> Vec<ElementId> {
        self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }
}

fn rotate_to_min(mut seq: Vec<ElementId>) -> Vec<ElementId> {
    if let Some(pos) = seq
        .iter()
        .enumerate()
        .min_by_key(|&(_, &e)| e)
        .map(|(i, _)| i)
    {
        seq.rotate_left(pos);
    }
    seq
}

/// Whether every cyclic window of `r` consecutive entries of `seq` is a basis.
/// `seq` may list any subset of the ground set.
pub fn windows_are_bases(m: &PavingMatroid, seq: &[ElementId]) -> bool {
    let r = m.rank_of_matroid();
    let len = seq.len();
    if len < r {
        return false;
    }
    (0..len).all(|i| {
        let window: ElementSet = (0..r).map(|t| seq[(i + t) % len]).collect();
        window.len() == r && m.is_basis(window)
    })
}

/// Whether `seq`, a permutation of the ground set, is a cyclic ordering.
pub fn verify(m: &PavingMatroid, seq: &[ElementId]) -> Result<bool, OrderingError> {
    let n = m.n();
    if seq.len() != n
        || seq.iter().any(|&e| e >= n)
        || seq.iter().collect::<ElementSet>().len() != n
    {
        return Err(OrderingError::NotAPermutation);
    }
    if n < m.rank_of_matroid() {
        return Err(OrderingError::TooShort {
            len: n,
            r: m.rank_of_matroid(),
        });
    }
    Ok(windows_are_bases(m, seq))
}

/// Depth-first search over arrangements with element 0 fixed first,
/// rejecting a prefix as soon as a completed window is dependent.
pub fn find_bruteforce(m: &PavingMatroid) -> Result<Option<CyclicOrdering>, OrderingError> {
    let n = m.n();
    if n > MAX_BRUTEFORCE_ORDER_N {
        return Err(OrderingError::GroundSetTooLarge {
            n,
            max: MAX_BRUTEFORCE_ORDER_N,
        });
    }
    let pools = vec![m.ground(); n];
    let mut search = ArrangementSearch::new(m, pools);
    search.seq.push(0);
    search.used.insert(0);
    Ok(search.run().map(|seq| CyclicOrdering {
        seq: rotate_to_min(seq),
    }))
}

/// Backtracking over sequences where position `p` draws from `pools[p]`.
struct ArrangementSearch<'a> {
    m: &'a PavingMatroid,
    pools: Vec<ElementSet>,
    seq: Vec<ElementId>,
    used: ElementSet,
}

impl<'a> ArrangementSearch<'a> {
    fn new(m: &'a PavingMatroid, pools: Vec<ElementSet>) -> Self {
        ArrangementSearch {
            m,
            pools,
            seq: Vec::new(),
            used: ElementSet::empty(),
        }
    }

    fn run(&mut self) -> Option<Vec<ElementId>> {
        let total = self.pools.len();
        let r = self.m.rank_of_matroid();
        if self.seq.len() == total {
            return windows_are_bases(self.m, &self.seq).then(|| self.seq.clone());
        }
        let pos = self.seq.len();
        for e in self.pools[pos].difference(self.used) {
            if pos + 1 >= r {
                let window: ElementSet =
                    self.seq[pos + 1 - r..].iter().copied().chain([e]).collect();
                if !self.m.is_basis(window) {
                    continue;
                }
            }
            self.seq.push(e);
            self.used.insert(e);
            if let Some(found) = self.run() {
                return Some(found);
            }
            self.used.remove(e);
            self.seq.pop();
        }
        None
    }
}

/// Puts `f` back into `order`, a cyclic ordering of `M \ f` in `M`'s ids.
pub fn insert_rank2(
    m: &PavingMatroid,
    f: ElementId,
    order: &[ElementId],
) -> Result<CyclicOrdering, OrderingError> {
    let r = m.rank_of_matroid();
    if r != 2 {
        return Err(OrderingError::NotRankTwo(r));
    }
    let expected = m.ground().without(f);
    if order.len() != expected.len() || order.iter().collect::<ElementSet>() != expected {
        return Err(OrderingError::InvalidOrdering(
            "not a permutation of the other elements".into(),
        ));
    }
    if !windows_are_bases(m, order) {
        return Err(OrderingError::InvalidOrdering(
            "some window is not a basis".into(),
        ));
    }
    let parallel = m.closure(ElementSet::singleton(f));
    let len = order.len();
    let gap = (0..len)
        .find(|&g| !parallel.contains(order[(g + len - 1) % len]) && !parallel.contains(order[g]))
        .ok_or(OrderingError::NoGap(f))?;
    let mut seq = order.to_vec();
    seq.insert(gap, f);
    CyclicOrdering::new(m, seq)
}

/// Rank 2 with exactly two parallel classes of equal size: alternate them.
fn alternate_two_classes(m: &PavingMatroid) -> Result<CyclicOrdering, OrderingError> {
    let first = m.closure(ElementSet::singleton(0));
    let second = m.ground().difference(first);
    if first.len() != second.len() {
        return Err(OrderingError::SearchExhausted);
    }
    let seq = first
        .iter()
        .zip(second.iter())
        .flat_map(|(a, b)| [a, b])
        .collect();
    CyclicOrdering::new(m, seq)
}

/// Covers the ground set (`n <= 2r`) with two bases `A`, `B` and searches
/// for an arrangement `A - B`, `A ∩ B`, `B - A` in which every window is a
/// basis. When `n = 2r` the bases are disjoint and the arrangement is just
/// an ordering of `A` followed by one of `B`.
pub fn interleave_two_bases(m: &PavingMatroid) -> Result<CyclicOrdering, OrderingError> {
    let n = m.n();
    let r = m.rank_of_matroid();
    if n > 2 * r || !is_tight(m) {
        return Err(OrderingError::NotTwoBasesCase);
    }
    let partition = partition_into_independent(m)?;
    let mut full = partition.large_parts();
    let a = full.next().ok_or(OrderingError::NotTwoBasesCase)?;
    let other = full.next().or(partition.small_part()).unwrap_or_default();
    let overlap_size = 2 * r - n;
    for shared in a.subsets_of_size(overlap_size) {
        let b = other.union(shared);
        if !m.is_basis(b) {
            continue;
        }
        let only_a = a.difference(shared);
        let mut pools = vec![only_a; only_a.len()];
        pools.extend(std::iter::repeat_n(shared, shared.len()));
        pools.extend(std::iter::repeat_n(other, other.len()));
        if let Some(seq) = ArrangementSearch::new(m, pools).run() {
            return CyclicOrdering::new(m, seq);
        }
    }
    Err(OrderingError::SearchExhausted)
}

/// Result of inserting a basis block into a cyclic ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion {
    pub ordering: CyclicOrdering,
    /// Gap that took the block (see [`insertion_at_gap`]).
    pub gap: usize,
    /// The block, in the order it was inserted.
    pub block: Vec<ElementId>,
    /// Gaps tried before `gap` where no order of the block fit.
    pub failed_gaps: Vec<usize>,
}

/// Inserts the basis `s` as a contiguous block into `order`, a cyclic
/// ordering of `M \ S` given in `M`'s ids. Gaps are tried in ascending
/// order, block orders lexicographically.
pub fn insert_basis(
    m: &PavingMatroid,
    s: ElementSet,
    order: &[ElementId],
) -> Result<Insertion, OrderingError> {
    check_insertion_input(m, s, order)?;
    let mut failed_gaps = Vec::new();
    for gap in 0..order.len() {
        if let Some(block) = block_order_at_gap(m, s, order, gap) {
            let mut seq = order[..gap].to_vec();
            seq.extend(&block);
            seq.extend(&order[gap..]);
            let ordering = CyclicOrdering::new(m, seq)?;
            return Ok(Insertion {
                ordering,
                gap,
                block,
                failed_gaps,
            });
        }
        failed_gaps.push(gap);
    }
    Err(OrderingError::InsertionImpossible(s))
}

/// The lexicographically first order of `s` that fits into gap `gap` of
/// `order`, if any. Gap `g` lies between `order[g-1]` and `order[g]` (indices
/// mod `m`); gap 0 is between the last and the first element.
pub fn insertion_at_gap(
    m: &PavingMatroid,
    s: ElementSet,
    order: &[ElementId],
    gap: usize,
) -> Result<Option<Vec<ElementId>>, OrderingError> {
    check_insertion_input(m, s, order)?;
    if gap >= order.len() {
        return Err(OrderingError::InvalidOrdering(format!(
            "gap {gap} out of range"
        )));
    }
    Ok(block_order_at_gap(m, s, order, gap))
}

fn check_insertion_input(
    m: &PavingMatroid,
    s: ElementSet,
    order: &[ElementId],
) -> Result<(), OrderingError> {
    let r = m.rank_of_matroid();
    if !m.is_basis(s) {
        return Err(MatroidError::NotABasis(s).into());
    }
    let rest = m.ground().difference(s);
    let rank = m.rank(rest);
    if rank < r {
        return Err(MatroidError::RankDrop {
            deleted: s,
            rank,
            r,
        }
        .into());
    }
    if order.len() != rest.len() || order.iter().collect::<ElementSet>() != rest {
        return Err(OrderingError::InvalidOrdering(
            "not a permutation of the elements outside the basis".into(),
        ));
    }
    if !windows_are_bases(m, order) {
        return Err(OrderingError::InvalidOrdering(
            "some window is not a basis".into(),
        ));
    }
    Ok(())
}

/// Only windows touching the block change. With prefix `P` of the block
/// placed (`0 < |P| < r`), two of them are fixed as sets: the `r - |P|`
/// elements before the gap together with `P`, and the rest of the block
/// together with the first `|P|` elements after the gap.
fn block_order_at_gap(
    m: &PavingMatroid,
    s: ElementSet,
    order: &[ElementId],
    gap: usize,
) -> Option<Vec<ElementId>> {
    let r = m.rank_of_matroid();
    let len = order.len();
    let before: Vec<ElementId> = (1..r).map(|t| order[(gap + len * r - t) % len]).collect();
    let after: Vec<ElementId> = (0..r - 1).map(|t| order[(gap + t) % len]).collect();

    fn extend(
        m: &PavingMatroid,
        s: ElementSet,
        before: &[ElementId],
        after: &[ElementId],
        block: &mut Vec<ElementId>,
        placed: ElementSet,
    ) -> bool {
        let r = m.rank_of_matroid();
        if placed == s {
            return true;
        }
        for e in s.difference(placed) {
            let prefix = placed.with(e);
            let t = prefix.len();
            if t < r {
                let left: ElementSet = before[..r - t].iter().collect::<ElementSet>().union(prefix);
                let right: ElementSet = after[..t]
                    .iter()
                    .collect::<ElementSet>()
                    .union(s.difference(prefix));
                if !m.is_basis(left) || !m.is_basis(right) {
                    continue;
                }
            }
            block.push(e);
            if extend(m, s, before, after, block, prefix) {
                return true;
            }
            block.pop();
        }
        false
    }

    let mut block = Vec::with_capacity(r);
    extend(m, s, &before, &after, &mut block, ElementSet::empty()).then_some(block)
}

/// One basis insertion performed while building an ordering.
#[derive(Debug, Clone)]
pub struct InsertionRecord {
    /// The matroid at this level of the recursion, in its own ids.
    pub matroid: PavingMatroid,
    pub basis: ElementSet,
    /// Cyclic ordering of the matroid minus the basis, in the matroid's ids.
    pub base_order: Vec<ElementId>,
    pub gap: usize,
    pub failed_gaps: Vec<usize>,
}

/// A cyclic ordering of `m`, or `None` when some subset is denser than the
/// ground set (no ordering can exist then).
pub fn find_ordering(m: &PavingMatroid) -> Result<Option<CyclicOrdering>, OrderingError> {
    find_ordering_traced(m, &mut Vec::new())
}

/// [`find_ordering`], also recording every basis insertion.
pub fn find_ordering_traced(
    m: &PavingMatroid,
    trace: &mut Vec<InsertionRecord>,
) -> Result<Option<CyclicOrdering>, OrderingError> {
    if !is_tight(m) {
        return Ok(None);
    }
    build(m, trace).map(Some)
}

fn build(
    m: &PavingMatroid,
    trace: &mut Vec<InsertionRecord>,
) -> Result<CyclicOrdering, OrderingError> {
    let n = m.n();
    let r = m.rank_of_matroid();
    if r == 1 || n == r {
        return CyclicOrdering::new(m, (0..n).collect());
    }
    if r == 2 {
        // peel an element whose deletion leaves a tight matroid; only two
        // equal parallel classes admit none, and those simply alternate
        let peeled = (0..n).find_map(|f| match m.delete(ElementSet::singleton(f)) {
            Ok((rest, index_map)) if is_tight(&rest) => Some((f, rest, index_map)),
            _ => None,
        });
        let Some((f, rest, index_map)) = peeled else {
            return alternate_two_classes(m);
        };
        let inner = build(&rest, trace)?;
        let order: Vec<ElementId> = inner.as_slice().iter().map(|&e| index_map[e]).collect();
        return insert_rank2(m, f, &order);
    }
    if n <= 2 * r {
        return interleave_two_bases(m);
    }
    if n == 2 * r + 1 {
        return find_bruteforce(m)?.ok_or(OrderingError::SearchExhausted);
    }
    let s = find_removable_basis(m)?;
    let (rest, index_map) = m.delete(s)?;
    let inner = build(&rest, trace)?;
    let order: Vec<ElementId> = inner.as_slice().iter().map(|&e| index_map[e]).collect();
    let insertion = insert_basis(m, s, &order)?;
    trace.push(InsertionRecord {
        matroid: m.clone(),
        basis: s,
        base_order: order,
        gap: insertion.gap,
        failed_gaps: insertion.failed_gaps,
    });
    Ok(insertion.ordering)
}
