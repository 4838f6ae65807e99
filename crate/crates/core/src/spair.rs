//! Pairs of set families over a small label set, and the order-consistency
//! property that governs inserting a basis into a cyclic ordering.
//!
//! Labels are `0..n`; a subset of labels is an [`ElementSet`] over `[0, n)`.
//! A pair `(F1, F2)` is *order consistent* when every linear ordering of the
//! labels has a nonempty prefix in `F1` or a nonempty suffix in `F2`.
//!
//! The four axioms checked by [`check_axioms`]:
//!
//! * **S1** if `A, B ∈ Fi` with `B ⊂ A` and `|A| = |B| + 1`, every
//!   `|B|`-subset of `A` is in `Fi`;
//! * **S2** if `A, B ∈ Fi` have equal size and share all but one element,
//!   `A ∪ B ∈ Fi`;
//! * **S3** `Fi` misses some singleton and does not contain the full set;
//! * **S4** for no label `x` and `1 <= k < n` do all `k`-subsets of `S - x`
//!   lie in `F1` while all `(n-k)`-subsets of `S - x` lie in `F2`.
//!
//! For a pair satisfying all four with `n >= 3`, order consistency is
//! equivalent to the existence of a [`ConsistencyWitness`]: two distinct
//! `(n-1)`-sets `A1 ∈ F1`, `A2 ∈ F2` and two `(n-2)`-sets `B1`, `B2` with
//! `B1 ∩ A1 = B2 ∩ A2 = B1 ∩ B2`, an `(n-3)`-subset of `A1 ∩ A2`, and every
//! singleton of `Bi` in `Fi`.

use thiserror::Error;

use crate::matroid::PavingMatroid;
use crate::ordering::windows_are_bases;
use crate::set::{all_subsets, ElementId, ElementSet};

/// Largest label set for which families are stored with a membership table.
pub const MAX_LABELS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SPairError {
    #[error("{n} labels exceed the supported maximum of {MAX_LABELS}")]
    GroundSetTooLarge { n: usize },
    #[error("family member {set} is not a subset of the {n} labels")]
    LabelOutOfRange { set: ElementSet, n: usize },
    #[error("the pair violates the S-pair axioms: {0:?}")]
    NotAnSPair(AxiomReport),
    #[error("witness search needs at least 3 labels, got {0}")]
    TooFewLabels(usize),
    #[error("invalid ordering of the deleted matroid: {0}")]
    InvalidOrdering(String),
    #[error("{0} is not a basis whose removal keeps the rank")]
    RankMismatch(ElementSet),
}

/// A duplicate-free, lexicographically sorted family of label subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    sets: Vec<ElementSet>,
    table: Vec<bool>,
}

impl Family {
    pub fn new(n: usize, sets: impl IntoIterator<Item = ElementSet>) -> Result<Self, SPairError> {
        if n > MAX_LABELS {
            return Err(SPairError::GroundSetTooLarge { n });
        }
        let full = ElementSet::full(n);
        let mut table = vec![false; 1 << n];
        let mut out = Vec::new();
        for s in sets {
            if !s.is_subset(full) {
                return Err(SPairError::LabelOutOfRange { set: s, n });
            }
            if !table[s.bits() as usize] {
                table[s.bits() as usize] = true;
                out.push(s);
            }
        }
        out.sort();
        Ok(Family { sets: out, table })
    }

    pub fn empty(n: usize) -> Result<Self, SPairError> {
        Family::new(n, [])
    }

    pub fn contains(&self, s: ElementSet) -> bool {
        self.table.get(s.bits() as usize).copied().unwrap_or(false)
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    fn contains_all(&self, sets: &[ElementSet]) -> bool {
        sets.iter().all(|&s| self.contains(s))
    }

    fn of_size(&self, k: usize) -> impl Iterator<Item = ElementSet> + '_ {
        self.sets.iter().copied().filter(move |s| s.len() == k)
    }
}

/// Two families over the labels `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPairFamilies {
    n: usize,
    pub fam1: Family,
    pub fam2: Family,
}

impl SPairFamilies {
    pub fn new(
        n: usize,
        fam1: impl IntoIterator<Item = ElementSet>,
        fam2: impl IntoIterator<Item = ElementSet>,
    ) -> Result<Self, SPairError> {
        Ok(SPairFamilies {
            n,
            fam1: Family::new(n, fam1)?,
            fam2: Family::new(n, fam2)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    fn families(&self) -> [&Family; 2] {
        [&self.fam1, &self.fam2]
    }
}

/// Outcome of checking each axiom separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    pub s1: bool,
    pub s2: bool,
    pub s3: bool,
    pub s4: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.s1 && self.s2 && self.s3 && self.s4
    }
}

pub fn check_axioms(p: &SPairFamilies) -> AxiomReport {
    let s = p.labels();
    AxiomReport {
        s1: p.families().iter().all(|f| satisfies_s1(f)),
        s2: p.families().iter().all(|f| satisfies_s2(f, s)),
        s3: p.families().iter().all(|f| satisfies_s3(f, s)),
        s4: satisfies_s4(p),
    }
}

fn satisfies_s1(f: &Family) -> bool {
    f.sets().iter().all(|&a| {
        let has_facet_in_family = a.iter().any(|x| f.contains(a.without(x)));
        !has_facet_in_family || a.iter().all(|x| f.contains(a.without(x)))
    })
}

fn satisfies_s2(f: &Family, labels: ElementSet) -> bool {
    // B = A - a + c ranges over the same-size sets sharing all but one element with A
    f.sets().iter().all(|&a| {
        a.iter().all(|x| {
            labels
                .difference(a)
                .iter()
                .all(|c| !f.contains(a.without(x).with(c)) || f.contains(a.with(c)))
        })
    })
}

fn satisfies_s3(f: &Family, labels: ElementSet) -> bool {
    let all_singletons = labels.iter().all(|x| f.contains(ElementSet::singleton(x)));
    !all_singletons && !f.contains(labels)
}

fn satisfies_s4(p: &SPairFamilies) -> bool {
    let n = p.n();
    let labels = p.labels();
    labels.iter().all(|x| {
        let rest = labels.without(x);
        (1..n).all(|k| {
            !(p.fam1.contains_all(&rest.subsets_of_size(k))
                && p.fam2.contains_all(&rest.subsets_of_size(n - k)))
        })
    })
}

/// Whether every ordering of the labels has a prefix in `fam1` or a suffix
/// in `fam2`.
///
/// An ordering is a maximal chain `∅ = P0 ⊂ P1 ⊂ ... ⊂ Pn = S` of prefix
/// sets; its prefixes are `P1..Pn` and its suffixes are `S - P0 .. S - P(n-1)`.
/// So an ordering escapes both families iff it runs through prefix sets that
/// are all *clear*, and the search runs over subsets rather than
/// permutations.
pub fn is_order_consistent(p: &SPairFamilies) -> bool {
    let n = p.n();
    let labels = p.labels();
    let hit = |prefix: ElementSet| {
        (!prefix.is_empty() && p.fam1.contains(prefix))
            || (prefix != labels && p.fam2.contains(labels.difference(prefix)))
    };
    // reachable[P]: some ordering of P has only clear prefix sets
    let mut reachable = vec![false; 1 << n];
    reachable[0] = !hit(ElementSet::empty());
    for bits in 1..(1usize << n) {
        let prefix = ElementSet::from_bits(bits as u128);
        if hit(prefix) {
            continue;
        }
        reachable[bits] = prefix
            .iter()
            .any(|x| reachable[prefix.without(x).bits() as usize]);
    }
    !reachable[(1 << n) - 1]
}

/// The ordering that escapes both families, if one exists; the
/// lexicographically first among such orderings.
pub fn escaping_ordering(p: &SPairFamilies) -> Option<Vec<usize>> {
    let n = p.n();
    let labels = p.labels();
    let hit = |prefix: ElementSet| {
        (!prefix.is_empty() && p.fam1.contains(prefix))
            || (prefix != labels && p.fam2.contains(labels.difference(prefix)))
    };
    // completable[P]: P is clear and can be extended to S through clear sets
    let mut completable = vec![false; 1 << n];
    for bits in (0..(1usize << n)).rev() {
        let prefix = ElementSet::from_bits(bits as u128);
        if hit(prefix) {
            continue;
        }
        completable[bits] = prefix == labels
            || labels
                .difference(prefix)
                .iter()
                .any(|x| completable[prefix.with(x).bits() as usize]);
    }
    if !completable[0] {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut prefix = ElementSet::empty();
    while prefix != labels {
        let next = labels
            .difference(prefix)
            .iter()
            .find(|&x| completable[prefix.with(x).bits() as usize])
            .expect("a completable prefix has a completable extension");
        order.push(next);
        prefix.insert(next);
    }
    Some(order)
}

/// Sets `A1, A2, B1, B2` certifying order consistency of an S-pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConsistencyWitness {
    pub a1: ElementSet,
    pub a2: ElementSet,
    pub b1: ElementSet,
    pub b2: ElementSet,
}

impl ConsistencyWitness {
    /// Checks every defining condition against `p`.
    pub fn is_valid_for(&self, p: &SPairFamilies) -> bool {
        let n = p.n();
        let labels = p.labels();
        let ConsistencyWitness { a1, a2, b1, b2 } = *self;
        let sized = |s: ElementSet, k: usize| s.is_subset(labels) && s.len() == k;
        let core = b1.intersection(b2);
        sized(a1, n - 1)
            && sized(a2, n - 1)
            && sized(b1, n - 2)
            && sized(b2, n - 2)
            && a1 != a2
            && p.fam1.contains(a1)
            && p.fam2.contains(a2)
            && b1.intersection(a1) == core
            && b2.intersection(a2) == core
            && core.len() + 3 == n
            && core.is_subset(a1.intersection(a2))
            && b1.iter().all(|x| p.fam1.contains(ElementSet::singleton(x)))
            && b2.iter().all(|x| p.fam2.contains(ElementSet::singleton(x)))
    }

    /// The smallest pair of families containing the witness: `{A1}` plus
    /// the singletons of `B1`, and `{A2}` plus the singletons of `B2`.
    pub fn families(&self, n: usize) -> SPairFamilies {
        let t1 = std::iter::once(self.a1).chain(self.b1.iter().map(ElementSet::singleton));
        let t2 = std::iter::once(self.a2).chain(self.b2.iter().map(ElementSet::singleton));
        SPairFamilies::new(n, t1, t2).expect("witness sets lie inside the labels")
    }
}

/// First witness in lexicographic order of `(A1, A2, B1, B2)`.
pub fn find_consistency_witness(
    p: &SPairFamilies,
) -> Result<Option<ConsistencyWitness>, SPairError> {
    let n = p.n();
    if n < 3 {
        return Err(SPairError::TooFewLabels(n));
    }
    let report = check_axioms(p);
    if !report.all() {
        return Err(SPairError::NotAnSPair(report));
    }
    let labels = p.labels();
    let b_candidates = labels.subsets_of_size(n - 2);
    for a1 in p.fam1.of_size(n - 1) {
        for a2 in p.fam2.of_size(n - 1) {
            if a1 == a2 {
                continue;
            }
            for &b1 in &b_candidates {
                for &b2 in &b_candidates {
                    let w = ConsistencyWitness { a1, a2, b1, b2 };
                    if w.is_valid_for(p) {
                        return Ok(Some(w));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Outcome of checking the three closure properties that follow from S1
/// and S2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureReport {
    /// all `j`-subsets of `A` in `Fi` ⇒ all `k`-subsets of `A` in `Fi` for `j <= k <= |A|`
    pub upward: bool,
    /// `A ∈ Fi` and all `j`-subsets of `A - x` in `Fi` ⇒ all `j`-subsets of `A` in `Fi`
    pub from_facet: bool,
    /// all `j`-subsets of `A` through a fixed `x` in `Fi` (`j >= 2`) ⇒ all `j`-subsets of `A` and `A` itself in `Fi`
    pub through_point: bool,
}

impl ClosureReport {
    pub fn all(&self) -> bool {
        self.upward && self.from_facet && self.through_point
    }
}

pub fn subset_closure_props(p: &SPairFamilies) -> ClosureReport {
    let n = p.n();
    let mut report = ClosureReport {
        upward: true,
        from_facet: true,
        through_point: true,
    };
    for f in p.families() {
        for a in all_subsets(n) {
            let size = a.len();
            let layer: Vec<bool> = (0..=size)
                .map(|k| f.contains_all(&a.subsets_of_size(k)))
                .collect();
            // upward propagation of full layers
            if let Some(j) = (1..=size).find(|&j| layer[j]) {
                if !(j..=size).all(|k| layer[k]) {
                    report.upward = false;
                }
            }
            if f.contains(a) {
                for x in a {
                    let rest = a.without(x);
                    for (j, &full) in layer.iter().enumerate().take(size).skip(1) {
                        if f.contains_all(&rest.subsets_of_size(j)) && !full {
                            report.from_facet = false;
                        }
                    }
                }
            }
            for x in a {
                for (j, &full) in layer.iter().enumerate().skip(2) {
                    let through_x = a.subsets_of_size(j).into_iter().filter(|b| b.contains(x));
                    if through_x.clone().all(|b| f.contains(b)) && !(full && f.contains(a)) {
                        report.through_point = false;
                    }
                }
            }
        }
    }
    report
}

/// Closes a family under the S1 and S2 rules.
pub fn saturate(
    n: usize,
    family: impl IntoIterator<Item = ElementSet>,
) -> Result<Family, SPairError> {
    let mut current = Family::new(n, family)?;
    let labels = ElementSet::full(n);
    loop {
        let mut added = Vec::new();
        for &a in current.sets() {
            // S1: one facet present forces all facets
            if a.iter().any(|x| current.contains(a.without(x))) {
                added.extend(
                    a.iter()
                        .map(|x| a.without(x))
                        .filter(|b| !current.contains(*b)),
                );
            }
            // S2: neighbours of the same size force their union
            for x in a {
                for c in labels.difference(a) {
                    if current.contains(a.without(x).with(c)) && !current.contains(a.with(c)) {
                        added.push(a.with(c));
                    }
                }
            }
        }
        if added.is_empty() {
            return Ok(current);
        }
        current = Family::new(n, current.sets().iter().copied().chain(added))?;
    }
}

/// The families of `S`-parts of circuits straddling one gap of a cyclic
/// ordering of `M \ S`.
#[derive(Debug, Clone)]
pub struct HPairContext {
    pub gap: usize,
    /// Elements of `S`, ascending; label `i` stands for `basis_labels[i]`.
    pub basis_labels: Vec<ElementId>,
    /// `x1, x2, ...`: the elements before the gap, nearest first.
    pub before: Vec<ElementId>,
    /// `y1, y2, ...`: the elements after the gap, nearest first.
    pub after: Vec<ElementId>,
    /// Circuits `{x1..xi} ∪ T` with `T ⊆ S` nonempty.
    pub circuits1: Vec<ElementSet>,
    /// Circuits `{y1..yi} ∪ T` with `T ⊆ S` nonempty.
    pub circuits2: Vec<ElementSet>,
    pub families: SPairFamilies,
}

/// Builds the H-pair at `gap` for inserting the basis `s` into `order`, a
/// cyclic ordering (in `M`'s element ids) of the elements outside `s`.
///
/// Gap `g` lies between `order[g-1]` and `order[g]`, indices mod `m`; gap 0 is
/// between the last and the first element.
pub fn build_h_pair(
    m: &PavingMatroid,
    s: ElementSet,
    order: &[ElementId],
    gap: usize,
) -> Result<HPairContext, SPairError> {
    let r = m.rank_of_matroid();
    if !m.is_basis(s) || m.rank(m.ground().difference(s)) != r {
        return Err(SPairError::RankMismatch(s));
    }
    let rest = m.ground().difference(s);
    let listed: ElementSet = order.iter().collect();
    if order.len() != rest.len() || listed != rest {
        return Err(SPairError::InvalidOrdering(
            "sequence is not a permutation of the elements outside the basis".into(),
        ));
    }
    if !windows_are_bases(m, order) {
        return Err(SPairError::InvalidOrdering(
            "some window is not a basis".into(),
        ));
    }
    let len = order.len();
    if gap >= len {
        return Err(SPairError::InvalidOrdering(format!(
            "gap {gap} out of range for {len} elements"
        )));
    }
    let before: Vec<ElementId> = (1..r).map(|t| order[(gap + len * r - t) % len]).collect();
    let after: Vec<ElementId> = (0..r - 1).map(|t| order[(gap + t) % len]).collect();
    let basis_labels = s.to_vec();
    let to_labels = |t: ElementSet| -> ElementSet {
        basis_labels
            .iter()
            .enumerate()
            .filter(|&(_, &e)| t.contains(e))
            .map(|(i, _)| i)
            .collect()
    };

    let collect = |side: &[ElementId]| -> (Vec<ElementSet>, Vec<ElementSet>) {
        let mut circuits = Vec::new();
        let mut parts = Vec::new();
        for i in 1..r {
            let head: ElementSet = side[..i].iter().collect();
            for t in s.subsets_of_size(r - i) {
                let c = head.union(t);
                if c.len() == r && m.is_circuit(c) {
                    circuits.push(c);
                    parts.push(to_labels(t));
                }
            }
        }
        circuits.sort();
        (circuits, parts)
    };
    let (circuits1, parts1) = collect(&before);
    let (circuits2, parts2) = collect(&after);
    let families = SPairFamilies::new(r, parts1, parts2)?;
    Ok(HPairContext {
        gap,
        basis_labels,
        before,
        after,
        circuits1,
        circuits2,
        families,
    })
}
