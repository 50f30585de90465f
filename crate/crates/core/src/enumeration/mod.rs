//! Exhaustive enumeration of avoidance classes.
//!
//! Permutations are grown one entry at a time: a node of length `m` gets a new
//! rightmost entry of every relative rank `1..=m+1`. Since the parent already
//! avoids the basis, only occurrences that end at the new entry are checked.
//! Every node at depth `m` is therefore exactly one member of `Av_m(basis)`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::{first_skew_split, first_sum_split, values_simple};
use crate::perm::{avoids_all, CompiledPattern, PatternSet, Permutation};

mod search;

pub use search::{
    canonical_pair, estimate_nodes, search_unbalanced, Candidate, SearchConfig, SearchError,
    SearchReport, DEFAULT_NODE_BUDGET, MAX_SEARCH_PATTERN_LEN,
};

/// Longest length the counters accept; `20!` still fits in a `u64`.
pub const MAX_COUNT_LEN: usize = 20;

/// Depth at which the tree is cut into independent parallel tasks.
const SPLIT_DEPTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountFilter {
    All,
    Involutions,
    SumDecomposable,
    SkewDecomposable,
    Simple,
}

impl CountFilter {
    pub const ALL: [CountFilter; 5] = [
        CountFilter::All,
        CountFilter::Involutions,
        CountFilter::SumDecomposable,
        CountFilter::SkewDecomposable,
        CountFilter::Simple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountFilter::All => "all",
            CountFilter::Involutions => "involutions",
            CountFilter::SumDecomposable => "sum_decomposable",
            CountFilter::SkewDecomposable => "skew_decomposable",
            CountFilter::Simple => "simple",
        }
    }

    /// Whether the filter admits the permutation given by `values`.
    pub fn admits(self, values: &[u8]) -> bool {
        match self {
            CountFilter::All => true,
            CountFilter::Involutions => values
                .iter()
                .enumerate()
                .all(|(i, &v)| values[v as usize - 1] as usize == i + 1),
            CountFilter::SumDecomposable => first_sum_split(values).is_some(),
            CountFilter::SkewDecomposable => first_skew_split(values).is_some(),
            CountFilter::Simple => values_simple(values),
        }
    }
}

impl fmt::Display for CountFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Filtered counts for `n = 1..=counts.len()`; `counts[i]` is the count at length `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub basis: PatternSet,
    pub filter: CountFilter,
    pub counts: Vec<u64>,
}

impl CountReport {
    pub fn n_max(&self) -> usize {
        self.counts.len()
    }

    /// Count at length `n` (1-indexed).
    pub fn at(&self, n: usize) -> u64 {
        self.counts[n - 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub n: usize,
    pub left: u64,
    pub right: u64,
}

/// Outcome of comparing two count sequences up to some depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    /// Largest `n` such that the counts agree for every length `1..=n`.
    pub agrees_up_to: usize,
    pub first_divergence: Option<Divergence>,
}

impl EquivalenceVerdict {
    pub fn is_equal(&self) -> bool {
        self.first_divergence.is_none()
    }
}

/// The basis compiled for anchored matching against the newest entry.
pub(crate) struct Avoiders {
    patterns: Vec<CompiledPattern>,
    // the empty pattern occurs everywhere, so nothing avoids it
    blocked: bool,
}

impl Avoiders {
    pub(crate) fn new(basis: &PatternSet) -> Self {
        let mut patterns: Vec<CompiledPattern> = basis
            .iter()
            .filter(|p| !p.is_empty())
            .map(|p| CompiledPattern::new(p, true))
            .collect();
        // short patterns reject most often
        patterns.sort_by_key(CompiledPattern::len);
        Self {
            patterns,
            blocked: basis.iter().any(Permutation::is_empty),
        }
    }

    /// Whether appending `child`'s last entry created no occurrence.
    #[inline]
    pub(crate) fn admits_last(&self, child: &[u8]) -> bool {
        self.patterns.iter().all(|p| !p.occurs_in(child))
    }

    /// Calls `f` on every admissible one-entry extension of `node`.
    #[inline]
    pub(crate) fn for_each_child(
        &self,
        node: &[u8],
        child: &mut Vec<u8>,
        mut f: impl FnMut(&[u8]),
    ) {
        let m = node.len() as u8;
        for rank in 1..=m + 1 {
            child.clear();
            child.extend(node.iter().map(|&v| if v >= rank { v + 1 } else { v }));
            child.push(rank);
            if self.admits_last(child) {
                f(child);
            }
        }
    }

    /// Depth-first walk of the subtree rooted at `node`, down to length `n_max`.
    pub(crate) fn walk<F: FnMut(&[u8])>(&self, node: &[u8], n_max: usize, visit: &mut F) {
        if self.blocked {
            return;
        }
        visit(node);
        if node.len() >= n_max {
            return;
        }
        let mut child = Vec::with_capacity(node.len() + 1);
        self.for_each_child(node, &mut child, |c| self.walk(c, n_max, visit));
    }
}

/// Visits every member of `Av_m(basis)` for `m = 0..=n_max`, parents before children.
pub fn for_each_avoider<F: FnMut(&[u8])>(n_max: usize, basis: &PatternSet, mut visit: F) {
    assert!(
        n_max <= MAX_COUNT_LEN,
        "length {n_max} exceeds {MAX_COUNT_LEN}"
    );
    Avoiders::new(basis).walk(&[], n_max, &mut visit);
}

/// `counts[m]` = number of members of `Av_m(basis)` accepted by `pred`, for `m = 0..=n_max`.
///
/// Subtrees below depth [`SPLIT_DEPTH`] run in parallel; partial counts are
/// summed in a fixed order so the result does not depend on scheduling.
pub fn count_by_length<P>(n_max: usize, basis: &PatternSet, pred: P) -> Vec<u64>
where
    P: Fn(&[u8]) -> bool + Sync,
{
    assert!(
        n_max <= MAX_COUNT_LEN,
        "length {n_max} exceeds {MAX_COUNT_LEN}"
    );
    let avoiders = Avoiders::new(basis);
    let mut counts = vec![0u64; n_max + 1];
    if avoiders.blocked {
        return counts;
    }
    let split = n_max.min(SPLIT_DEPTH);
    let mut frontier: Vec<Vec<u8>> = Vec::new();
    avoiders.walk(&[], split, &mut |node| {
        if node.len() < split {
            counts[node.len()] += u64::from(pred(node));
        } else {
            frontier.push(node.to_vec());
        }
    });
    let partials: Vec<Vec<u64>> = frontier
        .par_iter()
        .map(|root| {
            let mut local = vec![0u64; n_max + 1];
            avoiders.walk(root, n_max, &mut |node| {
                local[node.len()] += u64::from(pred(node));
            });
            local
        })
        .collect();
    for local in partials {
        for (total, part) in counts.iter_mut().zip(local) {
            *total += part;
        }
    }
    counts
}

/// Single-threaded reference for [`count_by_length`].
pub fn count_by_length_sequential<P>(n_max: usize, basis: &PatternSet, pred: P) -> Vec<u64>
where
    P: Fn(&[u8]) -> bool,
{
    let mut counts = vec![0u64; n_max + 1];
    for_each_avoider(n_max, basis, |node| {
        counts[node.len()] += u64::from(pred(node))
    });
    counts
}

/// Visits every involution of length `n`.
pub fn for_each_involution<F: FnMut(&Permutation)>(n: usize, mut visit: F) {
    fn fill<F: FnMut(&Permutation)>(values: &mut Vec<u8>, visit: &mut F) {
        let Some(i) = values.iter().position(|&v| v == 0) else {
            visit(&Permutation::from_ranks(values.clone()));
            return;
        };
        values[i] = i as u8 + 1;
        fill(values, visit);
        for j in i + 1..values.len() {
            if values[j] == 0 {
                values[i] = j as u8 + 1;
                values[j] = i as u8 + 1;
                fill(values, visit);
                values[j] = 0;
            }
        }
        values[i] = 0;
    }
    assert!(n <= MAX_COUNT_LEN, "length {n} exceeds {MAX_COUNT_LEN}");
    fill(&mut vec![0u8; n], &mut visit);
}

/// Number of members of `Av_n(basis)` accepted by `filter`.
///
/// Length 0 counts the empty permutation under `All` and `Involutions` only.
pub fn count_avoiders(n: usize, basis: &PatternSet, filter: CountFilter) -> u64 {
    match filter {
        // involutions are not closed under taking patterns, so they are generated directly
        CountFilter::Involutions => {
            let mut count = 0u64;
            for_each_involution(n, |inv| count += u64::from(avoids_all(inv, basis)));
            count
        }
        _ => count_by_length(n, basis, |v| v.len() == n && filter.admits(v))[n],
    }
}

/// Counts for every length `1..=n_max`.
pub fn count_sequence(n_max: usize, basis: &PatternSet, filter: CountFilter) -> CountReport {
    assert!(n_max >= 1, "count_sequence needs n_max >= 1");
    let counts = match filter {
        CountFilter::Involutions => (1..=n_max)
            .map(|n| count_avoiders(n, basis, filter))
            .collect(),
        _ => count_by_length(n_max, basis, |v| filter.admits(v))[1..].to_vec(),
    };
    CountReport {
        basis: basis.clone(),
        filter,
        counts,
    }
}

/// Compares two count sequences position by position.
pub fn compare_sequences(left: &[u64], right: &[u64]) -> EquivalenceVerdict {
    let depth = left.len().min(right.len());
    match (0..depth).find(|&i| left[i] != right[i]) {
        Some(i) => EquivalenceVerdict {
            agrees_up_to: i,
            first_divergence: Some(Divergence {
                n: i + 1,
                left: left[i],
                right: right[i],
            }),
        },
        None => EquivalenceVerdict {
            agrees_up_to: depth,
            first_divergence: None,
        },
    }
}

/// Compares `|Av_n(left)|` and `|Av_n(right)|` for `n = 1..=n_max`.
pub fn wilf_equal(n_max: usize, left: &PatternSet, right: &PatternSet) -> EquivalenceVerdict {
    wilf_equal_filtered(n_max, left, right, CountFilter::All)
}

pub fn wilf_equal_filtered(
    n_max: usize,
    left: &PatternSet,
    right: &PatternSet,
    filter: CountFilter,
) -> EquivalenceVerdict {
    let a = count_sequence(n_max, left, filter);
    let b = count_sequence(n_max, right, filter);
    compare_sequences(&a.counts, &b.counts)
}

/// Third patterns `π` for which `{2143, 3142, π}` is expected to be counted like `{2413, 3142}`.
pub const EGGE_PATTERNS: [&str; 8] = [
    "246135", "254613", "263514", "362415", "461325", "524361", "546132", "614352",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EggeRow {
    pub pattern: Permutation,
    pub basis: PatternSet,
    pub verdict: EquivalenceVerdict,
}

pub fn separable_basis() -> PatternSet {
    PatternSet::parse("2413,3142").expect("literal basis")
}

/// Checks each of the eight sets `{2143, 3142, π}` against the separable permutations.
pub fn egge_check(n_max: usize) -> Vec<EggeRow> {
    let reference = count_sequence(n_max, &separable_basis(), CountFilter::All);
    EGGE_PATTERNS
        .iter()
        .map(|text| {
            let pattern: Permutation = text.parse().expect("literal pattern");
            let basis = PatternSet::new([
                "2143".parse().expect("literal pattern"),
                "3142".parse().expect("literal pattern"),
                pattern.clone(),
            ]);
            let counts = count_sequence(n_max, &basis, CountFilter::All);
            EggeRow {
                pattern,
                basis,
                verdict: compare_sequences(&counts.counts, &reference.counts),
            }
        })
        .collect()
}
