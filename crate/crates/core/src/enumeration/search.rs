//! Symmetry-reduced search for unbalanced Wilf-equivalences between pattern
//! sets of prescribed length multisets.

use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::{count_sequence, Avoiders, CountFilter};
use crate::perm::{canonical_set, PatternSet, Permutation, Symmetry};

pub const MAX_SEARCH_PATTERN_LEN: usize = 7;

/// Ceiling on [`estimate_nodes`]; admits the `(4) ~ (4,6)` family at depth 9.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search lengths: {0}")]
    InvalidLengths(String),
    #[error("estimated {estimate} nodes exceeds the budget of {budget}")]
    BudgetExceeded { estimate: u128, budget: u64 },
}

/// A pair whose counts agree at every probed length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Candidate {
    pub left: PatternSet,
    pub right: PatternSet,
    pub counts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub left_lengths: Vec<usize>,
    pub right_lengths: Vec<usize>,
    pub n_max: usize,
    /// Left sets compared (all of them, not reduced by symmetry).
    pub left_sets: usize,
    /// Right sets examined, one per symmetry class.
    pub right_classes: usize,
    /// Canonical right sets in which one pattern contains another.
    pub reducible: Vec<PatternSet>,
    /// Surviving pairs, one per joint symmetry class, in canonical form.
    pub survivors: Vec<Candidate>,
}

/// Least joint image of `(left, right)` under the eight symmetries.
pub fn canonical_pair(left: &PatternSet, right: &PatternSet) -> (PatternSet, PatternSet) {
    Symmetry::all()
        .into_iter()
        .map(|g| (left.apply(g), right.apply(g)))
        .min()
        .expect("eight images")
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

fn binomial(n: u128, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of sets of distinct patterns with the given length multiset.
fn set_count(lengths: &[usize]) -> u128 {
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable();
    sorted
        .chunk_by(|a, b| a == b)
        .map(|run| binomial(factorial(run[0]), run.len()))
        .product()
}

/// Rough node count for a search: every compared set is charged the size of
/// the unrestricted tree, `sum_{m <= n_max} m!`.
pub fn estimate_nodes(left_lengths: &[usize], right_lengths: &[usize], n_max: usize) -> u128 {
    let sets = set_count(left_lengths) + set_count(right_lengths).div_ceil(8);
    let per_set: u128 = (1..=n_max).map(factorial).sum();
    sets.saturating_mul(per_set)
}

fn validate(left: &[usize], right: &[usize], n_max: usize) -> Result<(), SearchError> {
    let bad = |msg: String| Err(SearchError::InvalidLengths(msg));
    if left.is_empty() || right.is_empty() {
        return bad("both sides need at least one pattern".into());
    }
    if let Some(&k) = left
        .iter()
        .chain(right)
        .find(|&&k| k == 0 || k > MAX_SEARCH_PATTERN_LEN)
    {
        return bad(format!(
            "pattern length {k} outside 1..={MAX_SEARCH_PATTERN_LEN}"
        ));
    }
    let (mut l, mut r) = (left.to_vec(), right.to_vec());
    l.sort_unstable();
    r.sort_unstable();
    if l == r {
        return bad("length multisets coincide; the pair would not be unbalanced".into());
    }
    let longest = l.iter().chain(&r).copied().max().unwrap_or(0);
    if n_max < longest {
        return bad(format!(
            "n_max {n_max} is below the longest pattern length {longest}"
        ));
    }
    Ok(())
}

/// All sets of distinct patterns with the given lengths.
fn pattern_sets(lengths: &[usize]) -> Vec<PatternSet> {
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable();
    let pools: HashMap<usize, Vec<Permutation>> = sorted
        .iter()
        .map(|&k| (k, Permutation::all(k).collect()))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Permutation> = Vec::new();
    fn pick(
        sorted: &[usize],
        pools: &HashMap<usize, Vec<Permutation>>,
        chosen: &mut Vec<Permutation>,
        out: &mut Vec<PatternSet>,
    ) {
        let i = chosen.len();
        if i == sorted.len() {
            out.push(PatternSet::new(chosen.iter().cloned()));
            return;
        }
        for p in &pools[&sorted[i]] {
            // strictly increasing picks enumerate each set once
            if chosen.last().is_some_and(|last| last >= p) {
                continue;
            }
            chosen.push(p.clone());
            pick(sorted, pools, chosen, out);
            chosen.pop();
        }
    }
    pick(&sorted, &pools, &mut chosen, &mut out);
    out
}

/// Level-by-level counts of `Av_m(basis)`, stopping after the first level
/// whose prefix `keep` rejects. Returns the counts computed so far (index 0 is `m = 1`).
fn level_counts(
    basis: &PatternSet,
    n_max: usize,
    mut keep: impl FnMut(&[u64]) -> bool,
) -> Vec<u64> {
    let avoiders = Avoiders::new(basis);
    let mut counts = Vec::with_capacity(n_max);
    if avoiders.blocked {
        return counts;
    }
    // flat buffer of the current level, stride m
    let mut level: Vec<u8> = Vec::new();
    let mut m = 0usize;
    let mut child = Vec::with_capacity(n_max);
    while m < n_max {
        let mut next = Vec::with_capacity(level.len() * 2 + 1);
        let parents: Vec<&[u8]> = if m == 0 {
            vec![&[]]
        } else {
            level.chunks_exact(m).collect()
        };
        for parent in parents {
            avoiders.for_each_child(parent, &mut child, |c| next.extend_from_slice(c));
        }
        m += 1;
        counts.push((next.len() / m) as u64);
        level = next;
        if !keep(&counts) {
            break;
        }
    }
    counts
}

/// Searches for pairs `(A, B)` with `|A|`-lengths `left_lengths` and
/// `|B|`-lengths `right_lengths` whose avoider counts agree for `n = 1..=n_max`.
///
/// Right sets are taken one per symmetry class and compared against every left
/// set; right sets that are not antichains are set aside as reducible. Each
/// right candidate is expanded one length at a time and dropped as soon as its
/// counts leave every left sequence.
pub fn search_unbalanced(
    left_lengths: &[usize],
    right_lengths: &[usize],
    n_max: usize,
    config: SearchConfig,
) -> Result<SearchReport, SearchError> {
    validate(left_lengths, right_lengths, n_max)?;
    let estimate = estimate_nodes(left_lengths, right_lengths, n_max);
    if estimate > u128::from(config.node_budget) {
        return Err(SearchError::BudgetExceeded {
            estimate,
            budget: config.node_budget,
        });
    }

    let left_sets: Vec<PatternSet> = pattern_sets(left_lengths)
        .into_iter()
        .filter(PatternSet::is_antichain)
        .collect();
    let left_counts: Vec<Vec<u64>> = left_sets
        .par_iter()
        .map(|set| count_sequence(n_max, set, CountFilter::All).counts)
        .collect();
    let mut by_sequence: HashMap<&[u64], Vec<usize>> = HashMap::new();
    let mut prefixes: HashSet<&[u64]> = HashSet::new();
    for (i, seq) in left_counts.iter().enumerate() {
        by_sequence.entry(seq.as_slice()).or_default().push(i);
        for m in 1..=seq.len() {
            prefixes.insert(&seq[..m]);
        }
    }

    let mut right_classes: Vec<PatternSet> = pattern_sets(right_lengths)
        .into_iter()
        .filter(|set| canonical_set(set) == *set)
        .collect();
    right_classes.sort();
    let (classes, reducible): (Vec<PatternSet>, Vec<PatternSet>) = right_classes
        .iter()
        .cloned()
        .partition(PatternSet::is_antichain);

    let matched: Vec<(usize, Vec<u64>)> = classes
        .par_iter()
        .enumerate()
        .filter_map(|(i, right)| {
            let counts = level_counts(right, n_max, |c| prefixes.contains(c));
            (counts.len() == n_max && by_sequence.contains_key(counts.as_slice()))
                .then_some((i, counts))
        })
        .collect();

    let mut survivors = BTreeSet::new();
    for (i, counts) in matched {
        for &l in &by_sequence[counts.as_slice()] {
            let (left, right) = canonical_pair(&left_sets[l], &classes[i]);
            survivors.insert(Candidate {
                left,
                right,
                counts: counts.clone(),
            });
        }
    }

    Ok(SearchReport {
        left_lengths: left_lengths.to_vec(),
        right_lengths: right_lengths.to_vec(),
        n_max,
        left_sets: left_sets.len(),
        right_classes: right_classes.len(),
        reducible,
        survivors: survivors.into_iter().collect(),
    })
}
