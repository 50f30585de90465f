//! Intervals, simple permutations and substitution decomposition.

use thiserror::Error;

use crate::enumeration::for_each_avoider;
use crate::perm::{standardize_ranks, PatternSet, Permutation, MAX_LEN};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InflateError {
    #[error("skeleton has {skeleton} entries but {blocks} blocks were given")]
    ArityMismatch { skeleton: usize, blocks: usize },
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("inflated permutation longer than {MAX_LEN}")]
    TooLong,
}

/// `skeleton[blocks[0], ..., blocks[k-1]]`, with `skeleton` simple.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BlockDecomposition {
    pub skeleton: Permutation,
    pub blocks: Vec<Permutation>,
}

impl BlockDecomposition {
    pub fn inflate(&self) -> Permutation {
        inflate(&self.skeleton, &self.blocks).expect("decomposition blocks match skeleton")
    }
}

/// All intervals of length strictly between 1 and n, as 1-indexed inclusive ranges.
pub fn proper_intervals(perm: &Permutation) -> Vec<(usize, usize)> {
    let v = perm.values();
    let n = v.len();
    let mut out = Vec::new();
    for start in 0..n {
        let (mut lo, mut hi) = (v[start], v[start]);
        for (end, &x) in v.iter().enumerate().skip(start + 1) {
            lo = lo.min(x);
            hi = hi.max(x);
            let len = end - start + 1;
            if len < n && (hi - lo) as usize == end - start {
                out.push((start + 1, end + 1));
            }
        }
    }
    out
}

/// Lengths 1 and 2 count as simple; no permutation of length 3 is.
pub fn is_simple(perm: &Permutation) -> bool {
    values_simple(perm.values())
}

pub(crate) fn values_simple(v: &[u8]) -> bool {
    let n = v.len();
    if n <= 2 {
        return n > 0;
    }
    for start in 0..n {
        let (mut lo, mut hi) = (v[start], v[start]);
        // an interval that would reach the full length is not proper
        let stop = if start == 0 { n - 1 } else { n };
        for (end, &x) in v.iter().enumerate().take(stop).skip(start + 1) {
            lo = lo.min(x);
            hi = hi.max(x);
            if (hi - lo) as usize == end - start {
                return false;
            }
        }
    }
    true
}

pub fn is_sum_decomposable(perm: &Permutation) -> bool {
    first_sum_split(perm.values()).is_some()
}

pub fn is_skew_decomposable(perm: &Permutation) -> bool {
    first_skew_split(perm.values()).is_some()
}

/// Length of the shortest proper prefix whose values are `1..=i`.
pub(crate) fn first_sum_split(v: &[u8]) -> Option<usize> {
    let mut hi = 0u8;
    for (i, &x) in v.iter().enumerate().take(v.len().saturating_sub(1)) {
        hi = hi.max(x);
        if hi as usize == i + 1 {
            return Some(i + 1);
        }
    }
    None
}

/// Length of the shortest proper prefix whose values are the top `i` values.
pub(crate) fn first_skew_split(v: &[u8]) -> Option<usize> {
    let n = v.len();
    let mut lo = u8::MAX;
    for (i, &x) in v.iter().enumerate().take(n.saturating_sub(1)) {
        lo = lo.min(x);
        if lo as usize == n - i {
            return Some(i + 1);
        }
    }
    None
}

/// Replaces each entry of `skeleton` by a block order-isomorphic to the matching `blocks` entry.
pub fn inflate(
    skeleton: &Permutation,
    blocks: &[Permutation],
) -> Result<Permutation, InflateError> {
    if skeleton.len() != blocks.len() {
        return Err(InflateError::ArityMismatch {
            skeleton: skeleton.len(),
            blocks: blocks.len(),
        });
    }
    if let Some(i) = blocks.iter().position(Permutation::is_empty) {
        return Err(InflateError::EmptyBlock(i + 1));
    }
    let total: usize = blocks.iter().map(Permutation::len).sum();
    if total > MAX_LEN {
        return Err(InflateError::TooLong);
    }
    // offset of block i is the total size of blocks whose skeleton value is smaller
    let mut size_by_value = vec![0usize; skeleton.len() + 1];
    for (i, &s) in skeleton.values().iter().enumerate() {
        size_by_value[s as usize] = blocks[i].len();
    }
    let mut below = vec![0usize; skeleton.len() + 1];
    for value in 1..=skeleton.len() {
        below[value] = if value == 1 {
            0
        } else {
            below[value - 1] + size_by_value[value - 1]
        };
    }
    let mut out = Vec::with_capacity(total);
    for (i, &s) in skeleton.values().iter().enumerate() {
        let offset = below[s as usize] as u8;
        out.extend(blocks[i].values().iter().map(|&x| x + offset));
    }
    Ok(Permutation::from_ranks(out))
}

pub fn direct_sum(left: &Permutation, right: &Permutation) -> Permutation {
    let shift = left.len() as u8;
    Permutation::from_ranks(
        left.values()
            .iter()
            .copied()
            .chain(right.values().iter().map(|&x| x + shift))
            .collect(),
    )
}

pub fn skew_sum(left: &Permutation, right: &Permutation) -> Permutation {
    let shift = right.len() as u8;
    Permutation::from_ranks(
        left.values()
            .iter()
            .map(|&x| x + shift)
            .chain(right.values().iter().copied())
            .collect(),
    )
}

/// The substitution decomposition of a nonempty permutation.
///
/// Sum (skew) decomposable inputs get skeleton 12 (21) with a sum (skew)
/// indecomposable first block; otherwise the blocks are the maximal proper
/// intervals and the skeleton is simple of length at least 4.
pub fn block_decomposition(perm: &Permutation) -> BlockDecomposition {
    let v = perm.values();
    let n = v.len();
    assert!(n > 0, "block decomposition of the empty permutation");
    if n == 1 {
        return BlockDecomposition {
            skeleton: Permutation::identity(1),
            blocks: vec![Permutation::identity(1)],
        };
    }
    if let Some(i) = first_sum_split(v) {
        return BlockDecomposition {
            skeleton: Permutation::identity(2),
            blocks: vec![
                Permutation::standardize(&v[..i]),
                Permutation::standardize(&v[i..]),
            ],
        };
    }
    if let Some(i) = first_skew_split(v) {
        return BlockDecomposition {
            skeleton: Permutation::decreasing(2),
            blocks: vec![
                Permutation::standardize(&v[..i]),
                Permutation::standardize(&v[i..]),
            ],
        };
    }
    // Neither decomposable: the maximal proper intervals partition the positions.
    let intervals = proper_intervals(perm);
    let mut ranges: Vec<(usize, usize)> = Vec::new();
    let mut pos = 1;
    while pos <= n {
        debug_assert!(
            !intervals.iter().any(|&(s, e)| s < pos && e >= pos),
            "maximal intervals overlap"
        );
        let end = intervals
            .iter()
            .filter(|&&(s, _)| s == pos)
            .map(|&(_, e)| e)
            .max()
            .unwrap_or(pos);
        ranges.push((pos, end));
        pos = end + 1;
    }
    let reps: Vec<u8> = ranges.iter().map(|&(s, _)| v[s - 1]).collect();
    let skeleton = Permutation::from_ranks(standardize_ranks(&reps));
    let blocks = ranges
        .iter()
        .map(|&(s, e)| Permutation::standardize(&v[s - 1..e]))
        .collect();
    BlockDecomposition { skeleton, blocks }
}

/// Simple permutations of length `n` avoiding `basis`, lexicographically sorted.
/// Lengths below 4 yield nothing; see [`simples_in_class_including_degenerate`].
pub fn simples_in_class(n: usize, basis: &PatternSet) -> Vec<Permutation> {
    if n < 4 {
        return Vec::new();
    }
    simples_in_class_including_degenerate(n, basis)
}

/// As [`simples_in_class`], but lengths 1 and 2 report `1` and `12, 21` when allowed by `basis`.
pub fn simples_in_class_including_degenerate(n: usize, basis: &PatternSet) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_avoider(n, basis, |node| {
        if node.len() == n && values_simple(node) {
            out.push(Permutation::from_ranks(node.to_vec()));
        }
    });
    out.sort();
    out
}

/// Skew-merged permutations are exactly the avoiders of 2143 and 3412.
pub fn is_skew_merged(perm: &Permutation) -> bool {
    crate::perm::avoids_all(perm, &skew_merged_basis())
}

pub fn skew_merged_basis() -> PatternSet {
    PatternSet::parse("2143,3412").expect("literal basis")
}
