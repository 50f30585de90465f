//! Permutations in one-line notation, classical pattern containment and the
//! eight symmetries generated by reverse, complement and inverse.
//!
//! Positions and values are 1-indexed in every public signature.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Longest permutation the crate will represent.
pub const MAX_LEN: usize = u8::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("empty token in permutation text")]
    EmptyToken,
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("rank {rank} out of range for length {len}")]
    RankOutOfRange { rank: usize, len: usize },
    #[error("rank {0} appears more than once")]
    Repeated(usize),
    #[error("permutation longer than {MAX_LEN}")]
    TooLong,
    #[error("operation needs a nonempty permutation")]
    Empty,
}

/// A permutation of `1..=n` in one-line notation. The empty permutation is allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from 1-indexed ranks, checking that they form a bijection on `1..=n`.
    pub fn new<I>(values: I) -> Result<Self, PermError>
    where
        I: IntoIterator<Item = usize>,
    {
        let values: Vec<usize> = values.into_iter().collect();
        let len = values.len();
        if len > MAX_LEN {
            return Err(PermError::TooLong);
        }
        let mut seen = vec![false; len + 1];
        for &rank in &values {
            if rank == 0 || rank > len {
                return Err(PermError::RankOutOfRange { rank, len });
            }
            if std::mem::replace(&mut seen[rank], true) {
                return Err(PermError::Repeated(rank));
            }
        }
        Ok(Self {
            values: values.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// Wraps ranks already known to be a bijection on `1..=n`.
    pub(crate) fn from_ranks(values: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&values), "not a permutation: {values:?}");
        Self { values }
    }

    pub fn empty() -> Self {
        Self { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Self::from_ranks((1..=n as u8).collect())
    }

    pub fn decreasing(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Self::from_ranks((1..=n as u8).rev().collect())
    }

    /// The canonical representative of the pattern formed by `seq`.
    pub fn standardize<T: Ord>(seq: &[T]) -> Self {
        Self::from_ranks(standardize_ranks(seq))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at 1-indexed `position`.
    pub fn at(&self, position: usize) -> usize {
        self.values[position - 1] as usize
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.values.iter().map(|&v| v as usize).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Self::from_ranks(inv)
    }

    pub fn reverse(&self) -> Self {
        Self::from_ranks(self.values.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let top = self.len() as u8 + 1;
        Self::from_ranks(self.values.iter().map(|&v| top - v).collect())
    }

    pub fn apply(&self, g: Symmetry) -> Self {
        apply_symmetry(self, g)
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains(self, pattern)
    }

    pub fn avoids_all(&self, patterns: &PatternSet) -> bool {
        avoids_all(self, patterns)
    }

    pub fn is_involution(&self) -> bool {
        is_involution(self)
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        assert!(n <= MAX_LEN);
        (1..=n as u8).permutations(n).map(Permutation::from_ranks)
    }
}

impl Ord for Permutation {
    /// Shorter permutations first, then lexicographic on values.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.values.cmp(&other.values))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    /// Digit string when every rank is a single digit, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.values.iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_perm(s)
    }
}

/// Parses a digit string (`"3416725"`) or a comma-separated list (`"2,4,6,1,3,5"`).
pub fn parse_perm(text: &str) -> Result<Permutation, PermError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(PermError::EmptyToken);
    }
    let ranks = if text.contains(',') {
        text.split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(PermError::EmptyToken);
                }
                tok.parse::<usize>()
                    .map_err(|_| PermError::InvalidToken(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| PermError::InvalidToken(c.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    Permutation::new(ranks)
}

pub(crate) fn is_bijection(values: &[u8]) -> bool {
    let mut seen = vec![false; values.len() + 1];
    values.iter().all(|&v| {
        let v = v as usize;
        v >= 1 && v <= values.len() && !std::mem::replace(&mut seen[v], true)
    })
}

pub(crate) fn standardize_ranks<T: Ord>(seq: &[T]) -> Vec<u8> {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
    let mut ranks = vec![0u8; seq.len()];
    for (rank, &i) in order.iter().enumerate() {
        ranks[i] = (rank + 1) as u8;
    }
    ranks
}

/// A pattern prepared for repeated matching.
///
/// Pattern positions are assigned in a fixed order; each step records which
/// previously assigned positions hold the nearest smaller and nearest larger
/// pattern values, so a host candidate is accepted only inside that value
/// window. With `anchored` set the last pattern entry is pinned to the last
/// host entry before the search starts.
#[derive(Debug, Clone)]
pub(crate) struct CompiledPattern {
    len: usize,
    anchored: bool,
    // (nearest smaller, nearest larger) earlier-assigned pattern positions, per position
    bounds: Vec<(Option<usize>, Option<usize>)>,
}

impl CompiledPattern {
    pub(crate) fn new(pattern: &Permutation, anchored: bool) -> Self {
        let p = pattern.values();
        let len = p.len();
        let mut assigned: Vec<usize> = Vec::with_capacity(len);
        if anchored && len > 0 {
            assigned.push(len - 1);
        }
        let mut bounds = vec![(None, None); len];
        let order: Vec<usize> = if anchored && len > 0 {
            (0..len - 1).collect()
        } else {
            (0..len).collect()
        };
        for j in order {
            let lo = assigned
                .iter()
                .copied()
                .filter(|&k| p[k] < p[j])
                .max_by_key(|&k| p[k]);
            let hi = assigned
                .iter()
                .copied()
                .filter(|&k| p[k] > p[j])
                .min_by_key(|&k| p[k]);
            bounds[j] = (lo, hi);
            assigned.push(j);
        }
        Self {
            len,
            anchored,
            bounds,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    /// Whether `host` holds an occurrence (ending at its last entry when anchored).
    pub(crate) fn occurs_in(&self, host: &[u8]) -> bool {
        if self.len == 0 {
            return true;
        }
        if self.len > host.len() {
            return false;
        }
        let mut slots = [0usize; MAX_LEN + 1];
        let free = if self.anchored {
            slots[self.len - 1] = host.len() - 1;
            host.len() - 1
        } else {
            host.len()
        };
        let todo = if self.anchored {
            self.len - 1
        } else {
            self.len
        };
        self.extend(host, &mut slots, 0, 0, free, todo)
    }

    fn extend(
        &self,
        host: &[u8],
        slots: &mut [usize],
        j: usize,
        start: usize,
        free: usize,
        todo: usize,
    ) -> bool {
        if j == todo {
            return true;
        }
        let (lo, hi) = self.bounds[j];
        let lo_val = lo.map_or(0, |k| host[slots[k]]);
        let hi_val = hi.map_or(u8::MAX, |k| host[slots[k]]);
        // leave room for the remaining pattern entries
        let last = free - (todo - j);
        for h in start..=last {
            let v = host[h];
            if v > lo_val && v < hi_val {
                slots[j] = h;
                if self.extend(host, slots, j + 1, h + 1, free, todo) {
                    return true;
                }
            }
        }
        false
    }
}

/// True iff some subsequence of `host` is order-isomorphic to `pattern`.
pub fn contains(host: &Permutation, pattern: &Permutation) -> bool {
    CompiledPattern::new(pattern, false).occurs_in(host.values())
}

pub fn avoids_all(host: &Permutation, patterns: &PatternSet) -> bool {
    patterns.iter().all(|p| !contains(host, p))
}

/// 1-indexed positions of the left-to-right minima and right-to-left maxima.
pub fn frame_points(perm: &Permutation) -> Result<(Vec<usize>, Vec<usize>), PermError> {
    if perm.is_empty() {
        return Err(PermError::Empty);
    }
    let v = perm.values();
    let mut lr_min = Vec::new();
    let mut best = u8::MAX;
    for (i, &x) in v.iter().enumerate() {
        if x < best {
            best = x;
            lr_min.push(i + 1);
        }
    }
    let mut rl_max = Vec::new();
    let mut best = 0u8;
    for (i, &x) in v.iter().enumerate().rev() {
        if x > best {
            best = x;
            rl_max.push(i + 1);
        }
    }
    rl_max.reverse();
    Ok((lr_min, rl_max))
}

pub fn is_involution(perm: &Permutation) -> bool {
    perm.values()
        .iter()
        .enumerate()
        .all(|(i, &v)| perm.values()[v as usize - 1] as usize == i + 1)
}

/// An element of the dihedral group of order eight acting on permutation diagrams.
///
/// The element acts as: inverse (if set), then reverse (if set), then complement (if set).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry {
    pub inverse: bool,
    pub reverse: bool,
    pub complement: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry::new(false, false, false);
    pub const REVERSE: Symmetry = Symmetry::new(false, true, false);
    pub const COMPLEMENT: Symmetry = Symmetry::new(false, false, true);
    pub const INVERSE: Symmetry = Symmetry::new(true, false, false);

    pub const fn new(inverse: bool, reverse: bool, complement: bool) -> Self {
        Self {
            inverse,
            reverse,
            complement,
        }
    }

    pub fn all() -> [Symmetry; 8] {
        let mut out = [Symmetry::IDENTITY; 8];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = Symmetry::new(k & 4 != 0, k & 2 != 0, k & 1 != 0);
        }
        out
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(self, first: Symmetry) -> Symmetry {
        // inverse conjugates reverse into complement and vice versa
        let (r1, c1) = if self.inverse {
            (first.complement, first.reverse)
        } else {
            (first.reverse, first.complement)
        };
        Symmetry::new(
            self.inverse ^ first.inverse,
            self.reverse ^ r1,
            self.complement ^ c1,
        )
    }

    pub fn group_inverse(self) -> Symmetry {
        Symmetry::all()
            .into_iter()
            .find(|&h| h.compose(self) == Symmetry::IDENTITY)
            .expect("finite group")
    }

    /// Whether the element maps involutions to involutions.
    pub fn preserves_involutions(self) -> bool {
        self.reverse == self.complement
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.inverse {
            parts.push("inverse");
        }
        if self.reverse {
            parts.push("reverse");
        }
        if self.complement {
            parts.push("complement");
        }
        if parts.is_empty() {
            f.write_str("identity")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

pub fn apply_symmetry(perm: &Permutation, g: Symmetry) -> Permutation {
    let mut out = if g.inverse {
        perm.inverse()
    } else {
        perm.clone()
    };
    if g.reverse {
        out = out.reverse();
    }
    if g.complement {
        out = out.complement();
    }
    out
}

/// A finite, duplicate-free set of patterns, ordered by length then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PatternSet {
    patterns: BTreeSet<Permutation>,
}

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Self {
        Self {
            patterns: patterns.into_iter().collect(),
        }
    }

    /// Parses comma-free digit patterns or `;`/whitespace separated comma lists,
    /// e.g. `"1324,3416725"` or `"2,4,6,1,3,5 2143"`.
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let tokens: Vec<&str> = if text.contains(';') || text.contains(char::is_whitespace) {
            text.split(|c: char| c == ';' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .collect()
        } else {
            text.split(',').collect()
        };
        tokens
            .into_iter()
            .map(parse_perm)
            .collect::<Result<BTreeSet<_>, _>>()
            .map(|patterns| Self { patterns })
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.patterns.iter()
    }

    pub fn contains_pattern(&self, p: &Permutation) -> bool {
        self.patterns.contains(p)
    }

    /// Pattern lengths in nondecreasing order.
    pub fn lengths(&self) -> Vec<usize> {
        self.patterns.iter().map(Permutation::len).collect()
    }

    /// True when no member contains another, i.e. the set is a minimal basis.
    pub fn is_antichain(&self) -> bool {
        self.patterns
            .iter()
            .tuple_combinations()
            .all(|(a, b)| !contains(b, a) && !contains(a, b))
    }

    pub fn apply(&self, g: Symmetry) -> PatternSet {
        PatternSet::new(self.patterns.iter().map(|p| apply_symmetry(p, g)))
    }

    pub fn canonical(&self) -> PatternSet {
        canonical_set(self)
    }
}

impl FromIterator<Permutation> for PatternSet {
    fn from_iter<I: IntoIterator<Item = Permutation>>(iter: I) -> Self {
        Self::new(iter)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.patterns.iter().any(|p| p.len() > 9) {
            " "
        } else {
            ","
        };
        write!(f, "{{{}}}", self.patterns.iter().join(sep))
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet{self}")
    }
}

impl Serialize for PatternSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.patterns.iter())
    }
}

/// The least image of `set` under the eight symmetries, applied uniformly to all members.
pub fn canonical_set(set: &PatternSet) -> PatternSet {
    Symmetry::all()
        .into_iter()
        .map(|g| set.apply(g))
        .min()
        .expect("eight images")
}
