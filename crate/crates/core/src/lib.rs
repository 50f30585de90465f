//! Pattern-avoidance toolkit for two unbalanced Wilf-equivalences:
//! `{1324, 3416725} ~ {1234}` through a bijection on filled skew-Ferrers boards, and
//! `{2143, 3142, 246135} ~ {2413, 3142}` through substitution decomposition and an
//! exact generating-function identity.
//!
//! Permutations are 1-indexed in one-line notation and at most 255 long.
//!
//! ```
//! use wilfkit::{count_sequence, CountFilter, PatternSet};
//!
//! let basis = PatternSet::parse("1324,3416725").unwrap();
//! let report = count_sequence(6, &basis, CountFilter::All);
//! assert_eq!(report.counts, [1, 2, 6, 23, 103, 513]);
//! ```

pub mod board;
pub mod decomposition;
pub mod enumeration;
pub mod perm;
pub mod series;

pub use board::{
    antidiagonal_filling, avoids_b1234, avoids_b1324_b3416725, b_1234, b_1324, b_3416725,
    board_avoidance_check, board_of, enumerate_nice_boards, enumerate_nice_boards_capped,
    filled_contains, greedy_filling, map_bijection, reconstruct, reflect_antidiagonal,
    rook_fillings, witness_permutation, BoardError, Direction, FilledBoard, Filling, Frame,
    FrameAndBoard, NiceBoard, DEFAULT_BOARD_CAP,
};
pub use decomposition::{
    block_decomposition, direct_sum, inflate, is_simple, is_skew_decomposable, is_skew_merged,
    is_sum_decomposable, proper_intervals, simples_in_class, simples_in_class_including_degenerate,
    skew_merged_basis, skew_sum, BlockDecomposition, InflateError,
};
pub use enumeration::{
    canonical_pair, compare_sequences, count_avoiders, count_by_length, count_by_length_sequential,
    count_sequence, egge_check, estimate_nodes, for_each_avoider, for_each_involution,
    search_unbalanced, separable_basis, wilf_equal, wilf_equal_filtered, Candidate, CountFilter,
    CountReport, Divergence, EggeRow, EquivalenceVerdict, SearchConfig, SearchError, SearchReport,
    DEFAULT_NODE_BUDGET, EGGE_PATTERNS, MAX_COUNT_LEN, MAX_SEARCH_PATTERN_LEN,
};
pub use perm::{
    apply_symmetry, avoids_all, canonical_set, contains, frame_points, is_involution, parse_perm,
    PatternSet, PermError, Permutation, Symmetry, MAX_LEN,
};
pub use series::{
    functional_equation_rhs, motzkin, s_bivariate, s_eval, schroeder_gf, skew_decomposable_gf,
    solve_functional_equation, sum_decomposable_gf, verify_functional_equation, BivariateSeries,
    FunctionalEquationReport, SeriesError, TruncatedSeries,
};
