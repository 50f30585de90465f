//! Shared inputs for the benchmarks.

use wilfkit::PatternSet;

/// Bases timed by the enumeration benchmarks, with the lengths they are counted to.
pub const COUNT_CASES: [(&str, usize); 4] = [
    ("1234", 9),
    ("1324,3416725", 9),
    ("2143,3142,246135", 9),
    ("2413,3142", 9),
];

pub fn basis(text: &str) -> PatternSet {
    PatternSet::parse(text).expect("benchmark bases are well formed")
}
