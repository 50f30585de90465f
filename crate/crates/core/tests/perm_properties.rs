use proptest::prelude::*;
use wilfkit::{contains, frame_points, is_involution, PatternSet, Permutation, Symmetry};

fn arb_perm(max_len: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_len)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// Containment by brute force over all position subsets.
fn naive_contains(host: &Permutation, pattern: &Permutation) -> bool {
    let n = host.len();
    let k = pattern.len();
    if k > n {
        return false;
    }
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == k)
        .any(|mask| {
            let picked: Vec<u8> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| host.values()[i])
                .collect();
            Permutation::standardize(&picked) == *pattern
        })
}

#[test]
fn containment_respects_every_symmetry() {
    let patterns: Vec<Permutation> = (1..=4).flat_map(Permutation::all).collect();
    for n in 1..=6 {
        for host in Permutation::all(n) {
            for pattern in &patterns {
                let base = contains(&host, pattern);
                for g in Symmetry::all() {
                    assert_eq!(
                        base,
                        contains(&host.apply(g), &pattern.apply(g)),
                        "{host} {pattern} {g}"
                    );
                }
            }
        }
    }
}

#[test]
fn containment_matches_subset_search() {
    let patterns: Vec<Permutation> = (1..=4).flat_map(Permutation::all).collect();
    for n in 1..=7 {
        for host in Permutation::all(n) {
            for pattern in &patterns {
                assert_eq!(
                    contains(&host, pattern),
                    naive_contains(&host, pattern),
                    "{host} {pattern}"
                );
            }
        }
    }
}

#[test]
fn frame_maxima_sit_above_right_of_a_minimum() {
    for n in 1..=8 {
        for perm in Permutation::all(n) {
            let (mins, maxs) = frame_points(&perm).unwrap();
            for &p in &maxs {
                assert!(
                    mins.iter()
                        .any(|&q| q == p || (q < p && perm.at(q) < perm.at(p))),
                    "{perm}: maximum at {p}"
                );
            }
        }
    }
}

#[test]
fn involution_counts_are_telephone_numbers() {
    let mut telephone = vec![1u64, 1];
    for n in 2..=10 {
        telephone.push(telephone[n - 1] + (n as u64 - 1) * telephone[n - 2]);
    }
    for (n, &expected) in telephone.iter().enumerate().skip(1) {
        let count = Permutation::all(n).filter(is_involution).count() as u64;
        assert_eq!(count, expected, "n = {n}");
    }
}

#[test]
fn symmetry_group_is_closed_and_invertible() {
    let probe: Permutation = "25314".parse().unwrap();
    for g in Symmetry::all() {
        assert_eq!(probe.apply(g).apply(g.group_inverse()), probe);
        for h in Symmetry::all() {
            assert_eq!(
                probe.apply(h).apply(g),
                probe.apply(g.compose(h)),
                "{g} after {h}"
            );
        }
    }
}

proptest! {
    #[test]
    fn text_roundtrip(perm in arb_perm(14)) {
        let text = perm.to_string();
        prop_assert_eq!(text.parse::<Permutation>().unwrap(), perm);
    }

    #[test]
    fn containment_is_reflexive_and_transitive(a in arb_perm(9), b in arb_perm(6), c in arb_perm(4)) {
        prop_assert!(contains(&a, &a));
        if contains(&a, &b) && contains(&b, &c) {
            prop_assert!(contains(&a, &c));
        }
        if b.len() > a.len() {
            prop_assert!(!contains(&a, &b));
        }
    }

    #[test]
    fn canonical_set_is_a_symmetry_invariant(a in arb_perm(6), b in arb_perm(6)) {
        let set = PatternSet::new([a, b]);
        let canon = set.canonical();
        for g in Symmetry::all() {
            prop_assert_eq!(set.apply(g).canonical(), canon.clone());
        }
        prop_assert!(Symmetry::all().iter().any(|&g| set.apply(g) == canon));
    }
}
