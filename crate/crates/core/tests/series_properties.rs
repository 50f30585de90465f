use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use wilfkit::{
    count_sequence, is_skew_decomposable, is_sum_decomposable, s_bivariate, schroeder_gf,
    simples_in_class, skew_decomposable_gf, solve_functional_equation, sum_decomposable_gf,
    verify_functional_equation, CountFilter, PatternSet, TruncatedSeries,
};

fn series(values: Vec<i64>) -> TruncatedSeries {
    let order = values.len() - 1;
    TruncatedSeries::from_integers(&values, order)
}

fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(-5i64..=5, order + 1).prop_map(series)
}

fn arb_unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(-5i64..=5, order).prop_map(|tail| {
        let mut v = vec![1];
        v.extend(tail);
        series(v)
    })
}

/// sqrt(1 + u) = sum_k binom(1/2, k) u^k, expanded term by term.
fn binomial_sqrt(a: &TruncatedSeries) -> TruncatedSeries {
    let order = a.order();
    let mut u = a.clone();
    u = &u - &TruncatedSeries::one(order);
    let half = BigRational::new(1.into(), 2.into());
    let mut coefficient = BigRational::from_integer(1.into());
    let mut power = TruncatedSeries::one(order);
    let mut total = TruncatedSeries::zero(order);
    for k in 0..=order {
        total = &total + &power.scale(&coefficient);
        let k_big = BigRational::from_integer(k.into());
        coefficient =
            &coefficient * (&half - &k_big) / (&k_big + BigRational::from_integer(1.into()));
        power = &power * &u;
    }
    total
}

proptest! {
    #[test]
    fn ring_laws(a in arb_series(7), b in arb_series(7), c in arb_series(7)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn division_undoes_multiplication(a in arb_series(8), b in arb_unit_series(8)) {
        prop_assert_eq!((&a * &b).div(&b).unwrap(), a);
    }

    #[test]
    fn sqrt_squares_back(a in arb_unit_series(9)) {
        let root = a.sqrt_unit().unwrap();
        prop_assert_eq!(&root * &root, a.clone());
        prop_assert_eq!(root, binomial_sqrt(&a));
    }
}

#[test]
fn sqrt_of_schroeder_radicand_matches_binomial_expansion() {
    let radicand = TruncatedSeries::from_integers(&[1, -6, 1], 12);
    assert_eq!(radicand.sqrt_unit().unwrap(), binomial_sqrt(&radicand));
}

#[test]
fn functional_equation_holds_and_determines_its_solution() {
    for order in [4, 10, 20] {
        let report = verify_functional_equation(order).unwrap();
        assert!(report.is_zero(), "order {order}: {}", report.residual);
    }
    assert_eq!(solve_functional_equation(20).unwrap(), schroeder_gf(20));
}

#[test]
fn decomposable_parts_match_counts() {
    let basis = PatternSet::parse("2143,3142,246135").unwrap();
    let f = schroeder_gf(9);
    let sums = count_sequence(9, &basis, CountFilter::SumDecomposable).counts;
    let skews = count_sequence(9, &basis, CountFilter::SkewDecomposable).counts;
    let f_sum = sum_decomposable_gf(&f).u64_coeffs().unwrap();
    let f_skew = skew_decomposable_gf(&f).unwrap().u64_coeffs().unwrap();
    assert_eq!(&f_sum[1..], &sums[..]);
    assert_eq!(&f_skew[1..], &skews[..]);
    // the filters agree with the direct predicates
    let direct: u64 = wilfkit::Permutation::all(6)
        .filter(|p| wilfkit::avoids_all(p, &basis) && is_sum_decomposable(p))
        .count() as u64;
    assert_eq!(direct, sums[5]);
    let direct: u64 = wilfkit::Permutation::all(6)
        .filter(|p| wilfkit::avoids_all(p, &basis) && is_skew_decomposable(p))
        .count() as u64;
    assert_eq!(direct, skews[5]);
}

#[test]
fn s_row_sums_count_simples() {
    let basis = PatternSet::parse("2143,3142,3412").unwrap();
    let rows = s_bivariate(9).diagonal_sums().u64_coeffs().unwrap();
    assert!(rows[..4].iter().all(Zero::is_zero));
    for (n, &row) in rows.iter().enumerate().skip(4) {
        assert_eq!(row, simples_in_class(n, &basis).len() as u64, "n = {n}");
    }
}
