use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{rational, BivariateSeries, SeriesError, TruncatedSeries};

/// Large Schröder numbers without the constant term: `(1 - x - sqrt(1 - 6x + x^2)) / 2`.
pub fn schroeder_gf(order: usize) -> TruncatedSeries {
    let radicand = TruncatedSeries::from_integers(&[1, -6, 1], order);
    let root = radicand.sqrt_unit().expect("radicand has constant term 1");
    let one_minus_x = TruncatedSeries::from_integers(&[1, -1], order);
    (&one_minus_x - &root).scale(&BigRational::new(1.into(), 2.into()))
}

/// Motzkin numbers, the fixpoint of `M = 1 + xM + x^2 M^2`.
///
/// Each round fixes at least one more coefficient, so `order + 1` rounds suffice.
pub fn motzkin(order: usize) -> TruncatedSeries {
    let x = TruncatedSeries::x(order);
    let x2 = TruncatedSeries::monomial(2, order);
    let mut m = TruncatedSeries::one(order);
    for _ in 0..=order {
        let next = &(&TruncatedSeries::one(order) + &(&x * &m)) + &(&x2 * &(&m * &m));
        if next == m {
            break;
        }
        m = next;
    }
    m
}

/// Sum-decomposable part: `2xf - x^2 (f + 1)`.
pub fn sum_decomposable_gf(f: &TruncatedSeries) -> TruncatedSeries {
    let order = f.order();
    let x = TruncatedSeries::x(order);
    let x2 = TruncatedSeries::monomial(2, order);
    let f_plus_one = f + &TruncatedSeries::one(order);
    &(&x * f).scale(&rational(2)) - &(&x2 * &f_plus_one)
}

/// Skew-decomposable part: `f^2 / (1 + f)`.
pub fn skew_decomposable_gf(f: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let order = f.order();
    (f * f).div(&(f + &TruncatedSeries::one(order)))
}

/// `s(U, V)` computed directly on univariate series. `U` and `V` need zero constant terms.
pub fn s_eval(
    u: &TruncatedSeries,
    v: &TruncatedSeries,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    if !u.coeff(0).is_zero() || !v.coeff(0).is_zero() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    let u = u.truncate(order);
    let v = v.truncate(order);
    let c = |k: i64| TruncatedSeries::constant(rational(k), u.order());
    let uv = &u * &v;
    let uv2 = &uv * &v;

    let numerator = (&(&uv * &uv) * &(&c(1) + &v)).scale(&rational(2));
    let radicand = &(&c(1) - &(&uv * &(&u.scale(&rational(2)) + &c(3))).scale(&rational(2)))
        - &(&uv2 * &(&u.scale(&rational(3)) + &c(4)));
    let u_plus_two = &u + &c(2);
    let denominator = &(&(&c(1) - &(&uv * &u_plus_two).scale(&rational(2)))
        - &(&uv2 * &u_plus_two))
        + &(&(&c(1) - &uv) * &radicand.sqrt_unit()?);
    debug_assert_eq!(denominator.coeff(0), &rational(2));
    numerator.div(&denominator)
}

/// `s(u, v)` as a bivariate series, truncated by total degree.
pub fn s_bivariate(order: usize) -> BivariateSeries {
    let c = |k: i64| BivariateSeries::constant(rational(k), order);
    let u = BivariateSeries::u(order);
    let v = BivariateSeries::v(order);
    let uv = &u * &v;
    let uv2 = &uv * &v;

    let numerator = (&(&uv * &uv) * &(&c(1) + &v)).scale(&rational(2));
    let radicand = &(&c(1) - &(&uv * &(&u.scale(&rational(2)) + &c(3))).scale(&rational(2)))
        - &(&uv2 * &(&u.scale(&rational(3)) + &c(4)));
    let u_plus_two = &u + &c(2);
    let root = radicand.sqrt_unit().expect("radicand has constant term 1");
    let denominator = &(&(&c(1) - &(&uv * &u_plus_two).scale(&rational(2)))
        - &(&uv2 * &u_plus_two))
        + &(&(&c(1) - &uv) * &root);
    assert_eq!(denominator.coeff(0, 0), rational(2));
    numerator
        .div(&denominator)
        .expect("denominator has constant term 2")
}

/// Right-hand side `x + f_sum + f_skew + s(x/(1-x), f)` for a candidate `f`.
pub fn functional_equation_rhs(f: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let order = f.order();
    let x = TruncatedSeries::x(order);
    let x_over = x.div(&TruncatedSeries::from_integers(&[1, -1], order))?;
    let simple_part = s_eval(&x_over, f, order)?;
    Ok(&(&(&x + &sum_decomposable_gf(f)) + &skew_decomposable_gf(f)?) + &simple_part)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctionalEquationReport {
    pub order: usize,
    pub solution: TruncatedSeries,
    /// `rhs(f) - f`.
    pub residual: TruncatedSeries,
}

impl FunctionalEquationReport {
    pub fn is_zero(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.residual.valuation()
    }
}

/// Plugs the Schröder series into the functional equation and reports the residual.
pub fn verify_functional_equation(order: usize) -> Result<FunctionalEquationReport, SeriesError> {
    if order < 4 {
        return Err(SeriesError::OrderTooSmall { got: order, min: 4 });
    }
    let f = schroeder_gf(order);
    let residual = &functional_equation_rhs(&f)? - &f;
    Ok(FunctionalEquationReport {
        order,
        solution: f,
        residual,
    })
}

/// Solves the functional equation one coefficient at a time from `f = 0`.
///
/// The coefficient of `x^n` on the right must not depend on `f_n`; this is checked
/// by evaluating with `f_n = 0` and `f_n = 1` and comparing.
pub fn solve_functional_equation(order: usize) -> Result<TruncatedSeries, SeriesError> {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for n in 1..=order {
        let mut trial = coeffs[..=n].to_vec();
        let at_zero = functional_equation_rhs(&TruncatedSeries::from_coeffs(trial.clone()))?;
        trial[n] = BigRational::one();
        let at_one = functional_equation_rhs(&TruncatedSeries::from_coeffs(trial))?;
        if at_zero.coeff(n) != at_one.coeff(n) {
            return Err(SeriesError::SelfDependent(n));
        }
        coeffs[n] = at_zero.coeff(n).clone();
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}
