//! Exact truncated power series over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use thiserror::Error;

mod bivariate;
mod generating;

pub use bivariate::BivariateSeries;
pub use generating::{
    functional_equation_rhs, motzkin, s_bivariate, s_eval, schroeder_gf, skew_decomposable_gf,
    solve_functional_equation, sum_decomposable_gf, verify_functional_equation,
    FunctionalEquationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,
    #[error("substituted series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("square root needs constant term 1")]
    ConstantTermNotOne,
    #[error("order {got} is below the minimum {min}")]
    OrderTooSmall { got: usize, min: usize },
    #[error("coefficient of x^{0} depends on itself; bootstrap is not well founded")]
    SelfDependent(usize),
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `c_0 + c_1 x + ... + c_N x^N`, exact; everything past `x^N` is unknown.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(1, order)
    }

    pub fn monomial(power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = BigRational::one();
        }
        s
    }

    /// Uses `coeffs` as `c_0..c_N`; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series keeps at least its constant term"
        );
        Self { coeffs }
    }

    /// Integer coefficients, zero-padded (or cut) to `order`.
    pub fn from_integers(values: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, &v) in s.coeffs.iter_mut().zip(values) {
            *slot = rational(v);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The coefficients as integers, if every denominator is 1.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Coefficients as `u64`, if they are all nonnegative integers that fit.
    pub fn u64_coeffs(&self) -> Option<Vec<u64>> {
        self.integer_coeffs()?
            .iter()
            .map(|c| u64::try_from(c).ok())
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `self / rhs`; needs a nonzero constant term in `rhs`.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        let b0 = &rhs.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order().min(rhs.order());
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc -= &rhs.coeffs[j] * &q[k - j];
            }
            q.push(acc / b0);
        }
        Ok(Self { coeffs: q })
    }

    /// `self(inner(x))` by Horner's rule; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Square root with constant term 1, by Newton's iteration `y <- (y + a/y) / 2`,
    /// doubling the number of correct coefficients each round.
    pub fn sqrt_unit(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let order = self.order();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut y = Self::one(0);
        let mut precision = 0;
        while precision < order {
            precision = (2 * precision + 1).min(order);
            let y_ext = y.extend_to(precision);
            let quotient = self.truncate(precision).div(&y_ext)?;
            y = (&y_ext + &quotient).scale(&half);
        }
        Ok(y)
    }

    /// Pads with zero coefficients up to `order`.
    fn extend_to(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.max(self.order()) + 1, BigRational::zero());
        Self { coeffs }
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    /// `c0 + c1*x + c2*x^2 ...`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{magnitude}")?,
                1 => write!(f, "{magnitude}*x")?,
                _ => write!(f, "{magnitude}*x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// JSON form: an array of `[numerator, denominator]` decimal string pairs.
pub(crate) fn serialize_rationals<'a, S, I>(values: I, serializer: S) -> Result<S::Ok, S::Error>
where
    S: Serializer,
    I: ExactSizeIterator<Item = &'a BigRational>,
{
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for c in values {
        seq.serialize_element(&[c.numer().to_string(), c.denom().to_string()])?;
    }
    seq.end()
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_rationals(self.coeffs.iter(), serializer)
    }
}
