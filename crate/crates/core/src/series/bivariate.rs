use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::{SeriesError, TruncatedSeries};

/// Power series in `u` and `v`, kept up to total degree `N`.
///
/// Stored as homogeneous parts: `parts[k][a]` is the coefficient of `u^a v^(k-a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    parts: Vec<Vec<BigRational>>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            parts: (0..=order)
                .map(|k| vec![BigRational::zero(); k + 1])
                .collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.parts[0][0] = c;
        s
    }

    /// The monomial `u^a v^b`, or zero if it lies past the truncation.
    pub fn monomial(a: usize, b: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if a + b <= order {
            s.parts[a + b][a] = BigRational::one();
        }
        s
    }

    pub fn u(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    pub fn v(order: usize) -> Self {
        Self::monomial(0, 1, order)
    }

    pub fn order(&self) -> usize {
        self.parts.len() - 1
    }

    /// Coefficient of `u^a v^b`; zero past the truncation.
    pub fn coeff(&self, a: usize, b: usize) -> BigRational {
        self.parts
            .get(a + b)
            .map_or_else(BigRational::zero, |part| part[a].clone())
    }

    /// Nonzero terms as `((a, b), coefficient)`, by total degree then by `a`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigRational)> {
        self.parts.iter().enumerate().flat_map(|(k, part)| {
            part.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(a, c)| ((a, k - a), c))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms().next().is_none()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            parts: self
                .parts
                .iter()
                .map(|part| part.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    /// Sums of coefficients over each total degree, i.e. the series at `u = v = x`.
    pub fn diagonal_sums(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.parts
                .iter()
                .map(|part| part.iter().fold(BigRational::zero(), |acc, c| acc + c))
                .collect(),
        )
    }

    /// Substitutes univariate series for `u` and `v`; both need zero constant term.
    pub fn substitute(
        &self,
        u: &TruncatedSeries,
        v: &TruncatedSeries,
    ) -> Result<TruncatedSeries, SeriesError> {
        if !u.coeff(0).is_zero() || !v.coeff(0).is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let order = self.order().min(u.order()).min(v.order());
        let powers = |base: &TruncatedSeries| {
            let base = base.truncate(order);
            let mut out = vec![TruncatedSeries::one(order)];
            for k in 1..=order {
                out.push(&out[k - 1] * &base);
            }
            out
        };
        let (u_pow, v_pow) = (powers(u), powers(v));
        let mut acc = TruncatedSeries::zero(order);
        for ((a, b), c) in self.terms() {
            if a + b > order {
                break;
            }
            acc = &acc + &(&u_pow[a] * &v_pow[b]).scale(c);
        }
        Ok(acc)
    }

    /// `self / rhs`, solved one homogeneous degree at a time.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        let b0 = rhs.parts[0][0].clone();
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order().min(rhs.order());
        let mut q: Vec<Vec<BigRational>> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut part = self.parts[k].clone();
            for j in 1..=k {
                sub_product(&mut part, &rhs.parts[j], &q[k - j]);
            }
            q.push(part.into_iter().map(|c| c / &b0).collect());
        }
        Ok(Self { parts: q })
    }

    /// Square root with constant term 1, one homogeneous degree at a time.
    pub fn sqrt_unit(&self) -> Result<Self, SeriesError> {
        if !self.parts[0][0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let two = BigRational::from_integer(2.into());
        let mut y: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
        for k in 1..=self.order() {
            let mut part = self.parts[k].clone();
            for j in 1..k {
                sub_product(&mut part, &y[j], &y[k - j]);
            }
            y.push(part.into_iter().map(|c| c / &two).collect());
        }
        Ok(Self { parts: y })
    }
}

/// `acc -= p * q` for homogeneous parts whose degrees add up to `acc`'s degree.
fn sub_product(acc: &mut [BigRational], p: &[BigRational], q: &[BigRational]) {
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            acc[i + j] -= a * b;
        }
    }
}

impl<'a> Add<&'a BivariateSeries> for &'a BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        BivariateSeries {
            parts: self
                .parts
                .iter()
                .zip(&rhs.parts)
                .map(|(p, q)| p.iter().zip(q).map(|(a, b)| a + b).collect())
                .collect(),
        }
    }
}

impl<'a> Sub<&'a BivariateSeries> for &'a BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self + &(-rhs)
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;

    fn neg(self) -> BivariateSeries {
        self.scale(&-BigRational::one())
    }
}

impl<'a> Mul<&'a BivariateSeries> for &'a BivariateSeries {
    type Output = BivariateSeries;

    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        let order = self.order().min(rhs.order());
        let mut out = BivariateSeries::zero(order);
        for (i, p) in self.parts.iter().enumerate().take(order + 1) {
            for (j, q) in rhs.parts.iter().enumerate().take(order + 1 - i) {
                for (a, x) in p.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (b, y) in q.iter().enumerate() {
                        out.parts[i + j][a + b] += x * y;
                    }
                }
            }
        }
        out
    }
}

/// JSON form: `{"order": N, "terms": [[a, b, [num, den]], ...]}` over nonzero terms.
impl Serialize for BivariateSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<(usize, usize, [String; 2])> = self
            .terms()
            .map(|((a, b), c)| (a, b, [c.numer().to_string(), c.denom().to_string()]))
            .collect();
        let mut st = serializer.serialize_struct("BivariateSeries", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational;

    fn sample(order: usize) -> BivariateSeries {
        // 1 + 2u - v + 3uv + u^2 v
        let mut s = BivariateSeries::one(order);
        for (a, b, c) in [(1, 0, 2), (0, 1, -1), (1, 1, 3), (2, 1, 1)] {
            s = &s + &BivariateSeries::monomial(a, b, order).scale(&rational(c));
        }
        s
    }

    #[test]
    fn product_and_inverse() {
        let s = sample(6);
        let q = BivariateSeries::one(6).div(&s).unwrap();
        assert_eq!(&q * &s, BivariateSeries::one(6));
        let u = BivariateSeries::u(4);
        let v = BivariateSeries::v(4);
        assert_eq!((&u * &v).coeff(1, 1), rational(1));
        assert_eq!(&(&u * &v) - &(&v * &u), BivariateSeries::zero(4));
        assert_eq!(
            s.div(&BivariateSeries::u(6)),
            Err(SeriesError::ZeroConstantTerm)
        );
    }

    #[test]
    fn truncates_by_total_degree() {
        let u = BivariateSeries::u(3);
        let cube = &(&u * &u) * &u;
        assert_eq!(cube.coeff(3, 0), rational(1));
        assert!((&cube * &BivariateSeries::v(3)).is_zero());
        assert_eq!(BivariateSeries::monomial(2, 2, 3), BivariateSeries::zero(3));
    }

    #[test]
    fn sqrt_squares_back() {
        let s = sample(7);
        let r = s.sqrt_unit().unwrap();
        assert_eq!(&r * &r, s);
        let sq = &s * &s;
        assert_eq!(sq.sqrt_unit().unwrap(), s);
        assert_eq!(
            s.scale(&rational(2)).sqrt_unit(),
            Err(SeriesError::ConstantTermNotOne)
        );
    }

    #[test]
    fn substitution_matches_diagonal() {
        let s = sample(6);
        let x = TruncatedSeries::x(6);
        assert_eq!(s.substitute(&x, &x).unwrap(), s.diagonal_sums());
        let diag = s.diagonal_sums();
        assert_eq!(diag, TruncatedSeries::from_integers(&[1, 1, 3, 1], 6));
    }

    #[test]
    fn json_lists_nonzero_terms() {
        let s = &BivariateSeries::one(2) + &BivariateSeries::monomial(1, 1, 2);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"order":2,"terms":[[0,0,["1","1"]],[1,1,["1","1"]]]}"#
        );
    }
}
