//! Exact integer and rational arithmetic.
//!
//! Everything downstream decides strict signs of Chern numbers, so nothing in
//! this crate touches floating point. Integers are [`num_bigint::BigInt`],
//! ratios are [`num_rational::BigRational`].
//!
//! The module provides binomial coefficients, the elementary and complete
//! homogeneous symmetric functions, and [`TruncatedSeries`], a power series
//! in one variable cut off at a fixed order. The series type is what the
//! Chern-polynomial oracles are built on.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRational = BigRational;

/// `n choose k`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Complete homogeneous symmetric function `h_k(values)`: the sum of all
/// monomials of total degree `k`.
///
/// Follows the generating-function conventions `h_0 = 1`, `h_k = 0` for
/// `k < 0`, and `h_k() = 0` for `k > 0`.
pub fn complete_homogeneous(k: i64, values: &[u64]) -> ExactInt {
    if k < 0 {
        return BigInt::zero();
    }
    let k = k as usize;
    // h[j] holds h_j of the prefix processed so far
    let mut h = vec![BigInt::zero(); k + 1];
    h[0] = BigInt::one();
    for &v in values {
        let v = BigInt::from(v);
        for j in 1..=k {
            let prev = &h[j - 1] * &v;
            h[j] += prev;
        }
    }
    h.swap_remove(k)
}

/// Elementary symmetric function `e_k(values)`; `e_0 = 1`, zero for `k < 0`
/// or `k > values.len()`.
pub fn elementary_symmetric(k: i64, values: &[u64]) -> ExactInt {
    if k < 0 || k as usize > values.len() {
        return BigInt::zero();
    }
    let k = k as usize;
    let mut e = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::one();
    for &v in values {
        let v = BigInt::from(v);
        for j in (1..=k).rev() {
            let prev = &e[j - 1] * &v;
            e[j] += prev;
        }
    }
    e.swap_remove(k)
}

/// A power series `c_0 + c_1 t + ... + c_order t^order` with everything of
/// degree above `order` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut coefficients = vec![BigRational::zero(); order + 1];
        coefficients[0] = BigRational::one();
        Self { coefficients }
    }

    /// Builds a series from leading coefficients, padding with zeros or
    /// truncating so that exactly `order + 1` coefficients are kept.
    pub fn from_coefficients(mut coefficients: Vec<ExactRational>, order: usize) -> Self {
        coefficients.resize(order + 1, BigRational::zero());
        Self { coefficients }
    }

    /// `1 + s t`, truncated.
    pub fn linear(s: &ExactInt, order: usize) -> Self {
        let mut series = Self::one(order);
        if order >= 1 {
            series.coefficients[1] = BigRational::from_integer(s.clone());
        }
        series
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    /// Coefficient of `t^k`; zero beyond the truncation order.
    pub fn coefficient(&self, k: usize) -> ExactRational {
        self.coefficients.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Series quotient `self / divisor`. The divisor needs an invertible
    /// constant term.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self> {
        let order = self.order().min(divisor.order());
        let c0 = &divisor.coefficients[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut q: Vec<ExactRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coefficients[k].clone();
            for j in 1..=k {
                acc -= &divisor.coefficients[j] * &q[k - j];
            }
            q.push(acc / c0);
        }
        Ok(Self { coefficients: q })
    }

    /// All coefficients as integers, or [`Error::NonIntegralResult`] if one
    /// of them has a denominator after reduction.
    pub fn into_integers(self) -> Result<Vec<ExactInt>> {
        self.coefficients
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegralResult(c.to_string()))
                }
            })
            .collect()
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coefficients: out }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{a}*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// Truncated expansion of `prod (1 + s t)^p / prod (1 + s' t)`.
///
/// `numerator` holds `(s, p)` pairs, `denominator` holds the `s'`. This is the
/// shape every total Chern class in this crate takes: an Euler-sequence
/// numerator over the normal-bundle factors.
pub fn series_rational_coefficients(
    numerator: &[(ExactInt, u32)],
    denominator: &[ExactInt],
    order: usize,
) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(order);
    for (s, p) in numerator {
        acc = &acc * &TruncatedSeries::linear(s, order).pow(*p);
    }
    for s in denominator {
        acc = acc.checked_div(&TruncatedSeries::linear(s, order))?;
    }
    Ok(acc)
}

/// Dense univariate polynomial with integer coefficients, lowest degree
/// first. Trailing zeros are trimmed so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coefficients: Vec<ExactInt>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<ExactInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn constant(c: ExactInt) -> Self {
        Self::new(vec![c])
    }

    pub fn coefficients(&self) -> &[ExactInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Remainder of division by a monic polynomial. Exact over the integers
    /// because the leading coefficient of the divisor is 1.
    pub fn rem_monic(&self, divisor: &Self) -> Result<Self> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        };
        if !divisor.coefficients[dd].is_one() {
            return Err(Error::InvalidInput("divisor is not monic".into()));
        }
        let mut r = self.coefficients.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let lead = r[top].clone();
            if !lead.is_zero() {
                for (j, c) in divisor.coefficients.iter().enumerate() {
                    r[top - dd + j] -= &lead * c;
                }
            }
            r.pop();
        }
        Ok(Self::new(r))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "t")?,
                1 => write!(f, "{a}t")?,
                _ if a.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Serde adapter writing big integers as decimal strings, so JSON output
/// stays exact regardless of magnitude.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Serde helpers writing a list of big integers as decimal strings.
pub mod decimal_vec {
    use num_bigint::BigInt;
    use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(deserializer)?
            .iter()
            .map(|t| t.parse().map_err(de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ints(series: TruncatedSeries) -> Vec<BigInt> {
        series.into_integers().unwrap()
    }

    /// Sum over all exponent vectors with total degree k, by recursion on the
    /// variables.
    fn brute_h(k: usize, values: &[u64]) -> BigInt {
        match values.split_first() {
            None => {
                if k == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Some((&first, rest)) => (0..=k)
                .map(|i| BigInt::from(first).pow(i as u32) * brute_h(k - i, rest))
                .sum(),
        }
    }

    /// Sum over all k-subsets by bitmask.
    fn brute_e(k: usize, values: &[u64]) -> BigInt {
        (0u32..(1 << values.len()))
            .filter(|mask| mask.count_ones() as usize == k)
            .map(|mask| {
                values
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| BigInt::from(v))
                    .product::<BigInt>()
            })
            .sum()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(7, 0), int(1));
        assert_eq!(binomial(4, 9), int(0));
        assert_eq!(binomial(4, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(64, 32), "1832624140942590534".parse::<BigInt>().unwrap());
    }

    #[test]
    fn complete_homogeneous_values() {
        assert_eq!(complete_homogeneous(2, &[2, 2]), int(12));
        assert_eq!(complete_homogeneous(0, &[]), int(1));
        assert_eq!(complete_homogeneous(3, &[2]), int(8));
        assert_eq!(complete_homogeneous(1, &[]), int(0));
        assert_eq!(complete_homogeneous(-1, &[3]), int(0));
    }

    #[test]
    fn elementary_symmetric_values() {
        assert_eq!(elementary_symmetric(3, &[2, 1, 1, 1, 1]), int(16));
        assert_eq!(brute_e(3, &[2, 1, 1, 1, 1]), int(16));
        assert_eq!(elementary_symmetric(0, &[3, 2, 1]), int(1));
        assert_eq!(elementary_symmetric(2, &[3, 2]), int(6));
        assert_eq!(elementary_symmetric(3, &[3, 2]), int(0));
        assert_eq!(elementary_symmetric(-2, &[3, 2]), int(0));
    }

    #[test]
    fn symmetric_functions_match_enumeration() {
        let mut lists: Vec<Vec<u64>> = vec![vec![]];
        for _ in 0..4 {
            let next: Vec<Vec<u64>> = lists
                .iter()
                .filter(|l| l.len() < 4)
                .flat_map(|l| {
                    let lo = l.last().copied().unwrap_or(2);
                    (lo..=6).map(move |d| {
                        let mut l = l.clone();
                        l.push(d);
                        l
                    })
                })
                .collect();
            lists.extend(next);
        }
        lists.sort();
        lists.dedup();
        for list in &lists {
            for k in 0..=10 {
                assert_eq!(complete_homogeneous(k as i64, list), brute_h(k, list), "h_{k}{list:?}");
                assert_eq!(elementary_symmetric(k as i64, list), brute_e(k, list), "e_{k}{list:?}");
            }
        }
    }

    #[test]
    fn series_examples() {
        let s = series_rational_coefficients(&[(int(1), 3)], &[], 2).unwrap();
        assert_eq!(ints(s), vec![int(1), int(3), int(3)]);

        let s = series_rational_coefficients(&[], &[int(2)], 3).unwrap();
        assert_eq!(ints(s), vec![int(1), int(-2), int(4), int(-8)]);

        // (1+t)^6 / (1+2t)^2: schoolbook expansion gives 1, 2, 3, 0
        let s = series_rational_coefficients(&[(int(1), 6)], &[int(2), int(2)], 3).unwrap();
        assert_eq!(ints(s), vec![int(1), int(2), int(3), int(0)]);
        let direct: BigInt = (0..=3)
            .map(|i| {
                let sign = if (3 - i) % 2 == 0 { 1 } else { -1 };
                int(sign) * binomial(6, i) * complete_homogeneous(3 - i, &[2, 2])
            })
            .sum();
        assert_eq!(direct, int(0));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let one = TruncatedSeries::one(3);
        let t = TruncatedSeries::from_coefficients(vec![BigRational::zero(), BigRational::one()], 3);
        assert_eq!(one.checked_div(&t), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn non_integral_coefficients_are_reported() {
        let half = BigRational::new(int(1), int(2));
        let s = TruncatedSeries::from_coefficients(vec![half], 0);
        assert!(matches!(s.into_integers(), Err(Error::NonIntegralResult(_))));
    }

    #[test]
    fn display_reads_like_a_series() {
        let s = series_rational_coefficients(&[], &[int(2)], 3).unwrap();
        assert_eq!(s.to_string(), "1 - 2*t^1 + 4*t^2 - 8*t^3 + O(t^4)");
    }

    #[test]
    fn polynomial_remainder_mod_one_plus_t_squared() {
        let one_plus_t2 = IntPolynomial::new(vec![int(1), int(0), int(1)]);
        // t^3 = -t mod (1 + t^2)
        let t3 = IntPolynomial::new(vec![int(0), int(0), int(0), int(1)]);
        assert_eq!(t3.rem_monic(&one_plus_t2).unwrap(), IntPolynomial::new(vec![int(0), int(-1)]));
        let p = &one_plus_t2 * &IntPolynomial::new(vec![int(3), int(-2)]);
        assert!(p.rem_monic(&one_plus_t2).unwrap().is_zero());
        assert_eq!(p.to_string(), "3 - 2t + 3t^2 - 2t^3");
    }

    proptest! {
        #[test]
        fn e_h_convolution_vanishes(values in prop::collection::vec(1u64..8, 0..5), k in 1i64..12) {
            let sum: BigInt = (0..=k)
                .map(|i| {
                    let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                    sign * elementary_symmetric(i, &values) * complete_homogeneous(k - i, &values)
                })
                .sum();
            prop_assert_eq!(sum, BigInt::zero());
        }

        #[test]
        fn single_factor_reproduces_binomials(p in 0u32..30, order in 0usize..20) {
            let s = ints(series_rational_coefficients(&[(int(1), p)], &[], order).unwrap());
            for (k, c) in s.iter().enumerate() {
                prop_assert_eq!(c, &binomial(p as u64, k as i64));
            }
        }

        #[test]
        fn product_then_quotient_is_identity(s in -6i64..7, p in 0u32..6, order in 0usize..10) {
            let num = series_rational_coefficients(&[(int(s), p)], &[], order).unwrap();
            let back = num.checked_div(&TruncatedSeries::linear(&int(s), order).pow(p)).unwrap();
            prop_assert_eq!(back, TruncatedSeries::one(order));
        }
    }
}
