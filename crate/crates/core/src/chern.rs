//! Chern numbers and Betti numbers of complete intersections and weighted
//! hypersurfaces.
//!
//! For a smooth complete intersection `X` of type `(d_1, ..., d_r)` in
//! `P^(n+r)` the total Chern class of `T_X` is
//! `(1 + h)^(n+r+1) / prod (1 + d_j h)`, and `deg h^n = d_1 ... d_r`. The top
//! Chern number (the topological Euler characteristic) is computed here along
//! three independent routes:
//!
//! * [`euler_ci_formula`] sums binomials against complete homogeneous
//!   symmetric functions,
//! * [`euler_ci_series`] expands the quotient as a truncated power series,
//! * [`euler_ci_recursive`] peels off one degree at a time.
//!
//! All three must agree everywhere; the test-suite checks that exhaustively
//! over a grid of small types.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, complete_homogeneous, elementary_symmetric, series_rational_coefficients, ExactInt,
    ExactRational, IntPolynomial,
};

/// Type of a complete intersection: hypersurface degrees and the dimension of
/// the variety they cut out.
///
/// Always canonical: degrees sorted ascending with hyperplanes (degree 1)
/// dropped, since a hyperplane section of `P^(n+r)` is just `P^(n+r-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawCIType", into = "RawCIType")]
pub struct CIType {
    degrees: Vec<u64>,
    dimension: u32,
}

#[derive(Serialize, Deserialize)]
struct RawCIType {
    degrees: Vec<u64>,
    dimension: u32,
}

impl TryFrom<RawCIType> for CIType {
    type Error = Error;

    fn try_from(raw: RawCIType) -> Result<Self> {
        CIType::new(raw.degrees, raw.dimension)
    }
}

impl From<CIType> for RawCIType {
    fn from(ci: CIType) -> Self {
        RawCIType { degrees: ci.degrees, dimension: ci.dimension }
    }
}

impl CIType {
    pub fn new(mut degrees: Vec<u64>, dimension: u32) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidInput("hypersurface degrees must be positive".into()));
        }
        degrees.retain(|&d| d != 1);
        degrees.sort_unstable();
        Ok(Self { degrees, dimension })
    }

    /// `P^n`.
    pub fn projective_space(dimension: u32) -> Result<Self> {
        Self::new(Vec::new(), dimension)
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// Number of (non-linear) equations.
    pub fn codimension(&self) -> usize {
        self.degrees.len()
    }

    pub fn ambient_dimension(&self) -> u32 {
        self.dimension + self.degrees.len() as u32
    }

    /// `d_1 ... d_r`, which is also `deg h^n`.
    pub fn degree_product(&self) -> ExactInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    pub fn is_projective_space(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn is_quadric(&self) -> bool {
        self.degrees == [2]
    }

    /// Complete intersection of two quadrics.
    pub fn is_two_quadrics(&self) -> bool {
        self.degrees == [2, 2]
    }

    pub fn is_all_quadrics(&self) -> bool {
        !self.degrees.is_empty() && self.degrees.iter().all(|&d| d == 2)
    }

    fn with_dimension(&self, dimension: u32) -> Self {
        Self { degrees: self.degrees.clone(), dimension }
    }
}

impl fmt::Display for CIType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degrees: Vec<String> = self.degrees.iter().map(u64::to_string).collect();
        write!(f, "({};{})", degrees.join(","), self.dimension)
    }
}

/// `deg c_n(X)` as the closed sum
/// `prod d_j * sum_i (-1)^(n-i) C(n+r+1, i) h_(n-i)(d)`.
pub fn euler_ci_formula(ci: &CIType) -> ExactInt {
    let n = ci.dimension as i64;
    let r = ci.codimension() as u64;
    let total = n as u64 + r + 1;
    let sum: BigInt = (0..=n)
        .map(|i| {
            let term = binomial(total, i) * complete_homogeneous(n - i, ci.degrees());
            if (n - i).is_even() {
                term
            } else {
                -term
            }
        })
        .sum();
    ci.degree_product() * sum
}

/// The degrees `deg(c_k(X) . h^(n-k))` for `k = 0..=n`, read off the series
/// `(1 + t)^(n+r+1) / prod (1 + d_j t)`.
pub fn chern_degrees_ci(ci: &CIType) -> Vec<ExactInt> {
    let n = ci.dimension as usize;
    let numerator = [(BigInt::one(), ci.ambient_dimension() + 1)];
    let denominator: Vec<BigInt> = ci.degrees.iter().map(|&d| BigInt::from(d)).collect();
    let series = series_rational_coefficients(&numerator, &denominator, n)
        .expect("factors 1 + d t always have unit constant term");
    let coefficients = series
        .into_integers()
        .expect("Chern series of a complete intersection has integer coefficients");
    let product = ci.degree_product();
    coefficients.into_iter().map(|c| c * &product).collect()
}

/// `deg c_n(X)` through the truncated Chern series.
pub fn euler_ci_series(ci: &CIType) -> ExactInt {
    chern_degrees_ci(ci).pop().expect("series has n + 1 >= 1 coefficients")
}

/// `deg c_n(X)` through the recursion
/// `chi(d_1, rest; n) = d_1 chi(rest; n) - (d_1 - 1) chi(d_1, rest; n - 1)`
/// with `chi(d; 0) = prod d` and `chi(; n) = n + 1`.
///
/// The table is filled bottom-up over (suffix of the degree list, dimension),
/// which is the memoized form of the recursion.
pub fn euler_ci_recursive(ci: &CIType) -> ExactInt {
    let degrees = ci.degrees();
    let r = degrees.len();
    let n = ci.dimension as usize;
    // chi[j][m] = chi(degrees[j..]; m)
    let mut chi = vec![vec![BigInt::zero(); n + 1]; r + 1];
    for (m, slot) in chi[r].iter_mut().enumerate() {
        *slot = BigInt::from(m + 1);
    }
    for j in (0..r).rev() {
        let d = BigInt::from(degrees[j]);
        let d_minus_one = &d - 1u32;
        chi[j][0] = &d * &chi[j + 1][0];
        for m in 1..=n {
            chi[j][m] = &d * &chi[j + 1][m] - &d_minus_one * &chi[j][m - 1];
        }
    }
    chi.swap_remove(0).swap_remove(n)
}

/// `chi(d; 0)`, the number of points in a zero-dimensional complete
/// intersection. Exposed separately because [`CIType`] requires `n >= 1`.
pub fn euler_ci_points(degrees: &[u64]) -> ExactInt {
    degrees.iter().map(|&d| BigInt::from(d)).product()
}

/// `b(n, r) = (-1)^n deg c_n(X) / 2^r` for the intersection `X` of `r`
/// quadrics, via `b(n, r) = b(n, r-1) + b(n-1, r)` with
/// `b(n, 1) = ((-1)^n (2n+3) + 1) / 4` and `b(1, r) = r - 2`.
pub fn quadrics_b(n: u32, r: u32) -> Result<ExactRational> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidInput("quadrics_b needs n >= 1 and r >= 1".into()));
    }
    let (n, r) = (n as usize, r as usize);
    let mut b = vec![vec![BigRational::zero(); r + 1]; n + 1];
    for m in 1..=n {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        b[m][1] = BigRational::new(BigInt::from(sign * (2 * m as i64 + 3) + 1), BigInt::from(4));
    }
    for s in 1..=r {
        b[1][s] = BigRational::from_integer(BigInt::from(s as i64 - 2));
    }
    for m in 2..=n {
        for s in 2..=r {
            b[m][s] = &b[m][s - 1] + &b[m - 1][s];
        }
    }
    Ok(b.swap_remove(n).swap_remove(r))
}

/// Betti numbers `b_0, ..., b_(2n)` of a smooth projective variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    #[serde(with = "crate::exactnum::decimal_vec")]
    betti: Vec<ExactInt>,
}

impl BettiTable {
    pub fn new(betti: Vec<ExactInt>) -> Result<Self> {
        if betti.len() % 2 == 0 {
            return Err(Error::InvalidInput("a Betti table has 2n + 1 entries".into()));
        }
        if betti.iter().any(Signed::is_negative) {
            return Err(Error::InvalidInput("Betti numbers are non-negative".into()));
        }
        Ok(Self { betti })
    }

    pub fn betti(&self) -> &[ExactInt] {
        &self.betti
    }

    pub fn dimension(&self) -> usize {
        (self.betti.len() - 1) / 2
    }

    pub fn middle(&self) -> &ExactInt {
        &self.betti[self.dimension()]
    }

    pub fn euler_characteristic(&self) -> ExactInt {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, b)| if i % 2 == 0 { b.clone() } else { -b })
            .sum()
    }

    /// `p(t) = sum_i b_i (-t)^i`.
    pub fn poincare_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.betti
                .iter()
                .enumerate()
                .map(|(i, b)| if i % 2 == 0 { b.clone() } else { -b })
                .collect(),
        )
    }
}

/// Betti numbers of a smooth complete intersection.
///
/// Outside the middle degree these agree with `P^n` (Lefschetz); the middle
/// one is whatever makes the alternating sum equal `deg c_n`.
pub fn betti_ci(ci: &CIType) -> Result<BettiTable> {
    let n = ci.dimension as usize;
    let chi = euler_ci_formula(ci);
    let middle = if n % 2 == 0 { chi - BigInt::from(n) } else { BigInt::from(n + 1) - chi };
    if middle.is_negative() {
        return Err(Error::NegativeBetti { variety: ci.to_string(), value: middle.to_string() });
    }
    let betti = (0..=2 * n)
        .map(|i| {
            if i == n {
                middle.clone()
            } else if i % 2 == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    BettiTable::new(betti)
}

pub fn poincare_polynomial_ci(ci: &CIType) -> Result<IntPolynomial> {
    Ok(betti_ci(ci)?.poincare_polynomial())
}

/// Hypersurface of degree `d` in the weighted projective space
/// `P(a_0, ..., a_m)`, assumed to avoid the singular points of the ambient
/// space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedHypersurface {
    weights: Vec<u64>,
    degree: u64,
}

impl WeightedHypersurface {
    pub fn new(weights: Vec<u64>, degree: u64) -> Result<Self> {
        if weights.len() < 5 {
            return Err(Error::InvalidInput(format!(
                "need at least 5 weights (m >= 4), got {}",
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        if degree == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        Ok(Self { weights, degree })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// `m - 1`, the dimension of the hypersurface.
    pub fn dimension(&self) -> u32 {
        self.weights.len() as u32 - 2
    }

    /// `deg h^(m-1) = d / (a_0 ... a_m)`.
    pub fn hyperplane_degree(&self) -> ExactRational {
        let product: BigInt = self.weights.iter().map(|&a| BigInt::from(a)).product();
        BigRational::new(BigInt::from(self.degree), product)
    }
}

/// `deg c_(m-1)(X) = { sum_i e_(m-1-i)(a) (-d)^i } deg h^(m-1)`.
///
/// Returns [`Error::NonIntegralResult`] when the weights and degree fall
/// outside the range where the formula computes an Euler characteristic.
pub fn euler_weighted(wh: &WeightedHypersurface) -> Result<ExactRational> {
    let top = wh.dimension() as i64;
    let minus_d = -BigInt::from(wh.degree);
    let mut power = BigInt::one();
    let mut sum = BigInt::zero();
    for i in 0..=top {
        sum += elementary_symmetric(top - i, &wh.weights) * &power;
        power *= &minus_d;
    }
    let value = BigRational::from_integer(sum) * wh.hyperplane_degree();
    if !value.is_integer() {
        return Err(Error::NonIntegralResult(value.to_string()));
    }
    Ok(value)
}

/// Closed forms for del Pezzo varieties of degree 1 and 2:
/// `(3n + 2 + (-5)^n) / 3` and `(4n + 5 - (-3)^(n+1)) / 4`.
pub fn euler_delpezzo_closed(n: u32, degree: u32) -> Result<ExactInt> {
    let nn = BigInt::from(n);
    let (numerator, denominator): (BigInt, u32) = match degree {
        1 => (BigInt::from(3) * &nn + 2 + BigInt::from(-5).pow(n), 3),
        2 => (BigInt::from(4) * &nn + 5 - BigInt::from(-3).pow(n + 1), 4),
        _ => {
            return Err(Error::InvalidInput(format!(
                "closed form only for degree 1 or 2, got {degree}"
            )))
        }
    };
    let (q, rem) = numerator.div_rem(&BigInt::from(denominator));
    if !rem.is_zero() {
        return Err(Error::NonIntegralResult(format!("{numerator}/{denominator}")));
    }
    Ok(q)
}

/// The weighted hypersurface realising the del Pezzo variety of the given
/// dimension and degree 1 (`X_6 in P(3,2,1^n)`) or 2 (`X_4 in P(2,1^(n+1))`).
pub fn delpezzo_weighted_model(n: u32, degree: u32) -> Result<WeightedHypersurface> {
    match degree {
        1 => {
            let mut weights = vec![3, 2];
            weights.extend(std::iter::repeat(1).take(n as usize));
            WeightedHypersurface::new(weights, 6)
        }
        2 => {
            let mut weights = vec![2];
            weights.extend(std::iter::repeat(1).take(n as usize + 1));
            WeightedHypersurface::new(weights, 4)
        }
        _ => Err(Error::InvalidInput(format!("no weighted model for degree {degree}"))),
    }
}

/// Same type in one lower dimension, used by callers that walk the
/// dimension recursion themselves.
pub fn lower_dimension(ci: &CIType) -> Option<CIType> {
    (ci.dimension > 1).then(|| ci.with_dimension(ci.dimension - 1))
}
