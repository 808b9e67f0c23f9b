//! Exact Routh-Hurwitz stability over the rationals.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::quermass::binomial;
use crate::{Error, Result};

/// Polynomial with exact rational coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stability {
    /// Every root has negative real part.
    Stable,
    /// Some root has positive real part.
    Unstable,
    /// The Routh array broke down (zero pivot or vanishing row).
    Boundary,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stability::Stable => "stable",
            Stability::Unstable => "unstable",
            Stability::Boundary => "boundary",
        })
    }
}

impl RationalPolynomial {
    /// Drops vanishing top coefficients; fails on the zero polynomial.
    pub fn new(mut coeffs: Vec<BigRational>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self { coeffs })
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Result<Self> {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    /// Exact conversion of double-precision coefficients.
    pub fn from_f64(coeffs: &[f64]) -> Result<Self> {
        let c = coeffs
            .iter()
            .map(|x| {
                BigRational::from_float(*x)
                    .ok_or_else(|| Error::InvalidQuermass(format!("non-finite coefficient {x}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Removes the factor `μ^j` and returns `(quotient, j)`.
    pub fn deflate_zero_roots(&self) -> (Self, usize) {
        let j = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (
            Self {
                coeffs: self.coeffs[j..].to_vec(),
            },
            j,
        )
    }

    /// Nearest-double coefficients, for the floating-point root finder.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Multiplies every coefficient by `factor`.
    pub fn scaled(&self, factor: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}

/// `Σ_{i=k}^{n} C(n,i) μ^i`.
pub fn truncated_binomial(n: usize, k: usize) -> Result<RationalPolynomial> {
    if k > n {
        return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    RationalPolynomial::from_integers((0..=n).map(|i| {
        if i < k {
            BigInt::zero()
        } else {
            BigInt::from_biguint(Sign::Plus, binomial(n, i))
        }
    }))
}

/// Decides whether every root of `p` lies in the open left half-plane.
///
/// A negative coefficient (after normalising the leading one to be
/// positive) already forces a root with positive real part. Otherwise the
/// Routh array is built exactly; a zero first-column entry is reported as
/// [`Stability::Boundary`].
pub fn is_hurwitz(p: &RationalPolynomial) -> Result<Stability> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if p.coeffs[0].is_zero() {
        return Err(Error::ZeroRoot);
    }
    let flip = p.coeffs[n].is_negative();
    let a: Vec<BigRational> = p
        .coeffs
        .iter()
        .map(|c| if flip { -c.clone() } else { c.clone() })
        .collect();
    if a.iter().any(Signed::is_negative) {
        return Ok(Stability::Unstable);
    }

    // Rows in descending degree: [a_n, a_{n-2}, ...], [a_{n-1}, a_{n-3}, ...].
    let mut upper: Vec<BigRational> = (0..=n).rev().step_by(2).map(|i| a[i].clone()).collect();
    let mut lower: Vec<BigRational> = (0..n).rev().step_by(2).map(|i| a[i].clone()).collect();
    let mut sign_changes = 0;
    let mut prev_positive = true;
    for _ in 0..n {
        let pivot = match lower.first() {
            Some(x) if !x.is_zero() => x.clone(),
            _ => return Ok(Stability::Boundary),
        };
        let positive = pivot.is_positive();
        if positive != prev_positive {
            sign_changes += 1;
        }
        prev_positive = positive;
        let width = upper.len().saturating_sub(1);
        let next: Vec<BigRational> = (0..width)
            .map(|j| {
                let u = upper.get(j + 1).cloned().unwrap_or_else(BigRational::zero);
                let l = lower.get(j + 1).cloned().unwrap_or_else(BigRational::zero);
                (&pivot * &u - &upper[0] * &l) / &pivot
            })
            .collect();
        upper = std::mem::replace(&mut lower, next);
    }
    Ok(if sign_changes == 0 {
        Stability::Stable
    } else {
        Stability::Unstable
    })
}

/// Smallest `n ≤ n_max` for which `Σ_{i=k}^{n} C(n,i) μ^{i-k}` is unstable.
pub fn min_unstable_dimension(k: usize, n_max: usize) -> Option<usize> {
    (k + 1..=n_max).find(|&n| {
        let p = truncated_binomial(n, k).expect("k < n");
        let (deflated, _) = p.deflate_zero_roots();
        matches!(is_hurwitz(&deflated), Ok(Stability::Unstable))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_integers(c.iter().map(|x| BigInt::from(*x))).unwrap()
    }

    #[test]
    fn binomial_power_is_stable() {
        let p = truncated_binomial(5, 0).unwrap();
        assert_eq!(is_hurwitz(&p).unwrap(), Stability::Stable);
        assert_eq!(p, ints(&[1, 5, 10, 10, 5, 1]));
    }

    #[test]
    fn truncated_binomials_of_the_counterexamples() {
        let (p15, z) = truncated_binomial(15, 2).unwrap().deflate_zero_roots();
        assert_eq!(z, 2);
        assert_eq!(is_hurwitz(&p15).unwrap(), Stability::Unstable);
        let (p12, z) = truncated_binomial(12, 3).unwrap().deflate_zero_roots();
        assert_eq!(z, 3);
        assert_eq!(is_hurwitz(&p12).unwrap(), Stability::Unstable);
        let (p5, _) = truncated_binomial(5, 2).unwrap().deflate_zero_roots();
        assert_eq!(is_hurwitz(&p5).unwrap(), Stability::Stable);
    }

    #[test]
    fn pascal_triangle_oracle() {
        // Independent Pascal rows.
        let mut row = vec![1u128];
        let mut rows = vec![row.clone()];
        for _ in 0..15 {
            let mut next = vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            rows.push(next.clone());
            row = next;
        }
        for (n, k) in [(15usize, 2usize), (12, 3), (3, 0)] {
            let p = truncated_binomial(n, k).unwrap();
            assert_eq!(p.degree(), n);
            for (i, c) in p.coeffs().iter().enumerate() {
                let want = if i < k { 0 } else { rows[n][i] };
                assert_eq!(c, &BigRational::from_integer(BigInt::from(want)));
            }
        }
        assert_eq!(
            truncated_binomial(15, 2).unwrap().coeffs()[2],
            BigRational::from_integer(105.into())
        );
        assert_eq!(
            truncated_binomial(12, 3).unwrap().coeffs()[3],
            BigRational::from_integer(220.into())
        );
        assert!(truncated_binomial(3, 4).is_err());
    }

    #[test]
    fn minimum_unstable_dimensions() {
        assert_eq!(min_unstable_dimension(2, 20), Some(15));
        assert_eq!(min_unstable_dimension(3, 20), Some(12));
        assert_eq!(min_unstable_dimension(0, 30), None);
        assert_eq!(min_unstable_dimension(2, 14), None);
    }

    #[test]
    fn errors_and_boundary() {
        assert_eq!(is_hurwitz(&ints(&[3])), Err(Error::ConstantPolynomial));
        assert_eq!(is_hurwitz(&ints(&[0, 1, 1])), Err(Error::ZeroRoot));
        // s^2 + 1: roots on the imaginary axis.
        assert_eq!(is_hurwitz(&ints(&[1, 0, 1])).unwrap(), Stability::Boundary);
        // s^3 + s^2 + s + 1 = (s+1)(s^2+1): vanishing row.
        assert_eq!(
            is_hurwitz(&ints(&[1, 1, 1, 1])).unwrap(),
            Stability::Boundary
        );
        // s^2 - s + 1
        assert_eq!(is_hurwitz(&ints(&[1, -1, 1])).unwrap(), Stability::Unstable);
        // s^3 + s^2 + 2s + 8: all positive but unstable.
        assert_eq!(
            is_hurwitz(&ints(&[8, 2, 1, 1])).unwrap(),
            Stability::Unstable
        );
        // Negative leading coefficient is normalised.
        assert_eq!(is_hurwitz(&ints(&[-2, -3, -1])).unwrap(), Stability::Stable);
        assert_eq!(Stability::Boundary.to_string(), "boundary");
    }

    #[test]
    fn from_f64_is_exact() {
        let p = RationalPolynomial::from_f64(&[0.1, 1.0]).unwrap();
        assert_eq!(p.to_f64(), vec![0.1, 1.0]);
        assert!(RationalPolynomial::from_f64(&[f64::NAN, 1.0]).is_err());
    }
}
