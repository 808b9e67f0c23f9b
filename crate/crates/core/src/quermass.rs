//! Quermassintegral vectors, Steiner polynomials and their exact transforms.
//!
//! Quermassintegrals are stored without binomial weights; the weights
//! `C(n,i)` are applied only when a [`SteinerPolynomial`] is built. A
//! polynomial keeps the weight-free vector it came from so that shifting and
//! swapping stay in the same form and the round trip is bit-exact.

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::{tol, Error, Result};

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// `C(n,k)` rounded once to the nearest double.
pub fn binomial_f64(n: usize, k: usize) -> f64 {
    binomial(n, k).to_f64().unwrap_or(f64::INFINITY)
}

/// The relative quermassintegrals `W_0(K;E), …, W_n(K;E)` of a body pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "QuermassJson", into = "QuermassJson")]
pub struct QuermassVector {
    n: usize,
    w: Vec<f64>,
    valid_body: bool,
}

#[derive(Serialize, Deserialize)]
struct QuermassJson {
    n: usize,
    #[serde(rename = "W")]
    w: Vec<f64>,
}

impl TryFrom<QuermassJson> for QuermassVector {
    type Error = Error;

    fn try_from(raw: QuermassJson) -> Result<Self> {
        QuermassVector::new(raw.n, raw.w)
    }
}

impl From<QuermassVector> for QuermassJson {
    fn from(q: QuermassVector) -> Self {
        QuermassJson { n: q.n, w: q.w }
    }
}

impl QuermassVector {
    /// Checks the structural invariants: `n+1` finite nonnegative entries,
    /// zeros only as a prefix (lower-dimensional `K`) and `W_n > 0`.
    ///
    /// The result is not flagged as a valid body; see [`Self::validated`].
    pub fn new(n: usize, w: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidQuermass("dimension must be positive".into()));
        }
        if w.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                got: w.len(),
            });
        }
        if let Some(i) = w.iter().position(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::InvalidQuermass(format!(
                "W_{i} = {} is not a finite nonnegative number",
                w[i]
            )));
        }
        if w[n] <= 0.0 {
            return Err(Error::InvalidQuermass(
                "W_n must be positive (full-dimensional gauge body)".into(),
            ));
        }
        let first_nonzero = w.iter().position(|x| *x > 0.0).unwrap_or(n);
        if let Some(i) = w[first_nonzero..].iter().position(|x| *x == 0.0) {
            return Err(Error::InvalidQuermass(format!(
                "W_{} is zero after a nonzero entry",
                first_nonzero + i
            )));
        }
        Ok(Self {
            n,
            w,
            valid_body: false,
        })
    }

    /// Runs the Aleksandrov-Fenchel log-concavity check and flags the vector
    /// as a valid body.
    pub fn validated(mut self) -> Result<Self> {
        self.check_log_concavity(tol::AF_REL)?;
        self.valid_body = true;
        Ok(self)
    }

    /// `W_i^2 ≥ W_{i-1} W_{i+1}` for `1 ≤ i ≤ n-1`, relative slack `rel`.
    pub fn check_log_concavity(&self, rel: f64) -> Result<()> {
        for i in 1..self.n {
            let square = self.w[i] * self.w[i];
            let product = self.w[i - 1] * self.w[i + 1];
            if square - product < -rel * square.max(product) {
                return Err(Error::LogConcavity {
                    index: i,
                    square,
                    product,
                });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> &[f64] {
        &self.w
    }

    pub fn is_valid_body(&self) -> bool {
        self.valid_body
    }

    /// Dimension of `K`, read off the number of vanishing leading entries.
    pub fn body_dimension(&self) -> usize {
        self.n - self.w.iter().take_while(|x| **x == 0.0).count()
    }
}

/// `f(K,E,s) = Σ C(n,i) W_i s^i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolynomialJson", into = "PolynomialJson")]
pub struct SteinerPolynomial {
    n: usize,
    coeffs: Vec<f64>,
    weights: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    n: usize,
    coeffs: Vec<f64>,
}

impl TryFrom<PolynomialJson> for SteinerPolynomial {
    type Error = Error;

    fn try_from(raw: PolynomialJson) -> Result<Self> {
        if raw.coeffs.len() != raw.n + 1 {
            return Err(Error::DimensionMismatch {
                expected: raw.n + 1,
                got: raw.coeffs.len(),
            });
        }
        Ok(SteinerPolynomial::from_coeffs(raw.coeffs))
    }
}

impl From<SteinerPolynomial> for PolynomialJson {
    fn from(p: SteinerPolynomial) -> Self {
        PolynomialJson {
            n: p.n,
            coeffs: p.coeffs,
        }
    }
}

impl SteinerPolynomial {
    fn from_weights(weights: Vec<f64>) -> Self {
        let n = weights.len() - 1;
        let coeffs = weights
            .iter()
            .enumerate()
            .map(|(i, w)| binomial_f64(n, i) * w)
            .collect();
        Self { n, coeffs, weights }
    }

    /// Wraps plain ascending coefficients. The weight-free form is recovered
    /// by dividing out the binomials.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a polynomial needs at least one coefficient"
        );
        let n = coeffs.len() - 1;
        let weights = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / binomial_f64(n, i))
            .collect();
        Self { n, coeffs, weights }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Ascending coefficients `C(n,i) W_i`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// The weight-free vector `W_i = coeffs[i] / C(n,i)`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn to_quermass(&self) -> Result<QuermassVector> {
        QuermassVector::new(self.n, self.weights.clone())
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }
}

/// Applies the binomial weights.
pub fn build_polynomial(q: &QuermassVector) -> SteinerPolynomial {
    SteinerPolynomial::from_weights(q.w.clone())
}

/// `s ↦ f(s + ν)`, i.e. the polynomial of `K + νE`.
///
/// In weight-free form `W'_k = Σ_j C(n-k, j) W_{k+j} ν^j`, which keeps every
/// term nonnegative for `ν ≥ 0`.
pub fn shift_by_gauge(p: &SteinerPolynomial, nu: f64) -> SteinerPolynomial {
    let n = p.n;
    if nu == 0.0 {
        return p.clone();
    }
    let weights = (0..=n)
        .map(|k| {
            let mut acc = 0.0;
            let mut pow = 1.0;
            for j in 0..=(n - k) {
                acc += binomial_f64(n - k, j) * p.weights[k + j] * pow;
                pow *= nu;
            }
            acc
        })
        .collect();
    SteinerPolynomial::from_weights(weights)
}

/// `W_i(E;K) = W_{n-i}(K;E)`.
pub fn swap_bodies(q: &QuermassVector) -> QuermassVector {
    let mut w = q.w.clone();
    w.reverse();
    QuermassVector {
        n: q.n,
        w,
        valid_body: false,
    }
}

/// Swap in polynomial form: `s^n f(1/s)`.
pub fn swap_polynomial(p: &SteinerPolynomial) -> SteinerPolynomial {
    let mut weights = p.weights.clone();
    weights.reverse();
    SteinerPolynomial::from_weights(weights)
}

/// Sum of the roots `-n W_{n-1}/W_n` and the product term `(-1)^n W_0/W_n`.
pub fn vieta_sums(p: &SteinerPolynomial) -> Result<(f64, f64)> {
    let n = p.n;
    let lead = p.coeffs[n];
    if lead == 0.0 {
        return Err(Error::ZeroLeading);
    }
    if n == 0 {
        return Ok((0.0, 1.0));
    }
    let sum = -p.coeffs[n - 1] / lead;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok((sum, sign * p.coeffs[0] / lead))
}

/// Relative inradius `r(K;E)` and circumradius `R(K;E)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusPair {
    pub r: f64,
    #[serde(rename = "R")]
    pub circumradius: Option<f64>,
}

impl RadiusPair {
    pub fn new(r: f64, circumradius: Option<f64>) -> Result<Self> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::OutOfRange(format!("inradius {r} must be >= 0")));
        }
        if let Some(big) = circumradius {
            if !(big.is_finite() && big > 0.0) {
                return Err(Error::OutOfRange(format!("circumradius {big} must be > 0")));
            }
            if r > big {
                return Err(Error::OutOfRange(format!(
                    "inradius {r} exceeds circumradius {big}"
                )));
            }
        }
        Ok(Self { r, circumradius })
    }

    /// Radii of `(E;K)` from those of `(K;E)` via `r(K;E) R(E;K) = 1`.
    ///
    /// `None` when `R(K;E)` is unknown. A zero inradius makes the swapped
    /// circumradius unbounded, reported as unknown.
    pub fn swapped(&self) -> Option<Self> {
        let big = self.circumradius?;
        let swapped_big = (self.r > 0.0).then(|| 1.0 / self.r);
        Some(Self {
            r: 1.0 / big,
            circumradius: swapped_big,
        })
    }

    /// Radii of `K + νE`.
    pub fn shifted(&self, nu: f64) -> Self {
        Self {
            r: self.r + nu,
            circumradius: self.circumradius.map(|big| big + nu),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cube_poly() -> SteinerPolynomial {
        build_polynomial(&QuermassVector::new(3, vec![1.0; 4]).unwrap())
    }

    #[test]
    fn ball_pair_gives_binomial_expansion() {
        let k = 4.0 * PI / 3.0;
        let q = QuermassVector::new(3, vec![k; 4]).unwrap();
        let p = build_polynomial(&q);
        assert_eq!(p.coeffs(), &[k, 3.0 * k, 3.0 * k, k]);
    }

    #[test]
    fn planar_lens_polynomial_shape() {
        let (a, per) = (2.038627, 5.2);
        let q = QuermassVector::new(3, vec![0.0, 2.0 * a / 3.0, PI * per / 6.0, 4.0 * PI / 3.0])
            .unwrap();
        let p = build_polynomial(&q);
        let expect = [0.0, 2.0 * a, PI / 2.0 * per, 4.0 * PI / 3.0];
        for (c, e) in p.coeffs().iter().zip(expect) {
            assert!((c - e).abs() <= 1e-15 * e.abs().max(1.0));
        }
        assert_eq!(q.body_dimension(), 2);
    }

    #[test]
    fn octahedron_leading_coefficients() {
        // V = 4/3, S = 4√3, W_1 = S/3.
        let w1 = 4.0 * 3f64.sqrt() / 3.0;
        let q = QuermassVector::new(3, vec![4.0 / 3.0, w1, 3.0, 4.0 * PI / 3.0]).unwrap();
        let p = build_polynomial(&q);
        assert_eq!(p.coeffs()[0], 4.0 / 3.0);
        assert!((p.coeffs()[1] - 4.0 * 3f64.sqrt()).abs() < 1e-15 * 7.0);
    }

    #[test]
    fn rejects_bad_vectors() {
        assert_eq!(
            QuermassVector::new(3, vec![1.0; 3]).unwrap_err(),
            Error::DimensionMismatch {
                expected: 4,
                got: 3
            }
        );
        assert!(QuermassVector::new(2, vec![1.0, -1.0, 1.0]).is_err());
        assert!(QuermassVector::new(2, vec![1.0, 1.0, 0.0]).is_err());
        assert!(QuermassVector::new(3, vec![1.0, 0.0, 1.0, 1.0]).is_err());
        assert!(QuermassVector::new(2, vec![1.0, f64::NAN, 1.0]).is_err());
    }

    #[test]
    fn af_violation_is_reported() {
        let q = QuermassVector::new(2, vec![1.0, 0.5, 1.0]).unwrap();
        assert!(matches!(
            q.validated(),
            Err(Error::LogConcavity { index: 1, .. })
        ));
    }

    #[test]
    fn shift_identity_and_translation() {
        let p = cube_poly();
        assert_eq!(shift_by_gauge(&p, 0.0), p);
        // (1+s)^3 -> (3+s)^3
        let q = shift_by_gauge(&p, 2.0);
        assert_eq!(q.coeffs(), &[27.0, 27.0, 9.0, 1.0]);
    }

    #[test]
    fn swap_is_involution_and_reverses() {
        let q = QuermassVector::new(3, vec![0.0, 0.0, 2.0, 5.0]).unwrap();
        let s = swap_bodies(&q);
        assert_eq!(s.w(), &[5.0, 2.0, 0.0, 0.0]);
        assert_eq!(swap_bodies(&s).w(), q.w());
    }

    #[test]
    fn vieta_examples() {
        let (sum, prod) = vieta_sums(&cube_poly()).unwrap();
        assert_eq!((sum, prod), (-3.0, -1.0));
        let lens = SteinerPolynomial::from_coeffs(vec![
            0.0,
            2.0 * 2.038627,
            PI / 2.0 * 5.2,
            4.0 * PI / 3.0,
        ]);
        assert!((vieta_sums(&lens).unwrap().0 + 1.95).abs() < 1e-14);
        let cap = build_polynomial(&QuermassVector::new(4, vec![2.0; 5]).unwrap());
        assert_eq!(vieta_sums(&cap).unwrap().0, -4.0);
        assert_eq!(
            vieta_sums(&SteinerPolynomial::from_coeffs(vec![1.0, 0.0])),
            Err(Error::ZeroLeading)
        );
    }

    #[test]
    fn binomials_are_exact() {
        assert_eq!(binomial(64, 32).to_string(), "1832624140942590534");
        assert_eq!(binomial(5, 7), BigUint::default());
        assert_eq!(binomial_f64(15, 2), 105.0);
    }

    #[test]
    fn radius_pair_swap_and_shift() {
        let lens = RadiusPair::new(0.0, Some(1.0)).unwrap();
        let l1 = lens.shifted(1.0);
        assert_eq!(
            l1,
            RadiusPair {
                r: 1.0,
                circumradius: Some(2.0)
            }
        );
        let sw = l1.swapped().unwrap();
        assert_eq!(sw.r, 0.5);
        assert_eq!(sw.circumradius, Some(1.0));
        assert_eq!(lens.swapped().unwrap().circumradius, None);
        assert!(RadiusPair::new(0.5, None).unwrap().swapped().is_none());
        assert!(RadiusPair::new(2.0, Some(1.0)).is_err());
    }

    #[test]
    fn json_field_names() {
        let q = QuermassVector::new(2, vec![1.0, 2.0, 3.0]).unwrap();
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"n":2,"W":[1.0,2.0,3.0]}"#);
        let back: QuermassVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back.w(), q.w());
        let p = build_polynomial(&q);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"n":2,"coeffs":[1.0,4.0,3.0]}"#
        );
        assert!(serde_json::from_str::<QuermassVector>(r#"{"n":3,"W":[1.0]}"#).is_err());
        let r = RadiusPair::new(0.0, None).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"r":0.0,"R":null}"#);
    }
}
