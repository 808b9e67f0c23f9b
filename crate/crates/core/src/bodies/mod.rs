//! Constructors for the body families, each producing a validated
//! [`QuermassVector`] together with its [`RadiusPair`].

mod crosspolytope;
mod lens;
mod parse;

pub use crosspolytope::{crosspolytope_quermass, external_angle, vertex_angle_sum};
pub use lens::{lens_perimeter_window, lens_violation_window, make_lens, LensGeometry};

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::hurwitz::{self, RationalPolynomial};
use crate::quermass::{build_polynomial, QuermassVector, RadiusPair, SteinerPolynomial};
use crate::rootfind::{Root, RootSet};
use crate::{Error, Result};

/// Volume of the unit ball in `R^n`.
pub fn kappa(n: usize) -> f64 {
    let k = n / 2;
    if n.is_multiple_of(2) {
        (1..=k).map(|j| PI / j as f64).product()
    } else {
        2.0 * (1..=k)
            .map(|j| 2.0 * PI / (2 * j + 1) as f64)
            .product::<f64>()
    }
}

/// A body family with its parameters, as written in the CLI grammar.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum BodySpec {
    Ball {
        n: usize,
    },
    Segment {
        n: usize,
        length: f64,
    },
    /// Planar convex body in `R^3` given by area and perimeter.
    Planar3D {
        area: f64,
        perimeter: f64,
        circumradius: Option<f64>,
    },
    Lens {
        circumradius: f64,
        perimeter: f64,
    },
    CapBody {
        n: usize,
        alpha: f64,
        w0: f64,
    },
    TwoTangential {
        n: usize,
        beta: f64,
        alpha: f64,
        w0: f64,
    },
    Crosspolytope {
        lambdas: Vec<f64>,
    },
    /// Limit object `Σ_{i=k}^n C(n,i) μ^i` of k-tangential bodies with
    /// vanishing `β, α`.
    TruncatedBinomialBody {
        n: usize,
        k: usize,
    },
}

/// A constructed body.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Body {
    pub spec: BodySpec,
    pub quermass: QuermassVector,
    pub radii: RadiusPair,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lens: Option<LensGeometry>,
}

impl Body {
    pub fn polynomial(&self) -> SteinerPolynomial {
        build_polynomial(&self.quermass)
    }
}

/// What a spec turns into: a body with quermassintegrals, or (for the
/// truncated-binomial limit) only its reciprocal-variable polynomial.
#[derive(Debug, Clone)]
pub enum Realization {
    Body(Body),
    LimitPolynomial(RationalPolynomial),
}

impl BodySpec {
    pub fn realize(&self) -> Result<Realization> {
        self.realize_with(false)
    }

    /// Like [`Self::realize`], but two-tangential parameters violating
    /// `α ≤ β²` yield the raw, unvalidated vector instead of an error.
    pub fn realize_unchecked(&self) -> Result<Realization> {
        self.realize_with(true)
    }

    fn realize_with(&self, unchecked: bool) -> Result<Realization> {
        let body = match *self {
            BodySpec::Ball { n } => make_ball(n)?,
            BodySpec::Segment { n, length } => make_segment(n, length)?,
            BodySpec::Planar3D {
                area,
                perimeter,
                circumradius,
            } => make_planar(area, perimeter, circumradius)?,
            BodySpec::Lens {
                circumradius,
                perimeter,
            } => make_lens(circumradius, perimeter)?,
            BodySpec::CapBody { n, alpha, w0 } => make_cap_body(n, alpha, w0)?,
            BodySpec::TwoTangential { n, beta, alpha, w0 } => {
                if unchecked {
                    two_tangential_unchecked(n, beta, alpha, w0)?
                } else {
                    make_two_tangential(n, beta, alpha, w0)?
                }
            }
            BodySpec::Crosspolytope { ref lambdas } => crosspolytope_quermass(lambdas)?,
            BodySpec::TruncatedBinomialBody { n, k } => {
                return truncated_binomial_body(n, k).map(Realization::LimitPolynomial)
            }
        };
        Ok(Realization::Body(body))
    }
}

impl std::str::FromStr for BodySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_body_spec(s)
    }
}

fn positive(name: &str, x: f64) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(Error::OutOfRange(format!("{name} = {x} must be positive")))
    }
}

fn dimension(n: usize, min: usize) -> Result<usize> {
    if n >= min {
        Ok(n)
    } else {
        Err(Error::OutOfRange(format!(
            "dimension {n} must be at least {min}"
        )))
    }
}

/// `K = E = B_n`: every `W_i = κ_n`, `r = R = 1`.
pub fn make_ball(n: usize) -> Result<Body> {
    let n = dimension(n, 1)?;
    let quermass = QuermassVector::new(n, vec![kappa(n); n + 1])?.validated()?;
    Ok(Body {
        spec: BodySpec::Ball { n },
        quermass,
        radii: RadiusPair::new(1.0, Some(1.0))?,
        lens: None,
    })
}

/// Segment of length `ℓ` against `B_n`:
/// `V(S + ρB_n) = κ_n ρ^n + ℓ κ_{n-1} ρ^{n-1}`.
pub fn make_segment(n: usize, length: f64) -> Result<Body> {
    let n = dimension(n, 1)?;
    let length = positive("length", length)?;
    let mut w = vec![0.0; n + 1];
    w[n] = kappa(n);
    w[n - 1] = length * kappa(n - 1) / n as f64;
    let r = if n == 1 { length / 2.0 } else { 0.0 };
    Ok(Body {
        spec: BodySpec::Segment { n, length },
        quermass: QuermassVector::new(n, w)?.validated()?,
        radii: RadiusPair::new(r, Some(length / 2.0))?,
        lens: None,
    })
}

/// Planar body in `R^3`: `W = (0, 2A/3, πp/6, 4π/3)`.
pub fn make_planar(area: f64, perimeter: f64, circumradius: Option<f64>) -> Result<Body> {
    let area = positive("area", area)?;
    let perimeter = positive("perimeter", perimeter)?;
    let w = planar_quermass(area, perimeter);
    Ok(Body {
        spec: BodySpec::Planar3D {
            area,
            perimeter,
            circumradius,
        },
        quermass: QuermassVector::new(3, w.to_vec())?.validated()?,
        radii: RadiusPair::new(0.0, circumradius)?,
        lens: None,
    })
}

pub(crate) fn planar_quermass(area: f64, perimeter: f64) -> [f64; 4] {
    [0.0, 2.0 * area / 3.0, PI * perimeter / 6.0, 4.0 * PI / 3.0]
}

/// Cap-body: `W_0 = … = W_{n-1} = w₀`, `W_n = α w₀`, `r = 1`.
pub fn make_cap_body(n: usize, alpha: f64, w0: f64) -> Result<Body> {
    let n = dimension(n, 1)?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::OutOfRange(format!(
            "alpha = {alpha} must lie in (0, 1]"
        )));
    }
    let w0 = positive("w0", w0)?;
    let mut w = vec![w0; n + 1];
    w[n] = alpha * w0;
    Ok(Body {
        spec: BodySpec::CapBody { n, alpha, w0 },
        quermass: QuermassVector::new(n, w)?.validated()?,
        radii: RadiusPair::new(1.0, None)?,
        lens: None,
    })
}

/// The `n` roots of `(1+s)^n - (1-α) s^n`:
/// `1/γ_k = -1 + (1-α)^{1/n} e^{2πik/n}`.
pub fn cap_body_roots_closed_form(n: usize, alpha: f64) -> Result<RootSet> {
    let n = dimension(n, 1)?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::OutOfRange(format!(
            "alpha = {alpha} must lie in (0, 1]"
        )));
    }
    if alpha == 1.0 {
        return Ok(RootSet::new(vec![Root {
            value: Complex64::new(-1.0, 0.0),
            multiplicity: n,
            error_radius: 0.0,
        }]));
    }
    let rho = (1.0 - alpha).powf(1.0 / n as f64);
    let mut roots = Vec::with_capacity(n);
    for k in 0..=n / 2 {
        let theta = 2.0 * PI * k as f64 / n as f64;
        let inv = Complex64::new(-1.0, 0.0) + Complex64::from_polar(rho, theta);
        let mut gamma = inv.inv();
        let err = 4.0 * f64::EPSILON * gamma.norm();
        let real = k == 0 || 2 * k == n;
        if real {
            gamma.im = 0.0;
        }
        roots.push(Root {
            value: gamma,
            multiplicity: 1,
            error_radius: err,
        });
        if !real {
            roots.push(Root {
                value: gamma.conj(),
                multiplicity: 1,
                error_radius: err,
            });
        }
    }
    Ok(RootSet::new(roots))
}

/// Two-tangential body: `W_0 = … = W_{n-2} = w₀`, `W_{n-1} = β w₀`,
/// `W_n = α w₀`, with `0 < α ≤ β² ≤ 1`.
pub fn make_two_tangential(n: usize, beta: f64, alpha: f64, w0: f64) -> Result<Body> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::OutOfRange(format!(
            "beta = {beta} must lie in (0, 1]"
        )));
    }
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(Error::OutOfRange(format!(
            "alpha = {alpha} must be positive"
        )));
    }
    if alpha > beta * beta {
        return Err(Error::LogConcavity {
            index: n.saturating_sub(1),
            square: beta * beta,
            product: alpha,
        });
    }
    let mut body = two_tangential_unchecked(n, beta, alpha, w0)?;
    body.quermass = body.quermass.validated()?;
    Ok(body)
}

/// The two-tangential vector without the `α ≤ β² ≤ 1` requirement; the
/// result is not flagged as a valid body.
pub fn two_tangential_unchecked(n: usize, beta: f64, alpha: f64, w0: f64) -> Result<Body> {
    let n = dimension(n, 2)?;
    let beta = positive("beta", beta)?;
    let alpha = positive("alpha", alpha)?;
    let w0 = positive("w0", w0)?;
    let mut w = vec![w0; n + 1];
    w[n - 1] = beta * w0;
    w[n] = alpha * w0;
    Ok(Body {
        spec: BodySpec::TwoTangential { n, beta, alpha, w0 },
        quermass: QuermassVector::new(n, w)?,
        radii: RadiusPair::new(1.0, None)?,
        lens: None,
    })
}

/// `Σ_{i=k}^{n} C(n,i) μ^i`, the `β, α → 0` limit of `h(K, μ)` for
/// k-tangential bodies (`μ = 1/s`).
pub fn truncated_binomial_body(n: usize, k: usize) -> Result<RationalPolynomial> {
    if !(2..=n).contains(&k) {
        return Err(Error::OutOfRange(format!(
            "need 2 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    hurwitz::truncated_binomial(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::{is_hurwitz, Stability};
    use crate::rootfind::{find_roots, find_roots_of};

    #[test]
    fn unit_ball_volumes() {
        assert!((kappa(2) - PI).abs() < 1e-15);
        assert!((kappa(3) - 4.0 * PI / 3.0).abs() < 1e-15);
        assert!((kappa(4) - PI * PI / 2.0).abs() < 1e-15);
        // Recurrence κ_n = κ_{n-2} 2π/n.
        let mut rec = [1.0, 2.0].to_vec();
        for n in 2..=30 {
            rec.push(rec[n - 2] * 2.0 * PI / n as f64);
        }
        for (n, r) in rec.iter().enumerate() {
            assert!(((kappa(n) - r) / r).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn ball_constructor() {
        let b = make_ball(3).unwrap();
        assert!(b.quermass.w().iter().all(|w| *w == kappa(3)));
        assert!(b.quermass.is_valid_body());
        assert_eq!(make_ball(2).unwrap().quermass.w(), &[PI; 3]);
    }

    #[test]
    fn segment_matches_stadium_volume() {
        // A(S + ρB_2) = 2ℓρ + πρ²; compare with Σ C(2,i) W_i ρ^i.
        let s = make_segment(2, 2.0).unwrap();
        assert_eq!(s.quermass.w(), &[0.0, 2.0, PI]);
        let p = s.polynomial();
        for rho in [0.3, 1.0, 2.5] {
            let direct = 2.0 * 2.0 * rho + PI * rho * rho;
            assert!((p.eval(Complex64::new(rho, 0.0)).re - direct).abs() < 1e-13);
        }
        // V(S + ρB_3) = ℓπρ² + (4π/3)ρ³.
        let s = make_segment(3, 1.0).unwrap();
        let w = s.quermass.w();
        assert_eq!(&w[..2], &[0.0, 0.0]);
        assert!((w[2] - PI / 3.0).abs() < 1e-15);
        let rs = find_roots(&s.polynomial()).unwrap();
        let nonzero = rs.roots().iter().find(|r| r.value.norm() > 0.0).unwrap();
        assert!((nonzero.value.re + 0.75).abs() < 1e-15);
        assert_eq!(s.radii.circumradius, Some(0.5));
        // Short segments approach a point.
        let tiny = make_segment(3, 1e-12).unwrap();
        assert!(tiny.quermass.w()[2] < 1e-11);
    }

    #[test]
    fn cap_body_examples() {
        let c = make_cap_body(4, 1.0, 2.0).unwrap();
        assert_eq!(c.quermass.w(), &[2.0; 5]);
        assert!(make_cap_body(3, 1.5, 1.0).is_err());
        assert!(make_cap_body(3, 0.0, 1.0).is_err());

        // n = 3, α = 1/2 against the numeric roots.
        let closed = cap_body_roots_closed_form(3, 0.5).unwrap();
        let numeric = find_roots(&make_cap_body(3, 0.5, 1.0).unwrap().polynomial()).unwrap();
        for (a, b) in closed.expanded().iter().zip(numeric.expanded()) {
            assert!((a - b).norm() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn cap_closed_form_quadratic() {
        // w₀(1+s)² - (1/4)w₀ s²: roots -2 and -2/3.
        let rs = cap_body_roots_closed_form(2, 0.75).unwrap();
        let v = rs.expanded();
        assert!((v[0].re + 2.0).abs() < 1e-15);
        assert!((v[1].re + 2.0 / 3.0).abs() < 1e-15);
        let quad = find_roots_of(&[1.0, 2.0, 0.75]).unwrap().expanded();
        assert!((quad[0] - v[0]).norm() < 1e-14 && (quad[1] - v[1]).norm() < 1e-14);

        let ones = cap_body_roots_closed_form(7, 1.0).unwrap();
        assert_eq!(ones.roots().len(), 1);
        assert_eq!(ones.roots()[0].multiplicity, 7);

        // γ₀ has the smallest real part.
        for n in 2..10 {
            let rs = cap_body_roots_closed_form(n, 0.3).unwrap();
            let g0 = -1.0 / (1.0 - 0.7f64.powf(1.0 / n as f64));
            assert!((rs.min_real().unwrap() - g0).abs() < 1e-12 * g0.abs());
        }
    }

    #[test]
    fn two_tangential_examples() {
        let t = make_two_tangential(5, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(t.quermass.w(), &[1.0; 6]);
        assert!(matches!(
            make_two_tangential(15, 1e-6, 1e-6, 1.0),
            Err(Error::LogConcavity { .. })
        ));
        let raw = two_tangential_unchecked(15, 1e-6, 1e-6, 1.0).unwrap();
        assert!(!raw.quermass.is_valid_body());
        assert!(find_roots(&raw.polynomial()).unwrap().max_real().unwrap() > 0.0);
        let stable = make_two_tangential(15, 1.0, 1.0, 1.0).unwrap();
        assert!(
            find_roots(&stable.polynomial())
                .unwrap()
                .max_real()
                .unwrap()
                <= 0.0
        );
    }

    #[test]
    fn truncated_binomial_body_examples() {
        let unstable = |n, k| {
            let (p, _) = truncated_binomial_body(n, k).unwrap().deflate_zero_roots();
            is_hurwitz(&p).unwrap()
        };
        assert_eq!(unstable(15, 2), Stability::Unstable);
        assert_eq!(unstable(12, 3), Stability::Unstable);
        assert_eq!(unstable(5, 2), Stability::Stable);
        let (p, _) = truncated_binomial_body(5, 2).unwrap().deflate_zero_roots();
        let rs = find_roots_of(&p.to_f64()).unwrap();
        assert!(rs.max_real().unwrap() < 0.0);
        assert!(truncated_binomial_body(5, 1).is_err());
    }
}
