//! Numerical kernels: error function, Gauss-Legendre panels, the
//! Gaussian-weighted erf-product integral behind crosspolytope external
//! angles, and bisection for scalar equations.

#[allow(clippy::excessive_precision)]
mod erf;
mod legendre;

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod erf_reference;

pub use erf::{erf, erfc};
pub use legendre::{composite as gauss_legendre, ORDER as GL_ORDER};

use std::f64::consts::PI;

use crate::{Error, Result};

/// `prefactor · ∫₀^∞ e^{-a x²} Π_j (λ_j √π / 2) erf(x / λ_j) dx`.
///
/// Each factor is `∫₀ˣ e^{-y²/λ_j²} dy` in closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegrandSpec {
    pub a: f64,
    pub factors: Vec<f64>,
    pub prefactor: f64,
}

/// Tail level relative to the whole integral below which `[x*, ∞)` is dropped.
const TAIL_LOG: f64 = 18.0 * std::f64::consts::LN_10;
const MAX_PANELS: usize = 1 << 16;

/// `ln Γ((m+1)/2)` for a nonnegative integer `m`.
fn ln_gamma_half(m: usize) -> f64 {
    if m % 2 == 1 {
        // Γ(k) = (k-1)!, k = (m+1)/2
        (1..m.div_ceil(2)).map(|j| (j as f64).ln()).sum()
    } else {
        // Γ(j + 1/2) = √π Π_{i=1}^{j} (i - 1/2)
        let j = m / 2;
        0.5 * PI.ln() + (1..=j).map(|i| (i as f64 - 0.5).ln()).sum::<f64>()
    }
}

/// `a x*²` such that `Q((m+1)/2, a x*²) < 1e-18`.
///
/// The integrand is `e^{-ax²} x^m h(x)` with `h` nonincreasing (each
/// `erf(x/λ)/x` decreases), so the incomplete-gamma ratio bounds the
/// dropped tail relative to the full integral. Never below `ln(1e18)`.
fn truncation_exponent(m: usize) -> f64 {
    let k = (m as f64 + 1.0) / 2.0;
    let lg = ln_gamma_half(m);
    let ln_bound = |t: f64| {
        let base = (k - 1.0) * t.ln() - t - lg;
        if k > 1.0 {
            base + (t / (t - (k - 1.0))).ln()
        } else {
            base
        }
    };
    let mut t = TAIL_LOG;
    while t <= k - 1.0 || ln_bound(t) > -TAIL_LOG {
        t += 0.25;
    }
    t
}

/// Upper integration limit used for `spec`.
pub fn truncation_point(spec: &IntegrandSpec) -> f64 {
    (truncation_exponent(spec.factors.len()) / spec.a).sqrt()
}

/// Evaluates the integral of `spec` to relative accuracy `rel_tol` by
/// doubling the number of 64-point Gauss-Legendre panels on `[0, x*]`.
pub fn integrate_gaussian_erf(spec: &IntegrandSpec, rel_tol: f64) -> Result<f64> {
    if !(rel_tol >= 1e-12) {
        return Err(Error::OutOfRange(format!("rel_tol {rel_tol} below 1e-12")));
    }
    if !(spec.a > 0.0 && spec.a.is_finite()) {
        return Err(Error::OutOfRange(format!(
            "Gaussian rate {} must be positive",
            spec.a
        )));
    }
    if spec.factors.iter().any(|l| !(*l > 0.0 && l.is_finite())) {
        return Err(Error::OutOfRange("erf factors must be positive".into()));
    }

    // Equal λ share one erf evaluation.
    let mut sorted = spec.factors.clone();
    sorted.sort_by(f64::total_cmp);
    let mut groups: Vec<(f64, i32)> = Vec::new();
    for l in sorted {
        match groups.last_mut() {
            Some((v, c)) if *v == l => *c += 1,
            _ => groups.push((l, 1)),
        }
    }
    let half_sqrt_pi = PI.sqrt() / 2.0;
    let a = spec.a;
    let integrand = |x: f64| {
        let mut v = (-a * x * x).exp();
        for &(l, c) in &groups {
            v *= (l * half_sqrt_pi * erf(x / l)).powi(c);
        }
        v
    };

    let upper = truncation_point(spec);
    let mut panels = 2;
    let mut prev = legendre::composite(&integrand, 0.0, upper, 1);
    loop {
        let cur = legendre::composite(&integrand, 0.0, upper, panels);
        if (cur - prev).abs() <= rel_tol * cur.abs() {
            return Ok(spec.prefactor * cur);
        }
        if panels >= MAX_PANELS {
            return Err(Error::Quadrature(format!(
                "a = {a}, factors = {:?}: {panels} panels, last change {:e}",
                spec.factors,
                (cur - prev).abs()
            )));
        }
        prev = cur;
        panels *= 2;
    }
}

/// Bisection for a sign change of `f` on `[lo, hi]`; stops when the bracket
/// is no wider than `tol` (or cannot shrink further) and returns its midpoint.
pub fn solve_scalar<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let (flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if !(flo * fhi < 0.0) {
        return Err(Error::NoSignChange { lo, hi });
    }
    let lo_negative = flo < 0.0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erf_matches_reference_to_1e15() {
        for &(x, e, ec) in erf_reference::ERF_TABLE {
            assert!((erf(x) - e).abs() <= 1e-15, "erf({x}) = {} vs {e}", erf(x));
            assert!((erf(-x) + e).abs() <= 1e-15);
            assert!(
                (erfc(x) - ec).abs() <= 1e-15 * ec.max(1e-300) * 4.0 + 1e-300,
                "erfc({x})"
            );
        }
        assert_eq!(erf(f64::INFINITY), 1.0);
        assert_eq!(erfc(-40.0), 2.0);
        assert!(erf(f64::NAN).is_nan());
    }

    #[test]
    fn plain_gaussian() {
        let spec = IntegrandSpec {
            a: 1.0,
            factors: vec![],
            prefactor: 1.0,
        };
        let v = integrate_gaussian_erf(&spec, 1e-12).unwrap();
        assert!((v - PI.sqrt() / 2.0).abs() < 1e-15);
    }

    /// Trapezoid reference on a fine grid; the integrand is smooth and
    /// decays like a Gaussian, so 2e5 intervals reach ~1e-12.
    fn trapezoid(spec: &IntegrandSpec, upper: f64, steps: usize) -> f64 {
        let h = upper / steps as f64;
        let f = |x: f64| {
            let mut v = (-spec.a * x * x).exp();
            for l in &spec.factors {
                v *= l * PI.sqrt() / 2.0 * erf(x / l);
            }
            v
        };
        let mut s = 0.5 * (f(0.0) + f(upper));
        for i in 1..steps {
            s += f(h * i as f64);
        }
        spec.prefactor * s * h
    }

    #[test]
    fn one_erf_factor_matches_closed_form_and_trapezoid() {
        // ∫ e^{-x²} F(x) dx with F' = e^{-x²}: F(∞)²/2 = π/8.
        let spec = IntegrandSpec {
            a: 1.0,
            factors: vec![1.0],
            prefactor: 1.0,
        };
        let v = integrate_gaussian_erf(&spec, 1e-12).unwrap();
        assert!((v - PI / 8.0).abs() < 1e-14);
        // Endpoint correction h²/12 · f'(0), f'(0) = 1.
        let h = 12.0 / 200_000.0;
        let t = trapezoid(&spec, 12.0, 200_000) + h * h / 12.0;
        assert!((v - t).abs() < 1e-12);
    }

    #[test]
    fn octahedron_vertex_integral() {
        // Vertex of C_3^*(1,1,1): a = 1, two erf factors. With F as above,
        // ∫ F' F² = F(∞)³/3 = (√π/2)³/3, and the prefactor 2²/π^{3/2} turns it
        // into the vertex external angle 1/6.
        let spec = IntegrandSpec {
            a: 1.0,
            factors: vec![1.0, 1.0],
            prefactor: 4.0 / PI.powf(1.5),
        };
        let v = integrate_gaussian_erf(&spec, 1e-12).unwrap();
        assert!((v - 1.0 / 6.0).abs() < 1e-13, "{v}");
    }

    #[test]
    fn sharp_factors_converge() {
        let spec = IntegrandSpec {
            a: 1.0,
            factors: [vec![0.01; 10], vec![1.0; 9]].concat(),
            prefactor: 1.0,
        };
        let coarse = integrate_gaussian_erf(&spec, 1e-8).unwrap();
        let fine = integrate_gaussian_erf(&spec, 1e-12).unwrap();
        assert!(((coarse - fine) / fine).abs() < 1e-7);
        let t = trapezoid(&spec, truncation_point(&spec), 400_000);
        assert!(((fine - t) / fine).abs() < 1e-9, "{fine} vs {t}");
    }

    #[test]
    fn truncation_covers_power_law_growth() {
        let none = IntegrandSpec {
            a: 2.0,
            factors: vec![],
            prefactor: 1.0,
        };
        assert!((truncation_point(&none) - (TAIL_LOG / 2.0).sqrt()).abs() < 0.1);
        let many = IntegrandSpec {
            a: 1.0,
            factors: vec![1.0; 19],
            prefactor: 1.0,
        };
        assert!(truncation_point(&many) > TAIL_LOG.sqrt());
        assert_eq!(ln_gamma_half(0), 0.5 * PI.ln());
        assert!((ln_gamma_half(9) - 24f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_inputs() {
        let spec = IntegrandSpec {
            a: 0.0,
            factors: vec![],
            prefactor: 1.0,
        };
        assert!(integrate_gaussian_erf(&spec, 1e-10).is_err());
        let spec = IntegrandSpec {
            a: 1.0,
            factors: vec![],
            prefactor: 1.0,
        };
        assert!(integrate_gaussian_erf(&spec, 1e-13).is_err());
    }

    #[test]
    fn bisection() {
        let x = solve_scalar(|x| x - 1.0, 0.0, 2.0, 1e-15).unwrap();
        assert!((x - 1.0).abs() < 1e-15);
        assert!(matches!(
            solve_scalar(|x| x * x + 1.0, -1.0, 1.0, 1e-12),
            Err(Error::NoSignChange { .. })
        ));
        // Lens half-angle for R = 1, p = 5.2: substitute back.
        let g = |phi: f64| 5.2 * phi.sin() - 4.0 * phi;
        let phi = solve_scalar(g, 1e-300, std::f64::consts::FRAC_PI_2, 1e-14).unwrap();
        assert!(g(phi).abs() <= 1e-12);
        assert!(phi > 0.1);
    }
}
