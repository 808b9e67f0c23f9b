//! Symmetric planar lenses (intersection of two equal discs) in `R^3`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use super::{planar_quermass, positive, Body, BodySpec};
use crate::quadrature::solve_scalar;
use crate::quermass::{QuermassVector, RadiusPair};
use crate::{Error, Result};

/// Shape data of a lens with circumradius `R` and perimeter `p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LensGeometry {
    #[serde(rename = "R")]
    pub circumradius: f64,
    #[serde(rename = "p")]
    pub perimeter: f64,
    /// Half the opening angle of each arc, `p sin φ = 4Rφ`.
    #[serde(rename = "phi")]
    pub half_angle: f64,
    #[serde(rename = "A")]
    pub area: f64,
}

impl LensGeometry {
    /// Requires `4R < p ≤ 2πR`.
    pub fn new(circumradius: f64, perimeter: f64) -> Result<Self> {
        let r = positive("R", circumradius)?;
        let p = positive("p", perimeter)?;
        if !(p > 4.0 * r && p <= 2.0 * PI * r) {
            return Err(Error::OutOfRange(format!(
                "lens perimeter {p} must lie in (4R, 2πR] for R = {r}"
            )));
        }
        let g = |phi: f64| p * phi.sin() - 4.0 * r * phi;
        let phi = solve_scalar(g, 1e-300, FRAC_PI_2, 0.0)?;
        let area = p * (p - 4.0 * r * phi.cos()) / (8.0 * phi);
        Ok(Self {
            circumradius: r,
            perimeter: p,
            half_angle: phi,
            area,
        })
    }
}

/// Lens of circumradius `R` and perimeter `p`, viewed in `R^3` against `B_3`.
pub fn make_lens(circumradius: f64, perimeter: f64) -> Result<Body> {
    let geom = LensGeometry::new(circumradius, perimeter)?;
    let w = planar_quermass(geom.area, geom.perimeter);
    Ok(Body {
        spec: BodySpec::Lens {
            circumradius: geom.circumradius,
            perimeter: geom.perimeter,
        },
        quermass: QuermassVector::new(3, w.to_vec())?.validated()?,
        radii: RadiusPair::new(0.0, Some(geom.circumradius))?,
        lens: Some(geom),
    })
}

/// `φ₀` with `φ₀ - sin φ₀ cos φ₀ = (3π/16) φ₀²`: the lens whose two
/// nonzero roots coincide.
fn double_root_half_angle() -> Result<f64> {
    let h = |phi: f64| phi - phi.sin() * phi.cos() - 3.0 * PI / 16.0 * phi * phi;
    solve_scalar(h, 0.5, FRAC_PI_2, 0.0)
}

/// `(p₀ R, 16R/3)` with `p₀ = 4φ₀ / sin φ₀`: the perimeters for which the
/// lens polynomial has complex roots with real part above `-R`.
pub fn lens_perimeter_window(circumradius: f64) -> Result<(f64, f64)> {
    let r = positive("R", circumradius)?;
    let phi0 = double_root_half_angle()?;
    Ok((4.0 * phi0 / phi0.sin() * r, 16.0 * r / 3.0))
}

/// `(p₁ R, 16R/3)`: every perimeter for which all lens roots have real part
/// above `-R`. Below `p₀` the two nonzero roots are real; `p₁` is where the
/// smaller one reaches `-R`.
pub fn lens_violation_window(circumradius: f64) -> Result<(f64, f64)> {
    let r = positive("R", circumradius)?;
    let phi0 = double_root_half_angle()?;
    // (4π/3)R² - (π/2)pR + 2A = 0 at R = 1, multiplied by sin² φ.
    let g = |phi: f64| {
        let (s, c) = phi.sin_cos();
        4.0 * PI / 3.0 * s * s - 2.0 * PI * phi * s + 4.0 * (phi - s * c)
    };
    let phi1 = solve_scalar(g, 0.5, phi0, 0.0)?;
    Ok((4.0 * phi1 / phi1.sin() * r, 16.0 * r / 3.0))
}
