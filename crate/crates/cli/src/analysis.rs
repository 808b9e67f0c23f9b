//! Polynomial, roots, stability and conjecture verdicts for one input.

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use steiner_core::checker::check_conjecture_with;
use steiner_core::hurwitz::is_hurwitz;
use steiner_core::rootfind::{annulus_bounds, find_roots, find_roots_of};
use steiner_core::{
    Annulus, Body, BodySpec, ConjectureReport, LensGeometry, QuermassVector, RadiusPair,
    RationalPolynomial, Realization, RootSet, Stability,
};

/// A quermassintegral vector read from JSON, with optional radii.
#[derive(Debug, Clone, Deserialize)]
pub struct QuermassFile {
    pub n: usize,
    #[serde(rename = "W")]
    pub w: Vec<f64>,
    #[serde(default)]
    pub r: Option<f64>,
    #[serde(default, rename = "R")]
    pub circumradius: Option<f64>,
}

impl QuermassFile {
    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    /// Unknown inradius defaults to 0, which only weakens the inradius clause.
    pub fn into_parts(self, allow_invalid: bool) -> Result<(QuermassVector, RadiusPair)> {
        let q = QuermassVector::new(self.n, self.w).context("quermass")?;
        let q = if allow_invalid {
            q
        } else {
            q.validated().context("quermass")?
        };
        let radii =
            RadiusPair::new(self.r.unwrap_or(0.0), self.circumradius).context("quermass")?;
        Ok((q, radii))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PolynomialOut {
    /// `s` for Steiner polynomials, `mu` for the limit polynomial in `1/s`.
    pub variable: &'static str,
    pub n: usize,
    pub coeffs: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub body: Option<BodySpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quermass: Option<QuermassVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid_body: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lens: Option<LensGeometry>,
    pub polynomial: PolynomialOut,
    pub roots: RootSet,
    pub max_real: f64,
    pub min_real: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub annulus: Option<Annulus>,
    pub hurwitz: Stability,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radii: Option<RadiusPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureReport>,
}

impl Analysis {
    /// Whether every requested check passed: a failed conjecture clause or
    /// an unstable polynomial counts as a failure.
    pub fn passes(&self) -> bool {
        match &self.conjecture {
            Some(c) => !c.ordering.is_fails(),
            None => self.hurwitz == Stability::Stable,
        }
    }
}

/// Exact Routh verdict for the polynomial with zero roots removed.
fn stability(coeffs: &[f64]) -> Result<Stability> {
    let p = RationalPolynomial::from_f64(coeffs).context("hurwitz")?;
    let (q, _) = p.deflate_zero_roots();
    if q.degree() == 0 {
        return Ok(Stability::Boundary);
    }
    is_hurwitz(&q).context("hurwitz")
}

pub fn analyze_quermass(
    q: QuermassVector,
    radii: RadiusPair,
    body: Option<BodySpec>,
    lens: Option<LensGeometry>,
    tol: f64,
) -> Result<Analysis> {
    let poly = steiner_core::quermass::build_polynomial(&q);
    let roots = find_roots(&poly).context("rootfind")?;
    let annulus = annulus_bounds(&poly).ok();
    let conjecture = check_conjecture_with(&roots, &radii, tol);
    Ok(Analysis {
        body,
        valid_body: Some(q.is_valid_body()),
        lens,
        polynomial: PolynomialOut {
            variable: "s",
            n: poly.degree(),
            coeffs: poly.coeffs().to_vec(),
        },
        max_real: roots.max_real().unwrap_or(0.0),
        min_real: roots.min_real().unwrap_or(0.0),
        hurwitz: stability(poly.coeffs())?,
        roots,
        annulus,
        radii: Some(radii),
        conjecture: Some(conjecture),
        quermass: Some(q),
    })
}

pub fn analyze_body(body: Body, tol: f64) -> Result<Analysis> {
    analyze_quermass(body.quermass, body.radii, Some(body.spec), body.lens, tol)
}

/// Roots and stability of a limit polynomial; no radii, so no verdicts.
pub fn analyze_limit(spec: BodySpec, p: &RationalPolynomial) -> Result<Analysis> {
    let coeffs = p.to_f64();
    let roots = find_roots_of(&coeffs).context("rootfind")?;
    Ok(Analysis {
        body: Some(spec),
        quermass: None,
        valid_body: None,
        lens: None,
        polynomial: PolynomialOut {
            variable: "mu",
            n: p.degree(),
            coeffs,
        },
        max_real: roots.max_real().unwrap_or(0.0),
        min_real: roots.min_real().unwrap_or(0.0),
        annulus: None,
        hurwitz: is_hurwitz(&p.deflate_zero_roots().0).context("hurwitz")?,
        roots,
        radii: None,
        conjecture: None,
    })
}

/// Builds a spec, bypassing the log-concavity check when `allow_invalid`.
pub fn analyze_spec(spec: &BodySpec, allow_invalid: bool, tol: f64) -> Result<Analysis> {
    let realized = if allow_invalid {
        spec.realize_unchecked()
    } else {
        spec.realize()
    }
    .context("bodies")?;
    match realized {
        Realization::Body(b) => analyze_body(b, tol),
        Realization::LimitPolynomial(p) => analyze_limit(spec.clone(), &p),
    }
}

/// One line per root: `re,im,mult,err`.
pub fn roots_csv(a: &Analysis) -> String {
    use crate::format::num;
    let mut out = String::from("re,im,mult,err\n");
    for r in a.roots.roots() {
        out.push_str(&format!(
            "{},{},{},{}\n",
            num(r.value.re),
            num(r.value.im),
            r.multiplicity,
            num(r.error_radius)
        ));
    }
    out
}

/// Short human-readable summary.
pub fn summary(a: &Analysis) -> String {
    use crate::format::num;
    let mut out = String::new();
    if let Some(q) = &a.quermass {
        let w: Vec<String> = q.w().iter().map(|x| num(*x)).collect();
        out.push_str(&format!("W = [{}]\n", w.join(", ")));
    }
    out.push_str(&format!("roots ({}):\n", a.polynomial.variable));
    for r in a.roots.roots() {
        let mult = if r.multiplicity > 1 {
            format!("  (x{})", r.multiplicity)
        } else {
            String::new()
        };
        out.push_str(&format!(
            "  {} {} {}i{}  ± {}\n",
            num(r.value.re),
            if r.value.im < 0.0 { '-' } else { '+' },
            num(r.value.im.abs()),
            mult,
            num(r.error_radius)
        ));
    }
    out.push_str(&format!("hurwitz: {}\n", a.hurwitz));
    if let (Some(c), Some(rad)) = (&a.conjecture, &a.radii) {
        let big = rad.circumradius.map_or("unknown".to_string(), num);
        out.push_str(&format!("r = {}, R = {}\n", num(rad.r), big));
        for (name, clause) in [
            ("negativity", c.negativity),
            ("inradius", c.inradius),
            ("circumradius", c.circumradius),
        ] {
            let m = clause.margin.map_or("-".to_string(), num);
            out.push_str(&format!("{name}: {} (margin {m})\n", clause.verdict));
        }
        out.push_str(&format!("ordering: {}\n", c.ordering));
    }
    out
}
