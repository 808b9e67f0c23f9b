//! Verdicts for the root ordering `a₁ ≤ -R ≤ -r ≤ a_n ≤ 0`, where `a₁` and
//! `a_n` are the smallest and largest real parts of the roots.

use std::fmt;

use serde::Serialize;

use crate::quermass::RadiusPair;
use crate::rootfind::RootSet;
use crate::tol::VERDICT_ABS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl Verdict {
    pub fn is_holds(self) -> bool {
        self == Verdict::Holds
    }

    pub fn is_fails(self) -> bool {
        self == Verdict::Fails
    }

    fn from_margin(margin: f64, tol: f64) -> Self {
        if margin >= -tol {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not_applicable",
        })
    }
}

/// A clause verdict with its signed margin (positive means satisfied).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Clause {
    pub verdict: Verdict,
    pub margin: Option<f64>,
}

impl Clause {
    fn evaluate(margin: f64, tol: f64) -> Self {
        Self {
            verdict: Verdict::from_margin(margin, tol),
            margin: Some(margin),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConjectureReport {
    /// `a_n ≤ 0`, margin `-a_n`.
    pub negativity: Clause,
    /// `-r ≤ a_n`, margin `a_n + r`.
    pub inradius: Clause,
    /// `a₁ ≤ -R`, margin `-R - a₁`.
    pub circumradius: Clause,
    pub ordering: Verdict,
    pub tolerance: f64,
}

/// Evaluates every clause with the default absolute tolerance.
pub fn check_conjecture(rs: &RootSet, rad: &RadiusPair) -> ConjectureReport {
    check_conjecture_with(rs, rad, VERDICT_ABS)
}

pub fn check_conjecture_with(rs: &RootSet, rad: &RadiusPair, tol: f64) -> ConjectureReport {
    let a_n = rs.max_real().unwrap_or(0.0);
    let a_1 = rs.min_real().unwrap_or(0.0);
    let negativity = Clause::evaluate(-a_n, tol);
    let inradius = Clause::evaluate(a_n + rad.r, tol);
    let circumradius = match rad.circumradius {
        Some(big_r) => Clause::evaluate(-big_r - a_1, tol),
        None => Clause {
            verdict: Verdict::NotApplicable,
            margin: None,
        },
    };
    let clauses = [negativity.verdict, inradius.verdict, circumradius.verdict];
    let ordering = if clauses.contains(&Verdict::Fails) {
        Verdict::Fails
    } else if clauses.contains(&Verdict::NotApplicable) {
        Verdict::NotApplicable
    } else {
        Verdict::Holds
    };
    ConjectureReport {
        negativity,
        inradius,
        circumradius,
        ordering,
        tolerance: tol,
    }
}

/// Whether a planar body with area `A`, perimeter `p` and circumradius `R`
/// has roots with real part above `-R`: `p² < 128A/(3π)` and `p < 16R/3`.
pub fn lens_violation_test(area: f64, perimeter: f64, circumradius: f64) -> bool {
    perimeter * perimeter < 128.0 * area / (3.0 * std::f64::consts::PI)
        && perimeter < 16.0 * circumradius / 3.0
}

/// Exact condition for every root of the planar polynomial
/// `2A s + (πp/2) s² + (4π/3) s³` to have real part above `-R`: `p < 16R/3`
/// and `g(-R) > 0` for `g(s) = (4π/3)s² + (πp/2)s + 2A`.
///
/// Differs from [`lens_violation_test`] only when both nonzero roots are
/// real and lie in `(-R, 0)`, which happens for lenses with
/// `p ∈ (p₁R, p₀R]` (see [`crate::bodies::lens_violation_window`]).
pub fn planar_circumradius_violation(area: f64, perimeter: f64, circumradius: f64) -> bool {
    let g = 4.0 * std::f64::consts::PI / 3.0 * circumradius * circumradius
        - std::f64::consts::PI / 2.0 * perimeter * circumradius
        + 2.0 * area;
    perimeter < 16.0 * circumradius / 3.0 && g > 0.0
}

/// `1 - α ≥ (1 - 1/R)^n`, equivalent to the smallest cap-body root lying at
/// or left of `-R`.
pub fn cap_circumradius_inequality(n: usize, alpha: f64, circumradius: f64) -> bool {
    1.0 - alpha >= (1.0 - 1.0 / circumradius).powi(n as i32)
}
