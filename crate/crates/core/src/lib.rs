//! Relative Steiner polynomials of convex bodies.
//!
//! The crate builds the polynomial `f(K,E,s) = Σ C(n,i) W_i(K;E) s^i` from
//! relative quermassintegrals, locates its complex roots with per-root
//! inclusion radii, certifies (in)stability exactly with the Routh array and
//! evaluates the in/circumradius root conjecture for a range of body
//! families (balls, segments, planar lenses, cap-bodies, 2-tangential
//! bodies, orthogonal crosspolytopes).
//!
//! ```
//! use steiner_core::{bodies, checker, rootfind};
//!
//! let lens = bodies::make_lens(1.0, 5.2).unwrap();
//! let poly = lens.polynomial();
//! let roots = rootfind::find_roots(&poly).unwrap();
//! let report = checker::check_conjecture(&roots, &lens.radii);
//! assert!(report.circumradius.verdict.is_fails());
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bodies;
pub mod checker;
mod error;
pub mod hurwitz;
pub mod quadrature;
pub mod quermass;
pub mod rootfind;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use bodies::{Body, BodySpec, LensGeometry, Realization};
pub use checker::{Clause, ConjectureReport, Verdict};
pub use hurwitz::{RationalPolynomial, Stability};
pub use quermass::{QuermassVector, RadiusPair, SteinerPolynomial};
pub use rootfind::{Annulus, Root, RootSet};

/// Tolerances shared by the whole crate.
pub mod tol {
    /// Identities that hold exactly in exact arithmetic (shift composition,
    /// closed forms).
    pub const EXACT_REL: f64 = 1e-12;
    /// Identities between computed roots (Vieta, reciprocity).
    pub const ROOT_REL: f64 = 1e-8;
    /// Aleksandrov-Fenchel log-concavity check.
    pub const AF_REL: f64 = 1e-9;
    /// Absolute slack on conjecture margins.
    pub const VERDICT_ABS: f64 = 1e-9;
}
