//! Benchmark inputs, shared by `benches/` and the smoke tests.

use steiner_core::bodies::{make_lens, two_tangential_unchecked};
use steiner_core::hurwitz::truncated_binomial;
use steiner_core::{RationalPolynomial, SteinerPolynomial};

pub fn lens_polynomial() -> SteinerPolynomial {
    make_lens(1.0, 5.2).expect("valid lens").polynomial()
}

/// Unvalidated two-tangential vector near the `β, α → 0` limit.
pub fn twotan15_polynomial() -> SteinerPolynomial {
    two_tangential_unchecked(15, 1e-6, 1e-6, 1.0)
        .expect("valid parameters")
        .polynomial()
}

/// `Σ_{i=2}^{15} C(15,i) μ^i` without its zero roots.
pub fn routh15() -> RationalPolynomial {
    truncated_binomial(15, 2)
        .expect("k <= n")
        .deflate_zero_roots()
        .0
}

/// Ten semi-axes 0.01 and ten equal to 1.
pub fn cross20_lambdas() -> Vec<f64> {
    [0.01; 10].into_iter().chain([1.0; 10]).collect()
}

pub fn cross6_lambdas() -> Vec<f64> {
    vec![0.5, 1.0, 1.0, 2.0, 3.0, 3.0]
}
