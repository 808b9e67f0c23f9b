//! Quermassintegrals of the orthogonal crosspolytope
//! `C_n*(λ) = conv{±λ_i e_i}` relative to `B_n`.
//!
//! Faces of dimension `i < n-1` correspond to `(i+1)`-subsets `L` of the
//! axes (and a choice of signs). With `a_L = Σ_{k∈L} 1/λ_k²`:
//!
//! * `vol_i(F_L) = Π_{k∈L} λ_k √a_L / i!`
//! * `γ(F_L) = 2^{m} π^{-(m+1)/2} √a_L / Π_{j∉L} λ_j
//!   · ∫₀^∞ e^{-a_L x²} Π_{j∉L} (λ_j √π/2) erf(x/λ_j) dx`, `m = n-i-1`
//!
//! and `W_{n-i} = κ_{n-i}/C(n,i) Σ_L 2^{i+1} vol_i(F_L) γ(F_L)`. Subsets with
//! the same multiset of `λ` values are evaluated once.

use std::f64::consts::PI;

use super::{kappa, Body, BodySpec};
use crate::quadrature::{integrate_gaussian_erf, IntegrandSpec};
use crate::quermass::{binomial_f64, QuermassVector, RadiusPair};
use crate::{Error, Result};

const FACE_REL_TOL: f64 = 1e-10;

fn check_lambdas(lambdas: &[f64]) -> Result<()> {
    if lambdas.len() < 2 {
        return Err(Error::OutOfRange(format!(
            "crosspolytope needs at least 2 semi-axes, got {}",
            lambdas.len()
        )));
    }
    if let Some(l) = lambdas.iter().find(|l| !(**l > 0.0 && l.is_finite())) {
        return Err(Error::OutOfRange(format!("semi-axis {l} must be positive")));
    }
    Ok(())
}

/// External angle of the face spanned by `in_face`, with `rest` the
/// semi-axes not in the face.
fn face_angle(in_face: &[f64], rest: &[f64]) -> Result<f64> {
    let a: f64 = in_face.iter().map(|l| 1.0 / (l * l)).sum();
    let m = rest.len();
    let ln_pre = m as f64 * 2f64.ln() - (m as f64 + 1.0) / 2.0 * PI.ln() + 0.5 * a.ln()
        - rest.iter().map(|l| l.ln()).sum::<f64>();
    let spec = IntegrandSpec {
        a,
        factors: rest.to_vec(),
        prefactor: ln_pre.exp(),
    };
    integrate_gaussian_erf(&spec, FACE_REL_TOL).map_err(|e| match e {
        Error::Quadrature(msg) => Error::Quadrature(format!("face {in_face:?}: {msg}")),
        other => other,
    })
}

/// External angle of `C_n*(λ)` at the face `conv{λ_k e_k : k ∈ subset}`.
pub fn external_angle(lambdas: &[f64], subset: &[usize]) -> Result<f64> {
    check_lambdas(lambdas)?;
    let n = lambdas.len();
    if subset.is_empty() || subset.len() >= n {
        return Err(Error::OutOfRange(format!(
            "face subset size {} must lie in 1..{n}",
            subset.len()
        )));
    }
    let mut seen = vec![false; n];
    for &k in subset {
        if k >= n || seen[k] {
            return Err(Error::OutOfRange(format!("invalid face subset {subset:?}")));
        }
        seen[k] = true;
    }
    let in_face: Vec<f64> = subset.iter().map(|&k| lambdas[k]).collect();
    let rest: Vec<f64> = (0..n).filter(|&k| !seen[k]).map(|k| lambdas[k]).collect();
    face_angle(&in_face, &rest)
}

/// Sum of the external angles over all `2n` vertices; equals 1.
pub fn vertex_angle_sum(lambdas: &[f64]) -> Result<f64> {
    (0..lambdas.len())
        .map(|k| external_angle(lambdas, &[k]).map(|g| 2.0 * g))
        .sum()
}

/// Distinct values with multiplicities; input must be nondecreasing.
fn group(lambdas: &[f64]) -> Vec<(f64, usize)> {
    let mut groups: Vec<(f64, usize)> = Vec::new();
    for &l in lambdas {
        match groups.last_mut() {
            Some((v, c)) if *v == l => *c += 1,
            _ => groups.push((l, 1)),
        }
    }
    groups
}

/// All `t` with `0 ≤ t_k ≤ c_k` and `Σ t_k = size`.
fn signatures(groups: &[(f64, usize)], size: usize) -> Vec<Vec<usize>> {
    fn rec(groups: &[(f64, usize)], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == groups.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = groups[cur.len()].1.min(left);
        for t in 0..=cap {
            cur.push(t);
            rec(groups, left - t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(groups, size, &mut Vec::new(), &mut out);
    out
}

/// Relative quermassintegrals of `C_n*(λ)`, `λ` sorted nondecreasingly.
pub fn crosspolytope_quermass(lambdas: &[f64]) -> Result<Body> {
    check_lambdas(lambdas)?;
    if lambdas.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::OutOfRange(
            "semi-axes must be sorted nondecreasingly".into(),
        ));
    }
    let n = lambdas.len();
    let groups = group(lambdas);
    let n_fact: f64 = (1..=n).map(|j| j as f64).product();
    let prod: f64 = lambdas.iter().product();
    let inv_sq: f64 = lambdas.iter().map(|l| 1.0 / (l * l)).sum();

    let mut w = vec![0.0; n + 1];
    w[0] = 2f64.powi(n as i32) / n_fact * prod;
    w[1] = 2f64.powi(n as i32) / n_fact * prod * inv_sq.sqrt();
    for i in 0..=n - 2 {
        let i_fact: f64 = (1..=i).map(|j| j as f64).product();
        let mut total = 0.0;
        for t in signatures(&groups, i + 1) {
            let mut in_face = Vec::with_capacity(i + 1);
            let mut rest = Vec::with_capacity(n - i - 1);
            let mut count = 1.0;
            for (&(v, c), &tk) in groups.iter().zip(&t) {
                in_face.extend(std::iter::repeat_n(v, tk));
                rest.extend(std::iter::repeat_n(v, c - tk));
                count *= binomial_f64(c, tk);
            }
            let a: f64 = in_face.iter().map(|l| 1.0 / (l * l)).sum();
            let vol = in_face.iter().product::<f64>() * a.sqrt() / i_fact;
            total += count * 2f64.powi(i as i32 + 1) * vol * face_angle(&in_face, &rest)?;
        }
        w[n - i] = kappa(n - i) / binomial_f64(n, i) * total;
    }

    Ok(Body {
        spec: BodySpec::Crosspolytope {
            lambdas: lambdas.to_vec(),
        },
        quermass: QuermassVector::new(n, w)?.validated()?,
        radii: RadiusPair::new(1.0 / inv_sq.sqrt(), Some(lambdas[n - 1]))?,
        lens: None,
    })
}
