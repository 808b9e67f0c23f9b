//! Complex roots of Steiner polynomials with inclusion radii.
//!
//! Pipeline: exact removal of zero roots, scalar balancing `s = c t`,
//! Aberth-Ehrlich iteration from Newton-polygon starting points, Newton
//! polishing with double-double residuals, Weierstrass inclusion radii,
//! conjugate pairing and merging of clusters into multiple roots.

mod dd;

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::quermass::{RadiusPair, SteinerPolynomial};
use crate::{tol, Error, Result};

use dd::Dd;

const MAX_SWEEPS: usize = 200;
const POLISH_STEPS: usize = 5;
const CLUSTER_REL: f64 = 1e-7;
const REFINE_SWEEPS: usize = 30;
const EPS: f64 = f64::EPSILON;

/// A root with its multiplicity and an inclusion radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "RootJson", into = "RootJson")]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
    pub error_radius: f64,
}

#[derive(Serialize, Deserialize)]
struct RootJson {
    re: f64,
    im: f64,
    mult: usize,
    err: f64,
}

impl From<RootJson> for Root {
    fn from(r: RootJson) -> Self {
        Root {
            value: Complex64::new(r.re, r.im),
            multiplicity: r.mult,
            error_radius: r.err,
        }
    }
}

impl From<Root> for RootJson {
    fn from(r: Root) -> Self {
        RootJson {
            re: r.value.re,
            im: r.value.im,
            mult: r.multiplicity,
            err: r.error_radius,
        }
    }
}

/// All roots of a polynomial, sorted by real part then imaginary part.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    roots: Vec<Root>,
}

fn cmp_complex(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

impl RootSet {
    /// Sorts `roots`; nothing else is checked.
    pub fn new(mut roots: Vec<Root>) -> Self {
        roots.sort_by(|a, b| cmp_complex(&a.value, &b.value));
        Self { roots }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Sum of the multiplicities.
    pub fn degree(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Every root repeated by its multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
            .collect()
    }

    pub fn max_real(&self) -> Option<f64> {
        self.roots.iter().map(|r| r.value.re).reduce(f64::max)
    }

    pub fn min_real(&self) -> Option<f64> {
        self.roots.iter().map(|r| r.value.re).reduce(f64::min)
    }

    pub fn sum(&self) -> Complex64 {
        self.roots
            .iter()
            .map(|r| r.value * r.multiplicity as f64)
            .sum()
    }

    pub fn sum_abs_real(&self) -> f64 {
        self.roots
            .iter()
            .map(|r| r.value.re.abs() * r.multiplicity as f64)
            .sum()
    }

    pub fn max_error_radius(&self) -> f64 {
        self.roots
            .iter()
            .map(|r| r.error_radius)
            .fold(0.0, f64::max)
    }
}

/// The ring `rho1 ≤ |s| ≤ rho2` holding every nonzero root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Annulus {
    pub rho1: f64,
    pub rho2: f64,
}

impl Annulus {
    pub fn contains(&self, z: Complex64, slack: f64) -> bool {
        let m = z.norm();
        m >= self.rho1 - slack && m <= self.rho2 + slack
    }
}

/// Min and max of consecutive coefficient ratios `c_j / c_{j+1}` over the
/// nonzero (necessarily positive) coefficients.
pub fn annulus_bounds(p: &SteinerPolynomial) -> Result<Annulus> {
    let c = p.coeffs();
    let first = c
        .iter()
        .position(|x| *x != 0.0)
        .ok_or(Error::ZeroPolynomial)?;
    let tail = &c[first..];
    if tail.len() < 2 {
        return Err(Error::TooFewCoefficients(tail.len()));
    }
    if tail.iter().any(|x| !(*x > 0.0)) {
        return Err(Error::NonPositiveCoefficient);
    }
    let (mut rho1, mut rho2) = (f64::INFINITY, 0.0f64);
    for w in tail.windows(2) {
        let ratio = w[0] / w[1];
        rho1 = rho1.min(ratio);
        rho2 = rho2.max(ratio);
    }
    Ok(Annulus { rho1, rho2 })
}

/// Outcome of the `Σ|Re γ_i|` bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReSumCheck {
    pub sum_abs_real: f64,
    pub lower_ok: bool,
    /// `None` when the circumradius is unknown or some root has positive
    /// real part.
    pub upper_ok: Option<bool>,
}

/// `Σ|Re γ_i| ≥ n r` always; `Σ|Re γ_i| ≤ n R` when every real part is `≤ 0`.
pub fn re_sum_bounds(rs: &RootSet, rad: &RadiusPair) -> ReSumCheck {
    let n = rs.degree() as f64;
    let sum = rs.sum_abs_real();
    let slack = |bound: f64| tol::VERDICT_ABS + tol::ROOT_REL * bound.max(1.0);
    let lower = n * rad.r;
    let lower_ok = sum >= lower - slack(lower);
    let all_nonpositive = rs.max_real().is_none_or(|m| m <= tol::VERDICT_ABS);
    let upper_ok = match rad.circumradius {
        Some(big) if all_nonpositive => {
            let upper = n * big;
            Some(sum <= upper + slack(upper))
        }
        _ => None,
    };
    ReSumCheck {
        sum_abs_real: sum,
        lower_ok,
        upper_ok,
    }
}

/// First-order displacement of `root` when every coefficient is perturbed
/// by at most `delta` relative: `(δ Σ|c_i||z|^i / |p^{(m)}(z)/m!|)^{1/m}`
/// for multiplicity `m`.
///
/// The inclusion radius of a [`Root`] covers the coefficients as given;
/// this bound covers coefficients that were themselves computed in
/// floating point (shifted or swapped polynomials, say).
pub fn perturbation_radius(coeffs: &[f64], root: &Root, delta: f64) -> f64 {
    let m = root.multiplicity.max(1);
    let taylor = taylor_coeff(coeffs, root.value, m);
    if taylor == 0.0 {
        return f64::INFINITY;
    }
    (delta * magnitude(coeffs, root.value.norm()) / taylor).powf(1.0 / m as f64)
}

/// Radius of the region a relative coefficient perturbation `delta` can
/// move a root near `z` across: `min_k (δ Σ|c_i||z|^i / |p^{(k)}(z)/k!|)^{1/k}`.
/// Finite for every nonconstant polynomial.
pub fn pseudozero_radius(coeffs: &[f64], z: Complex64, delta: f64) -> f64 {
    let scaled = delta * magnitude(coeffs, z.norm());
    (1..coeffs.len())
        .map(|k| {
            let t = taylor_coeff(coeffs, z, k);
            if t == 0.0 {
                f64::INFINITY
            } else {
                (scaled / t).powf(1.0 / k as f64)
            }
        })
        .fold(f64::INFINITY, f64::min)
}

/// `Σ |c_i| a^i`.
fn magnitude(coeffs: &[f64], a: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * a + c.abs())
}

/// `|p^{(k)}(z)/k!| = |Σ_j C(j,k) c_j z^{j-k}|`.
fn taylor_coeff(coeffs: &[f64], z: Complex64, k: usize) -> f64 {
    let mut taylor = Complex64::new(0.0, 0.0);
    for j in (k..coeffs.len()).rev() {
        let weight = (0..k).fold(1.0, |acc, t| acc * (j - t) as f64 / (t + 1) as f64);
        taylor = taylor * z + weight * coeffs[j];
    }
    taylor.norm()
}

pub fn find_roots(p: &SteinerPolynomial) -> Result<RootSet> {
    find_roots_of(p.coeffs())
}

/// Roots of the real polynomial with ascending coefficients `coeffs`.
///
/// Vanishing top coefficients lower the degree; the returned multiplicities
/// sum to the true degree.
pub fn find_roots_of(coeffs: &[f64]) -> Result<RootSet> {
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidQuermass("non-finite coefficient".into()));
    }
    let top = coeffs
        .iter()
        .rposition(|c| *c != 0.0)
        .ok_or(Error::ZeroPolynomial)?;
    let coeffs = &coeffs[..=top];
    let zeros = coeffs.iter().take_while(|c| **c == 0.0).count();
    let q = &coeffs[zeros..];

    let mut roots = Vec::new();
    if zeros > 0 {
        roots.push(Root {
            value: Complex64::new(0.0, 0.0),
            multiplicity: zeros,
            error_radius: 0.0,
        });
    }
    if q.len() > 1 {
        roots.extend(nonzero_roots(q)?);
    }
    Ok(RootSet::new(roots))
}

#[derive(Debug, Clone, Copy)]
struct Cand {
    z: Complex64,
    mult: usize,
    radius: f64,
}

/// Roots of `q` with `q[0] != 0` and nonzero leading coefficient.
fn nonzero_roots(q: &[f64]) -> Result<Vec<Root>> {
    let m = q.len() - 1;
    let (scale, balanced) = balance(q);
    let start = newton_polygon_start(&balanced);
    let t = aberth(&balanced, start).map_err(|sweeps| Error::NoConvergence {
        sweeps,
        coeffs: q.to_vec(),
    })?;

    let poly = Poly::new(q);
    let raw: Vec<Complex64> = t.into_iter().map(|ti| ti * scale).collect();
    // Inclusion radii need distinct nodes; refinement keeps them apart but
    // falls back to the raw approximations if two ever coincide.
    let refined = refine(&poly, &raw);
    let nodes = if all_distinct(&refined) { refined } else { raw };
    let mut cands: Vec<Cand> = nodes
        .into_iter()
        .map(|z| Cand {
            z,
            mult: 1,
            radius: 0.0,
        })
        .collect();
    assign_weierstrass_radii(&poly, &mut cands);
    let mut cands = symmetrize(&poly, cands);
    tighten_radii(&poly, &mut cands);
    equalize_pair_radii(&mut cands);

    let cands = merge_clusters(&poly, cands);
    debug_assert_eq!(cands.iter().map(|c| c.mult).sum::<usize>(), m);
    Ok(cands
        .into_iter()
        .map(|c| Root {
            value: c.z,
            multiplicity: c.mult,
            error_radius: c.radius,
        })
        .collect())
}

/// `s = c t` with `c = (|q_0|/|q_m|)^{1/m}`, then normalised so the largest
/// coefficient has magnitude one. Works in logarithms to avoid overflow.
fn balance(q: &[f64]) -> (f64, Vec<f64>) {
    let m = q.len() - 1;
    let ln_c = (q[0].abs().ln() - q[m].abs().ln()) / m as f64;
    let logs: Vec<Option<f64>> = q
        .iter()
        .enumerate()
        .map(|(k, c)| (*c != 0.0).then(|| c.abs().ln() + k as f64 * ln_c))
        .collect();
    let top = logs
        .iter()
        .flatten()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    let b = q
        .iter()
        .zip(&logs)
        .map(|(c, l)| match l {
            Some(l) => c.signum() * (l - top).exp(),
            None => 0.0,
        })
        .collect();
    (ln_c.exp(), b)
}

/// Starting points on circles whose radii come from the upper convex hull of
/// `(k, ln|b_k|)`.
fn newton_polygon_start(b: &[f64]) -> Vec<Complex64> {
    let m = b.len() - 1;
    let pts: Vec<(f64, f64)> = b
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0.0)
        .map(|(k, c)| (k as f64, c.abs().ln()))
        .collect();
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (a, o) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (o.0 - a.0) * (p.1 - a.1) - (o.1 - a.1) * (p.0 - a.0);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    const SIGMA: f64 = 0.7;
    let mut start = Vec::with_capacity(m);
    for (s, w) in hull.windows(2).enumerate() {
        let count = (w[1].0 - w[0].0) as usize;
        let radius = ((w[0].1 - w[1].1) / count as f64).exp();
        for j in 0..count {
            let angle = 2.0 * PI * j as f64 / count as f64 + 2.0 * PI * s as f64 / m as f64 + SIGMA;
            start.push(Complex64::from_polar(radius, angle));
        }
    }
    start
}

/// Newton correction `f/f'` in plain double precision and whether `f(z)`
/// is already below its rounding-error bound. Uses the reversed polynomial
/// outside the unit disk.
fn newton_ratio(b: &[f64], z: Complex64) -> (Complex64, bool) {
    let m = b.len() - 1;
    let gamma = 2.0 * (m as f64 + 1.0) * EPS;
    if z.norm() <= 1.0 {
        let az = z.norm();
        let (mut f, mut d) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        let mut bound = 0.0;
        for c in b.iter().rev() {
            d = d * z + f;
            f = f * z + c;
            bound = bound * az + c.abs();
        }
        (f / d, f.norm() <= gamma * bound)
    } else {
        let w = z.inv();
        let aw = w.norm();
        let (mut g, mut d) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        let mut bound = 0.0;
        for c in b.iter() {
            d = d * w + g;
            g = g * w + c;
            bound = bound * aw + c.abs();
        }
        // f(z) = z^m g(w), f'(z) = z^{m-1} (m g(w) - w g'(w))
        let ratio = z / (m as f64 - w * d / g);
        (ratio, g.norm() <= gamma * bound)
    }
}

/// Gauss-Seidel Aberth-Ehrlich sweeps. `Err(sweeps)` on budget exhaustion.
fn aberth(b: &[f64], mut z: Vec<Complex64>) -> std::result::Result<Vec<Complex64>, usize> {
    let m = z.len();
    let mut done = vec![false; m];
    for _ in 0..MAX_SWEEPS {
        let mut active = false;
        for i in 0..m {
            if done[i] {
                continue;
            }
            let (ratio, small) = newton_ratio(b, z[i]);
            if small || !ratio.is_finite() {
                done[i] = true;
                continue;
            }
            active = true;
            let s: Complex64 = (0..m)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let corr = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !corr.is_finite() {
                done[i] = true;
                continue;
            }
            z[i] -= corr;
            if corr.norm() <= 2.0 * EPS * z[i].norm() {
                done[i] = true;
            }
        }
        if !active {
            return Ok(z);
        }
    }
    if done.iter().all(|d| *d) {
        Ok(z)
    } else {
        Err(MAX_SWEEPS)
    }
}

/// Aberth sweeps on the unscaled polynomial with the Newton ratio evaluated
/// in double-double, resolving clusters that plain double evaluation blurs.
fn refine(poly: &Poly, z0: &[Complex64]) -> Vec<Complex64> {
    let m = z0.len();
    let mut z = z0.to_vec();
    let mut done = vec![false; m];
    for _ in 0..REFINE_SWEEPS {
        let mut active = false;
        for i in 0..m {
            if done[i] {
                continue;
            }
            let (f, d) = dd::horner_with_derivative(&poly.dd, z[i]);
            let ratio = f / d;
            if f.norm() == 0.0 || !ratio.is_finite() {
                done[i] = true;
                continue;
            }
            let s: Complex64 = (0..m)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let corr = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !corr.is_finite() {
                done[i] = true;
                continue;
            }
            z[i] -= corr;
            active = true;
            if corr.norm() <= EPS * z[i].norm() {
                done[i] = true;
            }
        }
        if !active {
            break;
        }
    }
    if z.iter().all(|w| w.is_finite()) {
        z
    } else {
        z0.to_vec()
    }
}

fn all_distinct(z: &[Complex64]) -> bool {
    (0..z.len()).all(|i| (i + 1..z.len()).all(|j| z[i] != z[j]))
}

/// The unscaled nonzero-root polynomial in double-double form.
struct Poly {
    coeffs: Vec<f64>,
    dd: Vec<Dd>,
}

impl Poly {
    fn new(q: &[f64]) -> Self {
        Self {
            coeffs: q.to_vec(),
            dd: q.iter().map(|c| Dd::from_f64(*c)).collect(),
        }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Newton on the `k`-th derivative, accepting only residual decreases.
    fn polish(&self, z0: Complex64, k: usize) -> Complex64 {
        let c = if k == 0 {
            self.dd.clone()
        } else {
            dd::derivative_coeffs(&self.coeffs, k)
        };
        let real = z0.im == 0.0;
        let mut z = z0;
        let (mut f, mut d) = dd::horner_with_derivative(&c, z);
        for _ in 0..POLISH_STEPS {
            if f.norm() == 0.0 || d.norm() == 0.0 || !f.is_finite() || !d.is_finite() {
                break;
            }
            let step = f / d;
            let mut cand = z - step;
            if real {
                cand.im = 0.0;
            }
            let (fc, dc) = dd::horner_with_derivative(&c, cand);
            if !(fc.norm() < f.norm()) {
                break;
            }
            z = cand;
            f = fc;
            d = dc;
            if step.norm() <= EPS * z.norm() {
                break;
            }
        }
        z
    }

    /// `|q(z)|` plus its evaluation error bound.
    fn residual_bound(&self, z: Complex64) -> f64 {
        let (f, _) = dd::horner_with_derivative(&self.dd, z);
        f.norm() * (1.0 + 4.0 * EPS) + dd::horner_error_bound(&self.dd, z)
    }
}

/// Braess-Hadeler inclusion: the disks `|s - z_i| ≤ m |q(z_i)| / |q_m Π_{j≠i}(z_i - z_j)|`
/// cover all roots, each connected component holding as many roots as disks.
fn assign_weierstrass_radii(poly: &Poly, cands: &mut [Cand]) {
    let m = poly.degree();
    let ln_lead = poly.coeffs[m].abs().ln();
    let expanded: Vec<Complex64> = cands
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.z, c.mult))
        .collect();
    for c in cands.iter_mut() {
        let res = poly.residual_bound(c.z);
        if res == 0.0 {
            c.radius = 0.0;
            continue;
        }
        let mut skipped = false;
        let mut ln_prod = 0.0;
        for w in &expanded {
            if *w == c.z && !skipped {
                skipped = true;
                continue;
            }
            ln_prod += (c.z - w).norm().ln();
        }
        c.radius = ((m as f64).ln() + res.ln() - ln_lead - ln_prod).exp();
        if !c.radius.is_finite() {
            c.radius = f64::INFINITY;
        }
    }
}

/// Real approximations get a zero imaginary part; the rest are paired with
/// their mirror images and replaced by an exactly conjugate pair. Pairs are
/// stored adjacently, upper half-plane first.
fn symmetrize(poly: &Poly, cands: Vec<Cand>) -> Vec<Cand> {
    let mut reals = Vec::new();
    let mut uppers = Vec::new();
    let mut lowers = Vec::new();
    for c in cands {
        if c.z.im == 0.0 || c.z.im.abs() <= c.radius {
            reals.push(c);
        } else if c.z.im > 0.0 {
            uppers.push(c);
        } else {
            lowers.push(c);
        }
    }
    uppers.sort_by(|a, b| cmp_complex(&a.z, &b.z));
    lowers.sort_by(|a, b| cmp_complex(&a.z.conj(), &b.z.conj()));

    let mut used = vec![false; lowers.len()];
    let mut pairs = Vec::new();
    for u in uppers {
        let best = lowers
            .iter()
            .enumerate()
            .filter(|(j, l)| !used[*j] && l.mult == u.mult)
            .min_by(|(_, a), (_, b)| {
                (u.z - a.z.conj())
                    .norm()
                    .total_cmp(&(u.z - b.z.conj()).norm())
            })
            .map(|(j, _)| j);
        match best {
            Some(j) => {
                used[j] = true;
                let l = lowers[j];
                let mid = (u.z + l.z.conj()) * 0.5;
                let z = poly.polish(mid, u.mult - 1);
                let radius =
                    u.radius.max(l.radius) + (u.z - l.z.conj()).norm() * 0.5 + (z - mid).norm();
                pairs.push(Cand {
                    z,
                    mult: u.mult,
                    radius,
                });
                pairs.push(Cand {
                    z: z.conj(),
                    mult: u.mult,
                    radius,
                });
            }
            None => reals.push(u),
        }
    }
    for (j, l) in lowers.into_iter().enumerate() {
        if !used[j] {
            reals.push(l);
        }
    }
    for r in reals.iter_mut() {
        let start = Complex64::new(r.z.re, 0.0);
        let z = poly.polish(start, r.mult - 1);
        r.radius += (z - r.z).norm();
        r.z = z;
    }
    reals.extend(pairs);
    reals
}

/// Replaces each radius by the inclusion radius of the polished points when
/// that is smaller. Skipped when polishing made two points coincide.
fn tighten_radii(poly: &Poly, cands: &mut [Cand]) {
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            if cands[i].z == cands[j].z {
                return;
            }
        }
    }
    let mut fresh = cands.to_vec();
    assign_weierstrass_radii(poly, &mut fresh);
    for (c, f) in cands.iter_mut().zip(&fresh) {
        c.radius = c.radius.min(f.radius);
    }
}

/// Conjugate partners carry the same radius.
fn equalize_pair_radii(cands: &mut [Cand]) {
    let first_pair = cands
        .iter()
        .position(|c| c.z.im != 0.0)
        .unwrap_or(cands.len());
    for pair in cands[first_pair..].chunks_mut(2) {
        if let [a, b] = pair {
            let r = a.radius.max(b.radius);
            a.radius = r;
            b.radius = r;
        }
    }
}

/// Merges overlapping inclusion disks, overlapping pseudozero disks and
/// points closer than the relative cluster threshold into one root whose
/// multiplicity is the cluster size.
fn merge_clusters(poly: &Poly, cands: Vec<Cand>) -> Vec<Cand> {
    let n = cands.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        let mut i = i;
        while parent[i] != r {
            let next = parent[i];
            parent[i] = r;
            i = next;
        }
        r
    }
    // Roots within reach of coefficient rounding count as one multiple root.
    let delta = 4.0 * (poly.degree() + 1) as f64 * EPS;
    let pseudo: Vec<f64> = cands
        .iter()
        .map(|c| pseudozero_radius(&poly.coeffs, c.z, delta))
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let d = (cands[i].z - cands[j].z).norm();
            let scale = cands[i].z.norm().max(cands[j].z.norm());
            if d <= cands[i].radius + cands[j].radius
                || d <= pseudo[i] + pseudo[j]
                || d <= CLUSTER_REL * scale
            {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[b.max(a)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(i);
    }
    if groups.len() == n {
        return cands;
    }

    let merged: Vec<Cand> = groups
        .iter()
        .map(|g| {
            if g.len() == 1 {
                return cands[g[0]];
            }
            let mult: usize = g.iter().map(|&i| cands[i].mult).sum();
            let center = g
                .iter()
                .map(|&i| cands[i].z * cands[i].mult as f64)
                .sum::<Complex64>()
                / mult as f64;
            let spread = |c: Complex64| {
                g.iter()
                    .map(|&i| (cands[i].z - c).norm() + cands[i].radius)
                    .fold(0.0, f64::max)
            };
            Cand {
                z: center,
                mult,
                radius: spread(center),
            }
        })
        .collect();

    // Pair the merged clusters again, then polish each on the derivative of
    // order mult-1, keeping the result only while it stays inside the cluster.
    let centers: Vec<Cand> = merged
        .iter()
        .map(|c| Cand {
            radius: c.radius,
            ..*c
        })
        .collect();
    let mut out = symmetrize_clusters(centers);
    for c in out.iter_mut().filter(|c| c.mult > 1) {
        let polished = poly.polish(c.z, c.mult - 1);
        if (polished - c.z).norm() <= c.radius {
            let grow = (polished - c.z).norm();
            c.z = polished;
            c.radius += grow;
        }
    }
    equalize_pair_radii(&mut out);
    // Exact mirror images after independent polishing.
    let first_pair = out.iter().position(|c| c.z.im != 0.0).unwrap_or(out.len());
    for pair in out[first_pair..].chunks_mut(2) {
        if let [a, b] = pair {
            b.z = a.z.conj();
        }
    }
    out
}

/// Like [`symmetrize`] without polishing: reals first, then adjacent
/// conjugate pairs (upper first).
fn symmetrize_clusters(cands: Vec<Cand>) -> Vec<Cand> {
    let mut reals = Vec::new();
    let mut uppers = Vec::new();
    let mut lowers = Vec::new();
    for c in cands {
        if c.z.im == 0.0 || c.z.im.abs() <= c.radius {
            reals.push(Cand {
                z: Complex64::new(c.z.re, 0.0),
                ..c
            });
        } else if c.z.im > 0.0 {
            uppers.push(c);
        } else {
            lowers.push(c);
        }
    }
    let mut used = vec![false; lowers.len()];
    let mut pairs = Vec::new();
    for u in uppers {
        let best = lowers
            .iter()
            .enumerate()
            .filter(|(j, l)| !used[*j] && l.mult == u.mult)
            .min_by(|(_, a), (_, b)| {
                (u.z - a.z.conj())
                    .norm()
                    .total_cmp(&(u.z - b.z.conj()).norm())
            })
            .map(|(j, _)| j);
        match best {
            Some(j) => {
                used[j] = true;
                let l = lowers[j];
                let z = (u.z + l.z.conj()) * 0.5;
                let radius = u.radius.max(l.radius) + (u.z - l.z.conj()).norm() * 0.5;
                pairs.push(Cand {
                    z,
                    mult: u.mult,
                    radius,
                });
                pairs.push(Cand {
                    z: z.conj(),
                    mult: u.mult,
                    radius,
                });
            }
            None => reals.push(Cand {
                z: Complex64::new(u.z.re, 0.0),
                ..u
            }),
        }
    }
    for (j, l) in lowers.into_iter().enumerate() {
        if !used[j] {
            reals.push(Cand {
                z: Complex64::new(l.z.re, 0.0),
                ..l
            });
        }
    }
    reals.extend(pairs);
    reals
}
