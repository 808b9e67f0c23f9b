//! Pinned, self-contained reproductions with numeric targets.

use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use steiner_core::bodies::{
    cap_body_roots_closed_form, crosspolytope_quermass, lens_perimeter_window,
    lens_violation_window, make_cap_body, make_lens, vertex_angle_sum, LensGeometry,
};
use steiner_core::checker::{check_conjecture, lens_violation_test, planar_circumradius_violation};
use steiner_core::hurwitz::{is_hurwitz, truncated_binomial};
use steiner_core::quermass::{build_polynomial, shift_by_gauge, swap_bodies};
use steiner_core::rootfind::{find_roots, find_roots_of};
use steiner_core::{Complex64, QuermassVector, RationalPolynomial, RootSet, Stability};

use crate::format::num;

pub const SCENARIOS: [&str; 9] = [
    "lens",
    "lens-shift",
    "swap-inradius",
    "n15",
    "n12",
    "n20-cross",
    "cap-sweep",
    "p0-window",
    "nle5",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum TargetValue {
    Number(f64),
    Text(String),
}

impl std::fmt::Display for TargetValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TargetValue::Number(x) => f.write_str(&num(*x)),
            TargetValue::Text(s) => f.write_str(s),
        }
    }
}

/// A computed quantity against its pinned value. Text targets must match
/// exactly and carry tolerance 0.
#[derive(Debug, Clone, Serialize)]
pub struct Target {
    pub name: String,
    pub computed: TargetValue,
    pub target: TargetValue,
    pub tolerance: f64,
    pub pass: bool,
}

impl Target {
    pub fn number(name: impl Into<String>, computed: f64, target: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            computed: TargetValue::Number(computed),
            target: TargetValue::Number(target),
            tolerance,
            pass: (computed - target).abs() <= tolerance,
        }
    }

    pub fn text(name: impl Into<String>, computed: impl ToString, target: impl ToString) -> Self {
        let (computed, target) = (computed.to_string(), target.to_string());
        Self {
            name: name.into(),
            pass: computed == target,
            computed: TargetValue::Text(computed),
            target: TargetValue::Text(target),
            tolerance: 0.0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioResult {
    pub scenario: String,
    pub inputs: Value,
    pub values: Value,
    pub targets: Vec<Target>,
    pub pass: bool,
}

impl ScenarioResult {
    fn new(scenario: &str, inputs: Value, values: Value, targets: Vec<Target>) -> Self {
        Self {
            scenario: scenario.into(),
            pass: targets.iter().all(|t| t.pass),
            inputs,
            values,
            targets,
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "{} {}\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.scenario
        );
        for t in &self.targets {
            let tol = if t.tolerance > 0.0 {
                format!(" ± {}", num(t.tolerance))
            } else {
                String::new()
            };
            out.push_str(&format!(
                "  [{}] {}: {} (target {}{})\n",
                if t.pass { "ok" } else { "FAIL" },
                t.name,
                t.computed,
                t.target,
                tol
            ));
        }
        out
    }
}

pub fn run(id: &str) -> Result<ScenarioResult> {
    match id {
        "lens" => lens(),
        "lens-shift" => lens_shift(),
        "swap-inradius" => swap_inradius(),
        "n15" => truncated_binomial_instability("n15", 15, 2),
        "n12" => truncated_binomial_instability("n12", 12, 3),
        "n20-cross" => n20_cross(),
        "cap-sweep" => cap_sweep(),
        "p0-window" => p0_window(),
        "nle5" => nle5(),
        _ => bail!(
            "unknown scenario {id:?}; expected one of {}",
            SCENARIOS.join(", ")
        ),
    }
}

/// Values printed as truncated decimals: the target is the midpoint of
/// `[printed, printed + 1e-6)` in magnitude.
fn truncated(printed: f64) -> f64 {
    printed + 5e-7 * printed.signum()
}

fn nearest(rs: &RootSet, want: Complex64) -> Complex64 {
    rs.expanded()
        .into_iter()
        .min_by(|a, b| (a - want).norm().total_cmp(&(b - want).norm()))
        .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
}

fn roots_json(rs: &RootSet) -> Value {
    serde_json::to_value(rs).unwrap_or(Value::Null)
}

fn sign(x: f64) -> &'static str {
    if x > 0.0 {
        "positive"
    } else if x < 0.0 {
        "negative"
    } else {
        "zero"
    }
}

/// Largest distance between matched multisets (greedy nearest matching).
fn match_distance(want: &[Complex64], got: &[Complex64]) -> f64 {
    if want.len() != got.len() {
        return f64::INFINITY;
    }
    let mut used = vec![false; got.len()];
    let mut worst = 0.0f64;
    for w in want {
        let best = got
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, g)| (j, (g - w).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        if let Some((j, d)) = best {
            used[j] = true;
            worst = worst.max(d);
        }
    }
    worst
}

fn lens() -> Result<ScenarioResult> {
    let body = make_lens(1.0, 5.2).context("bodies")?;
    let geom = body.lens.context("lens geometry")?;
    let rs = find_roots(&body.polynomial()).context("rootfind")?;
    let rep = check_conjecture(&rs, &body.radii);
    let upper = nearest(&rs, Complex64::new(-0.975, 0.15));
    let zero = nearest(&rs, Complex64::new(0.0, 0.0));
    let targets = vec![
        Target::number("area A", geom.area, 2.038627, 1e-5),
        Target::number("zero root |s|", zero.norm(), 0.0, 5e-7),
        Target::number("complex root Re", upper.re, -0.975, 5e-7),
        Target::number(
            "complex root |Im|",
            upper.im.abs(),
            truncated(0.150823),
            5e-7,
        ),
        Target::text("circumradius clause", rep.circumradius.verdict, "fails"),
        Target::number(
            "circumradius margin",
            rep.circumradius.margin.unwrap_or(f64::NAN),
            -0.025,
            1e-9,
        ),
    ];
    Ok(ScenarioResult::new(
        "lens",
        json!({"R": 1.0, "p": 5.2}),
        json!({"lens": geom, "roots": roots_json(&rs), "conjecture": rep}),
        targets,
    ))
}

fn lens_shift() -> Result<ScenarioResult> {
    let body = make_lens(1.0, 5.2).context("bodies")?;
    let p = body.polynomial();
    let base = find_roots(&p).context("rootfind")?.expanded();
    let mut targets = Vec::new();
    let mut values = Vec::new();
    for nu in [0.5, 1.0, 2.0] {
        let rs = find_roots(&shift_by_gauge(&p, nu)).context("rootfind")?;
        let want: Vec<Complex64> = base.iter().map(|z| z - nu).collect();
        let dev = match_distance(&want, &rs.expanded());
        let rep = check_conjecture(&rs, &body.radii.shifted(nu));
        targets.push(Target::number(
            format!("nu={nu}: max |root + nu - lens root|"),
            dev,
            0.0,
            1e-8,
        ));
        targets.push(Target::number(
            format!("nu={nu}: circumradius margin"),
            rep.circumradius.margin.unwrap_or(f64::NAN),
            -0.025,
            1e-8,
        ));
        values.push(json!({"nu": nu, "roots": roots_json(&rs), "conjecture": rep}));
    }
    Ok(ScenarioResult::new(
        "lens-shift",
        json!({"R": 1.0, "p": 5.2, "nu": [0.5, 1.0, 2.0]}),
        Value::Array(values),
        targets,
    ))
}

fn swap_inradius() -> Result<ScenarioResult> {
    let lens = make_lens(1.0, 5.2).context("bodies")?;
    let l1 = shift_by_gauge(&lens.polynomial(), 1.0)
        .to_quermass()
        .context("quermass")?;
    let rs = find_roots(&build_polynomial(&swap_bodies(&l1))).context("rootfind")?;
    let rad = lens
        .radii
        .shifted(1.0)
        .swapped()
        .context("swapped radii need a known circumradius")?;
    let rep = check_conjecture(&rs, &rad);
    let real = nearest(&rs, Complex64::new(-1.0, 0.0));
    let upper = nearest(&rs, Complex64::new(-0.5, 0.04));
    let targets = vec![
        Target::number("real root", real.re, -1.0, 5e-7),
        Target::number("complex root Re", upper.re, truncated(-0.503393), 5e-7),
        Target::number(
            "complex root |Im|",
            upper.im.abs(),
            truncated(0.038442),
            5e-7,
        ),
        Target::number("inradius r", rad.r, 0.5, 1e-15),
        Target::text("inradius clause", rep.inradius.verdict, "fails"),
    ];
    Ok(ScenarioResult::new(
        "swap-inradius",
        json!({"R": 1.0, "p": 5.2, "nu": 1.0}),
        json!({"quermass": swap_bodies(&l1), "radii": rad, "roots": roots_json(&rs), "conjecture": rep}),
        targets,
    ))
}

fn truncated_binomial_instability(id: &str, n: usize, k: usize) -> Result<ScenarioResult> {
    let (p, zeros) = truncated_binomial(n, k)
        .context("hurwitz")?
        .deflate_zero_roots();
    let verdict = is_hurwitz(&p).context("hurwitz")?;
    let rs = find_roots_of(&p.to_f64()).context("rootfind")?;
    let max_re = rs.max_real().unwrap_or(f64::NAN);
    let top = nearest(&rs, Complex64::new(max_re, f64::INFINITY));
    let targets = vec![
        Target::text("Routh-Hurwitz verdict", verdict, Stability::Unstable),
        Target::text("sign of largest real part", sign(max_re), "positive"),
    ];
    Ok(ScenarioResult::new(
        id,
        json!({"n": n, "k": k}),
        json!({
            "deflated_zero_roots": zeros,
            "max_real": max_re,
            "root": {"re": top.re, "im": top.im},
            "roots": roots_json(&rs),
        }),
        targets,
    ))
}

fn n20_cross() -> Result<ScenarioResult> {
    let mut lams = vec![0.01; 10];
    lams.extend([1.0; 10]);
    let body = crosspolytope_quermass(&lams).context("bodies")?;
    let poly = body.polynomial();
    let rs = find_roots(&poly).context("rootfind")?;
    let top = rs
        .roots()
        .iter()
        .copied()
        .max_by(|a, b| a.value.re.total_cmp(&b.value.re))
        .context("no roots")?;
    let exact = RationalPolynomial::from_f64(poly.coeffs()).context("hurwitz")?;
    let verdict = is_hurwitz(&exact.deflate_zero_roots().0).context("hurwitz")?;
    let gauss = vertex_angle_sum(&lams).context("bodies")?;
    let certified = top.value.re - top.error_radius > 0.0;
    let targets = vec![
        Target::text("sign of largest real part", sign(top.value.re), "positive"),
        Target::text("inclusion disk in right half-plane", certified, true),
        Target::text("Routh-Hurwitz verdict", verdict, Stability::Unstable),
        Target::text(
            "log-concave quermassintegrals",
            body.quermass.is_valid_body(),
            true,
        ),
        Target::number("vertex external angle sum", gauss, 1.0, 1e-6),
    ];
    Ok(ScenarioResult::new(
        "n20-cross",
        json!({"lambdas": lams}),
        json!({
            "quermass": body.quermass,
            "root": top,
            "roots": roots_json(&rs),
            "conjecture": check_conjecture(&rs, &body.radii),
        }),
        targets,
    ))
}

fn cap_sweep() -> Result<ScenarioResult> {
    let mut worst = 0.0f64;
    let mut failures = 0usize;
    let mut max_re = f64::NEG_INFINITY;
    let mut count = 0usize;
    for n in 2..=20 {
        for a in 1..=10 {
            let alpha = a as f64 / 10.0;
            let body = make_cap_body(n, alpha, 1.0).context("bodies")?;
            let rs = find_roots(&body.polynomial()).context("rootfind")?;
            let closed = cap_body_roots_closed_form(n, alpha).context("bodies")?;
            let inv = |v: Vec<Complex64>| v.into_iter().map(|z| z.inv()).collect::<Vec<_>>();
            worst = worst.max(match_distance(&inv(closed.expanded()), &inv(rs.expanded())));
            let rep = check_conjecture(&rs, &body.radii);
            if !(rep.negativity.verdict.is_holds() && rep.inradius.verdict.is_holds()) {
                failures += 1;
            }
            max_re = max_re.max(rs.max_real().unwrap_or(0.0));
            count += 1;
        }
    }
    let targets = vec![
        Target::number("max |1/root - closed form|", worst, 0.0, 1e-8),
        Target::number("negativity or inradius failures", failures as f64, 0.0, 0.0),
    ];
    Ok(ScenarioResult::new(
        "cap-sweep",
        json!({"n": [2, 20], "alpha": [0.1, 1.0], "alpha_step": 0.1}),
        json!({"bodies": count, "max_real": max_re, "max_deviation": worst}),
        targets,
    ))
}

fn p0_window() -> Result<ScenarioResult> {
    let (p0, top) = lens_perimeter_window(1.0).context("bodies")?;
    let (p1, _) = lens_violation_window(1.0).context("bodies")?;
    let eps = 1e-3;
    let mut literal_mismatch = 0usize;
    let mut exact_mismatch = 0usize;
    let mut checked = 0usize;
    for k in 0..50 {
        let p = 4.0 + (std::f64::consts::TAU - 4.0) * (k as f64 + 0.5) / 50.0;
        let g = LensGeometry::new(1.0, p).context("bodies")?;
        let body = make_lens(1.0, p).context("bodies")?;
        let rs = find_roots(&body.polynomial()).context("rootfind")?;
        let fails = check_conjecture(&rs, &body.radii)
            .circumradius
            .verdict
            .is_fails();
        if planar_circumradius_violation(g.area, p, 1.0) != fails {
            exact_mismatch += 1;
        }
        if (p - p0).abs() <= eps || (p - top).abs() <= eps {
            continue;
        }
        checked += 1;
        let expected = p > p0 + eps && p < top - eps;
        if lens_violation_test(g.area, p, 1.0) != expected || fails != expected {
            literal_mismatch += 1;
        }
    }
    let targets = vec![
        Target::number("p0", p0, 5.052, 1e-3),
        Target::number(
            "lens test mismatches on grid",
            literal_mismatch as f64,
            0.0,
            0.0,
        ),
        Target::number(
            "exact planar test mismatches",
            exact_mismatch as f64,
            0.0,
            0.0,
        ),
    ];
    Ok(ScenarioResult::new(
        "p0-window",
        json!({"R": 1.0, "grid": 50, "eps": eps}),
        json!({
            "p0": p0,
            "upper": top,
            "real_root_violation_start": p1,
            "grid_points_checked": checked,
        }),
        targets,
    ))
}

fn random_log_concave(rng: &mut ChaCha8Rng, n: usize) -> Result<QuermassVector> {
    let mut inc: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
    inc.sort_by(|a, b| b.total_cmp(a));
    let mut w = vec![rng.gen_range(-4.0f64..4.0).exp()];
    for d in inc {
        let last = w[w.len() - 1];
        w.push(last * d.exp());
    }
    Ok(QuermassVector::new(n, w)?.validated()?)
}

fn nle5() -> Result<ScenarioResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut not_stable = 0usize;
    let mut by_n = [0usize; 6];
    for i in 0..500 {
        let n = 2 + i % 4;
        let q = random_log_concave(&mut rng, n).context("quermass")?;
        let p = build_polynomial(&q);
        let exact = RationalPolynomial::from_f64(p.coeffs()).context("hurwitz")?;
        if is_hurwitz(&exact).context("hurwitz")? != Stability::Stable {
            not_stable += 1;
        }
        by_n[n] += 1;
    }
    let targets = vec![Target::number(
        "not Hurwitz-stable",
        not_stable as f64,
        0.0,
        0.0,
    )];
    Ok(ScenarioResult::new(
        "nle5",
        json!({"samples": 500, "n": [2, 5], "seed": 7}),
        json!({"samples_per_n": {"2": by_n[2], "3": by_n[3], "4": by_n[4], "5": by_n[5]}}),
        targets,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_scenario_passes() {
        for id in SCENARIOS {
            let r = run(id).unwrap();
            assert!(r.pass, "{}", r.text());
            assert!(!r.targets.is_empty());
        }
    }

    #[test]
    fn unknown_scenario_is_an_error() {
        assert!(run("n16").is_err());
    }

    #[test]
    fn text_targets_have_zero_tolerance() {
        let t = Target::text("v", "fails", "fails");
        assert!(t.pass);
        assert_eq!(t.tolerance, 0.0);
        assert!(!Target::number("x", 1.0, 1.1, 0.05).pass);
    }
}
