#![allow(dead_code)]

use rand::Rng;
use steiner_core::bodies::{
    crosspolytope_quermass, make_ball, make_cap_body, make_lens, make_segment, make_two_tangential,
};
use steiner_core::{Body, Complex64, QuermassVector};

/// `W_0 = e^{x0}`, `W_i = W_{i-1} e^{d_i}` with the increments sorted
/// decreasingly, so `log W` is concave.
pub fn log_concave(x0: f64, increments: &[f64]) -> QuermassVector {
    let mut d = increments.to_vec();
    d.sort_by(|a, b| b.total_cmp(a));
    let mut w = vec![x0.exp()];
    for di in d {
        let last = *w.last().unwrap();
        w.push(last * di.exp());
    }
    QuermassVector::new(w.len() - 1, w)
        .and_then(QuermassVector::validated)
        .expect("log-concave by construction")
}

pub fn random_log_concave<R: Rng>(rng: &mut R, max_n: usize) -> QuermassVector {
    let n = rng.gen_range(1..=max_n);
    let inc: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
    log_concave(rng.gen_range(-4.0..4.0), &inc)
}

/// A body with known radii, drawn from several families.
pub fn random_body<R: Rng>(rng: &mut R) -> Body {
    match rng.gen_range(0..6) {
        0 => make_ball(rng.gen_range(1..=12)).unwrap(),
        1 => make_segment(rng.gen_range(1..=10), rng.gen_range(0.01..10.0)).unwrap(),
        2 => {
            let r = rng.gen_range(0.1..5.0);
            let p = r * rng.gen_range(4.001..std::f64::consts::TAU);
            make_lens(r, p).unwrap()
        }
        3 => make_cap_body(rng.gen_range(1..=20), rng.gen_range(0.01..=1.0), 1.0).unwrap(),
        4 => {
            let beta: f64 = rng.gen_range(0.05..=1.0);
            let alpha = beta * beta * rng.gen_range(0.05..=1.0);
            make_two_tangential(rng.gen_range(2..=14), beta, alpha, rng.gen_range(0.1..10.0))
                .unwrap()
        }
        _ => {
            let n = rng.gen_range(2..=6);
            let mut lams: Vec<f64> = (0..n).map(|_| rng.gen_range(0.2..3.0)).collect();
            lams.sort_by(f64::total_cmp);
            crosspolytope_quermass(&lams).unwrap()
        }
    }
}

/// Largest distance between matched points, pairing each point of `want`
/// with the nearest unused point of `got`. `None` on a length mismatch.
pub fn match_distance(want: &[Complex64], got: &[Complex64]) -> Option<f64> {
    if want.len() != got.len() {
        return None;
    }
    let mut used = vec![false; got.len()];
    let mut worst = 0.0f64;
    for w in want {
        let (j, d) = got
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, g)| (j, (g - w).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))?;
        used[j] = true;
        worst = worst.max(d);
    }
    Some(worst)
}
