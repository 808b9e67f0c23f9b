//! Parameter scans over one-parameter body families.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;
use steiner_core::bodies::{
    crosspolytope_quermass, make_cap_body, make_lens, make_two_tangential, two_tangential_unchecked,
};
use steiner_core::checker::check_conjecture_with;
use steiner_core::rootfind::find_roots;
use steiner_core::{Body, Verdict};

use crate::format::num;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `β = α = t`, or `β = t, α = t²` on the log-concave boundary.
    Twotan,
    /// `α = t`.
    Cap,
    /// Perimeter `p = t`.
    Lens,
    /// Half the semi-axes equal `t`, the rest 1.
    Cross,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Twotan => "twotan",
            Family::Cap => "cap",
            Family::Lens => "lens",
            Family::Cross => "cross",
        }
    }

    fn default_n(self) -> usize {
        match self {
            Family::Twotan => 15,
            Family::Cap | Family::Lens => 3,
            Family::Cross => 20,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "twotan" => Family::Twotan,
            "cap" => Family::Cap,
            "lens" => Family::Lens,
            "cross" => Family::Cross,
            _ => bail!("unknown scan family {s:?} (expected twotan, cap, lens or cross)"),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Curve {
    Diagonal,
    Boundary,
}

impl FromStr for Curve {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "diagonal" => Curve::Diagonal,
            "boundary" => Curve::Boundary,
            _ => bail!("unknown curve {s:?} (expected diagonal or boundary)"),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanConfig {
    pub family: Family,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub log: bool,
    pub n: usize,
    /// Lens circumradius.
    pub radius: f64,
    pub curve: Curve,
    pub tol: f64,
}

impl ScanConfig {
    pub fn new(family: Family, from: f64, to: f64, steps: usize) -> Self {
        Self {
            family,
            from,
            to,
            steps,
            log: false,
            n: family.default_n(),
            radius: 1.0,
            curve: Curve::Diagonal,
            tol: steiner_core::tol::VERDICT_ABS,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (a, b) = (self.from, self.to);
        if !(a.is_finite() && b.is_finite()) {
            bail!("invalid range: endpoints must be finite");
        }
        if self.steps == 0 || (self.steps == 1 && a != b) {
            bail!("invalid range: need at least two steps for a nonempty interval");
        }
        if self.log && !(a > 0.0 && b > 0.0) {
            bail!("invalid range: logarithmic scans need positive endpoints");
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let ok = match self.family {
            Family::Twotan => lo > 0.0 && hi <= 1.0,
            Family::Cap => lo > 0.0 && hi <= 1.0,
            Family::Lens => {
                let r = self.radius;
                r > 0.0 && lo > 4.0 * r && hi <= 2.0 * std::f64::consts::PI * r
            }
            Family::Cross => lo > 0.0,
        };
        if !ok {
            bail!(
                "invalid range: [{}, {}] outside the domain of the {} family",
                num(lo),
                num(hi),
                self.family
            );
        }
        if self.family == Family::Cross && self.n < 2 {
            bail!("invalid range: crosspolytope scans need n >= 2");
        }
        Ok(())
    }

    /// Sample points, ascending.
    pub fn params(&self) -> Vec<f64> {
        let k = self.steps;
        let mut v: Vec<f64> = if k == 1 {
            vec![self.from]
        } else {
            (0..k)
                .map(|i| {
                    let t = i as f64 / (k - 1) as f64;
                    if self.log {
                        (self.from.ln() + t * (self.to.ln() - self.from.ln())).exp()
                    } else {
                        self.from + t * (self.to - self.from)
                    }
                })
                .collect()
        };
        // Exact endpoints despite rounding in exp/ln.
        if k > 1 {
            v[0] = self.from;
            v[k - 1] = self.to;
        }
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn body(&self, t: f64) -> Result<Body> {
        let n = self.n;
        let body = match self.family {
            Family::Twotan => match self.curve {
                Curve::Diagonal => two_tangential_unchecked(n, t, t, 1.0),
                Curve::Boundary => make_two_tangential(n, t, t * t, 1.0),
            },
            Family::Cap => make_cap_body(n, t, 1.0),
            Family::Lens => make_lens(self.radius, t),
            Family::Cross => {
                let half = n / 2;
                let mut lams: Vec<f64> = (0..n).map(|i| if i < half { t } else { 1.0 }).collect();
                lams.sort_by(f64::total_cmp);
                crosspolytope_quermass(&lams)
            }
        };
        body.with_context(|| format!("bodies: {} at {}", self.family, num(t)))
    }

    pub fn row(&self, t: f64) -> Result<ScanRow> {
        let body = self.body(t)?;
        let rs = find_roots(&body.polynomial())
            .with_context(|| format!("rootfind: {} at {}", self.family, num(t)))?;
        let c = check_conjecture_with(&rs, &body.radii, self.tol);
        Ok(ScanRow {
            family: self.family.name(),
            param: t,
            n: self.n,
            max_re: rs.max_real().unwrap_or(0.0),
            min_re: rs.min_real().unwrap_or(0.0),
            negativity_margin: c.negativity.margin,
            inradius_margin: c.inradius.margin,
            circumradius_margin: c.circumradius.margin,
            ordering: c.ordering,
            valid_body: body.quermass.is_valid_body(),
        })
    }
}

/// One sample. Field order is the frozen CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub family: &'static str,
    pub param: f64,
    pub n: usize,
    pub max_re: f64,
    pub min_re: f64,
    pub negativity_margin: Option<f64>,
    pub inradius_margin: Option<f64>,
    pub circumradius_margin: Option<f64>,
    pub ordering: Verdict,
    pub valid_body: bool,
}

pub const CSV_HEADER: &str = "family,param,n,max_re,min_re,negativity_margin,inradius_margin,circumradius_margin,ordering,valid_body";

impl ScanRow {
    pub fn csv(&self) -> String {
        let opt = |x: Option<f64>| x.map(num).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.family,
            num(self.param),
            self.n,
            num(self.max_re),
            num(self.min_re),
            opt(self.negativity_margin),
            opt(self.inradius_margin),
            opt(self.circumradius_margin),
            self.ordering,
            self.valid_body
        )
    }
}

/// A parameter interval on which a scanned quantity changes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Transition {
    /// `max_re` (sign change of the largest real part) or `ordering`.
    pub quantity: &'static str,
    pub lo: f64,
    pub hi: f64,
    /// Bisected location for `max_re` transitions.
    pub at: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanResult {
    pub config: ScanConfig,
    pub rows: Vec<ScanRow>,
    pub transitions: Vec<Transition>,
}

impl ScanResult {
    pub fn csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.csv());
            out.push('\n');
        }
        out
    }
}

/// Thread count from `STEINER_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("STEINER_THREADS")
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
}

/// Runs the scan; rows come back sorted by parameter whatever the thread count.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanResult> {
    cfg.validate()?;
    let params = cfg.params();
    let work = || -> Result<Vec<ScanRow>> { params.par_iter().map(|&t| cfg.row(t)).collect() };
    let mut rows = match thread_cap() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .context("thread pool")?
            .install(work)?,
        None => work()?,
    };
    rows.sort_by(|a, b| a.param.total_cmp(&b.param));

    let mut transitions = Vec::new();
    for w in rows.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if (a.max_re > 0.0) != (b.max_re > 0.0) {
            transitions.push(Transition {
                quantity: "max_re",
                lo: a.param,
                hi: b.param,
                at: bisect_max_re(cfg, a.param, b.param).ok(),
            });
        }
        if a.ordering != b.ordering {
            transitions.push(Transition {
                quantity: "ordering",
                lo: a.param,
                hi: b.param,
                at: None,
            });
        }
    }
    Ok(ScanResult {
        config: cfg.clone(),
        rows,
        transitions,
    })
}

/// Where `max_re` changes sign between `lo` and `hi`, to about 1e-10 relative.
pub fn bisect_max_re(cfg: &ScanConfig, lo: f64, hi: f64) -> Result<f64> {
    let f = |t: f64| cfg.row(t).map(|r| r.max_re > 0.0);
    let (mut a, mut b) = (lo, hi);
    let fa = f(a)?;
    if fa == f(b)? {
        bail!("no sign change of the largest real part on [{a}, {b}]");
    }
    for _ in 0..200 {
        let m = if cfg.log {
            (a * b).sqrt()
        } else {
            0.5 * (a + b)
        };
        if !(m > a && m < b) || (b - a) <= 1e-10 * b.abs() {
            break;
        }
        if f(m)? == fa {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}
