use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use steiner_cli::analysis::{
    analyze_quermass, analyze_spec, roots_csv, summary, Analysis, QuermassFile,
};
use steiner_cli::format::{num, to_json};
use steiner_cli::scan::{run_scan, Curve, Family, ScanConfig};
use steiner_cli::scenarios::{self, ScenarioResult, SCENARIOS};
use steiner_cli::{exit, svg};
use steiner_core::bodies::{crosspolytope_quermass, external_angle, vertex_angle_sum};
use steiner_core::{BodySpec, Error};

/// Writes to stdout; a closed pipe ends output quietly.
fn emit(s: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(s.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => r.context("writing output"),
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(&format!($($t)*))? };
}

macro_rules! outln {
    ($($t:tt)*) => { emit(&format!("{}\n", format_args!($($t)*)))? };
}

#[derive(Parser)]
#[command(
    name = "steiner",
    version,
    about = "Roots of relative Steiner polynomials"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Also write an SVG plot to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Absolute tolerance on conjecture margins.
    #[arg(long, global = true, value_name = "X", default_value_t = steiner_core::tol::VERDICT_ABS)]
    tol: f64,
    /// Accept quermassintegral vectors that are not log-concave.
    #[arg(long, global = true)]
    allow_invalid: bool,
    /// Read {"n", "W", optional "r", "R"} from a JSON file instead of a body spec.
    #[arg(long, global = true, value_name = "FILE.json")]
    quermass: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial, roots, stability and conjecture report for a body.
    Roots { spec: Option<String> },
    /// Conjecture verdicts; exits 1 when a clause fails.
    Check { spec: Option<String> },
    /// One row per sample of a one-parameter family.
    Scan(ScanArgs),
    /// Run a pinned scenario (or `all`) against its targets.
    Reproduce {
        #[arg(value_parser = scenario_id)]
        scenario: String,
    },
    /// Quermassintegrals and external angles of an orthogonal crosspolytope.
    Crosspoly {
        /// Semi-axes, e.g. `0.01x10,1x10`.
        lambdas: String,
        /// Also report the external angle of the face spanned by these axes.
        #[arg(long, value_delimiter = ',', value_name = "I,J,...")]
        face: Option<Vec<usize>>,
    },
}

#[derive(Args)]
struct ScanArgs {
    /// twotan, cap, lens or cross.
    family: Family,
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    #[arg(long, default_value_t = 50)]
    steps: usize,
    /// Logarithmic spacing.
    #[arg(long)]
    log: bool,
    /// Dimension (default: 15 twotan, 3 cap/lens, 20 cross).
    #[arg(long)]
    n: Option<usize>,
    /// Lens circumradius.
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// twotan curve: diagonal (β = α = t) or boundary (β = t, α = t²).
    #[arg(long, default_value = "diagonal")]
    curve: Curve,
}

fn scenario_id(s: &str) -> Result<String, String> {
    if s == "all" || SCENARIOS.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!(
            "expected `all` or one of: {}",
            SCENARIOS.join(", ")
        ))
    }
}

enum Format {
    Text,
    Json,
    Csv,
}

impl Global {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Text
        }
    }

    fn write_svg(&self, contents: impl FnOnce() -> String) -> Result<()> {
        if let Some(path) = &self.svg {
            std::fs::write(path, contents())
                .with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            report_error(&cli, &e);
            ExitCode::from(exit::ERROR)
        }
    }
}

fn report_error(cli: &Cli, e: &anyhow::Error) {
    eprintln!("error: {e:#}");
    let spec = match &cli.command {
        Command::Roots { spec } | Command::Check { spec } => spec.as_deref(),
        _ => None,
    };
    if let (Some(spec), Some(Error::Parse { position, .. })) = (spec, e.downcast_ref::<Error>()) {
        eprintln!("  {spec}");
        eprintln!(
            "  {}^",
            " ".repeat(spec[..(*position).min(spec.len())].chars().count())
        );
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Roots { spec } => {
            let a = analyze_input(g, spec.as_deref())?;
            emit_analysis(g, &a, spec.as_deref())?;
            Ok(exit::OK)
        }
        Command::Check { spec } => {
            let a = analyze_input(g, spec.as_deref())?;
            if a.conjecture.is_none() {
                bail!("checker: no radii are known for this input");
            }
            emit_check(g, &a, spec.as_deref())?;
            Ok(if a.passes() {
                exit::OK
            } else {
                exit::CHECK_FAILED
            })
        }
        Command::Scan(args) => scan(g, args),
        Command::Reproduce { scenario } => reproduce(g, scenario),
        Command::Crosspoly { lambdas, face } => crosspoly(g, lambdas, face.as_deref()),
    }
}

fn analyze_input(g: &Global, spec: Option<&str>) -> Result<Analysis> {
    match (spec, &g.quermass) {
        (Some(_), Some(_)) => bail!("give either a body spec or --quermass, not both"),
        (None, None) => bail!("missing body spec (or --quermass FILE.json)"),
        (None, Some(path)) => {
            let (q, radii) = QuermassFile::load(path)?.into_parts(g.allow_invalid)?;
            analyze_quermass(q, radii, None, None, g.tol)
        }
        (Some(s), None) => {
            let spec: BodySpec = s.parse()?;
            analyze_spec(&spec, g.allow_invalid, g.tol)
        }
    }
}

fn title(spec: Option<&str>) -> String {
    spec.unwrap_or("quermass input").to_string()
}

fn emit_analysis(g: &Global, a: &Analysis, spec: Option<&str>) -> Result<()> {
    match g.format() {
        Format::Json => outln!("{}", to_json(a)?),
        Format::Csv => out!("{}", roots_csv(a)),
        Format::Text => out!("{}", summary(a)),
    }
    g.write_svg(|| svg::root_plot(&title(spec), &a.roots, a.radii.as_ref()))
}

fn emit_check(g: &Global, a: &Analysis, spec: Option<&str>) -> Result<()> {
    let c = a.conjecture.as_ref().expect("checked by caller");
    match g.format() {
        Format::Json => outln!(
            "{}",
            to_json(
                &json!({"radii": a.radii, "max_real": a.max_real, "min_real": a.min_real,
                            "hurwitz": a.hurwitz, "conjecture": c})
            )?
        ),
        Format::Csv => {
            outln!("clause,verdict,margin");
            for (name, clause) in [
                ("negativity", c.negativity),
                ("inradius", c.inradius),
                ("circumradius", c.circumradius),
            ] {
                outln!(
                    "{name},{},{}",
                    clause.verdict,
                    clause.margin.map(num).unwrap_or_default()
                );
            }
            outln!("ordering,{},", c.ordering);
        }
        Format::Text => out!("{}", summary(a)),
    }
    g.write_svg(|| svg::root_plot(&title(spec), &a.roots, a.radii.as_ref()))
}

fn scan(g: &Global, args: &ScanArgs) -> Result<u8> {
    let mut cfg = ScanConfig::new(args.family, args.from, args.to, args.steps);
    cfg.log = args.log;
    cfg.radius = args.radius;
    cfg.curve = args.curve;
    cfg.tol = g.tol;
    if let Some(n) = args.n {
        cfg.n = n;
    }
    let res = run_scan(&cfg)?;
    match g.format() {
        Format::Json => outln!("{}", to_json(&res)?),
        Format::Csv | Format::Text => {
            out!("{}", res.csv());
            for t in &res.transitions {
                let at = t.at.map(|x| format!(" at {}", num(x))).unwrap_or_default();
                eprintln!(
                    "{} changes in [{}, {}]{at}",
                    t.quantity,
                    num(t.lo),
                    num(t.hi)
                );
            }
        }
    }
    g.write_svg(|| {
        let pts: Vec<(f64, f64)> = res.rows.iter().map(|r| (r.param, r.max_re)).collect();
        svg::line_plot(
            &format!("{} n={}", cfg.family, cfg.n),
            "parameter",
            "largest real part",
            &pts,
            cfg.log,
        )
    })?;
    Ok(exit::OK)
}

fn reproduce(g: &Global, id: &str) -> Result<u8> {
    if g.svg.is_some() {
        bail!("--svg is not supported by reproduce");
    }
    let ids: Vec<&str> = if id == "all" {
        SCENARIOS.to_vec()
    } else {
        vec![id]
    };
    let results = ids
        .iter()
        .map(|id| scenarios::run(id).with_context(|| format!("scenario {id}")))
        .collect::<Result<Vec<ScenarioResult>>>()?;
    match g.format() {
        Format::Json if results.len() == 1 => outln!("{}", to_json(&results[0])?),
        Format::Json => outln!("{}", to_json(&results)?),
        Format::Csv => {
            outln!("scenario,target,computed,expected,tolerance,pass");
            for r in &results {
                for t in &r.targets {
                    outln!(
                        "{},{},{},{},{},{}",
                        r.scenario,
                        t.name.replace(',', ";"),
                        t.computed,
                        t.target,
                        num(t.tolerance),
                        t.pass
                    );
                }
            }
        }
        Format::Text => {
            for r in &results {
                out!("{}", r.text());
            }
        }
    }
    Ok(if results.iter().all(|r| r.pass) {
        exit::OK
    } else {
        exit::CHECK_FAILED
    })
}

fn crosspoly(g: &Global, lambdas: &str, face: Option<&[usize]>) -> Result<u8> {
    let spec: BodySpec = format!("cross:lams={lambdas}")
        .parse()
        .map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position: position.saturating_sub("cross:lams=".len()),
                message,
            },
            other => other,
        })?;
    let BodySpec::Crosspolytope { lambdas: mut lams } = spec else {
        unreachable!("cross grammar yields a crosspolytope");
    };
    lams.sort_by(f64::total_cmp);
    let body = crosspolytope_quermass(&lams).context("bodies")?;
    let gauss = vertex_angle_sum(&lams).context("bodies")?;
    let face_angle = face
        .map(|f| external_angle(&lams, f).context("bodies"))
        .transpose()?;
    let a = steiner_cli::analysis::analyze_body(body, g.tol)?;
    let q = a.quermass.as_ref().expect("bodies carry quermassintegrals");
    match g.format() {
        Format::Json => outln!(
            "{}",
            to_json(&json!({
                "lambdas": lams,
                "vertex_angle_sum": gauss,
                "face": face.map(|f| json!({"axes": f, "external_angle": face_angle})),
                "analysis": a,
            }))?
        ),
        Format::Csv => {
            outln!("i,W");
            for (i, w) in q.w().iter().enumerate() {
                outln!("{i},{}", num(*w));
            }
        }
        Format::Text => {
            outln!("n = {}, vertex angle sum = {}", lams.len(), num(gauss));
            if let (Some(f), Some(angle)) = (face, face_angle) {
                outln!("external angle of face {f:?} = {}", num(angle));
            }
            out!("{}", summary(&a));
        }
    }
    g.write_svg(|| {
        svg::root_plot(
            &format!("crosspolytope {lambdas}"),
            &a.roots,
            a.radii.as_ref(),
        )
    })?;
    Ok(exit::OK)
}
