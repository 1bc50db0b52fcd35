//! Command-line front door for the library: closed-form values, extremal
//! constructions, level-set measurement, search oracles, verification
//! campaigns, and CSV scans. Every JSON document carries a manifest under
//! the `"manifest"` key recording the command, its full parameter set, the
//! seed, the tool version, wall time, and any file the document was saved
//! to; re-running a deterministic command with the same parameters
//! reproduces the output except for the wall-time field.
//!
//! Exit codes: 0 success, 1 I/O trouble, 2 domain or validation errors,
//! 3 for an oracle result without its certificate.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use chebmeas::closedforms::{
    arc_extremal, babenko_beta, delta, eps_arc, extremal_fnk, extremal_g, min_supnorm_value,
    mu_leading, polya_e, relate_params, segment_extremal, sigma, u_compact, ParamSpec,
};
use chebmeas::geometry::{
    convexity_campaign, cube_campaign, decomposition_check, equivalence_check, structure_check,
};
use chebmeas::levelset::{level_set, SampleGrid};
use chebmeas::oracle::{
    babenko_scan, e_on_set, minimax_on_set, minimize_measure, minimize_supnorm, SearchConfig,
};
use chebmeas::trigpoly::{CirclePoly, PolyJson, TrigPoly, ZeroForm};

#[derive(Parser)]
#[command(
    name = "chebmeas",
    version,
    about = "Trigonometric polynomials deviating least from zero in measure: \
             closed forms, extremal constructions, level sets, searches, and checks"
)]
struct Cli {
    /// Seed for randomized commands; falls back to CHEBMEAS_SEED, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Also write the emitted document to this file.
    #[arg(long, global = true, value_name = "FILE")]
    save: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one closed-form quantity.
    ClosedForm(ClosedFormArgs),
    /// Build an extremal polynomial and emit it with its metadata.
    Construct(ConstructArgs),
    /// Extract the level set of a polynomial read from a JSON file.
    Measure(MeasureArgs),
    /// Derivative-free searches that rediscover the closed forms.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Randomized verification campaigns; reports violations, never panics.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Tabulate a quantity over a parameter grid as CSV.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Sigma,
    Delta,
    EpsArc,
    UCompact,
    Babenko,
    Polya,
    MuLeading,
    MinSupnorm,
}

#[derive(Args)]
struct ClosedFormArgs {
    #[arg(value_enum)]
    quantity: Quantity,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    y: Option<f64>,
    #[arg(long)]
    h: Option<f64>,
    #[arg(long)]
    two_alpha: Option<f64>,
    #[arg(long)]
    two_rho: Option<f64>,
    /// Interpret angle inputs as degrees.
    #[arg(long)]
    deg: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Chebyshev composition with prescribed leading-harmonic size.
    Fnk,
    /// Monic circle polynomial least deviating from zero on an arc.
    Arc,
    /// Zero product least deviating from zero in measure.
    G,
    /// Trigonometric polynomial least deviating from zero on a segment.
    Segment,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    y: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 0)]
    k: i64,
    /// Interpret angle inputs as degrees.
    #[arg(long)]
    deg: bool,
}

#[derive(Args)]
struct MeasureArgs {
    /// Path to a polynomial JSON document (kind: trig, zeros, or circle).
    #[arg(long)]
    poly: PathBuf,
    /// Threshold h of the level set {t : |f(t)| >= h}.
    #[arg(long)]
    level: f64,
    /// Sample count of the scanning grid.
    #[arg(long)]
    grid: Option<usize>,
    /// Width of the tangency band around the threshold.
    #[arg(long)]
    touch_tol: Option<f64>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 32)]
    starts: usize,
    #[arg(long)]
    init_step: Option<f64>,
    #[arg(long, default_value_t = 0.5)]
    shrink: f64,
    #[arg(long, default_value_t = 1e-6)]
    min_step: f64,
    #[arg(long, default_value_t = 200_000)]
    max_evals: usize,
    #[arg(long)]
    allow_large_m: bool,
    /// Record (evaluation, value) at every improvement.
    #[arg(long)]
    keep_history: bool,
}

impl SearchArgs {
    fn config(&self, seed: u64) -> SearchConfig {
        SearchConfig {
            starts: self.starts,
            init_step: self.init_step,
            shrink: self.shrink,
            min_step: self.min_step,
            seed,
            max_evals: self.max_evals,
            allow_large_m: self.allow_large_m,
            keep_history: self.keep_history,
        }
    }
    fn params(&self, seed: u64) -> Value {
        json!({
            "starts": self.starts,
            "init_step": self.init_step,
            "shrink": self.shrink,
            "min_step": self.min_step,
            "max_evals": self.max_evals,
            "allow_large_m": self.allow_large_m,
            "keep_history": self.keep_history,
            "seed": seed,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Minimize the measure of {t : |g(t)| >= h} over zero configurations.
    MinMeasure {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h: f64,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Minimize sup |g| over zero configurations (the floor is 2).
    MinSupnorm {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Best uniform approximation of cos(nt) on a set by order n-1.
    Minimax {
        #[arg(long)]
        n: usize,
        /// Union of closed intervals, "a,b;c,d".
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, default_value_t = 32768)]
        grid_pts: usize,
        /// Interpret interval endpoints as degrees.
        #[arg(long)]
        deg: bool,
    },
    /// Minimize sup over a set of |g| with unconstrained zeros.
    ESet {
        #[arg(long)]
        m: usize,
        /// Union of closed intervals, "a,b;c,d".
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[command(flatten)]
        search: SearchArgs,
        /// Interpret interval endpoints as degrees.
        #[arg(long)]
        deg: bool,
    },
    /// Tabulate the leading-harmonic measure ratio over y.
    Babenko {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        y_from: f64,
        #[arg(long)]
        y_to: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Midpoint log-concavity of the weight on random open-cube pairs.
    Convexity {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Staircase structure of line-cube intersections on random anchors.
    Cubes {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Cube shares recompose the line measure on random zero-sum anchors.
    Decomposition {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Arc-length route equals sqrt(m) times the line measure.
    Equivalence {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h: f64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Best-found level set has one segment and m-1 touch points.
    Structure {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h: f64,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanQuantity {
    Sigma,
    BabenkoRatio,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    quantity: ScanQuantity,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    y_from: f64,
    #[arg(long)]
    y_to: f64,
    #[arg(long)]
    steps: usize,
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn domain(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }
    fn io(msg: impl std::fmt::Display) -> Self {
        Failure { code: 1, msg: msg.to_string() }
    }
}

impl From<chebmeas::Error> for Failure {
    fn from(e: chebmeas::Error) -> Self {
        Failure::domain(e.to_string())
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("CHEBMEAS_SEED") {
        Ok(text) => text
            .parse()
            .map_err(|_| Failure::domain(format!("CHEBMEAS_SEED must be an integer, got {text:?}"))),
        Err(_) => Ok(0),
    }
}

/// Emits `payload` (an object) with the manifest merged in under
/// `"manifest"`, to stdout and optionally to `save`.
struct Emitter {
    command: String,
    params: Value,
    seed: u64,
    save: Option<PathBuf>,
    started: Instant,
}

impl Emitter {
    fn json(&self, payload: Value) -> Result<(), Failure> {
        let manifest = json!({
            "command": self.command,
            "params": self.params,
            "seed": self.seed,
            "version": env!("CARGO_PKG_VERSION"),
            "wall_time_ms": self.started.elapsed().as_millis() as u64,
            "output_paths": self.save.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
        });
        let mut doc = Map::new();
        doc.insert("manifest".into(), manifest);
        match payload {
            Value::Object(fields) => doc.extend(fields),
            other => {
                doc.insert("value".into(), other);
            }
        }
        let text = serde_json::to_string_pretty(&Value::Object(doc))
            .expect("documents assembled here always serialize")
            + "\n";
        self.write(&text)
    }

    fn csv(&self, text: &str) -> Result<(), Failure> {
        self.write(text)
    }

    fn write(&self, text: &str) -> Result<(), Failure> {
        print!("{text}");
        if let Some(path) = &self.save {
            std::fs::write(path, text).map_err(Failure::io)?;
        }
        Ok(())
    }
}

fn run() -> Result<ExitCode, Failure> {
    let cli = Cli::parse();
    let seed = resolve_seed(cli.seed)?;
    let started = Instant::now();
    let emitter = |command: &str, params: Value| Emitter {
        command: command.into(),
        params,
        seed,
        save: cli.save.clone(),
        started,
    };

    match cli.cmd {
        Cmd::ClosedForm(args) => {
            let (name, value, params) = closed_form(&args)?;
            emitter("closed-form", params).json(json!({ "quantity": name, "value": value }))?;
        }
        Cmd::Construct(args) => {
            let (params, payload) = construct(&args)?;
            emitter("construct", params).json(payload)?;
        }
        Cmd::Measure(args) => {
            let (params, payload) = measure(&args)?;
            emitter("measure", params).json(payload)?;
        }
        Cmd::Oracle(cmd) => return oracle(cmd, seed, &emitter),
        Cmd::Verify(cmd) => {
            let (name, params, report) = verify(cmd, seed)?;
            emitter(name, params).json(serde_json::to_value(report).expect("report serializes"))?;
        }
        Cmd::Scan(args) => {
            let (params, text) = scan(&args)?;
            emitter("scan", params).csv(&text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn angle(v: f64, deg: bool) -> f64 {
    if deg {
        v.to_radians()
    } else {
        v
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, what: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::domain(format!("{what} requires --{flag}")))
}

fn closed_form(args: &ClosedFormArgs) -> Result<(&'static str, f64, Value), Failure> {
    let params = json!({
        "n": args.n, "m": args.m, "y": args.y, "h": args.h,
        "two_alpha": args.two_alpha, "two_rho": args.two_rho, "deg": args.deg,
    });
    let (name, value) = match args.quantity {
        Quantity::Sigma => {
            let n = need(args.n, "n", "sigma")?;
            let y = need(args.y, "y", "sigma")?;
            ("sigma", sigma(n, y)?)
        }
        Quantity::Delta => {
            let m = need(args.m, "m", "delta")?;
            let h = need(args.h, "h", "delta")?;
            ("delta", delta(m, h)?)
        }
        Quantity::EpsArc => {
            let m = need(args.m, "m", "eps-arc")?;
            let a2 = angle(need(args.two_alpha, "two-alpha", "eps-arc")?, args.deg);
            ("eps-arc", eps_arc(m, a2)?)
        }
        Quantity::UCompact => {
            let n = need(args.n, "n", "u-compact")?;
            let a2 = angle(need(args.two_alpha, "two-alpha", "u-compact")?, args.deg);
            ("u-compact", u_compact(n, a2)?)
        }
        Quantity::Babenko => {
            let n = need(args.n, "n", "babenko")?;
            if n == 0 {
                return Err(Failure::domain("babenko requires n >= 1"));
            }
            ("babenko", babenko_beta(n))
        }
        Quantity::Polya => {
            let m = need(args.m, "m", "polya")?;
            let r2 = angle(need(args.two_rho, "two-rho", "polya")?, args.deg);
            ("polya", polya_e(m, r2)?)
        }
        Quantity::MuLeading => {
            let y = need(args.y, "y", "mu-leading")?;
            ("mu-leading", mu_leading(y)?)
        }
        Quantity::MinSupnorm => {
            let m = need(args.m, "m", "min-supnorm")?;
            if m == 0 {
                return Err(Failure::domain("min-supnorm requires m >= 1"));
            }
            ("min-supnorm", min_supnorm_value(m))
        }
    };
    Ok((name, value, params))
}

/// Zeros of `T_n(c cos(t - theta) - (c - 1))` for `c >= 1`: two per
/// Chebyshev root, symmetric about `theta`.
fn composition_zeros(n: usize, c: f64, theta: f64) -> Vec<f64> {
    let mut zeros = Vec::with_capacity(2 * n);
    for j in 1..=n {
        let x = (std::f64::consts::PI * (2 * j - 1) as f64 / (2 * n) as f64).cos();
        let u = (1.0 - (1.0 - x) / c).clamp(-1.0, 1.0);
        zeros.push(theta + u.acos());
        zeros.push(theta - u.acos());
    }
    zeros.sort_by(|a, b| a.partial_cmp(b).unwrap());
    zeros
}

fn construct(args: &ConstructArgs) -> Result<(Value, Value), Failure> {
    let params = json!({
        "n": args.n, "m": args.m, "y": args.y, "alpha": args.alpha,
        "k": args.k, "deg": args.deg,
    });
    let payload = match args.family {
        Family::Fnk => {
            let n = need(args.n, "n", "fnk")?;
            let y = need(args.y, "y", "fnk")?;
            if !(y > 1.0) {
                return Err(Failure::domain(format!(
                    "fnk requires y > 1 for a nondegenerate family, got {y}"
                )));
            }
            let p = extremal_fnk(n, y, args.k)?;
            let k = args.k.rem_euclid(2 * n as i64);
            let theta = std::f64::consts::PI * k as f64 / n as f64;
            json!({
                "family": "fnk",
                "poly": PolyJson::from(&p),
                "zeros": composition_zeros(n, y.powf(1.0 / n as f64), theta),
                "threshold": 1.0,
                "theoretical_measure": sigma(n, y)?,
            })
        }
        Family::Arc => {
            let m = need(args.m, "m", "arc")?;
            let alpha = angle(need(args.alpha, "alpha", "arc")?, args.deg);
            let p = arc_extremal(m, alpha)?;
            json!({
                "family": "arc",
                "poly": PolyJson::from(&p),
                "zeros": p.phis(),
                "sup_on_arc": eps_arc(m, 2.0 * alpha)?,
            })
        }
        Family::G => {
            let m = need(args.m, "m", "g")?;
            let alpha = angle(need(args.alpha, "alpha", "g")?, args.deg);
            let g = extremal_g(m, alpha)?;
            let rel = relate_params(m, ParamSpec::Alpha(alpha))?;
            json!({
                "family": "g",
                "poly": PolyJson::from(&g),
                "zeros": g.phis(),
                "threshold": rel.h,
                "theoretical_measure": delta(m, rel.h)?,
            })
        }
        Family::Segment => {
            let n = need(args.n, "n", "segment")?;
            let alpha = angle(need(args.alpha, "alpha", "segment")?, args.deg);
            let p = segment_extremal(n, alpha, args.k)?;
            let s2 = (0.5 * alpha).sin().powi(2);
            let k = args.k.rem_euclid(2 * n as i64);
            let theta = -std::f64::consts::PI * k as f64 / n as f64;
            json!({
                "family": "segment",
                "poly": PolyJson::from(&p),
                "zeros": composition_zeros(n, 1.0 / s2, theta),
                "theoretical_value": u_compact(n, 2.0 * alpha)?,
            })
        }
    };
    Ok((params, payload))
}

fn measure(args: &MeasureArgs) -> Result<(Value, Value), Failure> {
    let params = json!({
        "poly": args.poly.display().to_string(),
        "level": args.level,
        "grid": args.grid,
        "touch_tol": args.touch_tol,
    });
    let text = std::fs::read_to_string(&args.poly).map_err(Failure::io)?;
    let poly: PolyJson = serde_json::from_str(&text)
        .map_err(|e| Failure::io(format!("{} is not a polynomial document: {e}", args.poly.display())))?;
    let eval: Box<dyn Fn(f64) -> f64> = match poly {
        PolyJson::Trig { .. } => {
            let p = TrigPoly::try_from(poly).map_err(|e| Failure::io(e.to_string()))?;
            Box::new(move |t| p.eval(t))
        }
        PolyJson::Zeros { .. } => {
            let z = ZeroForm::try_from(poly).map_err(|e| Failure::io(e.to_string()))?;
            Box::new(move |t| z.eval(t))
        }
        PolyJson::Circle { .. } => {
            let c = CirclePoly::try_from(poly).map_err(|e| Failure::io(e.to_string()))?;
            Box::new(move |t| c.eval_at_angle(t).norm())
        }
    };
    let mut grid = SampleGrid::default();
    if let Some(n) = args.grid {
        grid.n = n;
    }
    if let Some(tol) = args.touch_tol {
        grid.touch_tol = tol;
    }
    let ls = level_set(eval, args.level, &grid)?;
    Ok((params, serde_json::to_value(ls).expect("level set serializes")))
}

fn parse_set(text: &str, deg: bool) -> Result<Vec<(f64, f64)>, Failure> {
    text.split(';')
        .map(|part| {
            let (a, b) = part
                .split_once(',')
                .ok_or_else(|| Failure::domain(format!("interval {part:?} is not \"a,b\"")))?;
            let lo: f64 = a
                .trim()
                .parse()
                .map_err(|_| Failure::domain(format!("bad interval endpoint {a:?}")))?;
            let hi: f64 = b
                .trim()
                .parse()
                .map_err(|_| Failure::domain(format!("bad interval endpoint {b:?}")))?;
            Ok((angle(lo, deg), angle(hi, deg)))
        })
        .collect()
}

fn oracle(
    cmd: OracleCmd,
    seed: u64,
    emitter: &dyn Fn(&str, Value) -> Emitter,
) -> Result<ExitCode, Failure> {
    match cmd {
        OracleCmd::MinMeasure { m, h, search } => {
            let mut params = search.params(seed);
            params["m"] = json!(m);
            params["h"] = json!(h);
            let r = minimize_measure(m, h, &search.config(seed))?;
            emitter("oracle min-measure", params)
                .json(serde_json::to_value(r).expect("result serializes"))?;
        }
        OracleCmd::MinSupnorm { m, search } => {
            let mut params = search.params(seed);
            params["m"] = json!(m);
            let r = minimize_supnorm(m, &search.config(seed))?;
            emitter("oracle min-supnorm", params)
                .json(serde_json::to_value(r).expect("result serializes"))?;
        }
        OracleCmd::Minimax { n, set, grid_pts, deg } => {
            let q = parse_set(&set, deg)?;
            let params = json!({ "n": n, "set": set, "grid_pts": grid_pts, "deg": deg });
            let r = minimax_on_set(n, &q, grid_pts)?;
            let certified = r.certified;
            emitter("oracle minimax", params)
                .json(serde_json::to_value(r).expect("result serializes"))?;
            if !certified {
                return Ok(ExitCode::from(3));
            }
        }
        OracleCmd::ESet { m, set, search, deg } => {
            let q = parse_set(&set, deg)?;
            let mut params = search.params(seed);
            params["m"] = json!(m);
            params["set"] = json!(set);
            params["deg"] = json!(deg);
            let r = e_on_set(m, &q, &search.config(seed))?;
            emitter("oracle e-set", params)
                .json(serde_json::to_value(r).expect("result serializes"))?;
        }
        OracleCmd::Babenko { n, y_from, y_to, steps, out } => {
            let params = json!({
                "n": n, "y_from": y_from, "y_to": y_to, "steps": steps,
                "out": match out { OutFormat::Json => "json", OutFormat::Csv => "csv" },
            });
            let rows = babenko_scan(n, &linspace(y_from, y_to, steps)?)?;
            match out {
                OutFormat::Json => emitter("oracle babenko", params)
                    .json(json!({ "rows": rows }))?,
                OutFormat::Csv => {
                    let mut text = String::from("y,mu,sigma,ratio\n");
                    for r in rows {
                        text.push_str(&format!("{},{},{},{}\n", r.y, r.mu, r.sigma, r.ratio));
                    }
                    emitter("oracle babenko", params).csv(&text)?;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(cmd: VerifyCmd, seed: u64) -> Result<(&'static str, Value, chebmeas::geometry::CampaignReport), Failure> {
    Ok(match cmd {
        VerifyCmd::Convexity { m, samples } => (
            "verify convexity",
            json!({ "m": m, "samples": samples, "seed": seed }),
            convexity_campaign(m, samples, seed)?,
        ),
        VerifyCmd::Cubes { m, samples } => (
            "verify cubes",
            json!({ "m": m, "samples": samples, "seed": seed }),
            cube_campaign(m, samples, seed)?,
        ),
        VerifyCmd::Decomposition { m, h, samples } => (
            "verify decomposition",
            json!({ "m": m, "h": h, "samples": samples, "seed": seed }),
            decomposition_check(m, h, samples, seed)?,
        ),
        VerifyCmd::Equivalence { m, h, samples } => (
            "verify equivalence",
            json!({ "m": m, "h": h, "samples": samples, "seed": seed }),
            equivalence_check(m, h, samples, seed)?,
        ),
        VerifyCmd::Structure { m, h, search } => {
            let mut params = search.params(seed);
            params["m"] = json!(m);
            params["h"] = json!(h);
            ("verify structure", params, structure_check(m, h, &search.config(seed))?)
        }
    })
}

fn linspace(from: f64, to: f64, steps: usize) -> Result<Vec<f64>, Failure> {
    if steps == 0 {
        return Err(Failure::domain("steps must be at least 1"));
    }
    if !from.is_finite() || !to.is_finite() {
        return Err(Failure::domain(format!("range [{from}, {to}] must be finite")));
    }
    if steps == 1 {
        return Ok(vec![from]);
    }
    Ok((0..steps)
        .map(|i| from + (to - from) * i as f64 / (steps - 1) as f64)
        .collect())
}

fn scan(args: &ScanArgs) -> Result<(Value, String), Failure> {
    let params = json!({
        "quantity": match args.quantity {
            ScanQuantity::Sigma => "sigma",
            ScanQuantity::BabenkoRatio => "babenko-ratio",
        },
        "n": args.n, "y_from": args.y_from, "y_to": args.y_to, "steps": args.steps,
    });
    let ys = linspace(args.y_from, args.y_to, args.steps)?;
    let text = match args.quantity {
        ScanQuantity::Sigma => {
            let mut text = String::from("y,value\n");
            for y in ys {
                text.push_str(&format!("{},{}\n", y, sigma(args.n, y)?));
            }
            text
        }
        ScanQuantity::BabenkoRatio => {
            let mut text = String::from("y,mu,sigma,ratio\n");
            for r in babenko_scan(args.n, &ys)? {
                text.push_str(&format!("{},{},{},{}\n", r.y, r.mu, r.sigma, r.ratio));
            }
            text
        }
    };
    Ok((params, text))
}
