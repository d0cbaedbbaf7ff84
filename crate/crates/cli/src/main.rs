//! Command-line front end: one subcommand per computation, JSON literals in,
//! JSON summaries and CSV tables out.
//!
//! Exit codes: 0 success, 1 mathematical property failure (an inequality the
//! theory promises was violated), 2 usage or precondition errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use fractal_nevanlinna::bounds::{
    self, lhs_integral, verify_corpus, BoundReport, CorpusConfig, VariantStatus,
};
use fractal_nevanlinna::Complex64;
use fractal_nevanlinna::content::{
    brute_force_content, exact_content, limit_content, ContentResult,
};
use fractal_nevanlinna::frostman::frostman_measure;
use fractal_nevanlinna::gauge::Gauge;
use fractal_nevanlinna::increasing::IncreasingFunction;
use fractal_nevanlinna::nevanlinna::LogRatio;
use fractal_nevanlinna::set::IntervalUnion;

#[derive(Parser)]
#[command(
    name = "fractal-nevanlinna",
    version,
    about = "Hausdorff contents, Frostman measures and Nevanlinna characteristics on interval sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hausdorff content of a set under a gauge, with a diameter limit.
    Content {
        /// Gauge literal, e.g. '{"kind":"power","b":1.0,"d":0.5}'
        #[arg(long)]
        gauge: String,
        /// Set literal, e.g. '{"cantor":{"depth":2,"ratio":0.3333333333}}'
        #[arg(long)]
        set: String,
        /// Diameter limit: a positive number or "inf"
        #[arg(long, default_value = "inf")]
        diameter: String,
        /// dp | brute | limit
        #[arg(long, default_value = "dp")]
        mode: String,
        /// Refinement grid for brute mode
        #[arg(long, default_value_t = 32)]
        grid: u32,
    },
    /// Build the Frostman measure of a compact set.
    Frostman {
        #[arg(long)]
        gauge: String,
        #[arg(long)]
        set: String,
        /// Net base (2 = dyadic, 3 = ternary)
        #[arg(long, default_value_t = 2)]
        base: u32,
        #[arg(long)]
        depth: u32,
        /// Where to write the distribution as CSV (t, m)
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Tabulate an increasing function and its modulus of continuity.
    Modulus {
        /// Measure literal, e.g. '{"identity":1.0}'
        #[arg(long)]
        measure: String,
        #[arg(long, default_value_t = 256)]
        grid: u32,
        /// Output CSV path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Nevanlinna difference characteristic of a log-ratio test function.
    Characteristic {
        /// Function literal: '{"c0":0.0,"zeros":[[re,im,mult]],"poles":[...]}'
        #[arg(long)]
        function: String,
        #[arg(long)]
        r: f64,
        #[arg(long = "R")]
        big_r: f64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Run the corpus verification harness from a JSON config.
    Verify {
        #[arg(long)]
        config: PathBuf,
    },
    /// Sweep a parameter and emit (parameter, lhs, rhs, ratio) rows.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Deserialize)]
struct VerifyConfig {
    #[serde(flatten)]
    corpus: CorpusConfig,
    #[serde(default = "default_report_csv")]
    output_csv: PathBuf,
    #[serde(default = "default_report_json")]
    output_json: PathBuf,
}

fn default_report_csv() -> PathBuf {
    "report.csv".into()
}

fn default_report_json() -> PathBuf {
    "report.json".into()
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum SweepConfig {
    RatioVsDepth {
        seed: u64,
        depths: Vec<u32>,
        #[serde(default = "default_ratio")]
        ratio: f64,
        #[serde(default = "default_base")]
        base: u32,
        #[serde(default = "default_r")]
        r: f64,
        #[serde(default = "default_big_r")]
        big_r: f64,
        output_csv: PathBuf,
    },
    RatioVsDimension {
        seed: u64,
        dimensions: Vec<f64>,
        #[serde(default = "default_depth")]
        depth: u32,
        #[serde(default = "default_ratio")]
        ratio: f64,
        #[serde(default = "default_base")]
        base: u32,
        #[serde(default = "default_r")]
        r: f64,
        #[serde(default = "default_big_r")]
        big_r: f64,
        output_csv: PathBuf,
    },
}

fn default_ratio() -> f64 {
    1.0 / 3.0
}
fn default_base() -> u32 {
    3
}
fn default_depth() -> u32 {
    6
}
fn default_r() -> f64 {
    1.0
}
fn default_big_r() -> f64 {
    2.0
}

/// Full-precision cell: 17 significant digits survive a round trip.
fn cell(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_diameter(text: &str) -> Result<f64, String> {
    if text == "inf" || text == "infinity" {
        return Ok(f64::INFINITY);
    }
    text.parse::<f64>().map_err(|e| format!("bad diameter {text:?}: {e}"))
}

fn init_threads() {
    if let Ok(v) = std::env::var("FRACTAL_NEVANLINNA_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
}

enum Failure {
    /// A mathematical property the theory promises did not hold.
    Property(String),
    /// Bad usage, bad config, or an inapplicable precondition.
    Usage(String),
}

impl From<fractal_nevanlinna::Error> for Failure {
    fn from(e: fractal_nevanlinna::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    init_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property(msg)) => {
            eprintln!("property failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Content { gauge, set, diameter, mode, grid } => {
            let gauge = Gauge::from_json(&gauge)?;
            let set = IntervalUnion::from_json(&set)?;
            let l = parse_diameter(&diameter).map_err(Failure::Usage)?;
            let result: ContentResult = match mode.as_str() {
                "dp" => exact_content(&gauge, &set, l)?,
                "brute" => {
                    let value = brute_force_content(&gauge, &set, l, grid)?;
                    ContentResult { value, attained: true, converged: None }
                }
                "limit" => limit_content(&gauge, &set)?,
                other => return Err(Failure::Usage(format!("unknown mode {other:?}"))),
            };
            let mut record = serde_json::json!({
                "value": result.value,
                "attained": result.attained,
                "mode": mode,
            });
            if let Some(c) = result.converged {
                record["converged"] = serde_json::json!(c);
            }
            println!("{record}");
            Ok(())
        }
        Command::Frostman { gauge, set, base, depth, csv } => {
            let gauge = Gauge::from_json(&gauge)?;
            let set = IntervalUnion::from_json(&set)?;
            let res = frostman_measure(&gauge, &set, base, depth)?;
            if let Some(path) = csv {
                let mut text = String::from("t,m\n");
                for &(t, v) in res.distribution.linear_knots() {
                    text.push_str(&format!("{},{}\n", cell(t), cell(v)));
                }
                fs::write(&path, text)
                    .map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))?;
            }
            println!(
                "{}",
                serde_json::json!({
                    "total_mass": res.total_mass,
                    "empirical_A": res.empirical_a,
                    "net_base": res.net_base,
                    "depth": res.depth,
                })
            );
            Ok(())
        }
        Command::Modulus { measure, grid, out } => {
            let m = IncreasingFunction::from_json(&measure)?;
            if grid == 0 {
                return Err(Failure::Usage("grid must be positive".into()));
            }
            let r = m.domain_right();
            let mut text = String::from("t,m,omega\n");
            for i in 0..=grid {
                let t = r * i as f64 / grid as f64;
                text.push_str(&format!(
                    "{},{},{}\n",
                    cell(t),
                    cell(m.eval(t)),
                    cell(m.modulus_of_continuity(t))
                ));
            }
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Characteristic { function, r, big_r, tol } => {
            let u = LogRatio::from_json(&function)?;
            let mean = u.circle_mean_positive(r, tol)?;
            let value = u.characteristic(r, big_r, tol)?;
            println!(
                "{}",
                serde_json::json!({
                    "T": value,
                    "mean_term": mean,
                    "pole_term": value - mean,
                    "lower_variation_at_R": u.lower_variation(big_r),
                })
            );
            Ok(())
        }
        Command::Verify { config } => {
            let text = fs::read_to_string(&config)
                .map_err(|e| Failure::Usage(format!("reading {}: {e}", config.display())))?;
            let cfg: VerifyConfig = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("config: {e}")))?;
            let reports = verify_corpus(&cfg.corpus)?;
            write_report_csv(&cfg.output_csv, &reports)?;
            let json = serde_json::to_string_pretty(&reports)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            fs::write(&cfg.output_json, json)
                .map_err(|e| Failure::Usage(format!("writing {}: {e}", cfg.output_json.display())))?;
            let failures: usize = reports
                .iter()
                .map(|r| r.outcomes.iter().filter(|(_, s)| s.failed()).count())
                .sum();
            let skips: usize = reports
                .iter()
                .map(|r| {
                    r.outcomes
                        .iter()
                        .filter(|(_, s)| matches!(s, VariantStatus::Skip { .. }))
                        .count()
                })
                .sum();
            println!(
                "{}",
                serde_json::json!({
                    "cases": reports.len(),
                    "failures": failures,
                    "skips": skips,
                    "csv": cfg.output_csv,
                    "json": cfg.output_json,
                })
            );
            if failures > 0 {
                return Err(Failure::Property(format!("{failures} inequality violations")));
            }
            Ok(())
        }
        Command::Sweep { config } => {
            let text = fs::read_to_string(&config)
                .map_err(|e| Failure::Usage(format!("reading {}: {e}", config.display())))?;
            let cfg: SweepConfig = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("config: {e}")))?;
            run_sweep(cfg)
        }
    }
}

fn write_report_csv(path: &PathBuf, reports: &[BoundReport]) -> Result<(), Failure> {
    let mut text = String::from("case_id,variant,lhs,rhs,ratio,status\n");
    for rep in reports {
        for (variant, status) in &rep.outcomes {
            let (rhs, ratio, status_str) = match status {
                VariantStatus::Pass { rhs, ratio } => (cell(*rhs), cell(*ratio), "pass"),
                VariantStatus::Fail { rhs, ratio, .. } => (cell(*rhs), cell(*ratio), "fail"),
                VariantStatus::Skip { .. } => (String::new(), String::new(), "skip"),
            };
            text.push_str(&format!(
                "{},{},{},{rhs},{ratio},{status_str}\n",
                rep.case_id,
                variant.as_str(),
                cell(rep.lhs),
            ));
        }
    }
    fs::write(path, text)
        .map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))?;
    Ok(())
}

/// One seeded test function shared by the whole sweep.
fn sweep_function(seed: u64, big_r: f64, avoid: &[f64]) -> LogRatio {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut zeros = Vec::new();
        let mut poles = Vec::new();
        for i in 0..4 {
            let loc = loop {
                let z = Complex64::new(
                    rng.gen_range(-0.9 * big_r..0.9 * big_r),
                    rng.gen_range(-0.9 * big_r..0.9 * big_r),
                );
                let n = z.norm();
                if n > 1e-3 && n <= 0.9 * big_r && avoid.iter().all(|&a| (n - a).abs() > 1e-3) {
                    break z;
                }
            };
            if i % 2 == 0 {
                zeros.push((loc, 1));
            } else {
                poles.push((loc, 1));
            }
        }
        if let Ok(u) = LogRatio::new(0.1, zeros, poles, f64::INFINITY) {
            return u;
        }
    }
}

fn run_sweep(cfg: SweepConfig) -> Result<(), Failure> {
    let mut rows: Vec<(f64, f64, f64)> = Vec::new();
    let (path, r, big_r) = match &cfg {
        SweepConfig::RatioVsDepth { output_csv, r, big_r, .. } => (output_csv.clone(), *r, *big_r),
        SweepConfig::RatioVsDimension { output_csv, r, big_r, .. } => {
            (output_csv.clone(), *r, *big_r)
        }
    };
    match cfg {
        SweepConfig::RatioVsDepth { seed, depths, ratio, base, .. } => {
            let exponent = IntervalUnion::similarity_dimension(ratio)?;
            let gauge = Gauge::power(1.0, exponent, r)?;
            let u = sweep_function(seed, big_r, &[r]);
            for depth in depths {
                let set = IntervalUnion::cantor_prefractal(depth, ratio, r)?;
                let m = frostman_measure(&gauge, &set, base, depth.max(1))?.distribution;
                let lhs = lhs_integral(&u, &m, r, 1e-8)?.value;
                let out =
                    bounds::rhs_content_swap(&u, &m, &gauge, &set, r, big_r, f64::INFINITY, 1e-8)?;
                rows.push((depth as f64, lhs, out.rhs));
            }
        }
        SweepConfig::RatioVsDimension { seed, dimensions, depth, ratio, base, .. } => {
            let set = IntervalUnion::cantor_prefractal(depth, ratio, r)?;
            let u = sweep_function(seed, big_r, &[r]);
            for d in dimensions {
                let gauge = Gauge::power(1.0, d, r)?;
                let m = frostman_measure(&gauge, &set, base, depth)?.distribution;
                let lhs = lhs_integral(&u, &m, r, 1e-8)?.value;
                let rhs = bounds::rhs_dimension_content(
                    &u,
                    &m,
                    &set,
                    r,
                    big_r,
                    1.0,
                    d,
                    f64::INFINITY,
                    1e-8,
                )?;
                rows.push((d, lhs, rhs));
            }
        }
    }
    let mut text = String::from("parameter,lhs,rhs,ratio\n");
    let mut violations = 0usize;
    for (p, lhs, rhs) in rows {
        let ratio = if rhs != 0.0 { lhs / rhs } else { f64::NAN };
        if !bounds::inequality_holds(lhs, rhs) {
            violations += 1;
        }
        text.push_str(&format!("{},{},{},{}\n", cell(p), cell(lhs), cell(rhs), cell(ratio)));
    }
    fs::write(&path, text)
        .map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))?;
    println!("{}", serde_json::json!({ "csv": path, "violations": violations }));
    if violations > 0 {
        return Err(Failure::Property(format!("{violations} sweep rows violate the bound")));
    }
    Ok(())
}
