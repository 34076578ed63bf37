//! Command-line front end.
//!
//! Subcommands: bound | verify | scan | search | hankel.
//! Exit codes: 0 success, 1 internal error, 2 usage error, 3 reserved for a
//! confirmed paper-bound exceedance in `verify`.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use hankel_bounds::bounds::{convex_bound, corrected_convex_envelope, paper_bound};
use hankel_bounds::classes::{FunctionClass, OrderParam};
use hankel_bounds::hankel::hankel_determinant;
use hankel_bounds::search::{
    alpha_scan, monte_carlo_verify, schwarz_box_maximize, ScanRow, SearchConfig,
};
use hankel_bounds::series::PowerSeries;

const EXIT_INTERNAL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_FALSIFIED: u8 = 3;

#[derive(Parser)]
#[command(name = "hankel-bounds", version, about = "Second Hankel determinant bounds for starlike and convex functions of order alpha/2 - 1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct CommonOpts {
    /// Function class: starlike | convex
    #[arg(long)]
    class: Option<String>,
    /// Class parameter alpha in [1,2]
    #[arg(long)]
    alpha: Option<f64>,
    /// RNG seed
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value config file; explicit flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form bound (and corrected envelope for convex)
    Bound {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Monte-Carlo verification against the bounds
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        /// Number of random samples
        #[arg(long)]
        samples: Option<usize>,
        /// Atoms per random measure
        #[arg(long)]
        atoms: Option<usize>,
    },
    /// Scan the bounds and empirical maxima over alpha in [1,2]
    Scan {
        #[command(flatten)]
        common: CommonOpts,
        /// Number of alpha grid points
        #[arg(long)]
        steps: Option<usize>,
        /// Output format: csv | json
        #[arg(long)]
        format: Option<String>,
        /// Also write an SVG line chart to this path
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Samples per scan row
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Maximize the true functional over the (c1, x, z) box
    Search {
        #[command(flatten)]
        common: CommonOpts,
        /// c1 grid points on [0,2]
        #[arg(long = "grid-c")]
        grid_c: Option<usize>,
    },
    /// Hankel determinant H_q(n) of user-supplied coefficients
    Hankel {
        /// JSON array of [re, im] pairs for a1, a2, ... (a0 = 0 implied)
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Serialize)]
struct ReportDocument<T: Serialize> {
    tool_version: String,
    command: String,
    config: SearchConfig,
    results: T,
    timestamps: Timestamps,
}

#[derive(Serialize)]
struct Timestamps {
    started: String,
    finished: String,
}

fn now() -> String {
    chrono::Utc::now().to_rfc3339()
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn load_config(path: &PathBuf) -> Result<HashMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key=value", lineno + 1))?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

/// Flag value, else config-file value, else default.
fn resolve<T: std::str::FromStr>(
    flag: Option<T>,
    file: &HashMap<String, String>,
    key: &str,
    default: T,
) -> Result<T, String> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match file.get(key) {
        Some(raw) => raw
            .parse()
            .map_err(|_| format!("config key '{key}': cannot parse '{raw}'")),
        None => Ok(default),
    }
}

struct Resolved {
    class: FunctionClass,
    alpha: f64,
    seed: u64,
    out: Option<PathBuf>,
}

fn resolve_common(common: &CommonOpts) -> Result<(Resolved, HashMap<String, String>), String> {
    let file = match &common.config {
        Some(path) => load_config(path)?,
        None => HashMap::new(),
    };
    let class: FunctionClass =
        resolve(common.class.clone(), &file, "class", "starlike".to_string())?
            .parse()?;
    let alpha = resolve(common.alpha, &file, "alpha", 2.0)?;
    if !(1.0..=2.0).contains(&alpha) {
        return Err("alpha must lie in [1,2]".into());
    }
    let seed = resolve(common.seed, &file, "seed", 0)?;
    let out = common.out.clone().or_else(|| file.get("out").map(PathBuf::from));
    Ok((Resolved { class, alpha, seed, out }, file))
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{body}");
            Ok(())
        }
    }
}

fn cmd_bound(common: &CommonOpts) -> ExitCode {
    let (r, _) = match resolve_common(common) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let p = OrderParam::new(r.alpha).expect("range checked");
    let bound = paper_bound(r.class, &p);
    let mut doc = json!({
        "class": r.class.to_string(),
        "alpha": p.alpha(),
        "beta": p.beta(),
        "bound_paper": bound.value,
        "maximizer_c": bound.maximizer_c,
    });
    if r.class == FunctionClass::Convex {
        let env = corrected_convex_envelope(&p);
        doc["bound_corrected"] = json!(env.value);
        doc["corrected_maximizer_c"] = json!(env.maximizer_c);
        doc["coincide_at_alpha_2"] = json!(convex_bound(&p).value == env.value);
    }
    match emit(&r.out, &serde_json::to_string_pretty(&doc).expect("json")) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn cmd_verify(common: &CommonOpts, samples: Option<usize>, atoms: Option<usize>) -> ExitCode {
    let started = now();
    let (r, file) = match resolve_common(common) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let mut cfg = SearchConfig::new(r.class, r.alpha);
    cfg.seed = r.seed;
    cfg.mc_samples = match resolve(samples, &file, "samples", 100_000) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    cfg.atoms = match resolve(atoms, &file, "atoms", 3) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let report = match monte_carlo_verify(&cfg) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    let falsified = report.violations_paper > 0;
    let doc = ReportDocument {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        command: "verify".to_string(),
        config: cfg,
        results: &report,
        timestamps: Timestamps { started, finished: now() },
    };
    if let Err(e) = emit(&r.out, &serde_json::to_string_pretty(&doc).expect("json")) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_INTERNAL);
    }
    if falsified {
        eprintln!(
            "paper bound exceeded: empirical max {:.12e} with {} confirmed violation(s)",
            report.empirical_max, report.violations_paper
        );
        ExitCode::from(EXIT_FALSIFIED)
    } else {
        ExitCode::SUCCESS
    }
}

fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(
        "alpha,beta,bound_paper,bound_corrected,empirical_max,gap,verdict\n",
    );
    for row in rows {
        let corrected = row
            .bound_corrected
            .map(|v| format!("{v:.12e}"))
            .unwrap_or_default();
        out.push_str(&format!(
            "{:.12e},{:.12e},{:.12e},{},{:.12e},{:.12e},{}\n",
            row.alpha, row.beta, row.bound_paper, corrected, row.empirical_max, row.gap,
            row.verdict
        ));
    }
    out
}

fn scan_svg(rows: &[ScanRow]) -> String {
    let (w, h, ml, mb) = (720.0, 480.0, 60.0, 40.0);
    let y_max = rows
        .iter()
        .flat_map(|r| [Some(r.bound_paper), r.bound_corrected, Some(r.empirical_max)])
        .flatten()
        .fold(f64::MIN, f64::max)
        * 1.05;
    let sx = |alpha: f64| ml + (alpha - 1.0) * (w - ml - 20.0);
    let sy = |v: f64| h - mb - v / y_max * (h - mb - 20.0);
    let polyline = |points: &[(f64, f64)], color: &str| {
        let pts: Vec<String> = points
            .iter()
            .map(|(x, y)| format!("{:.2},{:.2}", sx(*x), sy(*y)))
            .collect();
        format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
            pts.join(" ")
        )
    };
    let paper: Vec<(f64, f64)> = rows.iter().map(|r| (r.alpha, r.bound_paper)).collect();
    let emp: Vec<(f64, f64)> = rows.iter().map(|r| (r.alpha, r.empirical_max)).collect();
    let corrected: Vec<(f64, f64)> = rows
        .iter()
        .filter_map(|r| r.bound_corrected.map(|v| (r.alpha, v)))
        .collect();
    let mut body = String::new();
    body.push_str(&polyline(&paper, "#1f77b4"));
    if !corrected.is_empty() {
        body.push_str(&polyline(&corrected, "#2ca02c"));
    }
    body.push_str(&polyline(&emp, "#d62728"));
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\
         <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\
         <line x1=\"{ml}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>\
         <line x1=\"{ml}\" y1=\"20\" x2=\"{ml}\" y2=\"{y0}\" stroke=\"black\"/>\
         <text x=\"{xm}\" y=\"{ylab}\" font-size=\"14\" text-anchor=\"middle\">alpha</text>\
         <text x=\"70\" y=\"30\" font-size=\"12\" fill=\"#1f77b4\">bound_paper</text>\
         <text x=\"70\" y=\"46\" font-size=\"12\" fill=\"#2ca02c\">bound_corrected</text>\
         <text x=\"70\" y=\"62\" font-size=\"12\" fill=\"#d62728\">empirical_max</text>\
         {body}</svg>",
        y0 = h - mb,
        x1 = w - 20.0,
        xm = (ml + w - 20.0) / 2.0,
        ylab = h - 10.0,
    )
}

fn cmd_scan(
    common: &CommonOpts,
    steps: Option<usize>,
    format: Option<String>,
    svg: Option<PathBuf>,
    samples: Option<usize>,
) -> ExitCode {
    let started = now();
    let (r, file) = match resolve_common(common) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let steps = match resolve(steps, &file, "steps", 101) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    if steps < 2 {
        return usage_error("steps must be >= 2");
    }
    let format = match resolve(format, &file, "format", "csv".to_string()) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    if format != "csv" && format != "json" {
        return usage_error("format must be csv or json");
    }
    let mut cfg = SearchConfig::new(r.class, r.alpha);
    cfg.seed = r.seed;
    cfg.mc_samples = match resolve(samples, &file, "samples", 10_000) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let rows = match alpha_scan(r.class, steps, &cfg) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    let body = if format == "csv" {
        scan_csv(&rows)
    } else {
        let doc = ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: "scan".to_string(),
            config: cfg,
            results: &rows,
            timestamps: Timestamps { started, finished: now() },
        };
        serde_json::to_string_pretty(&doc).expect("json")
    };
    if let Err(e) = emit(&r.out, &body) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_INTERNAL);
    }
    if let Some(path) = svg {
        if let Err(e) = std::fs::write(&path, scan_svg(&rows)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_INTERNAL);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_search(common: &CommonOpts, grid_c: Option<usize>) -> ExitCode {
    let started = now();
    let (r, file) = match resolve_common(common) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let mut cfg = SearchConfig::new(r.class, r.alpha);
    cfg.seed = r.seed;
    cfg.grid_c = match resolve(grid_c, &file, "grid-c", 201) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let report = match schwarz_box_maximize(&cfg) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    let doc = ReportDocument {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        command: "search".to_string(),
        config: cfg,
        results: &report,
        timestamps: Timestamps { started, finished: now() },
    };
    match emit(&r.out, &serde_json::to_string_pretty(&doc).expect("json")) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn cmd_hankel(coeffs: &PathBuf, q: usize, n: usize) -> ExitCode {
    if q < 1 || n < 1 {
        return usage_error("q and n must be >= 1");
    }
    let text = match std::fs::read_to_string(coeffs) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", coeffs.display())),
    };
    let pairs: Vec<[f64; 2]> = match serde_json::from_str(&text) {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("malformed coefficient file: {e}")),
    };
    // a0 = 0 implied; file lists a1, a2, ...
    let mut coeffs_c = vec![Complex64::new(0.0, 0.0)];
    coeffs_c.extend(pairs.iter().map(|p| Complex64::new(p[0], p[1])));
    let f = PowerSeries::new(coeffs_c);
    match hankel_determinant(&f, q, n) {
        Ok(d) => {
            println!(
                "{{\"re\": {:.12e}, \"im\": {:.12e}, \"abs\": {:.12e}}}",
                d.re,
                d.im,
                d.norm()
            );
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&format!("{e}; need order >= {}", n + 2 * q - 2)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Bound { common } => cmd_bound(common),
        Command::Verify { common, samples, atoms } => cmd_verify(common, *samples, *atoms),
        Command::Scan { common, steps, format, svg, samples } => {
            cmd_scan(common, *steps, format.clone(), svg.clone(), *samples)
        }
        Command::Search { common, grid_c } => cmd_search(common, *grid_c),
        Command::Hankel { coeffs, q, n } => cmd_hankel(coeffs, *q, *n),
    }
}
