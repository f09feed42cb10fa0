//! Command-line front end: bounds reports, table reproduction, construction
//! export, verification runs, and SVG rendering.
//!
//! Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
//! 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tricircle::calculus::{total_count, Circle, TripartiteSpec};
use tricircle::closed_forms::{best_bounds, upper_general, BoundsReport};
use tricircle::constructions::{
    k22n_construction, k22n_green_count, k22n_red_count, k22n_total, linear_labels,
    linear_stripe_model,
};
use tricircle::render::{render_k22n, render_linear};
use tricircle::stripes::stripe_oracle;
use tricircle::verifiers::{self as verifiers, VerificationReport, BALANCED_TABLE};

#[derive(Parser)]
#[command(
    name = "tricircle",
    version,
    about = "Bounds, constructions, and exhaustive verification for tripartite-circle crossing numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Best lower and upper bounds for K_{m,n,p}, with all candidate producers
    Bounds {
        m: u32,
        n: u32,
        p: u32,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the balanced bounds table for 2 <= n <= max-n
    Table {
        #[arg(long = "max-n", default_value_t = 10)]
        max_n: u32,
        /// Emit CSV (empty cells where the table is blank)
        #[arg(long)]
        csv: bool,
    },
    /// Print a construction's labels and crossing counts, optionally as SVG
    Construct {
        kind: ConstructKind,
        /// Part sizes: three for `linear`, one for `k22n`
        sizes: Vec<u32>,
        /// Write an SVG rendering to this path
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Print every label family in full
        #[arg(long)]
        labels: bool,
        /// Dump the stripe model as JSON (linear only, for debugging)
        #[arg(long)]
        stripes: bool,
        #[arg(long, default_value_t = 640)]
        width: u32,
        #[arg(long, default_value_t = 640)]
        height: u32,
    },
    /// Run a named exhaustive verifier; exits 0 iff it passes
    Verify {
        target: VerifyArg,
        /// Circle size (three-terms, mixed, ys, k22n-lb, hh)
        #[arg(long)]
        n: Option<u32>,
        /// Sweep limit (fmin, table, construction)
        #[arg(long = "max-n")]
        max_n: Option<u32>,
        /// First family size (bichromatic)
        #[arg(long)]
        a: Option<u32>,
        /// Second family size (bichromatic)
        #[arg(long)]
        b: Option<u32>,
        /// Shared circle size (bichromatic)
        #[arg(long)]
        c: Option<u32>,
        /// Lift the n <= 10 cap on the k22n-lb sweep
        #[arg(long)]
        allow_large: bool,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Compare the stripe-oracle recount with the formula count (sizes <= 8)
    Oracle { m: u32, n: u32, p: u32 },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    Linear,
    K22n,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyArg {
    Fmin,
    #[value(name = "three-terms")]
    ThreeTerms,
    Mixed,
    Ys,
    #[value(name = "k22n-lb")]
    K22nLb,
    Bichromatic,
    Construction,
    Table,
    Hh,
}

enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<tricircle::Error> for CliError {
    fn from(e: tricircle::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_workers();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("I/O error: {e}");
            ExitCode::from(3)
        }
    }
}

/// Worker count for parallel sweeps; defaults to available parallelism.
fn init_workers() {
    if let Ok(v) = std::env::var("TRICIRCLE_WORKERS") {
        if let Ok(threads) = v.parse::<usize>() {
            if threads > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Bounds { m, n, p, json } => cmd_bounds(m, n, p, json),
        Command::Table { max_n, csv } => cmd_table(max_n, csv),
        Command::Construct {
            kind,
            sizes,
            svg,
            labels,
            stripes,
            width,
            height,
        } => cmd_construct(kind, &sizes, svg, labels, stripes, width, height),
        Command::Verify {
            target,
            n,
            max_n,
            a,
            b,
            c,
            allow_large,
            json,
        } => cmd_verify(target, n, max_n, a, b, c, allow_large, json),
        Command::Oracle { m, n, p } => cmd_oracle(m, n, p),
    }
}

fn cmd_bounds(m: u32, n: u32, p: u32, json: bool) -> Result<u8, CliError> {
    let spec = TripartiteSpec::new(m, n, p)?;
    let report = best_bounds(&spec);
    if json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("serializable report")
        );
    } else {
        print_bounds(&report);
    }
    Ok(0)
}

fn print_bounds(report: &BoundsReport) {
    println!(
        "{}: lower {} ({}), upper {} ({})",
        report.spec,
        report.lower.value,
        method_name(&report.lower.method),
        report.upper.value,
        method_name(&report.upper.method),
    );
    let lower: Vec<String> = report
        .lower
        .candidates
        .iter()
        .map(|c| format!("{}={}", method_name(&c.method), c.value))
        .collect();
    println!("  lower candidates: {}", lower.join(" "));
    let upper: Vec<String> = report
        .upper
        .candidates
        .iter()
        .map(|c| format!("{}={}", method_name(&c.method), c.value))
        .collect();
    println!("  upper candidates: {}", upper.join(" "));
}

fn method_name<M: serde::Serialize>(m: &M) -> String {
    serde_json::to_value(m)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

fn cmd_table(max_n: u32, csv: bool) -> Result<u8, CliError> {
    if !(2..=10).contains(&max_n) {
        return Err(CliError::Usage(format!(
            "--max-n must be between 2 and 10, got {max_n}"
        )));
    }
    let cell = |v: Option<u64>, empty: &str| match v {
        Some(x) => x.to_string(),
        None => empty.to_string(),
    };
    if csv {
        println!("n,lower,improved_lower,improved_upper,upper");
        for &(n, lo, ilo, iup, up) in BALANCED_TABLE.iter().take_while(|row| row.0 <= max_n) {
            println!(
                "{n},{},{},{},{}",
                cell(lo, ""),
                cell(ilo, ""),
                cell(iup, ""),
                cell(up, "")
            );
        }
    } else {
        println!(
            "{:>3} {:>7} {:>15} {:>15} {:>7}",
            "n", "lower", "improved-lower", "improved-upper", "upper"
        );
        for &(n, lo, ilo, iup, up) in BALANCED_TABLE.iter().take_while(|row| row.0 <= max_n) {
            println!(
                "{n:>3} {:>7} {:>15} {:>15} {:>7}",
                cell(lo, "-"),
                cell(ilo, "-"),
                cell(iup, "-"),
                cell(up, "-")
            );
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    kind: ConstructKind,
    sizes: &[u32],
    svg: Option<PathBuf>,
    labels: bool,
    stripes: bool,
    width: u32,
    height: u32,
) -> Result<u8, CliError> {
    match kind {
        ConstructKind::Linear => {
            let [m, n, p]: [u32; 3] = sizes.try_into().map_err(|_| {
                CliError::Usage("`construct linear` takes exactly three sizes".to_string())
            })?;
            let spec = TripartiteSpec::new(m, n, p)?;
            let drawing = linear_labels(&spec);
            let bd = total_count(&drawing);
            println!("linear construction for {spec}");
            println!("  total {} = mono {:?} + bi {:?}", bd.total, bd.mono, bd.bi);
            if labels {
                for a in Circle::ALL {
                    let x = drawing.x(a);
                    println!("  x {}->{}: {:?}", a.name(), a.next().name(), x.values());
                }
                for s in Circle::ALL {
                    for t in Circle::ALL {
                        if s != t {
                            println!(
                                "  y {}->{}: {:?}",
                                s.name(),
                                t.name(),
                                drawing.y(s, t).values()
                            );
                        }
                    }
                }
            }
            if stripes {
                let model = linear_stripe_model(&spec);
                println!(
                    "{}",
                    serde_json::to_string(&model).expect("serializable model")
                );
            }
            if let Some(path) = svg {
                std::fs::write(&path, render_linear(&spec, width, height)).map_err(CliError::Io)?;
                println!("  wrote {}", path.display());
            }
        }
        ConstructKind::K22n => {
            let [n]: [u32; 1] = sizes.try_into().map_err(|_| {
                CliError::Usage("`construct k22n` takes exactly one size".to_string())
            })?;
            if stripes {
                return Err(CliError::Usage(
                    "--stripes applies to the linear construction only".to_string(),
                ));
            }
            let d = k22n_construction(n)?;
            let (x, y) = (d.x(), d.y());
            println!("K_{{2,2,{n}}} construction (type {})", d.drawing_type());
            println!(
                "  x = ({}, {}, {}, {})  y = ({}, {}, {}, {})",
                x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]
            );
            if labels {
                for (i, (xv, yv)) in x.iter().zip(y.iter()).enumerate() {
                    println!("  vertex {}: x{} = {xv}, y{} = {yv}", i + 1, i + 1, i + 1);
                }
            }
            println!(
                "  red {} + green {} = total {}",
                k22n_red_count(&d),
                k22n_green_count(&d),
                k22n_total(&d)
            );
            if let Some(path) = svg {
                std::fs::write(&path, render_k22n(n, width, height)?).map_err(CliError::Io)?;
                println!("  wrote {}", path.display());
            }
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    target: VerifyArg,
    n: Option<u32>,
    max_n: Option<u32>,
    a: Option<u32>,
    b: Option<u32>,
    c: Option<u32>,
    allow_large: bool,
    json: bool,
) -> Result<u8, CliError> {
    let need_n =
        |what: &str| n.ok_or_else(|| CliError::Usage(format!("`verify {what}` requires --n")));
    let report = match target {
        VerifyArg::Fmin => verifiers::verify_fmin(max_n.unwrap_or(100))?,
        VerifyArg::ThreeTerms => verifiers::verify_three_terms(need_n("three-terms")?)?,
        VerifyArg::Mixed => verifiers::verify_mixed(need_n("mixed")?)?,
        VerifyArg::Ys => verifiers::verify_ys(need_n("ys")?)?,
        VerifyArg::K22nLb => {
            let n = need_n("k22n-lb")?;
            if n > 10 && allow_large {
                let states = 4u128 * (n as u128).pow(8);
                eprintln!(
                    "warning: sweeping {states} states; expect roughly {} s per core at 10^8 states/s",
                    states / 100_000_000
                );
            }
            verifiers::verify_k22n_lower(n, allow_large)?
        }
        VerifyArg::Bichromatic => {
            let (a, b, c) = match (a, b, c) {
                (Some(a), Some(b), Some(c)) => (a, b, c),
                _ => {
                    return Err(CliError::Usage(
                        "`verify bichromatic` requires --a, --b and --c".to_string(),
                    ))
                }
            };
            verifiers::verify_bichromatic_min(a, b, c)?
        }
        VerifyArg::Construction => verifiers::verify_construction(max_n.unwrap_or(6))?,
        VerifyArg::Table => verifiers::verify_table(max_n.unwrap_or(10))?,
        VerifyArg::Hh => verifiers::verify_hh(need_n("hh")?)?,
    };
    if json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("serializable report")
        );
    } else {
        print_report(&report);
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn print_report(report: &VerificationReport) {
    let params: Vec<String> = report
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    println!(
        "{} [{}]: {} ({} cases in {:.1} ms)",
        method_name(&report.target),
        params.join(", "),
        if report.passed() { "pass" } else { "FAIL" },
        report.checked_count,
        report.elapsed_micros as f64 / 1000.0
    );
    for (k, v) in &report.stats {
        println!("  {k} = {v}");
    }
    if let Some(w) = &report.witness {
        println!("  witness = {w:?}");
    }
    if let Some(note) = &report.note {
        println!("  note: {note}");
    }
    if let Some(ce) = &report.counterexample {
        println!("  counterexample {:?}: {}", ce.tuple, ce.detail);
    }
}

fn cmd_oracle(m: u32, n: u32, p: u32) -> Result<u8, CliError> {
    if !(1..=8).contains(&m) || !(1..=8).contains(&n) || !(1..=8).contains(&p) {
        return Err(CliError::Usage(format!(
            "oracle sizes must be between 1 and 8, got ({m}, {n}, {p})"
        )));
    }
    let spec = TripartiteSpec::new(m, n, p)?;
    let oracle = stripe_oracle(&linear_stripe_model(&spec))?;
    let formula = upper_general(&spec);
    let agree = oracle == formula;
    println!(
        "{spec}: stripe oracle {oracle}, formula {formula} -> {}",
        if agree { "agree" } else { "DISAGREE" }
    );
    Ok(if agree { 0 } else { 1 })
}
