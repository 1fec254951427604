//! Command-line front end: verification suites, ad-hoc weight and orbit
//! queries, kernel-dimension checks and the bracket table.

use clap::{Args, Parser, Subcommand};
use discrete_clifford::clifford::{enumerate_specs, IdempotentSpec};
use discrete_clifford::error::Error;
use discrete_clifford::lie::{classify_spec, spinor_orbit, WeightContext};
use discrete_clifford::poly::monogenic_generator;
use discrete_clifford::suites::catalog::default_params;
use discrete_clifford::suites::orbits::OrbitJson;
use discrete_clifford::suites::{run_all, run_suite, suite_names, SuiteParams, SuiteReport};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dclif",
    about = "Exact verification engine for split discrete Clifford analysis",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite by name, or "all" for the whole catalog
    Verify {
        /// Suite name or "all"
        suite: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Weight and classification of an idempotent (or all of them)
    Weights {
        #[command(flatten)]
        opts: CommonOpts,
        /// Idempotent spec such as "L+ L- M+ L+"
        #[arg(long, conflicts_with = "enumerate")]
        spec: Option<String>,
        /// Enumerate all 4^m specs with weights and classes
        #[arg(long)]
        enumerate: bool,
    },
    /// Count the qualifying idempotents of each extreme weight
    HwvCount {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Orbit closure of an idempotent under the rotation generators
    SpinorOrbit {
        #[command(flatten)]
        opts: CommonOpts,
        /// Starting idempotent spec
        #[arg(long)]
        start: String,
    },
    /// Exact kernel dimensions against the closed-form counts
    Dims {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Evaluate the Cartan-basis bracket table extensionally
    BracketTable {
        #[command(flatten)]
        opts: CommonOpts,
    },
}

#[derive(Args)]
struct CommonOpts {
    /// Dimension (number of coordinates)
    #[arg(long)]
    m: Option<usize>,
    /// Homogeneity degree
    #[arg(long)]
    k: Option<usize>,
    /// Basis degree cap for extensional sweeps
    #[arg(long = "max-degree")]
    max_degree: Option<usize>,
    /// Sweep mode: exhaustive or sample
    #[arg(long)]
    mode: Option<String>,
    /// Subset size in sample mode
    #[arg(long = "sample-size")]
    sample_size: Option<usize>,
    /// Seed of the deterministic sampling sequence
    #[arg(long)]
    seed: Option<u64>,
    /// Output format: text, json or dot (dot only for spinor-orbit)
    #[arg(long, default_value = "text")]
    out: String,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

impl CommonOpts {
    fn params(&self, base: SuiteParams) -> Result<SuiteParams, Error> {
        let mut p = base;
        if let Some(m) = self.m {
            if m < 2 {
                return Err(Error::usage("m must be at least 2".to_string()));
            }
            p.m = Some(m);
        }
        if let Some(k) = self.k {
            p.k = Some(k);
        }
        if let Some(d) = self.max_degree {
            p.max_degree = Some(d);
        }
        if let Some(mode) = &self.mode {
            p.mode = mode.parse()?;
        }
        if let Some(s) = self.sample_size {
            p.sample_size = s;
        }
        if let Some(s) = self.seed {
            p.seed = s;
        }
        Ok(p)
    }

    fn emit(&self, text: String) -> Result<(), Error> {
        match &self.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Error::usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                if text.ends_with('\n') {
                    print!("{text}");
                } else {
                    println!("{text}");
                }
                Ok(())
            }
        }
    }

    fn check_format(&self, allowed: &[&str]) -> Result<(), Error> {
        if !allowed.contains(&self.out.as_str()) {
            return Err(Error::usage(format!(
                "output format {:?} not supported here; expected one of {allowed:?}",
                self.out
            )));
        }
        Ok(())
    }
}

fn report_exit(report: &SuiteReport) -> u8 {
    if report.all_pass() {
        0
    } else {
        1
    }
}

fn emit_report(opts: &CommonOpts, report: &SuiteReport) -> Result<u8, Error> {
    opts.check_format(&["text", "json"])?;
    let text = match opts.out.as_str() {
        "json" => report.to_json(),
        _ => report.to_text(),
    };
    opts.emit(text)?;
    Ok(report_exit(report))
}

#[derive(Serialize)]
struct WeightLine {
    spec: String,
    k: usize,
    weight: Vec<String>,
    class: String,
}

fn weight_line(
    ctx: &WeightContext,
    spec: &IdempotentSpec,
    k: usize,
) -> Result<WeightLine, Error> {
    let m = spec.len();
    let f = monogenic_generator(k, m).right_mul(&spec.realize());
    let w = ctx.weight_of(&f)?;
    Ok(WeightLine {
        spec: spec.to_string(),
        k,
        weight: w.to_strings(),
        class: classify_spec(spec, k).to_string(),
    })
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Verify { suite, opts } => {
            if suite == "all" {
                opts.check_format(&["text", "json"])?;
                let seed = opts.seed.unwrap_or(SuiteParams::default().seed);
                let all = run_all(seed)?;
                let text = match opts.out.as_str() {
                    "json" => all.to_json(),
                    _ => all.to_text(),
                };
                opts.emit(text)?;
                return Ok(if all.all_pass() { 0 } else { 1 });
            }
            if !suite_names().contains(&suite.as_str()) {
                return Err(Error::usage(format!(
                    "unknown suite {suite:?}; known: all, {}",
                    suite_names().join(", ")
                )));
            }
            let params = opts.params(default_params(&suite))?;
            let report = run_suite(&suite, &params)?;
            emit_report(&opts, &report)
        }
        Command::Weights {
            opts,
            spec,
            enumerate,
        } => {
            opts.check_format(&["text", "json"])?;
            let k = opts.k.unwrap_or(0);
            let lines: Vec<WeightLine> = if enumerate {
                let m = opts.m.ok_or_else(|| {
                    Error::usage("--enumerate requires --m".to_string())
                })?;
                let ctx = WeightContext::new(m)?;
                enumerate_specs(m)
                    .map(|s| weight_line(&ctx, &s, k))
                    .collect::<Result<_, _>>()?
            } else {
                let text = spec.ok_or_else(|| {
                    Error::usage("weights needs --spec or --enumerate".to_string())
                })?;
                let spec = IdempotentSpec::parse(&text)?;
                if let Some(m) = opts.m {
                    if m != spec.len() {
                        return Err(Error::usage(format!(
                            "spec has {} factors but --m is {m}",
                            spec.len()
                        )));
                    }
                }
                let ctx = WeightContext::new(spec.len())?;
                vec![weight_line(&ctx, &spec, k)?]
            };
            let text = match opts.out.as_str() {
                "json" => serde_json::to_string_pretty(&lines).expect("serializes"),
                _ if lines.len() == 1 => format!("({})", lines[0].weight.join(", ")),
                _ => lines
                    .iter()
                    .map(|l| {
                        format!("{}  ({})  {}", l.spec, l.weight.join(", "), l.class)
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            opts.emit(text)?;
            Ok(0)
        }
        Command::HwvCount { opts } => {
            opts.check_format(&["text", "json"])?;
            let m = opts.m.unwrap_or(4);
            if !(2..=7).contains(&m) {
                return Err(Error::usage(format!("hwv-count supports 2 <= m <= 7, got {m}")));
            }
            let k = opts.k.unwrap_or(0);
            let (plus, minus) = discrete_clifford::lie::hwv_count(m, k);
            #[derive(Serialize)]
            struct Counts {
                m: usize,
                k: usize,
                plus: usize,
                minus: usize,
            }
            let text = match opts.out.as_str() {
                "json" => serde_json::to_string_pretty(&Counts { m, k, plus, minus })
                    .expect("serializes"),
                _ => format!("({plus}, {minus})"),
            };
            opts.emit(text)?;
            Ok(0)
        }
        Command::SpinorOrbit { opts, start } => {
            opts.check_format(&["text", "json", "dot"])?;
            let start = IdempotentSpec::parse(&start)?;
            if let Some(m) = opts.m {
                if m != start.len() {
                    return Err(Error::usage(format!(
                        "start spec has {} factors but --m is {m}",
                        start.len()
                    )));
                }
            }
            let report = spinor_orbit(&start)?;
            let text = match opts.out.as_str() {
                "dot" => report.to_dot(),
                "json" => serde_json::to_string_pretty(&OrbitJson::from_report(&report))
                    .expect("serializes"),
                _ => {
                    let mut out = format!(
                        "orbit of {} (dimension {})\n",
                        report.start,
                        report.dimension()
                    );
                    for v in &report.vectors {
                        let name = match &v.spec {
                            Some(s) => s.to_string(),
                            None => format!("<unidentified: {}>", v.mv),
                        };
                        out.push_str(&format!("  {name}  weight {}\n", v.weight));
                    }
                    out
                }
            };
            opts.emit(text)?;
            Ok(0)
        }
        Command::Dims { opts } => {
            let params = opts.params(default_params("dims"))?;
            let report = run_suite("dims", &params)?;
            emit_report(&opts, &report)
        }
        Command::BracketTable { opts } => {
            opts.check_format(&["text", "json"])?;
            let m = opts.m.unwrap_or(4);
            let mut params = opts.params(SuiteParams::default())?;
            params.m = Some(m);
            if params.max_degree.is_none() {
                // the table is operator-level; a slim basis keeps this quick
                params.max_degree = Some(2);
            }
            let reports: Vec<SuiteReport> = if m % 2 == 0 {
                vec![run_suite("lemma1", &params)?]
            } else {
                vec![run_suite("lemma5", &params)?, run_suite("lemma6", &params)?]
            };
            let all_pass = reports.iter().all(|r| r.all_pass());
            let text = match opts.out.as_str() {
                "json" => serde_json::to_string_pretty(&reports).expect("serializes"),
                _ => reports
                    .iter()
                    .map(|r| r.to_text())
                    .collect::<Vec<_>>()
                    .join(""),
            };
            opts.emit(text)?;
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
