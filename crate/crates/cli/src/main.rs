//! `electroloc`: evaluate expressions, run identity manifests, conjugate into
//! accelerated frames and write golden snapshots.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use electroloc::expr::{parse, EvalConfig, Evaluator};
use electroloc::frames;
use electroloc::ncalg::RenderOptions;
use electroloc::scalars::{MonomialOrder, Rational};
use electroloc::suite::{
    default_manifest, diff_snapshots, golden_snapshot, run_suite, Manifest, SuiteConfig,
    DEFAULT_MANIFEST,
};
use electroloc::NCElement;

#[derive(Parser)]
#[command(
    name = "electroloc",
    version,
    about = "Exact algebra of the localized Dirac electron"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Md,
}

#[derive(clap::Args)]
struct RenderArgs {
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Print i g0 g1 g2 g3 as gamma5.
    #[arg(long)]
    gamma5_alias: bool,
    /// List monomials from the highest order down.
    #[arg(long)]
    descending: bool,
}

impl RenderArgs {
    fn options(&self) -> RenderOptions {
        RenderOptions {
            order: monomial_order(self.descending),
            gamma5_alias: self.gamma5_alias,
        }
    }

    fn render(&self, e: &NCElement) -> String {
        let opts = self.options();
        match self.format {
            Format::Plain => e.render_plain(&opts),
            Format::Latex => format!("{}\n", e.render_latex(&opts)),
            Format::Json => {
                let v = e.render_json(&opts);
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
            }
        }
    }
}

fn monomial_order(descending: bool) -> MonomialOrder {
    if descending {
        MonomialOrder::Descending
    } else {
        MonomialOrder::Ascending
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression to normal form.
    Eval {
        expr: String,
        /// Default order for `conj` without an inline order.
        #[arg(long, env = "ELECTROLOC_ORDER", default_value_t = 3)]
        order: u32,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Run an identity manifest; exits 0 iff every entry passes.
    Check {
        /// Manifest file; the built-in default when omitted.
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Truncation order for every series entry.
        #[arg(long, env = "ELECTROLOC_ORDER")]
        order: Option<u32>,
        /// Only entries with this tag.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value = "md")]
        format: ReportFormat,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Report zero wall times, for byte-stable output.
        #[arg(long)]
        no_timings: bool,
    },
    /// Transform an expression into the accelerated frame.
    Conjugate {
        expr: String,
        #[arg(long, env = "ELECTROLOC_ORDER")]
        order: u32,
        /// Rational values for alpha^0..alpha^3, e.g. `0,1/2,0,0`.
        #[arg(long, value_parser = parse_alpha, allow_hyphen_values = true)]
        alpha: Option<[Rational; 4]>,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Write normal-form renderings of expressions as golden files.
    Snapshot {
        /// Expressions to render, one file each.
        #[arg(required = true)]
        names: Vec<String>,
        /// Directory holding the snapshot files.
        #[arg(long)]
        out: PathBuf,
        /// List monomials from the highest order down.
        #[arg(long)]
        descending: bool,
        /// Compare with the files in `--out` instead of writing them.
        #[arg(long)]
        check: bool,
    },
    /// Print the built-in manifest.
    Manifest,
}

fn parse_alpha(s: &str) -> std::result::Result<[Rational; 4], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!(
            "expected 4 comma-separated rationals, got {}",
            parts.len()
        ));
    }
    let mut out = [Rational::from_integer(0); 4];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| format!("`{p}` is not a rational number"))?;
    }
    Ok(out)
}

fn evaluate(src: &str, order: u32) -> Result<NCElement> {
    let e = parse(src).with_context(|| format!("in `{src}`"))?;
    Ok(Evaluator::new(EvalConfig { order: Some(order) }).eval(&e)?)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Eval {
            expr,
            order,
            render,
        } => {
            print!("{}", render.render(&evaluate(&expr, order)?));
            Ok(true)
        }
        Command::Check {
            manifest,
            order,
            filter,
            format,
            jobs,
            no_timings,
        } => {
            let (name, m) = match manifest {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    let m =
                        Manifest::parse(&text).with_context(|| format!("in {}", path.display()))?;
                    (path.display().to_string(), m)
                }
                None => ("default".to_string(), default_manifest()?),
            };
            let config = SuiteConfig {
                order,
                filter,
                parallelism: jobs,
            };
            let mut report = run_suite(&name, &m, &config)?;
            if no_timings {
                report = report.without_timings();
            }
            match format {
                ReportFormat::Json => println!("{}", report.to_json()),
                ReportFormat::Md => print!("{}", report.to_markdown()),
            }
            if !report.all_passed() {
                eprintln!(
                    "{} of {} checks did not pass",
                    report.totals.total - report.totals.pass,
                    report.totals.total
                );
            }
            Ok(report.all_passed())
        }
        Command::Conjugate {
            expr,
            order,
            alpha,
            render,
        } => {
            let a = evaluate(&expr, order)?;
            let mut out = frames::conjugate(&a, order);
            if let Some(values) = alpha {
                out = out.substitute_alpha(&values);
            }
            print!("{}", render.render(&out));
            Ok(true)
        }
        Command::Snapshot {
            names,
            out,
            descending,
            check,
        } => {
            let opts = RenderOptions {
                order: monomial_order(descending),
                ..RenderOptions::default()
            };
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            if check {
                let differing = diff_snapshots(&names, &out, &opts)?;
                for d in &differing {
                    println!("differs: {d}");
                }
                return Ok(differing.is_empty());
            } else {
                for path in golden_snapshot(&names, &out, &opts)? {
                    println!("{}", path.display());
                }
            }
            Ok(true)
        }
        Command::Manifest => {
            print!("{DEFAULT_MANIFEST}");
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
