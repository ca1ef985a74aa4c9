//! Command-line front end for the embedding-bound engines.
//!
//! Exit codes: 0 success, 2 verification failure, 3 inconclusive at the
//! precision cap, 4 usage or domain error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use linbound::exactmath::DEFAULT_PRECISION;
use linbound::oracles::{
    gl_max_even_order_exhaustive, landau_constrained_exact, PartitionConstraint,
};
use linbound::report::{analyze, preset, EmbeddingReport, EngineId, PRESETS};
use linbound::verify::{run_suite, SuiteReport, SuiteSelection};
use linbound::{Error, GroupKind};

const EXIT_VERIFICATION_FAILURE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_USAGE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "linbound",
    about = "Certified lower bounds on the dimension needed to linearly embed Alt(F2^n) / Sym(F2^n)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Alt,
    Sym,
}

impl From<GroupArg> for GroupKind {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Alt => GroupKind::Alt,
            GroupArg::Sym => GroupKind::Sym,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Lemma31,
    Thm43,
    Oracles,
}

impl From<SuiteArg> for SuiteSelection {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => SuiteSelection::All,
            SuiteArg::Lemma31 => SuiteSelection::Lemma31,
            SuiteArg::Thm43 => SuiteSelection::Thm43,
            SuiteArg::Oracles => SuiteSelection::Oracles,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the bound engines for a block width and group kind.
    Analyze(AnalyzeArgs),
    /// Run the verification suite (engine-versus-oracle cross checks).
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Brute-force oracles, exposed directly.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Show a cipher preset (block width, group, provenance).
    Preset {
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Block width n in bits (the group acts on F2^n); at least 7.
    #[arg(long)]
    block_bits: u32,
    /// Group generated by the round functions.
    #[arg(long, value_enum)]
    group: GroupArg,
    /// Engines to run (comma separated): elementary, stirling,
    /// order-analytic, order-constructive.
    #[arg(long, value_delimiter = ',')]
    engines: Vec<String>,
    /// Starting fractional precision for certified enclosures.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exhaustive maximum even element order of GL(N, 2), N <= 5.
    GlMaxOrder {
        #[arg(long)]
        dim: u32,
    },
    /// Exhaustive constrained-Landau maximum over partitions, points <= 80.
    Landau {
        #[arg(long)]
        points: u32,
        #[arg(long)]
        even_parity: bool,
        #[arg(long)]
        even_order: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep clap's rendering but own the exit code
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };

    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Inconclusive { .. } => ExitCode::from(EXIT_INCONCLUSIVE),
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}

fn run(cli: Cli) -> linbound::Result<ExitCode> {
    match cli.command {
        Command::Analyze(args) => {
            let engines = if args.engines.is_empty() {
                EngineId::default_set()
            } else {
                args.engines
                    .iter()
                    .map(|s| EngineId::parse(s))
                    .collect::<linbound::Result<Vec<_>>>()?
            };
            let report = analyze(args.block_bits, args.group.into(), &engines, args.precision)?;
            match args.format {
                Format::Json => println!("{}", to_json(&report)),
                Format::Text => print_report(&report),
            }
            // an engine that hit the precision cap makes the invocation
            // inconclusive
            if report
                .engines
                .values()
                .any(|o| matches!(&o.error, Some(e) if e.contains("inconclusive")))
            {
                return Ok(ExitCode::from(EXIT_INCONCLUSIVE));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, format } => {
            let report = run_suite(suite.into());
            match format {
                Format::Json => println!("{}", to_json(&report)),
                Format::Text => print_suite(&report),
            }
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFICATION_FAILURE))
            }
        }
        Command::Oracle { which } => {
            match which {
                OracleCommand::GlMaxOrder { dim } => {
                    let max = gl_max_even_order_exhaustive(dim)?;
                    println!("GL({dim},2) maximum even element order: {max}");
                    if dim >= 4 {
                        let formula = linbound::element_orders::darafsheh_max_even_order(dim)?;
                        println!("closed form 2^(N-1)-2:               {formula}");
                    }
                }
                OracleCommand::Landau {
                    points,
                    even_parity,
                    even_order,
                } => {
                    let constraint = PartitionConstraint {
                        require_even_parity: even_parity,
                        require_even_order: even_order,
                    };
                    let max = landau_constrained_exact(points, constraint)?;
                    println!(
                        "maximum order on {points} points (even parity: {even_parity}, even order: {even_order}): {max}"
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Preset { name, format } => {
            let p = preset(&name)?;
            match format {
                Format::Json => println!("{}", to_json(p)),
                Format::Text => {
                    println!(
                        "{}: {} bits, group {}",
                        p.name,
                        p.block_bits,
                        p.group.as_str()
                    );
                    println!("  {}", p.provenance);
                    println!(
                        "  run: linbound analyze --block-bits {} --group {}",
                        p.block_bits,
                        p.group.as_str()
                    );
                    println!(
                        "  all presets: {}",
                        PRESETS
                            .iter()
                            .map(|p| p.name)
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization is infallible")
}

fn print_report(report: &EmbeddingReport) {
    println!(
        "block width {} bits, group {}, precision {} fractional bits",
        report.block_bits, report.group, report.precision_bits
    );
    for (name, outcome) in &report.engines {
        match (&outcome.m_min, &outcome.error) {
            (Some(m), _) => println!(
                "  engine {name:<18} m_min = {m}   ({} dimensions ruled out)",
                outcome.evidence.len()
            ),
            (None, Some(e)) => println!("  engine {name:<18} error: {e}"),
            (None, None) => println!("  engine {name:<18} produced no result"),
        }
    }
    match report.m_final {
        Some(m) => println!("combined: m_final = {m}  (dim W >= 2^{m})"),
        None => println!("combined: no certified bound"),
    }
    println!("{}", report.verdict);
    for note in &report.notes {
        println!("note: {note}");
    }
}

fn print_suite(report: &SuiteReport) {
    for check in &report.checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        println!("{status}  {:<40} {}", check.name, check.detail);
    }
    let failed = report.failures().count();
    if failed == 0 {
        println!("all {} checks passed", report.checks.len());
    } else {
        println!("{failed} of {} checks FAILED", report.checks.len());
    }
}
