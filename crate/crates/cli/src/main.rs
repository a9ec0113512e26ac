use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rainbowtri::{
    cmd_ar, cmd_construct, cmd_decompose, cmd_gen, cmd_rb, cmd_turan, cmd_verify, CliResult, ConstructKind,
    RunConfig, SearchReport, Suite,
};

#[derive(Parser)]
#[command(name = "rainbowtri", version, about = "Rainbow matchings in plane triangulations")]
struct Cli {
    /// Directory for reports.jsonl and witness files (RAINBOWTRI_OUT overrides).
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,

    /// Wall-clock budget for the whole command, in seconds.
    #[arg(long, global = true, default_value_t = 3600.0)]
    budget_secs: f64,

    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Seed for the sampling in verification suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one graph6 line per triangulation of order n.
    Gen {
        #[arg(long)]
        n: usize,
    },
    /// Rainbow number rb(T_n, M_t) by exhaustive search.
    Rb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Anti-Ramsey value ar(G, M_t) of the graph in a graph6 file.
    Ar {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Planar Turán number ex_P(n, M_t).
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Build an extremal graph or lower-bound coloring.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum)]
        kind: ConstructKind,
    },
    /// Gallai-Edmonds decomposition of the graph in a graph6 file.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

fn print_report(report: &SearchReport) {
    println!("{}", report.to_json_line());
}

fn run(cli: Cli) -> CliResult<i32> {
    let out_dir = RunConfig::resolve_out_dir(cli.out_dir);
    let config = RunConfig::new(out_dir, cli.budget_secs, cli.workers, cli.seed)?;
    let report = match cli.command {
        Command::Gen { n } => cmd_gen(&config, n)?,
        Command::Rb { n, t } => cmd_rb(&config, n, t)?,
        Command::Ar { graph, t } => cmd_ar(&config, &graph, t)?,
        Command::Turan { n, t } => cmd_turan(&config, n, t)?,
        Command::Construct { n, t, kind } => cmd_construct(&config, n, t, kind)?,
        Command::Decompose { graph } => cmd_decompose(&config, &graph)?,
        Command::Verify { suite } => {
            let (report, checks) = cmd_verify(&config, suite)?;
            for c in &checks {
                println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            report
        }
    };
    print_report(&report);
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
