use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wreath_fock::oracle::verify::{classes_report, delta_eig_report, group_report};
use wreath_fock::report::render_all;
use wreath_fock::{verify, Report, VerifyParams, DEFAULT_CAP, THEOREMS};

/// Exact checks of the Heisenberg and Virasoro identities on the
/// representation rings of wreath products, against brute-force group oracles.
#[derive(Parser, Debug)]
#[command(name = "wreath-fock", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest group order enumerated element by element
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    cap: usize,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Include wall-clock timings (reports are then no longer reproducible)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conjugacy classes and character table of a base group
    Group {
        #[arg(long, default_value = "trivial")]
        group: String,
    },
    /// Conjugacy types of Γ_n with sizes and centralizer orders
    Classes {
        #[arg(long, default_value = "trivial")]
        group: String,
        #[arg(long)]
        n: usize,
    },
    /// Check an identity (or `all`) over its parameter grid
    Verify {
        /// One of the identity names, or `all`
        #[arg(value_parser = theorem_name)]
        theorem: String,
        #[arg(long)]
        group: Option<String>,
        /// Check a single degree
        #[arg(long)]
        n: Option<usize>,
        /// Largest degree of the grid
        #[arg(long)]
        n_max: Option<usize>,
        /// Top degree of the Fock space windows
        #[arg(long)]
        window: Option<usize>,
    },
    /// Eigenvalues of the cubic operators on Schur functions
    DeltaEig {
        #[arg(long, default_value = "trivial")]
        group: String,
        #[arg(long)]
        n: usize,
    },
}

fn theorem_name(s: &str) -> Result<String, String> {
    if s == "all" || THEOREMS.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("expected `all` or one of: {}", THEOREMS.join(", ")))
    }
}

fn timed(timings: bool, f: impl FnOnce() -> wreath_fock::Result<Report>) -> wreath_fock::Result<Report> {
    let start = Instant::now();
    let mut report = f()?;
    if timings {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn run(cli: Cli) -> wreath_fock::Result<Vec<Report>> {
    let g = &cli.global;
    match cli.command {
        Command::Group { group } => Ok(vec![timed(g.timings, || group_report(&group))?]),
        Command::Classes { group, n } => Ok(vec![timed(g.timings, || classes_report(&group, n, g.cap))?]),
        Command::DeltaEig { group, n } => Ok(vec![timed(g.timings, || delta_eig_report(&group, n))?]),
        Command::Verify {
            theorem,
            group,
            n,
            n_max,
            window,
        } => {
            let params = VerifyParams {
                group,
                n,
                n_max,
                window,
                cap: g.cap,
            };
            let selected: Vec<&str> = if theorem == "all" { THEOREMS.to_vec() } else { vec![theorem.as_str()] };
            selected
                .into_iter()
                .map(|t| timed(g.timings, || verify(t, &params)))
                .collect()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let (format, out) = (cli.global.format, cli.global.out.clone());
    let reports = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = render_all(&reports, format == Format::Json);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if reports.iter().all(Report::all_pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
