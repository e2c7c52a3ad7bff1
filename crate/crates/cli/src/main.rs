//! `polyrec` command-line front end: JSON in, JSON out.

mod commands;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "polyrec", version, about = "Recurrent Laurent polynomial sequences and their Newton polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Generate terms from {"vars","coeffs","init"}
    Gen,
    /// Newton polytopes of a polynomial or a list of polynomials
    Newton,
    /// Fit a polygon model (list of polytopes) or a quasi-polynomial (list of rationals)
    Fit,
    /// Zero pattern of a list of rationals
    Zeros,
    /// Guess a recurrence for a list of polynomials
    Guess,
    /// Power-substitution resultants from {"P","Q"}
    Eliminate,
    /// Trace sequence and characteristic recurrence from {"A","B"}
    Trace,
    /// Slope fan of a characteristic polynomial in (z, x1, x2), or spectra with --omega
    Fan,
    /// Shear a list of polygons
    Shear,
    /// Lattice point count and area of a polytope or a list of polytopes
    Count,
    /// gen, newton, fit and slope comparison in one bundle
    Report,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Input file, inline JSON, or "-" for stdin (default)
    #[arg(long, global = true)]
    input: Option<String>,
    /// Output file (default stdout)
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    n_max: Option<usize>,
    #[arg(long, global = true)]
    m_max: Option<usize>,
    #[arg(long, global = true)]
    deg_max: Option<usize>,
    /// Maximal recurrence order for guess and eliminate
    #[arg(long, global = true)]
    order_max: Option<usize>,
    #[arg(long, global = true)]
    prefix_budget: Option<usize>,
    /// Comma-separated integer direction
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    omega: Option<Vec<i64>>,
    /// Shear parameter
    #[arg(long, global = true, allow_hyphen_values = true)]
    f: Option<i64>,
    /// Seed for a random instance when gen or report has no input
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Exit with status 4 when a search finds nothing
    #[arg(long, global = true)]
    strict: bool,
    /// Write an SVG of the polygon sequence
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
}

fn read_input(opts: &Opts, allow_missing: bool) -> Result<Option<serde_json::Value>, CliError> {
    let text = match opts.input.as_deref() {
        None if allow_missing => return Ok(None),
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(e.to_string()))?;
            s
        }
        Some(s) if s.trim_start().starts_with(['{', '[']) => s.to_string(),
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?,
    };
    serde_json::from_str(&text).map(Some).map_err(|e| CliError::Schema(e.to_string()))
}

fn write_output(opts: &Opts, out: &Outcome) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(&out.value).map_err(|e| CliError::Io(e.to_string()))?;
    text.push('\n');
    match &opts.output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?,
    }
    if let (Some(path), Some(svg)) = (&opts.svg, &out.svg) {
        std::fs::write(path, svg).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let seeded = cli.opts.seed.is_some() && matches!(cli.command, Command::Gen | Command::Report);
    let input = read_input(&cli.opts, seeded)?;
    let o = &cli.opts;
    match cli.command {
        Command::Gen => commands::gen(input, o),
        Command::Newton => commands::newton(input.unwrap()),
        Command::Fit => commands::fit(input.unwrap(), o),
        Command::Zeros => commands::zeros(input.unwrap(), o),
        Command::Guess => commands::guess(input.unwrap(), o),
        Command::Eliminate => commands::eliminate(input.unwrap(), o),
        Command::Trace => commands::trace(input.unwrap(), o),
        Command::Fan => commands::fan(input.unwrap(), o),
        Command::Shear => commands::shear(input.unwrap(), o),
        Command::Count => commands::count(input.unwrap()),
        Command::Report => commands::report(input, o),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("POLYREC_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        polyrec::par::init_threads(n);
    }
    let result = run(&cli).and_then(|out| {
        write_output(&cli.opts, &out)?;
        Ok(out.found)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) if cli.opts.strict => {
            eprintln!("polyrec: not found");
            ExitCode::from(4)
        }
        Ok(false) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("polyrec: {e}");
            ExitCode::from(e.code())
        }
    }
}
