use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gcover_cli::problem::parse_problem;
use gcover_cli::{run, CliError, Command, Options};

/// Inverse systems, integrals and minimal Gorenstein covers of Artin local
/// algebras.
///
/// Exit codes: 0 ok, 1 internal error, 2 parse error, 3 ideal not
/// m-primary, 4 Gorenstein input (gcl = 0), 5 Teter input given to mgc2
/// (gcl = 1).
#[derive(Parser)]
#[command(name = "gcover", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Length, Hilbert function, socle degree, type and embedding dimension.
    Profile(Common),
    /// A basis of the inverse system.
    Dual(Common),
    /// Adapted bases of the integrals of the inverse system.
    Integrate(Common),
    /// The Teter variety (covers of colength 1).
    Teter(Common),
    /// The variety of covers of colength 2.
    Mgc2(Common),
    /// Checks whether the `dualpoly` of the input gives a cover.
    CheckCover(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Problem file; standard input if omitted.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Number of integrations for `integrate`.
    #[arg(long, default_value_t = 1)]
    power: usize,
    /// Also print contraction matrices.
    #[arg(long)]
    matrices: bool,
    /// Sample and certify this many points on each side of the variety.
    #[arg(long, value_name = "N")]
    certify: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Give up on the inverse system beyond this degree.
    #[arg(long, value_name = "D")]
    degree_cap: Option<u32>,
    /// Include the elapsed time in the output.
    #[arg(long)]
    timing: bool,
}

fn execute(cmd: Command, c: &Common) -> Result<String, CliError> {
    let src = match &c.file {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let problem = parse_problem(&src)?;
    let opts = Options {
        power: c.power,
        matrices: c.matrices,
        certify: c.certify,
        seed: c.seed,
        degree_cap: c.degree_cap,
    };
    let t0 = Instant::now();
    let mut doc = run(cmd, &problem, &opts)?;
    if c.timing {
        doc.elapsed_ms = Some(t0.elapsed().as_millis() as u64);
    }
    Ok(match c.format {
        Format::Text => doc.to_text(),
        Format::Json => doc.to_json() + "\n",
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, common) = match &cli.command {
        Sub::Profile(c) => (Command::Profile, c),
        Sub::Dual(c) => (Command::Dual, c),
        Sub::Integrate(c) => (Command::Integrate, c),
        Sub::Teter(c) => (Command::Teter, c),
        Sub::Mgc2(c) => (Command::Mgc2, c),
        Sub::CheckCover(c) => (Command::CheckCover, c),
    };
    match execute(cmd, common) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gcover: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
