use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod input;

use commands::Report;
use input::{load, Input};

#[derive(Parser)]
#[command(name = "ufi", version, about = "Uniform face ideals of coloured simplicial complexes")]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug, Default)]
pub struct Options {
    /// Print a JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Accept colourings with empty classes
    #[arg(long, global = true)]
    pub allow_empty_classes: bool,
    #[arg(long, global = true, value_name = "N")]
    pub max_vertices: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    pub max_faces: Option<usize>,
    /// Generator bound for the brute-force oracles
    #[arg(long, global = true, value_name = "N")]
    pub max_oracle_generators: Option<usize>,
    /// Variable bound for the homology oracle
    #[arg(long, global = true, value_name = "N")]
    pub max_oracle_variables: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    pub max_power: Option<usize>,
}

impl Options {
    pub fn limits(&self) -> ufi::Limits {
        let mut l = ufi::Limits::default();
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut l.max_vertices, self.max_vertices);
        set(&mut l.max_faces, self.max_faces);
        set(&mut l.max_oracle_generators, self.max_oracle_generators);
        set(&mut l.max_oracle_variables, self.max_oracle_variables);
        set(&mut l.max_power, self.max_power);
        l
    }
}

/// Every command reads one input: a path, `-` for standard input, or inline JSON.
#[derive(Subcommand)]
enum Command {
    /// Properness and nestedness of the colouring
    Check { input: String },
    /// Chromatic and nested chromatic numbers
    Chromatic { input: String },
    /// Minimal generators of the uniform face ideal
    Ideal {
        input: String,
        /// Show the face behind each generator
        #[arg(long)]
        tag_faces: bool,
    },
    /// Hasse diagram of the index-vector poset in DOT
    Poset { input: String },
    /// The cubical complex of a nested colouring
    Cubical {
        input: String,
        /// Print the 1-skeleton in DOT
        #[arg(long, conflicts_with = "resolution")]
        dot: bool,
        /// Print and verify the cellular resolution
        #[arg(long)]
        resolution: bool,
    },
    /// Graded Betti numbers of the ideal
    Betti {
        input: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Boij-Söderberg decomposition of the Betti table
    Bs {
        input: String,
        /// Decompose the table of the quotient ring instead
        #[arg(long)]
        quotient: bool,
        #[arg(long)]
        oracle: bool,
    },
    /// Hilbert series data and ideal properties
    Invariants {
        input: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Irreducible decomposition and associated primes
    Primes {
        input: String,
        /// Also track associated primes of the powers up to N
        #[arg(long, value_name = "N")]
        powers: Option<usize>,
        #[arg(long)]
        oracle: bool,
    },
    /// Write the product ideal as a uniform face ideal
    Product { input: String, second: String },
    /// Cross-check every closed form against its oracle
    Verify { input: String },
}

fn read_source(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::parse(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::parse(format!("reading {arg}: {e}")))
}

/// An error with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn parse(message: String) -> Self {
        Failure { code: 2, message }
    }

    pub fn precondition(message: String) -> Self {
        Failure { code: 4, message }
    }
}

impl From<ufi::Error> for Failure {
    fn from(e: ufi::Error) -> Self {
        let code = match e.kind() {
            ufi::ErrorKind::Parse => 2,
            ufi::ErrorKind::Guard => 3,
            ufi::ErrorKind::Precondition => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let opts = &cli.opts;
    let get = |arg: &str| -> Result<Input, Failure> { load(&read_source(arg)?, opts) };
    match &cli.command {
        Command::Check { input } => commands::check(&get(input)?),
        Command::Chromatic { input } => commands::chromatic(&get(input)?, opts),
        Command::Ideal { input, tag_faces } => commands::ideal(&get(input)?, *tag_faces),
        Command::Poset { input } => commands::poset(&get(input)?),
        Command::Cubical {
            input,
            dot,
            resolution,
        } => commands::cubical(&get(input)?, *dot, *resolution, opts),
        Command::Betti { input, oracle } => commands::betti(&get(input)?, *oracle, opts),
        Command::Bs {
            input,
            quotient,
            oracle,
        } => commands::bs(&get(input)?, *quotient, *oracle, opts),
        Command::Invariants { input, oracle } => commands::invariants(&get(input)?, *oracle, opts),
        Command::Primes {
            input,
            powers,
            oracle,
        } => commands::primes(&get(input)?, *powers, *oracle, opts),
        Command::Product { input, second } => commands::product(&get(input)?, &get(second)?),
        Command::Verify { input } => commands::verify(&get(input)?, opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = if cli.opts.json {
                let mut s = serde_json::to_string_pretty(&report.json).expect("serializable");
                s.push('\n');
                s
            } else {
                report.text
            };
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            if report.mismatch {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
