use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use relent_cone::json::{self, DecompositionDoc, MembershipDoc, RealizationDoc, VerificationDoc};
use relent_cone::{cone, realize, report, states, Error};

/// Relative-entropy vectors: cone membership, decomposition and realization.
#[derive(Parser)]
#[command(name = "relcone", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the up-sets (extremal rays) of n parties.
    Rays {
        #[arg(long)]
        n: usize,
        /// One row per orbit under party relabeling.
        #[arg(long)]
        classes: bool,
    },
    /// Membership report for a vector file; exit 0 iff it is in the cone.
    Check { file: PathBuf },
    /// Nested up-set decomposition of a vector file.
    Decompose { file: PathBuf },
    /// Build a state pair realizing a vector file.
    Synthesize {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = realize::DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Relative-entropy vector of a state-pair file.
    Relent { file: PathBuf },
    /// Compare a state pair against a target vector; exit 0 iff it matches.
    Verify {
        vector: PathBuf,
        pair: PathBuf,
        #[arg(long, default_value_t = realize::EXACT_TOLERANCE)]
        tol: f64,
    },
    /// Print one of the worked constructions.
    Demo { which: DemoName },
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    Example5,
    Example6,
}

#[derive(Serialize)]
struct ErrorDoc {
    error: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    membership: Option<MembershipDoc>,
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::Json(_) => "malformed_json",
        Error::Io(_) => "io",
        Error::NotMember(_) => "not_a_member",
        Error::Tolerance { .. } => "tolerance_exceeded",
        Error::PartyMismatch { .. } | Error::VectorLength { .. } | Error::AlphabetMismatch => {
            "dimension_mismatch"
        }
        _ => "invalid_input",
    }
}

fn fail(e: Error) -> ExitCode {
    let membership = match &e {
        Error::NotMember(r) => Some(MembershipDoc::from(r.as_ref())),
        _ => None,
    };
    let code = match e {
        Error::NotMember(_) | Error::Tolerance { .. } => 1,
        _ => 2,
    };
    let doc = ErrorDoc {
        error: kind(&e),
        message: e.to_string(),
        membership,
    };
    eprintln!("{}", serde_json::to_string_pretty(&doc).unwrap_or_else(|_| e.to_string()));
    ExitCode::from(code)
}

fn read(path: &Path) -> Result<String, Error> {
    Ok(fs::read_to_string(path)?)
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Error> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cmd: Command) -> Result<bool, Error> {
    match cmd {
        Command::Rays { n, classes } => {
            print!("{}", report::ray_table(n, classes)?);
            Ok(true)
        }
        Command::Check { file } => {
            let v = json::parse_vector(&read(&file)?)?;
            let r = cone::check_membership(&v);
            print_json(&MembershipDoc::from(&r))?;
            Ok(r.member)
        }
        Command::Decompose { file } => {
            let v = json::parse_vector(&read(&file)?)?;
            let d = cone::layer_cake_decompose(&v)?;
            print_json(&DecompositionDoc::from(&d))?;
            Ok(true)
        }
        Command::Synthesize { file, output, tol } => {
            let v = json::parse_vector(&read(&file)?)?;
            let r = realize::synthesize_with_tolerance(&v, tol)?;
            fs::write(&output, json::pair_to_json(&r.pair)?)?;
            print_json(&RealizationDoc::from(&r))?;
            Ok(true)
        }
        Command::Relent { file } => {
            let pair = json::parse_pair(&read(&file)?)?;
            println!("{}", json::vector_to_json(&states::re_vector(&pair)?)?);
            Ok(true)
        }
        Command::Verify { vector, pair, tol } => {
            let v = json::parse_vector(&read(&vector)?)?;
            let pair = json::parse_pair(&read(&pair)?)?;
            let r = realize::verify(&v, &pair, tol)?;
            print_json(&VerificationDoc::from(&r))?;
            Ok(r.passed)
        }
        Command::Demo { which } => {
            let text = match which {
                DemoName::Example5 => report::example5()?,
                DemoName::Example6 => report::example6()?,
            };
            print!("{text}");
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => fail(e),
    }
}
