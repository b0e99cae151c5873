use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopfdouble::io::{emit_hopf, emit_report, parse_input, resolve_pairing, run_suite, Parsed, ReportFormat, SUITES};
use hopfdouble::registry::{hopf_names, mutant_names, pairing_names};
use hopfdouble::{HopfError, VerificationReport};

/// Exact verifier for Hopf algebras, quantum doubles and partial duals.
#[derive(Parser)]
#[command(name = "hopfdouble", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a document or a registry object
    Verify { target: String },
    /// Build the quantum double of a pairing
    Double {
        #[arg(long)]
        pairing: String,
        /// write the double as a hopf document
        #[arg(long)]
        emit: Option<String>,
    },
    /// Build the left partial dual of the canonical mapping system
    PartialDual {
        #[arg(long)]
        pairing: String,
    },
    /// Run a named suite
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in examples
    Examples {
        #[command(subcommand)]
        what: ExamplesCmd,
    },
}

#[derive(Subcommand)]
enum ExamplesCmd {
    List,
}

fn finish(r: &VerificationReport, json: bool) -> ExitCode {
    let format = if json { ReportFormat::Json } else { ReportFormat::Text };
    print!("{}", emit_report(r, format));
    if r.overall() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn verify(target: &str) -> Result<VerificationReport, HopfError> {
    let path = std::path::Path::new(target);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return match parse_input(&text) {
            Ok(Parsed::Hopf(h)) => Ok(hopfdouble::hopf::verify_hopf(&h)),
            Ok(Parsed::Pairing(p)) => Ok(hopfdouble::pairing::verify_pairing(&p)),
            Ok(Parsed::Yd(v)) => v.verify(),
            Err(HopfError::Validation(r)) => Ok(*r),
            Err(e) => Err(e),
        };
    }
    if hopf_names().contains(&target) {
        run_suite("axioms", target)
    } else if pairing_names().contains(&target) {
        run_suite("pairing", target)
    } else {
        Err(HopfError::UnknownExample(target.to_string()))
    }
}

fn run(cli: Cli) -> Result<ExitCode, HopfError> {
    match cli.command {
        Command::Verify { target } => Ok(finish(&verify(&target)?, false)),
        Command::Double { pairing, emit } => {
            let p = resolve_pairing(&pairing)?;
            let d = hopfdouble::doubles::quantum_double(&p)?;
            println!("double of {}: dim {}", p.name, d.dim);
            println!("commutative: {}", d.is_commutative());
            println!("cocommutative: {}", d.is_cocommutative());
            if let Some(out) = emit {
                std::fs::write(&out, emit_hopf(&d))?;
                println!("written to {}", out);
            }
            Ok(finish(&hopfdouble::hopf::verify_hopf(&d), false))
        }
        Command::PartialDual { pairing } => {
            let p = resolve_pairing(&pairing)?;
            let s = hopfdouble::partialdual::canonical_pams(&p)?;
            let q = hopfdouble::partialdual::partial_dual(&s)?;
            println!("partial dual of {}: dim {}", p.name, q.dim);
            println!("associator trivial: {}", q.associator_is_trivial());
            let mut r = hopfdouble::partialdual::verify_pams(&s);
            r.absorb("realization.", hopfdouble::partialdual::check_double_realization(&p));
            Ok(finish(&r, false))
        }
        Command::Check { suite, target, json } => Ok(finish(&run_suite(&suite, &target)?, json)),
        Command::Examples { what: ExamplesCmd::List } => {
            println!("algebras: {}", hopf_names().join(" "));
            println!("pairings: {}", pairing_names().join(" "));
            let m: Vec<&str> = mutant_names().into_iter().map(|(n, _)| n).collect();
            println!("mutants: {}", m.join(" "));
            println!("suites: {}", SUITES.join(" "));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
