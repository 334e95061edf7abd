use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

mod commands;
mod input;
mod render;

use commands::Outcome;

/// Exact computations with Nichols algebras of diagonal type.
#[derive(Parser, Debug)]
#[command(name = "nichols", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest accepted rank of an input braiding.
    #[arg(long, global = true, default_value_t = input::DEFAULT_MAX_THETA)]
    max_theta: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// m-matrix, Cartan type, standardness and classification.
    Analyze { input: String },
    /// Reflection at a vertex (1-based).
    Reflect {
        input: String,
        #[arg(long)]
        vertex: usize,
    },
    /// Weyl groupoid orbit of the braiding.
    Orbit { input: String },
    /// Positive roots, heights and Lyndon words of a standard braiding.
    Roots { input: String },
    /// PBW generators extracted up to a total degree.
    Pbw {
        input: String,
        #[arg(long, default_value_t = nichols::nichols::DEFAULT_CAP)]
        cap: u32,
    },
    /// Hilbert series up to a total degree.
    Hilbert {
        input: String,
        #[arg(long, default_value_t = nichols::nichols::DEFAULT_CAP)]
        cap: u32,
    },
    /// Dimension: product of heights against the closed formula.
    Dim { input: String },
    /// Checks the defining relations and the PBW Hilbert series.
    CheckRelations {
        input: String,
        #[arg(long, default_value_t = nichols::nichols::DEFAULT_CAP)]
        cap: u32,
    },
    /// Checks the coproduct identities on this braiding.
    CheckCoproducts { input: String },
    /// Lists standard braidings of a family.
    Enumerate {
        #[arg(long, value_enum, ignore_case = true)]
        family: Family,
        #[arg(long)]
        theta: usize,
        #[arg(long)]
        conductor: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "G")]
    G,
}

const SCHEMA_VERSION: u32 = 1;

fn run(cli: &Cli) -> Result<(&'static str, Option<serde_json::Value>, Outcome), String> {
    let load = |path: &str| {
        let src = input::read_source(path)?;
        input::parse(&src, path, cli.max_theta)
    };
    let (name, b) = match &cli.command {
        Command::Enumerate { family, theta, conductor } => {
            let ty = match family {
                Family::A => nichols::classify::FamilyType::A,
                Family::B => nichols::classify::FamilyType::B,
                Family::G => nichols::classify::FamilyType::G,
            };
            if *theta == 0 || *theta > cli.max_theta {
                return Err(format!("--theta: {theta} is outside 1..={}", cli.max_theta));
            }
            return Ok(("enumerate", None, commands::enumerate(ty, *theta, *conductor)));
        }
        Command::Analyze { input } => ("analyze", load(input)?),
        Command::Reflect { input, .. } => ("reflect", load(input)?),
        Command::Orbit { input } => ("orbit", load(input)?),
        Command::Roots { input } => ("roots", load(input)?),
        Command::Pbw { input, .. } => ("pbw", load(input)?),
        Command::Hilbert { input, .. } => ("hilbert", load(input)?),
        Command::Dim { input } => ("dim", load(input)?),
        Command::CheckRelations { input, .. } => ("check-relations", load(input)?),
        Command::CheckCoproducts { input } => ("check-coproducts", load(input)?),
    };
    let out = match &cli.command {
        Command::Analyze { .. } => commands::analyze(&b),
        Command::Reflect { vertex, .. } => commands::reflect(&b, *vertex),
        Command::Orbit { .. } => commands::orbit(&b),
        Command::Roots { .. } => commands::roots(&b),
        Command::Pbw { cap, .. } => commands::pbw(&b, *cap),
        Command::Hilbert { cap, .. } => commands::hilbert(&b, *cap),
        Command::Dim { .. } => commands::dim(&b),
        Command::CheckRelations { cap, .. } => commands::check_relations(&b, *cap),
        Command::CheckCoproducts { .. } => commands::check_coproducts(&b),
        Command::Enumerate { .. } => unreachable!(),
    }?;
    Ok((name, Some(serde_json::to_value(&b).expect("braiding serializes")), out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((name, input, out)) => {
            if cli.json {
                let report = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": name,
                    "input": input,
                    "pass": out.pass,
                    "result": out.json,
                });
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", out.text);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                let report = json!({ "schema_version": SCHEMA_VERSION, "error": e });
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
