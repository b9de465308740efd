//! `lsfan` — exact combinatorics of Seshadri stratifications on Schubert
//! varieties of finite type, from the command line.
//!
//! Exit codes: 0 success, 1 validation error, 2 internal invariant violation.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use lsfan_cli::error::CliError;
use lsfan_cli::formats::{csv, dot, json};
use lsfan_cli::job::{JobArgs, OutputArgs};
use lsfan_cli::verify;
use lsfan_core::{demazure, ls_fan, nok};

#[derive(Parser)]
#[command(name = "lsfan", version, about = "Bonded Bruhat posets, LS fans of monoids, Demazure characters and Newton-Okounkov data, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the stratification poset A_tau with covering roots and bonds.
    Poset(PosetCmd),
    /// List all maximal chains of the poset with their bonds.
    Chains(ChainsCmd),
    /// Enumerate the degree-m elements of the LS fan of monoids.
    LsEnum(LsEnumCmd),
    /// Demazure or path-model character of the degree-m piece.
    Character(CharacterCmd),
    /// Dimension of the degree-m piece (the number of fan members).
    Dim(DimCmd),
    /// Degree of the embedded Schubert variety (sum of bond products).
    Degree(DegreeCmd),
    /// Newton-Okounkov data: maximal simplices, degree, Hilbert counts.
    Nok(NokCmd),
    /// Unique standard decomposition of a fan member into degree-1 members.
    Decompose(DecomposeCmd),
    /// Divided-power monomial attached to a fan member.
    Monomial(MonomialCmd),
    /// Run the built-in invariant suite over the shipped case matrix.
    Verify(VerifyCmd),
}

#[derive(Args)]
struct PosetCmd {
    #[command(flatten)]
    job: JobArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Also include the extension vertex tau(-1) below id (bond 1).
    #[arg(long)]
    extended: bool,
}

#[derive(Args)]
struct ChainsCmd {
    #[command(flatten)]
    job: JobArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct LsEnumCmd {
    #[command(flatten)]
    job: JobArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Degree to enumerate.
    #[arg(long)]
    m: u64,
    /// List the LS-paths of shape m·lambda instead of the fan elements
    /// (their images under the theta bijection). JSON only.
    #[arg(long)]
    paths: bool,
}

#[derive(Args)]
struct CharacterCmd {
    #[command(flatten)]
    job: JobArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Degree of the graded piece.
    #[arg(long, default_value_t = 1)]
    m: u64,
    /// "demazure" (operator cascade) or "path" (sum over fan members).
    #[arg(long, default_value = "demazure")]
    method: String,
}

#[derive(Args)]
struct DimCmd {
    #[command(flatten)]
    job: JobArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[arg(long, default_value_t = 1)]
    m: u64,
}

#[derive(Args)]
struct DegreeCmd {
    #[command(flatten)]
    job: JobArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct NokCmd {
    #[command(flatten)]
    job: JobArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct DecomposeCmd {
    #[command(flatten)]
    job: JobArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Fan element as JSON: {"coeffs":[{"vertex":"2.1","num":1,"den":2},...],
    /// "degree":{"num":..,"den":..}}.
    #[arg(long)]
    element: String,
}

#[derive(Args)]
struct MonomialCmd {
    #[command(flatten)]
    job: JobArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Fan element as JSON (same schema as for decompose).
    #[arg(long)]
    element: String,
    /// Reduced word of the maximal support element; defaults to its
    /// canonical word.
    #[arg(long)]
    word: Option<String>,
}

#[derive(Args)]
struct VerifyCmd {
    /// Seed for the randomized fan-algebra checks.
    #[arg(long, default_value_t = 1729)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Poset(cmd) => {
            let p = cmd.job.build_poset()?;
            let body = match cmd.output.format.as_str() {
                "json" => json::render(&json::poset_to_json(&p, cmd.extended)?)?,
                "dot" => dot::poset_to_dot(&p, cmd.extended),
                other => {
                    return Err(CliError::validation(format!(
                        "poset supports --format json|dot, not \"{other}\""
                    )))
                }
            };
            cmd.output.write(&body)
        }
        Command::Chains(cmd) => {
            let p = cmd.job.build_poset()?;
            let body = match cmd.output.format.as_str() {
                "json" => {
                    let chains: Vec<_> = p
                        .maximal_chains()
                        .iter()
                        .map(|c| json::chain_to_json(&p, c))
                        .collect::<Result<_, _>>()?;
                    json::render(&chains)?
                }
                "csv" => csv::chains_to_csv(&p),
                other => {
                    return Err(CliError::validation(format!(
                        "chains supports --format json|csv, not \"{other}\""
                    )))
                }
            };
            cmd.output.write(&body)
        }
        Command::LsEnum(cmd) => {
            let p = cmd.job.build_poset()?;
            if cmd.paths {
                if cmd.output.format != "json" {
                    return Err(CliError::validation("--paths supports --format json only"));
                }
                let list: Vec<_> = ls_fan::enumerate_ls_paths(&p, cmd.m)
                    .iter()
                    .map(|path| json::path_to_json(&p, path))
                    .collect::<Result<_, _>>()?;
                return cmd.output.write(&json::render(&list)?);
            }
            let elements = ls_fan::enumerate_fan(&p, cmd.m);
            let body = match cmd.output.format.as_str() {
                "json" => {
                    let list: Vec<_> = elements
                        .iter()
                        .map(|a| json::fan_to_json(&p, a))
                        .collect::<Result<_, _>>()?;
                    json::render(&list)?
                }
                "csv" => csv::fan_elements_to_csv(&p, &elements)?,
                other => {
                    return Err(CliError::validation(format!(
                        "ls-enum supports --format json|csv, not \"{other}\""
                    )))
                }
            };
            cmd.output.write(&body)
        }
        Command::Character(cmd) => {
            let p = cmd.job.build_poset()?;
            let chi = match cmd.method.as_str() {
                "demazure" => {
                    let word = p.vertex(p.tau_index()).rep().word().to_vec();
                    demazure::demazure_character(p.cartan(), p.lambda(), cmd.m, &word)?
                }
                "path" => demazure::path_character(&p, cmd.m),
                other => {
                    return Err(CliError::validation(format!(
                        "--method must be demazure or path, not \"{other}\""
                    )))
                }
            };
            let terms = json::character_to_json(&chi)?;
            let body = match cmd.output.format.as_str() {
                "json" => json::render(&terms)?,
                "csv" => csv::character_to_csv(&terms),
                other => {
                    return Err(CliError::validation(format!(
                        "character supports --format json|csv, not \"{other}\""
                    )))
                }
            };
            cmd.output.write(&body)
        }
        Command::Dim(cmd) => {
            let p = cmd.job.build_poset()?;
            let dim = json::uint64(&demazure::dimension(&p, cmd.m))?;
            let body = json::render(&serde_json::json!({ "dim": dim }))?;
            cmd.output.write(&body)
        }
        Command::Degree(cmd) => {
            let p = cmd.job.build_poset()?;
            let degree = json::int64(&nok::degree(&p))?;
            let body = json::render(&serde_json::json!({ "degree": degree }))?;
            cmd.output.write(&body)
        }
        Command::Nok(cmd) => {
            let p = cmd.job.build_poset()?;
            let chains: Vec<_> = p
                .maximal_chains()
                .iter()
                .map(|c| json::chain_to_json(&p, c))
                .collect::<Result<_, _>>()?;
            let r = p.rank_of(p.tau_index());
            let samples: Vec<u64> = (0..=(r as u64 + 1)).collect();
            let counts = ls_fan::count_fan_many(&p, &samples);
            let hilbert = samples
                .iter()
                .zip(&counts)
                .map(|(&m, c)| Ok(json::HilbertJson { m, count: json::uint64(c)? }))
                .collect::<Result<Vec<_>, CliError>>()?;
            let out = json::NokJson {
                chains,
                degree: json::int64(&nok::degree(&p))?,
                hilbert,
            };
            cmd.output.write(&json::render(&out)?)
        }
        Command::Decompose(cmd) => {
            let p = cmd.job.build_poset()?;
            let parsed: json::FanElementJson = serde_json::from_str(&cmd.element)?;
            let a = json::fan_from_json(&p, &parsed)?;
            let parts = ls_fan::standard_decompose(&p, &a)?;
            let list: Vec<_> = parts
                .iter()
                .map(|q| json::fan_to_json(&p, q))
                .collect::<Result<_, _>>()?;
            cmd.output.write(&json::render(&list)?)
        }
        Command::Monomial(cmd) => {
            let p = cmd.job.build_poset()?;
            let parsed: json::FanElementJson = serde_json::from_str(&cmd.element)?;
            let a = json::fan_from_json(&p, &parsed)?;
            let word = match &cmd.word {
                Some(w) => lsfan_cli::job::parse_word(w, p.cartan().rank())?,
                None => {
                    if a.is_zero() {
                        Vec::new()
                    } else {
                        let max = a.support_desc(&p)[0];
                        p.vertex(max).rep().word().to_vec()
                    }
                }
            };
            let mono = demazure::v_monomial(&p, &a, &word)?;
            let weight = ls_fan::weight_of(&p, &a)
                .to_integral()
                .ok_or_else(|| CliError::validation("element weight is not integral"))?;
            cmd.output.write(&json::render(&json::monomial_to_json(&mono, &weight)?)?)
        }
        Command::Verify(cmd) => {
            if verify::run(cmd.seed) {
                Ok(())
            } else {
                Err(CliError::Internal("verification suite failed".to_string()))
            }
        }
    }
}
