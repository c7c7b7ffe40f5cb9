//! `quivercert` command-line front end.
//!
//! Every subcommand builds one serializable report; `--json` prints it and
//! human output is rendered from it.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use quivercert::{
    build_flavour, certify_with, codim_at, decompose_at, enumerate_connected_data, enumerate_strata,
    generalized_roots, knowledge_base_revision, normalize_kappa, parse_quiver_file, CertifyOptions,
    Conclusion, ExactPoint, Mode,
};

use render::{CodimReport, NormalizeReport, RootsReport, StrataReport, StratumLine};

#[derive(Parser)]
#[command(
    name = "quivercert",
    about = "Certify symplectic singularities of quiver gauge theory Coulomb branches",
    after_help = "EXIT STATUS:\n  0  certified (or the command succeeded)\n  1  inconclusive\n  2  invalid input or usage"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Smooth local factors outside codimension 4
    Ss,
    /// Short-list factors outside codimension 2
    Normal,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Ss => Mode::SymplecticSingularities,
            ModeArg::Normal => Mode::NormalSymplectic,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the full certification pipeline
    Certify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ss")]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
        /// Write the JSON certificate here instead of stdout
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        threads: u16,
    },
    /// List connected families with origin codimension at most K
    Enumerate {
        #[arg(long, value_name = "K")]
        codim_bound: usize,
        #[arg(long)]
        simple_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Split the local theory at a Cartan point into connected factors
    Decompose {
        file: PathBuf,
        /// Comma-separated slot values, `p` or `p/q`
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// Codimension of the stratum through a Cartan point
    Codim {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// Canonical stratum types of codimension at most K
    Strata {
        file: PathBuf,
        #[arg(long, value_name = "K")]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Generalized roots of the Cartan arrangement
    Roots {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Normal form of a flavour coweight under gauge-centre shifts
    NormalizeKappa {
        file: PathBuf,
        /// Coordinates in flavour-lattice order; overrides `kappa` in the file
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let version = format!(
        "{} (knowledge base {})",
        env!("CARGO_PKG_VERSION"),
        knowledge_base_revision()
    );
    let matches = match Cli::command().version(version).try_get_matches() {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Certify {
            file,
            mode,
            json,
            output,
            threads,
        } => {
            let input = parse_quiver_file(&file)?;
            let options = CertifyOptions {
                threads: threads as usize,
            };
            let cert = certify_with(&input.datum, mode.into(), &options);
            if let Some(path) = &output {
                write_json(path, &cert)?;
            }
            if json && output.is_none() {
                println!("{}", serde_json::to_string_pretty(&cert)?);
            } else {
                print!("{}", render::certificate(&cert));
            }
            Ok(match cert.conclusion {
                Conclusion::Certified => 0,
                Conclusion::Inconclusive => 1,
            })
        }
        Command::Enumerate {
            codim_bound,
            simple_only,
            json,
        } => {
            let families = enumerate_connected_data(codim_bound, simple_only);
            emit(json, families.as_slice(), render::families)
        }
        Command::Decompose { file, point, json } => {
            let datum = parse_quiver_file(&file)?.datum;
            let point = parse_point(&point)?;
            let dec = decompose_at(&datum, &point)?;
            emit(json, &dec, render::decomposition)
        }
        Command::Codim { file, point, json } => {
            let datum = parse_quiver_file(&file)?.datum;
            let point = parse_point(&point)?;
            let codim = codim_at(&datum, &point)?;
            let report = CodimReport {
                stratum: point.pattern(),
                datum,
                codim,
            };
            emit(json, &report, render::codim)
        }
        Command::Strata { file, bound, json } => {
            let datum = parse_quiver_file(&file)?.datum;
            let strata = enumerate_strata(&datum, bound)
                .into_iter()
                .map(|stratum| {
                    let codim = codim_at(&datum, &stratum)?;
                    Ok(StratumLine { stratum, codim })
                })
                .collect::<Result<Vec<_>>>()?;
            let report = StrataReport {
                datum,
                bound,
                strata,
            };
            emit(json, &report, render::strata)
        }
        Command::Roots { file, json } => {
            let datum = parse_quiver_file(&file)?.datum;
            let roots = generalized_roots(&datum);
            emit(json, &RootsReport { datum, roots }, render::roots)
        }
        Command::NormalizeKappa { file, kappa, json } => {
            let input = parse_quiver_file(&file)?;
            let kappa = match (kappa, input.kappa) {
                (Some(flag), embedded) => {
                    if embedded.is_some() {
                        eprintln!("warning: --kappa overrides the coweight in {}", file.display());
                    }
                    parse_integers(&flag)?
                }
                (None, Some(embedded)) => embedded,
                (None, None) => bail!("no coweight: pass --kappa or add `kappa` to {}", file.display()),
            };
            let datum = input.datum.trim();
            let lattice = build_flavour(&datum)?;
            let normalized = normalize_kappa(&datum, &kappa)?;
            let report = NormalizeReport {
                labels: lattice.labels().to_vec(),
                input: kappa,
                kappa: normalized.kappa,
                rho: normalized.rho,
                forest: normalized.forest,
            };
            emit(json, &report, render::normalized)
        }
    }
}

fn emit<T: serde::Serialize + ?Sized>(json: bool, value: &T, human: fn(&T) -> String) -> Result<u8> {
    if json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        print!("{}", human(value));
    }
    Ok(0)
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

fn parse_point(text: &str) -> Result<ExactPoint> {
    text.parse::<ExactPoint>().map_err(|e| anyhow!("--point: {e}"))
}

fn parse_integers(text: &str) -> Result<Vec<i64>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(k, tok)| {
            tok.trim()
                .parse::<i64>()
                .with_context(|| format!("--kappa coordinate {}: `{}` is not an integer", k + 1, tok.trim()))
        })
        .collect()
}
