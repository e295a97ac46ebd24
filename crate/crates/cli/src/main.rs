//! `checkerboard`: build, certify and scan checkerboard two-qutrit states.
//!
//! Exit codes: 0 success, 1 golden mismatch, 2 parse error, 3 singular
//! parameters.

mod certificate;
mod reproduce;
mod scan;
mod schema;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use checkerboard::param_count::{lambda_report, psi_report, DimensionReport};
use checkerboard::ppt::{bruss_peres_embed, BrussPeresParams};
use checkerboard::sampling::RationalRange;
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::certificate::BuildOutput;
use crate::schema::{decode_matrix, fraction, parse_witness, read_json, Family, JsonComplex, ParamFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0} item(s) did not match")]
    Mismatch(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular parameters: {0}")]
    Singular(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Singular(_) => 3,
        }
    }
}

#[derive(Parser)]
#[command(name = "checkerboard", version, about = "Exact checkerboard two-qutrit state toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a state from a parameter file; writes the matrix and its certificate.
    Build {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a parameter file (or a previous `build` output).
    Certify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every published value and compare.
    Reproduce {
        /// JSON file overriding expected values.
        #[arg(long)]
        goldens: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify seeded random samples; writes CSV.
    Scan {
        #[arg(long, value_enum, default_value = "full")]
        family: Family,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "ppt")]
        target: scan::Target,
        /// Largest |numerator| of sampled fractions.
        #[arg(long, default_value_t = 4)]
        max_num: i64,
        /// Largest sampled denominator.
        #[arg(long, default_value_t = 4)]
        max_den: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Embed first-family Bruß–Peres parameters into the Γ-fixed subfamily.
    EmbedBp {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Jacobian rank of the parametrisation at a point.
    Jacobian {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn load_witness(path: Option<&Path>) -> Result<Option<checkerboard::WitnessVector>, CliError> {
    path.map(|p| parse_witness(read_json(p)?)).transpose()
}

/// A parameter file, or a `build` output whose embedded matrix must match
/// the one rebuilt from its input.
fn load_certify_input(path: &Path) -> Result<ParamFile, CliError> {
    let v = read_json(path)?;
    if v.get("input").is_none() {
        return ParamFile::from_value(v);
    }
    let doc: BuildOutput = serde_json::from_value(v).map_err(schema::parse_err)?;
    let input = ParamFile::from_value(doc.input)?;
    let (_, s) = certificate::build(&input)?;
    if decode_matrix(&doc.matrix)? != s.normalized() || doc.normalizer != s.normalizer.to_string() {
        return Err(CliError::Parse("matrix does not match the embedded input".into()));
    }
    Ok(input)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BrussPeresJson {
    a: JsonComplex,
    b: JsonComplex,
    c: JsonComplex,
    f: JsonComplex,
    t: String,
    x: String,
    #[serde(default)]
    real_only: bool,
}

#[derive(Serialize)]
struct JacobianJson {
    map: &'static str,
    raw_rank: usize,
    coordinate_count: usize,
    parameter_count: usize,
    /// raw rank − 1, for the overall normalization.
    normalized_dimension: usize,
}

impl JacobianJson {
    fn new(map: &'static str, r: DimensionReport) -> Self {
        JacobianJson {
            map,
            raw_rank: r.raw_rank,
            coordinate_count: r.coordinate_count,
            parameter_count: r.parameter_count,
            normalized_dimension: r.normalized_dimension,
        }
    }
}

fn init_threads() {
    if let Some(n) = std::env::var("CHECKERBOARD_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // ignore the error if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Build { input, witness, out } => {
            let params = ParamFile::from_value(read_json(&input)?)?;
            let w = load_witness(witness.as_deref())?;
            emit(out.as_deref(), &to_json(&certificate::build_output(&params, w.as_ref())?))
        }
        Command::Certify { input, witness, out } => {
            let params = load_certify_input(&input)?;
            let w = load_witness(witness.as_deref())?;
            emit(out.as_deref(), &to_json(&certificate::certify(&params, w.as_ref())?))
        }
        Command::Reproduce { goldens, out } => {
            let expected = match goldens {
                Some(p) => serde_json::from_value(read_json(&p)?).map_err(schema::parse_err)?,
                None => reproduce::Expected::default(),
            };
            let items = reproduce::run(&expected);
            emit(out.as_deref(), &reproduce::report(&items))?;
            match items.iter().filter(|i| !i.pass()).count() {
                0 => Ok(()),
                n => Err(CliError::Mismatch(n)),
            }
        }
        Command::Scan { family, samples, seed, target, max_num, max_den, out } => {
            if max_num < 0 || max_den < 1 {
                return Err(CliError::Parse("--max-num must be ≥ 0 and --max-den ≥ 1".into()));
            }
            init_threads();
            let range = RationalRange { max_abs_num: max_num, max_den };
            let rows = scan::run(family, target, samples as usize, seed, range);
            emit(out.as_deref(), &scan::csv(family, target, &rows))
        }
        Command::EmbedBp { input, out } => {
            let j: BrussPeresJson = serde_json::from_value(read_json(&input)?).map_err(schema::parse_err)?;
            let bp = BrussPeresParams {
                a: j.a.decode("a")?,
                b: j.b.decode("b")?,
                c: j.c.decode("c")?,
                f: j.f.decode("f")?,
                t: fraction(&j.t, "t")?,
                x: fraction(&j.x, "x")?,
                real_only: j.real_only,
            };
            let sp = bruss_peres_embed(&bp).map_err(|e| match e {
                checkerboard::Error::NotReal(_) => CliError::Parse(e.to_string()),
                _ => CliError::Singular(e.to_string()),
            })?;
            emit(out.as_deref(), &to_json(&ParamFile::Ppt(Box::new(sp)).to_value()))
        }
        Command::Jacobian { input, out } => {
            let report = match ParamFile::from_value(read_json(&input)?)? {
                ParamFile::Full(p) => JacobianJson::new("psi", psi_report(&p)),
                ParamFile::Ppt(sp) => JacobianJson::new(
                    "lambda",
                    lambda_report(&sp).map_err(|e| CliError::Singular(e.to_string()))?,
                ),
            };
            emit(out.as_deref(), &to_json(&report))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
