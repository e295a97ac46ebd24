use checkerboard::criteria::{
    is_ppt, min_product_residual, range_product_vector_certificate, reduction_criterion,
    schmidt_rank, witness_expectation, NumericSearch, RangeCertificate, WitnessVector,
};
use checkerboard::family::{build_state, is_checkerboard, theorem1_generic, theorem1_product};
use checkerboard::param_count::{jacobian_rank_lambda, jacobian_rank_psi};
use checkerboard::ppt::{derive_full_params, theorem2_product};
use checkerboard::{CheckerParams, Error, Inertia, Rat, StateMatrix};
use serde::{Deserialize, Serialize};

use crate::schema::{encode_matrix, Family, JsonComplex, ParamFile};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InertiaJson {
    pub n_neg: usize,
    pub n_zero: usize,
    pub n_pos: usize,
}

impl From<Inertia> for InertiaJson {
    fn from(i: Inertia) -> Self {
        InertiaJson { n_neg: i.n_neg, n_zero: i.n_zero, n_pos: i.n_pos }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConditionJson {
    /// The product whose nonvanishing is the condition.
    pub product: JsonComplex,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson {
    pub value: JsonComplex,
    pub schmidt_rank: usize,
    pub negative: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub family: Family,
    /// N = tr(N·ρ); the state is the unnormalized matrix divided by N.
    pub normalizer: String,
    pub rank: usize,
    pub checkerboard: bool,
    pub gamma_fixed: bool,
    pub theorem1: ConditionJson,
    /// Only for the Γ-fixed subfamily.
    pub theorem2: Option<ConditionJson>,
    pub ppt: bool,
    pub gamma_inertia: InertiaJson,
    pub reduction_violated: bool,
    pub range_certificate: String,
    /// Entanglement certified by any of the exact tests.
    pub entangled: bool,
    /// `true` when certified; `null` when no test decides it.
    pub distillable: Option<bool>,
    pub witness: Option<WitnessJson>,
    pub jacobian_rank: usize,
    pub numeric_min_product_residual: f64,
}

/// Completed family parameters and the built state.
pub fn build(input: &ParamFile) -> Result<(CheckerParams, StateMatrix), CliError> {
    let p = match input {
        ParamFile::Full(p) => (**p).clone(),
        ParamFile::Ppt(sp) => derive_full_params(sp).map_err(singular)?,
    };
    let s = build_state(&p).map_err(singular)?;
    Ok((p, s))
}

fn singular(e: Error) -> CliError {
    match e {
        Error::Singular(_) | Error::Degenerate(_) => CliError::Singular(e.to_string()),
        other => CliError::Parse(other.to_string()),
    }
}

pub fn certify(input: &ParamFile, witness: Option<&WitnessVector>) -> Result<Certificate, CliError> {
    let (p, s) = build(input)?;
    let (ppt, inertia) = is_ppt(&s);
    let reduction_violated = reduction_criterion(&s);
    let range = range_product_vector_certificate(&p);
    let theorem2 = match input {
        ParamFile::Ppt(sp) => {
            let product = theorem2_product(sp).map_err(singular)?;
            Some(ConditionJson { holds: !product.is_zero(), product: JsonComplex::encode(&product) })
        }
        ParamFile::Full(_) => None,
    };
    let witness = match witness {
        Some(w) => {
            let value = witness_expectation(&s, w);
            let rank = schmidt_rank(w).map_err(|e| CliError::Parse(e.to_string()))?;
            Some(WitnessJson {
                negative: value.re < Rat::from_integer(0.into()),
                value: JsonComplex::encode(&value),
                schmidt_rank: rank,
            })
        }
        None => None,
    };
    let witness_distills = witness.as_ref().is_some_and(|w| w.negative && w.schmidt_rank <= 2);
    let jacobian_rank = match input {
        ParamFile::Full(p) => jacobian_rank_psi(p),
        ParamFile::Ppt(sp) => jacobian_rank_lambda(sp).map_err(singular)?,
    };
    let product = theorem1_product(&p);
    Ok(Certificate {
        family: input.family(),
        normalizer: s.normalizer.to_string(),
        rank: s.rank(),
        checkerboard: is_checkerboard(&s.unnormalized),
        gamma_fixed: s.is_gamma_fixed(),
        theorem1: ConditionJson { holds: theorem1_generic(&p), product: JsonComplex::encode(&product) },
        theorem2,
        ppt,
        gamma_inertia: inertia.into(),
        reduction_violated,
        range_certificate: match range {
            RangeCertificate::NoProductVector => "no_product_vector",
            RangeCertificate::Undecided => "undecided",
        }
        .into(),
        entangled: !ppt || reduction_violated || range == RangeCertificate::NoProductVector,
        distillable: if reduction_violated || witness_distills { Some(true) } else { None },
        witness,
        jacobian_rank,
        numeric_min_product_residual: min_product_residual(&p, &NumericSearch::default()).residual,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildOutput {
    pub input: serde_json::Value,
    pub normalizer: String,
    /// ρ with unit trace, row-major.
    pub matrix: Vec<Vec<JsonComplex>>,
    pub certificate: Certificate,
}

pub fn build_output(input: &ParamFile, witness: Option<&WitnessVector>) -> Result<BuildOutput, CliError> {
    let (_, s) = build(input)?;
    Ok(BuildOutput {
        input: input.to_value(),
        normalizer: s.normalizer.to_string(),
        matrix: encode_matrix(&s.normalized()),
        certificate: certify(input, witness)?,
    })
}
