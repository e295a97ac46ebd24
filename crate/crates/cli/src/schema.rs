//! JSON documents. Every exact value is a fraction string such as `"-3/4"`
//! or `"2"`; complex values are `{"re": …, "im": …}`.

use std::collections::BTreeMap;

use checkerboard::arith::parse_rat;
use checkerboard::criteria::WitnessVector;
use checkerboard::ppt::SubfamilyParams;
use checkerboard::{CheckerParams, GMat, GaussRat, Rat};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonComplex {
    pub re: String,
    pub im: String,
}

impl JsonComplex {
    pub fn encode(z: &GaussRat) -> Self {
        JsonComplex { re: z.re.to_string(), im: z.im.to_string() }
    }

    pub fn decode(&self, what: &str) -> Result<GaussRat, CliError> {
        Ok(GaussRat::new(fraction(&self.re, what)?, fraction(&self.im, what)?))
    }
}

pub fn fraction(s: &str, what: &str) -> Result<Rat, CliError> {
    parse_rat(s).ok_or_else(|| CliError::Parse(format!("{what}: invalid fraction {s:?}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Full,
    Ppt,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParamFile {
    family: Family,
    params: Value,
}

/// Subfamily parameters: `t, x, y` are plain fraction strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PptParamsJson {
    pub t: String,
    pub x: String,
    pub y: String,
    pub a: JsonComplex,
    pub b: JsonComplex,
    pub c: JsonComplex,
    pub f: JsonComplex,
    pub j: JsonComplex,
    pub k: JsonComplex,
    pub l: JsonComplex,
    pub m: JsonComplex,
    pub p: JsonComplex,
    pub s: JsonComplex,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParamFile {
    Full(Box<CheckerParams>),
    Ppt(Box<SubfamilyParams>),
}

impl ParamFile {
    pub fn family(&self) -> Family {
        match self {
            ParamFile::Full(_) => Family::Full,
            ParamFile::Ppt(_) => Family::Ppt,
        }
    }

    pub fn from_value(v: Value) -> Result<Self, CliError> {
        let raw: RawParamFile = serde_json::from_value(v).map_err(parse_err)?;
        match raw.family {
            Family::Full => {
                let map: BTreeMap<String, JsonComplex> =
                    serde_json::from_value(raw.params).map_err(parse_err)?;
                let names = CheckerParams::<GaussRat>::NAMES;
                if let Some(k) = map.keys().find(|k| !names.contains(&k.as_str())) {
                    return Err(CliError::Parse(format!("unknown parameter {k:?}")));
                }
                let mut values = Vec::with_capacity(names.len());
                for name in names {
                    let z = map
                        .get(name)
                        .ok_or_else(|| CliError::Parse(format!("missing parameter {name:?}")))?;
                    values.push(z.decode(name)?);
                }
                let arr: [GaussRat; 18] = values.try_into().expect("18 names");
                Ok(ParamFile::Full(Box::new(CheckerParams::from_array(arr))))
            }
            Family::Ppt => {
                let j: PptParamsJson = serde_json::from_value(raw.params).map_err(parse_err)?;
                Ok(ParamFile::Ppt(Box::new(SubfamilyParams {
                    t: fraction(&j.t, "t")?,
                    x: fraction(&j.x, "x")?,
                    y: fraction(&j.y, "y")?,
                    a: j.a.decode("a")?,
                    b: j.b.decode("b")?,
                    c: j.c.decode("c")?,
                    f: j.f.decode("f")?,
                    j: j.j.decode("j")?,
                    k: j.k.decode("k")?,
                    l: j.l.decode("l")?,
                    m: j.m.decode("m")?,
                    p: j.p.decode("p")?,
                    s: j.s.decode("s")?,
                })))
            }
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            ParamFile::Full(p) => {
                let params: BTreeMap<&str, JsonComplex> = CheckerParams::<GaussRat>::NAMES
                    .iter()
                    .zip(p.as_array())
                    .map(|(n, z)| (*n, JsonComplex::encode(z)))
                    .collect();
                serde_json::json!({ "family": Family::Full, "params": params })
            }
            ParamFile::Ppt(sp) => {
                let e = JsonComplex::encode;
                let params = PptParamsJson {
                    t: sp.t.to_string(),
                    x: sp.x.to_string(),
                    y: sp.y.to_string(),
                    a: e(&sp.a),
                    b: e(&sp.b),
                    c: e(&sp.c),
                    f: e(&sp.f),
                    j: e(&sp.j),
                    k: e(&sp.k),
                    l: e(&sp.l),
                    m: e(&sp.m),
                    p: e(&sp.p),
                    s: e(&sp.s),
                };
                serde_json::json!({ "family": Family::Ppt, "params": params })
            }
        }
    }
}

pub fn parse_err(e: serde_json::Error) -> CliError {
    CliError::Parse(e.to_string())
}

pub fn read_json(path: &std::path::Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(parse_err)
}

/// Either nine components, or a list of `φ_A ⊗ φ_B` terms.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessJson {
    #[serde(default)]
    components: Option<Vec<JsonComplex>>,
    #[serde(default)]
    terms: Option<Vec<WitnessTerm>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessTerm {
    a: Vec<JsonComplex>,
    b: Vec<JsonComplex>,
}

fn triple(v: &[JsonComplex], what: &str) -> Result<[GaussRat; 3], CliError> {
    let z: Vec<GaussRat> = v.iter().map(|c| c.decode(what)).collect::<Result<_, _>>()?;
    z.try_into()
        .map_err(|_| CliError::Parse(format!("{what}: expected 3 components")))
}

pub fn parse_witness(v: Value) -> Result<WitnessVector, CliError> {
    let w: WitnessJson = serde_json::from_value(v).map_err(parse_err)?;
    match (w.components, w.terms) {
        (Some(c), None) => {
            let z = c.iter().map(|c| c.decode("witness")).collect::<Result<Vec<_>, _>>()?;
            WitnessVector::new(z).map_err(|e| CliError::Parse(e.to_string()))
        }
        (None, Some(terms)) => {
            let pairs = terms
                .iter()
                .map(|t| Ok((triple(&t.a, "witness term a")?, triple(&t.b, "witness term b")?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(WitnessVector::from_terms(&pairs))
        }
        _ => Err(CliError::Parse("witness needs exactly one of \"components\" or \"terms\"".into())),
    }
}

pub fn encode_matrix(m: &GMat) -> Vec<Vec<JsonComplex>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(JsonComplex::encode).collect()).collect()
}

pub fn decode_matrix(rows: &[Vec<JsonComplex>]) -> Result<GMat, CliError> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|z| z.decode("matrix")).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    GMat::from_rows(rows).map_err(|e| CliError::Parse(e.to_string()))
}
