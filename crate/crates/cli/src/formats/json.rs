//! JSON mirror structs and conversions.
//!
//! All numeric fields are plain JSON integers; values that do not fit in an
//! `i64` are rejected rather than silently rounded. Vertices are referenced
//! by their canonical words (`"id"`, `"2.1"`, …); indices in words and in
//! `qset` are 1-based, matching the human-facing notation.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use lsfan_core::demazure::{CharacterElt, DividedPowerMonomial};
use lsfan_core::ls_fan::LsPath;
use lsfan_core::root_system::CartanData;
use lsfan_core::strat_poset::Chain;
use lsfan_core::{FanElement, StratPoset, Weight};

use crate::error::CliError;
use crate::job;

/// Vertex label of the extension `τ₋₁` below `id` (bond 1 to `id`).
pub const EXTENDED_BOTTOM: &str = "tau(-1)";

pub fn int64(v: &BigInt) -> Result<i64, CliError> {
    i64::try_from(v).map_err(|_| CliError::validation("value exceeds the JSON integer range"))
}

pub fn uint64(v: &BigUint) -> Result<i64, CliError> {
    i64::try_from(v).map_err(|_| CliError::validation("value exceeds the JSON integer range"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: i64,
    pub den: i64,
}

pub fn rational_to_json(v: &BigRational) -> Result<RationalJson, CliError> {
    Ok(RationalJson { num: int64(v.numer())?, den: int64(v.denom())? })
}

pub fn rational_from_json(v: &RationalJson) -> Result<BigRational, CliError> {
    if v.den == 0 {
        return Err(CliError::validation("zero denominator"));
    }
    Ok(BigRational::new(BigInt::from(v.num), BigInt::from(v.den)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
}

pub fn cartan_to_json(cd: &CartanData) -> CartanJson {
    CartanJson {
        type_name: cd.label().to_string(),
        rank: cd.rank(),
        cartan: cd.matrix().to_vec(),
    }
}

pub fn cartan_from_json(j: &CartanJson) -> Result<CartanData, CliError> {
    let cd = if j.type_name == "custom" {
        CartanData::from_matrix(j.cartan.clone())?
    } else {
        let named = CartanData::named(&j.type_name)?;
        if named.matrix() != j.cartan.as_slice() {
            return Err(CliError::validation("cartan matrix does not match the named type"));
        }
        named
    };
    if cd.rank() != j.rank {
        return Err(CliError::validation("rank does not match the cartan matrix"));
    }
    Ok(cd)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub lower: String,
    pub upper: String,
    /// Covering root in simple-root coordinates; absent on the extension
    /// edge below `id`.
    pub beta: Option<Vec<i64>>,
    pub bond: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub cartan: CartanJson,
    pub lambda: Vec<i64>,
    /// 1-based indices of the parabolic.
    pub qset: Vec<usize>,
    pub tau: String,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
    pub extended: bool,
}

pub fn poset_to_json(p: &StratPoset, extended: bool) -> Result<PosetJson, CliError> {
    let lambda = p
        .lambda()
        .coords()
        .iter()
        .map(int64)
        .collect::<Result<Vec<_>, _>>()?;
    let mut vertices: Vec<String> = Vec::new();
    if extended {
        vertices.push(EXTENDED_BOTTOM.to_string());
    }
    vertices.extend(p.vertices().iter().map(|v| v.word_string()));
    let mut edges: Vec<EdgeJson> = Vec::new();
    if extended {
        // The bond below id is the vanishing multiplicity of the degree-one
        // extremal function at the origin, always 1.
        edges.push(EdgeJson {
            lower: EXTENDED_BOTTOM.to_string(),
            upper: "id".to_string(),
            beta: None,
            bond: 1,
        });
    }
    for e in p.edges() {
        edges.push(EdgeJson {
            lower: p.vertex(e.lower).word_string(),
            upper: p.vertex(e.upper).word_string(),
            beta: Some(e.root.coords().to_vec()),
            bond: int64(&e.bond)?,
        });
    }
    Ok(PosetJson {
        cartan: cartan_to_json(p.cartan()),
        lambda,
        qset: p.qset().iter().map(|&i| i + 1).collect(),
        tau: p.vertex(p.tau_index()).word_string(),
        vertices,
        edges,
        extended,
    })
}

/// Rebuilds the poset from the ingestion fields and checks that the listed
/// vertices and edges match it exactly.
pub fn poset_from_json(j: &PosetJson) -> Result<(StratPoset, bool), CliError> {
    let cd = cartan_from_json(&j.cartan)?;
    let lambda = Weight::from_i64(&j.lambda);
    let tau_word = job::parse_word(&j.tau, cd.rank())?;
    let tau = lsfan_core::WeylElement::from_word(&cd, &tau_word)?;
    let mut qset = std::collections::BTreeSet::new();
    for &i in &j.qset {
        if i == 0 || i > cd.rank() {
            return Err(CliError::validation("qset index out of range"));
        }
        qset.insert(i - 1);
    }
    let poset = StratPoset::build(&cd, &lambda, &tau, Some(&qset))?;
    let regenerated = poset_to_json(&poset, j.extended)?;
    if regenerated != *j {
        return Err(CliError::validation(
            "poset data is inconsistent with the rebuilt poset",
        ));
    }
    Ok((poset, j.extended))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub vertex: String,
    pub num: i64,
    pub den: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanElementJson {
    pub coeffs: Vec<CoeffJson>,
    pub degree: RationalJson,
}

pub fn fan_to_json(p: &StratPoset, a: &FanElement) -> Result<FanElementJson, CliError> {
    let mut coeffs = Vec::new();
    for v in a.support_desc(p) {
        let c = a.coeff(v);
        coeffs.push(CoeffJson {
            vertex: p.vertex(v).word_string(),
            num: int64(c.numer())?,
            den: int64(c.denom())?,
        });
    }
    Ok(FanElementJson { coeffs, degree: rational_to_json(a.degree())? })
}

pub fn fan_from_json(p: &StratPoset, j: &FanElementJson) -> Result<FanElement, CliError> {
    let mut pairs = Vec::new();
    for c in &j.coeffs {
        let idx = vertex_index(p, &c.vertex)?;
        let value = rational_from_json(&RationalJson { num: c.num, den: c.den })?;
        pairs.push((idx, value));
    }
    let a = FanElement::from_coeffs(pairs)?;
    if *a.degree() != rational_from_json(&j.degree)? {
        return Err(CliError::validation("stated degree does not match the coefficients"));
    }
    Ok(a)
}

/// Resolves a canonical word to a vertex of the poset.
pub fn vertex_index(p: &StratPoset, word: &str) -> Result<usize, CliError> {
    let indices = job::parse_word(word, p.cartan().rank())?;
    p.index_of_word(&indices)
        .ok_or_else(|| CliError::validation(format!("\"{word}\" is not a vertex of the poset")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsPathJson {
    pub sigmas: Vec<String>,
    pub ds: Vec<RationalJson>,
}

pub fn path_to_json(p: &StratPoset, path: &LsPath) -> Result<LsPathJson, CliError> {
    Ok(LsPathJson {
        sigmas: path.sigmas.iter().map(|&v| p.vertex(v).word_string()).collect(),
        ds: path.ds.iter().map(rational_to_json).collect::<Result<_, _>>()?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTermJson {
    pub weight: Vec<i64>,
    pub mult: i64,
}

/// Character terms sorted by weight, lexicographically.
pub fn character_to_json(chi: &CharacterElt) -> Result<Vec<CharacterTermJson>, CliError> {
    chi.terms()
        .iter()
        .map(|(w, m)| {
            Ok(CharacterTermJson {
                weight: w.coords().iter().map(int64).collect::<Result<Vec<_>, _>>()?,
                mult: uint64(m)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub vertices: Vec<String>,
    pub bonds: Vec<i64>,
    pub bond_product: i64,
}

pub fn chain_to_json(p: &StratPoset, chain: &Chain) -> Result<ChainJson, CliError> {
    Ok(ChainJson {
        vertices: chain.elems.iter().map(|&v| p.vertex(v).word_string()).collect(),
        bonds: chain.bonds.iter().map(int64).collect::<Result<_, _>>()?,
        bond_product: int64(&chain.bond_product())?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub m: u64,
    pub count: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NokJson {
    pub chains: Vec<ChainJson>,
    pub degree: i64,
    pub hilbert: Vec<HilbertJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    /// 1-based simple-root index.
    pub index: usize,
    pub exponent: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub factors: Vec<FactorJson>,
    pub shape: i64,
    pub text: String,
    pub weight: Vec<i64>,
}

pub fn monomial_to_json(
    mono: &DividedPowerMonomial,
    weight: &Weight,
) -> Result<MonomialJson, CliError> {
    Ok(MonomialJson {
        factors: mono
            .factors
            .iter()
            .map(|(i, n)| Ok(FactorJson { index: i + 1, exponent: uint64(n)? }))
            .collect::<Result<Vec<_>, CliError>>()?,
        shape: uint64(&mono.shape)?,
        text: mono.to_string(),
        weight: weight.coords().iter().map(int64).collect::<Result<Vec<_>, _>>()?,
    })
}

/// Pretty-printed JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
