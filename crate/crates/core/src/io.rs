//! JSON file formats for algebras, representations, `r`, `Δ`, O-operators and 3-pre-Lie algebras.
//!
//! Wherever an algebra is expected, a string is accepted too: a catalog id (optionally prefixed
//! `catalog:`) or a path to an algebra file.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{increasing_tuples, ThreeLieAlgebra};
use crate::catalog::{get_algebra, CatalogId};
use crate::error::{check_dim, Error, Result};
use crate::linalg::Matrix;
use crate::prelie::{LinearOperator, PreLieAlgebra};
use crate::representation::Representation;
use crate::scalar::Scalar;
use crate::tensor::{wedge3, Tensor};
use crate::yang_baxter::{Comultiplication, RElement};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub idx: usize,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub args: [usize; 3],
    pub result: Vec<Term>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RhoEntry {
    args: [usize; 2],
    matrix: Matrix,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepFile {
    alg: Value,
    module_dim: usize,
    #[serde(default)]
    rho: Vec<RhoEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairTerm {
    idx: [usize; 2],
    coeff: Scalar,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RFile {
    dim: usize,
    entries: Vec<PairTerm>,
    #[serde(default)]
    skew_close: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleTerm {
    idx: [usize; 3],
    coeff: Scalar,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum DeltaEntry {
    Terms { arg: usize, terms: Vec<TripleTerm> },
    Wedge { arg: usize, wedge: [usize; 3], coeff: Scalar },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DeltaFile {
    dim: usize,
    delta: Vec<DeltaEntry>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorFile {
    alg: Value,
    rep: Value,
    matrix: Matrix,
}

fn parse_err(what: &str, e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{what}: {e}"))
}

fn from_value<T: for<'de> Deserialize<'de>>(what: &str, v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| parse_err(what, e))
}

pub fn read_json(path: impl AsRef<Path>) -> Result<Value> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| parse_err(&path.display().to_string(), e))
}

/// A catalog id, with or without the `catalog:` prefix.
pub fn parse_catalog_ref(s: &str, alpha: Option<&Scalar>) -> Option<Result<CatalogId>> {
    let id = s.strip_prefix("catalog:").unwrap_or(s);
    let known = id == "dim3" || id.starts_with("dim4.") || id.starts_with("trivial:");
    if !known {
        return s.starts_with("catalog:").then(|| CatalogId::parse(id, None));
    }
    let alpha = if id == "dim4.6" { alpha.cloned() } else { None };
    Some(CatalogId::parse(id, alpha))
}

/// Resolves a string to the JSON it stands for: catalog ids pass through, paths are read.
fn resolve(v: Value) -> Result<Value> {
    match v {
        Value::String(s) if Path::new(&s).exists() && !s.starts_with("catalog:") => read_json(&s),
        other => Ok(other),
    }
}

pub fn algebra_from_json(v: Value, alpha: Option<&Scalar>) -> Result<ThreeLieAlgebra> {
    if let Value::String(s) = &v {
        if let Some(id) = parse_catalog_ref(s, alpha) {
            return Ok(get_algebra(&id?));
        }
    }
    let v = resolve(v)?;
    if v.is_string() {
        return Err(Error::Io(format!("no such algebra file or catalog id: {v}")));
    }
    let file: AlgebraFile = from_value("algebra", v)?;
    let brackets: Vec<_> =
        file.brackets.into_iter().map(|b| (b.args, b.result.into_iter().map(|t| (t.idx, t.coeff)).collect())).collect();
    ThreeLieAlgebra::from_brackets(file.dim, &brackets)
}

pub fn load_algebra(source: &str, alpha: Option<&Scalar>) -> Result<ThreeLieAlgebra> {
    algebra_from_json(Value::String(source.to_string()), alpha)
}

fn nonzero_terms(c: &Tensor, prefix: &[usize]) -> Vec<Term> {
    let n = c.dim();
    let mut idx = prefix.to_vec();
    idx.push(0);
    (1..=n)
        .filter_map(|l| {
            *idx.last_mut().unwrap() = l;
            let v = c.get(&idx).unwrap();
            (!v.is_zero()).then(|| Term { idx: l, coeff: v.clone() })
        })
        .collect()
}

pub fn algebra_to_file(a: &ThreeLieAlgebra) -> AlgebraFile {
    let brackets = increasing_tuples(a.dim(), 3)
        .into_iter()
        .filter_map(|t| {
            let args = [t[0] + 1, t[1] + 1, t[2] + 1];
            let result = nonzero_terms(a.constants(), &args);
            (!result.is_empty()).then_some(BracketEntry { args, result })
        })
        .collect();
    AlgebraFile { dim: a.dim(), brackets }
}

pub fn algebra_to_json(a: &ThreeLieAlgebra) -> Value {
    serde_json::to_value(algebra_to_file(a)).expect("algebra serializes")
}

/// A representation file, or one of the keywords `adjoint` / `coadjoint` relative to `alg`.
pub fn representation_from_json(v: Value, alg: Option<&ThreeLieAlgebra>, alpha: Option<&Scalar>) -> Result<Representation> {
    if let (Value::String(s), Some(a)) = (&v, alg) {
        match s.as_str() {
            "adjoint" => return Representation::adjoint(a),
            "coadjoint" => return Representation::coadjoint(a),
            _ => {}
        }
    }
    let file: RepFile = from_value("representation", resolve(v)?)?;
    let algebra = algebra_from_json(file.alg, alpha)?;
    if let Some(a) = alg {
        if a != &algebra {
            return Err(Error::InvalidArgument("representation is over a different algebra".into()));
        }
    }
    let pairs = file.rho.into_iter().map(|e| ((e.args[0], e.args[1]), e.matrix)).collect();
    Representation::new(algebra, file.module_dim, pairs)
}

pub fn r_from_json(v: Value, alg: &ThreeLieAlgebra) -> Result<RElement> {
    let file: RFile = from_value("r", resolve(v)?)?;
    check_dim(alg.dim(), file.dim)?;
    let entries: Vec<_> = file.entries.into_iter().map(|t| (t.idx[0], t.idx[1], t.coeff)).collect();
    RElement::from_entries(alg.clone(), &entries, file.skew_close)
}

pub fn r_to_json(r: &RElement) -> Value {
    let n = r.dim();
    let mut entries = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let c = r.matrix().get(i, j).unwrap();
            if !c.is_zero() {
                entries.push(PairTerm { idx: [i, j], coeff: c.clone() });
            }
        }
    }
    serde_json::to_value(RFile { dim: n, entries, skew_close: false }).expect("r serializes")
}

pub fn delta_from_json(v: Value, alg: &ThreeLieAlgebra) -> Result<Comultiplication> {
    let file: DeltaFile = from_value("delta", resolve(v)?)?;
    let n = alg.dim();
    check_dim(n, file.dim)?;
    let mut images = vec![Tensor::zeros(3, n); n];
    for entry in file.delta {
        match entry {
            DeltaEntry::Terms { arg, terms } => {
                crate::error::check_index(arg, n)?;
                for t in terms {
                    images[arg - 1].add_at(&t.idx, &t.coeff)?;
                }
            }
            DeltaEntry::Wedge { arg, wedge, coeff } => {
                crate::error::check_index(arg, n)?;
                let w = wedge3(wedge[0], wedge[1], wedge[2], n)?.scale(&coeff);
                images[arg - 1] = &images[arg - 1] + &w;
            }
        }
    }
    Comultiplication::from_images(alg.clone(), &images)
}

pub fn delta_to_json(d: &Comultiplication) -> Value {
    let n = d.dim();
    let delta = (1..=n)
        .filter_map(|m| {
            let img = d.image(m).unwrap();
            let terms: Vec<TripleTerm> =
                img.nonzeros().map(|(idx, c)| TripleTerm { idx: [idx[0], idx[1], idx[2]], coeff: c.clone() }).collect();
            (!terms.is_empty()).then_some(DeltaEntry::Terms { arg: m, terms })
        })
        .collect();
    serde_json::to_value(DeltaFile { dim: n, delta }).expect("delta serializes")
}

/// `{"alg", "rep", "matrix"}`; `rep` may be `adjoint`, `coadjoint` or a representation file.
pub fn o_operator_from_json(v: Value, alpha: Option<&Scalar>) -> Result<(ThreeLieAlgebra, Representation, LinearOperator)> {
    let file: OperatorFile = from_value("O-operator", resolve(v)?)?;
    let alg = algebra_from_json(file.alg, alpha)?;
    let rep = representation_from_json(file.rep, Some(&alg), alpha)?;
    Ok((alg, rep, LinearOperator::new(file.matrix)))
}

pub fn prelie_from_json(v: Value) -> Result<PreLieAlgebra> {
    let file: AlgebraFile = from_value("pre-Lie", resolve(v)?)?;
    let products: Vec<_> =
        file.brackets.into_iter().map(|b| (b.args, b.result.into_iter().map(|t| (t.idx, t.coeff)).collect())).collect();
    PreLieAlgebra::from_products(file.dim, &products)
}

pub fn prelie_to_json(p: &PreLieAlgebra) -> Value {
    let n = p.dim();
    let mut brackets = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                let result = nonzero_terms(p.constants(), &[i, j, k]);
                if !result.is_empty() {
                    brackets.push(BracketEntry { args: [i, j, k], result });
                }
            }
        }
    }
    serde_json::to_value(AlgebraFile { dim: n, brackets }).expect("pre-Lie serializes")
}
