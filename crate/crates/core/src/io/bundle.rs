//! Bundle JSON: raw serde shapes, eager validation into library types, and
//! serialization back.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::doubles::{Bialgebra, MatchedPair};
use crate::error::{Error, Result};
use crate::lie::{default_names, BilinearForm, Cobracket, LieAlgebra};
use crate::matrix::Matrix;
use crate::prelie::PreLieAlgebra;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::representations::Representation;
use crate::verdict::generic_names;
use crate::yang_baxter::RelativeRb;

/// Largest dimension accepted for any space in a bundle.
pub const DIMENSION_CAP: usize = 64;

/// `[i, j, k, "c"]`.
pub type SparseEntry = (usize, usize, usize, String);
pub type RawMatrix = Vec<Vec<String>>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBundle {
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub lie_algebras: IndexMap<String, RawLie>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub prelie_algebras: IndexMap<String, RawPreLie>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub operators: IndexMap<String, RawOperator>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub bilinear_forms: IndexMap<String, RawOperator>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub cobrackets: IndexMap<String, RawCobracket>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub bialgebras: IndexMap<String, RawBialgebra>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub rmatrices: IndexMap<String, RawOperator>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub representations: IndexMap<String, RawRepresentation>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub relative_rb: IndexMap<String, RawRelativeRb>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub matched_pairs: IndexMap<String, RawMatchedPair>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub tasks: IndexMap<String, RawTask>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawLie {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<SparseEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPreLie {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub products: Vec<SparseEntry>,
}

/// Operators, bilinear forms and r-matrices: a square matrix, optionally
/// tied to a named Lie or pre-Lie algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawOperator {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub matrix: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCobracket {
    pub algebra: String,
    #[serde(default)]
    pub entries: Vec<SparseEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBialgebra {
    pub cobracket: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawRepresentation {
    pub algebra: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub rho: Vec<RawMatrix>,
    #[serde(rename = "T", default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawRelativeRb {
    pub representation: String,
    #[serde(rename = "K")]
    pub k: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMatchedPair {
    pub g: String,
    pub h: String,
    pub rho: String,
    pub mu: String,
    #[serde(rename = "Eg", default, skip_serializing_if = "Option::is_none")]
    pub eg: Option<String>,
    #[serde(rename = "Eh", default, skip_serializing_if = "Option::is_none")]
    pub eh: Option<String>,
}

/// `{"kind": ..., <arguments>}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawTask {
    pub kind: String,
    #[serde(flatten)]
    pub args: IndexMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCobracket {
    pub algebra: String,
    pub delta: Cobracket,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMatrix {
    pub algebra: Option<String>,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedRepresentation {
    pub algebra: String,
    pub rep: Representation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedRelativeRb {
    pub algebra: String,
    pub representation: String,
    pub rb: RelativeRb,
}

/// A validated bundle. Maps keep declaration order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Bundle {
    pub lie_algebras: IndexMap<String, LieAlgebra>,
    pub prelie_algebras: IndexMap<String, PreLieAlgebra>,
    pub operators: IndexMap<String, NamedMatrix>,
    pub bilinear_forms: IndexMap<String, NamedMatrix>,
    pub cobrackets: IndexMap<String, NamedCobracket>,
    pub bialgebras: IndexMap<String, Bialgebra>,
    pub rmatrices: IndexMap<String, NamedMatrix>,
    pub representations: IndexMap<String, NamedRepresentation>,
    pub relative_rb: IndexMap<String, NamedRelativeRb>,
    pub matched_pairs: IndexMap<String, MatchedPair>,
    pub tasks: IndexMap<String, RawTask>,
}

fn invalid(entity: &str, message: impl Into<String>) -> Error {
    Error::validation(entity, message)
}

fn cap(entity: &str, dim: usize) -> Result<()> {
    if dim > DIMENSION_CAP {
        return Err(Error::DimensionCap {
            entity: entity.to_string(),
            dim,
            cap: DIMENSION_CAP,
        });
    }
    Ok(())
}

fn rational(entity: &str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| invalid(entity, e.to_string()))
}

fn sparse(entity: &str, entries: &[SparseEntry]) -> Result<Vec<(usize, usize, usize, Rational)>> {
    entries
        .iter()
        .map(|(i, j, k, c)| Ok((*i, *j, *k, rational(entity, c)?)))
        .collect()
}

fn matrix(entity: &str, rows: &RawMatrix) -> Result<Matrix> {
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(invalid(entity, "matrix rows have different lengths"));
    }
    cap(entity, rows.len().max(width))?;
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|c| rational(entity, c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if parsed.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(parsed).map_err(|e| invalid(entity, e.to_string()))
}

fn square(entity: &str, m: &Matrix, n: usize) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(invalid(
            entity,
            format!("matrix is {}x{}, expected {n}x{n}", m.rows(), m.cols()),
        ));
    }
    Ok(())
}

fn basis_names(entity: &str, dim: usize, basis: &Option<Vec<String>>, fallback: Vec<String>) -> Result<Vec<String>> {
    cap(entity, dim)?;
    match basis {
        None => Ok(fallback),
        Some(b) if b.len() != dim => Err(invalid(entity, format!("{} basis names for dimension {dim}", b.len()))),
        Some(b) => Ok(b.clone()),
    }
}

fn lookup<'a, T>(map: &'a IndexMap<String, T>, entity: &str, what: &str, name: &str) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| invalid(entity, format!("unknown {what} `{name}`")))
}

impl Bundle {
    /// Dimension of a named Lie or pre-Lie algebra.
    fn algebra_dim(&self, name: &str) -> Option<usize> {
        self.lie_algebras
            .get(name)
            .map(LieAlgebra::dim)
            .or_else(|| self.prelie_algebras.get(name).map(PreLieAlgebra::dim))
    }

    fn named_matrix(&self, entity: &str, raw: &RawOperator) -> Result<NamedMatrix> {
        let m = matrix(entity, &raw.matrix)?;
        if m.rows() != m.cols() {
            return Err(invalid(
                entity,
                format!("matrix is {}x{}, expected square", m.rows(), m.cols()),
            ));
        }
        if let Some(a) = &raw.algebra {
            let n = self
                .algebra_dim(a)
                .ok_or_else(|| invalid(entity, format!("unknown algebra `{a}`")))?;
            square(entity, &m, n)?;
        }
        Ok(NamedMatrix {
            algebra: raw.algebra.clone(),
            matrix: m,
        })
    }

    pub fn operator(&self, name: &str) -> Result<&Matrix> {
        self.operators
            .get(name)
            .map(|m| &m.matrix)
            .ok_or_else(|| invalid(name, "unknown operator"))
    }
}

/// Parses and validates a bundle. Structural invariants (shapes, index
/// ranges, `i < j`, cross-references, dimension cap) are enforced here;
/// algebraic identities are left to the checks.
pub fn parse_bundle(text: &str) -> Result<Bundle> {
    let raw: RawBundle = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    resolve(&raw)
}

pub fn resolve(raw: &RawBundle) -> Result<Bundle> {
    let mut b = Bundle::default();
    for (name, l) in &raw.lie_algebras {
        let names = basis_names(name, l.dim, &l.basis, default_names(l.dim))?;
        let g =
            LieAlgebra::from_brackets(names, &sparse(name, &l.brackets)?).map_err(|e| invalid(name, e.to_string()))?;
        b.lie_algebras.insert(name.clone(), g);
    }
    for (name, p) in &raw.prelie_algebras {
        if b.lie_algebras.contains_key(name) {
            return Err(invalid(name, "name already used by a Lie algebra"));
        }
        let names = basis_names(name, p.dim, &p.basis, default_names(p.dim))?;
        let alg = PreLieAlgebra::from_products(names, &sparse(name, &p.products)?)
            .map_err(|e| invalid(name, e.to_string()))?;
        b.prelie_algebras.insert(name.clone(), alg);
    }
    for (name, o) in &raw.operators {
        let m = b.named_matrix(name, o)?;
        b.operators.insert(name.clone(), m);
    }
    for (name, o) in &raw.bilinear_forms {
        let m = b.named_matrix(name, o)?;
        b.bilinear_forms.insert(name.clone(), m);
    }
    for (name, o) in &raw.rmatrices {
        let m = b.named_matrix(name, o)?;
        b.rmatrices.insert(name.clone(), m);
    }
    for (name, c) in &raw.cobrackets {
        let g = lookup(&b.lie_algebras, name, "Lie algebra", &c.algebra)?;
        let delta =
            Cobracket::from_entries(g.dim(), &sparse(name, &c.entries)?).map_err(|e| invalid(name, e.to_string()))?;
        b.cobrackets.insert(
            name.clone(),
            NamedCobracket {
                algebra: c.algebra.clone(),
                delta,
            },
        );
    }
    for (name, bi) in &raw.bialgebras {
        let c = lookup(&b.cobrackets, name, "cobracket", &bi.cobracket)?;
        let g = b.lie_algebras[&c.algebra].clone();
        let e = match &bi.operator {
            None => None,
            Some(o) => {
                let m = &lookup(&b.operators, name, "operator", o)?.matrix;
                square(name, m, g.dim())?;
                Some(m.clone())
            }
        };
        let bialg = Bialgebra::new(g, c.delta.clone(), e).map_err(|e| invalid(name, e.to_string()))?;
        b.bialgebras.insert(name.clone(), bialg);
    }
    for (name, r) in &raw.representations {
        let g = lookup(&b.lie_algebras, name, "Lie algebra", &r.algebra)?;
        if r.rho.len() != g.dim() {
            return Err(invalid(
                name,
                format!(
                    "{} action matrices for an algebra of dimension {}",
                    r.rho.len(),
                    g.dim()
                ),
            ));
        }
        let names = basis_names(name, r.dim, &r.basis, generic_names(r.dim, "w"))?;
        let rho = r
            .rho
            .iter()
            .map(|m| {
                let m = matrix(name, m)?;
                square(name, &m, r.dim)?;
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        let t = match &r.t {
            None => None,
            Some(t) => {
                let m = &lookup(&b.operators, name, "operator", t)?.matrix;
                square(name, m, r.dim)?;
                Some(m.clone())
            }
        };
        let rep = Representation::new(names, rho, t).map_err(|e| invalid(name, e.to_string()))?;
        b.representations.insert(
            name.clone(),
            NamedRepresentation {
                algebra: r.algebra.clone(),
                rep,
            },
        );
    }
    for (name, k) in &raw.relative_rb {
        let r = lookup(&b.representations, name, "representation", &k.representation)?;
        let m = matrix(name, &k.k)?;
        let n = b.lie_algebras[&r.algebra].dim();
        if m.rows() != n || m.cols() != r.rep.dim() {
            return Err(invalid(
                name,
                format!("K is {}x{}, expected {n}x{}", m.rows(), m.cols(), r.rep.dim()),
            ));
        }
        b.relative_rb.insert(
            name.clone(),
            NamedRelativeRb {
                algebra: r.algebra.clone(),
                representation: k.representation.clone(),
                rb: RelativeRb {
                    rep: r.rep.clone(),
                    k: m,
                },
            },
        );
    }
    for (name, mp) in &raw.matched_pairs {
        let g = lookup(&b.lie_algebras, name, "Lie algebra", &mp.g)?.clone();
        let h = lookup(&b.lie_algebras, name, "Lie algebra", &mp.h)?.clone();
        let rho = lookup(&b.representations, name, "representation", &mp.rho)?;
        let mu = lookup(&b.representations, name, "representation", &mp.mu)?;
        if rho.algebra != mp.g || rho.rep.dim() != h.dim() {
            return Err(invalid(
                name,
                format!(
                    "`{}` must be a representation of `{}` on a space of dimension {}",
                    mp.rho,
                    mp.g,
                    h.dim()
                ),
            ));
        }
        if mu.algebra != mp.h || mu.rep.dim() != g.dim() {
            return Err(invalid(
                name,
                format!(
                    "`{}` must be a representation of `{}` on a space of dimension {}",
                    mp.mu,
                    mp.h,
                    g.dim()
                ),
            ));
        }
        let op = |o: &Option<String>, n: usize| -> Result<Option<Matrix>> {
            match o {
                None => Ok(None),
                Some(o) => {
                    let m = &lookup(&b.operators, name, "operator", o)?.matrix;
                    square(name, m, n)?;
                    Ok(Some(m.clone()))
                }
            }
        };
        let pair = MatchedPair {
            eg: op(&mp.eg, g.dim())?,
            eh: op(&mp.eh, h.dim())?,
            rho: rho.rep.clone().without_t(),
            mu: mu.rep.clone().without_t(),
            g,
            h,
        };
        b.matched_pairs.insert(name.clone(), pair);
    }
    b.tasks = raw.tasks.clone();
    Ok(b)
}

fn raw_sparse(entries: Vec<(usize, usize, usize, Rational)>) -> Vec<SparseEntry> {
    entries
        .into_iter()
        .map(|(i, j, k, c)| (i, j, k, format_rational(&c)))
        .collect()
}

pub fn raw_matrix(m: &Matrix) -> RawMatrix {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

pub fn raw_lie(g: &LieAlgebra) -> RawLie {
    RawLie {
        dim: g.dim(),
        basis: Some(g.names().to_vec()),
        brackets: raw_sparse(g.sparse_brackets()),
    }
}

pub fn raw_prelie(p: &PreLieAlgebra) -> RawPreLie {
    RawPreLie {
        dim: p.dim(),
        basis: Some(p.names().to_vec()),
        products: raw_sparse(p.sparse_products()),
    }
}

pub fn raw_operator(algebra: Option<&str>, m: &Matrix) -> RawOperator {
    RawOperator {
        algebra: algebra.map(str::to_string),
        matrix: raw_matrix(m),
    }
}

pub fn raw_form(algebra: Option<&str>, f: &BilinearForm) -> RawOperator {
    raw_operator(algebra, &f.s)
}

pub fn raw_cobracket(algebra: &str, d: &Cobracket) -> RawCobracket {
    RawCobracket {
        algebra: algebra.to_string(),
        entries: raw_sparse(d.sparse_entries()),
    }
}

pub fn serialize_bundle(raw: &RawBundle) -> String {
    to_json(&serde_json::to_value(raw).expect("bundle serialization cannot fail"))
}

/// Indented JSON with arrays of scalars kept on one line, so matrix rows
/// and sparse entries stay readable.
pub fn to_json(v: &Value) -> String {
    let mut out = String::new();
    write_json(v, 0, &mut out);
    out
}

fn write_json(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let inner: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&inner.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_json(x, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_json(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
