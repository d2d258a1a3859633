//! JSON encodings. Rationals are strings (`"p/q"` or `"p"`); every object is
//! validated on load, and invalid data is reported as [`Error::Parse`].

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::finite::FiniteRelation;
use crate::indexed::{IndexMode, IndexedCanonicalRelation, IndexedLagrangian};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::path::Path;
use crate::relations::CanonicalRelation;
use crate::symplectic::SymplecticSpace;

pub trait Json: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;

    fn to_json_string(&self, indent: Option<usize>) -> String {
        value_to_string(&self.to_json(), indent)
    }

    fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&v)
    }
}

/// Compact JSON for `None`, otherwise pretty-printed with `n` spaces per level.
pub fn value_to_string(v: &Value, indent: Option<usize>) -> String {
    match indent {
        None => serde_json::to_string(v).expect("values serialize"),
        Some(n) => {
            let pad = vec![b' '; n];
            let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
            let mut out = Vec::new();
            let mut ser = serde_json::Serializer::with_formatter(&mut out, fmt);
            v.serialize(&mut ser).expect("values serialize");
            String::from_utf8(out).expect("JSON is UTF-8")
        }
    }
}

fn parse_err(what: &str, e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{what}: {e}"))
}

/// Load-time validation failures are parse errors.
fn invalid(what: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| match e {
        Error::Parse(_) => e,
        other => Error::Parse(format!("invalid {what}: {other}")),
    }
}

fn decode<T: for<'de> Deserialize<'de>>(what: &str, v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|e| parse_err(what, e))
}

pub fn scalar_to_string(x: &Scalar) -> String {
    x.to_string()
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let r: Scalar = s.trim().parse().map_err(|e| parse_err(&format!("rational {s:?}"), e))?;
    Ok(r)
}

/// Accepts `"p/q"` strings and, leniently, JSON integers.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Str(String),
    Int(i64),
}

impl RawScalar {
    fn value(&self) -> Result<Scalar> {
        match self {
            RawScalar::Str(s) => parse_scalar(s),
            RawScalar::Int(i) => Ok(Scalar::from_integer((*i).into())),
        }
    }
}

fn rows_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(scalar_to_string(x))).collect()))
            .collect(),
    )
}

fn rows_from(raw: &[Vec<RawScalar>], cols: usize) -> Result<Matrix> {
    let rows = raw
        .iter()
        .map(|r| {
            if r.len() != cols {
                return Err(Error::Parse(format!("row of length {} where {cols} expected", r.len())));
            }
            r.iter().map(RawScalar::value).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(cols, rows).map_err(invalid("matrix"))
}

#[derive(Deserialize)]
struct RawSubspace {
    ambient: usize,
    rows: Vec<Vec<RawScalar>>,
}

impl Json for Subspace {
    fn to_json(&self) -> Value {
        serde_json::json!({"ambient": self.ambient(), "rows": rows_to_json(self.basis())})
    }

    fn from_json(v: &Value) -> Result<Self> {
        let raw: RawSubspace = decode("subspace", v)?;
        Ok(Subspace::row_space(&rows_from(&raw.rows, raw.ambient)?))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawForm {
    Named(String),
    Gram(Vec<Vec<RawScalar>>),
}

#[derive(Deserialize)]
struct RawSpace {
    dim: usize,
    #[serde(default)]
    form: Option<RawForm>,
}

impl Json for SymplecticSpace {
    fn to_json(&self) -> Value {
        if self.is_standard() {
            serde_json::json!({"dim": self.dim(), "form": "standard"})
        } else {
            serde_json::json!({"dim": self.dim(), "form": rows_to_json(self.form())})
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        let raw: RawSpace = decode("space", v)?;
        match raw.form {
            None => standard_of_dim(raw.dim),
            Some(RawForm::Named(name)) if name == "standard" => standard_of_dim(raw.dim),
            Some(RawForm::Named(name)) => Err(Error::Parse(format!("unknown form {name:?}"))),
            Some(RawForm::Gram(rows)) => {
                if rows.len() != raw.dim {
                    return Err(Error::Parse(format!("Gram matrix has {} rows, dim is {}", rows.len(), raw.dim)));
                }
                SymplecticSpace::new(rows_from(&rows, raw.dim)?).map_err(invalid("space"))
            }
        }
    }
}

fn standard_of_dim(dim: usize) -> Result<SymplecticSpace> {
    if dim % 2 != 0 {
        return Err(Error::Parse(format!("symplectic dimension {dim} is odd")));
    }
    Ok(SymplecticSpace::standard(dim / 2))
}

fn field<'a>(v: &'a Value, name: &str, what: &str) -> Result<&'a Value> {
    v.get(name)
        .ok_or_else(|| Error::Parse(format!("{what} is missing field {name:?}")))
}

impl Json for CanonicalRelation {
    fn to_json(&self) -> Value {
        serde_json::json!({
            "target": self.target().to_json(),
            "source": self.source().to_json(),
            "body": self.body().to_json(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let target = SymplecticSpace::from_json(field(v, "target", "relation")?)?;
        let source = SymplecticSpace::from_json(field(v, "source", "relation")?)?;
        let body = Subspace::from_json(field(v, "body", "relation")?)?;
        CanonicalRelation::new(target, source, body).map_err(invalid("relation"))
    }
}

/// A relation with an optional `"k"` field (default 0). Negative indices
/// load only in extended mode.
pub fn indexed_relation_from_json(v: &Value, mode: IndexMode) -> Result<IndexedCanonicalRelation> {
    let relation = CanonicalRelation::from_json(v)?;
    let k = match v.get("k") {
        None => 0,
        Some(k) => k.as_i64().ok_or_else(|| Error::Parse("\"k\" must be an integer".into()))?,
    };
    IndexedCanonicalRelation::new(relation, k, mode).map_err(invalid("indexed relation"))
}

impl Json for IndexedCanonicalRelation {
    fn to_json(&self) -> Value {
        let mut v = self.relation().to_json();
        v["k"] = Value::from(self.index());
        v
    }

    fn from_json(v: &Value) -> Result<Self> {
        indexed_relation_from_json(v, IndexMode::Standard)
    }
}

impl Json for Path {
    fn to_json(&self) -> Value {
        serde_json::json!({
            "object": self.target().to_json(),
            "steps": self.steps().iter().map(Json::to_json).collect::<Vec<_>>(),
        })
    }

    /// `"object"` is required only for empty paths.
    fn from_json(v: &Value) -> Result<Self> {
        let steps = field(v, "steps", "path")?
            .as_array()
            .ok_or_else(|| Error::Parse("\"steps\" must be an array".into()))?
            .iter()
            .map(CanonicalRelation::from_json)
            .collect::<Result<Vec<_>>>()?;
        match v.get("object") {
            Some(o) => Path::with_object(SymplecticSpace::from_json(o)?, steps).map_err(invalid("path")),
            None => Path::new(steps).map_err(invalid("path")),
        }
    }
}

impl Json for IndexedLagrangian {
    fn to_json(&self) -> Value {
        serde_json::json!({
            "space": self.space().to_json(),
            "lagrangian": self.lagrangian().to_json(),
            "k": self.index(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let space = SymplecticSpace::from_json(field(v, "space", "indexed Lagrangian")?)?;
        let l = Subspace::from_json(field(v, "lagrangian", "indexed Lagrangian")?)?;
        let k = match v.get("k") {
            None => 0,
            Some(k) => k.as_i64().ok_or_else(|| Error::Parse("\"k\" must be an integer".into()))?,
        };
        IndexedLagrangian::new(space, l, k).map_err(invalid("indexed Lagrangian"))
    }
}

#[derive(Serialize, Deserialize)]
struct RawFinite {
    target_size: usize,
    source_size: usize,
    pairs: Vec<(usize, usize)>,
}

impl Json for FiniteRelation {
    fn to_json(&self) -> Value {
        serde_json::to_value(RawFinite {
            target_size: self.target_size(),
            source_size: self.source_size(),
            pairs: self.pairs(),
        })
        .expect("values serialize")
    }

    fn from_json(v: &Value) -> Result<Self> {
        let raw: RawFinite = decode("finite relation", v)?;
        FiniteRelation::new(raw.target_size, raw.source_size, raw.pairs).map_err(invalid("finite relation"))
    }
}

impl Json for Matrix {
    fn to_json(&self) -> Value {
        serde_json::json!({"cols": self.cols(), "rows": rows_to_json(self)})
    }

    fn from_json(v: &Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct RawMatrix {
            cols: usize,
            rows: Vec<Vec<RawScalar>>,
        }
        let raw: RawMatrix = decode("matrix", v)?;
        rows_from(&raw.rows, raw.cols)
    }
}
