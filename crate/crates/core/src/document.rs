//! JSON documents holding algebras, maps, representations and actions.
//!
//! ```json
//! {
//!   "algebras": {"D": {"dimension": 1, "signature": "dendriform",
//!                      "operations": {"prec": [[[1]]], "succ": [[[0]]]}}},
//!   "maps": {"T": {"source": "D", "target": "D", "matrix": [["1/2"]]}},
//!   "representations": {"adj": {"base": "D", "module_dim": 1,
//!                               "operations": {"prec_l": ..., "succ_l": ...,
//!                                              "prec_r": ..., "succ_r": ...}}},
//!   "actions": {"act": {"base": "D", "target": "D", "operations": {...}}}
//! }
//! ```
//!
//! An operation tensor is `c[i][j][k]`, the `k`-th coordinate of
//! `e_i ∘ e_j`. Scalars are JSON integers or strings `"p/q"`. The canonical
//! form sorts keys, reduces fractions and writes integral values unquoted.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

use crate::algebra::{
    ActionSpec, AlgebraSpec, BilinearOp, LinearMapSpec, MapEnd, RepresentationSpec, Signature,
};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Matrix, Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationEntry {
    /// Name of the base algebra inside the document.
    pub base: String,
    pub spec: RepresentationSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionEntry {
    pub base: String,
    pub target: String,
    pub spec: ActionSpec,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub algebras: BTreeMap<String, AlgebraSpec>,
    pub maps: BTreeMap<String, LinearMapSpec>,
    pub representations: BTreeMap<String, RepresentationEntry>,
    pub actions: BTreeMap<String, ActionEntry>,
}

/// A named object of any kind.
#[derive(Clone, Copy, Debug)]
pub enum ObjectRef<'a> {
    Algebra(&'a AlgebraSpec),
    Representation(&'a RepresentationSpec),
    Action(&'a ActionSpec),
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let root: Value = serde_json::from_str(text).map_err(|e| Error::Document {
            path: "$".into(),
            message: format!("malformed JSON ({e})"),
        })?;
        let root = as_object(&root, "$")?;
        for key in root.keys() {
            if !["algebras", "maps", "representations", "actions"].contains(&key.as_str()) {
                return Err(doc_err(&format!("$.{key}"), "unknown top-level section"));
            }
        }
        let mut doc = Document::default();
        if let Some(algs) = root.get("algebras") {
            for (name, v) in as_object(algs, "algebras")? {
                let path = format!("algebras.{name}");
                doc.algebras.insert(name.clone(), parse_algebra(v, &path)?);
            }
        }
        if let Some(maps) = root.get("maps") {
            for (name, v) in as_object(maps, "maps")? {
                let path = format!("maps.{name}");
                let m = parse_map(&doc, v, &path)?;
                doc.maps.insert(name.clone(), m);
            }
        }
        if let Some(reps) = root.get("representations") {
            for (name, v) in as_object(reps, "representations")? {
                let path = format!("representations.{name}");
                let entry = parse_representation(&doc, v, &path)?;
                doc.representations.insert(name.clone(), entry);
            }
        }
        if let Some(acts) = root.get("actions") {
            for (name, v) in as_object(acts, "actions")? {
                let path = format!("actions.{name}");
                let entry = parse_action(&doc, v, &path)?;
                doc.actions.insert(name.clone(), entry);
            }
        }
        Ok(doc)
    }

    /// Canonical text: sorted keys, reduced rationals, stable layout.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        write_value(&self.to_value(), 0, &mut out);
        out.push('\n');
        out
    }

    pub fn to_value(&self) -> Value {
        let mut root = Map::new();
        let algebras: Map<String, Value> = self
            .algebras
            .iter()
            .map(|(k, a)| (k.clone(), algebra_value(a)))
            .collect();
        root.insert("algebras".into(), Value::Object(algebras));
        let maps: Map<String, Value> = self
            .maps
            .iter()
            .map(|(k, m)| (k.clone(), map_value(m)))
            .collect();
        root.insert("maps".into(), Value::Object(maps));
        let reps: Map<String, Value> = self
            .representations
            .iter()
            .map(|(k, r)| {
                let mut o = Map::new();
                o.insert("base".into(), Value::String(r.base.clone()));
                o.insert("module_dim".into(), Value::from(r.spec.module_dim()));
                o.insert("operations".into(), action_ops_value(&r.spec));
                (k.clone(), Value::Object(o))
            })
            .collect();
        root.insert("representations".into(), Value::Object(reps));
        let acts: Map<String, Value> = self
            .actions
            .iter()
            .map(|(k, a)| {
                let mut o = Map::new();
                o.insert("base".into(), Value::String(a.base.clone()));
                o.insert("target".into(), Value::String(a.target.clone()));
                o.insert("operations".into(), action_ops_value(a.spec.representation()));
                (k.clone(), Value::Object(o))
            })
            .collect();
        root.insert("actions".into(), Value::Object(acts));
        Value::Object(root)
    }

    pub fn algebra(&self, name: &str) -> Result<&AlgebraSpec> {
        self.algebras
            .get(name)
            .ok_or_else(|| Error::Invalid(format!("no algebra named `{name}`")))
    }

    pub fn map(&self, name: &str) -> Result<&LinearMapSpec> {
        self.maps
            .get(name)
            .ok_or_else(|| Error::Invalid(format!("no map named `{name}`")))
    }

    pub fn representation(&self, name: &str) -> Result<&RepresentationSpec> {
        self.representations
            .get(name)
            .map(|e| &e.spec)
            .ok_or_else(|| Error::Invalid(format!("no representation named `{name}`")))
    }

    pub fn action(&self, name: &str) -> Result<&ActionSpec> {
        self.actions
            .get(name)
            .map(|e| &e.spec)
            .ok_or_else(|| Error::Invalid(format!("no action named `{name}`")))
    }

    /// Looks `name` up among algebras, representations and actions, in
    /// that order.
    pub fn object(&self, name: &str) -> Result<ObjectRef<'_>> {
        if let Some(a) = self.algebras.get(name) {
            return Ok(ObjectRef::Algebra(a));
        }
        if let Some(r) = self.representations.get(name) {
            return Ok(ObjectRef::Representation(&r.spec));
        }
        if let Some(a) = self.actions.get(name) {
            return Ok(ObjectRef::Action(&a.spec));
        }
        Err(Error::Invalid(format!("no object named `{name}`")))
    }

    pub fn insert_algebra(&mut self, name: impl Into<String>, a: AlgebraSpec) -> Result<()> {
        let name = name.into();
        match self.algebras.get(&name) {
            Some(existing) if existing != &a => Err(Error::Invalid(format!(
                "algebra `{name}` already exists with different contents"
            ))),
            _ => {
                self.algebras.insert(name, a);
                Ok(())
            }
        }
    }

    pub fn insert_map(&mut self, name: impl Into<String>, m: LinearMapSpec) {
        self.maps.insert(name.into(), m);
    }

    /// Adds a representation, also adding its base algebra under `base`.
    pub fn insert_representation(
        &mut self,
        name: impl Into<String>,
        base: impl Into<String>,
        spec: RepresentationSpec,
    ) -> Result<()> {
        let base = base.into();
        self.insert_algebra(base.clone(), spec.base().clone())?;
        self.representations
            .insert(name.into(), RepresentationEntry { base, spec });
        Ok(())
    }

    pub fn insert_action(
        &mut self,
        name: impl Into<String>,
        base: impl Into<String>,
        target: impl Into<String>,
        spec: ActionSpec,
    ) -> Result<()> {
        let base = base.into();
        let target = target.into();
        self.insert_algebra(base.clone(), spec.base().clone())?;
        self.insert_algebra(target.clone(), spec.target().clone())?;
        self.actions.insert(
            name.into(),
            ActionEntry { base, target, spec },
        );
        Ok(())
    }
}

fn doc_err(path: &str, message: &str) -> Error {
    Error::Document {
        path: path.to_string(),
        message: message.to_string(),
    }
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| doc_err(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| doc_err(path, "expected an array"))
}

fn as_count(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| doc_err(path, "expected a non-negative integer"))
}

fn field<'a>(o: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    o.get(key)
        .ok_or_else(|| doc_err(path, &format!("missing field `{key}`")))
}

pub(crate) fn parse_scalar(v: &Value, path: &str) -> Result<Rational> {
    let parsed = match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(BigInt::from(i)))
            .or_else(|| n.as_u64().map(|u| Rational::from_integer(BigInt::from(u)))),
        Value::String(s) => parse_rational(s),
        _ => None,
    };
    parsed.ok_or_else(|| doc_err(path, "invalid rational"))
}

pub(crate) fn scalar_value(r: &Rational) -> Value {
    if r.is_integer() {
        if let Some(i) = r.numer().to_i64() {
            return Value::from(i);
        }
    }
    Value::String(format_rational(r))
}

fn parse_tensor(v: &Value, shape: (usize, usize, usize), path: &str) -> Result<BilinearOp> {
    let (l, r, o) = shape;
    let rows = as_array(v, path)?;
    if rows.len() != l {
        return Err(doc_err(
            path,
            &format!("dimension inconsistency: expected {l} left indices, found {}", rows.len()),
        ));
    }
    let mut coeffs = Vec::with_capacity(l * r);
    for (i, row) in rows.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let cols = as_array(row, &p)?;
        if cols.len() != r {
            return Err(doc_err(
                &p,
                &format!("dimension inconsistency: expected {r} right indices, found {}", cols.len()),
            ));
        }
        for (j, entry) in cols.iter().enumerate() {
            let p = format!("{path}[{i}][{j}]");
            let vals = as_array(entry, &p)?;
            if vals.len() != o {
                return Err(doc_err(
                    &p,
                    &format!("dimension inconsistency: expected {o} coordinates, found {}", vals.len()),
                ));
            }
            let vec = vals
                .iter()
                .enumerate()
                .map(|(k, x)| parse_scalar(x, &format!("{path}[{i}][{j}][{k}]")))
                .collect::<Result<Vector>>()?;
            coeffs.push(vec);
        }
    }
    BilinearOp::new(l, r, o, coeffs)
}

fn tensor_value(op: &BilinearOp) -> Value {
    let (l, r, _) = op.shape();
    Value::Array(
        (0..l)
            .map(|i| {
                Value::Array(
                    (0..r)
                        .map(|j| Value::Array(op.product(i, j).iter().map(scalar_value).collect()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn parse_algebra(v: &Value, path: &str) -> Result<AlgebraSpec> {
    let o = as_object(v, path)?;
    for key in o.keys() {
        if !["dimension", "signature", "basis", "operations"].contains(&key.as_str()) {
            return Err(doc_err(&format!("{path}.{key}"), "unknown field"));
        }
    }
    let n = as_count(field(o, "dimension", path)?, &format!("{path}.dimension"))?;
    let sig_path = format!("{path}.signature");
    let sig: Signature = field(o, "signature", path)?
        .as_str()
        .ok_or_else(|| doc_err(&sig_path, "expected a string"))?
        .parse()
        .map_err(|_| doc_err(&sig_path, "unknown signature"))?;
    let ops_path = format!("{path}.operations");
    let mut ops = BTreeMap::new();
    for (name, t) in as_object(field(o, "operations", path)?, &ops_path)? {
        let p = format!("{ops_path}.{name}");
        ops.insert(name.clone(), parse_tensor(t, (n, n, n), &p)?);
    }
    for required in sig.canonical_ops() {
        if !ops.contains_key(*required) {
            return Err(doc_err(
                &ops_path,
                &format!("missing operation `{required}` for signature {sig}"),
            ));
        }
    }
    let mut a = AlgebraSpec::new(n, sig, ops).map_err(|e| doc_err(path, &e.to_string()))?;
    if let Some(labels) = o.get("basis") {
        let p = format!("{path}.basis");
        let labels = as_array(labels, &p)?
            .iter()
            .map(|l| {
                l.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| doc_err(&p, "basis labels must be strings"))
            })
            .collect::<Result<Vec<_>>>()?;
        a = a
            .with_basis_labels(labels)
            .map_err(|e| doc_err(&p, &e.to_string()))?;
    }
    Ok(a)
}

fn algebra_value(a: &AlgebraSpec) -> Value {
    let mut o = Map::new();
    o.insert("dimension".into(), Value::from(a.dimension()));
    o.insert("signature".into(), Value::String(a.signature().name().into()));
    if let Some(labels) = a.basis_labels() {
        o.insert(
            "basis".into(),
            Value::Array(labels.iter().cloned().map(Value::String).collect()),
        );
    }
    let ops: Map<String, Value> = a
        .operations()
        .iter()
        .map(|(k, op)| (k.clone(), tensor_value(op)))
        .collect();
    o.insert("operations".into(), Value::Object(ops));
    Value::Object(o)
}

fn map_end(doc: &Document, v: &Value, path: &str) -> Result<(MapEnd, usize)> {
    match v {
        Value::String(name) => {
            let a = doc
                .algebras
                .get(name)
                .ok_or_else(|| doc_err(path, &format!("unknown algebra `{name}`")))?;
            Ok((MapEnd::Named(name.clone()), a.dimension()))
        }
        other => Ok((MapEnd::Dim, as_count(other, path)?)),
    }
}

fn parse_map(doc: &Document, v: &Value, path: &str) -> Result<LinearMapSpec> {
    let o = as_object(v, path)?;
    let (source, s) = map_end(doc, field(o, "source", path)?, &format!("{path}.source"))?;
    let (target, t) = map_end(doc, field(o, "target", path)?, &format!("{path}.target"))?;
    let mpath = format!("{path}.matrix");
    let rows = as_array(field(o, "matrix", path)?, &mpath)?;
    if rows.len() != t {
        return Err(doc_err(
            &mpath,
            &format!("dimension inconsistency: expected {t} rows, found {}", rows.len()),
        ));
    }
    let mut parsed = Vec::with_capacity(t);
    for (r, row) in rows.iter().enumerate() {
        let p = format!("{mpath}[{r}]");
        let row = as_array(row, &p)?;
        if row.len() != s {
            return Err(doc_err(
                &p,
                &format!("dimension inconsistency: expected {s} columns, found {}", row.len()),
            ));
        }
        parsed.push(
            row.iter()
                .enumerate()
                .map(|(c, x)| parse_scalar(x, &format!("{mpath}[{r}][{c}]")))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let matrix = Matrix::from_rows(s, parsed)?;
    Ok(LinearMapSpec::new(matrix).with_ends(source, target))
}

fn map_value(m: &LinearMapSpec) -> Value {
    let end = |e: &MapEnd, dim: usize| match e {
        MapEnd::Named(n) => Value::String(n.clone()),
        MapEnd::Dim => Value::from(dim),
    };
    let mut o = Map::new();
    o.insert("source".into(), end(m.source(), m.source_dim()));
    o.insert("target".into(), end(m.target(), m.target_dim()));
    let rows = (0..m.target_dim())
        .map(|r| Value::Array(m.matrix().row(r).iter().map(scalar_value).collect()))
        .collect();
    o.insert("matrix".into(), Value::Array(rows));
    Value::Object(o)
}

fn base_algebra<'a>(doc: &'a Document, o: &Map<String, Value>, key: &str, path: &str) -> Result<(String, &'a AlgebraSpec)> {
    let p = format!("{path}.{key}");
    let name = field(o, key, path)?
        .as_str()
        .ok_or_else(|| doc_err(&p, "expected an algebra name"))?;
    let a = doc
        .algebras
        .get(name)
        .ok_or_else(|| doc_err(&p, &format!("unknown algebra `{name}`")))?;
    if a.signature() != Signature::Dendriform {
        return Err(doc_err(&p, &format!("`{name}` must be dendriform")));
    }
    Ok((name.to_string(), a))
}

fn parse_action_ops(
    o: &Map<String, Value>,
    n: usize,
    m: usize,
    path: &str,
) -> Result<[BilinearOp; 4]> {
    let ops_path = format!("{path}.operations");
    let ops = as_object(field(o, "operations", path)?, &ops_path)?;
    for key in ops.keys() {
        if !crate::algebra::ACTION_OPS.contains(&key.as_str()) {
            return Err(doc_err(&format!("{ops_path}.{key}"), "unknown action"));
        }
    }
    let get = |name: &str, shape| {
        let p = format!("{ops_path}.{name}");
        let t = ops
            .get(name)
            .ok_or_else(|| doc_err(&ops_path, &format!("missing operation `{name}`")))?;
        parse_tensor(t, shape, &p)
    };
    Ok([
        get("prec_l", (n, m, m))?,
        get("succ_l", (n, m, m))?,
        get("prec_r", (m, n, m))?,
        get("succ_r", (m, n, m))?,
    ])
}

fn parse_representation(doc: &Document, v: &Value, path: &str) -> Result<RepresentationEntry> {
    let o = as_object(v, path)?;
    let (base_name, base) = base_algebra(doc, o, "base", path)?;
    let m = as_count(field(o, "module_dim", path)?, &format!("{path}.module_dim"))?;
    let [pl, sl, pr, sr] = parse_action_ops(o, base.dimension(), m, path)?;
    let spec = RepresentationSpec::new(base.clone(), m, pl, sl, pr, sr)
        .map_err(|e| doc_err(path, &e.to_string()))?;
    Ok(RepresentationEntry {
        base: base_name,
        spec,
    })
}

fn parse_action(doc: &Document, v: &Value, path: &str) -> Result<ActionEntry> {
    let o = as_object(v, path)?;
    let (base_name, base) = base_algebra(doc, o, "base", path)?;
    let (target_name, target) = base_algebra(doc, o, "target", path)?;
    let m = target.dimension();
    let [pl, sl, pr, sr] = parse_action_ops(o, base.dimension(), m, path)?;
    let rep = RepresentationSpec::new(base.clone(), m, pl, sl, pr, sr)
        .map_err(|e| doc_err(path, &e.to_string()))?;
    let spec = ActionSpec::new(rep, target.clone()).map_err(|e| doc_err(path, &e.to_string()))?;
    Ok(ActionEntry {
        base: base_name,
        target: target_name,
        spec,
    })
}

fn action_ops_value(rep: &RepresentationSpec) -> Value {
    let mut o = Map::new();
    o.insert("prec_l".into(), tensor_value(rep.prec_l()));
    o.insert("prec_r".into(), tensor_value(rep.prec_r()));
    o.insert("succ_l".into(), tensor_value(rep.succ_l()));
    o.insert("succ_r".into(), tensor_value(rep.succ_r()));
    Value::Object(o)
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Object(o) if o.is_empty() => out.push_str("{}"),
        Value::Object(o) => {
            out.push_str("{\n");
            for (k, (key, val)) in o.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                out.push_str(&serde_json::to_string(key).expect("string key"));
                out.push_str(": ");
                write_value(val, indent + 2, out);
                if k + 1 < o.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(a) if a.iter().all(is_scalar) => {
            out.push('[');
            for (k, x) in a.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                out.push_str(&serde_json::to_string(x).expect("scalar"));
            }
            out.push(']');
        }
        Value::Array(a) => {
            out.push_str("[\n");
            for (k, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                write_value(x, indent + 2, out);
                if k + 1 < a.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("scalar")),
    }
}

/// Serde adapter writing vectors as arrays of canonical scalars.
pub mod vector_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Value;

    use crate::linalg::Vector;

    pub fn serialize<S: Serializer>(v: &Vector, s: S) -> Result<S::Ok, S::Error> {
        let values: Vec<Value> = v.iter().map(super::scalar_value).collect();
        values.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vector, D::Error> {
        let values = Vec::<Value>::deserialize(d)?;
        values
            .iter()
            .map(|x| super::parse_scalar(x, "residual").map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{"algebras": {"Z": {"dimension": 1, "signature": "dendriform",
        "operations": {"prec": [[[0]]], "succ": [[[0]]]}}}}"#;

    #[test]
    fn minimal_document() {
        let doc = Document::parse(MINIMAL).unwrap();
        let z = doc.algebra("Z").unwrap();
        assert_eq!(z.dimension(), 1);
        assert_eq!(z.signature(), Signature::Dendriform);
        assert!(z.operations().values().all(BilinearOp::is_zero));
    }

    #[test]
    fn zero_denominator_is_rejected_with_path() {
        let text = MINIMAL.replace("\"prec\": [[[0]]]", "\"prec\": [[[\"1/0\"]]]");
        let err = Document::parse(&text).unwrap_err().to_string();
        assert_eq!(err, "invalid rational at path algebras.Z.operations.prec[0][0][0]");
    }

    #[test]
    fn missing_operation_is_reported() {
        let text = r#"{"algebras": {"Z": {"dimension": 1, "signature": "quadri",
            "operations": {"prec_vdash": [[[0]]]}}}}"#;
        let err = Document::parse(text).unwrap_err().to_string();
        assert!(err.contains("missing operation `prec_dashv`"), "{err}");
        assert!(err.contains("algebras.Z.operations"), "{err}");
    }

    #[test]
    fn dimension_inconsistency_is_reported() {
        let text = r#"{"algebras": {"Z": {"dimension": 2, "signature": "associative",
            "operations": {"mul": [[[0, 0], [0, 0]], [[0, 0], [0]]]}}}}"#;
        let err = Document::parse(text).unwrap_err().to_string();
        assert!(err.contains("algebras.Z.operations.mul[1][1]"), "{err}");
    }

    #[test]
    fn map_shapes_and_names() {
        let text = r#"{"algebras": {"Z": {"dimension": 1, "signature": "dendriform",
            "operations": {"prec": [[[0]]], "succ": [[[0]]]}}},
            "maps": {"T": {"source": 2, "target": "Z", "matrix": [["1/2", -3]]},
                     "bad": {"source": 2, "target": 1, "matrix": [[1]]}}}"#;
        let err = Document::parse(text).unwrap_err().to_string();
        assert!(err.contains("maps.bad.matrix[0]"), "{err}");
        let ok = text.replace(r#""bad": {"source": 2, "target": 1, "matrix": [[1]]}"#, r#""id": {"source": 0, "target": 0, "matrix": []}"#);
        let doc = Document::parse(&ok).unwrap();
        let t = doc.map("T").unwrap();
        assert_eq!((t.source_dim(), t.target_dim()), (2, 1));
        assert_eq!(t.target(), &MapEnd::Named("Z".into()));
    }

    #[test]
    fn zero_dimensional_algebra_round_trips() {
        let mut doc = Document::default();
        doc.insert_algebra("E", AlgebraSpec::zero(0, Signature::Six)).unwrap();
        let text = doc.to_canonical_string();
        assert_eq!(Document::parse(&text).unwrap(), doc);
    }

    #[test]
    fn golden_zero_algebra() {
        let mut doc = Document::default();
        doc.insert_algebra("Z", AlgebraSpec::zero(1, Signature::Dendriform)).unwrap();
        let expected = r#"{
  "actions": {},
  "algebras": {
    "Z": {
      "dimension": 1,
      "operations": {
        "prec": [
          [
            [0]
          ]
        ],
        "succ": [
          [
            [0]
          ]
        ]
      },
      "signature": "dendriform"
    }
  },
  "maps": {},
  "representations": {}
}
"#;
        assert_eq!(doc.to_canonical_string(), expected);
    }

    #[test]
    fn representation_requires_dendriform_base() {
        let text = r#"{"algebras": {"A": {"dimension": 1, "signature": "associative",
            "operations": {"mul": [[[0]]]}}},
            "representations": {"r": {"base": "A", "module_dim": 0, "operations": {}}}}"#;
        let err = Document::parse(text).unwrap_err().to_string();
        assert!(err.contains("representations.r.base"), "{err}");
    }
}
