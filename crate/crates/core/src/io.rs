//! JSON formats for Hopf algebras, automorphisms, coalgebras, bimodule
//! coalgebras, YD modules and group tables.
//!
//! Scalars are strings "a" or "a/b" (integers are accepted as JSON numbers
//! too). Matrices are row-major with column j the image of basis vector j.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::crossed::{BimoduleCoalgebra, Coalgebra, CrossedError};
use crate::group::{FiniteGroup, GroupError};
use crate::hopf::{GPair, HopfAlgebra, HopfAutomorphism, HopfError};
use crate::scalar::{Field, Scalar, ScalarError};
use crate::tensor::{LinMap, Tensor1to2, Tensor2to1, TensorError, Vector};
use crate::yd::{YdError, YdModule};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Crossed(#[from] CrossedError),
    #[error(transparent)]
    Yd(#[from] YdError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn bad<T>(what: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Format(what.into()))
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value, IoError> {
    v.get(key).ok_or_else(|| IoError::Format(format!("missing key \"{key}\"")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, IoError> {
    v.as_array().ok_or_else(|| IoError::Format(format!("{what} must be an array")))
}

fn index(v: &Value, what: &str) -> Result<usize, IoError> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| IoError::Format(format!("{what} must be a non-negative integer")))
}

pub fn parse_field(v: Option<&Value>) -> Result<Field, IoError> {
    match v {
        None => Ok(Field::Rational),
        Some(Value::String(s)) if s == "Q" => Ok(Field::Rational),
        Some(Value::Object(m)) => match m.get("GFp").and_then(Value::as_u64) {
            Some(p) => Ok(Field::prime(p)?),
            None => bad("field must be \"Q\" or {\"GFp\": p}"),
        },
        Some(_) => bad("field must be \"Q\" or {\"GFp\": p}"),
    }
}

pub fn field_to_value(f: Field) -> Value {
    match f {
        Field::Rational => json!("Q"),
        Field::Prime(p) => json!({ "GFp": p }),
    }
}

pub fn parse_scalar(f: Field, v: &Value) -> Result<Scalar, IoError> {
    match v {
        Value::String(s) => Ok(f.parse(s)?),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(f.from_i64(i)),
            None => bad(format!("scalar {n} must be an integer or a string \"a/b\"")),
        },
        _ => bad("scalar must be a string or an integer"),
    }
}

fn scalar_value(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn coords(f: Field, v: &Value, dim: usize, what: &str) -> Result<Vector, IoError> {
    let a = array(v, what)?;
    if a.len() != dim {
        return bad(format!("{what} must have {dim} entries, got {}", a.len()));
    }
    Ok(Vector::from_dense(f, a.iter().map(|x| parse_scalar(f, x)).collect::<Result<_, _>>()?))
}

fn coords_value(v: &Vector) -> Value {
    Value::Array(v.to_dense().iter().map(scalar_value).collect())
}

pub fn parse_matrix(f: Field, v: &Value, rows: usize, cols: usize, what: &str) -> Result<LinMap, IoError> {
    let a = array(v, what)?;
    if a.len() != rows {
        return bad(format!("{what} must have {rows} rows, got {}", a.len()));
    }
    let mut dense = Vec::with_capacity(rows);
    for (r, row) in a.iter().enumerate() {
        dense.push(coords(f, row, cols, &format!("{what} row {r}"))?.to_dense());
    }
    Ok(LinMap::from_rows(f, &dense, cols)?)
}

pub fn matrix_value(m: &LinMap) -> Value {
    Value::Array(m.rows().iter().map(|r| Value::Array(r.iter().map(scalar_value).collect())).collect())
}

// table[i][j] = coordinates of the product of basis i and basis j
fn parse_bilinear(f: Field, v: &Value, left: usize, right: usize, out: usize, what: &str) -> Result<Tensor2to1, IoError> {
    let a = array(v, what)?;
    if a.len() != left {
        return bad(format!("{what} must have {left} rows, got {}", a.len()));
    }
    let mut table = Vec::with_capacity(left * right);
    for (i, row) in a.iter().enumerate() {
        let r = array(row, what)?;
        if r.len() != right {
            return bad(format!("{what}[{i}] must have {right} entries, got {}", r.len()));
        }
        for (j, c) in r.iter().enumerate() {
            table.push(coords(f, c, out, &format!("{what}[{i}][{j}]"))?);
        }
    }
    Ok(Tensor2to1::from_table(f, left, right, out, table)?)
}

fn bilinear_value(t: &Tensor2to1) -> Value {
    Value::Array(
        (0..t.left_dim())
            .map(|i| Value::Array((0..t.right_dim()).map(|j| coords_value(t.at(i, j))).collect()))
            .collect(),
    )
}

fn parse_triples(f: Field, v: &Value, src: usize, left: usize, right: usize, what: &str) -> Result<Tensor1to2, IoError> {
    let a = array(v, what)?;
    if a.len() != src {
        return bad(format!("{what} must list {src} basis entries, got {}", a.len()));
    }
    let mut terms = Vec::with_capacity(src);
    for (i, entry) in a.iter().enumerate() {
        let mut ts = Vec::new();
        for t in array(entry, what)? {
            let t = array(t, what)?;
            if t.len() != 3 {
                return bad(format!("{what}[{i}] entries must be [j, k, scalar]"));
            }
            ts.push((index(&t[0], what)?, index(&t[1], what)?, parse_scalar(f, &t[2])?));
        }
        terms.push(ts);
    }
    let _ = src;
    Ok(Tensor1to2::from_terms(f, left, right, terms)?)
}

fn triples_value(t: &Tensor1to2) -> Value {
    Value::Array(
        (0..t.src_dim())
            .map(|i| Value::Array(t.terms(i).iter().map(|(j, k, s)| json!([j, k, s.to_string()])).collect()))
            .collect(),
    )
}

fn basis(v: &Value, dim: usize) -> Result<Vec<String>, IoError> {
    match v.get("basis") {
        None => Ok((0..dim).map(|i| format!("b{i}")).collect()),
        Some(b) => {
            let a = array(b, "basis")?;
            if a.len() != dim {
                return bad(format!("basis must have {dim} names"));
            }
            a.iter().map(|x| x.as_str().map(str::to_string).ok_or_else(|| IoError::Format("basis names must be strings".into()))).collect()
        }
    }
}

fn dim_of(v: &Value) -> Result<usize, IoError> {
    let n = index(get(v, "dim")?, "dim")?;
    if n == 0 {
        return bad("dim must be positive");
    }
    Ok(n)
}

pub fn parse_json(text: &str) -> Result<Value, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn hopf_from_value(v: &Value) -> Result<HopfAlgebra, IoError> {
    let f = parse_field(v.get("field"))?;
    let n = dim_of(v)?;
    let basis = basis(v, n)?;
    let mult = parse_bilinear(f, get(v, "mult")?, n, n, n, "mult")?;
    let unit = coords(f, get(v, "unit")?, n, "unit")?;
    let comult = parse_triples(f, get(v, "comult")?, n, n, n, "comult")?;
    let counit = coords(f, get(v, "counit")?, n, "counit")?;
    let antipode = parse_matrix(f, get(v, "antipode")?, n, n, "antipode")?;
    Ok(HopfAlgebra::new(f, basis, mult, unit, comult, counit, antipode)?)
}

pub fn hopf_to_value(h: &HopfAlgebra) -> Value {
    let mut m = Map::new();
    m.insert("field".into(), field_to_value(h.field()));
    m.insert("dim".into(), json!(h.dim()));
    m.insert("basis".into(), json!(h.basis()));
    m.insert("mult".into(), bilinear_value(h.mult()));
    m.insert("unit".into(), coords_value(h.unit()));
    m.insert("comult".into(), triples_value(h.comult()));
    m.insert("counit".into(), coords_value(h.counit()));
    m.insert("antipode".into(), matrix_value(h.antipode()));
    Value::Object(m)
}

/// A file is a Hopf algebra when it carries a multiplication.
pub fn is_hopf_value(v: &Value) -> bool {
    v.get("mult").is_some()
}

pub fn automorphism_from_value(h: &HopfAlgebra, v: &Value) -> Result<HopfAutomorphism, IoError> {
    let m = parse_matrix(h.field(), get(v, "matrix")?, h.dim(), h.dim(), "matrix")?;
    Ok(HopfAutomorphism::new(h, m)?)
}

pub fn automorphism_to_value(a: &HopfAutomorphism) -> Value {
    json!({ "matrix": matrix_value(a.matrix()) })
}

pub fn pair_from_value(h: &HopfAlgebra, v: &Value) -> Result<GPair, IoError> {
    let n = h.dim();
    let a = parse_matrix(h.field(), get(v, "alpha")?, n, n, "alpha")?;
    let b = parse_matrix(h.field(), get(v, "beta")?, n, n, "beta")?;
    Ok(GPair::from_matrices(h, a, b)?)
}

pub fn pair_to_value(g: &GPair) -> Value {
    json!({ "alpha": matrix_value(g.alpha().matrix()), "beta": matrix_value(g.beta().matrix()) })
}

pub fn coalgebra_from_value(v: &Value) -> Result<Coalgebra, IoError> {
    let f = parse_field(v.get("field"))?;
    let n = dim_of(v)?;
    let basis = basis(v, n)?;
    let comult = parse_triples(f, get(v, "comult")?, n, n, n, "comult")?;
    let counit = coords(f, get(v, "counit")?, n, "counit")?;
    Ok(Coalgebra::new(f, basis, comult, counit)?)
}

/// `basis_order` names the layout of a constructed basis, e.g. "H* major".
pub fn coalgebra_to_value(c: &Coalgebra, basis_order: Option<&str>) -> Value {
    let mut m = Map::new();
    m.insert("field".into(), field_to_value(c.field()));
    m.insert("dim".into(), json!(c.dim()));
    m.insert("basis".into(), json!(c.basis()));
    if let Some(o) = basis_order {
        m.insert("basis_order".into(), json!(o));
    }
    m.insert("comult".into(), triples_value(c.comult()));
    m.insert("counit".into(), coords_value(c.counit()));
    Value::Object(m)
}

/// Coalgebra fields plus "left": n×m table of e_i·c_u and "right": m×n table of c_u·e_i.
pub fn bimodule_from_value(h: &HopfAlgebra, v: &Value) -> Result<BimoduleCoalgebra, IoError> {
    let c = coalgebra_from_value(v)?;
    if c.field() != h.field() {
        return bad("coalgebra field differs from the Hopf algebra's");
    }
    let (n, m) = (h.dim(), c.dim());
    let left = parse_bilinear(h.field(), get(v, "left")?, n, m, m, "left")?;
    let right = parse_bilinear(h.field(), get(v, "right")?, m, n, m, "right")?;
    Ok(BimoduleCoalgebra::new(h, c, left, right)?)
}

pub fn bimodule_to_value(c: &BimoduleCoalgebra) -> Value {
    let mut v = coalgebra_to_value(c.coalgebra(), None);
    let m = v.as_object_mut().expect("object");
    m.insert("left".into(), bilinear_value(c.left()));
    m.insert("right".into(), bilinear_value(c.right()));
    v
}

/// { "label": {"alpha", "beta"}, "dim": m, "action": n×m table, "coaction": triples [x, k, s] }.
pub fn yd_from_value(h: &HopfAlgebra, v: &Value) -> Result<YdModule, IoError> {
    let f = h.field();
    if parse_field(v.get("field"))? != f && v.get("field").is_some() {
        return bad("module field differs from the Hopf algebra's");
    }
    let label = pair_from_value(h, get(v, "label")?)?;
    let m = dim_of(v)?;
    let n = h.dim();
    let action = parse_bilinear(f, get(v, "action")?, n, m, m, "action")?;
    let coaction = parse_triples(f, get(v, "coaction")?, m, m, n, "coaction")?;
    Ok(YdModule::new(h, label, action, coaction)?)
}

pub fn yd_to_value(md: &YdModule) -> Value {
    let mut m = Map::new();
    m.insert("field".into(), field_to_value(md.action().field()));
    m.insert("label".into(), pair_to_value(md.label()));
    m.insert("dim".into(), json!(md.dim()));
    m.insert("action".into(), bilinear_value(md.action()));
    m.insert("coaction".into(), triples_value(md.coaction()));
    Value::Object(m)
}

/// { "order": n, "table": n×n indices, "names"?: [..] }.
pub fn group_from_value(v: &Value) -> Result<FiniteGroup, IoError> {
    let n = index(get(v, "order")?, "order")?;
    let rows = array(get(v, "table")?, "table")?;
    let mut table = Vec::with_capacity(rows.len());
    for r in rows {
        table.push(array(r, "table row")?.iter().map(|x| index(x, "table entry")).collect::<Result<Vec<_>, _>>()?);
    }
    let names = match v.get("names") {
        Some(_) => basis(&json!({ "basis": v["names"] }), n)?,
        None => (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect(),
    };
    if table.len() != n {
        return bad(format!("table must have {n} rows"));
    }
    let g = FiniteGroup::from_table(names, table)?;
    if g.identity() != 0 {
        return bad("identity must be element 0");
    }
    Ok(g)
}

pub fn group_to_value(g: &FiniteGroup) -> Value {
    json!({ "order": g.order(), "names": g.names(), "table": g.table() })
}

/// Pretty JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, group_algebra, sweedler_fixture};

    #[test]
    fn hopf_round_trip() {
        for h in [group_algebra(&builtin_group("S3").unwrap()), sweedler_fixture(Field::Rational).unwrap()] {
            let text = to_text(&hopf_to_value(&h));
            let back = hopf_from_value(&parse_json(&text).unwrap()).unwrap();
            assert_eq!(back, h);
            assert_eq!(to_text(&hopf_to_value(&back)), text);
        }
    }

    #[test]
    fn numbers_accepted_as_scalars() {
        let v = json!({
            "dim": 1, "mult": [[[1]]], "unit": [1], "comult": [[[0, 0, 1]]],
            "counit": ["1"], "antipode": [[1]]
        });
        let h = hopf_from_value(&v).unwrap();
        assert_eq!(h.dim(), 1);
    }

    #[test]
    fn malformed_inputs_are_errors() {
        assert!(hopf_from_value(&json!({ "dim": 2 })).is_err());
        assert!(parse_field(Some(&json!({ "GFp": 4 }))).is_err());
        assert!(parse_scalar(Field::Rational, &json!("1/0")).is_err());
        assert!(group_from_value(&json!({ "order": 2, "table": [[0, 1], [1, 1]] })).is_err());
    }

    #[test]
    fn group_round_trip() {
        let g = builtin_group("S3").unwrap();
        assert_eq!(group_from_value(&group_to_value(&g)).unwrap(), g);
    }
}
