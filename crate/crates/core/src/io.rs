//! JSON encodings of scalars, pairings and algebras.
//!
//! Scalars: `{"conductor": m, "coeffs": [["num", "den"], ...]}` over the power basis of
//! `Q(zeta_m)`, big integers as decimal strings. Input also accepts plain integers, rational
//! strings such as `"-1/2"` and `{"zeta": [m, k]}`.
//!
//! Pairings: `{"group": …, "kind": "bicharacter" | "cocycle", "table": [[scalar, …], …]}` in
//! enumeration order, or `"generators"` instead of `"table"` for bicharacters.
//!
//! Algebras: `{"group": …, "conductor": m, "basis": [{"label", "degree"}, …], "unit": [scalar, …],
//! "products": {"i,j": [[k, scalar], …]}}`; absent products are zero.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::{AlgebraError, GradedAlgebra, SparseVec};
use crate::group::{GroupElement, GroupError, GroupSpec};
use crate::pairing::{Bicharacter, Cocycle, PairingError};
use crate::scalar::{Cyclotomic, Rational, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid value at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: {source}")]
    Scalar { path: String, source: ScalarError },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn schema(path: &str, message: impl Into<String>) -> IoError {
    IoError::Schema { path: path.to_string(), message: message.into() }
}

/// Parses JSON text, keeping the position of syntax errors.
pub fn parse_json(text: &str) -> Result<Value, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Output options shared by every encoder.
#[derive(Debug, Clone, Copy, Default)]
pub struct Encoder {
    /// Adds an `"approx": [re, im]` float pair to every scalar.
    pub decimal: bool,
}

impl Encoder {
    pub fn scalar(&self, c: &Cyclotomic) -> Value {
        let coeffs: Vec<Value> =
            c.coeffs().iter().map(|q| json!([q.numer().to_string(), q.denom().to_string()])).collect();
        let mut obj = Map::new();
        obj.insert("conductor".into(), json!(c.conductor()));
        obj.insert("coeffs".into(), Value::Array(coeffs));
        if self.decimal {
            let (re, im) = c.to_complex();
            obj.insert("approx".into(), json!([re, im]));
        }
        Value::Object(obj)
    }

    pub fn table(&self, table: &[Vec<Cyclotomic>]) -> Value {
        Value::Array(table.iter().map(|row| Value::Array(row.iter().map(|c| self.scalar(c)).collect())).collect())
    }

    pub fn bicharacter(&self, beta: &Bicharacter) -> Value {
        json!({"group": beta.group(), "kind": "bicharacter", "table": self.table(beta.table())})
    }

    pub fn cocycle(&self, tau: &Cocycle) -> Value {
        json!({"group": tau.group(), "kind": "cocycle", "table": self.table(tau.table())})
    }

    pub fn algebra(&self, a: &GradedAlgebra) -> Value {
        let basis: Vec<Value> = (0..a.dim()).map(|i| json!({"label": a.labels()[i], "degree": a.degree(i)})).collect();
        let mut products = Map::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let entry = a.product(i, j);
                if !entry.is_empty() {
                    let terms = entry.iter().map(|(k, c)| json!([k, self.scalar(c)])).collect();
                    products.insert(format!("{i},{j}"), Value::Array(terms));
                }
            }
        }
        json!({
            "group": a.group(),
            "conductor": a.conductor(),
            "basis": basis,
            "unit": a.unit().0.iter().map(|c| self.scalar(c)).collect::<Vec<_>>(),
            "products": products,
        })
    }
}

fn as_u32(v: &Value, path: &str) -> Result<u32, IoError> {
    v.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn parse_bigint(v: &Value, path: &str) -> Result<BigInt, IoError> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| schema(path, format!("not an integer: {s:?}"))),
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| schema(path, "expected an integer")),
        _ => schema_err(path, "expected an integer or decimal string"),
    }
}

fn schema_err<T>(path: &str, message: &str) -> Result<T, IoError> {
    Err(schema(path, message))
}

fn parse_rational_str(s: &str, path: &str) -> Result<Rational, IoError> {
    let bad = || schema(path, format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(IoError::Scalar { path: path.into(), source: ScalarError::DivisionByZero });
    }
    Ok(Rational::new(num, den))
}

pub fn scalar_from_json(v: &Value) -> Result<Cyclotomic, IoError> {
    scalar_at(v, "$")
}

fn scalar_at(v: &Value, path: &str) -> Result<Cyclotomic, IoError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Cyclotomic::from_integer)
            .ok_or_else(|| schema(path, "numeric scalars must be integers; use \"p/q\" for rationals")),
        Value::String(s) => parse_rational_str(s, path).map(Cyclotomic::from_rational),
        Value::Object(obj) => {
            if let Some(z) = obj.get("zeta") {
                let pair = z.as_array().filter(|a| a.len() == 2).ok_or_else(|| schema(path, "zeta must be [m, k]"))?;
                let m = as_u32(&pair[0], &format!("{path}.zeta[0]"))?;
                let k = pair[1].as_i64().ok_or_else(|| schema(&format!("{path}.zeta[1]"), "expected an integer"))?;
                if m == 0 {
                    return Err(IoError::Scalar { path: path.into(), source: ScalarError::InvalidConductor });
                }
                return Ok(Cyclotomic::zeta(m, k));
            }
            let m = as_u32(obj.get("conductor").ok_or_else(|| schema(path, "missing \"conductor\""))?, path)?;
            let coeffs =
                obj.get("coeffs").and_then(Value::as_array).ok_or_else(|| schema(path, "missing \"coeffs\" array"))?;
            let mut qs = Vec::with_capacity(coeffs.len());
            for (i, c) in coeffs.iter().enumerate() {
                let p = format!("{path}.coeffs[{i}]");
                let q = match c {
                    Value::Array(nd) if nd.len() == 2 => {
                        let (num, den) = (parse_bigint(&nd[0], &p)?, parse_bigint(&nd[1], &p)?);
                        if den == BigInt::from(0) {
                            return Err(IoError::Scalar { path: p, source: ScalarError::DivisionByZero });
                        }
                        Rational::new(num, den)
                    }
                    Value::String(s) => parse_rational_str(s, &p)?,
                    Value::Number(_) => Rational::from_integer(parse_bigint(c, &p)?),
                    _ => return schema_err(&p, "expected [\"num\", \"den\"]"),
                };
                qs.push(q);
            }
            Cyclotomic::from_coeffs(m, qs).map_err(|source| IoError::Scalar { path: path.into(), source })
        }
        _ => schema_err(path, "expected a scalar"),
    }
}

fn group_at(v: Option<&Value>, path: &str) -> Result<GroupSpec, IoError> {
    let v = v.ok_or_else(|| schema(path, "missing \"group\""))?;
    serde_json::from_value(v.clone()).map_err(|e| schema(path, e.to_string()))
}

fn table_at(v: &Value, path: &str) -> Result<Vec<Vec<Cyclotomic>>, IoError> {
    let rows = v.as_array().ok_or_else(|| schema(path, "expected an array of rows"))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let p = format!("{path}[{i}]");
            row.as_array()
                .ok_or_else(|| schema(&p, "expected a row array"))?
                .iter()
                .enumerate()
                .map(|(j, c)| scalar_at(c, &format!("{p}[{j}]")))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pairing {
    Bicharacter(Bicharacter),
    Cocycle(Cocycle),
}

pub fn pairing_from_json(v: &Value) -> Result<Pairing, IoError> {
    let obj = v.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    let group = group_at(obj.get("group"), "$.group")?;
    let kind = obj.get("kind").and_then(Value::as_str).unwrap_or("bicharacter");
    match (kind, obj.get("table"), obj.get("generators")) {
        ("bicharacter", Some(t), None) => {
            Ok(Pairing::Bicharacter(Bicharacter::from_table(group, table_at(t, "$.table")?)?))
        }
        ("bicharacter", None, Some(g)) => {
            Ok(Pairing::Bicharacter(Bicharacter::from_generators(group, &table_at(g, "$.generators")?)?))
        }
        ("cocycle", Some(t), None) => Ok(Pairing::Cocycle(Cocycle::from_table(group, table_at(t, "$.table")?)?)),
        ("bicharacter" | "cocycle", _, _) => {
            schema_err("$", "give exactly one of \"table\" or \"generators\" (generators only for bicharacters)")
        }
        (other, _, _) => Err(schema("$.kind", format!("unknown kind {other:?}"))),
    }
}

pub fn algebra_from_json(v: &Value) -> Result<GradedAlgebra, IoError> {
    let obj = v.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    let group = group_at(obj.get("group"), "$.group")?;
    let basis = obj.get("basis").and_then(Value::as_array).ok_or_else(|| schema("$.basis", "expected an array"))?;
    let dim = basis.len();
    let mut labels = Vec::with_capacity(dim);
    let mut degrees = Vec::with_capacity(dim);
    for (i, b) in basis.iter().enumerate() {
        let p = format!("$.basis[{i}]");
        let label = b.get("label").and_then(Value::as_str).ok_or_else(|| schema(&p, "missing \"label\""))?;
        let degree: GroupElement = serde_json::from_value(b.get("degree").cloned().unwrap_or(Value::Null))
            .map_err(|e| schema(&format!("{p}.degree"), e.to_string()))?;
        labels.push(label.to_string());
        degrees.push(degree);
    }
    let unit = obj
        .get("unit")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("$.unit", "expected an array"))?
        .iter()
        .enumerate()
        .map(|(i, c)| scalar_at(c, &format!("$.unit[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let mut products: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); dim]; dim];
    let entries = obj
        .get("products")
        .and_then(Value::as_object)
        .ok_or_else(|| schema("$.products", "expected an object keyed by \"i,j\""))?;
    for (key, terms) in entries {
        let p = format!("$.products[{key:?}]");
        let (i, j) = key
            .split_once(',')
            .and_then(|(i, j)| Some((i.trim().parse::<usize>().ok()?, j.trim().parse::<usize>().ok()?)))
            .filter(|&(i, j)| i < dim && j < dim)
            .ok_or_else(|| schema(&p, format!("key must be \"i,j\" with indices below {dim}")))?;
        let terms = terms.as_array().ok_or_else(|| schema(&p, "expected [[k, scalar], ...]"))?;
        for (t, term) in terms.iter().enumerate() {
            let tp = format!("{p}[{t}]");
            let pair = term.as_array().filter(|a| a.len() == 2).ok_or_else(|| schema(&tp, "expected [k, scalar]"))?;
            let k = pair[0].as_u64().map(|k| k as usize).filter(|&k| k < dim);
            let k = k.ok_or_else(|| schema(&tp, format!("basis index must be below {dim}")))?;
            products[i][j].push((k, scalar_at(&pair[1], &tp)?));
        }
    }
    let algebra = GradedAlgebra::new(group, labels, degrees, products, unit)?;
    if let Some(m) = obj.get("conductor") {
        let m = as_u32(m, "$.conductor")?;
        // Q(zeta_m) = Q(zeta_2m) for odd m.
        let field = if m % 2 == 1 { 2 * m } else { m };
        if m == 0 || field % algebra.conductor() != 0 {
            return Err(schema(
                "$.conductor",
                format!("structure constants need conductor {}, not contained in Q(zeta_{m})", algebra.conductor()),
            ));
        }
    }
    Ok(algebra)
}
