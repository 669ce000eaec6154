//! JSON forms of partitions, expansions, straightenings, and vertex data.
//!
//! Expansions are arrays of `{"coeff": c, "partition": [..]}` sorted by
//! partition, lexicographically decreasing.

use schur_vertex_core::oracle::MonomialPolynomial;
use schur_vertex_core::vertex::Couple;
use schur_vertex_core::{
    Cell, InvolutionReport, LemmaTerm, Partition, RawTerm, SchurExpansion, Sign, Straightening,
    VertexSeries,
};
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("expected {expected} at {path}")]
    Shape { path: String, expected: &'static str },
    #[error("invalid partition at {path}: {source}")]
    Partition {
        path: String,
        #[source]
        source: schur_vertex_core::Error,
    },
    #[error("duplicate partition {partition} in expansion")]
    Duplicate { partition: String },
}

fn shape(path: &str, expected: &'static str) -> JsonError {
    JsonError::Shape {
        path: path.to_string(),
        expected,
    }
}

pub fn partition_to_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

pub fn partition_from_json(v: &Value) -> Result<Partition, JsonError> {
    partition_at(v, "$")
}

fn partition_at(v: &Value, path: &str) -> Result<Partition, JsonError> {
    let items = v.as_array().ok_or_else(|| shape(path, "an array of integers"))?;
    let parts = items
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| shape(path, "an array of integers")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::from_signed(&parts).map_err(|source| JsonError::Partition {
        path: path.to_string(),
        source,
    })
}

pub fn expansion_to_json(e: &SchurExpansion) -> Value {
    let terms: Vec<Value> = e
        .iter()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(p, c)| json!({"coeff": c, "partition": partition_to_json(p)}))
        .collect();
    Value::Array(terms)
}

/// Accepts terms in any order; zero coefficients are dropped.
pub fn expansion_from_json(v: &Value) -> Result<SchurExpansion, JsonError> {
    let items = v.as_array().ok_or_else(|| shape("$", "an array of terms"))?;
    let mut out = SchurExpansion::zero();
    for (i, item) in items.iter().enumerate() {
        let path = format!("$[{}]", i);
        let coeff = item
            .get("coeff")
            .and_then(Value::as_i64)
            .ok_or_else(|| shape(&path, "an integer \"coeff\""))?;
        let partition = partition_at(
            item.get("partition")
                .ok_or_else(|| shape(&path, "a \"partition\" field"))?,
            &format!("{}.partition", path),
        )?;
        if out.coefficient(&partition) != 0 {
            return Err(JsonError::Duplicate {
                partition: partition.to_string(),
            });
        }
        out.add_term(partition, coeff);
    }
    Ok(out)
}

pub fn sign_to_json(s: Sign) -> Value {
    json!(s.to_i64())
}

pub fn straightening_to_json(s: &Straightening) -> Value {
    match s {
        Straightening::Zero => json!({"zero": true}),
        Straightening::Signed { sign, partition } => {
            json!({"sign": sign_to_json(*sign), "partition": partition_to_json(partition)})
        }
    }
}

pub fn straightening_from_json(v: &Value) -> Result<Straightening, JsonError> {
    if v.get("zero").and_then(Value::as_bool) == Some(true) {
        return Ok(Straightening::Zero);
    }
    let sign = match v.get("sign").and_then(Value::as_i64) {
        Some(1) => Sign::Plus,
        Some(-1) => Sign::Minus,
        _ => return Err(shape("$.sign", "1 or -1")),
    };
    let partition = partition_at(
        v.get("partition")
            .ok_or_else(|| shape("$", "a \"partition\" field"))?,
        "$.partition",
    )?;
    Ok(Straightening::Signed { sign, partition })
}

pub fn cell_to_json(c: Cell) -> Value {
    json!([c.row, c.column])
}

pub fn series_to_json(s: &VertexSeries) -> Value {
    let (n_min, n_max) = s.window();
    let coefficients: Vec<Value> = s
        .iter()
        .map(|(n, e)| json!({"n": n, "terms": expansion_to_json(e)}))
        .collect();
    json!({
        "alpha": partition_to_json(s.alpha()),
        "n_min": n_min,
        "n_max": n_max,
        "coefficients": coefficients,
    })
}

pub fn raw_term_to_json(t: &RawTerm) -> Value {
    json!({
        "j": t.j,
        "lambda": partition_to_json(&t.lambda),
        "mu": partition_to_json(&t.mu),
        "n": t.n,
        "sign": sign_to_json(t.sign),
    })
}

pub fn lemma_term_to_json(t: &LemmaTerm) -> Value {
    json!({
        "k": t.k,
        "n": t.n,
        "sign": sign_to_json(t.sign),
        "mu": partition_to_json(&t.mu),
        "ht": t.ht,
    })
}

fn couple_to_json(c: &Couple) -> Value {
    json!({
        "first": raw_term_to_json(&c.first),
        "second": raw_term_to_json(&c.second),
        "corner": cell_to_json(c.corner),
    })
}

pub fn involution_to_json(r: &InvolutionReport) -> Value {
    let mut m = Map::new();
    m.insert("alpha".into(), partition_to_json(&r.alpha));
    m.insert("n".into(), json!(r.n));
    m.insert(
        "couples".into(),
        Value::Array(r.couples.iter().map(couple_to_json).collect()),
    );
    m.insert(
        "survivors".into(),
        Value::Array(r.survivors.iter().map(raw_term_to_json).collect()),
    );
    m.insert(
        "lemma".into(),
        r.lemma.as_ref().map(lemma_term_to_json).unwrap_or(Value::Null),
    );
    Value::Object(m)
}

/// Terms as `[[exponents..], coeff]`, graded-lex decreasing.
pub fn polynomial_to_json(p: &MonomialPolynomial) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(m, c)| json!([m.exponents(), c]))
        .collect();
    json!({"positives": p.positives(), "arity": p.arity(), "terms": terms})
}
