//! Canonical JSON and pretty text for polynomials, coefficient tables and
//! reports.
//!
//! A Laurent polynomial is a list of `[coefficient, deg_q, deg_t]` triples in
//! ascending `(deg_q, deg_t)` order. Coefficients are JSON integers when they
//! fit in 64 bits and decimal strings otherwise; the parser accepts both. A
//! rational function is `{"num": [...], "den": [...]}` in lowest terms, and a
//! z-polynomial is `{"n": n, "terms": [{"exp": [...], "num": [...], "den": [...]}]}`
//! in ascending exponent order.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::combinatorics::Composition;
use crate::exact_algebra::{LaurentQT, RatFuncQT, ZPoly};
use crate::reduction::{PsiTable, Reduction};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SerializeError {
    #[error("malformed JSON: {0}")]
    Malformed(String),
}

fn bad(what: impl Into<String>) -> SerializeError {
    SerializeError::Malformed(what.into())
}

fn int_to_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt, SerializeError> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad(format!("non-integer coefficient {n}"))),
        Value::String(s) => BigInt::from_str(s).map_err(|_| bad(format!("bad integer string {s:?}"))),
        other => Err(bad(format!("coefficient {other}"))),
    }
}

pub fn laurent_to_json(p: &LaurentQT) -> Value {
    Value::Array(p.terms().map(|(&(a, b), c)| json!([int_to_json(c), a, b])).collect())
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentQT, SerializeError> {
    let terms = v.as_array().ok_or_else(|| bad("expected a list of terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for term in terms {
        let [c, a, b] = term.as_array().map(Vec::as_slice).unwrap_or_default() else {
            return Err(bad(format!("term {term} is not a triple")));
        };
        let a = a.as_u64().and_then(|a| u32::try_from(a).ok()).ok_or_else(|| bad("deg_q must be a small nonnegative integer"))?;
        let b = b.as_i64().and_then(|b| i32::try_from(b).ok()).ok_or_else(|| bad("deg_t must be a small integer"))?;
        out.push(((a, b), int_from_json(c)?));
    }
    Ok(LaurentQT::from_terms(out))
}

fn ratfunc_fields(c: &RatFuncQT, obj: &mut Map<String, Value>) {
    obj.insert("num".into(), laurent_to_json(c.numer()));
    obj.insert("den".into(), laurent_to_json(c.denom()));
}

pub fn ratfunc_to_json(c: &RatFuncQT) -> Value {
    let mut obj = Map::new();
    ratfunc_fields(c, &mut obj);
    Value::Object(obj)
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFuncQT, SerializeError> {
    let num = laurent_from_json(v.get("num").ok_or_else(|| bad("missing num"))?)?;
    let den = laurent_from_json(v.get("den").ok_or_else(|| bad("missing den"))?)?;
    RatFuncQT::new(num, den).map_err(|e| bad(e.to_string()))
}

pub fn zpoly_to_json(f: &ZPoly) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(e, c)| {
            let mut obj = Map::new();
            obj.insert("exp".into(), json!(e));
            ratfunc_fields(c, &mut obj);
            Value::Object(obj)
        })
        .collect();
    json!({ "n": f.n(), "terms": terms })
}

fn parts_from_json(v: &Value) -> Result<Vec<u32>, SerializeError> {
    v.as_array()
        .ok_or_else(|| bad("expected a list of exponents"))?
        .iter()
        .map(|x| x.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(|| bad(format!("bad part {x}"))))
        .collect()
}

pub fn zpoly_from_json(v: &Value) -> Result<ZPoly, SerializeError> {
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))? as usize;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
    let mut out = ZPoly::zero(n);
    for term in terms {
        let exp = parts_from_json(term.get("exp").ok_or_else(|| bad("missing exp"))?)?;
        if exp.len() != n {
            return Err(bad(format!("exponent of length {} in {n} variables", exp.len())));
        }
        out.add_term(exp, &ratfunc_from_json(term)?);
    }
    Ok(out)
}

pub fn psi_table_to_json(table: &PsiTable) -> Value {
    let entries: Vec<Value> = table
        .entries
        .iter()
        .map(|((nu, mu), c)| {
            let mut obj = Map::new();
            obj.insert("nu".into(), json!(nu.parts()));
            obj.insert("mu".into(), json!(mu.parts()));
            ratfunc_fields(c, &mut obj);
            Value::Object(obj)
        })
        .collect();
    json!({
        "delta": table.delta.parts(),
        "epsilon": table.epsilon.parts(),
        "m": table.m,
        "p": table.p,
        "common_factor": ratfunc_to_json(&table.common_factor),
        "entries": entries,
    })
}

pub fn psi_table_from_json(v: &Value) -> Result<PsiTable, SerializeError> {
    let field = |k: &str| v.get(k).ok_or_else(|| bad(format!("missing {k}")));
    let small = |k: &str| -> Result<u32, SerializeError> {
        field(k)?.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(|| bad(format!("bad {k}")))
    };
    let mut entries = BTreeMap::new();
    for e in field("entries")?.as_array().ok_or_else(|| bad("entries must be a list"))? {
        let nu = Composition::from(parts_from_json(e.get("nu").ok_or_else(|| bad("missing nu"))?)?);
        let mu = Composition::from(parts_from_json(e.get("mu").ok_or_else(|| bad("missing mu"))?)?);
        entries.insert((nu, mu), ratfunc_from_json(e)?);
    }
    Ok(PsiTable {
        delta: parts_from_json(field("delta")?)?.into(),
        epsilon: parts_from_json(field("epsilon")?)?.into(),
        m: small("m")?,
        p: small("p")?,
        entries,
        common_factor: ratfunc_from_json(field("common_factor")?)?,
    })
}

/// `{"(1,1)": "1-t", ...}`: each target member with its coefficient in pretty
/// form.
pub fn reduction_to_json(red: &Reduction) -> Value {
    Value::Object(red.entries.iter().map(|(nu, c)| (nu.to_string(), json!(c.to_string()))).collect())
}

/// One line per entry: `ψ(ν, μ) = value`, in table order.
pub fn psi_table_pretty(table: &PsiTable) -> String {
    let mut out = format!(
        "sector {} -> {} at q = t^-{}, pole order {}\ncommon factor d(t) = {}\n",
        table.delta, table.epsilon, table.m, table.p, table.common_factor
    );
    for ((nu, mu), c) in &table.entries {
        out.push_str(&format!("psi({nu}, {mu}) = {c}\n"));
    }
    out
}

/// Serializes `v` without insignificant whitespace; key order is that of the
/// value (sorted for every object built here).
pub fn to_canonical_string(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Engine;
    use crate::reduction::psi_table;

    #[test]
    fn pinned_schema() {
        let one = ZPoly::one(2);
        let s = to_canonical_string(&zpoly_to_json(&one));
        assert_eq!(s, r#"{"n":2,"terms":[{"den":[[1,0,0]],"exp":[0,0],"num":[[1,0,0]]}]}"#);
        assert_eq!(zpoly_from_json(&serde_json::from_str(&s).unwrap()).unwrap(), one);
    }

    #[test]
    fn round_trips() {
        let engine = Engine::new();
        for mu in [&[0u32, 2][..], &[1, 0, 2], &[2, 1, 0]] {
            let f = engine.f(mu).unwrap();
            let back = zpoly_from_json(&zpoly_to_json(&f)).unwrap();
            assert_eq!(back, *f);
        }
        let table = psi_table(&engine, &[0, 1, 2], 2, 1).unwrap();
        let text = to_canonical_string(&psi_table_to_json(&table));
        let back = psi_table_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, table);
        let big = LaurentQT::from_terms([((0, -3), BigInt::from(i64::MAX) * 4), ((1, 2), BigInt::from(-7))]);
        assert_eq!(laurent_from_json(&laurent_to_json(&big)).unwrap(), big);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(laurent_from_json(&json!([[1, 0]])).is_err());
        assert!(zpoly_from_json(&json!({"n": 2, "terms": [{"exp": [1], "num": [], "den": [[1,0,0]]}]})).is_err());
        assert!(ratfunc_from_json(&json!({"num": [[1,0,0]], "den": []})).is_err());
    }
}
