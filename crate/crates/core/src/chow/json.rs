//! JSON form of rings and classes.
//!
//! ```text
//! {"ring": {"type": "grassmannian", "k": 3, "n": 5},
//!  "terms": [{"partition": [2, 1], "h": 0, "coeff": "3/2"}]}
//! ```
//!
//! A projective bundle ring is `{"type": "proj_bundle", "base": …, "rank": r,
//! "chern": [terms_0, …, terms_r]}` with each `terms_i` a term list in the base.

use std::sync::Arc;

use serde_json::{json, Value};

use super::ring::{RingClass, RingDescriptor, RingRef};
use super::ChowError;
use crate::algebra::ring::{parse_rational, rational_to_string};
use crate::symfunc::Partition;

fn terms_to_json(c: &RingClass) -> Value {
    Value::Array(
        c.terms()
            .map(|(m, q)| {
                json!({
                    "partition": m.partition.parts(),
                    "h": m.h,
                    "coeff": rational_to_string(q),
                })
            })
            .collect(),
    )
}

pub fn descriptor_to_json(ring: &RingDescriptor) -> Value {
    match ring {
        RingDescriptor::Point => json!({"type": "point"}),
        RingDescriptor::Grassmannian { k, n } => json!({"type": "grassmannian", "k": k, "n": n}),
        RingDescriptor::ProjBundle { base, rank, chern } => json!({
            "type": "proj_bundle",
            "base": descriptor_to_json(base),
            "rank": rank,
            "chern": chern.iter().map(terms_to_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn class_to_json(c: &RingClass) -> Value {
    json!({"ring": descriptor_to_json(c.ring()), "terms": terms_to_json(c)})
}

fn bad(msg: impl Into<String>) -> ChowError {
    ChowError::Json(msg.into())
}

fn get_usize(v: &Value, key: &str) -> Result<usize, ChowError> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| bad(format!("missing or non-integer \"{key}\"")))
}

fn terms_from_json(ring: &RingRef, v: &Value) -> Result<RingClass, ChowError> {
    let arr = v.as_array().ok_or_else(|| bad("\"terms\" must be an array"))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let parts: Vec<u32> = t
            .get("partition")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("term without \"partition\""))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|x| x as u32)
                    .ok_or_else(|| bad("partition entries must be integers"))
            })
            .collect::<Result<_, _>>()?;
        let partition = Partition::new(parts).map_err(|e| bad(e.to_string()))?;
        let h = t
            .get("h")
            .map_or(Ok(0), |h| h.as_u64().map(|x| x as u32).ok_or_else(|| bad("bad \"h\"")))?;
        let coeff = t
            .get("coeff")
            .and_then(Value::as_str)
            .and_then(parse_rational)
            .ok_or_else(|| bad("\"coeff\" must be a string \"p/q\""))?;
        terms.push((partition, h, coeff));
    }
    RingClass::from_terms(ring, terms)
}

pub fn descriptor_from_json(v: &Value) -> Result<RingRef, ChowError> {
    match v.get("type").and_then(Value::as_str) {
        Some("point") => Ok(Arc::new(RingDescriptor::Point)),
        Some("grassmannian") => super::grassmann_ring(get_usize(v, "k")?, get_usize(v, "n")?),
        Some("proj_bundle") => {
            let base = descriptor_from_json(v.get("base").ok_or_else(|| bad("missing \"base\""))?)?;
            let rank = get_usize(v, "rank")?;
            let chern = v
                .get("chern")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing \"chern\""))?;
            let mut total = RingClass::zero(&base);
            for c in chern {
                total = total.add(&terms_from_json(&base, c)?)?;
            }
            super::proj_bundle_ring(&base, &total, rank)
        }
        _ => Err(bad("unknown ring type")),
    }
}

pub fn class_from_json(v: &Value) -> Result<RingClass, ChowError> {
    let ring = descriptor_from_json(v.get("ring").ok_or_else(|| bad("missing \"ring\""))?)?;
    terms_from_json(&ring, v.get("terms").ok_or_else(|| bad("missing \"terms\""))?)
}
