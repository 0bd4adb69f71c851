//! Structural validation of report documents.

use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("report schema violation at {path}: {message}")]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

fn err(path: impl Into<String>, message: impl Into<String>) -> SchemaError {
    SchemaError {
        path: path.into(),
        message: message.into(),
    }
}

const PROVENANCES: [&str; 3] = ["PAPER", "TRIVIAL", "DERIVED"];
const STATUSES: [&str; 3] = ["PASS", "FAIL", "EVIDENCE"];

fn tag(v: &Value, key: &str, allowed: &[&str], path: &str) -> Result<String, SchemaError> {
    let s = v
        .get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| err(path, format!("missing \"{key}\"")))?;
    if !allowed.contains(&s) {
        return Err(err(path, format!("\"{key}\" = {s:?} is not one of {allowed:?}")));
    }
    Ok(s.to_string())
}

fn require<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value, SchemaError> {
    v.get(key).ok_or_else(|| err(path, format!("missing \"{key}\"")))
}

/// Checks a report against the published layout: every check and item has a
/// name, expected and computed values, a provenance tag and a status, and the
/// summary counts agree with the check statuses.
pub fn validate_report(doc: &Value) -> Result<(), SchemaError> {
    let checks = require(doc, "checks", "$")?
        .as_array()
        .ok_or_else(|| err("$.checks", "not an array"))?;
    let (mut pass, mut fail, mut evidence) = (0u64, 0u64, 0u64);
    for (i, c) in checks.iter().enumerate() {
        let path = format!("$.checks[{i}]");
        require(c, "name", &path)?
            .as_str()
            .ok_or_else(|| err(&path, "\"name\" is not a string"))?;
        require(c, "expected", &path)?;
        require(c, "computed", &path)?;
        tag(c, "provenance", &PROVENANCES, &path)?;
        let status = tag(c, "status", &STATUSES, &path)?;
        require(c, "ms", &path)?
            .as_u64()
            .ok_or_else(|| err(&path, "\"ms\" is not a nonnegative integer"))?;
        match status.as_str() {
            "PASS" => pass += 1,
            "FAIL" => fail += 1,
            _ => evidence += 1,
        }
        if let Some(items) = c.get("items") {
            let items = items
                .as_array()
                .ok_or_else(|| err(&path, "\"items\" is not an array"))?;
            for (j, it) in items.iter().enumerate() {
                let ipath = format!("{path}.items[{j}]");
                require(it, "label", &ipath)?;
                require(it, "expected", &ipath)?;
                require(it, "computed", &ipath)?;
                tag(it, "provenance", &PROVENANCES, &ipath)?;
                tag(it, "status", &STATUSES, &ipath)?;
            }
        }
    }
    let summary = require(doc, "summary", "$")?;
    for (key, want) in [("pass", pass), ("fail", fail), ("evidence", evidence)] {
        let got = require(summary, key, "$.summary")?
            .as_u64()
            .ok_or_else(|| err("$.summary", format!("\"{key}\" is not an integer")))?;
        if got != want {
            return Err(err(
                "$.summary",
                format!("\"{key}\" = {got} but {want} checks have that status"),
            ));
        }
    }
    Ok(())
}
