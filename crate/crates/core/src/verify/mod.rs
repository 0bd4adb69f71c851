//! Named verification checks and their JSON report.

mod checks;
mod schema;

use std::path::Path;
use std::thread;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::pencil::{Pencil, PencilError};

pub use checks::{
    check_bott_suite, check_brauer, check_c1c2, check_curve_degree_genus, check_example_pencil, check_hilb_curve,
    check_resolution_ranks, check_sym2_identities, check_x_invariants, check_y_degree, x_invariants,
};
pub use schema::{validate_report, SchemaError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Evidence,
    Fail,
}

/// One compared quantity inside a check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Item {
    pub label: String,
    pub expected: Value,
    pub computed: Value,
    pub provenance: Provenance,
    pub status: Status,
}

impl Item {
    /// PASS on exact equality, FAIL otherwise.
    pub fn exact(label: &str, expected: impl Serialize, computed: impl Serialize, provenance: Provenance) -> Self {
        Self::compare(label, expected, computed, provenance, Status::Pass)
    }

    /// EVIDENCE on equality, FAIL otherwise.
    pub fn evidence(label: &str, expected: impl Serialize, computed: impl Serialize, provenance: Provenance) -> Self {
        Self::compare(label, expected, computed, provenance, Status::Evidence)
    }

    /// A step that could not be computed.
    pub fn error(label: &str, expected: impl Serialize, err: impl std::fmt::Display, provenance: Provenance) -> Self {
        Self {
            label: label.into(),
            expected: to_value(expected),
            computed: Value::String(format!("error: {err}")),
            provenance,
            status: Status::Fail,
        }
    }

    fn compare(
        label: &str,
        expected: impl Serialize,
        computed: impl Serialize,
        provenance: Provenance,
        ok: Status,
    ) -> Self {
        let expected = to_value(expected);
        let computed = to_value(computed);
        let status = if expected == computed { ok } else { Status::Fail };
        Self {
            label: label.into(),
            expected,
            computed,
            provenance,
            status,
        }
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable value")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    /// Expected values keyed by item label.
    pub expected: Value,
    /// The strongest provenance among the items (PAPER over DERIVED over TRIVIAL).
    pub provenance: Provenance,
    /// Computed values keyed by item label.
    pub computed: Value,
    pub status: Status,
    pub ms: u64,
    pub items: Vec<Item>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckResult {
    pub fn from_items(name: &str, items: Vec<Item>, notes: Vec<String>) -> Self {
        let status = items.iter().map(|i| i.status).max().unwrap_or(Status::Pass);
        let provenance = if items.iter().any(|i| i.provenance == Provenance::Paper) {
            Provenance::Paper
        } else if items.iter().any(|i| i.provenance == Provenance::Derived) {
            Provenance::Derived
        } else {
            Provenance::Trivial
        };
        let mut expected = Map::new();
        let mut computed = Map::new();
        for i in &items {
            expected.insert(i.label.clone(), i.expected.clone());
            computed.insert(i.label.clone(), i.computed.clone());
        }
        Self {
            name: name.into(),
            expected: Value::Object(expected),
            provenance,
            computed: Value::Object(computed),
            status,
            ms: 0,
            items,
            notes,
        }
    }

    pub fn item(&self, label: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.label == label)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub evidence: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn from_checks(checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Evidence => summary.evidence += 1,
            }
        }
        Self { checks, summary }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> Value {
        to_value(self)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("unknown check name {0:?}")]
    UnknownCheckName(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Pencil(#[from] PencilError),
}

/// Inputs shared by the checks.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub pencil: Pencil,
    pub base_prime: u64,
    pub plane_primes: Vec<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            pencil: Pencil::example(),
            base_prime: 31,
            plane_primes: vec![31, 101],
        }
    }
}

impl VerifyOptions {
    /// Options with the pencil read from a JSON file.
    pub fn with_input(path: &Path) -> Result<Self, VerifyError> {
        let text = std::fs::read_to_string(path).map_err(|e| VerifyError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Ok(Self {
            pencil: Pencil::from_json_str(&text)?,
            ..Self::default()
        })
    }
}

type CheckFn = fn(&VerifyOptions) -> CheckResult;

/// The registry, in report order.
pub const CHECK_NAMES: [&str; 10] = [
    "check_c1c2",
    "check_curve_degree_genus",
    "check_brauer",
    "check_X_invariants",
    "check_Y_degree",
    "check_sym2_identities",
    "check_hilb_curve",
    "check_resolution_ranks",
    "check_bott_suite",
    "check_example_pencil",
];

fn lookup(name: &str) -> Option<CheckFn> {
    Some(match name {
        "check_c1c2" => |_| check_c1c2(),
        "check_curve_degree_genus" => |_| check_curve_degree_genus(),
        "check_brauer" => |_| check_brauer(),
        "check_X_invariants" => |_| check_x_invariants(),
        "check_Y_degree" => check_y_degree,
        "check_sym2_identities" => |_| check_sym2_identities(),
        "check_hilb_curve" => |_| check_hilb_curve(),
        "check_resolution_ranks" => |_| check_resolution_ranks(),
        "check_bott_suite" => |_| check_bott_suite(),
        "check_example_pencil" => check_example_pencil,
        _ => return None,
    })
}

/// Runs the selected checks (all when `selection` is `None`) concurrently and
/// reports them in registry order of the selection.
pub fn run_all(selection: Option<&[String]>, options: &VerifyOptions) -> Result<Report, VerifyError> {
    let names: Vec<String> = match selection {
        None => CHECK_NAMES.iter().map(|s| s.to_string()).collect(),
        Some(sel) => sel.to_vec(),
    };
    let fns: Vec<(String, CheckFn)> = names
        .into_iter()
        .map(|n| {
            lookup(&n)
                .map(|f| (n.clone(), f))
                .ok_or(VerifyError::UnknownCheckName(n))
        })
        .collect::<Result<_, _>>()?;
    let results = thread::scope(|s| {
        let handles: Vec<_> = fns
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let mut r = f(options);
                    r.ms = start.elapsed().as_millis() as u64;
                    r
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    });
    Ok(Report::from_checks(results))
}
