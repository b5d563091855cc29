//! Verification campaigns: theorem checks over exhaustive and seeded
//! corpora, family reproductions, identity checks and conjecture probes.
//!
//! Every check yields a [`CheckResult`] carrying enough of its instance
//! (graph text, family spec, `t`, seed) to be replayed with [`replay`].

mod checks;
mod identities;
mod suite;

pub use checks::*;
pub use identities::*;
pub use suite::*;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::oracle::FieldSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// What a check ran on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub description: String,
    /// First 16 hex digits of the SHA-256 of the graph or ideal text.
    pub hash: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn short_hash(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))[..16].to_string()
}

impl Instance {
    pub fn of_graph(description: impl Into<String>, g: &Graph, t: Option<usize>, field: FieldSpec) -> Self {
        let text = g.to_text();
        Instance {
            description: description.into(),
            hash: short_hash(&text),
            graph: Some(text),
            ideal: None,
            family: None,
            t,
            field,
            seed: None,
        }
    }

    pub fn of_family(spec: &FamilySpec, g: &Graph, t: Option<usize>, field: FieldSpec) -> Self {
        let mut i = Instance::of_graph(spec.to_string(), g, t, field);
        i.family = Some(spec.to_string());
        i
    }

    pub fn of_seed(description: impl Into<String>, ideal_text: String, seed: u64, field: FieldSpec) -> Self {
        Instance {
            description: description.into(),
            hash: short_hash(&ideal_text),
            graph: None,
            ideal: Some(ideal_text),
            family: None,
            t: None,
            field,
            seed: Some(seed),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn graph(&self) -> Result<Graph> {
        let text = self
            .graph
            .as_deref()
            .ok_or_else(|| Error::invalid("replay", "instance carries no graph"))?;
        Graph::from_text(text)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub instance: Instance,
    pub expected: Value,
    pub computed: Value,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Conjecture probes are reported but never counted as failures.
    pub fn is_probe(&self) -> bool {
        self.id.starts_with("conjecture")
    }

    pub fn skipped_for_bound(&self) -> bool {
        self.verdict == Verdict::Skipped
            && self.note.as_deref().is_some_and(|n| n.starts_with("bound"))
    }
}

/// Outcome of a check body: expected, computed, pass.
pub(crate) type Outcome = (Value, Value, bool);

/// Runs `body`, timing it and turning bound errors into skipped verdicts.
pub(crate) fn run_check(
    id: &str,
    instance: Instance,
    body: impl FnOnce() -> Result<Outcome>,
) -> Result<CheckResult> {
    let start = Instant::now();
    let (expected, computed, verdict, note) = match body() {
        Ok((e, c, ok)) => (e, c, if ok { Verdict::Pass } else { Verdict::Fail }, None),
        Err(Error::BoundExceeded { what, size, limit }) => (
            Value::Null,
            Value::Null,
            Verdict::Skipped,
            Some(format!("bound: {what} is {size}, limit {limit}")),
        ),
        Err(e) => return Err(e),
    };
    Ok(CheckResult {
        id: id.to_string(),
        instance,
        expected,
        computed,
        verdict,
        note,
        millis: start.elapsed().as_millis() as u64,
    })
}

pub(crate) fn skipped(id: &str, instance: Instance, note: impl Into<String>) -> CheckResult {
    CheckResult {
        id: id.to_string(),
        instance,
        expected: Value::Null,
        computed: Value::Null,
        verdict: Verdict::Skipped,
        note: Some(note.into()),
        millis: 0,
    }
}
