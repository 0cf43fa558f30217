//! The JSON report envelope emitted by the command-line tool. The
//! `results` block is deterministic for fixed input and flags; timing
//! lives outside it.

use crate::homology::HomologySummary;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct ReportEnvelope {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// SHA-256 of the primary input file, when there is one
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub results: Value,
    pub runtime_ms: u128,
}

impl ReportEnvelope {
    pub fn new(command: &str, input: Option<&[u8]>, results: Value, runtime_ms: u128) -> Self {
        ReportEnvelope {
            tool: "macx",
            version: TOOL_VERSION,
            command: command.to_string(),
            input_digest: input.map(|bytes| {
                let mut h = Sha256::new();
                h.update(bytes);
                format!("sha256:{:x}", h.finalize())
            }),
            results,
            runtime_ms,
        }
    }
}

/// The {degree, rank, torsion} array form of a homology summary.
pub fn homology_json(h: &HomologySummary) -> Value {
    let rows: Vec<Value> = (0..h.groups.len())
        .map(|i| {
            let d = h.min_degree + i as i64;
            serde_json::json!({
                "degree": d,
                "rank": h.groups[i].rank,
                "torsion": h.groups[i].torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    Value::Array(rows)
}
