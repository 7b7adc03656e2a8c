//! Run metadata written next to every pipeline output. It records inputs
//! and parameters only (no timestamps or host details) so that repeated
//! runs produce identical files.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunMetadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// SHA-256 of the manifest or input file.
    pub input_sha256: String,
    pub seeds: Vec<u64>,
    pub parameters: Value,
    pub outputs: Vec<String>,
}

impl RunMetadata {
    pub fn new(command: &str, input_sha256: String, parameters: Value) -> Self {
        RunMetadata {
            tool: "motifph",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input_sha256,
            seeds: Vec::new(),
            parameters,
            outputs: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("metadata serializes");
        s.push('\n');
        s
    }
}
