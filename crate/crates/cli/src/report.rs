use std::time::Instant;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// The envelope around every JSON result.
pub struct Report {
    command: String,
    input_digest: String,
    result: Value,
    timing_ms: f64,
}

impl Report {
    pub fn new(command: &str, input: &[u8], result: Value, start: Instant) -> Self {
        Report {
            command: command.to_string(),
            input_digest: format!("sha256:{}", hex(&Sha256::digest(input))),
            result,
            timing_ms: start.elapsed().as_secs_f64() * 1000.0,
        }
    }

    /// One line; object keys are sorted at every level.
    pub fn to_json(&self) -> String {
        json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "result": self.result,
            "timing_ms": self.timing_ms,
        })
        .to_string()
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
