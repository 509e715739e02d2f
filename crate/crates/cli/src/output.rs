//! Output assembly: human lines plus the versioned JSON envelope.

use serde_json::{json, Value};

/// What a subcommand produced: the exit code, the human-readable lines, and
/// the JSON envelope (printed instead when `--json` is set).
pub struct CommandOutput {
    pub code: u8,
    pub human: Vec<String>,
    pub json: String,
}

/// The stable envelope `{"v": 1, "ok": ..., "result": ..., "witness": ...}`,
/// serialized on one line.
pub fn envelope(ok: bool, result: Value, witness: Value) -> String {
    json!({ "v": 1, "ok": ok, "result": result, "witness": witness }).to_string()
}
