//! Structured output: a stable, versioned envelope around results.

use crate::config::{OutputFormat, RunConfig};
use std::io::Write;

pub const SCHEMA_VERSION: u64 = 1;

pub fn envelope(config: &RunConfig, result: serde_json::Value) -> serde_json::Value {
    serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "config": config.echo_json(),
        "result": result,
    })
}

/// Print a result in the configured format; text mode takes a
/// human-oriented rendering, json mode the stable envelope. Writes ignore
/// a closed stdout (downstream pipe ended early).
pub fn emit(config: &RunConfig, text: String, result: serde_json::Value) {
    let line = match config.format {
        OutputFormat::Text => text,
        OutputFormat::Json => {
            serde_json::to_string_pretty(&envelope(config, result)).unwrap()
        }
    };
    let _ = writeln!(std::io::stdout(), "{line}");
}
