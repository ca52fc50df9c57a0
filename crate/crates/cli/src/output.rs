//! Artifact writing. Every artifact carries the run configuration and a
//! SHA-256 of its payload; for CSV these go to a `.meta.json` sidecar (or to
//! standard error when writing to standard output).

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::config::Format;

/// What a command produced, in all three renderings.
pub struct Outcome {
    pub data: Value,
    pub text: String,
    pub csv: Vec<Vec<String>>,
    /// False when a binding check failed.
    pub passed: bool,
    pub warnings: Vec<String>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn csv_bytes(rows: &[Vec<String>]) -> io::Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for row in rows {
        w.write_record(row)?;
    }
    w.into_inner().map_err(|e| io::Error::other(e.to_string()))
}

pub fn write<C: Serialize>(format: Format, output: Option<&Path>, config: &C, outcome: &Outcome) -> io::Result<()> {
    let config = serde_json::to_value(config)?;
    let (body, meta) = match format {
        Format::Json => {
            let payload = serde_json::to_string(&outcome.data)?;
            let doc = json!({
                "tool": "inv3412",
                "version": env!("CARGO_PKG_VERSION"),
                "config": config,
                "content_sha256": sha256_hex(payload.as_bytes()),
                "data": outcome.data,
            });
            let mut s = serde_json::to_string_pretty(&doc)?;
            s.push('\n');
            (s.into_bytes(), None)
        }
        Format::Text => {
            let hash = sha256_hex(outcome.text.as_bytes());
            let s = format!(
                "{}\n# config: {}\n# content-sha256: {hash}\n",
                outcome.text.trim_end(),
                serde_json::to_string(&config)?
            );
            (s.into_bytes(), None)
        }
        Format::Csv => {
            let bytes = csv_bytes(&outcome.csv)?;
            let meta = json!({
                "tool": "inv3412",
                "version": env!("CARGO_PKG_VERSION"),
                "config": config,
                "content_sha256": sha256_hex(&bytes),
            });
            (bytes, Some(serde_json::to_string_pretty(&meta)?))
        }
    };
    match output {
        Some(path) => {
            fs::write(path, &body)?;
            if let Some(meta) = meta {
                let mut side = path.as_os_str().to_owned();
                side.push(".meta.json");
                fs::write(side, meta + "\n")?;
            }
        }
        None => {
            io::stdout().write_all(&body)?;
            if let Some(meta) = meta {
                eprintln!("{meta}");
            }
        }
    }
    Ok(())
}
