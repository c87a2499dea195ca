//! Versioned JSON serialization of IRs — the contract between pipeline
//! stages. Numbers serialize as canonical text so files are byte-stable.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::types::DeckIR;

pub const IR_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct IrDocument {
    ir_version: u32,
    deck: DeckIR,
}

#[derive(Debug, Error)]
pub enum IrJsonError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported ir_version {found} (expected {expected})")]
    Version { found: u32, expected: u32 },
}

/// Serializes an IR to its versioned JSON document.
pub fn to_json(ir: &DeckIR) -> String {
    serde_json::to_string(&IrDocument { ir_version: IR_VERSION, deck: ir.clone() })
        .expect("IR serializes")
}

/// Pretty variant for files meant to be read by people.
pub fn to_json_pretty(ir: &DeckIR) -> String {
    serde_json::to_string_pretty(&IrDocument { ir_version: IR_VERSION, deck: ir.clone() })
        .expect("IR serializes")
}

/// Parses a versioned IR document, rejecting unknown versions.
pub fn from_json(text: &str) -> Result<DeckIR, IrJsonError> {
    let doc: IrDocument = serde_json::from_str(text)?;
    if doc.ir_version != IR_VERSION {
        return Err(IrJsonError::Version { found: doc.ir_version, expected: IR_VERSION });
    }
    Ok(doc.deck)
}
