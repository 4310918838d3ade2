//! Run reports, failures and exit codes.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use chipfas::Error;

pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_INVALID_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_PRECONDITION: u8 = 4;

/// What one command produced: a text rendering and a JSON payload that
/// carry the same numbers.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub caps_hit: Vec<String>,
}

impl Output {
    pub fn new(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            caps_hit: Vec::new(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub active: Option<Vec<usize>>,
    #[serde(skip)]
    pub caps_hit: Vec<String>,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure::with_code(EXIT_INVALID_INPUT, message)
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Failure::with_code(EXIT_PRECONDITION, message)
    }

    fn with_code(exit_code: u8, message: impl Into<String>) -> Self {
        let kind = match exit_code {
            EXIT_INVALID_INPUT => "invalid_input",
            EXIT_CAP => "resource_cap",
            EXIT_PRECONDITION => "precondition",
            _ => "internal",
        };
        Failure {
            kind,
            message: message.into(),
            exit_code,
            active: None,
            caps_hit: Vec::new(),
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::VertexOutOfRange { .. }
        | Error::UnknownArc { .. }
        | Error::ConfigurationMismatch => EXIT_INVALID_INPUT,
        Error::SizeLimit { .. } | Error::StepBudgetExceeded { .. } | Error::Overflow => EXIT_CAP,
        Error::InvariantViolation(_) => EXIT_INTERNAL,
        _ => EXIT_PRECONDITION,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let mut f = Failure::with_code(exit_code(&e), e.to_string());
        match e {
            Error::NotStable { active } => f.active = Some(active),
            Error::SizeLimit { what, .. } => f.caps_hit.push(what.to_string()),
            _ => {}
        }
        f
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    /// The command line, without the program name.
    pub command: Vec<String>,
    /// `sha256:<hex>` over the input files in argument order.
    pub input_digest: Option<String>,
    pub result: Option<Value>,
    pub error: Option<Failure>,
    pub ms: f64,
    pub caps_hit: Vec<String>,
}

pub fn digest<'a>(inputs: impl IntoIterator<Item = &'a [u8]>) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update(bytes);
    }
    format!("sha256:{}", hex::encode(h.finalize()))
}

/// `1536` -> `1.5 KiB`.
pub fn human_bytes(bytes: u128) -> String {
    const UNITS: [&str; 5] = ["B", "KiB", "MiB", "GiB", "TiB"];
    let mut value = bytes as f64;
    let mut unit = 0;
    while value >= 1024.0 && unit + 1 < UNITS.len() {
        value /= 1024.0;
        unit += 1;
    }
    if unit == 0 {
        format!("{bytes} B")
    } else {
        format!("{value:.1} {}", UNITS[unit])
    }
}
