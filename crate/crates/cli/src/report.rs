use serde::Serialize;
use serde_json::Value;
use tropfw_core::rational::{format_rational, format_vector};
use tropfw_core::Rational;

#[derive(Debug, Default, Serialize)]
pub struct Flags {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub essential: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unique: Option<bool>,
    /// `found`, `none` or `unknown`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// The JSON document every structured command prints. Numbers that come out
/// of the geometry are rational strings; counts and dimensions are integers.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the input file, or of the canonical parameter JSON for
    /// commands without an input file.
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub affine_dim: Option<i64>,
    pub flags: Flags,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    /// Wall-clock microseconds, present only with `--timing`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str, input_digest: String) -> Self {
        Self {
            command: command.to_string(),
            input_digest,
            d: None,
            vertices: None,
            affine_dim: None,
            flags: Flags::default(),
            details: None,
            timing_us: None,
        }
    }

    pub fn with_d(mut self, d: &Rational) -> Self {
        self.d = Some(format_rational(d));
        self
    }

    pub fn with_vertices(mut self, vertices: &[Vec<Rational>], affine_dim: i64) -> Self {
        self.vertices = Some(vertices.iter().map(|v| format_vector(v)).collect());
        self.affine_dim = Some(affine_dim);
        self
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }
}
