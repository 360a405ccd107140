//! The JSON sample document and its strict parser.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use sha2::{Digest, Sha256};
use tropfw_core::rational::parse_vector;
use tropfw_core::{Rational, SampleMatrix};

use crate::failure::Failure;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SampleDocument {
    n: usize,
    points: Vec<Vec<String>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

/// A parsed input file together with the digest of its bytes.
#[derive(Debug)]
pub struct LoadedSample {
    pub digest: String,
    pub n: usize,
    /// Points exactly as written, before canonicalization.
    pub raw: Vec<Vec<Rational>>,
    pub labels: Option<Vec<String>>,
}

impl LoadedSample {
    pub fn matrix(&self) -> Result<SampleMatrix, Failure> {
        Ok(SampleMatrix::from_raw(&self.raw)?)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn load(path: &Path) -> Result<LoadedSample, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&bytes)
}

pub fn parse(bytes: &[u8]) -> Result<LoadedSample, Failure> {
    let doc: SampleDocument =
        serde_json::from_slice(bytes).map_err(|e| Failure::usage(format!("malformed sample document: {e}")))?;
    if doc.n < 2 {
        return Err(Failure::usage(format!("n must be at least 2, got {}", doc.n)));
    }
    if doc.points.is_empty() {
        return Err(Failure::usage("the sample has no points"));
    }
    let mut raw = Vec::with_capacity(doc.points.len());
    for (i, p) in doc.points.iter().enumerate() {
        if p.len() != doc.n {
            return Err(Failure::usage(format!("point {} has {} coordinates, expected n = {}", i + 1, p.len(), doc.n)));
        }
        raw.push(parse_vector(p).map_err(|e| Failure::usage(format!("point {}: {e}", i + 1)))?);
    }
    if let Some(labels) = &doc.labels {
        if labels.len() != raw.len() {
            return Err(Failure::usage(format!("{} labels for {} points", labels.len(), raw.len())));
        }
    }
    Ok(LoadedSample { digest: sha256_hex(bytes), n: doc.n, raw, labels: doc.labels })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_fractions_and_integers() {
        let s = parse(br#"{"n":3,"points":[["0","1/3","-2"]],"labels":["a"]}"#).unwrap();
        assert_eq!(s.raw[0][1], Rational::new(1.into(), 3.into()));
        assert_eq!(s.labels.as_deref(), Some(&["a".to_string()][..]));
    }

    #[test]
    fn rejects_decimals_zero_denominators_and_numbers() {
        for doc in [
            r#"{"n":2,"points":[["0","0.333"]]}"#,
            r#"{"n":2,"points":[["0","1/0"]]}"#,
            r#"{"n":2,"points":[[0,1]]}"#,
            r#"{"n":3,"points":[["0","1"]]}"#,
            r#"{"n":2,"points":[]}"#,
            r#"{"n":2,"points":[["0","1"]],"labels":[]}"#,
            r#"{"n":2,"points":[["0","1"]],"extra":1}"#,
        ] {
            let e = parse(doc.as_bytes()).unwrap_err();
            assert_eq!(e.code, 1, "{doc}");
        }
    }

    #[test]
    fn digest_depends_on_bytes_only() {
        let a = parse(br#"{"n":2,"points":[["0","1"]]}"#).unwrap();
        let b = parse(br#"{"n":2,"points":[["0","1"]]}"#).unwrap();
        assert_eq!(a.digest, b.digest);
        assert_eq!(a.digest.len(), 64);
    }
}
