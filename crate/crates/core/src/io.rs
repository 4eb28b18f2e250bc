//! Facet files and report documents.
//!
//! Facet file grammar:
//!
//! ```text
//! file    := header? line*
//! header  := "vertices:" WS+ INT NL
//! line    := (INT (WS+ INT)*)? COMMENT? NL
//! COMMENT := "#" any*
//! ```
//!
//! Without a header the ground set is `[max label]`. A file with a header and no
//! facet lines is the void complex. The empty-only complex cannot be written as
//! facet lines, so it is marked by the comment line `#@ empty-face`, which other
//! readers simply skip.

use std::collections::BTreeMap;
use std::io::Read;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::certify::{nonembeddability_report, Certificate, ReportOptions};
use crate::z2::ChainComplex;
use crate::{ComplexKind, Error, FVector, FaceSet, Result, SimplicialComplex, MAX_VERTICES};

/// Marker line for the empty-only complex.
pub const EMPTY_FACE_DIRECTIVE: &str = "#@ empty-face";

pub const REPORT_SCHEMA_VERSION: u32 = 1;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses facet-file text into a canonical complex.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut declared: Option<usize> = None;
    let mut facets: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut empty_face = false;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        if raw.trim() == EMPTY_FACE_DIRECTIVE {
            empty_face = true;
            continue;
        }
        let content = raw.split('#').next().unwrap_or("");
        if let Some(rest) = content.trim_start().strip_prefix("vertices:") {
            if i != 0 {
                return Err(parse_error(lineno, "header must be the first line"));
            }
            if !rest.starts_with(|c: char| c.is_whitespace()) {
                return Err(parse_error(lineno, "expected whitespace after 'vertices:'"));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| parse_error(lineno, format!("invalid vertex count '{}'", rest.trim())))?;
            if n > MAX_VERTICES {
                return Err(Error::GroundSetTooLarge { n, max: MAX_VERTICES });
            }
            declared = Some(n);
            continue;
        }
        let mut labels = Vec::new();
        for tok in content.split_whitespace() {
            let label: i64 = tok.parse().map_err(|_| parse_error(lineno, format!("invalid vertex label '{tok}'")))?;
            if label <= 0 {
                return Err(parse_error(lineno, format!("vertex labels must be positive, got {label}")));
            }
            if label as u64 > MAX_VERTICES as u64 {
                return Err(Error::GroundSetTooLarge { n: label as usize, max: MAX_VERTICES });
            }
            labels.push(label as usize);
        }
        if !labels.is_empty() {
            facets.push((lineno, labels));
        }
    }

    if declared.is_none() && facets.is_empty() && !empty_face {
        return Err(Error::EmptyInput);
    }
    let max_label = facets.iter().flat_map(|(_, f)| f.iter().copied()).max().unwrap_or(0);
    let n = declared.unwrap_or(max_label);
    let mut faces = Vec::with_capacity(facets.len() + 1);
    for (lineno, labels) in facets {
        let face = FaceSet::from_vertices(n, labels).map_err(|e| match e {
            Error::LabelOutOfRange { label, n } => {
                parse_error(lineno, format!("vertex label {label} exceeds declared vertex count {n}"))
            }
            other => other,
        })?;
        faces.push(face);
    }
    if empty_face {
        faces.push(FaceSet::EMPTY);
    }
    SimplicialComplex::from_faces(n, faces)
}

pub fn read_facets<R: Read>(mut reader: R) -> Result<SimplicialComplex> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_facets(&text)
}

pub fn read_facet_file(path: &std::path::Path) -> Result<SimplicialComplex> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_facets(&text)
}

/// Canonical facet-file text: header, then one facet per line in canonical order.
pub fn write_facets(k: &SimplicialComplex) -> String {
    let mut out = format!("vertices: {}\n", k.n());
    if k.kind() == ComplexKind::EmptyOnly {
        out.push_str(EMPTY_FACE_DIRECTIVE);
        out.push('\n');
        return out;
    }
    for f in k.facets() {
        let line: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// SHA-256 of the canonical facet text, so formatting and comments do not matter.
pub fn input_digest(k: &SimplicialComplex) -> String {
    let hash = Sha256::digest(write_facets(k).as_bytes());
    format!("sha256:{}", hex::encode(hash))
}

/// The JSON report: input identity, basic invariants and the certificate.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub input_digest: String,
    pub f_vector: Option<FVector>,
    pub euler_characteristic: Option<i64>,
    pub betti_numbers: Option<Vec<usize>>,
    #[serde(flatten)]
    pub certificate: Certificate,
    /// Wall-clock milliseconds per stage; only filled on request since it breaks
    /// byte-for-byte reproducibility.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<&'static str, u64>>,
}

pub fn build_report(k: &SimplicialComplex, options: &ReportOptions, timings: bool) -> Result<ReportDocument> {
    let mut stages: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &'static str, stages: &mut BTreeMap<&'static str, u64>| {
        stages.insert(name, clock.elapsed().as_millis() as u64);
        clock = Instant::now();
    };

    let f_vector = k.f_vector().ok();
    let euler_characteristic = f_vector.as_ref().map(FVector::euler_characteristic);
    lap("f_vector", &mut stages);
    let betti_numbers = ChainComplex::new(k).betti_numbers().ok();
    lap("homology", &mut stages);
    let certificate = nonembeddability_report(k, options)?;
    lap("certificate", &mut stages);

    Ok(ReportDocument {
        schema_version: REPORT_SCHEMA_VERSION,
        input_digest: input_digest(k),
        f_vector,
        euler_characteristic,
        betti_numbers,
        certificate,
        timings_ms: timings.then_some(stages),
    })
}

/// Pretty-printed JSON with fields in declaration order and a trailing newline.
pub fn report_to_json(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_tetrahedron_boundary() {
        let k = parse_facets("1 2 3\n1 2 4\n1 3 4\n2 3 4\n").unwrap();
        assert_eq!(k, SimplicialComplex::boundary_of_simplex(3).unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let k = parse_facets("1 2\n# comment\n\n2 3\n").unwrap();
        assert_eq!(k.n(), 3);
        assert_eq!(k.f_vector().unwrap().0, vec![3, 2]);
        let k = parse_facets("vertices: 5\n1 2 # trailing\n").unwrap();
        assert_eq!(k.n(), 5);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_facets("1 2\n1 x\n"),
            Err(Error::Parse { line: 2, message: "invalid vertex label 'x'".into() })
        );
        assert!(matches!(parse_facets("1 2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_facets("1 2\n-3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_facets("vertices: 3\n1 4\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_facets("1 2\nvertices: 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_facets("vertices: 70\n"), Err(Error::GroundSetTooLarge { .. })));
        assert!(matches!(parse_facets("1 64\n"), Err(Error::GroundSetTooLarge { .. })));
        assert_eq!(parse_facets(""), Err(Error::EmptyInput));
        assert_eq!(parse_facets("# nothing\n\n"), Err(Error::EmptyInput));
    }

    #[test]
    fn degenerate_kinds_round_trip() {
        for k in [SimplicialComplex::void(4), SimplicialComplex::empty_only(4)] {
            assert_eq!(parse_facets(&write_facets(&k)).unwrap(), k);
        }
    }

    #[test]
    fn digest_ignores_formatting() {
        let a = parse_facets("1 2 3\n# x\n3 4\n").unwrap();
        let b = parse_facets("vertices: 4\n4   3\n\n3 2 1\n").unwrap();
        assert_eq!(input_digest(&a), input_digest(&b));
        assert!(input_digest(&a).starts_with("sha256:"));
    }
}
