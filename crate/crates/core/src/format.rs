//! The `.cplx` text format: one facet per line as whitespace-separated vertex
//! labels, `#` starts a comment, blank lines are ignored. Comment lines of the
//! form `#@ key: value` carry metadata.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::complex::{ComplexError, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexDocument {
    pub name: Option<String>,
    /// Remaining `#@ key: value` pairs, e.g. expected properties or generator metadata.
    pub metadata: BTreeMap<String, String>,
    pub complex: SimplicialComplex,
}

impl ComplexDocument {
    pub fn new(complex: SimplicialComplex) -> Self {
        ComplexDocument {
            name: None,
            metadata: BTreeMap::new(),
            complex,
        }
    }

    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let mut name = None;
        let mut metadata = BTreeMap::new();
        let mut facets: Vec<Vec<u32>> = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line = idx + 1;
            if let Some(meta) = raw.trim_start().strip_prefix("#@") {
                if let Some((k, v)) = meta.split_once(':') {
                    let (k, v) = (k.trim().to_string(), v.trim().to_string());
                    if k == "name" {
                        name = Some(v);
                    } else {
                        metadata.insert(k, v);
                    }
                }
                continue;
            }
            let body = raw.split('#').next().unwrap_or("");
            if body.trim().is_empty() {
                continue;
            }
            let mut facet = Vec::new();
            for token in body.split_whitespace() {
                let v: u32 = token.parse().map_err(|_| ParseError {
                    line,
                    message: format!(
                        "expected a nonnegative integer vertex label, found {token:?}"
                    ),
                })?;
                facet.push(v);
            }
            crate::complex::Simplex::new(&facet).map_err(|e| ParseError {
                line,
                message: e.to_string(),
            })?;
            facets.push(facet);
        }
        let complex =
            SimplicialComplex::from_facets(facets).map_err(|e: ComplexError| ParseError {
                line: 0,
                message: e.to_string(),
            })?;
        Ok(ComplexDocument {
            name,
            metadata,
            complex,
        })
    }

    /// Canonical text: metadata, then facets in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "#@ name: {name}");
        }
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "#@ {k}: {v}");
        }
        for facet in self.complex.facets() {
            let labels: Vec<String> = facet.vertices().iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}", labels.join(" "));
        }
        out
    }
}

/// Parses `.cplx` text into a complex, ignoring metadata.
pub fn parse_complex_text(input: &str) -> Result<SimplicialComplex, ParseError> {
    ComplexDocument::parse(input).map(|d| d.complex)
}
