use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{CliqueHole, Coloring, VertexId};

pub const FORMAT_VERSION: u32 = 1;

/// On-disk instance: `{"version":1, "m":<int>, "cliques":[[<string>...] ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub version: u32,
    pub m: usize,
    pub cliques: Vec<Vec<String>>,
}

/// On-disk colouring: `{"m":<int>, "colors":{<vertex>:<int>, ...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub m: usize,
    pub colors: Coloring,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn structural(message: String) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message,
    }
}

/// Parses the document structure without checking the hole invariants.
pub fn parse_instance_unvalidated(text: &str) -> Result<CliqueHole> {
    let doc: InstanceDocument = serde_json::from_str(text).map_err(json_error)?;
    if doc.version != FORMAT_VERSION {
        return Err(structural(format!(
            "unsupported version {} (expected {FORMAT_VERSION})",
            doc.version
        )));
    }
    if doc.m != doc.cliques.len() {
        return Err(structural(format!(
            "m = {} but {} cliques listed",
            doc.m,
            doc.cliques.len()
        )));
    }
    let mut cliques = Vec::with_capacity(doc.m);
    for (i, list) in doc.cliques.into_iter().enumerate() {
        let mut set = BTreeSet::new();
        for v in list {
            if !set.insert(VertexId::new(v.clone())) {
                return Err(structural(format!(
                    "vertex {v:?} listed twice in clique {}",
                    i + 1
                )));
            }
        }
        cliques.push(set);
    }
    Ok(CliqueHole::new(cliques))
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<CliqueHole> {
    let hole = parse_instance_unvalidated(text)?;
    let report = hole.validate();
    if !report.is_valid() {
        return Err(Error::InvalidHole(report));
    }
    Ok(hole)
}

/// Canonical text: fixed key order, vertices sorted, one clique per line,
/// trailing newline.
pub fn serialize_instance(hole: &CliqueHole) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"version\": {FORMAT_VERSION},\n"));
    out.push_str(&format!("  \"m\": {},\n", hole.m()));
    out.push_str("  \"cliques\": [");
    for (i, clique) in hole.cliques().iter().enumerate() {
        let names: Vec<String> = clique
            .iter()
            .map(|v| serde_json::to_string(v.as_str()).expect("strings serialise"))
            .collect();
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        out.push_str(&format!("    [{}]", names.join(", ")));
    }
    if hole.m() > 0 {
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}

pub fn serialize_coloring(m: usize, coloring: &Coloring) -> String {
    let doc = ColoringDocument {
        m,
        colors: coloring.clone(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("colouring serialises");
    s.push('\n');
    s
}

pub fn parse_coloring(text: &str) -> Result<ColoringDocument> {
    serde_json::from_str(text).map_err(json_error)
}
