use std::fmt;

use super::AdjacencyGraph;
use crate::model::{Coloring, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringViolation {
    Missing(VertexId),
    OutOfRange {
        vertex: VertexId,
        color: usize,
        k: usize,
    },
    Monochromatic {
        a: VertexId,
        b: VertexId,
        color: usize,
    },
}

impl fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Missing(v) => write!(f, "not total: {v} has no color"),
            Self::OutOfRange { vertex, color, k } => {
                write!(f, "{vertex} has color {color} outside 0..{k}")
            }
            Self::Monochromatic { a, b, color } => {
                write!(f, "edge {a} -- {b} is monochromatic (color {color})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub proper: bool,
    pub violations: Vec<ColoringViolation>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.proper {
            return write!(f, "proper");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks totality over the graph's vertices, colour range `0..k`, and that
/// no edge is monochromatic. Lists every violation.
pub fn verify_coloring(g: &AdjacencyGraph, c: &Coloring, k: usize) -> VerificationReport {
    let mut violations = Vec::new();
    for v in g.vertices() {
        match c.get(v) {
            None => violations.push(ColoringViolation::Missing(v.clone())),
            Some(color) if color >= k => violations.push(ColoringViolation::OutOfRange {
                vertex: v.clone(),
                color,
                k,
            }),
            Some(_) => {}
        }
    }
    for (a, b) in g.edges() {
        let (va, vb) = (&g.vertices()[a], &g.vertices()[b]);
        if let (Some(ca), Some(cb)) = (c.get(va), c.get(vb)) {
            if ca == cb {
                violations.push(ColoringViolation::Monochromatic {
                    a: va.clone(),
                    b: vb.clone(),
                    color: ca,
                });
            }
        }
    }
    VerificationReport {
        proper: violations.is_empty(),
        violations,
    }
}
