use crate::error::{Error, Result};
use crate::model::FamilyIndex;

/// Graphviz description of the substitution diagram for odd `m >= 5`: one
/// node per family `Π_i`, and an edge `Π_i -- Π_{i+2}` labelled with the
/// sector swap `i ↔ i-1` that turns a set of one family into the other.
pub fn emit_diagram(m: usize) -> Result<String> {
    if m < 5 || m.is_multiple_of(2) {
        return Err(Error::Domain(format!("diagram needs odd m >= 5, got {m}")));
    }
    let mut out = format!("graph coloring_diagram_m{m} {{\n");
    for i in 0..m {
        let family = FamilyIndex { m, family: i };
        out.push_str(&format!("  P{} [label=\"{family}\"];\n", i + 1));
    }
    for i in 0..m {
        let to = (i + 2) % m;
        let prev = (i + m - 1) % m;
        out.push_str(&format!(
            "  P{} -- P{} [label=\"{} ↔ {}\"];\n",
            i + 1,
            to + 1,
            i + 1,
            prev + 1
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn edges(text: &str) -> BTreeSet<(usize, usize)> {
        text.lines()
            .filter(|l| l.contains("--"))
            .map(|l| {
                let parts: Vec<usize> = l
                    .split_whitespace()
                    .filter_map(|t| t.strip_prefix('P'))
                    .map(|t| t.parse().unwrap())
                    .collect();
                (parts[0].min(parts[1]), parts[0].max(parts[1]))
            })
            .collect()
    }

    #[test]
    fn seven_has_a_seven_cycle() {
        let text = emit_diagram(7).unwrap();
        assert_eq!(text.lines().filter(|l| l.contains("[label=\"Π")).count(), 7);
        let e = edges(&text);
        assert_eq!(e.len(), 7);
        assert!(e.contains(&(1, 3)) && e.contains(&(2, 7)));
        assert!(text.contains("P1 -- P3 [label=\"1 ↔ 7\"]"));
    }

    #[test]
    fn five_has_five_edges() {
        assert_eq!(edges(&emit_diagram(5).unwrap()).len(), 5);
    }

    #[test]
    fn even_or_small_is_refused() {
        assert!(emit_diagram(4).is_err());
        assert!(emit_diagram(6).is_err());
        assert!(emit_diagram(3).is_err());
    }
}
