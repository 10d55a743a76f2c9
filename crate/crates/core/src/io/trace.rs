use serde::Serialize;

use crate::coloring::BalancingTrace;

fn one_based_set(items: &[usize]) -> String {
    if items.is_empty() {
        return "∅".to_string();
    }
    let parts: Vec<String> = items.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Tab-separated table with one column per iteration: `|A_k|` rows, `s_k`
/// rows, then `B`, `i`, `j`. The `i`/`j` cells of a column hold the pick made
/// from that column's state.
pub fn emit_trace(trace: &BalancingTrace) -> String {
    let m = trace.initial.m();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["Iterations".to_string()];
    for r in &trace.records {
        header.push(if r.iteration == 0 {
            "initial".to_string()
        } else {
            format!("Iter. {}", r.iteration)
        });
    }
    rows.push(header);
    for k in 0..m {
        let mut row = vec![format!("|A{}|", k + 1)];
        row.extend(trace.records.iter().map(|r| r.profile[k].to_string()));
        rows.push(row);
    }
    for k in 0..m {
        let mut row = vec![format!("s{}", k + 1)];
        row.extend(trace.records.iter().map(|r| r.counts[k].to_string()));
        rows.push(row);
    }
    let mut b = vec!["B".to_string()];
    b.extend(trace.records.iter().map(|r| one_based_set(&r.deficit_set)));
    rows.push(b);
    let pick = |f: fn((usize, usize)) -> usize| {
        trace
            .records
            .iter()
            .map(move |r| r.pick.map_or("-".to_string(), |p| (f(p) + 1).to_string()))
    };
    let mut i_row = vec!["i".to_string()];
    i_row.extend(pick(|p| p.0));
    rows.push(i_row);
    let mut j_row = vec!["j".to_string()];
    j_row.extend(pick(|p| p.1));
    rows.push(j_row);

    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct TraceDocument {
    m: usize,
    n: usize,
    initial_profile: Vec<usize>,
    iterations: Vec<IterationDocument>,
    final_counts: Vec<i64>,
    moves: Vec<MoveDocument>,
    negative_transients: Vec<TransientDocument>,
}

#[derive(Serialize)]
struct IterationDocument {
    iteration: usize,
    profile: Vec<usize>,
    counts: Vec<i64>,
    deficit_set: Vec<usize>,
    i: Option<usize>,
    j: Option<usize>,
}

#[derive(Serialize)]
struct MoveDocument {
    from: usize,
    to: usize,
}

#[derive(Serialize)]
struct TransientDocument {
    iteration: usize,
    family: usize,
    value: i64,
}

/// Structured sibling of [`emit_trace`], 1-based throughout.
pub fn emit_trace_json(trace: &BalancingTrace) -> String {
    let doc = TraceDocument {
        m: trace.initial.m(),
        n: trace.initial.n(),
        initial_profile: trace.initial.sizes().to_vec(),
        iterations: trace
            .records
            .iter()
            .map(|r| IterationDocument {
                iteration: r.iteration,
                profile: r.profile.clone(),
                counts: r.counts.clone(),
                deficit_set: r.deficit_set.iter().map(|i| i + 1).collect(),
                i: r.pick.map(|p| p.0 + 1),
                j: r.pick.map(|p| p.1 + 1),
            })
            .collect(),
        final_counts: trace.final_counts.counts().to_vec(),
        moves: trace
            .moves
            .iter()
            .map(|mv| MoveDocument {
                from: mv.from + 1,
                to: mv.to + 1,
            })
            .collect(),
        negative_transients: trace
            .negative_transients
            .iter()
            .map(|t| TransientDocument {
                iteration: t.iteration,
                family: t.family + 1,
                value: t.value,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("trace serialises");
    s.push('\n');
    s
}
