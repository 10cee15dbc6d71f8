use std::fmt::Write as _;

use compid::ident::Report;
use compid::transforms::RepairResult;
use compid::{DirectedGraph, Verdict};

pub fn verdict(v: &Verdict) -> String {
    let mut s = String::new();
    writeln!(s, "{}", v.answer).unwrap();
    writeln!(s, "certificate: {}", v.certificate).unwrap();
    if let Some(r) = v.rank {
        writeln!(s, "B(G) rank: {r} of {} ({} rows)", v.l_size, v.r_size).unwrap();
    }
    if let Some(j) = v.jacobian_rank {
        writeln!(s, "jacobian rank: {j}").unwrap();
    }
    writeln!(s, "seed: {}  prime: {}  trials: {}", v.seed, v.prime, v.trials).unwrap();
    s
}

pub fn b_matrices(r: &Report) -> String {
    if r.b_evaluated.index_sets.l.is_empty() {
        return "B(G) is empty: L has no elements\n".into();
    }
    format!(
        "B(G):\n{}\nB(G) at the first random point:\n{}",
        r.b_symbolic,
        r.b_evaluated.render()
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn report(g: &DirectedGraph, r: &Report, with_values: bool) -> String {
    let mut s = String::new();
    writeln!(s, "graph: n={} m={} {g}", r.n, r.m).unwrap();
    let bound = if r.m > r.edge_bound { "exceeded" } else { "ok" };
    writeln!(s, "edge bound: m={} vs 2n-2={} ({bound})", r.m, r.edge_bound).unwrap();
    match r.condition_support {
        Some((i, j)) => writeln!(s, "support condition: holds for ({i},{j})").unwrap(),
        None => writeln!(s, "support condition: no pair").unwrap(),
    }
    match &r.nontrivial_ear_decomposition {
        Some(ed) => {
            let ears: Vec<String> = ed
                .ears()
                .iter()
                .map(|e| {
                    e.vertices
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join("->")
                })
                .collect();
            writeln!(s, "nontrivial ear decomposition: {}", ears.join("; ")).unwrap()
        }
        None => writeln!(s, "nontrivial ear decomposition: none").unwrap(),
    }
    writeln!(
        s,
        "minimally strongly connected: {}",
        yes_no(r.minimally_strongly_connected)
    )
    .unwrap();
    match &r.inductive_ordering {
        Some(o) => writeln!(s, "inductive ordering: {o:?}").unwrap(),
        None => writeln!(s, "inductive ordering: none").unwrap(),
    }
    writeln!(
        s,
        "B(G) rank: {} of {} over {} rows ({} trials, full rank: {})",
        r.b_rank.rank,
        r.b_rank.l_size,
        r.b_rank.r_size,
        r.b_rank.trials,
        yes_no(r.b_rank.full_rank)
    )
    .unwrap();
    writeln!(
        s,
        "jacobian rank: {} of m+1={} over {} parameters ({} trials, expected: {})",
        r.jacobian.rank,
        r.m + 1,
        r.jacobian.parameters,
        r.jacobian.trials,
        yes_no(r.jacobian.expected)
    )
    .unwrap();
    writeln!(s, "verdict: {} by {}", r.verdict.answer, r.verdict.certificate).unwrap();
    writeln!(
        s,
        "seed: {}  prime: {}  trials: {}",
        r.verdict.seed, r.verdict.prime, r.verdict.trials
    )
    .unwrap();
    if r.b_evaluated.index_sets.l.is_empty() {
        s.push_str("B(G) is empty: L has no elements\n");
    } else {
        write!(s, "B(G):\n{}", r.b_symbolic).unwrap();
        if with_values {
            write!(s, "B(G) at the first random point:\n{}", r.b_evaluated.render()).unwrap();
        }
    }
    s
}

pub fn repair(g: &DirectedGraph, r: &RepairResult) -> String {
    let mut s = String::new();
    writeln!(s, "graph: {g}").unwrap();
    writeln!(s, "trivial ears: {}", r.trivial_edges.len()).unwrap();
    for sub in &r.subdivisions {
        writeln!(
            s,
            "  {}->{} (subdivided through new vertex {})",
            sub.edge.0, sub.edge.1, sub.vertex
        )
        .unwrap();
    }
    writeln!(
        s,
        "deleted variant: {} ({})",
        r.deleted_variant, r.deleted_verdict.answer
    )
    .unwrap();
    writeln!(
        s,
        "subdivided variant: {} ({})",
        r.subdivided_variant, r.subdivided_verdict.answer
    )
    .unwrap();
    s
}
