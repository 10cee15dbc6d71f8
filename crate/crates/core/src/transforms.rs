//! Graph constructions that preserve or change the verdict in known ways,
//! and the repair of graphs whose ear decompositions need trivial ears.

use serde::Serialize;

use crate::ears::{ear_decomposition, find_nontrivial_ear_decomposition, EarDecomposition};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::ident::{decide, Config, Verdict};

/// Adds a new input-output vertex exchanging with the old vertex 1. The new
/// vertex is labelled 1 and every old label shifts up by one.
pub fn add_exchange_vertex(g: &DirectedGraph) -> DirectedGraph {
    let shifted = g.edges().into_iter().map(|(u, v)| (u + 1, v + 1));
    DirectedGraph::new(g.n() + 1, shifted.chain([(1, 2), (2, 1)])).expect("shifted simple graph stays simple")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collapse {
    pub graph: DirectedGraph,
    /// `relabel[v - 1]` is the new label of old vertex `v`; the collapsed
    /// vertex maps to 1.
    pub relabel: Vec<usize>,
    /// Edges (new labels) that several old edges were merged into.
    pub merged: Vec<(usize, usize)>,
}

/// Identifies vertex 1 with the exchange vertex `i`. Survivors keep their
/// relative order and are compacted to `1..n-1`.
pub fn collapse_exchange(g: &DirectedGraph, i: usize) -> Result<Collapse> {
    if !g.exchanges().contains(&i) {
        return Err(Error::NoExchangeWith(i));
    }
    let relabel: Vec<usize> = (1..=g.n())
        .map(|v| match v.cmp(&i) {
            std::cmp::Ordering::Equal => 1,
            std::cmp::Ordering::Less => v,
            std::cmp::Ordering::Greater => v - 1,
        })
        .collect();
    let mut edges = Vec::new();
    let mut merged = Vec::new();
    for (u, v) in g.edges() {
        let e = (relabel[u - 1], relabel[v - 1]);
        if e.0 == e.1 {
            continue;
        }
        if edges.contains(&e) {
            if !merged.contains(&e) {
                merged.push(e);
            }
        } else {
            edges.push(e);
        }
    }
    merged.sort_unstable();
    let graph = DirectedGraph::new(g.n() - 1, edges)?;
    Ok(Collapse {
        graph,
        relabel,
        merged,
    })
}

/// Replaces `k -> l` by `k -> n+1 -> l`.
pub fn subdivide_edge(g: &DirectedGraph, (k, l): (usize, usize)) -> Result<DirectedGraph> {
    if !g.has_edge(k, l) {
        return Err(Error::NoSuchEdge(k, l));
    }
    let w = g.n() + 1;
    let edges = g
        .edges()
        .into_iter()
        .filter(|&e| e != (k, l))
        .chain([(k, w), (w, l)]);
    DirectedGraph::new(w, edges)
}

/// Adds the path `k -> n+1 -> ... -> n+s -> l`; `k == l` adds a cycle.
pub fn add_line_segment(g: &DirectedGraph, k: usize, l: usize, s: usize) -> Result<DirectedGraph> {
    for v in [k, l] {
        if !g.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    if s == 0 {
        return Err(Error::InvalidGraph(
            "a line segment needs at least one new vertex".into(),
        ));
    }
    let n = g.n();
    let path: Vec<usize> = std::iter::once(k).chain(n + 1..=n + s).chain([l]).collect();
    let edges = g.edges().into_iter().chain(path.windows(2).map(|w| (w[0], w[1])));
    DirectedGraph::new(n + s, edges)
}

/// Glues `g2` onto `g1` by identifying `g2`'s vertex 1 with `v`. Vertex
/// `j > 1` of `g2` becomes `n1 + j - 1`.
pub fn union_at_vertex(g1: &DirectedGraph, g2: &DirectedGraph, v: usize) -> Result<DirectedGraph> {
    if !g1.contains_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    let n1 = g1.n();
    let map = |j: usize| if j == 1 { v } else { n1 + j - 1 };
    let mut g = DirectedGraph::new(n1 + g2.n() - 1, g1.edges())?;
    for (a, b) in g2.edges() {
        let (a, b) = (map(a), map(b));
        if g.has_edge(a, b) {
            return Err(Error::OverlapViolation(a, b));
        }
        g.insert_edge(a, b)?;
    }
    Ok(g)
}

#[derive(Clone, Debug, Serialize)]
pub struct Subdivision {
    pub edge: (usize, usize),
    pub vertex: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepairResult {
    pub decomposition_used: EarDecomposition,
    pub trivial_edges: Vec<(usize, usize)>,
    pub deleted_variant: DirectedGraph,
    pub subdivided_variant: DirectedGraph,
    /// New vertex inserted into each trivial edge of the subdivided variant.
    pub subdivisions: Vec<Subdivision>,
    pub deleted_verdict: Verdict,
    pub subdivided_verdict: Verdict,
}

/// Removes or subdivides the trivial ears of an ear decomposition with as
/// few trivial ears as possible. Both variants are re-checked.
pub fn repair(g: &DirectedGraph, config: &Config) -> Result<RepairResult> {
    let ed = ear_decomposition(g)?;
    let trivial = ed.trivial_edges();
    let kept = g.edges().into_iter().filter(|e| !trivial.contains(e));
    let deleted = DirectedGraph::new(g.n(), kept)?;
    let mut subdivided = g.clone();
    let mut subdivisions = Vec::with_capacity(trivial.len());
    for &e in &trivial {
        subdivided = subdivide_edge(&subdivided, e)?;
        subdivisions.push(Subdivision {
            edge: e,
            vertex: subdivided.n(),
        });
    }
    let mut verdicts = Vec::with_capacity(2);
    for (name, variant) in [("deleted", &deleted), ("subdivided", &subdivided)] {
        if find_nontrivial_ear_decomposition(variant)?.is_none() {
            return Err(Error::RepairFailed(format!(
                "{name} variant {variant} has no nontrivial ear decomposition"
            )));
        }
        let v = decide(variant, config)?;
        if !v.answer.is_yes() {
            return Err(Error::RepairFailed(format!(
                "{name} variant {variant} decided {}",
                v.answer
            )));
        }
        verdicts.push(v);
    }
    let subdivided_verdict = verdicts.pop().expect("two verdicts");
    let deleted_verdict = verdicts.pop().expect("two verdicts");
    Ok(RepairResult {
        decomposition_used: ed,
        trivial_edges: trivial,
        deleted_variant: deleted,
        subdivided_variant: subdivided,
        subdivisions,
        deleted_verdict,
        subdivided_verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> DirectedGraph {
        DirectedGraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn exchange_vertex() {
        let one = DirectedGraph::empty(1).unwrap();
        assert_eq!(add_exchange_vertex(&one), DirectedGraph::cycle(2).unwrap());
        let c = DirectedGraph::cycle(3).unwrap();
        let e = add_exchange_vertex(&c);
        assert_eq!((e.n(), e.edge_count()), (4, 5));
        assert!(e.has_edge(2, 3) && e.has_edge(4, 2) && e.has_edge(1, 2));
    }

    #[test]
    fn collapse_exchange_example() {
        let exchange_example = g(
            6,
            &[
                (2, 1),
                (4, 1),
                (1, 2),
                (3, 2),
                (6, 2),
                (2, 3),
                (5, 4),
                (3, 5),
                (4, 6),
                (5, 6),
            ],
        );
        let c = collapse_exchange(&exchange_example, 2).unwrap();
        assert_eq!(c.relabel, vec![1, 1, 2, 3, 4, 5]);
        assert!(c.merged.is_empty());
        let expected = g(
            5,
            &[(2, 1), (3, 1), (5, 1), (1, 2), (4, 3), (2, 4), (3, 5), (4, 5)],
        );
        assert_eq!(c.graph, expected);
        assert_eq!(
            collapse_exchange(&exchange_example, 3),
            Err(Error::NoExchangeWith(3))
        );
        let two = collapse_exchange(&DirectedGraph::cycle(2).unwrap(), 2).unwrap();
        assert_eq!(two.graph, DirectedGraph::empty(1).unwrap());
    }

    #[test]
    fn collapse_reports_merges() {
        // 3 -> 1 and 3 -> 2 both become 2 -> 1
        let h = g(3, &[(1, 2), (2, 1), (3, 1), (3, 2), (1, 3)]);
        let c = collapse_exchange(&h, 2).unwrap();
        assert_eq!(c.merged, vec![(2, 1)]);
        assert_eq!(c.graph, DirectedGraph::cycle(2).unwrap());
    }

    #[test]
    fn subdivision_and_segments() {
        let c3 = DirectedGraph::cycle(3).unwrap();
        let s = subdivide_edge(&c3, (2, 3)).unwrap();
        assert_eq!(
            s.relabel(&[1, 2, 4, 3]).unwrap(),
            DirectedGraph::cycle(4).unwrap()
        );
        assert_eq!(subdivide_edge(&c3, (3, 2)), Err(Error::NoSuchEdge(3, 2)));
        let seg = add_line_segment(&c3, 2, 2, 2).unwrap();
        assert_eq!((seg.n(), seg.edge_count()), (5, 6));
        assert!(seg.has_edge(2, 4) && seg.has_edge(4, 5) && seg.has_edge(5, 2));
        assert_eq!(add_line_segment(&c3, 1, 7, 1), Err(Error::UnknownVertex(7)));
        assert!(add_line_segment(&c3, 1, 2, 0).is_err());
    }

    #[test]
    fn union_of_two_cycles() {
        let c2 = DirectedGraph::cycle(2).unwrap();
        let star = union_at_vertex(&c2, &c2, 1).unwrap();
        assert_eq!(star, g(3, &[(1, 2), (2, 1), (1, 3), (3, 1)]));
        let at2 = union_at_vertex(&c2, &DirectedGraph::cycle(3).unwrap(), 2).unwrap();
        assert_eq!(at2, g(4, &[(1, 2), (2, 1), (2, 3), (3, 4), (4, 2)]));
        assert_eq!(union_at_vertex(&c2, &c2, 3), Err(Error::UnknownVertex(3)));
    }

    #[test]
    fn repair_chord() {
        let h = g(3, &[(1, 2), (2, 3), (3, 1), (3, 2)]);
        let r = repair(&h, &Config::default()).unwrap();
        assert_eq!(r.trivial_edges, vec![(3, 2)]);
        assert_eq!(r.deleted_variant, DirectedGraph::cycle(3).unwrap());
        assert_eq!(
            r.subdivided_variant,
            g(4, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 2)])
        );
        assert!(r.deleted_verdict.answer.is_yes() && r.subdivided_verdict.answer.is_yes());
    }

    #[test]
    fn repair_leaves_good_graphs_alone() {
        let star = g(3, &[(1, 2), (2, 1), (1, 3), (3, 1)]);
        let r = repair(&star, &Config::default()).unwrap();
        assert!(r.trivial_edges.is_empty());
        assert_eq!(r.deleted_variant, star);
        assert_eq!(r.subdivided_variant, star);
    }
}
