//! Structural classes: minimally and inductively strongly connected graphs.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{bit, members, DirectedGraph, VertexSet};

pub(crate) fn require_strongly_connected(g: &DirectedGraph) -> Result<()> {
    if g.is_strongly_connected() {
        Ok(())
    } else {
        Err(Error::NotStronglyConnected)
    }
}

/// Strongly connected, and removing any single edge breaks that.
pub fn is_minimally_strongly_connected(g: &DirectedGraph) -> Result<bool> {
    require_strongly_connected(g)?;
    Ok(g.edges().into_iter().all(|(u, v)| {
        !g.without_edge(u, v)
            .expect("edge taken from the graph")
            .is_strongly_connected()
    }))
}

/// A vertex ordering starting at vertex 1 in which every prefix induces a
/// strongly connected subgraph, if one exists.
pub fn inductive_ordering(g: &DirectedGraph) -> Result<Option<Vec<usize>>> {
    require_strongly_connected(g)?;
    Ok(inductive_ordering_from(g, 1))
}

/// Same as [`inductive_ordering`] but the ordering may start anywhere.
/// Kept for comparing the two readings of the definition.
pub fn inductive_ordering_any_start(g: &DirectedGraph) -> Result<Option<Vec<usize>>> {
    require_strongly_connected(g)?;
    Ok((1..=g.n()).find_map(|start| inductive_ordering_from(g, start)))
}

fn inductive_ordering_from(g: &DirectedGraph, start: usize) -> Option<Vec<usize>> {
    let mut order = vec![start];
    let mut dead = HashSet::new();
    grow(g, bit(start), &mut order, &mut dead).then_some(order)
}

fn grow(g: &DirectedGraph, prefix: VertexSet, order: &mut Vec<usize>, dead: &mut HashSet<VertexSet>) -> bool {
    if prefix == g.all_vertices() {
        return true;
    }
    if dead.contains(&prefix) {
        return false;
    }
    for v in members(g.all_vertices() & !prefix) {
        let next = prefix | bit(v);
        if g.is_strongly_connected_on(next) {
            order.push(v);
            if grow(g, next, order, dead) {
                return true;
            }
            order.pop();
        }
    }
    dead.insert(prefix);
    false
}
