//! Random strongly connected graphs, built from random ears.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

/// A random strongly connected graph on `n >= 2` vertices with at most
/// `max_edges` edges (`max_edges >= 2n - 2` always suffices). Every vertex
/// lies on some ear and extra edges are sprinkled on top.
pub fn random_strongly_connected(n: usize, max_edges: usize, rng: &mut impl Rng) -> Result<DirectedGraph> {
    if n < 2 {
        return Err(Error::InvalidGraph(
            "random graphs need at least 2 vertices".into(),
        ));
    }
    let mut fresh: Vec<usize> = (2..=n).collect();
    fresh.shuffle(rng);
    let mut edges = Vec::new();
    let first = rng.random_range(1..=fresh.len());
    let cycle: Vec<usize> = std::iter::once(1)
        .chain(fresh.drain(..first))
        .chain([1])
        .collect();
    edges.extend(cycle.windows(2).map(|w| (w[0], w[1])));
    let mut covered: Vec<usize> = cycle[..cycle.len() - 1].to_vec();
    while !fresh.is_empty() {
        let len = rng.random_range(1..=fresh.len());
        let start = *covered.choose(rng).expect("covered is non-empty");
        let end = *covered.choose(rng).expect("covered is non-empty");
        let path: Vec<usize> = std::iter::once(start)
            .chain(fresh.drain(..len))
            .chain([end])
            .collect();
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        covered.extend(&path[1..path.len() - 1]);
    }
    if edges.len() > max_edges {
        return Err(Error::InvalidConfig(format!(
            "{} edges needed to connect, limit {max_edges}",
            edges.len()
        )));
    }
    let mut g = DirectedGraph::new(n, edges)?;
    let mut missing: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (1..=n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && !g.has_edge(u, v))
        .collect();
    missing.shuffle(rng);
    let room = max_edges.min(n * (n - 1)) - g.edge_count();
    let extra = rng.random_range(0..=room);
    for &(u, v) in &missing[..extra] {
        g.insert_edge(u, v)?;
    }
    Ok(g)
}
