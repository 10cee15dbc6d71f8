//! Canonical keys for graphs up to relabelling of vertices `2..=n`.
//!
//! The key is the minimum adjacency encoding over all `(n-1)!` permutations
//! that fix vertex 1. Exact, and fast enough up to [`MAX_CANONICAL_VERTICES`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

pub const MAX_CANONICAL_VERTICES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey {
    n: u8,
    bits: u128,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Adjacency encoding; bit `(u - 1) * n + (v - 1)` is the edge `u -> v`.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The graph whose identity encoding is this key.
    pub fn graph(&self) -> DirectedGraph {
        let n = self.n();
        let edges = (0..n * n)
            .filter(|b| self.bits >> b & 1 == 1)
            .map(|b| (b / n + 1, b % n + 1));
        DirectedGraph::new(n, edges).expect("keys encode simple graphs")
    }
}

/// Calls `visit` with every permutation of `2..=n` as a relabelling vector
/// (`label[v - 1]` is the new label of `v`; `label[0] == 1` always).
pub(crate) fn for_each_fixing_first(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut label: Vec<usize> = (1..=n).collect();
    visit(&label);
    if n <= 2 {
        return;
    }
    // Heap's algorithm on label[1..]
    let k = n - 1;
    let mut c = vec![0usize; k];
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                label.swap(1, 1 + i);
            } else {
                label.swap(1 + c[i], 1 + i);
            }
            visit(&label);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn encode(n: usize, edges: &[(usize, usize)], label: &[usize]) -> u128 {
    edges.iter().fold(0u128, |acc, &(u, v)| {
        acc | 1u128 << ((label[u - 1] - 1) * n + (label[v - 1] - 1))
    })
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_CANONICAL_VERTICES {
        Err(Error::UnsupportedSize {
            n,
            min: 1,
            max: MAX_CANONICAL_VERTICES,
        })
    } else {
        Ok(())
    }
}

fn minimizing_label(g: &DirectedGraph) -> Result<(u128, Vec<usize>)> {
    check_size(g.n())?;
    let edges = g.edges();
    let mut best: Option<(u128, Vec<usize>)> = None;
    for_each_fixing_first(g.n(), |label| {
        let key = encode(g.n(), &edges, label);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, label.to_vec()));
        }
    });
    Ok(best.expect("at least the identity permutation is visited"))
}

/// Equal for two graphs iff a permutation fixing vertex 1 maps one edge
/// set onto the other.
pub fn canonical_form(g: &DirectedGraph) -> Result<CanonicalKey> {
    let (bits, _) = minimizing_label(g)?;
    Ok(CanonicalKey { n: g.n() as u8, bits })
}

/// The member of `g`'s isomorphism class whose encoding is the canonical key.
pub fn canonical_representative(g: &DirectedGraph) -> Result<DirectedGraph> {
    let (_, label) = minimizing_label(g)?;
    g.relabel(&label)
}
