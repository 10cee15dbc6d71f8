//! Ear decompositions of strongly connected digraphs.
//!
//! An ear decomposition is a cycle `P0` followed by paths whose endpoints
//! lie in what has been built so far and whose interior vertices are new.
//! An ear with a single edge is trivial. A decomposition is *nontrivial*
//! when it has no trivial ears and `P0` passes through vertex 1.
//!
//! Every edge of an ear with at least two edges touches a new interior
//! vertex, so trivial ears can always be moved to the end. Both searches
//! below therefore only track the set of covered vertices.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, members, DirectedGraph, VertexSet};
use crate::structure::require_strongly_connected;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ear {
    /// `v0, ..., vk`; for the initial cycle `v0 == vk`.
    pub vertices: Vec<usize>,
    pub trivial: bool,
}

impl Ear {
    fn new(vertices: Vec<usize>, is_initial: bool) -> Self {
        let trivial = !is_initial && vertices.len() == 2;
        Ear { vertices, trivial }
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    ears: Vec<Ear>,
}

impl EarDecomposition {
    /// Wraps raw vertex sequences; the first one is the initial cycle.
    pub fn from_vertex_sequences(seqs: Vec<Vec<usize>>) -> Self {
        let ears = seqs
            .into_iter()
            .enumerate()
            .map(|(i, s)| Ear::new(s, i == 0))
            .collect();
        EarDecomposition { ears }
    }

    pub fn ears(&self) -> &[Ear] {
        &self.ears
    }

    pub fn len(&self) -> usize {
        self.ears.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ears.is_empty()
    }

    /// Edges of the trivial ears, in decomposition order.
    pub fn trivial_edges(&self) -> Vec<(usize, usize)> {
        self.ears
            .iter()
            .filter(|e| e.trivial)
            .map(|e| (e.vertices[0], e.vertices[1]))
            .collect()
    }

    pub fn trivial_count(&self) -> usize {
        self.ears.iter().filter(|e| e.trivial).count()
    }

    pub fn is_nontrivial(&self) -> bool {
        self.trivial_count() == 0 && self.ears.first().is_some_and(|p0| p0.vertices.contains(&1))
    }

    /// Checks every clause of the definition against `g`.
    pub fn validate(&self, g: &DirectedGraph) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidGraph(format!("bad ear decomposition: {msg}")));
        let Some(p0) = self.ears.first() else {
            return fail("no ears".into());
        };
        let cyc = &p0.vertices;
        if cyc.len() < 3 || cyc.first() != cyc.last() {
            return fail(format!("initial ear {cyc:?} is not a closed walk"));
        }
        let mut covered: VertexSet = 0;
        for &v in &cyc[..cyc.len() - 1] {
            if !g.contains_vertex(v) || covered & bit(v) != 0 {
                return fail(format!("initial ear {cyc:?} is not a simple cycle"));
            }
            covered |= bit(v);
        }
        let mut used = HashSet::new();
        for (idx, ear) in self.ears.iter().enumerate() {
            let vs = &ear.vertices;
            if idx > 0 {
                if vs.len() < 2 {
                    return fail(format!("ear {idx} has no edge"));
                }
                let (first, last) = (vs[0], vs[vs.len() - 1]);
                if !g.contains_vertex(first) || !g.contains_vertex(last) {
                    return fail(format!("ear {idx} leaves the graph"));
                }
                if covered & bit(first) == 0 || covered & bit(last) == 0 {
                    return fail(format!("ear {idx} endpoints are not yet covered"));
                }
                for &v in &vs[1..vs.len() - 1] {
                    if !g.contains_vertex(v) || covered & bit(v) != 0 {
                        return fail(format!("ear {idx} interior vertex {v} is not new"));
                    }
                    covered |= bit(v);
                }
                if ear.trivial != (vs.len() == 2) {
                    return fail(format!("ear {idx} has a wrong triviality flag"));
                }
            }
            for (u, v) in ear.edges() {
                if !g.has_edge(u, v) {
                    return fail(format!("{u}->{v} is not an edge"));
                }
                if !used.insert((u, v)) {
                    return fail(format!("{u}->{v} is used twice"));
                }
            }
        }
        if covered != g.all_vertices() || used.len() != g.edge_count() {
            return fail("ears do not cover the graph".into());
        }
        Ok(())
    }
}

/// A nontrivial ear decomposition, if one exists. The search is exhaustive,
/// so `None` proves there is none.
pub fn find_nontrivial_ear_decomposition(g: &DirectedGraph) -> Result<Option<EarDecomposition>> {
    require_strongly_connected(g)?;
    if g.n() == 1 {
        return Ok(None);
    }
    let mut search = InducedSearch {
        g,
        dead: HashSet::new(),
    };
    let mut ears = Vec::new();
    Ok(search
        .complete(bit(1), &mut ears)
        .then(|| EarDecomposition::from_vertex_sequences(ears)))
}

struct InducedSearch<'a> {
    g: &'a DirectedGraph,
    dead: HashSet<VertexSet>,
}

impl InducedSearch<'_> {
    // Invariant: the edges covered so far are exactly the edges of the
    // subgraph induced on `covered`.
    fn complete(&mut self, covered: VertexSet, ears: &mut Vec<Vec<usize>>) -> bool {
        if covered == self.g.all_vertices() {
            return true;
        }
        if self.dead.contains(&covered) {
            return false;
        }
        for (interior, ear) in induced_ears(self.g, covered) {
            ears.push(ear);
            if self.complete(covered | interior, ears) {
                return true;
            }
            ears.pop();
        }
        self.dead.insert(covered);
        false
    }
}

/// Ears of length >= 2 that can be attached to `covered` without leaving
/// any edge of the enlarged induced subgraph uncovered. One ear per
/// distinct interior set.
fn induced_ears(g: &DirectedGraph, covered: VertexSet) -> Vec<(VertexSet, Vec<usize>)> {
    let mut found: Vec<(VertexSet, Vec<usize>)> = Vec::new();
    let mut seen = HashSet::new();
    let mut path = Vec::new();
    for v0 in members(covered) {
        for x in members(g.out_set(v0) & !covered) {
            path.clear();
            path.push(v0);
            extend_induced(g, covered, 0, x, &mut path, &mut |interior, ear| {
                if seen.insert(interior) {
                    found.push((interior, ear));
                }
            });
        }
    }
    found
}

fn extend_induced(
    g: &DirectedGraph,
    covered: VertexSet,
    interior: VertexSet,
    x: usize,
    path: &mut Vec<usize>,
    emit: &mut impl FnMut(VertexSet, Vec<usize>),
) {
    let prev = *path.last().expect("path starts at v0");
    let built = covered | interior;
    if g.in_set(x) & built != bit(prev) || g.out_set(x) & interior != 0 {
        return;
    }
    let exits = g.out_set(x) & covered;
    let interior = interior | bit(x);
    path.push(x);
    match exits.count_ones() {
        0 => {
            for y in members(g.out_set(x) & !(built | bit(x))) {
                extend_induced(g, covered, interior, y, path, emit);
            }
        }
        1 => {
            let mut ear = path.clone();
            ear.push(exits.trailing_zeros() as usize + 1);
            emit(interior, ear);
        }
        _ => {}
    }
    path.pop();
}

/// An ear decomposition whose initial cycle passes through vertex 1 and
/// which has as few trivial ears as possible. Trivial ears come last.
///
/// Exhaustive over covered-vertex sets, so exponential in `n`.
pub fn ear_decomposition(g: &DirectedGraph) -> Result<EarDecomposition> {
    require_strongly_connected(g)?;
    if g.n() == 1 {
        return Err(Error::InvalidGraph(
            "a single vertex has no ear decomposition".into(),
        ));
    }
    let mut memo = HashMap::new();
    most_ears(g, bit(1), &mut memo);

    let mut seqs = Vec::new();
    let mut covered = bit(1);
    while covered != g.all_vertices() {
        let (_, step) = &memo[&covered];
        let (interior, ear) = step.clone().expect("strongly connected graphs always extend");
        seqs.push(ear);
        covered |= interior;
    }
    let mut used: HashSet<(usize, usize)> = seqs
        .iter()
        .flat_map(|s| s.windows(2).map(|w| (w[0], w[1])))
        .collect();
    for e in g.edges() {
        if used.insert(e) {
            seqs.push(vec![e.0, e.1]);
        }
    }
    Ok(EarDecomposition::from_vertex_sequences(seqs))
}

type Step = Option<(VertexSet, Vec<usize>)>;

/// Maximum number of ears (each adding at least one vertex) needed to
/// cover the rest of the graph from `covered`.
fn most_ears(g: &DirectedGraph, covered: VertexSet, memo: &mut HashMap<VertexSet, (usize, Step)>) -> usize {
    if covered == g.all_vertices() {
        return 0;
    }
    if let Some((count, _)) = memo.get(&covered) {
        return *count;
    }
    let mut best: (usize, Step) = (0, None);
    for (interior, ear) in open_ears(g, covered) {
        let count = 1 + most_ears(g, covered | interior, memo);
        if best.1.is_none() || count > best.0 {
            best = (count, Some((interior, ear)));
        }
    }
    let count = best.0;
    memo.insert(covered, best);
    count
}

/// All ways to leave `covered` along new vertices and come back, one path
/// per distinct interior set (only that set matters for what follows).
fn open_ears(g: &DirectedGraph, covered: VertexSet) -> Vec<(VertexSet, Vec<usize>)> {
    fn walk(
        g: &DirectedGraph,
        covered: VertexSet,
        interior: VertexSet,
        path: &mut Vec<usize>,
        out: &mut HashMap<VertexSet, Vec<usize>>,
    ) {
        let x = *path.last().expect("non-empty path");
        if let Some(w) = members(g.out_set(x) & covered).next() {
            out.entry(interior).or_insert_with(|| {
                let mut ear = path.clone();
                ear.push(w);
                ear
            });
        }
        for y in members(g.out_set(x) & !(covered | interior)) {
            path.push(y);
            walk(g, covered, interior | bit(y), path, out);
            path.pop();
        }
    }

    let mut out = HashMap::new();
    for v0 in members(covered) {
        for x in members(g.out_set(v0) & !covered) {
            let mut path = vec![v0, x];
            walk(g, covered, bit(x), &mut path, &mut out);
        }
    }
    let mut found: Vec<_> = out.into_iter().collect();
    found.sort();
    found
}
