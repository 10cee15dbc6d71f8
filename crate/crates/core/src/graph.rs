//! Simple directed graphs with a distinguished input-output vertex.
//!
//! Vertices are labelled `1..=n` in every public signature; vertex 1 is the
//! input-output compartment. Adjacency is stored as one bitmask per vertex
//! (bit `v - 1` for vertex `v`), which caps graphs at [`MAX_VERTICES`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Bitmask over vertices, bit `v - 1` standing for vertex `v`.
pub type VertexSet = u64;

#[inline]
pub(crate) fn bit(v: usize) -> VertexSet {
    1u64 << (v - 1)
}

/// Iterates the 1-based vertex labels contained in a mask, ascending.
pub(crate) fn members(mut mask: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize + 1;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct DirectedGraph {
    n: usize,
    out: Vec<VertexSet>,
    inc: Vec<VertexSet>,
}

impl DirectedGraph {
    /// Builds a simple digraph. Self-loops, duplicate edges and labels
    /// outside `1..=n` are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            )));
        }
        Ok(Self {
            n,
            out: vec![0; n],
            inc: vec![0; n],
        })
    }

    /// The directed cycle `1 -> 2 -> ... -> n -> 1` (`n >= 2`).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGraph("a cycle needs at least 2 vertices".into()));
        }
        Self::new(n, (1..=n).map(|v| (v, v % n + 1)))
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("duplicate edge {u}->{v}")));
        }
        self.out[u - 1] |= bit(v);
        self.inc[v - 1] |= bit(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::UnknownVertex(v))
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v >= 1 && v <= self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.contains_vertex(u) && self.contains_vertex(v) && self.out[u - 1] & bit(v) != 0
    }

    /// All edges `(u, v)` meaning `u -> v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|u| members(self.out[u - 1]).map(move |v| (u, v)))
            .collect()
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        members(self.out[v - 1])
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        members(self.inc[v - 1])
    }

    pub(crate) fn out_set(&self, v: usize) -> VertexSet {
        self.out[v - 1]
    }

    pub(crate) fn in_set(&self, v: usize) -> VertexSet {
        self.inc[v - 1]
    }

    pub(crate) fn all_vertices(&self) -> VertexSet {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Every ordered pair of vertices is joined by a directed path.
    pub fn is_strongly_connected(&self) -> bool {
        self.is_strongly_connected_on(self.all_vertices())
    }

    /// Strong connectivity of the subgraph induced on `within`. The empty
    /// set and singletons count as strongly connected.
    pub(crate) fn is_strongly_connected_on(&self, within: VertexSet) -> bool {
        if within.count_ones() <= 1 {
            return true;
        }
        let root = within.trailing_zeros() as usize + 1;
        self.reach(root, within, &self.out) == within && self.reach(root, within, &self.inc) == within
    }

    fn reach(&self, root: usize, within: VertexSet, adj: &[VertexSet]) -> VertexSet {
        let mut seen = bit(root);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= adj[v - 1];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Vertices `i` with both `1 -> i` and `i -> 1`.
    pub fn exchanges(&self) -> Vec<usize> {
        members(self.out[0] & self.inc[0]).collect()
    }

    /// Copy of the graph with `u -> v` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.out[u - 1] &= !bit(v);
        g.inc[v - 1] &= !bit(u);
        Ok(g)
    }

    /// Applies a relabelling; `new_label[v - 1]` is the label vertex `v`
    /// receives. The map must be a permutation of `1..=n`.
    pub fn relabel(&self, new_label: &[usize]) -> Result<Self> {
        if new_label.len() != self.n {
            return Err(Error::InvalidGraph("relabelling has the wrong length".into()));
        }
        let mut seen = 0u64;
        for &l in new_label {
            self.check_vertex(l)?;
            seen |= bit(l);
        }
        if seen != self.all_vertices() {
            return Err(Error::InvalidGraph("relabelling is not a permutation".into()));
        }
        Self::new(
            self.n,
            self.edges()
                .into_iter()
                .map(|(u, v)| (new_label[u - 1], new_label[v - 1])),
        )
    }

    /// Parses either supported file format. Input starting with `{` is read
    /// as JSON, anything else as the line-based text format.
    pub fn parse(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            Self::from_json(input)
        } else {
            Self::from_text(input)
        }
    }

    /// `{"n": 3, "edges": [[1, 2], [2, 3], [3, 1]]}`
    pub fn from_json(input: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(input).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let g = Self::try_from(file)?;
        g.reject_isolated()?;
        Ok(g)
    }

    /// First line `n <count>`, then one `u v` pair per line. Blank lines
    /// and `#` comments are ignored.
    pub fn from_text(input: &str) -> Result<Self> {
        let mut lines = input
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let mut words = header.split_whitespace();
        let n = match (words.next(), words.next(), words.next()) {
            (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("bad vertex count {count:?}"),
            })?,
            _ => {
                return Err(Error::Parse {
                    line,
                    message: "expected header `n <count>`".into(),
                })
            }
        };

        let mut g = Self::empty(n).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        for (line, text) in lines {
            let pair: Vec<&str> = text.split_whitespace().collect();
            let parsed = match pair.as_slice() {
                [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
                _ => None,
            };
            let (u, v) = parsed.ok_or_else(|| Error::Parse {
                line,
                message: format!("expected `u v`, got {text:?}"),
            })?;
            g.insert_edge(u, v).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
        }
        g.reject_isolated()?;
        Ok(g)
    }

    fn reject_isolated(&self) -> Result<()> {
        if self.n == 1 {
            return Ok(());
        }
        match (1..=self.n).find(|&v| self.out[v - 1] | self.inc[v - 1] == 0) {
            Some(v) => Err(Error::InvalidGraph(format!("vertex {v} is isolated"))),
            None => Ok(()),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirectedGraph(n={}, {})", self.n, self)
    }
}

impl fmt::Display for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}->{v}")).collect();
        write!(f, "{{{}}}", edges.join(", "))
    }
}

/// On-disk JSON shape of a graph.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphFile> for DirectedGraph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        Self::new(file.n, file.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<DirectedGraph> for GraphFile {
    fn from(g: DirectedGraph) -> Self {
        GraphFile {
            n: g.n,
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}
