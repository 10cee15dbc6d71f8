//! Exhaustive census of strongly connected graphs with at most `2n - 2`
//! edges, up to relabelling of vertices `2..=n`.
//!
//! Strong connectivity needs every vertex to have an out-edge, so subsets
//! with fewer than `n` edges are skipped.

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalKey};
use crate::ears::find_nontrivial_ear_decomposition;
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::ident::{b_rank, Config};
use crate::structure::{inductive_ordering, is_minimally_strongly_connected};

pub const MIN_CENSUS_VERTICES: usize = 2;
pub const MAX_CENSUS_VERTICES: usize = 6;

pub const CSV_HEADER: &str = "n,G,G_star,G_c,G_ISC,G_MSC";

fn check_size(n: usize) -> Result<()> {
    if (MIN_CENSUS_VERTICES..=MAX_CENSUS_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedSize {
            n,
            min: MIN_CENSUS_VERTICES,
            max: MAX_CENSUS_VERTICES,
        })
    }
}

/// Next larger integer with the same number of set bits.
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

fn strongly_connected(n: usize, out: &[u64], inc: &[u64]) -> bool {
    let all = (1u64 << n) - 1;
    let reach = |adj: &[u64]| {
        let (mut seen, mut frontier) = (1u64, 1u64);
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    };
    reach(out) == all && reach(inc) == all
}

/// Canonical keys of every strongly connected arc subset whose lowest arc
/// is `first` and which has `size` arcs.
fn keys_with_lowest(n: usize, arcs: &[(usize, usize)], first: usize, size: usize) -> Vec<CanonicalKey> {
    let rest = arcs.len() - first - 1;
    if size - 1 > rest {
        return Vec::new();
    }
    let mut keys = Vec::new();
    let mut out = [0u64; MAX_CENSUS_VERTICES];
    let mut inc = [0u64; MAX_CENSUS_VERTICES];
    let end = 1u64 << rest;
    let mut combo = (1u64 << (size - 1)) - 1;
    while combo < end {
        let mask = (combo << (first + 1)) | (1 << first);
        out[..n].fill(0);
        inc[..n].fill(0);
        let mut m = mask;
        while m != 0 {
            let (u, v) = arcs[m.trailing_zeros() as usize];
            out[u] |= 1 << v;
            inc[v] |= 1 << u;
            m &= m - 1;
        }
        if strongly_connected(n, &out[..n], &inc[..n]) {
            let edges = (0..arcs.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| (arcs[b].0 + 1, arcs[b].1 + 1));
            let g = DirectedGraph::new(n, edges).expect("arcs are simple");
            keys.push(canonical_form(&g).expect("census sizes are canonicalizable"));
        }
        if combo == 0 {
            break;
        }
        combo = next_combination(combo);
    }
    keys
}

/// One representative per class, in increasing canonical-key order.
pub fn enumerate_class(n: usize) -> Result<Vec<DirectedGraph>> {
    check_size(n)?;
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let jobs: Vec<(usize, usize)> = (n..=2 * n - 2)
        .flat_map(|size| (0..arcs.len()).map(move |first| (first, size)))
        .collect();
    let mut keys: Vec<CanonicalKey> = jobs
        .into_par_iter()
        .flat_map_iter(|(first, size)| keys_with_lowest(n, &arcs, first, size))
        .collect();
    keys.par_sort_unstable();
    keys.dedup();
    Ok(keys.iter().map(CanonicalKey::graph).collect())
}

/// Per-graph classification.
#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub graph: DirectedGraph,
    pub rank: usize,
    #[serde(rename = "L_size")]
    pub l_size: usize,
    pub expected: bool,
    pub nontrivial_ear_decomposition: bool,
    pub inductively_strongly_connected: bool,
    pub minimally_strongly_connected: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    #[serde(rename = "G")]
    pub total: usize,
    #[serde(rename = "G_star")]
    pub expected: usize,
    #[serde(rename = "G_c")]
    pub nontrivial_ear_decomposition: usize,
    #[serde(rename = "G_ISC")]
    pub isc: usize,
    #[serde(rename = "G_MSC")]
    pub msc: usize,
}

impl CensusRow {
    pub fn from_entries(n: usize, entries: &[CensusEntry]) -> Self {
        let count = |f: fn(&CensusEntry) -> bool| entries.iter().filter(|e| f(e)).count();
        CensusRow {
            n,
            total: entries.len(),
            expected: count(|e| e.expected),
            nontrivial_ear_decomposition: count(|e| e.nontrivial_ear_decomposition),
            isc: count(|e| e.inductively_strongly_connected),
            msc: count(|e| e.minimally_strongly_connected),
        }
    }

    pub fn counts(&self) -> (usize, usize, usize, usize, usize) {
        (
            self.total,
            self.expected,
            self.nontrivial_ear_decomposition,
            self.isc,
            self.msc,
        )
    }

    pub fn to_csv(&self) -> String {
        let (a, b, c, d, e) = self.counts();
        format!("{},{a},{b},{c},{d},{e}", self.n)
    }
}

pub fn classify_graph(g: &DirectedGraph, config: &Config) -> Result<CensusEntry> {
    let field = config.field(g.n())?;
    let r = b_rank(g, &field, config.trials, config.seed);
    Ok(CensusEntry {
        graph: g.clone(),
        rank: r.rank,
        l_size: r.l_size,
        expected: r.full_rank,
        nontrivial_ear_decomposition: find_nontrivial_ear_decomposition(g)?.is_some(),
        inductively_strongly_connected: inductive_ordering(g)?.is_some(),
        minimally_strongly_connected: is_minimally_strongly_connected(g)?,
    })
}

/// Classifies every representative, in [`enumerate_class`] order.
pub fn classify_entries(n: usize, config: &Config) -> Result<Vec<CensusEntry>> {
    enumerate_class(n)?
        .par_iter()
        .map(|g| classify_graph(g, config))
        .collect()
}

pub fn classify(n: usize, config: &Config) -> Result<CensusRow> {
    Ok(CensusRow::from_entries(n, &classify_entries(n, config)?))
}
