use serde::Serialize;

use super::bmatrix::{b_pattern, b_rank, build_b, BRank, IndexedBMatrix};
use super::coeff::{jacobian_rank, JacobianRank};
use super::params::ParameterAssignment;
use super::support::condition_support;
use super::verdict::{decide, Config, Verdict};
use crate::ears::{find_nontrivial_ear_decomposition, EarDecomposition};
use crate::error::Result;
use crate::graph::DirectedGraph;
use crate::structure::{inductive_ordering, is_minimally_strongly_connected};

/// Every check the library knows, run on one graph.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub n: usize,
    pub m: usize,
    pub edge_bound: usize,
    pub condition_support: Option<(usize, usize)>,
    pub nontrivial_ear_decomposition: Option<EarDecomposition>,
    pub minimally_strongly_connected: bool,
    pub inductive_ordering: Option<Vec<usize>>,
    pub b_rank: BRank,
    pub jacobian: JacobianRank,
    pub verdict: Verdict,
    /// Symbolic `B(G)` rendered with row and column labels.
    #[serde(skip)]
    pub b_symbolic: String,
    /// `B(G)` at the first random point of the rank test.
    #[serde(skip)]
    pub b_evaluated: IndexedBMatrix,
}

pub fn explain(g: &DirectedGraph, config: &Config) -> Result<Report> {
    let verdict = decide(g, config)?;
    let field = config.field(g.n())?;
    let (sets, pattern) = b_pattern(g);
    let b_symbolic = super::bmatrix::render_labelled(&sets, |r, c| pattern[(r, c)]);
    let first = ParameterAssignment::random(g, &field, &mut super::params::trial_rng(config.seed, 0));
    Ok(Report {
        n: g.n(),
        m: g.edge_count(),
        edge_bound: 2 * g.n() - 2,
        condition_support: condition_support(g),
        nontrivial_ear_decomposition: find_nontrivial_ear_decomposition(g)?,
        minimally_strongly_connected: is_minimally_strongly_connected(g)?,
        inductive_ordering: inductive_ordering(g)?,
        b_rank: b_rank(g, &field, config.trials, config.seed),
        jacobian: jacobian_rank(g, &field, config.trials, config.seed),
        verdict,
        b_symbolic,
        b_evaluated: build_b(g, &field, &first)?,
    })
}
