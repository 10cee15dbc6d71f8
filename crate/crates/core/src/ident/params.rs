use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{FieldElement, Matrix, PrimeField};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

/// Values for every free entry of the parameter matrix `A(G)`: `a_ij` for
/// each edge `j -> i` and every diagonal `a_ii`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterAssignment {
    n: usize,
    diag: Vec<FieldElement>,
    /// Keyed by matrix position `(i, j)`, i.e. the edge `j -> i`.
    edges: BTreeMap<(usize, usize), FieldElement>,
    seed: Option<u64>,
}

/// Matrix positions of the free parameters: the diagonal `(1,1)..(n,n)`
/// first, then `(i, j)` for each edge `j -> i` in lexicographic order.
pub fn parameter_slots(g: &DirectedGraph) -> Vec<(usize, usize)> {
    let mut edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (v, u)).collect();
    edges.sort_unstable();
    (1..=g.n()).map(|i| (i, i)).chain(edges).collect()
}

pub(crate) fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

impl ParameterAssignment {
    pub fn new(
        g: &DirectedGraph,
        diag: Vec<FieldElement>,
        edges: BTreeMap<(usize, usize), FieldElement>,
    ) -> Result<Self> {
        let p = ParameterAssignment {
            n: g.n(),
            diag,
            edges,
            seed: None,
        };
        p.check(g)?;
        Ok(p)
    }

    /// Values listed in [`parameter_slots`] order.
    pub fn from_slots(g: &DirectedGraph, values: &[FieldElement]) -> Result<Self> {
        let slots = parameter_slots(g);
        if values.len() != slots.len() {
            return Err(Error::ParameterMismatch(format!(
                "expected {} values, got {}",
                slots.len(),
                values.len()
            )));
        }
        let n = g.n();
        Ok(ParameterAssignment {
            n,
            diag: values[..n].to_vec(),
            edges: slots[n..]
                .iter()
                .copied()
                .zip(values[n..].iter().copied())
                .collect(),
            seed: None,
        })
    }

    /// Uniform values drawn from `rng`, in slot order.
    pub fn random(g: &DirectedGraph, field: &PrimeField, rng: &mut impl rand::Rng) -> Self {
        let values = field.sample_many(rng, g.n() + g.edge_count());
        Self::from_slots(g, &values).expect("slot count matches by construction")
    }

    /// Uniform values reproducible from `seed` alone.
    pub fn from_seed(g: &DirectedGraph, field: &PrimeField, seed: u64) -> Self {
        let mut p = Self::random(g, field, &mut trial_rng(seed, 0));
        p.seed = Some(seed);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Value at matrix position `(i, j)`; `None` for a structural zero.
    pub fn get(&self, i: usize, j: usize) -> Option<FieldElement> {
        if i == j {
            self.diag.get(i - 1).copied()
        } else {
            self.edges.get(&(i, j)).copied()
        }
    }

    pub fn values(&self) -> Vec<FieldElement> {
        self.diag.iter().chain(self.edges.values()).copied().collect()
    }

    /// Errors unless the assignment covers exactly the free entries of `A(g)`.
    pub fn check(&self, g: &DirectedGraph) -> Result<()> {
        if self.n != g.n() || self.diag.len() != g.n() {
            return Err(Error::ParameterMismatch(format!(
                "assignment is for {} vertices, graph has {}",
                self.diag.len(),
                g.n()
            )));
        }
        for &(i, j) in self.edges.keys() {
            if i == j || !g.has_edge(j, i) {
                return Err(Error::ParameterMismatch(format!(
                    "a_{i}{j} given but {j}->{i} is not an edge"
                )));
            }
        }
        if self.edges.len() != g.edge_count() {
            return Err(Error::ParameterMismatch(format!(
                "{} edge values for {} edges",
                self.edges.len(),
                g.edge_count()
            )));
        }
        Ok(())
    }

    /// The evaluated parameter matrix `A`.
    pub fn matrix(&self) -> Matrix<FieldElement> {
        let mut a = Matrix::filled(self.n, self.n, FieldElement::default());
        for (i, &v) in self.diag.iter().enumerate() {
            a[(i, i)] = v;
        }
        for (&(i, j), &v) in &self.edges {
            a[(i - 1, j - 1)] = v;
        }
        a
    }
}
