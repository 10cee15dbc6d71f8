use serde::Serialize;

use super::params::{parameter_slots, trial_rng, ParameterAssignment};
use crate::algebra::{
    char_poly_coeffs, matrix::rank_capped, Dual, DualRing, FieldElement, Matrix, PrimeField, Ring,
};
use crate::error::Result;
use crate::graph::DirectedGraph;

/// Characteristic polynomial coefficients of `A` followed by those of `A`
/// with row and column 1 deleted.
fn double_char_poly<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    let mut c = char_poly_coeffs(ring, a);
    c.extend(char_poly_coeffs(ring, &a.minor(0)));
    c
}

/// The double characteristic polynomial map at `params`, length `2n - 1`.
pub fn coefficient_map(
    g: &DirectedGraph,
    field: &PrimeField,
    params: &ParameterAssignment,
) -> Result<Vec<FieldElement>> {
    params.check(g)?;
    Ok(double_char_poly(field, &params.matrix()))
}

/// Jacobian of [`coefficient_map`]: `(2n - 1) x (n + m)`, one column per
/// entry of [`parameter_slots`]. Each column comes from one evaluation over
/// dual numbers with that parameter perturbed.
pub fn jacobian(
    g: &DirectedGraph,
    field: &PrimeField,
    params: &ParameterAssignment,
) -> Result<Matrix<FieldElement>> {
    params.check(g)?;
    let dual = DualRing::new(*field);
    let base = params.matrix().map(|&x| Dual::constant(x));
    let slots = parameter_slots(g);
    let mut columns = Vec::with_capacity(slots.len());
    for &(i, j) in &slots {
        let mut a = base.clone();
        a[(i - 1, j - 1)] = dual.variable(a[(i - 1, j - 1)].re);
        columns.push(
            double_char_poly(&dual, &a)
                .into_iter()
                .map(|d| d.eps)
                .collect::<Vec<_>>(),
        );
    }
    let rows = 2 * g.n() - 1;
    Ok(Matrix::from_fn(rows, slots.len(), |r, c| columns[c][r]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JacobianRank {
    pub rank: usize,
    /// `n + m`
    pub parameters: usize,
    /// Evaluations actually performed; stops early at `m + 1`.
    pub trials: usize,
    pub expected: bool,
}

/// Maximum Jacobian rank over up to `trials` random points. The rank never
/// exceeds `m + 1` because scaling the states by a diagonal matrix fixing
/// vertex 1 leaves the map unchanged.
pub fn jacobian_rank(g: &DirectedGraph, field: &PrimeField, trials: usize, seed: u64) -> JacobianRank {
    let target = g.edge_count() + 1;
    let mut rng = trial_rng(seed, 1);
    let mut best = 0;
    let mut done = 0;
    while best < target && done < trials {
        let params = ParameterAssignment::random(g, field, &mut rng);
        let jac = jacobian(g, field, &params).expect("random assignment matches");
        best = best.max(rank_capped(field, &jac, usize::MAX));
        done += 1;
    }
    assert!(best <= target, "jacobian rank {best} exceeds m + 1 = {target}");
    JacobianRank {
        rank: best,
        parameters: g.n() + g.edge_count(),
        trials: done,
        expected: best == target,
    }
}
