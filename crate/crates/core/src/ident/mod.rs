//! The two rank criteria, the cheap structural certificates, and the
//! combined decision.

mod bmatrix;
mod coeff;
mod params;
mod report;
mod support;
mod verdict;

pub use bmatrix::{
    b_entry, b_pattern, b_rank, build_b, index_sets, render_labelled, BEntry, BRank, IndexSets,
    IndexedBMatrix,
};
pub use coeff::{coefficient_map, jacobian, jacobian_rank, JacobianRank};
pub use params::{parameter_slots, ParameterAssignment};
pub use report::{explain, Report};
pub use support::condition_support;
pub use verdict::{decide, Answer, Certificate, Config, Mode, Shortcut, Verdict};
