//! Decide whether a linear compartment model admits an identifiable
//! scaling reparametrization.
//!
//! A model is a strongly connected digraph with input and output at vertex 1
//! and a leak at every vertex. [`decide`] answers YES or NO with a
//! [`Certificate`]; the rank test on `B(G)` is always decisive, and the
//! Jacobian of the double characteristic polynomial map serves as an
//! independent oracle.

pub mod algebra;
pub mod canon;
pub mod census;
pub mod ears;
pub mod error;
pub mod graph;
pub mod ident;
pub mod random;
pub mod structure;
pub mod transforms;

pub use canon::{canonical_form, canonical_representative, CanonicalKey};
pub use ears::{ear_decomposition, find_nontrivial_ear_decomposition, Ear, EarDecomposition};
pub use error::{Error, Result};
pub use graph::DirectedGraph;
pub use ident::{decide, explain, Answer, Certificate, Config, Mode, Verdict};
pub use structure::{inductive_ordering, is_minimally_strongly_connected};
