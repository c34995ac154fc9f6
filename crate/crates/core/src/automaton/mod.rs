//! Symplectic cellular automata and their phase-exact action on Pauli products.

mod complete;
mod json;
mod matrix;
mod phase;

pub use complete::complete_generator;
pub use json::AutomatonDoc;
pub(crate) use json::json_error;
pub use matrix::{trivial_construction, ScaMatrix, Validation};
pub use phase::{Cqca, PhaseData};

#[cfg(test)]
mod properties;
