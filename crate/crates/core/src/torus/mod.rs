//! Periodic boundary conditions: the group algebra of a finite torus,
//! symplectic automata on it and translation-invariant stabilizer states.

mod json;
mod lattice;
mod linalg;
mod poly;
mod sca;

pub use json::TorusDoc;
pub use lattice::TorusLattice;
pub use poly::{torus_invert, TorusPoly, DEFAULT_SITE_LIMIT};
pub use sca::{
    gamma_from_adjacency, graph_state_automaton, parse_adjacency, torus_complete,
    torus_complete_with_limit, torus_stabilizer_verdict, torus_stabilizer_verdict_with_limit,
    torus_symplectic_form, torus_validate, TorusSca, TorusVector, TorusVerdict,
};

#[cfg(test)]
mod properties;
