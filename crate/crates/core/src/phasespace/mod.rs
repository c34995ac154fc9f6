//! Phase-space vectors, the Laurent-valued symplectic form, isotropy and the
//! signed Weyl operator algebra.

mod isotropy;
mod pauli;
mod vector;

pub use isotropy::{
    embed_isotropic, isotropy_verdict, vector_reflection_center, IsotropyVerdict, Maximality,
};
pub use pauli::{
    commutation_phase, pauli_to_vector, phase_modulus, vector_to_pauli, weyl_multiply,
    PauliProduct,
};
pub use vector::{symplectic_form, PhaseVector};
pub(crate) use vector::ordering_form;

#[cfg(test)]
mod properties;
