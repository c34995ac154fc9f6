//! Decomposition of one-dimensional automata into shears and local Fourier transforms.

mod decompose;
mod generator;

pub use decompose::{column_degree, decompose, reduce_step, sl2_constant_decompose};
pub use generator::{fourier_matrix, shear_matrix, Generator, GeneratorSeq};

#[cfg(test)]
mod properties;
