pub mod automaton;
pub mod error;
pub mod factorize;
pub mod oracle;
pub mod phasespace;
pub mod ring;
pub mod torus;

pub use automaton::{Cqca, PhaseData, ScaMatrix};
pub use error::{Error, Result};
pub use phasespace::{PauliProduct, PhaseVector};
pub use ring::{FieldElement, HalfLatticePoint, LaurentPoly};
