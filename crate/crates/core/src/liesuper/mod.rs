//! Lie superalgebras in characteristic 2, their axioms and restricted structure.

mod adjoint;
mod algebra;
pub mod fixtures;
pub mod random;
pub(crate) mod validate;

pub use adjoint::adjoint_module;
pub use algebra::LieSuperAlgebra;
pub use validate::{
    flatten_to_restricted, validate_all, validate_restricted, validate_superalgebra, Axiom, AxiomCheck, Check, Report,
    RestrictedFlattening, Status, ValidationReport, Witness,
};

#[cfg(test)]
mod tests;
