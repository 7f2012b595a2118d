//! Restricted Lie superalgebras over fields of characteristic 2.

pub mod error;
pub mod gf2la;
pub mod koszul;
pub mod envelope;
pub mod liesuper;
pub mod projs;
pub mod varieties;

pub use error::{Error, Result};
pub use gf2la::{Elem, Field, Matrix, Subspace};
pub use liesuper::LieSuperAlgebra;
