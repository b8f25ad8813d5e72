//! Exact-arithmetic toolkit for Hermitian lattices over the Eisenstein and
//! Gaussian integers: reflection groups, diagram relation verification,
//! root-configuration search, and finite matrix-group orders.

pub mod diagram;
pub mod error;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod quotients;
pub mod reflection;
pub mod ring;
pub mod roots;
pub mod shortvec;
pub mod verify;

pub use error::{Error, Result};
