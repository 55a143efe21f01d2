//! Exact computation of Hom-Lie structures and related spaces on
//! finite-dimensional algebras given by structure constants.

pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod exactlin;
pub mod homsolver;
pub mod jordan;
pub mod modstruct;

pub use error::{Error, Result};
