//! Exact lattice and configuration geometry of the discriminant-four K3
//! surface `X4`, built from the double cover of the blown-up del Pezzo
//! surface `Y4` branched along its anticanonical curves.

pub mod blowup;
pub mod cover;
pub mod cremona;
pub mod error;
pub mod graph;
pub mod json;
pub mod kodaira;
pub mod labels;
pub mod lattice;
pub mod report;
pub mod symmetry;

pub use error::{Error, Result};
