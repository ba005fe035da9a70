//! Root systems, Weyl group orbits, Levi subgroups and character lattices.

pub mod lattice;
pub mod levi;
pub mod root_system;
pub mod types;
pub mod weyl;

pub use levi::{levi_datum, Component, LeviDatum};
pub use root_system::{Root, RootSystem, Weight};
pub use types::{LieType, Series, SimpleFactor};
