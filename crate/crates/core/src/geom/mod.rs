//! Exact rational polyhedral geometry.

pub mod cone;
pub mod hilbert;
pub mod linalg;
pub mod polytope;
pub mod toric;
pub mod weight_polytope;
