//! Weight systems, tensor products, branching to Levi subgroups, and highest-weight
//! semigroups.

pub mod branch;
pub mod semigroup;
pub mod tensor;
pub mod weights;

pub use branch::{branch_to_levi, IrrepLabel};
pub use semigroup::{generate_semigroup, generate_semigroup_above, lgens_generators, moment_witness, HighestWeightSemigroup};
pub use tensor::{tensor_decompose, tensor_decompose_sub};
pub use weights::{weight_system, weight_system_sub, WeightSystem};
