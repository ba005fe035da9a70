//! Normality and smoothness of X along closed orbits.

pub mod normality;
pub mod shortcuts;
pub mod smoothness;

use serde::{Deserialize, Serialize};

use crate::compact::Model;
use crate::error::{Error, Result};
use crate::geom::hilbert::{hilbert_basis, DEFAULT_MAX_PARALLELEPIPED};
use crate::geom::linalg::to_i64;
use crate::lie::Weight;

pub use normality::{normality_at, semigroup_membership, torus_closure_normal, NormalityOptions};
pub use shortcuts::known_normal_shortcuts;
pub use smoothness::{smoothness_at, smoothness_regular};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Normal,
    NotNormal,
    Smooth,
    NotSmooth,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// μ is not in the semigroup, kμ is.
    Missing { weight: Weight, multiple: usize },
    /// First violated smoothness condition, 1 to 4.
    Condition(u8),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub vertex: Weight,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Degree cap of the semigroup search (0 if no search ran).
    pub cap: usize,
    /// Whether the cap reaches the degree bound of every weight examined, making the verdict a proof.
    pub exhaustive: bool,
    pub hilbert_basis_size: usize,
    pub shortcut_provenance: Option<String>,
    /// Groups {π_1, …, π_n} of the smoothness partition, when one was found.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<Weight>>>,
}

impl CriterionReport {
    fn new(vertex: &[i64], verdict: Verdict) -> Self {
        CriterionReport {
            vertex: vertex.to_vec(),
            verdict,
            witness: None,
            cap: 0,
            exhaustive: true,
            hilbert_basis_size: 0,
            shortcut_provenance: None,
            partition: None,
        }
    }
}

/// Covector f with f(ν) = −(c, ν) for the vertex certificate c: negative on Σ₀ ∖ 0 and
/// nonnegative on the roots of L.
pub fn vertex_functional(model: &Model, l0: &[i64]) -> Option<Vec<i64>> {
    let rs = &model.rs;
    let c = model.chamber_vertices().iter().find(|c| c.vertex == l0)?.certificate.clone()?;
    Some((0..rs.dim).map(|j| -(0..rs.dim).map(|i| c[i] * rs.gram_z[i][j]).sum::<i64>()).collect())
}

pub fn eval(f: &[i64], w: &[i64]) -> i64 {
    f.iter().zip(w).map(|(a, b)| a * b).sum()
}

/// Hilbert basis of 𝔛 ∩ Σ₀ at a dominant vertex.
pub fn slice_hilbert_basis(model: &Model, l0: &[i64]) -> Result<Vec<Weight>> {
    let slice = model.local_slice(l0)?;
    let hb = hilbert_basis(&slice.sigma, &model.lattice().basis_z(), DEFAULT_MAX_PARALLELEPIPED)?;
    hb.elements.iter().map(|h| to_i64(h).ok_or_else(|| Error::Internal("Hilbert basis overflow".into()))).collect()
}
