use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::root_system::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::geom::linalg::{self, Z};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterLattice {
    /// HNF row basis in Dynkin-label coordinates.
    pub basis: Vec<Vec<i64>>,
    /// Index in the integral weights of the same span.
    pub index: u64,
    pub proper_sublattice: bool,
}

impl CharacterLattice {
    pub fn basis_z(&self) -> Vec<Vec<Z>> {
        self.basis.iter().map(|r| linalg::zv(r)).collect()
    }

    pub fn contains(&self, w: &[i64]) -> bool {
        linalg::lattice_coords(&self.basis_z(), &linalg::zv(w)).is_some()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// The lattice Σℤ(λ_i − λ_j) + Q.
pub fn character_lattice(rs: &RootSystem, weights: &[Weight]) -> Result<CharacterLattice> {
    let first = weights.first().ok_or(Error::EmptyWeights)?;
    let mut gens: Vec<Vec<Z>> = weights[1..]
        .iter()
        .map(|w| linalg::zv(&w.iter().zip(first).map(|(a, b)| a - b).collect::<Vec<_>>()))
        .collect();
    for j in 0..rs.rank {
        gens.push(linalg::zv(&rs.alpha(j)));
    }
    let basis = linalg::hnf(&gens);
    let full = linalg::intersect_with_span(&identity(rs.dim), &basis);
    let index = if basis.is_empty() {
        Z::one()
    } else {
        let coords: Vec<Vec<Z>> = basis.iter().map(|b| linalg::lattice_coords(&full, b).unwrap()).collect();
        linalg::det(&coords).abs()
    };
    let index: u64 = index.try_into().map_err(|_| Error::Internal("lattice index overflow".into()))?;
    Ok(CharacterLattice {
        basis: basis.iter().map(|r| linalg::to_i64(r).unwrap()).collect(),
        index,
        proper_sublattice: index > 1,
    })
}

fn identity(n: usize) -> Vec<Vec<Z>> {
    (0..n).map(|i| (0..n).map(|j| Z::from((i == j) as i64)).collect()).collect()
}
