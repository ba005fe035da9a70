use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::cone::RationalCone;
use crate::geom::weight_polytope::{
    cone_at_vertex, faces_meeting_chamber, faces_via_pi_gamma, polytope_from_orbits, vertices_in_chamber, ChamberVertex,
    Face, WeightPolytope,
};
use crate::lie::lattice::CharacterLattice;
use crate::lie::{levi_datum, LeviDatum, RootSystem, Weight};
use crate::rep::semigroup::lgens_generators;
use crate::rep::{branch_to_levi, weight_system};

/// X = closure of the image of G in P(End V), V = ⊕V(λ_i).
#[derive(Debug)]
pub struct Model {
    pub rs: RootSystem,
    pub weights: Vec<Weight>,
    pub polytope: WeightPolytope,
    faces: OnceLock<Vec<Face>>,
    chamber: OnceLock<Vec<ChamberVertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedOrbit {
    pub weight: Weight,
    pub levi: LeviDatum,
    /// Antidominant one-parameter subgroup whose limit is v_λ ⊗ v_{−λ}.
    pub certificate: Option<Weight>,
}

#[derive(Clone, Debug)]
pub struct SliceDatum {
    pub apex: Weight,
    pub levi: LeviDatum,
    /// L-highest weights μ − λ₀ of V (nonzero), with multiplicities.
    pub branching: Vec<(Weight, u64)>,
    /// λ_i − λ₀ and −α_j for α_j ∉ Π_L.
    pub lgens: Vec<Weight>,
    /// Cone of C∩P at λ₀, shifted to the origin.
    pub sigma: RationalCone,
}

impl Model {
    pub fn new(rs: RootSystem, weights: Vec<Weight>) -> Result<Model> {
        let distinct: BTreeSet<&Weight> = weights.iter().collect();
        if distinct.len() != weights.len() {
            return Err(Error::Domain("highest weights must be distinct".into()));
        }
        let polytope = polytope_from_orbits(&rs, &weights)?;
        Ok(Model { rs, weights, polytope, faces: OnceLock::new(), chamber: OnceLock::new() })
    }

    pub fn parse(ty: &str, weights: &str) -> Result<Model> {
        let rs = RootSystem::parse(ty)?;
        let ws = weights.split(',').map(|w| rs.parse_weight(w)).collect::<Result<Vec<_>>>()?;
        Model::new(rs, ws)
    }

    pub fn lattice(&self) -> &CharacterLattice {
        &self.polytope.lattice
    }

    pub fn dim_group(&self) -> usize {
        self.rs.num_roots() + self.rs.dim
    }

    pub fn chamber_vertices(&self) -> &[ChamberVertex] {
        self.chamber.get_or_init(|| vertices_in_chamber(&self.rs, &self.polytope))
    }

    /// Faces of P meeting C in their relative interior, by dimension then vertex set.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| {
            if self.polytope.is_single() {
                faces_via_pi_gamma(&self.rs, &self.polytope).expect("single weight")
            } else {
                faces_meeting_chamber(&self.rs, &self.polytope)
            }
        })
    }

    pub fn closed_orbits(&self) -> Result<Vec<ClosedOrbit>> {
        self.chamber_vertices()
            .iter()
            .map(|c| {
                Ok(ClosedOrbit { weight: c.vertex.clone(), levi: levi_datum(&self.rs, &c.vertex)?, certificate: c.certificate.clone() })
            })
            .collect()
    }

    pub fn local_slice(&self, l0: &[i64]) -> Result<SliceDatum> {
        if !self.chamber_vertices().iter().any(|c| c.vertex == l0) {
            return Err(Error::NotVertex(self.rs.format_weight(l0)));
        }
        let levi = levi_datum(&self.rs, l0)?;
        let mut branching: Vec<(Weight, u64)> = Vec::new();
        for w in &self.weights {
            for (mu, m) in branch_to_levi(&self.rs, w, &levi)? {
                let d: Weight = mu.iter().zip(l0).map(|(a, b)| a - b).collect();
                if d.iter().all(|&x| x == 0) {
                    continue;
                }
                match branching.iter_mut().find(|(x, _)| *x == d) {
                    Some(e) => e.1 += m,
                    None => branching.push((d, m)),
                }
            }
        }
        branching.sort();
        let lgens = lgens_generators(&self.rs, &self.weights, l0, &levi)?;
        let sigma = cone_at_vertex(&self.rs, &self.polytope, l0)?;
        Ok(SliceDatum { apex: l0.to_vec(), levi, branching, lgens, sigma })
    }

    /// All weights of V, with multiplicity.
    pub fn module_weights(&self) -> Result<Vec<(Weight, u64)>> {
        let mut out: Vec<(Weight, u64)> = Vec::new();
        for w in &self.weights {
            for (k, m) in weight_system(&self.rs, w)?.entries {
                match out.iter_mut().find(|(x, _)| *x == k) {
                    Some(e) => e.1 += m,
                    None => out.push((k, m)),
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::linalg::{primitive, zv};

    #[test]
    fn closed_orbit_counts() {
        let m = Model::parse("A1", "w1").unwrap();
        let c = m.closed_orbits().unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].levi.type_string(), "T1");
        assert_eq!(Model::parse("C2", "3*w1,2*w2").unwrap().closed_orbits().unwrap().len(), 2);
        assert_eq!(Model::parse("A2", "w1,0").unwrap().closed_orbits().unwrap().len(), 1);
        assert!(Model::parse("A2", "w1,w1").is_err());
    }

    #[test]
    fn slices() {
        let m = Model::parse("B3", "w3").unwrap();
        let s = m.local_slice(&[0, 0, 1]).unwrap();
        assert_eq!(s.levi.type_string(), "A2+T1");
        assert_eq!(s.branching.len(), 3);
        let mut rays: Vec<_> = s.branching.iter().map(|(w, _)| primitive(zv(w))).collect();
        rays.sort();
        assert_eq!(rays, s.sigma.rays);

        let m = Model::parse("C2", "3*w1,2*w2").unwrap();
        let s = m.local_slice(&[3, 0]).unwrap();
        assert_eq!(s.levi.simple_root_indices, vec![1]);
        assert_eq!(s.levi.type_string(), "A1+T1");

        let m = Model::parse("A1", "w1").unwrap();
        let s = m.local_slice(&[1]).unwrap();
        assert_eq!(s.sigma.rays, vec![zv(&[-1])]);
        assert!(m.local_slice(&[-1]).is_err());
    }
}
