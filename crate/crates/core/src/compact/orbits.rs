//! (G×G)-orbits of X, one per face of P meeting the dominant chamber.

use serde::{Deserialize, Serialize};

use super::model::Model;
use crate::error::Result;
use crate::geom::cone::{ConeJson, RationalCone};
use crate::geom::weight_polytope::{cone_at_face, dual_cone, Face};
use crate::lie::{LeviDatum, Weight};

/// Stabilizer data of the base point e_Γ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilizer {
    /// Simple roots spanning the Levi of the parabolic P_Γ (those in |Γ| or orthogonal to ⟨Γ⟩).
    pub parabolic: Vec<usize>,
    /// Levi acting on Γ through its direction space.
    pub levi_dir: LeviDatum,
    /// Semisimple part centralizing ⟨Γ⟩.
    pub levi_perp: LeviDatum,
    /// HNF basis of the lattice |Γ|_ℤ.
    pub dir_lattice: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    pub face: Face,
    pub dimension: usize,
    pub closed: bool,
    /// C_Y, dual to the cone of C∩P at C∩Γ.
    pub cone: ConeJson,
    /// Colors: simple roots orthogonal to ⟨Γ⟩.
    pub colors: Vec<usize>,
    pub stabilizer: Stabilizer,
    /// Weights of V on Γ, which carry e_Γ.
    pub base_weights: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPoset {
    pub orbits: Vec<OrbitDescriptor>,
    /// Covering pairs (i, j): Y_i lies in the closure of Y_j, i.e. Γ_i ⊂ Γ_j.
    pub edges: Vec<(usize, usize)>,
}

impl OrbitPoset {
    /// Index of the open orbit.
    pub fn open(&self) -> usize {
        self.orbits.iter().enumerate().max_by_key(|(_, o)| o.face.dim).map(|(i, _)| i).unwrap()
    }

    pub fn closed(&self) -> Vec<usize> {
        (0..self.orbits.len()).filter(|&i| self.orbits[i].closed).collect()
    }

    pub fn is_chain(&self) -> bool {
        let n = self.orbits.len();
        self.edges.len() + 1 == n && {
            let mut out = vec![0; n];
            let mut inn = vec![0; n];
            for &(a, b) in &self.edges {
                out[a] += 1;
                inn[b] += 1;
            }
            out.iter().all(|&x| x <= 1) && inn.iter().all(|&x| x <= 1)
        }
    }

    pub fn to_dot(&self, model: &Model) -> String {
        let mut s = String::from("digraph orbits {\n  rankdir=BT;\n");
        for (i, o) in self.orbits.iter().enumerate() {
            let pg: Vec<String> = o.face.pi_gamma.iter().map(|j| format!("a{}", j + 1)).collect();
            let v: Vec<String> = o.face.dominant_vertices(&model.rs).iter().map(|w| model.rs.format_weight(w)).collect();
            s += &format!(
                "  y{} [label=\"dim {}\\nPi_G={{{}}}\\n{}\"{}];\n",
                i,
                o.dimension,
                pg.join(","),
                v.join(" "),
                if o.closed { ", shape=box" } else { "" }
            );
        }
        for (a, b) in &self.edges {
            s += &format!("  y{} -> y{};\n", a, b);
        }
        s += "}\n";
        s
    }
}

pub fn orbit_dimension(model: &Model, face: &Face) -> usize {
    let dim_l = model.rs.dim + 2 * face.perp_positive_roots;
    model.dim_group() - dim_l + face.dim
}

pub fn orbit_descriptor(model: &Model, face: &Face, module_weights: &[(Weight, u64)]) -> Result<OrbitDescriptor> {
    let rs = &model.rs;
    let cone: RationalCone = dual_cone(rs, &cone_at_face(rs, &model.polytope, face));
    let mut parabolic: Vec<usize> = face.pi_gamma.iter().chain(&face.pi_gamma_perp).copied().collect();
    parabolic.sort();
    parabolic.dedup();
    let top = face.support.iter().zip(&face.vertices[0]).map(|(a, b)| a * b).sum::<i64>();
    let base_weights = module_weights
        .iter()
        .filter(|(w, _)| face.support.iter().zip(w).map(|(a, b)| a * b).sum::<i64>() == top)
        .map(|(w, _)| w.clone())
        .collect();
    Ok(OrbitDescriptor {
        face: face.clone(),
        dimension: orbit_dimension(model, face),
        closed: face.is_vertex(),
        cone: cone.to_json(),
        colors: face.pi_gamma_perp.clone(),
        stabilizer: Stabilizer {
            parabolic,
            levi_dir: LeviDatum::from_indices(rs, &face.pi_gamma),
            levi_perp: LeviDatum::from_indices(rs, &face.pi_gamma_perp),
            dir_lattice: face.dir_lattice.clone(),
        },
        base_weights,
    })
}

pub fn orbit_poset(model: &Model) -> Result<OrbitPoset> {
    let mw = model.module_weights()?;
    let faces = model.faces();
    let orbits = faces.iter().map(|f| orbit_descriptor(model, f, &mw)).collect::<Result<Vec<_>>>()?;
    let n = faces.len();
    let below = |a: usize, b: usize| a != b && faces[b].contains_face(&faces[a]);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if below(a, b) && !(0..n).any(|c| below(a, c) && below(c, b)) {
                edges.push((a, b));
            }
        }
    }
    Ok(OrbitPoset { orbits, edges })
}
