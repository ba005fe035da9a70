//! Colored fan of the normalization of X: one colored cone per closed orbit.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::model::Model;
use crate::error::{Error, Result};
use crate::geom::cone::{ConeJson, RationalCone};
use crate::geom::linalg::{primitive_q, Q, Z};
use crate::geom::weight_polytope::{cone_at_vertex, dual_cone};
use crate::lie::Weight;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredCone {
    pub vertex: Weight,
    pub cone: ConeJson,
    pub colors: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredFan {
    pub label: String,
    pub cones: Vec<ColoredCone>,
    /// The cones cover −C.
    pub complete: bool,
}

pub fn colored_fan(model: &Model) -> Result<ColoredFan> {
    let rs = &model.rs;
    let mut cones = Vec::new();
    for c in model.chamber_vertices() {
        let sigma = cone_at_vertex(rs, &model.polytope, &c.vertex)?;
        let levi = crate::lie::levi_datum(rs, &c.vertex)?;
        cones.push(ColoredCone {
            vertex: c.vertex.clone(),
            cone: dual_cone(rs, &sigma).to_json(),
            colors: levi.simple_root_indices.clone(),
        });
    }
    let complete = covers_antichamber(model)?;
    if !complete {
        return Err(Error::Internal("colored cones do not cover the antidominant chamber".into()));
    }
    Ok(ColoredFan { label: "fan of the normalization".into(), cones, complete })
}

/// The normal cones of C∩P at vertices other than the dominant vertices of P meet −C in
/// lower-dimensional sets only, so the cones at dominant vertices cover −C.
pub fn covers_antichamber(model: &Model) -> Result<bool> {
    let rs = &model.rs;
    let hull = model.polytope.hull();
    let mut chamber = Vec::new();
    for i in 0..rs.rank {
        let mut e = vec![Z::zero(); rs.dim + 1];
        e[i + 1] = Z::from(1);
        chamber.push(e);
    }
    let qv = hull.section_vertices(&hull.vertices, &chamber);
    let dominant: Vec<Vec<Q>> = model
        .chamber_vertices()
        .iter()
        .map(|c| c.vertex.iter().map(|&x| Q::from_integer(x.into())).collect())
        .collect();
    for q in &qv {
        if dominant.contains(q) {
            continue;
        }
        let gens: Vec<Vec<Z>> = qv
            .iter()
            .filter(|x| *x != q)
            .map(|x| primitive_q(&x.iter().zip(q).map(|(a, b)| a - b).collect::<Vec<_>>()))
            .collect();
        let tangent = RationalCone::from_generators(&gens, rs.dim);
        let normal = dual_cone(rs, &tangent);
        let mut ineqs = normal.facets.clone();
        for i in 0..rs.rank {
            let mut e = vec![Z::zero(); rs.dim];
            e[i] = Z::from(-1);
            ineqs.push(e);
        }
        let cut = RationalCone::from_inequalities(&ineqs, &normal.equations, rs.dim);
        if cut.dim() == rs.dim {
            return Ok(false);
        }
    }
    Ok(true)
}
