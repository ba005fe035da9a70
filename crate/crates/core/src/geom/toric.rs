//! Projective toric varieties given by a weight set: support polytope and normality.

use serde::{Deserialize, Serialize};

use super::cone::RationalCone;
use super::hilbert::{grading, hilbert_basis, semigroup_contains, DEFAULT_MAX_PARALLELEPIPED};
use super::linalg::{self, to_i64, zv, Z};
use super::polytope::{sub, Polytope};
use crate::error::{Error, Result};

/// −conv(weights).
pub fn toric_support_polytope(weights: &[Vec<i64>]) -> Result<Polytope> {
    if weights.is_empty() {
        return Err(Error::EmptyWeights);
    }
    let neg: Vec<Vec<i64>> = weights.iter().map(|w| w.iter().map(|x| -x).collect()).collect();
    Ok(Polytope::new(&neg))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricNormality {
    pub normal: bool,
    pub failing_vertex: Option<Vec<i64>>,
    /// A lattice point of the cone at the failing vertex missing from the semigroup.
    pub missing: Option<Vec<i64>>,
}

/// Normality of the torus orbit closure with the given weights. At every vertex λ_i the
/// semigroup generated by λ_j − λ_i must be saturated in `lattice`, which defaults to the
/// lattice generated by all differences.
pub fn toric_orbit_normal(weights: &[Vec<i64>], lattice: Option<&[Vec<i64>]>) -> Result<ToricNormality> {
    let p = Polytope::new(weights);
    let lat: Vec<Vec<Z>> = match lattice {
        Some(l) => linalg::hnf(&l.iter().map(|r| zv(r)).collect::<Vec<_>>()),
        None => {
            let base = &p.points[0];
            linalg::hnf(&p.points.iter().map(|q| zv(&sub(q, base))).collect::<Vec<_>>())
        }
    };
    for v in &p.vertices {
        if let Some(h) = toric_missing_at(&p.points, v, &lat)? {
            return Ok(ToricNormality { normal: false, failing_vertex: Some(v.clone()), missing: Some(h) });
        }
    }
    Ok(ToricNormality { normal: true, failing_vertex: None, missing: None })
}

/// A Hilbert basis element of the cone of conv(points) at `vertex`, in the lattice given by an
/// HNF basis, that the differences p − vertex fail to generate.
pub fn toric_missing_at(points: &[Vec<i64>], vertex: &[i64], lattice: &[Vec<Z>]) -> Result<Option<Vec<i64>>> {
    let n = vertex.len();
    let gens: Vec<Vec<i64>> = points.iter().map(|q| sub(q, vertex)).filter(|d| d.iter().any(|&x| x != 0)).collect();
    if gens.is_empty() {
        return Ok(None);
    }
    let cone = RationalCone::from_generators(&gens.iter().map(|g| zv(g)).collect::<Vec<_>>(), n);
    let hb = hilbert_basis(&cone, lattice, DEFAULT_MAX_PARALLELEPIPED)?;
    let g = to_i64(&grading(&cone)).ok_or_else(|| Error::Internal("grading overflow".into()))?;
    for h in &hb.elements {
        let h = to_i64(h).ok_or_else(|| Error::Internal("Hilbert basis overflow".into()))?;
        if !semigroup_contains(&gens, &h, &g) {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_polytope() {
        assert_eq!(toric_support_polytope(&[vec![0]]).unwrap().vertices, vec![vec![0]]);
        let p = toric_support_polytope(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(p.vertices, vec![vec![-1, 0], vec![0, -1]]);
        assert!(toric_support_polytope(&[]).is_err());
    }

    #[test]
    fn standard_plane() {
        assert!(toric_orbit_normal(&[vec![1, 0], vec![0, 1]], None).unwrap().normal);
    }

    #[test]
    fn zero_two() {
        // saturated in the lattice it generates, not in Z
        assert!(toric_orbit_normal(&[vec![0], vec![2]], None).unwrap().normal);
        let r = toric_orbit_normal(&[vec![0], vec![2]], Some(&[vec![1]])).unwrap();
        assert!(!r.normal);
        assert_eq!(r.missing, Some(vec![1]));
    }

    #[test]
    fn twisted_cubic_vs_gap() {
        assert!(toric_orbit_normal(&[vec![0], vec![1], vec![2], vec![3]], None).unwrap().normal);
        // {0,1,3}: at vertex 0 the semigroup misses 2
        let r = toric_orbit_normal(&[vec![0], vec![1], vec![3]], None).unwrap();
        assert!(!r.normal);
    }
}
