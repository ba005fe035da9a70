//! Rational polyhedral cones in double description: extreme rays plus lineality on the
//! generator side, facet normals plus equations on the constraint side.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::{self, dot, is_zero, primitive, primitive_q, qv, Q, Z};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    pub ambient_dim: usize,
    /// Primitive extreme rays modulo lineality, sorted.
    pub rays: Vec<Vec<Z>>,
    /// Lattice-free basis of the lineality space.
    pub lineality: Vec<Vec<Z>>,
    /// Primitive facet normals `n` with `n·x >= 0` on the cone, sorted.
    pub facets: Vec<Vec<Z>>,
    /// Basis of linear equations `n·x = 0` holding on the cone.
    pub equations: Vec<Vec<Z>>,
}

/// Extreme rays and lineality of `{x : ineqs·x >= 0, eqs·x = 0}`.
pub fn h_to_v(ineqs: &[Vec<Z>], eqs: &[Vec<Z>], n: usize) -> (Vec<Vec<Z>>, Vec<Vec<Z>>) {
    // 1. parametrize the solution space of the equations: x = U c
    let u: Vec<Vec<Z>> = if eqs.iter().all(|e| is_zero(e)) {
        (0..n).map(|i| unit(n, i)).collect()
    } else {
        linalg::nullspace_z(eqs, n)
    };
    let k = u.len();
    if k == 0 {
        return (vec![], vec![]);
    }
    let a1: Vec<Vec<Z>> = ineqs
        .iter()
        .map(|row| u.iter().map(|b| dot(row, b)).collect())
        .collect();
    // 2. lineality inside c-space
    let lin_c = if a1.is_empty() {
        (0..k).map(|i| unit(k, i)).collect()
    } else {
        linalg::nullspace_z(&a1, k)
    };
    let lift = |c: &[Z], basis: &[Vec<Z>], dim: usize| -> Vec<Z> {
        let mut x = vec![Z::zero(); dim];
        for (ci, b) in c.iter().zip(basis) {
            for j in 0..dim {
                x[j] += ci * &b[j];
            }
        }
        x
    };
    let lineality: Vec<Vec<Z>> = lin_c.iter().map(|c| primitive(lift(c, &u, n))).collect();
    if lin_c.len() == k {
        return (vec![], lineality);
    }
    // 3. complement of lineality: row space of a1
    let mut rs: Vec<Vec<Q>> = a1.iter().map(|r| qv(r)).collect();
    let piv = linalg::rref(&mut rs);
    let w: Vec<Vec<Z>> = rs[..piv.len()].iter().map(|r| primitive_q(r)).collect();
    let r = w.len();
    let a2: Vec<Vec<Z>> = a1
        .iter()
        .map(|row| w.iter().map(|b| dot(row, b)).collect())
        .collect();
    let rays_d = dd_pointed(&a2, r);
    let rays: Vec<Vec<Z>> = rays_d
        .iter()
        .map(|d| {
            let c = lift(d, &w, k);
            primitive(lift(&c, &u, n))
        })
        .collect();
    (rays, lineality)
}

/// Double description for a pointed cone `{d : a·d >= 0}` with `a` of full column rank.
fn dd_pointed(a: &[Vec<Z>], r: usize) -> Vec<Vec<Z>> {
    // choose r independent rows
    let mut basis_rows: Vec<usize> = Vec::new();
    let mut cur: Vec<Vec<Z>> = Vec::new();
    for (i, row) in a.iter().enumerate() {
        let mut t = cur.clone();
        t.push(row.clone());
        if linalg::rank_z(&t) > cur.len() {
            cur = t;
            basis_rows.push(i);
            if cur.len() == r {
                break;
            }
        }
    }
    let bq: Vec<Vec<Q>> = cur.iter().map(|x| qv(x)).collect();
    let inv = linalg::inverse(&bq).expect("independent rows");
    // columns of inverse are the initial rays
    let mut rays: Vec<Vec<Z>> = (0..r)
        .map(|j| primitive_q(&inv.iter().map(|row| row[j].clone()).collect::<Vec<_>>()))
        .collect();
    let mut processed: Vec<usize> = basis_rows.clone();
    let mut zeros: Vec<BTreeSet<usize>> = rays
        .iter()
        .map(|ray| processed.iter().copied().filter(|&i| dot(&a[i], ray).is_zero()).collect())
        .collect();
    for i in 0..a.len() {
        if basis_rows.contains(&i) {
            continue;
        }
        let vals: Vec<Z> = rays.iter().map(|ray| dot(&a[i], ray)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_negative()).collect();
        if neg.is_empty() {
            processed.push(i);
            for (j, z) in zeros.iter_mut().enumerate() {
                if vals[j].is_zero() {
                    z.insert(i);
                }
            }
            continue;
        }
        let mut new_rays = Vec::new();
        let mut new_zeros = Vec::new();
        for &p in &pos {
            for &m in &neg {
                let common: BTreeSet<usize> = zeros[p].intersection(&zeros[m]).copied().collect();
                if common.len() + 2 < r {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&t| t != p && t != m)
                    .all(|t| !common.is_subset(&zeros[t]));
                if !adjacent {
                    continue;
                }
                let ray: Vec<Z> = rays[p]
                    .iter()
                    .zip(&rays[m])
                    .map(|(x, y)| x * (-&vals[m]) + y * &vals[p])
                    .collect();
                let mut z = common;
                z.insert(i);
                new_rays.push(primitive(ray));
                new_zeros.push(z);
            }
        }
        let keep: Vec<usize> = (0..rays.len()).filter(|&j| !vals[j].is_negative()).collect();
        let mut next_rays: Vec<Vec<Z>> = keep.iter().map(|&j| rays[j].clone()).collect();
        let mut next_zeros: Vec<BTreeSet<usize>> = keep
            .iter()
            .map(|&j| {
                let mut z = zeros[j].clone();
                if vals[j].is_zero() {
                    z.insert(i);
                }
                z
            })
            .collect();
        next_rays.extend(new_rays);
        next_zeros.extend(new_zeros);
        rays = next_rays;
        zeros = next_zeros;
        processed.push(i);
    }
    rays.sort();
    rays.dedup();
    rays
}

fn unit(n: usize, i: usize) -> Vec<Z> {
    let mut v = vec![Z::zero(); n];
    v[i] = Z::from(1);
    v
}

impl RationalCone {
    pub fn from_generators(gens: &[Vec<Z>], n: usize) -> Self {
        let gens: Vec<Vec<Z>> = gens.iter().filter(|g| !is_zero(g)).cloned().collect();
        // facets of cone(gens) are the rays of {y : gens·y >= 0}
        let (mut facets, equations) = h_to_v(&gens, &[], n);
        facets.sort();
        let (mut rays, lineality) = h_to_v(&facets, &equations, n);
        rays.sort();
        RationalCone { ambient_dim: n, rays, lineality, facets, equations }
    }

    pub fn from_inequalities(ineqs: &[Vec<Z>], eqs: &[Vec<Z>], n: usize) -> Self {
        let (mut rays, lineality) = h_to_v(ineqs, eqs, n);
        rays.sort();
        let mut gens = rays.clone();
        for l in &lineality {
            gens.push(l.clone());
            gens.push(l.iter().map(|x| -x).collect());
        }
        let (mut facets, equations) = h_to_v(&gens, &[], n);
        facets.sort();
        RationalCone { ambient_dim: n, rays, lineality, facets, equations }
    }

    /// All generators, with lineality directions in both signs.
    pub fn generators(&self) -> Vec<Vec<Z>> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x).collect());
        }
        g
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - linalg::rank_z(&self.equations)
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_simplicial(&self) -> bool {
        self.is_pointed() && self.rays.len() == self.dim()
    }

    pub fn contains(&self, x: &[Z]) -> bool {
        self.facets.iter().all(|f| !dot(f, x).is_negative())
            && self.equations.iter().all(|e| dot(e, x).is_zero())
    }

    pub fn contains_in_interior(&self, x: &[Z]) -> bool {
        self.facets.iter().all(|f| dot(f, x).is_positive())
            && self.equations.iter().all(|e| dot(e, x).is_zero())
    }

    /// Dual cone with respect to the standard dot product.
    pub fn dual(&self) -> RationalCone {
        let mut rays = self.facets.clone();
        rays.sort();
        let mut facets = self.rays.clone();
        facets.sort();
        RationalCone {
            ambient_dim: self.ambient_dim,
            rays,
            lineality: self.equations.clone(),
            facets,
            equations: self.lineality.clone(),
        }
    }

    /// Dual with respect to the bilinear form `gram`: `{y : x^T gram y >= 0}`.
    pub fn dual_with(&self, gram: &[Vec<Z>]) -> RationalCone {
        let n = self.ambient_dim;
        let ineqs: Vec<Vec<Z>> = self
            .generators()
            .iter()
            .map(|g| (0..n).map(|j| (0..n).fold(Z::zero(), |acc, i| acc + &g[i] * &gram[i][j])).collect())
            .collect();
        RationalCone::from_inequalities(&ineqs, &[], n)
    }

    pub fn intersect(&self, other: &RationalCone) -> RationalCone {
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        RationalCone::from_inequalities(&ineqs, &eqs, self.ambient_dim)
    }

    /// Indices of facets vanishing on `x`.
    pub fn tight_facets(&self, x: &[Z]) -> Vec<usize> {
        (0..self.facets.len()).filter(|&i| dot(&self.facets[i], x).is_zero()).collect()
    }

    pub fn to_json(&self) -> ConeJson {
        let s = |v: &Vec<Vec<Z>>| v.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        ConeJson {
            generators: s(&self.rays),
            lineality: s(&self.lineality),
            facets: s(&self.facets),
            equations: s(&self.equations),
        }
    }

    pub fn from_json(j: &ConeJson, n: usize) -> Option<Self> {
        let p = |v: &Vec<Vec<String>>| -> Option<Vec<Vec<Z>>> {
            v.iter().map(|r| r.iter().map(|x| x.parse().ok()).collect()).collect()
        };
        let rays = p(&j.generators)?;
        let lineality = p(&j.lineality)?;
        let mut gens = rays;
        for l in &lineality {
            gens.push(l.clone());
            gens.push(l.iter().map(|x| -x).collect());
        }
        let c = RationalCone::from_generators(&gens, n);
        let facets = p(&j.facets)?;
        if c.facets != facets {
            return None;
        }
        Some(c)
    }
}

/// Serialized cone; integers are decimal strings so that nothing overflows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeJson {
    pub generators: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lineality: Vec<Vec<String>>,
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub equations: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::linalg::zv;

    fn zm(rows: &[&[i64]]) -> Vec<Vec<Z>> {
        rows.iter().map(|r| zv(r)).collect()
    }

    #[test]
    fn orthant_is_self_dual() {
        let c = RationalCone::from_generators(&zm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3);
        assert_eq!(c.facets, c.rays);
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn dual_of_ray_is_halfplane() {
        let c = RationalCone::from_generators(&zm(&[&[1, 0]]), 2);
        let d = c.dual();
        assert_eq!(d.rays, zm(&[&[1, 0]]));
        assert_eq!(d.lineality.len(), 1);
        assert_eq!(d.facets, zm(&[&[1, 0]]));
        assert!(d.equations.is_empty());
        let dr = RationalCone::from_generators(&d.generators(), 2);
        assert_eq!(dr.facets, zm(&[&[1, 0]]));
    }

    #[test]
    fn dual_of_planar_cone() {
        let c = RationalCone::from_generators(&zm(&[&[1, 0], &[1, 2]]), 2);
        let d = c.dual();
        assert_eq!(d.rays, zm(&[&[0, 1], &[2, -1]]));
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn redundant_generators_removed() {
        let c = RationalCone::from_generators(&zm(&[&[1, 0], &[1, 1], &[0, 1], &[2, 3]]), 2);
        assert_eq!(c.rays, zm(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn square_pyramid() {
        let c = RationalCone::from_generators(
            &zm(&[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1], &[0, 0, 1]]),
            3,
        );
        assert_eq!(c.rays.len(), 4);
        assert_eq!(c.facets.len(), 4);
        assert!(!c.is_simplicial());
        assert!(c.contains(&zv(&[0, 0, 1])));
        assert!(!c.contains(&zv(&[2, 0, 1])));
    }

    #[test]
    fn lower_dimensional_cone() {
        let c = RationalCone::from_generators(&zm(&[&[1, 0, 0], &[0, 1, 0]]), 3);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.equations.len(), 1);
        assert_eq!(c.facets.len(), 2);
    }
}
