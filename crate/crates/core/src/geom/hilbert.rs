//! Hilbert bases of pointed rational cones.
//!
//! The cone is moved into coordinates of the lattice points of its linear span, split by a
//! pulling triangulation, and the lattice points of each fundamental parallelepiped are
//! enumerated through the Hermite normal form of the simplex generators. The union of
//! those points with the extreme rays contains every irreducible element; a final
//! reduction keeps exactly the irreducible ones.

use std::collections::{BTreeSet, HashSet};

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::cone::RationalCone;
use super::linalg::{self, dot, primitive, primitive_q, qv, Q, Z};
use crate::error::{Error, Result};

/// Default upper bound on lattice points enumerated per simplicial cone.
pub const DEFAULT_MAX_PARALLELEPIPED: u64 = 2_000_000;

#[derive(Clone, Debug)]
pub struct HilbertBasis {
    /// Basis elements in ambient coordinates, sorted.
    pub elements: Vec<Vec<Z>>,
    /// Largest parallelepiped enumerated.
    pub max_volume: u64,
    pub simplices: usize,
}

/// Hilbert basis of `cone ∩ lattice`; `lattice` is an HNF row basis in ambient coordinates.
pub fn hilbert_basis(cone: &RationalCone, lattice: &[Vec<Z>], max_points: u64) -> Result<HilbertBasis> {
    if !cone.is_pointed() {
        return Err(Error::Domain("Hilbert basis requested for a non-pointed cone".into()));
    }
    if cone.rays.is_empty() {
        return Ok(HilbertBasis { elements: vec![], max_volume: 0, simplices: 0 });
    }
    let n = cone.ambient_dim;
    let sub = linalg::intersect_with_span(lattice, &cone.rays);
    let k = sub.len();
    if k != cone.dim() {
        return Err(Error::Domain("cone span is not spanned by lattice points".into()));
    }
    // coordinates of the rays in the sublattice basis
    let bt: Vec<Vec<Q>> = (0..n).map(|j| sub.iter().map(|b| Q::from_integer(b[j].clone())).collect()).collect();
    let rays: Vec<Vec<Z>> = cone
        .rays
        .iter()
        .map(|r| {
            let c = linalg::solve(&bt, &qv(r)).expect("ray lies in its span");
            primitive_q(&c)
        })
        .collect();
    let local = RationalCone::from_generators(&rays, k);
    let simplices = triangulate(&local.rays, (0..local.rays.len()).collect(), k);
    let mut cands: BTreeSet<Vec<Z>> = local.rays.iter().cloned().collect();
    let mut max_volume = 0u64;
    for s in &simplices {
        let gens: Vec<Vec<Z>> = s.iter().map(|&i| local.rays[i].clone()).collect();
        let vol = parallelepiped_points(&gens, max_points, &mut cands)?;
        max_volume = max_volume.max(vol);
    }
    let irr = reduce(&local, cands.into_iter().collect());
    let mut elements: Vec<Vec<Z>> = irr
        .iter()
        .map(|c| {
            let mut x = vec![Z::zero(); n];
            for (ci, b) in c.iter().zip(&sub) {
                for j in 0..n {
                    x[j] += ci * &b[j];
                }
            }
            x
        })
        .collect();
    elements.sort();
    Ok(HilbertBasis { elements, max_volume, simplices: simplices.len() })
}

/// Pulling triangulation of the cone over `idx` (all extreme rays of their cone).
pub fn triangulate(rays: &[Vec<Z>], idx: Vec<usize>, k: usize) -> Vec<Vec<usize>> {
    let pts: Vec<Vec<Z>> = idx.iter().map(|&i| rays[i].clone()).collect();
    let d = linalg::rank_z(&pts);
    if idx.len() == d {
        return vec![idx];
    }
    let c = RationalCone::from_generators(&pts, k);
    let apex = idx[0];
    let mut out = Vec::new();
    for f in &c.facets {
        let members: Vec<usize> = idx.iter().copied().filter(|&i| dot(f, &rays[i]).is_zero()).collect();
        if members.contains(&apex) {
            continue;
        }
        for mut s in triangulate(rays, members, k) {
            s.push(apex);
            out.push(s);
        }
    }
    out
}

/// Adds the nonzero lattice points of `sum [0,1) g_i` to `out`; returns the volume.
fn parallelepiped_points(gens: &[Vec<Z>], max_points: u64, out: &mut BTreeSet<Vec<Z>>) -> Result<u64> {
    let k = gens.len();
    let h = linalg::hnf(gens);
    let diag: Vec<Z> = h
        .iter()
        .map(|row| row.iter().find(|x| !x.is_zero()).cloned().unwrap())
        .collect();
    let vol = diag.iter().fold(Z::from(1), |a, b| a * b);
    let vol_u = vol.to_u64().filter(|&v| v <= max_points).ok_or_else(|| {
        Error::Capability(format!("simplicial cone of volume {vol} exceeds the enumeration bound {max_points}"))
    })?;
    // columns are the generators
    let gm: Vec<Vec<Q>> = (0..k).map(|i| gens.iter().map(|g| Q::from_integer(g[i].clone())).collect()).collect();
    let inv = linalg::inverse(&gm).expect("simplex generators independent");
    let mut r = vec![Z::zero(); k];
    loop {
        let rq = qv(&r);
        let t: Vec<Q> = inv.iter().map(|row| linalg::dot_q(row, &rq)).collect();
        let frac: Vec<Q> = t.iter().map(|x| x - x.floor()).collect();
        if frac.iter().any(|x| !x.is_zero()) {
            let mut x = vec![Q::zero(); k];
            for (fj, g) in frac.iter().zip(gens) {
                for i in 0..k {
                    x[i] += fj * Q::from_integer(g[i].clone());
                }
            }
            out.insert(x.iter().map(|v| v.to_integer()).collect());
        }
        // odometer over 0 <= r_i < diag_i
        let mut i = 0;
        loop {
            if i == k {
                return Ok(vol_u);
            }
            r[i] += 1;
            if r[i] < diag[i] {
                break;
            }
            r[i] = Z::zero();
            i += 1;
        }
    }
}

fn reduce(cone: &RationalCone, cands: Vec<Vec<Z>>) -> Vec<Vec<Z>> {
    let deg = |x: &Vec<Z>| cone.facets.iter().fold(Z::zero(), |a, f| a + dot(f, x));
    let mut sorted: Vec<(Z, Vec<Z>)> = cands.into_iter().map(|x| (deg(&x), x)).collect();
    sorted.sort();
    let mut irr: Vec<(Z, Vec<Z>)> = Vec::new();
    for (d, x) in sorted {
        let reducible = irr.iter().any(|(dy, y)| {
            dy < &d && {
                let diff: Vec<Z> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                cone.contains(&diff)
            }
        });
        if !reducible {
            irr.push((d, x));
        }
    }
    irr.into_iter().map(|(_, x)| x).collect()
}

/// Whether `target` is a nonnegative integer combination of `gens`, all of which lie in
/// an open half-space given by the positive `grading`.
pub fn semigroup_contains(gens: &[Vec<i64>], target: &[i64], grading: &[i64]) -> bool {
    let deg = |v: &[i64]| v.iter().zip(grading).map(|(a, b)| a * b).sum::<i64>();
    let gens: Vec<&Vec<i64>> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).collect();
    if target.iter().all(|&x| x == 0) {
        return true;
    }
    let td = deg(target);
    if gens.iter().any(|g| deg(g) <= 0) {
        return false;
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack = vec![target.to_vec()];
    while let Some(cur) = stack.pop() {
        if cur.iter().all(|&x| x == 0) {
            return true;
        }
        if !seen.insert(cur.clone()) {
            continue;
        }
        let cd = deg(&cur);
        if cd <= 0 || cd > td {
            continue;
        }
        for g in &gens {
            let next: Vec<i64> = cur.iter().zip(g.iter()).map(|(a, b)| a - b).collect();
            if deg(&next) >= 0 {
                stack.push(next);
            }
        }
    }
    false
}

/// Primitive positive grading: sum of the facet normals.
pub fn grading(cone: &RationalCone) -> Vec<Z> {
    let n = cone.ambient_dim;
    let mut g = vec![Z::zero(); n];
    for f in &cone.facets {
        for j in 0..n {
            g[j] += &f[j];
        }
    }
    let g = primitive(g);
    debug_assert!(cone.rays.iter().all(|r| dot(&g, r).is_positive()) || cone.facets.is_empty());
    g
}

pub fn gcd_all(v: &[Z]) -> Z {
    v.iter().fold(Z::zero(), |g, x| g.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::linalg::zv;

    fn zm(rows: &[&[i64]]) -> Vec<Vec<Z>> {
        rows.iter().map(|r| zv(r)).collect()
    }

    fn std_lattice(n: usize) -> Vec<Vec<Z>> {
        (0..n)
            .map(|i| (0..n).map(|j| Z::from((i == j) as i64)).collect())
            .collect()
    }

    #[test]
    fn unimodular_cone() {
        let c = RationalCone::from_generators(&zm(&[&[1, 0], &[0, 1]]), 2);
        let h = hilbert_basis(&c, &std_lattice(2), 1000).unwrap();
        assert_eq!(h.elements, zm(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn planar_examples() {
        let c = RationalCone::from_generators(&zm(&[&[1, 0], &[1, 2]]), 2);
        let h = hilbert_basis(&c, &std_lattice(2), 1000).unwrap();
        assert_eq!(h.elements, zm(&[&[1, 0], &[1, 1], &[1, 2]]));
        let c = RationalCone::from_generators(&zm(&[&[2, -1], &[0, 1]]), 2);
        let h = hilbert_basis(&c, &std_lattice(2), 1000).unwrap();
        assert_eq!(h.elements, zm(&[&[0, 1], &[1, 0], &[2, -1]]));
    }

    #[test]
    fn sublattice_and_lower_dimension() {
        // the line x = y in Z^2 restricted to the even lattice
        let c = RationalCone::from_generators(&zm(&[&[1, 1]]), 2);
        let lat = linalg::hnf(&zm(&[&[2, 0], &[0, 2], &[1, 1]]));
        let h = hilbert_basis(&c, &lat, 1000).unwrap();
        assert_eq!(h.elements, zm(&[&[1, 1]]));
        let lat2 = linalg::hnf(&zm(&[&[2, 0], &[0, 2]]));
        let h = hilbert_basis(&c, &lat2, 1000).unwrap();
        assert_eq!(h.elements, zm(&[&[2, 2]]));
    }

    #[test]
    fn non_pointed_rejected() {
        let c = RationalCone::from_generators(&zm(&[&[1, 0], &[-1, 0], &[0, 1]]), 2);
        assert!(hilbert_basis(&c, &std_lattice(2), 1000).is_err());
    }

    #[test]
    fn semigroup_membership() {
        assert!(semigroup_contains(&[vec![2]], &[4], &[1]));
        assert!(!semigroup_contains(&[vec![2]], &[3], &[1]));
        assert!(semigroup_contains(&[vec![1, 0], vec![1, 2]], &[2, 2], &[1, 0]));
        assert!(!semigroup_contains(&[vec![1, 0], vec![1, 2]], &[1, 1], &[1, 0]));
    }
}
