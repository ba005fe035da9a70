//! Lattice polytopes given by a finite point set, with the face structure obtained from the
//! homogenized cone over the points.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::cone::{h_to_v, RationalCone};
use super::linalg::{self, dot, zv, Q, Z};

#[derive(Clone, Debug)]
pub struct Polytope {
    pub dim_ambient: usize,
    /// Sorted, deduplicated input points.
    pub points: Vec<Vec<i64>>,
    /// Sorted extreme points.
    pub vertices: Vec<Vec<i64>>,
    /// Homogeneous facet inequalities `c + a·x >= 0`, stored as `(c, a...)`.
    pub facets: Vec<Vec<Z>>,
    /// Homogeneous equations of the affine hull.
    pub equations: Vec<Vec<Z>>,
}

pub fn homogenize(p: &[i64]) -> Vec<Z> {
    std::iter::once(Z::from(1)).chain(p.iter().map(|&x| Z::from(x))).collect()
}

pub fn homogenize_q(p: &[Q]) -> Vec<Z> {
    let den = p.iter().fold(Z::from(1), |a, x| num_integer::Integer::lcm(&a, x.denom()));
    std::iter::once(den.clone()).chain(p.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer())).collect()
}

impl Polytope {
    pub fn new(points: &[Vec<i64>]) -> Polytope {
        let pts: BTreeSet<Vec<i64>> = points.iter().cloned().collect();
        let points: Vec<Vec<i64>> = pts.into_iter().collect();
        let n = points.first().map(|p| p.len()).unwrap_or(0);
        let gens: Vec<Vec<Z>> = points.iter().map(|p| homogenize(p)).collect();
        let cone = RationalCone::from_generators(&gens, n + 1);
        let vertices = points.iter().filter(|p| cone.rays.contains(&homogenize(p))).cloned().collect();
        Polytope { dim_ambient: n, points, vertices, facets: cone.facets, equations: cone.equations }
    }

    /// Polytope whose points are all vertices already (a single W-orbit, say).
    pub fn from_vertices(vertices: &[Vec<i64>]) -> Polytope {
        let mut p = Polytope::new(vertices);
        p.points = p.vertices.clone();
        p
    }

    pub fn dim(&self) -> usize {
        if self.points.is_empty() {
            return 0;
        }
        let d: Vec<Vec<Z>> = self.points.iter().map(|p| zv(&sub(p, &self.points[0]))).collect();
        linalg::rank_z(&d)
    }

    pub fn contains_q(&self, x: &[Q]) -> bool {
        let h = homogenize_q(x);
        self.facets.iter().all(|f| !dot(f, &h).is_negative()) && self.equations.iter().all(|e| dot(e, &h).is_zero())
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        let h = homogenize(x);
        self.facets.iter().all(|f| !dot(f, &h).is_negative()) && self.equations.iter().all(|e| dot(e, &h).is_zero())
    }

    /// Vertex sets of the facets.
    pub fn facet_vertex_sets(&self) -> Vec<BTreeSet<usize>> {
        self.facets
            .iter()
            .map(|f| (0..self.vertices.len()).filter(|&i| dot(f, &homogenize(&self.vertices[i])).is_zero()).collect())
            .collect()
    }

    /// All nonempty faces as vertex index sets, including the polytope itself.
    pub fn faces(&self) -> Vec<BTreeSet<usize>> {
        let facets = self.facet_vertex_sets();
        let all: BTreeSet<usize> = (0..self.vertices.len()).collect();
        let mut faces: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        faces.insert(all);
        let mut frontier: Vec<BTreeSet<usize>> = facets.clone();
        while let Some(f) = frontier.pop() {
            if f.is_empty() || !faces.insert(f.clone()) {
                continue;
            }
            for g in &facets {
                let h: BTreeSet<usize> = f.intersection(g).copied().collect();
                if !h.is_empty() && h != f && !faces.contains(&h) {
                    frontier.push(h);
                }
            }
        }
        faces.into_iter().collect()
    }

    /// Indices of facets containing every vertex in `face`.
    pub fn tight_facets(&self, face: &[Vec<i64>]) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&i| face.iter().all(|v| dot(&self.facets[i], &homogenize(v)).is_zero()))
            .collect()
    }

    /// Vertices of `{x in face : extra·(1, x) >= 0}` for homogeneous `extra` inequalities.
    pub fn section_vertices(&self, face: &[Vec<i64>], extra: &[Vec<Z>]) -> Vec<Vec<Q>> {
        let tight = self.tight_facets(face);
        let mut eqs = self.equations.clone();
        let mut ineqs = vec![];
        for (i, f) in self.facets.iter().enumerate() {
            if tight.contains(&i) {
                eqs.push(f.clone());
            } else {
                ineqs.push(f.clone());
            }
        }
        let mut t = vec![Z::zero(); self.dim_ambient + 1];
        t[0] = Z::from(1);
        ineqs.push(t);
        ineqs.extend(extra.iter().cloned());
        let (rays, _) = h_to_v(&ineqs, &eqs, self.dim_ambient + 1);
        let mut out: Vec<Vec<Q>> = rays
            .iter()
            .filter(|r| r[0].is_positive())
            .map(|r| r[1..].iter().map(|x| Q::new(x.clone(), r[0].clone())).collect())
            .collect();
        out.sort();
        out
    }

    /// Whether `x` lies in the relative interior of `face`.
    pub fn in_relative_interior(&self, face: &[Vec<i64>], x: &[Q]) -> bool {
        let tight = self.tight_facets(face);
        let h = homogenize_q(x);
        self.contains_q(x) && (0..self.facets.len()).all(|i| tight.contains(&i) || dot(&self.facets[i], &h).is_positive())
    }

    /// Tangent cone at `face`: generated by p − v for points p and face vertices v.
    pub fn tangent_cone(&self, face: &[Vec<i64>]) -> RationalCone {
        let mut gens = BTreeSet::new();
        for v in face {
            for p in &self.vertices {
                gens.insert(zv(&sub(p, v)));
            }
        }
        RationalCone::from_generators(&gens.into_iter().collect::<Vec<_>>(), self.dim_ambient)
    }
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn centroid(pts: &[Vec<Q>]) -> Vec<Q> {
    let n = pts[0].len();
    let k = Q::from_integer(Z::from(pts.len()));
    (0..n).map(|j| pts.iter().map(|p| p[j].clone()).sum::<Q>() / &k).collect()
}
