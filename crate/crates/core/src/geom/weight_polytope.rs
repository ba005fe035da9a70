//! The weight polytope P = conv(W·λ_i) and its faces meeting the dominant chamber C.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cone::RationalCone;
use super::linalg::{self, dot, primitive, primitive_q, to_i64, zv, Q, Z};
use super::polytope::{centroid, sub, Polytope};
use crate::error::{Error, Result};
use crate::lie::lattice::{character_lattice, CharacterLattice};
use crate::lie::levi::components;
use crate::lie::weyl::{orbit_under, weyl_orbit};
use crate::lie::{RootSystem, Weight};

/// Multi-weight inputs with more orbit points than this are rejected.
pub const MAX_ORBIT_POINTS: usize = 50_000;

#[derive(Debug)]
pub struct WeightPolytope {
    pub highest_weights: Vec<Weight>,
    /// Union of the W-orbits, sorted.
    pub points: Vec<Weight>,
    pub lattice: CharacterLattice,
    hull: OnceLock<Polytope>,
}

impl Clone for WeightPolytope {
    fn clone(&self) -> Self {
        let hull = OnceLock::new();
        if let Some(h) = self.hull.get() {
            let _ = hull.set(h.clone());
        }
        WeightPolytope {
            highest_weights: self.highest_weights.clone(),
            points: self.points.clone(),
            lattice: self.lattice.clone(),
            hull,
        }
    }
}

impl WeightPolytope {
    pub fn is_single(&self) -> bool {
        self.highest_weights.iter().collect::<BTreeSet<_>>().len() == 1
    }

    /// Facet description, computed on first use.
    pub fn hull(&self) -> &Polytope {
        self.hull.get_or_init(|| {
            if self.is_single() {
                Polytope::from_vertices(&self.points)
            } else {
                Polytope::new(&self.points)
            }
        })
    }

    pub fn vertices(&self) -> Vec<Weight> {
        if self.is_single() {
            self.points.clone()
        } else {
            self.hull().vertices.clone()
        }
    }
}

pub fn polytope_from_orbits(rs: &RootSystem, weights: &[Weight]) -> Result<WeightPolytope> {
    if weights.is_empty() {
        return Err(Error::EmptyWeights);
    }
    for w in weights {
        if w.len() != rs.dim {
            return Err(Error::Domain(format!("weight has {} coordinates, expected {}", w.len(), rs.dim)));
        }
        if !rs.is_dominant(w) {
            return Err(Error::NotDominant(rs.format_weight(w)));
        }
    }
    let distinct: BTreeSet<&Weight> = weights.iter().collect();
    let mut pts = BTreeSet::new();
    for w in &distinct {
        pts.extend(weyl_orbit(rs, w));
        if distinct.len() > 1 && pts.len() > MAX_ORBIT_POINTS {
            return Err(Error::Capability(format!(
                "orbit union exceeds {MAX_ORBIT_POINTS} points; multi-weight hulls of this size are not supported"
            )));
        }
    }
    Ok(WeightPolytope {
        highest_weights: weights.to_vec(),
        points: pts.into_iter().collect(),
        lattice: character_lattice(rs, weights)?,
        hull: OnceLock::new(),
    })
}

/// Gram-transpose of a weight: the covector x ↦ (w, x), scaled by `gram_scale`.
pub fn covector(rs: &RootSystem, w: &[Q]) -> Vec<Q> {
    (0..rs.dim)
        .map(|j| (0..rs.dim).map(|i| &w[i] * Q::from_integer(rs.gram_z[i][j].into())).sum())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberVertex {
    pub vertex: Weight,
    /// Antidominant γ (rational Dynkin labels, as primitive integers) whose inner product
    /// is minimized on P exactly at the vertex.
    pub certificate: Option<Weight>,
}

/// Dominant vertices of P with separating antidominant functionals.
pub fn vertices_in_chamber(rs: &RootSystem, wp: &WeightPolytope) -> Vec<ChamberVertex> {
    let verts = wp.vertices();
    let mut out = Vec::new();
    for v in verts.iter().filter(|v| rs.is_dominant(v)) {
        let mut ineqs: Vec<Vec<Z>> = verts
            .iter()
            .filter(|p| *p != v)
            .map(|p| {
                let d = sub(p, v);
                (0..rs.dim).map(|j| Z::from((0..rs.dim).map(|i| d[i] * rs.gram_z[i][j]).sum::<i64>())).collect()
            })
            .collect();
        for i in 0..rs.rank {
            let mut e = vec![Z::zero(); rs.dim];
            e[i] = Z::from(-1);
            ineqs.push(e);
        }
        let k = RationalCone::from_inequalities(&ineqs, &[], rs.dim);
        let mut g = vec![Z::zero(); rs.dim];
        for r in k.rays.iter() {
            for j in 0..rs.dim {
                g[j] += &r[j];
            }
        }
        let strict = ineqs.iter().all(|f| dot(f, &g).is_positive());
        let certificate = if strict { to_i64(&primitive(g)) } else { None };
        out.push(ChamberVertex { vertex: v.clone(), certificate });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<Weight>,
    pub dim: usize,
    /// Simple roots lying in the direction space |Γ|.
    pub pi_gamma: Vec<usize>,
    /// Simple roots orthogonal to the linear span ⟨Γ⟩.
    pub pi_gamma_perp: Vec<usize>,
    /// Covector (in the dual of the weight coordinates) maximized on P exactly along Γ.
    pub support: Vec<i64>,
    pub dir_basis: Vec<Vec<i64>>,
    pub span_basis: Vec<Vec<i64>>,
    pub norm_basis: Vec<Vec<i64>>,
    /// |Γ|_ℤ and ⟨Γ⟩_ℤ as HNF bases.
    pub dir_lattice: Vec<Vec<i64>>,
    pub span_lattice: Vec<Vec<i64>>,
    /// Positive roots orthogonal to every vertex of Γ.
    pub perp_positive_roots: usize,
}

fn int_rows(v: &[Vec<Z>]) -> Vec<Vec<i64>> {
    v.iter().map(|r| to_i64(r).expect("small coordinates")).collect()
}

fn row_basis(rows: &[Vec<Z>]) -> Vec<Vec<Z>> {
    let mut m: Vec<Vec<Q>> = rows.iter().map(|r| linalg::qv(r)).collect();
    let piv = linalg::rref(&mut m);
    m.truncate(piv.len());
    m.iter().map(|r| primitive_q(r)).collect()
}

impl Face {
    pub fn build(rs: &RootSystem, vertices: Vec<Weight>, highest: &[Weight], support: Vec<i64>) -> Face {
        let n = rs.dim;
        let v0 = vertices[0].clone();
        let diffs: Vec<Vec<Z>> = vertices.iter().map(|v| zv(&sub(v, &v0))).collect();
        let dir = row_basis(&diffs);
        let span = row_basis(&vertices.iter().map(|v| zv(v)).collect::<Vec<_>>());
        let dim = dir.len();
        let in_dir = |w: &[i64]| linalg::rank_z(&[dir.clone(), vec![zv(w)]].concat()) == dim;
        let pi_gamma: Vec<usize> = (0..rs.rank).filter(|&i| in_dir(&rs.alpha(i))).collect();
        let perp = |w: &[i64]| vertices.iter().all(|v| rs.inner_z(w, v) == 0);
        let pi_gamma_perp: Vec<usize> = (0..rs.rank).filter(|&i| perp(&rs.alpha(i))).collect();
        let perp_positive_roots = rs.positive_roots.iter().filter(|r| perp(&r.omega)).count();
        // ⟨Γ⟩^⊥ ∩ ⟨Q⟩
        let mut eqs: Vec<Vec<Z>> = span
            .iter()
            .map(|s| (0..n).map(|j| (0..n).fold(Z::zero(), |a, i| a + &s[i] * Z::from(rs.gram_z[i][j]))).collect())
            .collect();
        for t in rs.rank..n {
            let mut e = vec![Z::zero(); n];
            e[t] = Z::from(1);
            eqs.push(e);
        }
        let perp_space = linalg::nullspace_z(&eqs, n);
        let mut norm = dir.clone();
        norm.extend(perp_space);
        let norm = row_basis(&norm);
        let q_lattice: Vec<Vec<Z>> = linalg::hnf(&(0..rs.rank).map(|j| zv(&rs.alpha(j))).collect::<Vec<_>>());
        let q_dir = if dir.is_empty() { vec![] } else { linalg::intersect_with_span(&q_lattice, &dir) };
        let members: Vec<&Weight> = highest.iter().filter(|h| Polytope::new(&vertices).contains(h)).collect();
        let mut dgens: Vec<Vec<Z>> = q_dir.clone();
        let mut sgens: Vec<Vec<Z>> = q_dir;
        if let Some(first) = members.first() {
            for h in &members {
                dgens.push(zv(&sub(h, first)));
                sgens.push(zv(h));
            }
        }
        Face {
            vertices,
            dim,
            pi_gamma,
            pi_gamma_perp,
            support,
            dir_basis: int_rows(&dir),
            span_basis: int_rows(&span),
            norm_basis: int_rows(&norm),
            dir_lattice: int_rows(&linalg::hnf(&dgens)),
            span_lattice: int_rows(&linalg::hnf(&sgens)),
            perp_positive_roots,
        }
    }

    pub fn is_vertex(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn contains_face(&self, other: &Face) -> bool {
        other.vertices.iter().all(|v| self.vertices.binary_search(v).is_ok())
    }

    /// Dominant weights of Γ that are vertices of P (the closed orbits below this one).
    pub fn dominant_vertices(&self, rs: &RootSystem) -> Vec<Weight> {
        self.vertices.iter().filter(|v| rs.is_dominant(v)).cloned().collect()
    }
}

/// All faces of P whose relative interior meets C, by the generic face lattice.
pub fn faces_meeting_chamber(rs: &RootSystem, wp: &WeightPolytope) -> Vec<Face> {
    let hull = wp.hull();
    let mut extra = Vec::new();
    for i in 0..rs.rank {
        let mut e = vec![Z::zero(); rs.dim + 1];
        e[i + 1] = Z::from(1);
        extra.push(e);
    }
    let mut out = Vec::new();
    for f in hull.faces() {
        let verts: Vec<Weight> = f.iter().map(|&i| hull.vertices[i].clone()).collect();
        let sec = hull.section_vertices(&verts, &extra);
        if sec.is_empty() {
            continue;
        }
        if !hull.in_relative_interior(&verts, &centroid(&sec)) {
            continue;
        }
        let tight = hull.tight_facets(&verts);
        let mut s = vec![Z::zero(); rs.dim + 1];
        for &t in &tight {
            for j in 0..=rs.dim {
                s[j] += &hull.facets[t][j];
            }
        }
        // facets read c + a·x >= 0, so −a is maximized on the face
        let support: Vec<i64> = s[1..].iter().map(|x| i64::try_from(-x).unwrap()).collect();
        out.push(Face::build(rs, verts, &wp.highest_weights, support));
    }
    out.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
    out
}

/// Subsets S of simple roots with no connected component inside Π_L.
pub fn admissible_pi_gamma(rs: &RootSystem, l0: &[i64]) -> Vec<Vec<usize>> {
    let r = rs.rank;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << r) {
        let s: BTreeSet<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
        let ok = components(rs, &s).iter().all(|c| c.chain.iter().any(|&i| l0[i] != 0));
        if ok {
            out.push(s.into_iter().collect());
        }
    }
    out.sort_by(|a: &Vec<usize>, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Faces meeting C for a single highest weight, labelled by admissible Π_Γ.
pub fn faces_via_pi_gamma(rs: &RootSystem, wp: &WeightPolytope) -> Result<Vec<Face>> {
    if !wp.is_single() {
        return Err(Error::Unsupported("face labels by simple roots need a single highest weight".into()));
    }
    let l0 = &wp.highest_weights[0];
    let mut out = Vec::new();
    for s in admissible_pi_gamma(rs, l0) {
        let verts = orbit_under(rs, l0, &s);
        let support = support_outside(rs, &s);
        out.push(Face::build(rs, verts, &wp.highest_weights, support));
    }
    out.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
    Ok(out)
}

/// Covector x ↦ Σ_{i∉S} ω_i^∨(x), integral after scaling.
fn support_outside(rs: &RootSystem, s: &[usize]) -> Vec<i64> {
    let a: Vec<Vec<Q>> = (0..rs.rank).map(|i| (0..rs.rank).map(|j| Q::from_integer(rs.cartan[i][j].into())).collect()).collect();
    let inv = linalg::inverse(&a).unwrap_or_default();
    let mut row = vec![Q::zero(); rs.dim];
    for i in (0..rs.rank).filter(|i| !s.contains(i)) {
        for j in 0..rs.rank {
            row[j] += &inv[i][j];
        }
    }
    to_i64(&primitive_q(&row)).unwrap()
}

/// Cone of C∩P at C∩Γ: tangent cone of P along Γ cut by the walls orthogonal to ⟨Γ⟩.
pub fn cone_at_face(rs: &RootSystem, wp: &WeightPolytope, face: &Face) -> RationalCone {
    let v0 = &face.vertices[0];
    let mut gens: BTreeSet<Vec<Z>> = BTreeSet::new();
    for p in &wp.vertices() {
        let d = sub(p, v0);
        if d.iter().any(|&x| x != 0) {
            gens.insert(zv(&d));
        }
    }
    for v in &face.vertices {
        let d = sub(v, v0);
        if d.iter().any(|&x| x != 0) {
            gens.insert(zv(&d.iter().map(|x| -x).collect::<Vec<_>>()));
        }
    }
    let t = RationalCone::from_generators(&gens.into_iter().collect::<Vec<_>>(), rs.dim);
    if face.pi_gamma_perp.is_empty() {
        return t;
    }
    let mut ineqs = t.facets.clone();
    for &j in &face.pi_gamma_perp {
        let mut e = vec![Z::zero(); rs.dim];
        e[j] = Z::from(1);
        ineqs.push(e);
    }
    RationalCone::from_inequalities(&ineqs, &t.equations, rs.dim)
}

/// Cone of C∩P at a dominant vertex λ.
pub fn cone_at_vertex(rs: &RootSystem, wp: &WeightPolytope, l: &[i64]) -> Result<RationalCone> {
    if !rs.is_dominant(l) || !wp.vertices().iter().any(|v| v.as_slice() == l) {
        return Err(Error::NotVertex(rs.format_weight(l)));
    }
    let face = Face::build(rs, vec![l.to_vec()], &wp.highest_weights, vec![0; rs.dim]);
    Ok(cone_at_face(rs, wp, &face))
}

/// Dual cone with respect to the invariant inner product.
pub fn dual_cone(rs: &RootSystem, k: &RationalCone) -> RationalCone {
    let g: Vec<Vec<Z>> = rs.gram_z.iter().map(|r| zv(r)).collect();
    k.dual_with(&g)
}

pub fn is_w_stable(rs: &RootSystem, verts: &[Weight]) -> bool {
    let set: BTreeSet<&Weight> = verts.iter().collect();
    verts.iter().all(|v| (0..rs.rank).all(|i| set.contains(&rs.reflect(v, i))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wp(s: &str, ws: &[&str]) -> (RootSystem, WeightPolytope) {
        let rs = RootSystem::parse(s).unwrap();
        let w: Vec<Weight> = ws.iter().map(|x| rs.parse_weight(x).unwrap()).collect();
        let p = polytope_from_orbits(&rs, &w).unwrap();
        (rs, p)
    }

    #[test]
    fn basic_polytopes() {
        let (_, p) = wp("A1", &["w1"]);
        assert_eq!(p.vertices(), vec![vec![-1], vec![1]]);
        let (rs, p) = wp("C2", &["3*w1", "2*w2"]);
        assert_eq!(p.vertices().len(), 8);
        assert!(is_w_stable(&rs, &p.vertices()));
        let ch: Vec<Weight> = vertices_in_chamber(&rs, &p).into_iter().map(|c| c.vertex).collect();
        assert_eq!(ch, vec![vec![0, 2], vec![3, 0]]);
        let (rs, p) = wp("A2", &["w1", "0"]);
        let ch = vertices_in_chamber(&rs, &p);
        assert_eq!(ch.len(), 1);
        assert_eq!(ch[0].vertex, vec![1, 0]);
        assert!(ch[0].certificate.is_some());
    }

    #[test]
    fn certificates_separate() {
        let (rs, p) = wp("C2", &["3*w1", "2*w2"]);
        for c in vertices_in_chamber(&rs, &p) {
            let g = c.certificate.unwrap();
            assert!(g.iter().all(|&x| x < 0));
            let val = rs.inner_z(&g, &c.vertex);
            for v in p.vertices() {
                if v != c.vertex {
                    assert!(rs.inner_z(&g, &v) > val);
                }
            }
        }
    }

    #[test]
    fn face_routes_agree() {
        for s in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"] {
            let rs = RootSystem::parse(s).unwrap();
            for i in 0..rs.rank {
                let mut w = vec![0; rs.rank];
                w[i] = 1;
                let p = polytope_from_orbits(&rs, &[w.clone()]).unwrap();
                let a = faces_meeting_chamber(&rs, &p);
                let b = faces_via_pi_gamma(&rs, &p).unwrap();
                let va: Vec<_> = a.iter().map(|f| f.vertices.clone()).collect();
                let vb: Vec<_> = b.iter().map(|f| f.vertices.clone()).collect();
                assert_eq!(va, vb, "{s} w{}", i + 1);
                for (fa, fb) in a.iter().zip(&b) {
                    assert_eq!(fa.pi_gamma, fb.pi_gamma);
                    assert_eq!(fa.pi_gamma_perp, fb.pi_gamma_perp);
                }
            }
        }
    }

    #[test]
    fn pi_gamma_examples() {
        let (rs, p) = wp("B3", &["w3"]);
        let labels: Vec<Vec<usize>> = faces_via_pi_gamma(&rs, &p).unwrap().into_iter().map(|f| f.pi_gamma).collect();
        assert_eq!(labels, vec![vec![], vec![2], vec![1, 2], vec![0, 1, 2]]);
        let (rs, p) = wp("C2", &["w1"]);
        let labels: Vec<Vec<usize>> = faces_via_pi_gamma(&rs, &p).unwrap().into_iter().map(|f| f.pi_gamma).collect();
        assert_eq!(labels, vec![vec![], vec![0], vec![0, 1]]);
        let (rs, p) = wp("B3", &["w1"]);
        assert_eq!(faces_meeting_chamber(&rs, &p).len(), 4);
        let (rs, p) = wp("C2", &["3*w1", "2*w2"]);
        assert!(faces_via_pi_gamma(&rs, &p).is_err());
    }

    #[test]
    fn spinor_cone() {
        let (rs, p) = wp("B3", &["w3"]);
        let k = cone_at_vertex(&rs, &p, &[0, 0, 1]).unwrap();
        assert!(k.is_simplicial());
        let q = |n: i64| Q::from_integer(n.into());
        let mut expected: Vec<Vec<Z>> = [[0, 0, -1], [0, -1, -1], [-1, -1, -1]]
            .iter()
            .map(|e| zv(&rs.from_ambient(&e.iter().map(|&x| q(x)).collect::<Vec<_>>()).unwrap()))
            .map(primitive)
            .collect();
        expected.sort();
        assert_eq!(k.rays, expected);
        assert!(cone_at_vertex(&rs, &p, &[0, 1, 0]).is_err());
    }

    #[test]
    fn face_lattices() {
        let (rs, p) = wp("A2", &["w1"]);
        for f in faces_via_pi_gamma(&rs, &p).unwrap() {
            assert_eq!(linalg::rank_z(&f.dir_lattice.iter().map(|r| zv(r)).collect::<Vec<_>>()), f.dim);
            assert!(f.span_lattice.iter().any(|_| true));
            let sl: Vec<Vec<Z>> = f.span_lattice.iter().map(|r| zv(r)).collect();
            assert!(linalg::lattice_coords(&sl, &zv(&[1, 0])).is_some());
        }
    }
}
