use num_traits::Signed;

use super::{CriterionReport, Verdict, Witness};
use crate::compact::{Model, SliceDatum};
use crate::error::{Error, Result};
use crate::geom::linalg::{self, det, primitive, to_i64, Z};
use crate::lie::{RootSystem, Series, Weight};

/// Primitive 𝔛-generators of the rays of Σ₀ when they form a basis of 𝔛.
fn lattice_basis_rays(model: &Model, slice: &SliceDatum) -> Result<Option<Vec<Weight>>> {
    let lat = model.lattice().basis_z();
    let rays = &slice.sigma.rays;
    if rays.len() != lat.len() || !slice.sigma.lineality.is_empty() {
        return Ok(None);
    }
    let mut coords = Vec::new();
    for r in rays {
        // rays span the same space as 𝔛, so some multiple lies in 𝔛
        let inter = linalg::intersect_with_span(&lat, std::slice::from_ref(r));
        let mut v = inter[0].clone();
        if linalg::dot(&v, r).is_negative() {
            v = v.into_iter().map(|x| -x).collect();
        }
        let c = linalg::lattice_coords(&lat, &v).ok_or_else(|| Error::Internal("ray outside the lattice span".into()))?;
        let c = primitive(c);
        coords.push(c);
    }
    if det(&coords).abs() != Z::from(1) {
        return Ok(None);
    }
    let n = model.rs.dim;
    let mut out = Vec::new();
    for c in &coords {
        let mut x = vec![Z::from(0); n];
        for (ci, b) in c.iter().zip(&lat) {
            for j in 0..n {
                x[j] += ci * &b[j];
            }
        }
        out.push(to_i64(&x).ok_or_else(|| Error::Internal("basis overflow".into()))?);
    }
    Ok(Some(out))
}

/// Partitions of `basis` into groups {π_1, …, π_{n_k}} satisfying the pairing and
/// orthogonality conditions. Each partition is returned with components first, then the
/// one-element groups.
fn gl_partitions(rs: &RootSystem, slice: &SliceDatum, basis: &[Weight]) -> Vec<Vec<Vec<Weight>>> {
    let pl = &slice.levi.simple_root_indices;
    let mut by_root: Vec<Option<&Weight>> = vec![None; rs.rank];
    let mut free: Vec<&Weight> = Vec::new();
    for b in basis {
        let nz: Vec<usize> = pl.iter().copied().filter(|&j| b[j] != 0).collect();
        match nz.as_slice() {
            [] => free.push(b),
            [j] if b[*j] == 1 => {
                if by_root[*j].replace(b).is_some() {
                    return vec![];
                }
            }
            _ => return vec![],
        }
    }
    if pl.iter().any(|&j| by_root[j].is_none()) {
        return vec![];
    }
    let comps = &slice.levi.components;
    let q = comps.len();
    if free.len() < q {
        return vec![];
    }
    let mut out = Vec::new();
    // orientation bits × injective assignment of tops
    for orient in 0u32..(1u32 << q) {
        let chains: Vec<Vec<usize>> = comps
            .iter()
            .enumerate()
            .map(|(k, c)| if orient >> k & 1 == 1 { c.chain.iter().rev().copied().collect() } else { c.chain.clone() })
            .collect();
        if comps.iter().enumerate().any(|(k, c)| c.rank == 1 && orient >> k & 1 == 1) {
            continue;
        }
        for tops in injections(free.len(), q) {
            let mut groups: Vec<Vec<Weight>> = Vec::new();
            for (k, ch) in chains.iter().enumerate() {
                let mut g: Vec<Weight> = ch.iter().map(|&j| by_root[j].unwrap().clone()).collect();
                g.push(free[tops[k]].clone());
                groups.push(g);
            }
            for (i, f) in free.iter().enumerate() {
                if !tops.contains(&i) {
                    groups.push(vec![(*f).clone()]);
                }
            }
            let ends: Vec<&Weight> = groups.iter().map(|g| g.last().unwrap()).collect();
            let ok = groups.iter().all(|g| {
                let n = g.len() as i64;
                let top = g.last().unwrap();
                g.iter().enumerate().all(|(j, p)| {
                    let v: Weight = p.iter().zip(top).map(|(a, b)| n * a - (j as i64 + 1) * b).collect();
                    ends.iter().all(|e| rs.inner_z(&v, e) == 0)
                })
            });
            if ok {
                out.push(groups);
            }
        }
    }
    out
}

fn injections(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in injections(n, k - 1) {
        for i in 0..n {
            if !rest.contains(&i) {
                let mut v = rest.clone();
                v.push(i);
                out.push(v);
            }
        }
    }
    out
}

fn fail(l0: &[i64], c: u8) -> CriterionReport {
    let mut r = CriterionReport::new(l0, Verdict::NotSmooth);
    r.witness = Some(Witness::Condition(c));
    r
}

pub fn smoothness_at(model: &Model, l0: &[i64]) -> Result<CriterionReport> {
    let slice = model.local_slice(l0)?;
    let levi = &slice.levi;
    if levi.components.iter().any(|c| c.series != Series::A) || levi.components.len() > levi.center_rank {
        return Ok(fail(l0, 1));
    }
    let Some(basis) = lattice_basis_rays(model, &slice)? else {
        return Ok(fail(l0, 2));
    };
    let parts = gl_partitions(&model.rs, &slice, &basis);
    if parts.is_empty() {
        return Ok(fail(l0, 3));
    }
    for p in parts {
        if p.iter().all(|g| slice.lgens.contains(&g[0])) {
            let mut r = CriterionReport::new(l0, Verdict::Smooth);
            r.partition = Some(p);
            return Ok(r);
        }
    }
    Ok(fail(l0, 4))
}

/// Smoothness at a regular dominant vertex: Σ₀ is spanned by a basis π of 𝔛 and every λ₀ + π is a
/// weight of V.
pub fn smoothness_regular(model: &Model, l0: &[i64]) -> Result<CriterionReport> {
    let slice = model.local_slice(l0)?;
    if !slice.levi.simple_root_indices.is_empty() {
        return Err(Error::Domain("vertex is not regular".into()));
    }
    let Some(basis) = lattice_basis_rays(model, &slice)? else {
        return Ok(fail(l0, 2));
    };
    let weights = model.module_weights()?;
    let ok = basis.iter().all(|p| {
        let w: Weight = p.iter().zip(l0).map(|(a, b)| a + b).collect();
        weights.iter().any(|(x, _)| *x == w)
    });
    if !ok {
        return Ok(fail(l0, 4));
    }
    let mut r = CriterionReport::new(l0, Verdict::Smooth);
    r.partition = Some(basis.into_iter().map(|b| vec![b]).collect());
    Ok(r)
}
