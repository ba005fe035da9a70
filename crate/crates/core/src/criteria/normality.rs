use std::collections::BTreeSet;

use super::{eval, slice_hilbert_basis, vertex_functional, CriterionReport, Verdict, Witness};
use crate::compact::Model;
use crate::error::Result;
use crate::geom::hilbert::semigroup_contains;
use crate::geom::toric::toric_missing_at;
use crate::lie::Weight;
use crate::rep::semigroup::{DEFAULT_CAP, DEFAULT_FRONTIER_LIMIT};
use crate::rep::{generate_semigroup, generate_semigroup_above, HighestWeightSemigroup};

#[derive(Clone, Debug)]
pub struct NormalityOptions {
    /// Degree cap; `None` searches up to the degree bound, which decides every case.
    pub cap: Option<usize>,
    /// Use every L-highest weight of V instead of the short generator list.
    pub full_branching: bool,
    pub frontier_limit: usize,
    /// Largest k tried for a witness kμ.
    pub max_multiple: usize,
}

impl Default for NormalityOptions {
    fn default() -> Self {
        NormalityOptions { cap: None, full_branching: false, frontier_limit: DEFAULT_FRONTIER_LIMIT, max_multiple: 4 }
    }
}

fn scale(w: &[i64], k: usize) -> Weight {
    w.iter().map(|x| x * k as i64).collect()
}

fn witness(sg: &HighestWeightSemigroup, missing: &[&Weight], kmax: usize) -> Option<(Weight, usize)> {
    for h in missing {
        for k in 2..=kmax {
            if sg.contains(&scale(h, k)) {
                return Some(((*h).clone(), k));
            }
        }
    }
    None
}

pub fn normality_at(model: &Model, l0: &[i64], opts: &NormalityOptions) -> Result<CriterionReport> {
    let rs = &model.rs;
    let slice = model.local_slice(l0)?;
    let hb = slice_hilbert_basis(model, l0)?;
    let mut rep = CriterionReport::new(l0, Verdict::Normal);
    rep.hilbert_basis_size = hb.len();
    let branching: Vec<Weight> = slice.branching.iter().map(|(w, _)| w.clone()).collect();
    let gens = if opts.full_branching { branching.clone() } else { slice.lgens.clone() };
    let f = vertex_functional(model, l0);
    let idx = &slice.levi.simple_root_indices;

    if let Some(f) = &f {
        let plain: Vec<Weight> = slice.lgens.iter().chain(&branching).cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let grading: Vec<i64> = f.iter().map(|x| -x).collect();
        if hb.iter().all(|h| semigroup_contains(&plain, h, &grading)) {
            rep.shortcut_provenance = Some("generated as a plain semigroup".into());
            return Ok(rep);
        }
        let m = gens.iter().map(|g| -eval(f, g)).min().unwrap_or(1).max(1);
        let hmin = hb.iter().map(|h| eval(f, h)).min().unwrap_or(0);
        for kmax in 2..=opts.max_multiple.max(2) {
            let floor = hmin * kmax as i64;
            let bound = ((-floor) / m).max(1) as usize;
            let cap = opts.cap.map_or(bound, |c| c.min(bound));
            let sg = generate_semigroup_above(rs, idx, &gens, cap, opts.frontier_limit, f, floor)?;
            rep.cap = cap;
            rep.exhaustive = cap >= bound;
            let missing: Vec<&Weight> = hb.iter().filter(|h| !sg.contains(h)).collect();
            if missing.is_empty() {
                rep.exhaustive = true;
                return Ok(rep);
            }
            if let Some((h, k)) = witness(&sg, &missing, kmax) {
                rep.verdict = Verdict::NotNormal;
                rep.witness = Some(Witness::Missing { weight: h, multiple: k });
                return Ok(rep);
            }
        }
        rep.verdict = Verdict::Unknown;
        return Ok(rep);
    }

    let cap = opts.cap.unwrap_or(DEFAULT_CAP);
    let sg = generate_semigroup(rs, idx, &gens, cap, opts.frontier_limit)?;
    rep.cap = cap;
    rep.exhaustive = false;
    let missing: Vec<&Weight> = hb.iter().filter(|h| !sg.contains(h)).collect();
    if missing.is_empty() {
        rep.exhaustive = true;
    } else if let Some((h, k)) = witness(&sg, &missing, opts.max_multiple) {
        rep.verdict = Verdict::NotNormal;
        rep.witness = Some(Witness::Missing { weight: h, multiple: k });
    } else {
        rep.verdict = Verdict::Unknown;
    }
    Ok(rep)
}

/// Exhaustive membership of each target in the L-generated semigroup of the slice at `l0`.
/// None when the vertex has no certificate, so no degree bound is available.
pub fn semigroup_membership(model: &Model, l0: &[i64], targets: &[Weight]) -> Result<Option<Vec<bool>>> {
    let slice = model.local_slice(l0)?;
    let Some(f) = vertex_functional(model, l0) else {
        return Ok(None);
    };
    let floor = targets.iter().map(|t| eval(&f, t)).min().unwrap_or(0);
    let m = slice.lgens.iter().map(|g| -eval(&f, g)).min().unwrap_or(1).max(1);
    let cap = ((-floor) / m).max(1) as usize;
    let sg = generate_semigroup_above(&model.rs, &slice.levi.simple_root_indices, &slice.lgens, cap, DEFAULT_FRONTIER_LIMIT, &f, floor)?;
    Ok(Some(targets.iter().map(|t| sg.contains(t)).collect()))
}

/// Normality of the closure of T, tested at λ₀: the weights μ − λ₀ of V must generate the
/// lattice points of the cone of P at λ₀.
pub fn torus_closure_normal(model: &Model, l0: &[i64]) -> Result<bool> {
    Ok(torus_closure_missing(model, l0)?.is_none())
}

pub fn torus_closure_missing(model: &Model, l0: &[i64]) -> Result<Option<Weight>> {
    model.local_slice(l0)?;
    let pts: Vec<Weight> = model.module_weights()?.into_iter().map(|(w, _)| w).collect();
    toric_missing_at(&pts, l0, &model.lattice().basis_z())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(ty: &str, w: &str, l0: &[i64]) -> CriterionReport {
        let m = Model::parse(ty, w).unwrap();
        normality_at(&m, l0, &NormalityOptions::default()).unwrap()
    }

    #[test]
    fn a1_normal() {
        let r = run("A1", "w1", &[1]);
        assert_eq!(r.verdict, Verdict::Normal);
        let m = Model::parse("A1", "w1").unwrap();
        assert!(torus_closure_normal(&m, &[1]).unwrap());
    }

    #[test]
    fn spinor_normal() {
        assert_eq!(run("B3", "w3", &[0, 0, 1]).verdict, Verdict::Normal);
    }

    #[test]
    fn g2_short_not_normal() {
        let r = run("G2", "w2", &[0, 1]);
        assert_eq!(r.verdict, Verdict::NotNormal);
        assert!(r.exhaustive);
        assert!(matches!(r.witness, Some(Witness::Missing { multiple: 2, .. })));
    }

    #[test]
    fn sp4_two_weights() {
        let m = Model::parse("C2", "3*w1,2*w2").unwrap();
        assert!(torus_closure_normal(&m, &[3, 0]).unwrap());
        let r = normality_at(&m, &[3, 0], &NormalityOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NotNormal);
    }

    #[test]
    fn lagrangian_not_normal() {
        let r = run("C2", "w2", &[0, 1]);
        assert_eq!(r.verdict, Verdict::NotNormal);
    }

    #[test]
    fn low_cap_gives_unknown_or_proof() {
        let m = Model::parse("G2", "w2").unwrap();
        let opts = NormalityOptions { cap: Some(1), ..Default::default() };
        let r = normality_at(&m, &[0, 1], &opts).unwrap();
        assert!(r.cap <= 1);
        assert!(r.verdict == Verdict::Unknown || !r.exhaustive || r.verdict == Verdict::NotNormal);
    }
}
