//! Highest weights of tensor monomials, explored degree by degree.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::tensor::tensor_with;
use super::weights::{weight_system_sub, WeightSystem};
use crate::error::{Error, Result};
use crate::geom::cone::RationalCone;
use crate::geom::linalg::{Q, Z};
use crate::lie::weyl::weyl_orbit;
use crate::lie::{LeviDatum, RootSystem, Weight};

pub const DEFAULT_CAP: usize = 8;
pub const DEFAULT_FRONTIER_LIMIT: usize = 200_000;

#[derive(Clone, Debug)]
pub struct HighestWeightSemigroup {
    pub generators: Vec<Weight>,
    /// Each weight found, with the least total degree at which it occurs.
    pub explored: BTreeMap<Weight, usize>,
    /// Highest weights of the degree-d monomials, d = 0..=cap.
    pub levels: Vec<BTreeSet<Weight>>,
    pub degree_cap: usize,
}

impl HighestWeightSemigroup {
    pub fn contains(&self, w: &[i64]) -> bool {
        self.explored.contains_key(w)
    }

    pub fn degree(&self, w: &[i64]) -> Option<usize> {
        self.explored.get(w).copied()
    }
}

/// Shifted weights λ_i − λ₀ and the negatives of the simple roots outside Π_L.
pub fn lgens_generators(rs: &RootSystem, weights: &[Weight], l0: &[i64], levi: &LeviDatum) -> Result<Vec<Weight>> {
    if !weights.iter().any(|w| w.as_slice() == l0) {
        return Err(Error::Domain(format!("{} is not among the weights", rs.format_weight(l0))));
    }
    let mut out: BTreeSet<Weight> = BTreeSet::new();
    for w in weights {
        let d: Weight = w.iter().zip(l0).map(|(a, b)| a - b).collect();
        if d.iter().any(|&x| x != 0) {
            out.insert(d);
        }
    }
    for j in 0..rs.rank {
        if !levi.contains(j) {
            out.insert(rs.alpha(j).iter().map(|x| -x).collect());
        }
    }
    Ok(out.into_iter().collect())
}

/// All highest weights of monomials of total degree ≤ `cap` in the modules V(g), g ∈ `gens`,
/// for the subsystem `idx`.
pub fn generate_semigroup(
    rs: &RootSystem,
    idx: &[usize],
    gens: &[Weight],
    cap: usize,
    frontier_limit: usize,
) -> Result<HighestWeightSemigroup> {
    generate(rs, idx, gens, cap, frontier_limit, None)
}

/// As `generate_semigroup`, dropping every weight w with `functional·w < floor`. The result is
/// complete above the floor when the functional is negative on the generators and
/// nonnegative on the roots of the subsystem.
pub fn generate_semigroup_above(
    rs: &RootSystem,
    idx: &[usize],
    gens: &[Weight],
    cap: usize,
    frontier_limit: usize,
    functional: &[i64],
    floor: i64,
) -> Result<HighestWeightSemigroup> {
    generate(rs, idx, gens, cap, frontier_limit, Some((functional, floor)))
}

fn generate(
    rs: &RootSystem,
    idx: &[usize],
    gens: &[Weight],
    cap: usize,
    frontier_limit: usize,
    bound: Option<(&[i64], i64)>,
) -> Result<HighestWeightSemigroup> {
    if cap == 0 {
        return Err(Error::Domain("degree cap must be at least 1".into()));
    }
    let systems: Vec<WeightSystem> = gens.iter().map(|g| weight_system_sub(rs, idx, g)).collect::<Result<_>>()?;
    let zero = vec![0i64; rs.dim];
    let mut explored = BTreeMap::new();
    explored.insert(zero.clone(), 0);
    let mut levels = vec![BTreeSet::from([zero])];
    for d in 1..=cap {
        let prev: Vec<&Weight> = levels[d - 1].iter().collect();
        let next: BTreeSet<Weight> = prev
            .par_iter()
            .flat_map_iter(|s| systems.iter().flat_map(move |ws| tensor_with(rs, idx, s, ws).into_keys()))
            .filter(|w| bound.is_none_or(|(f, floor)| w.iter().zip(f).map(|(a, b)| a * b).sum::<i64>() >= floor))
            .collect();
        if next.len() > frontier_limit {
            return Err(Error::Resource(format!(
                "semigroup frontier at degree {d} has {} weights (limit {frontier_limit}); {} weights found below",
                next.len(),
                explored.len()
            )));
        }
        for w in &next {
            explored.entry(w.clone()).or_insert(d);
        }
        levels.push(next);
    }
    Ok(HighestWeightSemigroup { generators: gens.to_vec(), explored, levels, degree_cap: cap })
}

/// Smallest n ≤ cap with V(nμ) ⊂ V^{⊗n}, V = ⊕V(λ_i); `mu` in rational Dynkin labels.
pub fn moment_witness(rs: &RootSystem, weights: &[Weight], mu: &[Q], cap: usize) -> Result<Option<usize>> {
    if mu.len() != rs.dim || mu[..rs.rank].iter().any(|x| x < &Q::from_integer(0.into())) {
        return Err(Error::Domain("moment point must be dominant".into()));
    }
    // μ ∈ P: (1, μ) in the cone over the orbit points
    let mut pts: BTreeSet<Weight> = BTreeSet::new();
    for w in weights {
        pts.extend(weyl_orbit(rs, w));
    }
    let gens: Vec<Vec<Z>> = pts.iter().map(|p| std::iter::once(Z::from(1)).chain(p.iter().map(|&x| Z::from(x))).collect()).collect();
    let cone = RationalCone::from_generators(&gens, rs.dim + 1);
    let den = mu.iter().fold(Z::from(1), |a, x| num_integer::Integer::lcm(&a, x.denom()));
    let scaled: Vec<Z> = std::iter::once(den.clone()).chain(mu.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer())).collect();
    if !cone.contains(&scaled) {
        return Err(Error::Domain("moment point lies outside the weight polytope".into()));
    }
    let sg = generate_semigroup(rs, &(0..rs.rank).collect::<Vec<_>>(), weights, cap, DEFAULT_FRONTIER_LIMIT)?;
    for n in 1..=cap {
        let nm: Vec<Q> = mu.iter().map(|x| x * Q::from_integer(n.into())).collect();
        if nm.iter().any(|x| !x.is_integer()) {
            continue;
        }
        let w: Weight = nm.iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect();
        if sg.levels[n].contains(&w) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::levi_datum;

    fn all(rs: &RootSystem) -> Vec<usize> {
        (0..rs.rank).collect()
    }

    #[test]
    fn a1_degree_two() {
        let rs = RootSystem::parse("A1").unwrap();
        let sg = generate_semigroup(&rs, &all(&rs), &[vec![1]], 2, 1000).unwrap();
        assert_eq!(sg.explored.into_iter().collect::<Vec<_>>(), vec![(vec![0], 0), (vec![1], 1), (vec![2], 2)]);
        assert!(sg.levels[2].contains(&vec![0]));
    }

    #[test]
    fn a2_wedge_cube() {
        let rs = RootSystem::parse("A2").unwrap();
        let sg = generate_semigroup(&rs, &all(&rs), &[vec![1, 0]], 3, 1000).unwrap();
        assert!(sg.levels[3].contains(&vec![0, 0]));
        assert!(!sg.levels[2].contains(&vec![0, 0]));
    }

    #[test]
    fn lgens_examples() {
        let rs = RootSystem::parse("A3").unwrap();
        let l0 = vec![1, 0, 0];
        let levi = levi_datum(&rs, &l0).unwrap();
        assert_eq!(lgens_generators(&rs, std::slice::from_ref(&l0), &l0, &levi).unwrap(), vec![vec![-2, 1, 0]]);
        let c2 = RootSystem::parse("C2").unwrap();
        let l0 = vec![3, 0];
        let levi = levi_datum(&c2, &l0).unwrap();
        let g = lgens_generators(&c2, &[l0.clone(), vec![0, 2]], &l0, &levi).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.contains(&vec![-3, 2]));
        assert!(g.contains(&vec![-2, 1]));
        assert!(lgens_generators(&c2, &[vec![0, 2]], &l0, &levi).is_err());
    }

    #[test]
    fn moments() {
        let rs = RootSystem::parse("A2").unwrap();
        let q = |n: i64| Q::from_integer(n.into());
        assert_eq!(moment_witness(&rs, &[vec![1, 0]], &[q(1), q(0)], 4).unwrap(), Some(1));
        assert_eq!(moment_witness(&rs, &[vec![1, 0]], &[q(0), q(0)], 4).unwrap(), Some(3));
        assert!(moment_witness(&rs, &[vec![1, 0]], &[q(0), q(1)], 4).is_err());
        let b2 = RootSystem::parse("B2").unwrap();
        assert_eq!(moment_witness(&b2, &[vec![1, 0]], &[q(0), q(1)], 4).unwrap(), Some(2));
    }

    #[test]
    fn monotone_in_cap() {
        let rs = RootSystem::parse("B2").unwrap();
        let a = generate_semigroup(&rs, &all(&rs), &[vec![1, 0], vec![0, 1]], 2, 10_000).unwrap();
        let b = generate_semigroup(&rs, &all(&rs), &[vec![1, 0], vec![0, 1]], 3, 10_000).unwrap();
        assert!(a.explored.iter().all(|(k, v)| b.explored.get(k) == Some(v)));
    }
}
