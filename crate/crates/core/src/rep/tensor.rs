use std::collections::BTreeMap;

use super::weights::{all_indices, is_dominant_for, weight_system_sub, WeightSystem};
use crate::error::{Error, Result};
use crate::lie::weyl::dot_dominant;
use crate::lie::{RootSystem, Weight};

/// Klimyk's formula: V(σ) ⊗ V(ν) given the weight system of V(ν), over the subsystem `idx`.
pub fn tensor_with(rs: &RootSystem, idx: &[usize], sigma: &[i64], nu: &WeightSystem) -> BTreeMap<Weight, i64> {
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, m) in &nu.entries {
        let x: Weight = sigma.iter().zip(w).map(|(a, b)| a + b).collect();
        if let Some((d, s)) = dot_dominant(rs, &x, idx) {
            *out.entry(d).or_insert(0) += s as i64 * *m as i64;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Decomposition of V(λ) ⊗ V(μ) for the subsystem `idx`.
pub fn tensor_decompose_sub(rs: &RootSystem, idx: &[usize], l: &[i64], m: &[i64]) -> Result<BTreeMap<Weight, u64>> {
    for w in [l, m] {
        if !is_dominant_for(w, idx) {
            return Err(Error::NotDominant(rs.format_weight(w)));
        }
    }
    let ws = weight_system_sub(rs, idx, m)?;
    let raw = tensor_with(rs, idx, l, &ws);
    let mut out = BTreeMap::new();
    for (k, v) in raw {
        if v < 0 {
            return Err(Error::Internal("negative multiplicity in tensor product".into()));
        }
        out.insert(k, v as u64);
    }
    Ok(out)
}

pub fn tensor_decompose(rs: &RootSystem, l: &[i64], m: &[i64]) -> Result<BTreeMap<Weight, u64>> {
    tensor_decompose_sub(rs, &all_indices(rs), l, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clebsch_gordan() {
        let rs = RootSystem::parse("A1").unwrap();
        let t = tensor_decompose(&rs, &[1], &[1]).unwrap();
        assert_eq!(t.into_iter().collect::<Vec<_>>(), vec![(vec![0], 1), (vec![2], 1)]);
    }

    #[test]
    fn a2_dual_pair() {
        let rs = RootSystem::parse("A2").unwrap();
        let t = tensor_decompose(&rs, &[1, 0], &[0, 1]).unwrap();
        assert_eq!(t.into_iter().collect::<Vec<_>>(), vec![(vec![0, 0], 1), (vec![1, 1], 1)]);
    }

    #[test]
    fn c2_spin_square() {
        let rs = RootSystem::parse("C2").unwrap();
        let t = tensor_decompose(&rs, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(t.get(&vec![0, 2]), Some(&1));
        assert_eq!(t.get(&vec![0, 0]), Some(&1));
    }
}
