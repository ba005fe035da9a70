use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::weights::{height_functional, weight_system, weight_system_sub};
use crate::error::{Error, Result};
use crate::lie::{LeviDatum, RootSystem, Weight};

/// Highest weight of an irreducible module of the group (`levi = None`) or of a Levi subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepLabel {
    pub levi: Option<LeviDatum>,
    pub highest_weight: Weight,
}

/// Restriction of V(λ) to L as a list of L-highest weights with multiplicities.
pub fn branch_to_levi(rs: &RootSystem, l: &[i64], levi: &LeviDatum) -> Result<Vec<(Weight, u64)>> {
    let ws = weight_system(rs, l)?;
    let (h, _) = height_functional(rs);
    let ht = |w: &Weight| -> i64 { w.iter().zip(&h).map(|(a, b)| a * b).sum() };
    let mut rem: BTreeMap<Weight, i64> = ws.entries.iter().map(|(k, v)| (k.clone(), *v as i64)).collect();
    let mut out = Vec::new();
    while !rem.is_empty() {
        let top = rem.keys().max_by_key(|w| (ht(w), (*w).clone())).unwrap().clone();
        let m = rem[&top];
        let sub = weight_system_sub(rs, &levi.simple_root_indices, &top)?;
        for (w, k) in &sub.entries {
            let e = rem.entry(w.clone()).or_insert(0);
            *e -= m * *k as i64;
            if *e < 0 {
                return Err(Error::Internal("branching produced a negative multiplicity".into()));
            }
            if *e == 0 {
                rem.remove(w);
            }
        }
        out.push((top, m as u64));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::levi_datum;

    #[test]
    fn spinor_to_gl3() {
        let rs = RootSystem::parse("B3").unwrap();
        let l0 = vec![0, 0, 1];
        let levi = levi_datum(&rs, &l0).unwrap();
        let b = branch_to_levi(&rs, &l0, &levi).unwrap();
        assert_eq!(b.len(), 4);
        let a0 = rs.to_ambient(&l0);
        let mut shifts: Vec<Vec<i64>> = b
            .iter()
            .map(|(w, _)| rs.to_ambient(w).iter().zip(&a0).map(|(x, y)| (x - y).to_integer().try_into().unwrap()).collect())
            .collect();
        shifts.sort();
        // −ε₃, −ε₂−ε₃, −ε₁−ε₂−ε₃ in this realization, plus 0
        assert_eq!(shifts, vec![vec![-1, -1, -1], vec![0, -1, -1], vec![0, 0, -1], vec![0, 0, 0]]);
    }

    #[test]
    fn trivial_module() {
        let rs = RootSystem::parse("C3").unwrap();
        let levi = levi_datum(&rs, &[0, 1, 0]).unwrap();
        assert_eq!(branch_to_levi(&rs, &[0, 0, 0], &levi).unwrap(), vec![(vec![0, 0, 0], 1)]);
    }

    #[test]
    fn conservation_f4() {
        let rs = RootSystem::parse("F4").unwrap();
        let levi = levi_datum(&rs, &[1, 0, 0, 0]).unwrap();
        let b = branch_to_levi(&rs, &[1, 0, 0, 0], &levi).unwrap();
        let total: u64 = b
            .iter()
            .map(|(w, m)| m * weight_system_sub(&rs, &levi.simple_root_indices, w).unwrap().dim())
            .sum();
        assert_eq!(total, 26);
        assert!(b.contains(&(vec![1, 0, 0, 0], 1)));
    }
}
