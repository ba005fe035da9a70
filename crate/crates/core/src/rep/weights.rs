//! Weight multiplicities by Freudenthal's formula, for the group or for a Levi subgroup
//! given by a set of simple roots.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::geom::linalg::{q, Q};
use crate::lie::weyl::orbit_under;
use crate::lie::{Root, RootSystem, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub highest: Weight,
    /// All weights with multiplicities.
    pub entries: BTreeMap<Weight, u64>,
    /// Dominant weights with multiplicities.
    pub dominant: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    pub fn dim(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn mult(&self, w: &[i64]) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }
}

/// Positive roots supported on `idx`.
pub fn sub_roots<'a>(rs: &'a RootSystem, idx: &[usize]) -> Vec<&'a Root> {
    rs.positive_roots
        .iter()
        .filter(|r| r.coeffs.iter().enumerate().all(|(i, &c)| c == 0 || idx.contains(&i)))
        .collect()
}

pub fn all_indices(rs: &RootSystem) -> Vec<usize> {
    (0..rs.rank).collect()
}

pub fn is_dominant_for(w: &[i64], idx: &[usize]) -> bool {
    idx.iter().all(|&i| w[i] >= 0)
}

/// Weyl dimension formula for the subsystem `idx`.
pub fn weyl_dimension_sub(rs: &RootSystem, idx: &[usize], w: &[i64]) -> BigInt {
    let mut d = Q::one();
    for r in sub_roots(rs, idx) {
        let rho: i64 = r.coroot.iter().sum();
        d *= q(rs.pair(w, r) + rho) / q(rho);
    }
    d.to_integer()
}

/// Weight system of the irreducible module with highest weight `w` for the subsystem `idx`.
pub fn weight_system_sub(rs: &RootSystem, idx: &[usize], w: &[i64]) -> Result<WeightSystem> {
    if w.len() != rs.dim {
        return Err(Error::Domain(format!("weight has {} coordinates, expected {}", w.len(), rs.dim)));
    }
    if !is_dominant_for(w, idx) {
        return Err(Error::NotDominant(rs.format_weight(w)));
    }
    let roots = sub_roots(rs, idx);
    // dominant weights below w, with depth
    let mut depth: HashMap<Weight, i64> = HashMap::new();
    depth.insert(w.to_vec(), 0);
    let mut stack = vec![w.to_vec()];
    while let Some(x) = stack.pop() {
        let dx = depth[&x];
        for r in &roots {
            let y: Weight = x.iter().zip(&r.omega).map(|(a, b)| a - b).collect();
            if is_dominant_for(&y, idx) && !depth.contains_key(&y) {
                depth.insert(y.clone(), dx + r.height());
                stack.push(y);
            }
        }
    }
    let mut order: Vec<(i64, Weight)> = depth.into_iter().map(|(k, d)| (d, k)).collect();
    order.sort();
    let two_rho: Weight = roots.iter().fold(vec![0; rs.dim], |acc, r| acc.iter().zip(&r.omega).map(|(a, b)| a + b).collect());
    let mut dom: BTreeMap<Weight, u64> = BTreeMap::new();
    let dominant_of = |x: &[i64]| crate::lie::weyl::dominant_with_parity(rs, x, idx).0;
    for (d, mu) in &order {
        if *d == 0 {
            dom.insert(mu.clone(), 1);
            continue;
        }
        let mut num: i64 = 0;
        for r in &roots {
            let mut k = 1;
            loop {
                let y: Weight = mu.iter().zip(&r.omega).map(|(a, b)| a + k * b).collect();
                let m = dom.get(&dominant_of(&y)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                num += 2 * (m as i64) * rs.inner_z(&y, &r.omega);
                k += 1;
            }
        }
        let diff: Weight = w.iter().zip(mu).map(|(a, b)| a - b).collect();
        let sum: Weight = w.iter().zip(mu).zip(&two_rho).map(|((a, b), c)| a + b + c).collect();
        let den = rs.inner_z(&diff, &sum);
        if den <= 0 || num % den != 0 {
            return Err(Error::Internal(format!("Freudenthal step failed at {}", rs.format_weight(mu))));
        }
        let m = num / den;
        if m > 0 {
            dom.insert(mu.clone(), m as u64);
        }
    }
    let mut entries = BTreeMap::new();
    for (mu, m) in &dom {
        for x in orbit_under(rs, mu, idx) {
            entries.insert(x, *m);
        }
    }
    Ok(WeightSystem { highest: w.to_vec(), entries, dominant: dom })
}

pub fn weight_system(rs: &RootSystem, w: &[i64]) -> Result<WeightSystem> {
    weight_system_sub(rs, &all_indices(rs), w)
}

/// Linear functional giving the height Σc_i of Σc_iα_i, scaled to be integral.
pub fn height_functional(rs: &RootSystem) -> (Vec<i64>, i64) {
    let a: Vec<Vec<Q>> = (0..rs.rank).map(|i| (0..rs.rank).map(|j| q(rs.cartan[i][j])).collect()).collect();
    let inv = crate::geom::linalg::inverse(&a).unwrap_or_default();
    // Σ_i (A⁻¹ x)_i = (1ᵀA⁻¹) x
    let row: Vec<Q> = (0..rs.rank).map(|j| inv.iter().map(|r| r[j].clone()).sum()).collect();
    let den = row.iter().fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let mut v: Vec<i64> = row.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer().to_i64().unwrap()).collect();
    v.resize(rs.dim, 0);
    (v, den.to_i64().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::linalg::Q;

    #[test]
    fn sl2_string() {
        let rs = RootSystem::parse("A1").unwrap();
        let ws = weight_system(&rs, &[2]).unwrap();
        assert_eq!(ws.entries.into_iter().collect::<Vec<_>>(), vec![(vec![-2], 1), (vec![0], 1), (vec![2], 1)]);
    }

    #[test]
    fn g2_seven() {
        let rs = RootSystem::parse("G2").unwrap();
        let ws = weight_system(&rs, &[1, 0]).unwrap();
        assert_eq!(ws.dim(), 7);
        assert_eq!(ws.mult(&[0, 0]), 1);
        let adj = weight_system(&rs, &[0, 1]).unwrap();
        assert_eq!(adj.dim(), 14);
        assert_eq!(adj.mult(&[0, 0]), 2);
    }

    #[test]
    fn b3_spinor() {
        let rs = RootSystem::parse("B3").unwrap();
        let ws = weight_system(&rs, &[0, 0, 1]).unwrap();
        assert_eq!(ws.entries.len(), 8);
        assert!(ws.entries.values().all(|&m| m == 1));
        let h = Q::new(1.into(), 2.into());
        for w in ws.entries.keys() {
            assert!(rs.to_ambient(w).iter().all(|x| *x == h || *x == -h.clone()));
        }
    }

    #[test]
    fn dimension_conservation() {
        for s in ["A2", "B2", "C3", "G2", "A3"] {
            let rs = RootSystem::parse(s).unwrap();
            let r = rs.rank;
            let mut w = vec![0i64; r];
            loop {
                let ws = weight_system(&rs, &w).unwrap();
                assert_eq!(BigInt::from(ws.dim()), rs.weyl_dimension(&w), "{s} {w:?}");
                let mut i = 0;
                while i < r {
                    w[i] += 1;
                    if w[i] <= 2 {
                        break;
                    }
                    w[i] = 0;
                    i += 1;
                }
                if i == r {
                    break;
                }
            }
        }
    }

    #[test]
    fn exceptional_dims() {
        let rs = RootSystem::parse("F4").unwrap();
        assert_eq!(weight_system(&rs, &[1, 0, 0, 0]).unwrap().dim(), 26);
        assert_eq!(weight_system(&rs, &[0, 0, 0, 1]).unwrap().dim(), 52);
        let e6 = RootSystem::parse("E6").unwrap();
        assert_eq!(weight_system(&e6, &[1, 0, 0, 0, 0, 0]).unwrap().dim(), 27);
    }

    #[test]
    fn levi_weights() {
        // GL_3 inside B3: V_L(ω₁) restricted has 3 weights
        let rs = RootSystem::parse("B3").unwrap();
        let ws = weight_system_sub(&rs, &[0, 1], &[1, 0, 0]).unwrap();
        assert_eq!(ws.dim(), 3);
        assert_eq!(weyl_dimension_sub(&rs, &[0, 1], &[1, 0, 5]), 3.into());
    }

    #[test]
    fn height() {
        let rs = RootSystem::parse("B2").unwrap();
        let (h, d) = height_functional(&rs);
        let hr = rs.highest_root().unwrap();
        assert_eq!(h.iter().zip(&hr).map(|(a, b)| a * b).sum::<i64>(), 3 * d);
    }
}
