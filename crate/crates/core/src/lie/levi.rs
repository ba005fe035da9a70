use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::root_system::RootSystem;
use super::types::{LieType, Series, SimpleFactor};
use crate::error::{Error, Result};

/// A connected piece of a sub-diagram, with its nodes listed in Bourbaki order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub series: Series,
    pub rank: usize,
    pub chain: Vec<usize>,
}

impl Component {
    pub fn label(&self) -> String {
        format!("{}{}", self.series.letter(), self.rank)
    }

    pub fn weyl_order(&self) -> u128 {
        SimpleFactor { series: self.series, rank: self.rank }.weyl_order()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviDatum {
    pub simple_root_indices: Vec<usize>,
    pub components: Vec<Component>,
    pub center_rank: usize,
}

impl LeviDatum {
    pub fn from_indices(rs: &RootSystem, idx: &[usize]) -> LeviDatum {
        let set: BTreeSet<usize> = idx.iter().copied().collect();
        let components = components(rs, &set);
        LeviDatum { simple_root_indices: set.into_iter().collect(), components, center_rank: rs.dim - idx.len() }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.simple_root_indices.binary_search(&i).is_ok()
    }

    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(|c| c.weyl_order()).product()
    }

    pub fn all_type_a(&self) -> bool {
        self.components.iter().all(|c| c.series == Series::A)
    }

    /// "A2+T1" style.
    pub fn type_string(&self) -> String {
        let mut parts: Vec<String> = self.components.iter().map(|c| c.label()).collect();
        if self.center_rank > 0 {
            parts.push(format!("T{}", self.center_rank));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("+")
        }
    }

    pub fn lie_type(&self) -> LieType {
        LieType {
            factors: self.components.iter().map(|c| SimpleFactor { series: c.series, rank: c.rank }).collect(),
            torus_rank: self.center_rank,
        }
    }
}

impl fmt::Display for LeviDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.type_string())
    }
}

/// Levi subgroup centralizing a dominant weight.
pub fn levi_datum(rs: &RootSystem, w: &[i64]) -> Result<LeviDatum> {
    if !rs.is_dominant(w) {
        return Err(Error::NotDominant(rs.format_weight(w)));
    }
    let idx: Vec<usize> = (0..rs.rank).filter(|&i| w[i] == 0).collect();
    Ok(LeviDatum::from_indices(rs, &idx))
}

/// Connected components of the sub-diagram on `set`, ordered by least index.
pub fn components(rs: &RootSystem, set: &BTreeSet<usize>) -> Vec<Component> {
    let mut left = set.clone();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if left.remove(&i) {
                comp.insert(i);
                stack.extend(rs.neighbours(i).into_iter().filter(|j| left.contains(j)));
            }
        }
        out.push(classify(rs, &comp));
    }
    out
}

fn classify(rs: &RootSystem, comp: &BTreeSet<usize>) -> Component {
    let nodes: Vec<usize> = comp.iter().copied().collect();
    let n = nodes.len();
    let nb = |i: usize| -> Vec<usize> { rs.neighbours(i).into_iter().filter(|j| comp.contains(j)).collect() };
    let bond = |i: usize, j: usize| rs.cartan[i][j] * rs.cartan[j][i];
    let mk = |series, chain: Vec<usize>| Component { series, rank: chain.len(), chain };
    if n == 1 {
        return mk(Series::A, nodes);
    }
    // path from an end node, preferring the smallest index
    let walk = |start: usize| -> Vec<usize> {
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next: Vec<usize> = nb(cur).into_iter().filter(|&j| j != prev && !path.contains(&j)).collect();
            if next.len() != 1 {
                return path;
            }
            prev = cur;
            cur = next[0];
            path.push(cur);
        }
    };
    let branch: Vec<usize> = nodes.iter().copied().filter(|&i| nb(i).len() == 3).collect();
    if let Some(&b) = branch.first() {
        // arms from the branch node, shortest first
        let mut arms: Vec<Vec<usize>> = nb(b)
            .into_iter()
            .map(|s| {
                let mut arm = vec![s];
                let mut prev = b;
                let mut cur = s;
                loop {
                    let next: Vec<usize> = nb(cur).into_iter().filter(|&j| j != prev).collect();
                    if next.is_empty() {
                        break;
                    }
                    prev = cur;
                    cur = next[0];
                    arm.push(cur);
                }
                arm
            })
            .collect();
        arms.sort_by_key(|a| (a.len(), a[0]));
        if arms[0].len() == 1 && arms[1].len() == 1 {
            // D_n: long arm reversed, branch, then the two short arms
            let mut chain: Vec<usize> = arms[2].iter().rev().copied().collect();
            chain.push(b);
            chain.push(arms[0][0]);
            chain.push(arms[1][0]);
            return mk(Series::D, chain);
        }
        // E_n in Bourbaki order 1..n: α₁ end of the length-2 arm, α₂ the short arm
        let mut by_pos = vec![0usize; n];
        by_pos[0] = arms[1][1];
        by_pos[1] = arms[0][0];
        by_pos[2] = arms[1][0];
        by_pos[3] = b;
        for (k, &x) in arms[2].iter().enumerate() {
            by_pos[4 + k] = x;
        }
        return mk(Series::E, by_pos);
    }
    let ends: Vec<usize> = nodes.iter().copied().filter(|&i| nb(i).len() == 1).collect();
    let path = walk(ends[0]);
    let multi: Vec<(usize, i64)> = (0..n - 1)
        .map(|k| (k, bond(path[k], path[k + 1])))
        .filter(|(_, m)| *m > 1)
        .collect();
    let longer = |i: usize, j: usize| rs.root_len2[i] > rs.root_len2[j];
    match multi.first() {
        None => mk(Series::A, path),
        Some(&(_, 3)) => {
            let chain = if longer(path[1], path[0]) { path } else { path.into_iter().rev().collect() };
            mk(Series::G, chain)
        }
        Some(&(k, _)) => {
            if n == 4 && k == 1 {
                // F4 with α₁, α₂ long
                let chain = if longer(path[0], path[3]) { path } else { path.into_iter().rev().collect() };
                return mk(Series::F, chain);
            }
            // double bond at an end; orient it last
            let chain: Vec<usize> = if k == n - 2 { path } else { path.into_iter().rev().collect() };
            let (a, z) = (chain[n - 2], chain[n - 1]);
            let series = if n == 2 {
                let g = rs.ty.factors[rs.factor_of[a]].series;
                if g == Series::C {
                    Series::C
                } else {
                    Series::B
                }
            } else if longer(a, z) {
                Series::B
            } else {
                Series::C
            };
            let chain = if n == 2 {
                // B2: long then short; C2: short then long
                let long_first = longer(a, z);
                match (series, long_first) {
                    (Series::B, true) | (Series::C, false) => chain,
                    _ => vec![z, a],
                }
            } else {
                chain
            };
            mk(series, chain)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::weyl::weyl_orbit;

    fn levi(s: &str, w: &str) -> LeviDatum {
        let rs = RootSystem::parse(s).unwrap();
        levi_datum(&rs, &rs.parse_weight(w).unwrap()).unwrap()
    }

    #[test]
    fn table_levis() {
        let l = levi("B3", "w3");
        assert_eq!(l.simple_root_indices, vec![0, 1]);
        assert_eq!(l.type_string(), "A2+T1");
        assert_eq!(levi("C2", "3*w1+2*w2").type_string(), "T2");
        assert_eq!(levi("F4", "w1").type_string(), "B3+T1");
        assert_eq!(levi("F4", "w4").type_string(), "C3+T1");
        assert_eq!(levi("F4", "w2").type_string(), "A1+A2+T1");
        assert_eq!(levi("F4", "w3").type_string(), "A2+A1+T1");
        assert_eq!(levi("C3", "w1").type_string(), "C2+T1");
        assert_eq!(levi("C3", "w2").type_string(), "A1+A1+T1");
        assert_eq!(levi("E6", "w1").type_string(), "D5+T1");
        assert_eq!(levi("E7", "w1").type_string(), "E6+T1");
        assert_eq!(levi("E8", "w1").type_string(), "E7+T1");
        assert_eq!(levi("G2", "w1").type_string(), "A1+T1");
        assert_eq!(levi("D5", "w1").type_string(), "D4+T1");
        assert_eq!(levi("B3", "w1").type_string(), "B2+T1");
    }

    #[test]
    fn bourbaki_chains() {
        let rs = RootSystem::parse("F4").unwrap();
        let l = levi_datum(&rs, &[1, 0, 0, 0]).unwrap();
        // B3 on α₂, α₃, α₄ in Bourbaki order, long roots first
        assert_eq!(l.components[0].chain, vec![3, 2, 1]);
        let rs = RootSystem::parse("E7").unwrap();
        let l = levi_datum(&rs, &[1, 0, 0, 0, 0, 0, 0]).unwrap();
        let c = &l.components[0];
        assert_eq!(c.series, Series::E);
        assert_eq!(c.chain, vec![1, 6, 2, 3, 4, 5]);
    }

    #[test]
    fn orbit_stabilizer() {
        for s in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let rs = RootSystem::parse(s).unwrap();
            for i in 0..rs.rank {
                let mut w = vec![0; rs.rank];
                w[i] = 1;
                let l = levi_datum(&rs, &w).unwrap();
                assert_eq!(weyl_orbit(&rs, &w).len() as u128 * l.weyl_order(), rs.ty.weyl_order(), "{s} {i}");
            }
        }
    }

    #[test]
    fn non_dominant_rejected() {
        let rs = RootSystem::parse("A2").unwrap();
        assert!(levi_datum(&rs, &[-1, 0]).is_err());
    }
}
