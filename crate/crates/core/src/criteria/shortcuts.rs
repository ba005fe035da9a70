//! Slices known to be normal: closures of ℂ^×·G' acting by a minuscule weight.

use super::{eval, vertex_functional};
use crate::compact::Model;
use crate::error::Result;
use crate::lie::levi::Component;
use crate::lie::{Series, Weight};
use crate::rep::generate_semigroup_above;
use crate::rep::semigroup::DEFAULT_FRONTIER_LIMIT;

/// Name of the matching case when the restriction of `nu` to `c` is a minuscule fundamental weight.
fn minuscule_case(c: &Component, nu: &[i64]) -> Option<String> {
    let labels: Vec<i64> = c.chain.iter().map(|&j| nu[j]).collect();
    if labels.iter().any(|&x| x < 0) || labels.iter().sum::<i64>() != 1 {
        return None;
    }
    let k = labels.iter().position(|&x| x == 1)? + 1;
    let l = c.rank;
    match c.series {
        Series::A => Some(format!("GL_{}, pi_{}", l + 1, k)),
        Series::B if k == l => Some(format!("C^x x Spin_{}, e+w{}", 2 * l + 1, l)),
        Series::C if k == 1 => Some(format!("C^x x Sp_{}, e+w1", 2 * l)),
        Series::D if k == 1 => Some(format!("C^x x SO_{}, e+w1", 2 * l)),
        Series::D if k >= l - 1 => Some(format!("C^x x Spin_{}, e+w{}", 2 * l, k)),
        Series::E if (l == 6 && (k == 1 || k == 6)) || (l == 7 && k == 7) => Some(format!("C^x x E{}, e+w{}", l, k)),
        _ => None,
    }
}

/// Some(case) when the slice is the closure of L acting on one irreducible module from the
/// minuscule list, so that it is normal.
pub fn known_normal_shortcuts(model: &Model, l0: &[i64]) -> Result<Option<String>> {
    let slice = model.local_slice(l0)?;
    let levi = &slice.levi;
    if levi.center_rank != 1 || levi.components.len() > 1 {
        return Ok(None);
    }
    let Some(f) = vertex_functional(model, l0) else {
        return Ok(None);
    };
    let nus: Vec<Weight> = slice.branching.iter().map(|(w, _)| w.clone()).collect();
    for nu in &nus {
        let case = match levi.components.first() {
            None => Some("GL_1, pi_1".to_string()),
            Some(c) => minuscule_case(c, nu),
        };
        let Some(case) = case else { continue };
        if !model.lattice().contains(nu) {
            continue;
        }
        // Z is the closure in End(V_L(ν)) when ν alone generates the other weights
        let floor = nus.iter().map(|w| eval(&f, w)).min().unwrap_or(0);
        let m = -eval(&f, nu);
        let cap = ((-floor) / m.max(1)).max(1) as usize;
        let sg = generate_semigroup_above(&model.rs, &levi.simple_root_indices, std::slice::from_ref(nu), cap, DEFAULT_FRONTIER_LIMIT, &f, floor)?;
        if nus.iter().all(|w| sg.contains(w)) {
            return Ok(Some(case));
        }
    }
    Ok(None)
}
