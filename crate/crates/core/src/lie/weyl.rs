use std::collections::{BTreeSet, HashSet};

use super::root_system::{RootSystem, Weight};

/// W-orbit of `w`, sorted.
pub fn weyl_orbit(rs: &RootSystem, w: &[i64]) -> Vec<Weight> {
    orbit_under(rs, w, &(0..rs.rank).collect::<Vec<_>>())
}

/// Orbit under the subgroup generated by the simple reflections in `gens`.
pub fn orbit_under(rs: &RootSystem, w: &[i64], gens: &[usize]) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(w.to_vec());
    let mut frontier = vec![w.to_vec()];
    while let Some(x) = frontier.pop() {
        for &i in gens {
            if x[i] != 0 {
                let y = rs.reflect(&x, i);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    let sorted: BTreeSet<Weight> = seen.into_iter().collect();
    sorted.into_iter().collect()
}

/// Dominant representative of `w` and the sign of the reflecting element; the sign is 0
/// when `w` lies on a wall (some positive root is orthogonal to it).
pub fn dominant_reflect(rs: &RootSystem, w: &[i64]) -> (Weight, i8) {
    let (d, sign) = dominant_with_parity(rs, w, &(0..rs.rank).collect::<Vec<_>>());
    let sign = if d[..rs.rank].contains(&0) { 0 } else { sign };
    (d, sign)
}

/// Reflects into the dominant chamber of the subsystem spanned by `idx`; returns det(w).
pub fn dominant_with_parity(rs: &RootSystem, w: &[i64], idx: &[usize]) -> (Weight, i8) {
    let mut x = w.to_vec();
    let mut sign = 1i8;
    while let Some(&i) = idx.iter().find(|&&i| x[i] < 0) {
        x = rs.reflect(&x, i);
        sign = -sign;
    }
    (x, sign)
}

/// Dot action: dominant ρ-shifted representative of `w` within the subsystem `idx`, with
/// sign, or `None` if `w + ρ` is singular.
pub fn dot_dominant(rs: &RootSystem, w: &[i64], idx: &[usize]) -> Option<(Weight, i8)> {
    let mut x = w.to_vec();
    let mut sign = 1i8;
    loop {
        if idx.iter().any(|&i| x[i] == -1) {
            return None;
        }
        match idx.iter().find(|&&i| x[i] <= -2) {
            None => return Some((x, sign)),
            Some(&i) => {
                let c = x[i] + 1;
                for k in 0..rs.rank {
                    x[k] -= c * rs.cartan[k][i];
                }
                sign = -sign;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orbits() {
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(weyl_orbit(&a1, &[1]), vec![vec![-1], vec![1]]);
        let a2 = RootSystem::parse("A2").unwrap();
        assert_eq!(weyl_orbit(&a2, &[1, 0]).len(), 3);
        let b2 = RootSystem::parse("B2").unwrap();
        let orb = weyl_orbit(&b2, &[1, 0]);
        assert_eq!(orb.len(), 4);
        let mut amb: Vec<Vec<i64>> = orb
            .iter()
            .map(|w| b2.to_ambient(w).iter().map(|x| x.to_integer().try_into().unwrap()).collect())
            .collect();
        amb.sort();
        assert_eq!(amb, vec![vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn reflection_closure() {
        let rs = RootSystem::parse("F4").unwrap();
        let orb = weyl_orbit(&rs, &[1, 0, 0, 0]);
        assert_eq!(orb.len(), 24);
        let set: HashSet<Weight> = orb.iter().cloned().collect();
        for w in &orb {
            for i in 0..4 {
                assert!(set.contains(&rs.reflect(w, i)));
            }
        }
    }

    #[test]
    fn dominant_signs() {
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(dominant_reflect(&a1, &[-1]), (vec![1], -1));
        let a2 = RootSystem::parse("A2").unwrap();
        assert_eq!(dominant_reflect(&a2, &[2, 1]), (vec![2, 1], 1));
        assert_eq!(dominant_reflect(&a2, &[0, 1]).1, 0);
        assert_eq!(dominant_reflect(&a2, &[-1, 2]), (vec![1, 1], -1));
        assert_eq!(dominant_reflect(&a2, &[2, -2]).1, 0);
    }

    #[test]
    fn dot_action() {
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(dot_dominant(&a1, &[-1], &[0]), None);
        assert_eq!(dot_dominant(&a1, &[-3], &[0]), Some((vec![1], -1)));
    }
}
