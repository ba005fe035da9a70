//! Exact linear algebra over `BigRational` and `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;
pub type Z = BigInt;

pub fn q(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

pub fn zv(v: &[i64]) -> Vec<Z> {
    v.iter().map(|&x| Z::from(x)).collect()
}

pub fn qv(v: &[Z]) -> Vec<Q> {
    v.iter().cloned().map(Q::from_integer).collect()
}

pub fn to_i64(v: &[Z]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.to_i64()).collect()
}

pub fn dot(a: &[Z], b: &[Z]) -> Z {
    a.iter().zip(b).fold(Z::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_q(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero(v: &[Z]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(mut v: Vec<Z>) -> Vec<Z> {
    let g = v.iter().fold(Z::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// Clears denominators and returns the primitive integer multiple (same direction).
pub fn primitive_q(v: &[Q]) -> Vec<Z> {
    let l = v.iter().fold(Z::one(), |l, x| l.lcm(x.denom()));
    primitive(v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect())
}

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub fn rank_z(rows: &[Vec<Z>]) -> usize {
    let m: Vec<Vec<Q>> = rows.iter().map(|r| qv(r)).collect();
    rank(&m)
}

/// Basis of `{x : rows * x = 0}` in `ncols` unknowns.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

/// Integer basis (primitive vectors) of the rational nullspace; not necessarily a lattice basis.
pub fn nullspace_z(rows: &[Vec<Z>], ncols: usize) -> Vec<Vec<Z>> {
    let m: Vec<Vec<Q>> = rows.iter().map(|r| qv(r)).collect();
    nullspace(&m, ncols).iter().map(|v| primitive_q(v)).collect()
}

/// Some solution of `a * x = b`, if consistent.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = m[i][n].clone();
    }
    Some(x)
}

pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Fraction-free determinant of a square integer matrix.
pub fn det(a: &[Vec<Z>]) -> Z {
    let n = a.len();
    if n == 0 {
        return Z::one();
    }
    let mut m = a.to_vec();
    let mut sign = Z::one();
    let mut prev = Z::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return Z::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Hermite normal form of the lattice spanned by the rows of `gens`: nonzero rows, echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
pub fn hnf(gens: &[Vec<Z>]) -> Vec<Vec<Z>> {
    let Some(n) = gens.first().map(|r| r.len()) else {
        return vec![];
    };
    let mut m: Vec<Vec<Z>> = gens.iter().filter(|r| !is_zero(r)).cloned().collect();
    let mut cur = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        loop {
            let nz: Vec<usize> = (cur..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&p) = nz.first() {
                    m.swap(cur, p);
                    if m[cur][c].is_negative() {
                        for x in m[cur].iter_mut() {
                            *x = -x.clone();
                        }
                    }
                    pivots.push((cur, c));
                    cur += 1;
                }
                break;
            }
            // reduce all by the smallest absolute entry
            let &p = nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            for &i in &nz {
                if i != p {
                    let f = m[i][c].div_floor(&m[p][c]);
                    for j in 0..n {
                        let t = &f * &m[p][j];
                        m[i][j] -= t;
                    }
                }
            }
        }
        if cur == m.len() {
            break;
        }
    }
    m.truncate(cur);
    for &(r, c) in &pivots {
        for i in 0..r {
            let f = m[i][c].div_floor(&m[r][c]);
            if !f.is_zero() {
                for j in 0..n {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    m
}

/// Integer coordinates of `v` in the HNF basis `basis`, if `v` lies in the lattice.
pub fn lattice_coords(basis: &[Vec<Z>], v: &[Z]) -> Option<Vec<Z>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for row in basis {
        let c = row.iter().position(|x| !x.is_zero())?;
        let (k, r) = rest[c].div_rem(&row[c]);
        if !r.is_zero() {
            return None;
        }
        for j in 0..rest.len() {
            let t = &k * &row[j];
            rest[j] -= t;
        }
        coords.push(k);
    }
    if is_zero(&rest) {
        Some(coords)
    } else {
        None
    }
}

/// Lattice basis of `{x in Z^n : a x = 0}`.
pub fn integer_kernel(a: &[Vec<Z>], n: usize) -> Vec<Vec<Z>> {
    // column operations on a, mirrored on the identity
    let mut m: Vec<Vec<Z>> = a.to_vec();
    let mut u: Vec<Vec<Z>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Z::one() } else { Z::zero() }).collect())
        .collect();
    let col_op = |m: &mut Vec<Vec<Z>>, p: usize, j: usize, s: &Z, t: &Z, a: &Z, b: &Z| {
        for row in m.iter_mut() {
            let xp = row[p].clone();
            let xj = row[j].clone();
            row[p] = s * &xp + t * &xj;
            row[j] = a * &xj - b * &xp;
        }
    };
    let mut p = 0;
    for i in 0..m.len() {
        if p == n {
            break;
        }
        for j in p + 1..n {
            if m[i][j].is_zero() {
                continue;
            }
            let x = m[i][p].clone();
            let y = m[i][j].clone();
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let a = &x / &g;
            let b = &y / &g;
            col_op(&mut m, p, j, &s, &t, &a, &b);
            col_op(&mut u, p, j, &s, &t, &a, &b);
        }
        if !m[i][p].is_zero() {
            p += 1;
        }
    }
    (p..n).map(|c| u.iter().map(|row| row[c].clone()).collect()).collect()
}

/// Lattice basis of `lattice ∩ span(dirs)` where `lattice` is given by an HNF basis.
pub fn intersect_with_span(lattice: &[Vec<Z>], dirs: &[Vec<Z>]) -> Vec<Vec<Z>> {
    let n = match lattice.first() {
        Some(r) => r.len(),
        None => return vec![],
    };
    if dirs.is_empty() {
        return vec![];
    }
    // normals of span(dirs)
    let normals = nullspace_z(dirs, n);
    // coefficients c with (sum c_k b_k) . normal = 0
    let conds: Vec<Vec<Z>> = normals
        .iter()
        .map(|nv| lattice.iter().map(|b| dot(b, nv)).collect())
        .collect();
    let ker = integer_kernel(&conds, lattice.len());
    let pts: Vec<Vec<Z>> = ker
        .iter()
        .map(|c| {
            let mut v = vec![Z::zero(); n];
            for (ck, b) in c.iter().zip(lattice) {
                for j in 0..n {
                    v[j] += ck * &b[j];
                }
            }
            v
        })
        .collect();
    hnf(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm(rows: &[&[i64]]) -> Vec<Vec<Z>> {
        rows.iter().map(|r| zv(r)).collect()
    }

    #[test]
    fn determinant_matches_cofactor() {
        assert_eq!(det(&zm(&[&[2, -1], &[-2, 2]])), Z::from(2));
        assert_eq!(det(&zm(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])), Z::from(-2));
        assert_eq!(det(&zm(&[&[1, 2], &[2, 4]])), Z::zero());
    }

    #[test]
    fn hnf_and_membership() {
        let b = hnf(&zm(&[&[2, 0], &[0, 2], &[1, 1]]));
        assert_eq!(b.len(), 2);
        assert!(lattice_coords(&b, &zv(&[1, 1])).is_some());
        assert!(lattice_coords(&b, &zv(&[1, 0])).is_none());
        assert!(lattice_coords(&b, &zv(&[3, 1])).is_some());
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // x + 2y + 3z = 0
        let k = integer_kernel(&zm(&[&[1, 2, 3]]), 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dot(v, &zv(&[1, 2, 3])).is_zero());
        }
        // index of span: determinant of the 2x2 minors has gcd 1
        let h = hnf(&k);
        assert!(lattice_coords(&h, &zv(&[1, 1, -1])).is_some());
    }

    #[test]
    fn span_intersection() {
        let lat = hnf(&zm(&[&[1, 0], &[0, 1]]));
        let b = intersect_with_span(&lat, &zm(&[&[2, 4]]));
        assert_eq!(b, zm(&[&[1, 2]]));
    }
}
