//! Root data in an explicit ambient realization.
//!
//! Weights are integer vectors in the basis of fundamental weights (Dynkin labels), with
//! one extra coordinate per central torus direction appended. The ambient realization is
//! kept for the inner product and for printing in ε-coordinates.
//!
//! Numbering puts the minimal representation at ω₁: Bourbaki for A-D and G2, reversed
//! Bourbaki for F4 (α₁, α₂ short), and for E_l a chain α₁..α_{l−1} with α_l attached to
//! α_{l−3}.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::{One, Zero};

use super::types::{LieType, Series, SimpleFactor};
use crate::error::{Error, Result};
use crate::geom::linalg::{self, q, Q};

pub type Weight = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients in the simple roots.
    pub coeffs: Vec<i64>,
    /// Dynkin labels (length = full rank, torus part zero).
    pub omega: Weight,
    /// Coefficients of the coroot in the simple coroots.
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ty: LieType,
    /// Semisimple rank.
    pub rank: usize,
    /// Rank including the central torus; length of every weight vector.
    pub dim: usize,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vec<Q>>,
    pub simple_coroots: Vec<Vec<Q>>,
    /// Rows ω_1..ω_r, then the torus characters t_1..t_k.
    pub fundamental_weights: Vec<Vec<Q>>,
    /// Inner product in the weight basis.
    pub gram: Vec<Vec<Q>>,
    /// `gram_scale * gram`, integral.
    pub gram_z: Vec<Vec<i64>>,
    pub gram_scale: i64,
    pub positive_roots: Vec<Root>,
    /// Factor index of each simple root.
    pub factor_of: Vec<usize>,
    pub root_len2: Vec<Q>,
}

fn e(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

fn comb(n: usize, terms: &[(usize, Q)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

fn half(n: i64) -> Q {
    Q::new(n.into(), 2.into())
}

/// Ambient simple roots of a simple factor in the numbering described above.
fn factor_roots(f: &SimpleFactor) -> (usize, Vec<Vec<Q>>) {
    let l = f.rank;
    let eps_diff = |n: usize, i: usize| comb(n, &[(i, q(1)), (i + 1, q(-1))]);
    match f.series {
        Series::A => (l + 1, (0..l).map(|i| eps_diff(l + 1, i)).collect()),
        Series::B | Series::C | Series::D => {
            let mut r: Vec<Vec<Q>> = (0..l - 1).map(|i| eps_diff(l, i)).collect();
            r.push(match f.series {
                Series::B => e(l, l - 1),
                Series::C => comb(l, &[(l - 1, q(2))]),
                _ => comb(l, &[(l - 2, q(1)), (l - 1, q(1))]),
            });
            (l, r)
        }
        Series::G => (3, vec![comb(3, &[(0, q(1)), (1, q(-1))]), comb(3, &[(0, q(-2)), (1, q(1)), (2, q(1))])]),
        Series::F => {
            let b = [
                comb(4, &[(1, q(1)), (2, q(-1))]),
                comb(4, &[(2, q(1)), (3, q(-1))]),
                e(4, 3),
                comb(4, &[(0, half(1)), (1, half(-1)), (2, half(-1)), (3, half(-1))]),
            ];
            (4, b.iter().rev().cloned().collect())
        }
        Series::E => {
            let mut b = vec![Vec::new(); 9];
            let mut a1 = vec![half(-1); 8];
            a1[0] = half(1);
            a1[7] = half(1);
            b[1] = a1;
            b[2] = comb(8, &[(0, q(1)), (1, q(1))]);
            for k in 3..=8 {
                b[k] = comb(8, &[(k - 2, q(1)), (k - 3, q(-1))]);
            }
            let order: &[usize] = match l {
                6 => &[1, 3, 4, 5, 6, 2],
                7 => &[7, 6, 5, 4, 3, 1, 2],
                _ => &[8, 7, 6, 5, 4, 3, 1, 2],
            };
            (8, order.iter().map(|&k| b[k].clone()).collect())
        }
    }
}

impl RootSystem {
    pub fn new(ty: &LieType) -> Result<Self> {
        let rank = ty.semisimple_rank();
        let dim = ty.rank();
        let mut blocks = Vec::new();
        let mut ambient_dim = 0;
        for f in &ty.factors {
            let (n, roots) = factor_roots(f);
            blocks.push((ambient_dim, n, roots));
            ambient_dim += n;
        }
        ambient_dim += ty.torus_rank;
        let mut simple_roots = Vec::new();
        let mut factor_of = Vec::new();
        for (fi, (off, _, roots)) in blocks.iter().enumerate() {
            for r in roots {
                let mut v = vec![Q::zero(); ambient_dim];
                for (j, x) in r.iter().enumerate() {
                    v[off + j] = x.clone();
                }
                simple_roots.push(v);
                factor_of.push(fi);
            }
        }
        let root_len2: Vec<Q> = simple_roots.iter().map(|a| linalg::dot_q(a, a)).collect();
        let simple_coroots: Vec<Vec<Q>> = simple_roots
            .iter()
            .zip(&root_len2)
            .map(|(a, l2)| a.iter().map(|x| x * q(2) / l2).collect())
            .collect();
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let v = linalg::dot_q(&simple_roots[j], &simple_coroots[i]);
                if !v.is_integer() {
                    return Err(Error::Internal("non-integral Cartan entry".into()));
                }
                cartan[i][j] = linalg::to_i64(&[v.to_integer()]).unwrap()[0];
            }
        }
        // ω_i = Σ_j M_ij α_j with M = (Aᵀ)⁻¹
        let at: Vec<Vec<Q>> = (0..rank).map(|i| (0..rank).map(|j| q(cartan[j][i])).collect()).collect();
        let m = if rank > 0 { linalg::inverse(&at).ok_or_else(|| Error::Internal("singular Cartan".into()))? } else { vec![] };
        let mut fundamental_weights = Vec::new();
        for row in m.iter().take(rank) {
            let mut w = vec![Q::zero(); ambient_dim];
            for (j, c) in row.iter().enumerate() {
                for k in 0..ambient_dim {
                    w[k] += c * &simple_roots[j][k];
                }
            }
            fundamental_weights.push(w);
        }
        for t in 0..ty.torus_rank {
            fundamental_weights.push(e(ambient_dim, ambient_dim - ty.torus_rank + t));
        }
        let gram: Vec<Vec<Q>> = fundamental_weights
            .iter()
            .map(|a| fundamental_weights.iter().map(|b| linalg::dot_q(a, b)).collect())
            .collect();
        let mut scale = num_bigint::BigInt::one();
        for row in &gram {
            for x in row {
                scale = num_integer::Integer::lcm(&scale, x.denom());
            }
        }
        let gram_scale: i64 = linalg::to_i64(&[scale.clone()]).unwrap()[0];
        let gram_z = gram
            .iter()
            .map(|row| row.iter().map(|x| linalg::to_i64(&[(x * Q::from_integer(scale.clone())).to_integer()]).unwrap()[0]).collect())
            .collect();
        let mut rs = RootSystem {
            ty: ty.clone(),
            rank,
            dim,
            cartan,
            ambient_dim,
            simple_roots,
            simple_coroots,
            fundamental_weights,
            gram,
            gram_z,
            gram_scale,
            positive_roots: Vec::new(),
            factor_of,
            root_len2,
        };
        rs.positive_roots = rs.close_roots();
        Ok(rs)
    }

    pub fn parse(s: &str) -> Result<Self> {
        RootSystem::new(&LieType::parse(s)?)
    }

    fn close_roots(&self) -> Vec<Root> {
        let r = self.rank;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let mut c = vec![0; r];
            c[i] = 1;
            seen.insert(c.clone());
            queue.push_back(c);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..r {
                let p: i64 = (0..r).map(|j| b[j] * self.cartan[i][j]).sum();
                if p == 0 {
                    continue;
                }
                let mut nb = b.clone();
                nb[i] -= p;
                if nb.iter().all(|&x| x >= 0) && nb.iter().any(|&x| x > 0) && seen.insert(nb.clone()) {
                    queue.push_back(nb);
                }
            }
        }
        let mut roots: Vec<Root> = seen
            .into_iter()
            .map(|coeffs| {
                let mut omega = vec![0i64; self.dim];
                for (j, c) in coeffs.iter().enumerate() {
                    for i in 0..r {
                        omega[i] += c * self.cartan[i][j];
                    }
                }
                let amb = self.root_ambient(&coeffs);
                let l2 = linalg::dot_q(&amb, &amb);
                let coroot = coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let v = q(*c) * &self.root_len2[i] / &l2;
                        linalg::to_i64(&[v.to_integer()]).unwrap()[0]
                    })
                    .collect();
                Root { coeffs, omega, coroot }
            })
            .collect();
        roots.sort_by(|a, b| (a.height(), &b.coeffs).cmp(&(b.height(), &a.coeffs)));
        roots
    }

    fn root_ambient(&self, coeffs: &[i64]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.ambient_dim];
        for (j, c) in coeffs.iter().enumerate() {
            for k in 0..self.ambient_dim {
                v[k] += q(*c) * &self.simple_roots[j][k];
            }
        }
        v
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    /// α_j in Dynkin labels.
    pub fn alpha(&self, j: usize) -> Weight {
        let mut v = vec![0; self.dim];
        for i in 0..self.rank {
            v[i] = self.cartan[i][j];
        }
        v
    }

    /// Weight from simple-root coefficients.
    pub fn from_root_coeffs(&self, c: &[i64]) -> Weight {
        let mut v = vec![0; self.dim];
        for (j, cj) in c.iter().enumerate() {
            for i in 0..self.rank {
                v[i] += cj * self.cartan[i][j];
            }
        }
        v
    }

    /// Simple-root coefficients of a weight in the root lattice span (rational).
    pub fn root_coeffs(&self, w: &[i64]) -> Option<Vec<Q>> {
        if w[self.rank..].iter().any(|&x| x != 0) {
            return None;
        }
        let a: Vec<Vec<Q>> = (0..self.rank).map(|i| (0..self.rank).map(|j| q(self.cartan[i][j])).collect()).collect();
        let b: Vec<Q> = w[..self.rank].iter().map(|&x| q(x)).collect();
        linalg::solve(&a, &b)
    }

    pub fn rho(&self) -> Weight {
        let mut v = vec![1; self.dim];
        for x in v.iter_mut().skip(self.rank) {
            *x = 0;
        }
        v
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        w[..self.rank].iter().all(|&x| x >= 0)
    }

    pub fn pair(&self, w: &[i64], root: &Root) -> i64 {
        root.coroot.iter().zip(w).map(|(c, x)| c * x).sum()
    }

    /// Scaled inner product: `gram_scale * (a, b)`.
    pub fn inner_z(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.dim {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.dim {
                s += a[i] * self.gram_z[i][j] * b[j];
            }
        }
        s
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        Q::new(self.inner_z(a, b).into(), self.gram_scale.into())
    }

    pub fn reflect(&self, w: &[i64], i: usize) -> Weight {
        let c = w[i];
        let mut v = w.to_vec();
        for k in 0..self.rank {
            v[k] -= c * self.cartan[k][i];
        }
        v
    }

    pub fn highest_root(&self) -> Result<Weight> {
        if self.ty.factors.len() != 1 {
            return Err(Error::Unsupported("highest root needs a single simple factor".into()));
        }
        Ok(self.positive_roots.last().unwrap().omega.clone())
    }

    pub fn to_ambient(&self, w: &[i64]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.ambient_dim];
        for (i, c) in w.iter().enumerate() {
            if *c != 0 {
                for k in 0..self.ambient_dim {
                    v[k] += q(*c) * &self.fundamental_weights[i][k];
                }
            }
        }
        v
    }

    /// Inverse of `to_ambient` on integral weights lying in the span.
    pub fn from_ambient(&self, v: &[Q]) -> Option<Weight> {
        let mut w: Vec<Q> = self.simple_coroots.iter().map(|c| linalg::dot_q(c, v)).collect();
        for t in 0..self.ty.torus_rank {
            w.push(v[self.ambient_dim - self.ty.torus_rank + t].clone());
        }
        if w.iter().any(|x| !x.is_integer()) {
            return None;
        }
        let w: Weight = w.iter().map(|x| linalg::to_i64(&[x.to_integer()]).unwrap()[0]).collect();
        (self.to_ambient(&w) == v).then_some(w)
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, w: &[i64]) -> num_bigint::BigInt {
        let rho = self.rho();
        let mut num = Q::one();
        for r in &self.positive_roots {
            let a = self.pair(w, r) + self.pair(&rho, r);
            num *= Q::new(a.into(), self.pair(&rho, r).into());
        }
        num.to_integer()
    }

    /// Index sets of the simple roots per factor.
    pub fn factor_indices(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.ty.factors.len()];
        for (i, f) in self.factor_of.iter().enumerate() {
            out[*f].push(i);
        }
        out
    }

    /// Dynkin diagram neighbours.
    pub fn neighbours(&self, i: usize) -> BTreeSet<usize> {
        (0..self.rank).filter(|&j| j != i && self.cartan[i][j] != 0).collect()
    }

    /// Parses "w1+2*w3", "hr", "0", "t1-w2".
    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        let trimmed = s.trim();
        if trimmed.eq_ignore_ascii_case("hr") {
            return self.highest_root();
        }
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let chars: Vec<char> = s.chars().collect();
        let mut w = vec![0i64; self.dim];
        let mut i = 0;
        let mut first = true;
        let skip = |i: &mut usize| {
            while *i < chars.len() && chars[*i].is_whitespace() {
                *i += 1;
            }
        };
        let num = |i: &mut usize| -> Option<i64> {
            let st = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[st..*i].iter().collect::<String>().parse().ok()
        };
        loop {
            skip(&mut i);
            if i >= chars.len() {
                if first {
                    return Err(err(i, "empty weight"));
                }
                break;
            }
            let mut sign = 1;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
                skip(&mut i);
            } else if !first {
                return Err(err(i, "expected '+' or '-'"));
            }
            first = false;
            let mut coef = 1;
            if i < chars.len() && chars[i].is_ascii_digit() {
                coef = num(&mut i).ok_or_else(|| err(i, "bad number"))?;
                skip(&mut i);
                if i < chars.len() && chars[i] == '*' {
                    i += 1;
                    skip(&mut i);
                } else if i >= chars.len() || chars[i] == '+' || chars[i] == '-' {
                    if coef != 0 {
                        return Err(err(i, "bare nonzero constant"));
                    }
                    continue;
                }
            }
            let at = i;
            let kind = chars.get(i).copied().ok_or_else(|| err(i, "expected w<k> or t<k>"))?;
            i += 1;
            let k = num(&mut i).ok_or_else(|| err(i, "expected index"))? as usize;
            let idx = match kind {
                'w' | 'W' if k >= 1 && k <= self.rank => k - 1,
                't' | 'T' if k >= 1 && k <= self.ty.torus_rank => self.rank + k - 1,
                'w' | 'W' | 't' | 'T' => return Err(err(at, "index out of range")),
                _ => return Err(err(at, "expected w<k> or t<k>")),
            };
            w[idx] += sign * coef;
        }
        Ok(w)
    }

    /// Renders Dynkin labels as "w1+2*w3".
    pub fn format_weight(&self, w: &[i64]) -> String {
        let mut s = String::new();
        for (i, &c) in w.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = if i < self.rank { format!("w{}", i + 1) } else { format!("t{}", i - self.rank + 1) };
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&format!("{}*", c.abs()));
            }
            s.push_str(&name);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_basics() {
        let rs = RootSystem::parse("A1").unwrap();
        assert_eq!(rs.cartan, vec![vec![2]]);
        let a = &rs.simple_roots[0];
        let w = &rs.fundamental_weights[0];
        assert_eq!(w.iter().map(|x| x * q(2)).collect::<Vec<_>>(), *a);
        assert_eq!(rs.num_roots(), 2);
    }

    #[test]
    fn cartan_matrices() {
        assert_eq!(RootSystem::parse("B2").unwrap().cartan, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(RootSystem::parse("C2").unwrap().cartan, vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(RootSystem::parse("G2").unwrap().cartan, vec![vec![2, -3], vec![-1, 2]]);
        // α₁, α₂ short
        let f4 = RootSystem::parse("F4").unwrap();
        assert_eq!(f4.cartan[1][2], -2);
        assert_eq!(f4.cartan[2][1], -1);
        assert!(f4.root_len2[0] < f4.root_len2[3]);
    }

    #[test]
    fn root_counts() {
        for s in ["A1", "A3", "B2", "B3", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8", "B2xA1+T2"] {
            let rs = RootSystem::parse(s).unwrap();
            let expected: usize = rs.ty.factors.iter().map(|f| f.num_positive_roots()).sum();
            assert_eq!(rs.positive_roots.len(), expected, "{s}");
        }
        assert_eq!(RootSystem::parse("G2").unwrap().num_roots(), 12);
    }

    #[test]
    fn pairing_duality() {
        for s in ["A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C2", "C3", "C4", "C5", "C6", "D3", "D4", "D5", "D6", "G2", "F4", "E6"] {
            let rs = RootSystem::parse(s).unwrap();
            for i in 0..rs.rank {
                for j in 0..rs.rank {
                    let p = linalg::dot_q(&rs.fundamental_weights[i], &rs.simple_coroots[j]);
                    assert_eq!(p, if i == j { q(1) } else { q(0) }, "{s} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn gram_is_reflection_invariant() {
        for s in ["B3", "G2", "F4", "A2xC2+T1"] {
            let rs = RootSystem::parse(s).unwrap();
            let basis: Vec<Weight> = (0..rs.dim).map(|i| (0..rs.dim).map(|j| (i == j) as i64).collect()).collect();
            for i in 0..rs.rank {
                for a in &basis {
                    for b in &basis {
                        assert_eq!(rs.inner_z(a, b), rs.inner_z(&rs.reflect(a, i), &rs.reflect(b, i)));
                    }
                }
            }
        }
    }

    #[test]
    fn minimal_modules_at_omega_one() {
        let dims = [("A3", 4), ("B3", 7), ("C3", 6), ("D4", 8), ("G2", 7), ("F4", 26), ("E6", 27), ("E7", 56), ("E8", 248)];
        for (s, d) in dims {
            let rs = RootSystem::parse(s).unwrap();
            let mut w = vec![0; rs.dim];
            w[0] = 1;
            assert_eq!(rs.weyl_dimension(&w), d.into(), "{s}");
        }
        let f4 = RootSystem::parse("F4").unwrap();
        assert_eq!(f4.weyl_dimension(&[0, 0, 0, 1]), 52.into());
        assert_eq!(f4.highest_root().unwrap(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn weight_parsing() {
        let rs = RootSystem::parse("B3xA1+T1").unwrap();
        assert_eq!(rs.parse_weight("w1+2*w3").unwrap(), vec![1, 0, 2, 0, 0]);
        assert_eq!(rs.parse_weight(" t1 - w4 ").unwrap(), vec![0, 0, 0, -1, 1]);
        assert_eq!(rs.parse_weight("0").unwrap(), vec![0; 5]);
        assert!(rs.parse_weight("w6").is_err());
        assert!(rs.parse_weight("w1 w2").is_err());
        assert_eq!(rs.format_weight(&[1, 0, 2, 0, -1]), "w1+2*w3-t1");
        let a3 = RootSystem::parse("A3").unwrap();
        assert_eq!(a3.parse_weight("hr").unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn ambient_round_trip() {
        let rs = RootSystem::parse("B3").unwrap();
        let w = vec![0, 0, 1];
        let amb = rs.to_ambient(&w);
        assert_eq!(amb, vec![half(1), half(1), half(1)]);
        assert_eq!(rs.from_ambient(&amb), Some(w));
    }
}
