//! Golden rows of the normality/smoothness classification and the comparison against computed reports.
//!
//! The table writes L-weights in its own coordinates: GL factors through π_i = ε_1+…+ε_i,
//! central tori through ε', semisimple factors through fundamental weights. Computed weights
//! carry Dynkin labels on Π_L and root coefficients outside Π_L. The two are compared up to a
//! diagram automorphism of each component and a linear change of central coordinates, which is
//! solved for from the listed weights.

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{analyze, yes_no, AnalysisReport, AnalyzeOptions};
use crate::compact::Model;
use crate::criteria::{semigroup_membership, Verdict, Witness};
use crate::error::{Error, Result};
use crate::geom::linalg::{self, q, zv, Q};
use crate::lie::levi::{Component, LeviDatum};
use crate::lie::{RootSystem, Series, Weight};

const GOLDEN: &str = include_str!("../../data/classification.toml");

pub const SCOPES: [&str; 4] = ["classical-small", "exceptional-fg", "stretch-e6", "heavy"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKind {
    GL,
    SL,
    SO,
    Sp,
    S,
    C,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub kind: FactorKind,
    #[serde(default)]
    pub n: usize,
    pub comp: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub group: String,
    pub module: String,
    pub scope: String,
    pub source: String,
    pub l_column: String,
    pub levi: Option<String>,
    #[serde(default)]
    pub factors: Vec<FactorSpec>,
    #[serde(default)]
    pub l_weights: Vec<String>,
    #[serde(default)]
    pub complete: bool,
    pub normal: bool,
    pub smooth: bool,
    pub witness: Option<String>,
    pub witness_multiple: Option<usize>,
}

#[derive(Deserialize)]
struct GoldenFile {
    version: u32,
    row: Vec<GoldenRow>,
}

pub fn golden_rows() -> Result<Vec<GoldenRow>> {
    let f: GoldenFile = toml::from_str(GOLDEN).map_err(|e| Error::Internal(format!("golden data: {e}")))?;
    if f.version != 1 {
        return Err(Error::Internal(format!("golden data version {}", f.version)));
    }
    Ok(f.row)
}

pub fn is_heavy(scope: &str) -> bool {
    scope == "stretch-e6" || scope == "heavy"
}

pub fn rows_in_scope(scope: &str) -> Result<Vec<GoldenRow>> {
    if scope != "all" && !SCOPES.contains(&scope) {
        return Err(Error::Domain(format!("unknown scope {scope}; expected one of {} or all", SCOPES.join(", "))));
    }
    Ok(golden_rows()?.into_iter().filter(|r| scope == "all" || r.scope == scope).collect())
}

/// One summand c·x of a table weight; x is p (π), w (ω) or e (ε), primes give the factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coef: i64,
    pub symbol: char,
    pub factor: usize,
    pub index: usize,
}

/// Parses "e'+w''3", "2p'1", "3p'1-p'2".
pub fn parse_table_weight(s: &str) -> Result<Vec<Term>> {
    let b: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.into() };
    let digits = |i: &mut usize| {
        let st = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        b[st..*i].iter().collect::<String>()
    };
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let mut sign = 1;
        if b[i] == '+' || b[i] == '-' {
            sign = if b[i] == '-' { -1 } else { 1 };
            i += 1;
        } else if i > 0 {
            return Err(err(i, "expected + or -"));
        }
        let c = digits(&mut i);
        let coef: i64 = if c.is_empty() { 1 } else { c.parse().map_err(|_| err(i, "bad coefficient"))? };
        if b.get(i) == Some(&'*') {
            i += 1;
        }
        let symbol = *b.get(i).ok_or_else(|| err(i, "expected p, w or e"))?;
        if !matches!(symbol, 'p' | 'w' | 'e') {
            return Err(err(i, "expected p, w or e"));
        }
        i += 1;
        let ps = i;
        while b.get(i) == Some(&'\'') {
            i += 1;
        }
        if i == ps {
            return Err(err(i, "missing factor primes"));
        }
        let factor = i - ps - 1;
        let d = digits(&mut i);
        let index = match (symbol, d.is_empty()) {
            ('e', true) => 0,
            ('e', false) => return Err(err(i, "e takes no index")),
            (_, true) => return Err(err(i, "missing index")),
            _ => d.parse().ok().filter(|&k: &usize| k >= 1).ok_or_else(|| err(i, "bad index"))?,
        };
        out.push(Term { coef: sign * coef, symbol, factor, index });
    }
    if out.is_empty() {
        return Err(err(0, "empty weight"));
    }
    Ok(out)
}

/// Diagram automorphisms of a component, as permutations of chain positions.
fn automorphisms(c: &Component) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..c.rank).collect();
    let mut out = vec![id.clone()];
    match c.series {
        Series::A if c.rank >= 2 => out.push(id.iter().rev().copied().collect()),
        Series::D if c.rank == 4 => {
            for p in [[0, 3, 2], [2, 0, 3], [2, 3, 0], [3, 0, 2], [3, 2, 0]] {
                out.push(vec![p[0], 1, p[1], p[2]]);
            }
        }
        Series::D if c.rank > 4 => {
            let mut s = id.clone();
            s.swap(c.rank - 2, c.rank - 1);
            out.push(s);
        }
        Series::E if c.rank == 6 => out.push(vec![5, 1, 4, 3, 2, 0]),
        _ => {}
    }
    out
}

type Entry = (Vec<i64>, Vec<Q>);

/// Table weight as (labels on Π_L indexed by simple root, central coordinates).
fn embed(rs: &RootSystem, levi: &LeviDatum, factors: &[FactorSpec], perms: &[Vec<usize>], terms: &[Term]) -> Result<Entry> {
    let central: Vec<Option<usize>> = {
        let mut k = 0;
        factors
            .iter()
            .map(|f| {
                matches!(f.kind, FactorKind::GL | FactorKind::C).then(|| {
                    k += 1;
                    k - 1
                })
            })
            .collect()
    };
    let m = central.iter().flatten().count();
    let mut labels = vec![0i64; rs.rank];
    let mut t = vec![Q::zero(); m];
    let bad = |msg: String| Error::Domain(msg);
    for term in terms {
        let f = factors.get(term.factor).ok_or_else(|| bad(format!("no factor {}", term.factor + 1)))?;
        let mut put = |pos: usize, x: i64| -> Result<()> {
            let c = f.comp.ok_or_else(|| bad("factor has no semisimple part".into()))?;
            let comp = levi.components.get(c).ok_or_else(|| bad(format!("no component {c}")))?;
            if pos >= comp.rank {
                return Err(bad(format!("index {} beyond rank {}", pos + 1, comp.rank)));
            }
            labels[comp.chain[perms[c][pos]]] += x;
            Ok(())
        };
        let i = term.index;
        match (term.symbol, f.kind) {
            ('e', FactorKind::C) => t[central[term.factor].unwrap()] += q(term.coef),
            ('e', _) => return Err(bad("e on a non-central factor".into())),
            ('p', FactorKind::GL) => {
                if i > f.n {
                    return Err(bad(format!("p{i} on GL_{}", f.n)));
                }
                if i < f.n {
                    put(i - 1, term.coef)?;
                }
                t[central[term.factor].unwrap()] += q(term.coef * i as i64);
            }
            ('p', FactorKind::SO) => {
                let r = (f.n - 1) / 2;
                put(i - 1, if i == r { 2 * term.coef } else { term.coef })?;
            }
            ('p', FactorKind::SL | FactorKind::Sp) | ('w', FactorKind::SL | FactorKind::Sp | FactorKind::S | FactorKind::SO) => put(i - 1, term.coef)?,
            (s, k) => return Err(bad(format!("{s} on a {k:?} factor"))),
        }
    }
    Ok((labels, t))
}

fn our_entry(rs: &RootSystem, levi: &LeviDatum, w: &[i64]) -> Option<Entry> {
    let a = rs.root_coeffs(w)?;
    let labels = (0..rs.rank).map(|j| if levi.contains(j) { w[j] } else { 0 }).collect();
    let c = (0..rs.rank).filter(|&i| !levi.contains(i)).map(|i| a[i].clone()).collect();
    Some((labels, c))
}

/// A solution of a·x = b with free variables set to zero, and the rank of a.
fn solve_any(a: &[Vec<Q>], b: &[Q], ncols: usize) -> Option<(Vec<Q>, usize)> {
    let mut m: Vec<Vec<Q>> = a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain(std::iter::once(x.clone())).collect()).collect();
    let piv = linalg::rref(&mut m);
    if piv.contains(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (row, &c) in piv.iter().enumerate() {
        x[c] = m[row][ncols].clone() / m[row][c].clone();
    }
    Some((x, piv.len()))
}

/// Central map M with M·c = t for every pair, one row per table coordinate.
fn central_map(pairs: &[(&Vec<Q>, &Vec<Q>)], z: usize, m: usize) -> Option<(Vec<Vec<Q>>, bool)> {
    let a: Vec<Vec<Q>> = pairs.iter().map(|(c, _)| (*c).clone()).collect();
    let mut rows = Vec::new();
    let mut full = true;
    for r in 0..m {
        let b: Vec<Q> = pairs.iter().map(|(_, t)| t[r].clone()).collect();
        let (x, rank) = solve_any(&a, &b, z)?;
        full &= rank == z;
        rows.push(x);
    }
    Some((rows, full))
}

/// Assignments of table entries to distinct computed entries with equal labels and a common central map.
fn matchings(table: &[Entry], ours: &[Entry], complete: bool, z: usize, m: usize) -> Vec<Vec<usize>> {
    if complete && table.len() != ours.len() {
        return vec![];
    }
    fn go(k: usize, table: &[Entry], ours: &[Entry], z: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if out.len() >= 64 {
            return;
        }
        if k == table.len() {
            out.push(cur.clone());
            return;
        }
        for (j, o) in ours.iter().enumerate() {
            if cur.contains(&j) || o.0 != table[k].0 {
                continue;
            }
            cur.push(j);
            let pairs: Vec<(&Vec<Q>, &Vec<Q>)> = cur.iter().enumerate().map(|(i, &j)| (&ours[j].1, &table[i].1)).collect();
            if central_map(&pairs, z, m).is_some() {
                go(k + 1, table, ours, z, m, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, table, ours, z, m, &mut vec![], &mut out);
    out
}

/// Weight ν with Dynkin labels `labels` on Π_L and root coefficients `c` outside Π_L.
fn from_levi_coords(rs: &RootSystem, levi: &LeviDatum, labels: &[i64], c: &[Q]) -> Option<Weight> {
    let pl = &levi.simple_root_indices;
    let outside: Vec<usize> = (0..rs.rank).filter(|i| !levi.contains(*i)).collect();
    let mut a = vec![Q::zero(); rs.rank];
    for (i, x) in outside.iter().zip(c) {
        a[*i] = x.clone();
    }
    let sys: Vec<Vec<Q>> = pl.iter().map(|&j| pl.iter().map(|&k| q(rs.cartan[j][k])).collect()).collect();
    let rhs: Vec<Q> = pl.iter().map(|&j| q(labels[j]) - outside.iter().map(|&i| q(rs.cartan[j][i]) * &a[i]).sum::<Q>()).collect();
    if !pl.is_empty() {
        let sol = linalg::solve(&sys, &rhs)?;
        for (j, x) in pl.iter().zip(sol) {
            a[*j] = x;
        }
    }
    let mut w = Vec::with_capacity(rs.dim);
    for j in 0..rs.rank {
        let v: Q = (0..rs.rank).map(|k| q(rs.cartan[j][k]) * &a[k]).sum();
        if !v.is_integer() {
            return None;
        }
        w.push(i64::try_from(v.to_integer()).ok()?);
    }
    w.resize(rs.dim, 0);
    Some(w)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListComparison {
    pub matched: bool,
    /// The table's witness, read in computed coordinates, with the outcome of its check.
    pub witness: Option<(Weight, bool)>,
}

/// Compares the listed L-weights, and the witness if the row has one, under every admissible convention.
pub fn compare_l_weights(model: &Model, row: &GoldenRow, l0: &[i64]) -> Result<ListComparison> {
    let rs = &model.rs;
    let slice = model.local_slice(l0)?;
    let levi = &slice.levi;
    let ours: Vec<Entry> = slice
        .branching
        .iter()
        .map(|(w, _)| our_entry(rs, levi, w).ok_or_else(|| Error::Unsupported("weights off the root lattice span".into())))
        .collect::<Result<BTreeSet<_>>>()?
        .into_iter()
        .collect();
    let z = levi.center_rank;
    let m = row.factors.iter().filter(|f| matches!(f.kind, FactorKind::GL | FactorKind::C)).count();
    let parsed: Vec<Vec<Term>> = row.l_weights.iter().map(|s| parse_table_weight(s)).collect::<Result<_>>()?;
    let wit = row.witness.as_deref().map(parse_table_weight).transpose()?;
    let k = row.witness_multiple.unwrap_or(2);

    let mut perm_sets: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for c in &levi.components {
        perm_sets = perm_sets
            .into_iter()
            .flat_map(|p| automorphisms(c).into_iter().map(move |a| {
                let mut p = p.clone();
                p.push(a);
                p
            }))
            .collect();
    }
    let mut out = ListComparison::default();
    for perms in &perm_sets {
        let table: Vec<Entry> = match parsed.iter().map(|t| embed(rs, levi, &row.factors, perms, t)).collect::<Result<BTreeSet<_>>>() {
            Ok(t) => t.into_iter().collect(),
            Err(_) => continue,
        };
        for assign in matchings(&table, &ours, row.complete, z, m) {
            out.matched = true;
            let Some(wt) = &wit else { return Ok(out) };
            let pairs: Vec<(&Vec<Q>, &Vec<Q>)> = assign.iter().enumerate().map(|(i, &j)| (&ours[j].1, &table[i].1)).collect();
            let Some((mm, true)) = central_map(&pairs, z, m) else { continue };
            let (labels, t) = embed(rs, levi, &row.factors, perms, wt)?;
            let Some((c, rank)) = solve_any(&mm, &t, z) else { continue };
            if rank != z {
                continue;
            }
            let Some(nu) = from_levi_coords(rs, levi, &labels, &c) else { continue };
            let ok = witness_holds(model, &slice.sigma, l0, &nu, k)?;
            if ok || out.witness.is_none() {
                out.witness = Some((nu, ok));
            }
            if ok {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// ν lies in 𝔛 ∩ Σ₀, ν is not in the L-generated semigroup, kν is.
fn witness_holds(model: &Model, sigma: &crate::geom::cone::RationalCone, l0: &[i64], nu: &[i64], k: usize) -> Result<bool> {
    if !model.lattice().contains(nu) || !sigma.contains(&zv(nu)) {
        return Ok(false);
    }
    let knu: Weight = nu.iter().map(|x| x * k as i64).collect();
    Ok(semigroup_membership(model, l0, &[nu.to_vec(), knu])?.is_some_and(|v| !v[0] && v[1]))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RowOutcome {
    pub group: String,
    pub module: String,
    pub source: String,
    pub levi: Option<String>,
    pub levi_match: Option<bool>,
    pub normal: Option<Verdict>,
    pub smooth: Option<Verdict>,
    pub normal_match: bool,
    pub smooth_match: bool,
    /// Computed witness, in Dynkin labels.
    pub witness: Option<String>,
    pub table_witness: Option<String>,
    pub witness_match: Option<bool>,
    pub l_weights: Vec<String>,
    pub l_weights_match: Option<bool>,
    pub shortcut: Option<String>,
    pub error: Option<String>,
    pub seconds: f64,
}

impl RowOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.normal_match
            && self.smooth_match
            && self.levi_match != Some(false)
            && self.witness_match != Some(false)
            && self.l_weights_match != Some(false)
    }

    pub fn unknown(&self) -> bool {
        self.normal == Some(Verdict::Unknown) || self.smooth == Some(Verdict::Unknown)
    }
}

fn check_row(row: &GoldenRow, report: &AnalysisReport, model: &Model, out: &mut RowOutcome) -> Result<()> {
    let rs = &model.rs;
    let [c] = report.closed_orbits.as_slice() else {
        return Err(Error::Internal(format!("{} closed orbits for an irreducible module", report.closed_orbits.len())));
    };
    out.levi = Some(c.levi_type.clone());
    out.levi_match = row.levi.as_ref().map(|l| *l == c.levi_type);
    out.l_weights = c.l_weights.iter().map(|w| w.text.clone()).collect();
    out.shortcut = c.shortcut.clone();
    out.normal = Some(c.normality.verdict);
    out.smooth = Some(c.smoothness.verdict);
    out.normal_match = c.normality.verdict == if row.normal { Verdict::Normal } else { Verdict::NotNormal };
    out.smooth_match = c.smoothness.verdict == if row.smooth { Verdict::Smooth } else { Verdict::NotSmooth };
    if let Some(Witness::Missing { weight, multiple }) = &c.normality.witness {
        out.witness = Some(format!("{} (x{multiple})", rs.format_weight(weight)));
        // re-check the reported witness with a separate search
        let kw: Weight = weight.iter().map(|x| x * *multiple as i64).collect();
        let v = semigroup_membership(model, &c.vertex, &[weight.clone(), kw])?;
        if v.is_some_and(|v| v[0] || !v[1]) {
            return Err(Error::Internal("reported witness does not re-verify".into()));
        }
    }
    if !row.l_weights.is_empty() {
        let cmp = compare_l_weights(model, row, &c.vertex)?;
        out.l_weights_match = Some(cmp.matched);
        if row.witness.is_some() {
            out.witness_match = Some(c.normality.verdict == Verdict::NotNormal && cmp.witness.as_ref().is_some_and(|w| w.1));
            out.table_witness = cmp.witness.map(|(w, _)| rs.format_weight(&w));
        }
    } else if row.witness.is_some() {
        out.witness_match = Some(false);
    }
    Ok(())
}

pub fn run_row(row: &GoldenRow, opts: &AnalyzeOptions) -> RowOutcome {
    let start = Instant::now();
    let mut out = RowOutcome {
        group: row.group.clone(),
        module: row.module.clone(),
        source: row.source.clone(),
        levi: None,
        levi_match: None,
        normal: None,
        smooth: None,
        normal_match: false,
        smooth_match: false,
        witness: None,
        table_witness: None,
        witness_match: None,
        l_weights: vec![],
        l_weights_match: None,
        shortcut: None,
        error: None,
        seconds: 0.0,
    };
    let res = Model::parse(&row.group, &row.module).and_then(|m| {
        let r = analyze(&m, opts)?;
        check_row(row, &r, &m, &mut out)
    });
    if let Err(e) = res {
        out.error = Some(e.to_string());
    }
    out.seconds = start.elapsed().as_secs_f64();
    out
}

/// Runs every row of the scope; output order follows the golden file.
pub fn run_table(scope: &str, allow_heavy: bool, opts: &AnalyzeOptions) -> Result<Vec<RowOutcome>> {
    let rows = rows_in_scope(scope)?;
    if !allow_heavy && rows.iter().any(|r| is_heavy(&r.scope)) {
        return Err(Error::Capability(format!("scope {scope} contains heavy rows; pass --allow-heavy")));
    }
    Ok(rows.par_iter().map(|r| run_row(r, opts)).collect())
}

fn mark(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "ok",
        Some(false) => "MISMATCH",
        None => "-",
    }
}

pub fn render_row(r: &RowOutcome) -> String {
    let head = format!("{:<4} {:<3} {:<7}", if r.passed() { "ok" } else { "FAIL" }, r.group, r.module);
    if let Some(e) = &r.error {
        return format!("{head} error: {e}");
    }
    let v = |x: Option<Verdict>| x.map_or("-", yes_no);
    let mut s = format!(
        "{head} L = {:<14} [{}]  normal {:<3} smooth {:<3} L-weights [{}]",
        r.levi.as_deref().unwrap_or("-"),
        mark(r.levi_match),
        v(r.normal),
        v(r.smooth),
        mark(r.l_weights_match)
    );
    if !r.normal_match {
        s.push_str("  normality MISMATCH");
    }
    if !r.smooth_match {
        s.push_str("  smoothness MISMATCH");
    }
    if let Some(w) = &r.table_witness {
        s.push_str(&format!("  witness {w} [{}]", mark(r.witness_match)));
    } else if r.witness_match == Some(false) {
        s.push_str("  witness MISMATCH");
    }
    s.push_str(&format!("  ({:.2}s)", r.seconds));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_parses() {
        let rows = golden_rows().unwrap();
        assert!(rows.len() >= 30);
        for r in &rows {
            assert!(SCOPES.contains(&r.scope.as_str()), "{}", r.scope);
            for w in r.l_weights.iter().chain(&r.witness) {
                parse_table_weight(w).unwrap();
            }
        }
    }

    #[test]
    fn table_weight_syntax() {
        let t = parse_table_weight("3p'1-p'2").unwrap();
        assert_eq!(t, vec![Term { coef: 3, symbol: 'p', factor: 0, index: 1 }, Term { coef: -1, symbol: 'p', factor: 0, index: 2 }]);
        let t = parse_table_weight("2e'+2w''1").unwrap();
        assert_eq!(t[1], Term { coef: 2, symbol: 'w', factor: 1, index: 1 });
        assert!(parse_table_weight("p1").is_err());
        assert!(parse_table_weight("e'2").is_err());
        assert!(parse_table_weight("").is_err());
    }

    fn row(group: &str, module: &str) -> GoldenRow {
        golden_rows().unwrap().into_iter().find(|r| r.group == group && r.module == module).unwrap()
    }

    #[test]
    fn spinor_list_matches() {
        let r = row("B3", "w3");
        let m = Model::parse("B3", "w3").unwrap();
        assert!(compare_l_weights(&m, &r, &[0, 0, 1]).unwrap().matched);
    }

    #[test]
    fn wrong_list_rejected() {
        let mut r = row("G2", "w1");
        r.l_weights[3] = "3p'2".into();
        let m = Model::parse("G2", "w1").unwrap();
        assert!(!compare_l_weights(&m, &r, &[1, 0]).unwrap().matched);
    }

    #[test]
    fn g2_witness_read_back() {
        let r = row("G2", "w2");
        let m = Model::parse("G2", "w2").unwrap();
        let c = compare_l_weights(&m, &r, &[0, 1]).unwrap();
        assert!(c.matched);
        assert!(c.witness.unwrap().1);
    }

    #[test]
    fn heavy_needs_flag() {
        assert!(matches!(run_table("heavy", false, &AnalyzeOptions::default()), Err(Error::Capability(_))));
        assert!(rows_in_scope("nope").is_err());
    }
}
