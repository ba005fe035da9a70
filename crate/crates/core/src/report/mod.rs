//! Analysis reports, their rendering, and the reproduction harness for the classification table.

pub mod table;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compact::{colored_fan, orbit_poset, ColoredFan, Model, OrbitPoset};
use crate::criteria::{known_normal_shortcuts, normality_at, smoothness_at, torus_closure_normal, CriterionReport, NormalityOptions, Verdict, Witness};
use crate::error::{Error, Result};
use crate::lie::levi::LeviDatum;
use crate::lie::Weight;

pub const SCHEMA: &str = "rgc/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub lie_type: String,
    pub weights: Vec<Weight>,
    pub weights_text: Vec<String>,
    pub lattice_index: u64,
    /// 𝔛 is a proper sublattice of the weight lattice of its span.
    pub proper_sublattice: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LWeight {
    pub weight: Weight,
    pub text: String,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedOrbitReport {
    pub vertex: Weight,
    pub vertex_text: String,
    pub levi_type: String,
    pub levi: LeviDatum,
    /// Nonzero μ − λ₀ over the L-highest weights μ of V.
    pub l_weights: Vec<LWeight>,
    pub lgens: Vec<Weight>,
    pub torus_closure_normal: bool,
    pub shortcut: Option<String>,
    pub normality: CriterionReport,
    pub smoothness: CriterionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub input: InputEcho,
    pub dim_group: usize,
    pub closed_orbits: Vec<ClosedOrbitReport>,
    pub orbits: OrbitPoset,
    pub fan: ColoredFan,
    pub normal: Verdict,
    pub smooth: Verdict,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub normality: NormalityOptions,
}

/// X is normal iff it is normal along every closed orbit; Unknown anywhere makes the answer Unknown.
pub fn aggregate(verdicts: &[Verdict], yes: Verdict, no: Verdict) -> Verdict {
    if verdicts.contains(&Verdict::Unknown) {
        Verdict::Unknown
    } else if verdicts.iter().all(|v| *v == yes) {
        yes
    } else {
        no
    }
}

fn closed_orbit_report(model: &Model, l0: &[i64], opts: &AnalyzeOptions) -> Result<ClosedOrbitReport> {
    let rs = &model.rs;
    let slice = model.local_slice(l0)?;
    let normality = normality_at(model, l0, &opts.normality)?;
    let smoothness = smoothness_at(model, l0)?;
    let shortcut = known_normal_shortcuts(model, l0)?;
    let torus = torus_closure_normal(model, l0)?;
    let at = rs.format_weight(l0);
    if smoothness.verdict == Verdict::Smooth && normality.verdict == Verdict::NotNormal {
        return Err(Error::Internal(format!("smooth but not normal at {at}")));
    }
    if shortcut.is_some() && normality.verdict == Verdict::NotNormal {
        return Err(Error::Internal(format!("shortcut disagrees with the semigroup search at {at}")));
    }
    if !torus && normality.verdict == Verdict::Normal {
        return Err(Error::Internal(format!("torus closure not normal but slice normal at {at}")));
    }
    Ok(ClosedOrbitReport {
        vertex: l0.to_vec(),
        vertex_text: at,
        levi_type: slice.levi.type_string(),
        l_weights: slice.branching.iter().map(|(w, m)| LWeight { weight: w.clone(), text: rs.format_weight(w), multiplicity: *m }).collect(),
        levi: slice.levi,
        lgens: slice.lgens,
        torus_closure_normal: torus,
        shortcut,
        normality,
        smoothness,
    })
}

pub fn analyze(model: &Model, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let rs = &model.rs;
    let lat = model.lattice();
    let closed = model.closed_orbits()?;
    let closed_orbits = closed.par_iter().map(|c| closed_orbit_report(model, &c.weight, opts)).collect::<Result<Vec<_>>>()?;
    let orbits = orbit_poset(model)?;
    let fan = colored_fan(model)?;
    let mut warnings = Vec::new();
    if lat.proper_sublattice {
        warnings.push(format!("character lattice has index {} in the weight lattice of its span", lat.index));
    }
    for c in &closed_orbits {
        if !c.normality.exhaustive && c.normality.verdict != Verdict::NotNormal {
            warnings.push(format!("normality at {} searched up to degree {} only", c.vertex_text, c.normality.cap));
        }
    }
    let nv: Vec<Verdict> = closed_orbits.iter().map(|c| c.normality.verdict).collect();
    let sv: Vec<Verdict> = closed_orbits.iter().map(|c| c.smoothness.verdict).collect();
    Ok(AnalysisReport {
        schema: SCHEMA.into(),
        input: InputEcho {
            lie_type: rs.ty.to_string(),
            weights_text: model.weights.iter().map(|w| rs.format_weight(w)).collect(),
            weights: model.weights.clone(),
            lattice_index: lat.index,
            proper_sublattice: lat.proper_sublattice,
        },
        dim_group: model.dim_group(),
        closed_orbits,
        orbits,
        fan,
        normal: aggregate(&nv, Verdict::Normal, Verdict::NotNormal),
        smooth: aggregate(&sv, Verdict::Smooth, Verdict::NotSmooth),
        warnings,
    })
}

pub fn to_json(report: &AnalysisReport) -> Result<String> {
    serde_json::to_string_pretty(report).map_err(|e| Error::Internal(e.to_string()))
}

pub fn from_json(s: &str) -> Result<AnalysisReport> {
    let r: AnalysisReport = serde_json::from_str(s).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
    if r.schema != SCHEMA {
        return Err(Error::Unsupported(format!("schema {}", r.schema)));
    }
    Ok(r)
}

pub fn yes_no(v: Verdict) -> &'static str {
    match v {
        Verdict::Normal | Verdict::Smooth => "yes",
        Verdict::NotNormal | Verdict::NotSmooth => "no",
        Verdict::Unknown => "unknown",
    }
}

fn witness_text(model: &Model, r: &CriterionReport) -> String {
    match &r.witness {
        Some(Witness::Missing { weight, multiple }) => {
            let w = model.rs.format_weight(weight);
            format!(", {w} missing, {multiple}*({w}) present")
        }
        Some(Witness::Condition(c)) => format!(", condition ({c}) fails"),
        None => String::new(),
    }
}

pub fn render_text(model: &Model, r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "G = {}, V = {}, dim G = {}", r.input.lie_type, r.input.weights_text.join(" + "), r.dim_group);
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    let kind = if r.orbits.is_chain() { ", a chain" } else { "" };
    let _ = writeln!(s, "\norbits: {}{kind}", r.orbits.orbits.len());
    for (i, o) in r.orbits.orbits.iter().enumerate() {
        let tag = if o.closed { " closed" } else if i == r.orbits.open() { " open" } else { "" };
        let _ = writeln!(s, "  #{i:<3} dim {:<4} face dim {:<3} colors {:?}{tag}", o.dimension, o.face.dim, o.colors);
    }
    let _ = writeln!(s, "\n{}: {} cones", r.fan.label, r.fan.cones.len());
    for c in &r.closed_orbits {
        let _ = writeln!(s, "\nclosed orbit at {}", c.vertex_text);
        let _ = writeln!(s, "  L = {}", c.levi_type);
        let lw: Vec<String> = c.l_weights.iter().map(|w| if w.multiplicity > 1 { format!("{} (x{})", w.text, w.multiplicity) } else { w.text.clone() }).collect();
        let _ = writeln!(s, "  L-weights: {}", lw.join(", "));
        let _ = writeln!(s, "  torus closure normal: {}", if c.torus_closure_normal { "yes" } else { "no" });
        if let Some(sc) = &c.shortcut {
            let _ = writeln!(s, "  known normal case: {sc}");
        }
        let n = &c.normality;
        let bound = if n.exhaustive { "complete search" } else { "capped search" };
        let _ = writeln!(s, "  normal: {} ({bound}, cap {}{})", yes_no(n.verdict), n.cap, witness_text(model, n));
        let _ = writeln!(s, "  smooth: {}{}", yes_no(c.smoothness.verdict), witness_text(model, &c.smoothness));
    }
    let _ = writeln!(s, "\nX normal: {}\nX smooth: {}", yes_no(r.normal), yes_no(r.smooth));
    s
}

/// Plain-text dump of the weight polytope vertices in the chamber and of the colored cones.
pub fn render_cones(model: &Model, r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# dominant vertices of P");
    for v in model.chamber_vertices() {
        let _ = writeln!(s, "{}", model.rs.format_weight(&v.vertex));
    }
    for c in &r.fan.cones {
        let _ = writeln!(s, "\n# cone at {} colors {:?}", model.rs.format_weight(&c.vertex), c.colors);
        for g in &c.cone.generators {
            let _ = writeln!(s, "ray {}", g.join(" "));
        }
        for f in &c.cone.facets {
            let _ = writeln!(s, "facet {}", f.join(" "));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregate_rules() {
        use Verdict::*;
        assert_eq!(aggregate(&[Normal, Normal], Normal, NotNormal), Normal);
        assert_eq!(aggregate(&[Normal, NotNormal], Normal, NotNormal), NotNormal);
        assert_eq!(aggregate(&[NotNormal, Unknown], Normal, NotNormal), Unknown);
    }

    #[test]
    fn spinor_report() {
        let m = Model::parse("B3", "w3").unwrap();
        let r = analyze(&m, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.orbits.orbits.len(), 4);
        assert_eq!((r.normal, r.smooth), (Verdict::Normal, Verdict::Smooth));
        let back = from_json(&to_json(&r).unwrap()).unwrap();
        assert_eq!(back, r);
        assert!(render_text(&m, &r).contains("X smooth: yes"));
    }

    #[test]
    fn two_vertices() {
        let m = Model::parse("C2", "3*w1,2*w2").unwrap();
        let r = analyze(&m, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.closed_orbits.len(), 2);
        assert_eq!(r.normal, Verdict::NotNormal);
        assert!(render_cones(&m, &r).contains("# cone at"));
    }
}
