//! Human-readable views of the machine reports.

use std::fmt::Write;

use quivercert::{
    Certificate, Conclusion, Covector, Decomposition, EigenvalueTag, Family, FlavourLabel,
    GeneralizedRoot, Mode, QuiverDatum, RootKind, SmoothnessVerdict, StratumType,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimReport {
    pub datum: QuiverDatum,
    pub stratum: StratumType,
    pub codim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumLine {
    pub stratum: StratumType,
    pub codim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataReport {
    pub datum: QuiverDatum,
    pub bound: usize,
    pub strata: Vec<StratumLine>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub datum: QuiverDatum,
    pub roots: Vec<GeneralizedRoot>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizeReport {
    pub labels: Vec<FlavourLabel>,
    pub input: Vec<i64>,
    pub kappa: Vec<i64>,
    pub rho: Vec<i64>,
    pub forest: Vec<usize>,
}

pub fn families(families: &[Family]) -> String {
    let mut out = String::new();
    let (framed, unframed): (Vec<&Family>, Vec<&Family>) = families.iter().partition(|f| f.is_framed());
    let mut k = 0;
    for (title, group) in [("framed", framed), ("unframed", unframed)] {
        if group.is_empty() {
            continue;
        }
        let _ = writeln!(out, "{title} ({})", group.len());
        for f in group {
            k += 1;
            let _ = writeln!(out, "  {k:>3}  {f}");
        }
    }
    let _ = writeln!(out, "{} families", families.len());
    out
}

fn tag(t: EigenvalueTag) -> String {
    match t {
        EigenvalueTag::Zero => "λ=0".into(),
        EigenvalueTag::Nonzero(k) => format!("λ{k}"),
    }
}

fn slot_list(datum: &QuiverDatum, ids: &[usize]) -> String {
    let slots = datum.slots();
    let names: Vec<String> = ids.iter().map(|&p| slots[p].to_string()).collect();
    format!("[{}]", names.join(" "))
}

pub fn decomposition(dec: &Decomposition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "datum    {}", dec.parent);
    let _ = writeln!(out, "stratum  {}", dec.stratum.render(&dec.parent));
    let _ = writeln!(out, "codim    {}", dec.codim());
    for (k, f) in dec.factors.iter().enumerate() {
        let _ = writeln!(
            out,
            "  #{k:<3} {:<5} v={:?} w={:?}  slots {}  codim {}",
            tag(f.eigenvalue),
            f.datum.v(),
            f.datum.w(),
            slot_list(&dec.parent, &f.slot_embedding),
            f.codim()
        );
    }
    out
}

pub fn codim(report: &CodimReport) -> String {
    format!(
        "{}\t{}\n",
        report.codim,
        report.stratum.render(&report.datum)
    )
}

pub fn strata(report: &StrataReport) -> String {
    let mut out = String::new();
    for line in &report.strata {
        let _ = writeln!(out, "{}", line.stratum.render(&report.datum));
    }
    out
}

pub fn roots(report: &RootsReport) -> String {
    let slots = report.datum.slots();
    let mut out = String::new();
    for r in &report.roots {
        let kind = match r.kind {
            RootKind::GaugeRoot => "gauge",
            RootKind::EdgeWeight => "edge",
            RootKind::FramingWeight => "framing",
        };
        let cov = match r.covector {
            Covector::Difference { plus, minus } => format!("x{} - x{}", slots[plus], slots[minus]),
            Covector::Unit { plus } => format!("x{}", slots[plus]),
        };
        let _ = writeln!(out, "{kind:<8} {cov}");
    }
    let _ = writeln!(out, "{} roots", report.roots.len());
    out
}

fn coweight(labels: &[FlavourLabel], values: &[i64]) -> String {
    let parts: Vec<String> = labels.iter().zip(values).map(|(l, x)| format!("{l}={x}")).collect();
    format!("[{}]", parts.join(" "))
}

pub fn normalized(report: &NormalizeReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input   {}", coweight(&report.labels, &report.input));
    let _ = writeln!(out, "kappa   {}", coweight(&report.labels, &report.kappa));
    let _ = writeln!(out, "rho     {:?}", report.rho);
    let forest: Vec<String> = report.forest.iter().map(|e| format!("e{e}")).collect();
    let _ = writeln!(out, "forest  [{}]", forest.join(" "));
    out
}

fn verdict(v: &SmoothnessVerdict) -> String {
    match v {
        SmoothnessVerdict::CertifiedSmooth {
            hyperplanes,
            generic,
            basis,
        } => {
            let mut s = format!("smooth by {}", basis.citation());
            if *generic {
                s.push_str(", generic");
            } else {
                let _ = write!(s, ", {} hyperplanes", hyperplanes.len());
            }
            s
        }
        SmoothnessVerdict::Unknown { reason, .. } => format!("unknown: {reason}"),
    }
}

pub fn certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    let mode = match cert.mode {
        Mode::SymplecticSingularities => "symplectic singularities",
        Mode::NormalSymplectic => "normal",
    };
    let _ = writeln!(out, "datum        {}", cert.datum);
    let _ = writeln!(out, "mode         {mode} (strata of codim <= {})", cert.mode.codim_bound());
    let _ = writeln!(out, "knowledge    {}", cert.knowledge_base);
    for note in &cert.notes {
        let _ = writeln!(out, "note         {note}");
    }

    let top = cert.census.iter().map(|e| e.codim).max().unwrap_or(0);
    let per_codim: Vec<String> = (0..=top)
        .map(|k| format!("{k}:{}", cert.census.iter().filter(|e| e.codim == k).count()))
        .collect();
    let _ = writeln!(out, "strata       {} ({})", cert.census.len(), per_codim.join(" "));

    let labels: Vec<String> = cert.lattice.labels().iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "lattice      rank {} [{}]", labels.len(), labels.join(" "));

    let _ = writeln!(out, "factors      {}", cert.factors.len());
    for (k, f) in cert.factors.iter().enumerate() {
        let family = f.family.as_deref().unwrap_or("-");
        let short = if f.in_short_list { " short-list" } else { "" };
        let _ = writeln!(
            out,
            "  #{k:<3} v={:?} w={:?} codim {} x{}  family {family}{short}",
            f.datum.v(),
            f.datum.w(),
            f.codim,
            f.occurrences
        );
        let _ = writeln!(out, "        {}", verdict(&f.verdict));
    }

    let _ = writeln!(out, "hyperplanes  {}", cert.hyperplanes.len());
    for h in &cert.hyperplanes {
        let _ = writeln!(out, "  {h}");
    }
    for g in &cert.generic_citations {
        let _ = writeln!(out, "generic      factor #{} by {}", g.factor, g.citation);
    }
    match &cert.witness {
        Some(w) => {
            let _ = writeln!(out, "witness      {}", coweight(cert.lattice.labels(), w));
        }
        None => {
            let _ = writeln!(out, "witness      none");
        }
    }
    for o in &cert.obstructions {
        let case = o.case.map(|c| format!(" [{}]", c.id())).unwrap_or_default();
        let _ = writeln!(out, "obstruction  factor #{}: {}{case}", o.factor, o.reason);
    }
    let _ = writeln!(out, "citations    {}", cert.citations.join(", "));
    let conclusion = match (cert.conclusion, cert.mode) {
        (Conclusion::Certified, Mode::SymplecticSingularities) => {
            "CERTIFIED: the Coulomb branch has symplectic singularities"
        }
        (Conclusion::Certified, Mode::NormalSymplectic) => {
            "CERTIFIED: every factor outside codimension 2 is in the short list"
        }
        (Conclusion::Inconclusive, _) => "INCONCLUSIVE",
    };
    let _ = writeln!(out, "conclusion   {conclusion}");
    out
}
