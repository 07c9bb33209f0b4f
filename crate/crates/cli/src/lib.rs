//! Commands behind the `strongmax` binary. Each command returns a
//! serializable report that renders either as JSON or as plain text.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use strongmax::catalogue::TardosEdge;
use strongmax::finitelab::{
    self, gadget_lemma_report, FiniteHypergraph, GadgetLemmaRow,
};
use strongmax::gadget::{EdgeRole, Gadget};
use strongmax::objects::{apply_witness, check, AnyWitness, Kind, Presentation};
use strongmax::oracles::{improve, ORACLE_CONSTRUCTIONS};
use strongmax::universe::{Construction, Edge, IntensionalHypergraph, Vertex};

pub const DEFAULT_BOUND: u64 = 16;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Core(#[from] strongmax::Error),
    #[error("step {step}: {source}")]
    Step { step: usize, source: strongmax::Error },
}

impl CliError {
    /// 2 for bad input, 3 for a broken post-condition.
    pub fn exit_code(&self) -> i32 {
        let internal = |e: &strongmax::Error| matches!(e, strongmax::Error::Internal(_) | strongmax::Error::BadWitness(_));
        match self {
            CliError::Core(e) if internal(e) => 3,
            CliError::Step { source, .. } if internal(source) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A command result that can be printed as text as well as JSON.
pub trait Render: Serialize {
    fn text(&self) -> String;
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn load_presentation(path: &Path, expect: Option<Construction>) -> CliResult<Presentation> {
    let p = Presentation::from_json_str(&read(path)?)?;
    if let Some(c) = expect {
        if p.construction() != c {
            return Err(CliError::Usage(format!(
                "{} holds a {} presentation, not {c}",
                path.display(),
                p.construction()
            )));
        }
    }
    Ok(p)
}

fn joined<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
pub struct CatalogEntry {
    pub construction: Construction,
    pub description: &'static str,
    pub kind: Kind,
    pub oracle: bool,
}

#[derive(Serialize)]
pub struct Catalog(pub Vec<CatalogEntry>);

impl Render for Catalog {
    fn text(&self) -> String {
        let mut out = String::new();
        for e in &self.0 {
            let oracle = if e.oracle { "oracle" } else { "-" };
            let _ = writeln!(out, "{:<12} {:<7} {}", e.construction.tag(), oracle, e.description);
        }
        out
    }
}

pub fn catalog_list() -> Catalog {
    Catalog(
        Construction::ALL
            .iter()
            .map(|&c| CatalogEntry {
                construction: c,
                description: c.description(),
                kind: Kind::of(c),
                oracle: ORACLE_CONSTRUCTIONS.contains(&c),
            })
            .collect(),
    )
}

#[derive(Serialize)]
pub struct TardosReport {
    pub construction: Construction,
    pub x: u64,
    pub y: u64,
    pub size: u64,
    pub points: Vec<(u64, u64)>,
}

impl Render for TardosReport {
    fn text(&self) -> String {
        let pts = joined(self.points.iter().map(|(a, b)| format!("({a},{b})")));
        format!("e_{{{},{}}} ({} points): {pts}\n", self.x, self.y, self.size)
    }
}

pub fn catalog_edge(c: Construction, x: u64, y: u64) -> CliResult<TardosReport> {
    if c != Construction::Tardos {
        return Err(CliError::Usage(format!("indexed edges exist for tardos only; use `catalog edges` for {c}")));
    }
    let t = TardosEdge::new(x, y)?;
    Ok(TardosReport { construction: c, x, y, size: t.size(), points: t.points() })
}

#[derive(Serialize)]
pub struct EdgeList {
    pub construction: Construction,
    pub bound: u64,
    pub edges: Vec<Edge>,
}

impl Render for EdgeList {
    fn text(&self) -> String {
        let mut out = format!("{} edges of {} inside bound {}\n", self.edges.len(), self.construction, self.bound);
        for e in &self.edges {
            let _ = writeln!(out, "{e}");
        }
        out
    }
}

pub fn catalog_edges(c: Construction, bound: u64) -> CliResult<EdgeList> {
    Ok(EdgeList { construction: c, bound, edges: c.edges_within(bound)? })
}

#[derive(Serialize)]
pub struct LabelledVertex {
    pub vertex: Vertex,
    pub label: String,
    pub added: bool,
}

#[derive(Serialize)]
pub struct LabelledEdge {
    pub edge: Edge,
    pub role: EdgeRole,
    pub labels: Vec<String>,
}

#[derive(Serialize)]
pub struct GadgetReport {
    pub k: usize,
    pub host: Edge,
    pub vertices: Vec<LabelledVertex>,
    pub edges: Vec<LabelledEdge>,
}

impl Render for GadgetReport {
    fn text(&self) -> String {
        let mut out = format!("gadget on {} (k = {})\n", self.host, self.k);
        for e in &self.edges {
            let role = match e.role {
                EdgeRole::Outer(i) => format!("outer {i}"),
                EdgeRole::Inner(i) => format!("inner {i}"),
            };
            let _ = writeln!(out, "{role:<8} {{{}}}", e.labels.join(" "));
        }
        out
    }
}

pub fn gadget_build(k: usize) -> CliResult<GadgetReport> {
    if k < 2 {
        return Err(strongmax::Error::GadgetUndefined(k).into());
    }
    let host = Edge::nat_range(1, k as u64)?;
    let g = Gadget::build(&host)?;
    let label = |v: &Vertex| g.label(v).expect("gadget vertex");
    let vertices = g
        .vertices()
        .into_iter()
        .map(|v| LabelledVertex { label: label(&v), added: !host.contains(&v), vertex: v })
        .collect();
    let edges = g
        .edges()
        .into_iter()
        .map(|e| LabelledEdge {
            role: g.role(&e).expect("gadget edge"),
            labels: e.iter().map(label).collect(),
            edge: e,
        })
        .collect();
    Ok(GadgetReport { k, host, vertices, edges })
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub construction: Construction,
    pub kind: Kind,
    pub bound: u64,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        match &self.reason {
            None => format!("{} {:?} verified up to {}\n", self.construction, self.kind, self.bound),
            Some(r) => format!("{} {:?} rejected: {r}\n", self.construction, self.kind),
        }
    }
}

/// Verification outcome; structural errors (parse failures, non-edges) are
/// errors, a well-formed object that fails the check is a report.
pub fn verify(path: &Path, c: Option<Construction>, bound: u64) -> CliResult<VerifyReport> {
    let p = load_presentation(path, c)?;
    let reason = match check(&p, bound) {
        Ok(()) => None,
        Err(
            e @ (strongmax::Error::NotAMatching(_)
            | strongmax::Error::NotACover(_)
            | strongmax::Error::NotAVertexCover(_)
            | strongmax::Error::NotAColouring(_)),
        ) => Some(e.to_string()),
        Err(e) => return Err(e.into()),
    };
    Ok(VerifyReport { construction: p.construction(), kind: p.kind(), bound, verified: reason.is_none(), reason })
}

fn step(p: &Presentation, bound: u64, index: usize) -> CliResult<(AnyWitness, Presentation)> {
    let at = |source| CliError::Step { step: index, source };
    let w = improve(p, bound).map_err(at)?.witness;
    if !w.is_strict() {
        return Err(at(strongmax::Error::Internal(format!("witness {:?} is not strict", w.delta()))));
    }
    let q = apply_witness(p, &w, bound).map_err(at)?;
    Ok((w, q))
}

fn checked_input(path: &Path, c: Construction, bound: u64) -> CliResult<Presentation> {
    if !ORACLE_CONSTRUCTIONS.contains(&c) {
        return Err(CliError::Usage(format!("there is no improvement oracle for {c}")));
    }
    let p = load_presentation(path, Some(c))?;
    check(&p, bound)?;
    Ok(p)
}

#[derive(Serialize)]
pub struct ImproveReport {
    pub construction: Construction,
    pub witnesses: Vec<AnyWitness>,
    pub presentation: Presentation,
}

impl Render for ImproveReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for (i, w) in self.witnesses.iter().enumerate() {
            let (r, a) = w.delta();
            let _ = writeln!(out, "step {}: removed {r}, added {a}", i + 1);
            let _ = writeln!(out, "  {}", serde_json::to_string(w).expect("serializable"));
        }
        let _ = writeln!(out, "{}", serde_json::to_string(&self.presentation).expect("serializable"));
        out
    }
}

pub fn improve_cmd(path: &Path, c: Construction, steps: usize, bound: u64) -> CliResult<ImproveReport> {
    let mut p = checked_input(path, c, bound)?;
    let mut witnesses = Vec::with_capacity(steps);
    for i in 1..=steps {
        let (w, q) = step(&p, bound, i)?;
        witnesses.push(w);
        p = q;
    }
    Ok(ImproveReport { construction: c, witnesses, presentation: p })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepSummary {
    pub step: usize,
    pub removed: usize,
    pub added: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub construction: Construction,
    pub steps: usize,
    pub per_step: Vec<StepSummary>,
    pub verified: bool,
    /// Edge count of the final object when it is finite.
    pub final_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

impl Render for RunReport {
    fn text(&self) -> String {
        let mut out = format!("{}: {} steps\n", self.construction, self.steps);
        for s in &self.per_step {
            let _ = writeln!(out, "step {}: removed {}, added {}", s.step, s.removed, s.added);
        }
        let _ = writeln!(out, "verified: {}", self.verified);
        if let Some(n) = self.final_size {
            let _ = writeln!(out, "final size: {n}");
        }
        if let Some(ms) = self.wall_ms {
            let _ = writeln!(out, "wall time: {ms} ms");
        }
        out
    }
}

/// Runs the oracle `steps` times, verifying after each step. Returns the
/// report and the final presentation.
pub fn demo(path: &Path, c: Construction, steps: usize, bound: u64, timing: bool) -> CliResult<(RunReport, Presentation)> {
    let started = Instant::now();
    let mut p = checked_input(path, c, bound)?;
    let mut per_step = Vec::with_capacity(steps);
    for i in 1..=steps {
        let (w, q) = step(&p, bound, i)?;
        let (removed, added) = w.delta();
        per_step.push(StepSummary { step: i, removed, added });
        p = q;
    }
    let report = RunReport {
        construction: c,
        steps,
        per_step,
        verified: check(&p, bound).is_ok(),
        final_size: p.size(),
        wall_ms: timing.then(|| started.elapsed().as_millis()),
    };
    Ok((report, p))
}

#[derive(Serialize)]
pub struct LemmaReport {
    pub rows: Vec<GadgetLemmaRow>,
    pub holds: bool,
}

impl Render for LemmaReport {
    fn text(&self) -> String {
        let mut out = String::from(" k  edges  matchings  max  outer-unique  inner-cover  holds\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>2}  {:>5}  {:>9}  {:>3}  {:>12}  {:>11}  {}",
                r.k, r.edges, r.matchings, r.maximum_matching_size, r.outer_unique_maximum,
                r.inner_unique_minimum_cover, r.holds
            );
        }
        out
    }
}

pub fn lab_gadget_lemmas(k_max: usize) -> CliResult<LemmaReport> {
    let rows = gadget_lemma_report(k_max)?;
    let holds = rows.iter().all(|r| r.holds);
    Ok(LemmaReport { rows, holds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BruteTarget {
    Matchings,
    Covers,
}

#[derive(Serialize)]
pub struct BruteReport {
    pub what: BruteTarget,
    pub vertices: usize,
    pub edges: usize,
    pub count: usize,
    pub optimum: usize,
    pub optimal: Vec<Vec<Edge>>,
    /// Whether the definition-based strong optima equal the cardinality optima.
    pub strong_agrees: bool,
}

impl Render for BruteReport {
    fn text(&self) -> String {
        let what = match self.what {
            BruteTarget::Matchings => "matchings",
            BruteTarget::Covers => "edge covers",
        };
        let mut out = format!(
            "{} {what}; optimum size {}, attained by {}\n",
            self.count,
            self.optimum,
            self.optimal.len()
        );
        for s in &self.optimal {
            let _ = writeln!(out, "  {}", joined(s));
        }
        let _ = writeln!(out, "strong optima agree: {}", self.strong_agrees);
        out
    }
}

pub fn lab_brute(path: &Path, what: BruteTarget) -> CliResult<BruteReport> {
    let text = read(path)?;
    let h: FiniteHypergraph = serde_json::from_str(&text).map_err(strongmax::Error::from)?;
    h.validate()?;
    let (all, optimal, strong) = match what {
        BruteTarget::Matchings => (
            finitelab::enumerate_matchings(&h)?,
            finitelab::maximum_matchings(&h)?,
            finitelab::strongly_maximal_matchings(&h)?,
        ),
        BruteTarget::Covers => (
            finitelab::enumerate_edge_covers(&h)?,
            finitelab::minimum_edge_covers(&h)?,
            finitelab::strongly_minimal_edge_covers(&h)?,
        ),
    };
    Ok(BruteReport {
        what,
        vertices: h.vertices.len(),
        edges: h.edges.len(),
        count: all.len(),
        optimum: optimal.first().map_or(0, |s| s.len()),
        strong_agrees: strong == optimal,
        optimal: optimal.into_iter().map(|s| s.into_iter().collect()).collect(),
    })
}

#[derive(Serialize)]
pub struct Truncation {
    pub construction: Construction,
    pub bound: u64,
    #[serde(flatten)]
    pub hypergraph: FiniteHypergraph,
}

impl Render for Truncation {
    fn text(&self) -> String {
        let mut out = format!(
            "{} truncated at {}: {} vertices, {} edges\n",
            self.construction,
            self.bound,
            self.hypergraph.vertices.len(),
            self.hypergraph.edges.len()
        );
        for e in &self.hypergraph.edges {
            let _ = writeln!(out, "{e}");
        }
        out
    }
}

pub fn lab_truncate(c: Construction, bound: u64) -> CliResult<Truncation> {
    Ok(Truncation { construction: c, bound, hypergraph: finitelab::truncate(c, bound)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::Core(strongmax::Error::NotAMatching("x".into())).exit_code(), 2);
        assert_eq!(CliError::Core(strongmax::Error::Internal("x".into())).exit_code(), 3);
        let step = CliError::Step { step: 4, source: strongmax::Error::BadWitness("x".into()) };
        assert_eq!(step.exit_code(), 3);
        assert!(step.to_string().starts_with("step 4: "));
    }

    #[test]
    fn catalog_lists_every_construction() {
        let c = catalog_list();
        assert_eq!(c.0.len(), Construction::ALL.len());
        assert_eq!(c.0.iter().filter(|e| e.oracle).count(), 7);
    }

    #[test]
    fn tardos_edge_report() {
        let r = catalog_edge(Construction::Tardos, 2, 3).unwrap();
        assert_eq!(r.size, 5);
        assert_eq!(r.points, vec![(2, 1), (2, 2), (2, 3), (3, 3), (4, 3)]);
        assert!(catalog_edge(Construction::H1Star, 2, 3).is_err());
    }

    #[test]
    fn gadget_report_labels() {
        let g = gadget_build(3).unwrap();
        assert_eq!(g.vertices.len(), 7);
        assert_eq!(g.edges.len(), 5);
        let labels: Vec<String> = g.edges.iter().map(|e| e.labels.join(" ")).collect();
        assert!(labels.contains(&"v1 v1+".to_string()));
        assert!(gadget_build(1).is_err());
    }
}
