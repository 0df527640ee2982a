//! Per-graph analysis records for batch scans, and exhaustive enumeration of
//! small labeled graphs.

use std::time::Instant;

use serde::Serialize;

use crate::certify;
use crate::classcheck::{self, PropertyVerdict, Prop8Summary};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{encode_graph6, parse_graph6};
use crate::invariants::{domination_chain_report, ChainValues, ChainWitnesses};
use crate::limits::Limits;
use crate::theorems::{self, classes_from_values, TheoremCheck};

/// Largest order accepted by [`enumerate_labeled`].
pub const ENUMERATE_MAX_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    /// The chain values with witnesses.
    Report,
    /// Chain, class flags, Property U and the necessary-condition verdicts.
    #[default]
    Classify,
    /// Every structural check in [`theorems::check_theorems`].
    Theorems,
    /// Graphs meeting the Γ-set partition conditions without being in `F`.
    Problem1,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ScanOptions {
    pub mode: ScanMode,
    pub connected_only: bool,
    /// Record per-graph wall time. Off by default so output is reproducible.
    pub timings: bool,
    pub limits: Limits,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum Status {
    Ok,
    Skipped { reason: String },
    /// Solvers or checks that exceeded their size cap.
    Capped { invariants: Vec<&'static str> },
    /// A witness failed re-validation, an internal consistency check failed,
    /// or (in theorem mode) a structural check was violated.
    Failed { reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classes {
    #[serde(rename = "F")]
    pub f: bool,
    #[serde(rename = "F_alpha")]
    pub f_alpha: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Problem1Flags {
    pub gamma_sets: usize,
    pub passing: usize,
    /// Some Γ-set meets all four partition conditions, yet the graph is not in `F`.
    pub candidate_some: bool,
    /// Every Γ-set meets them, yet the graph is not in `F`.
    pub candidate_all: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_index: Option<usize>,
    pub n: Option<usize>,
    pub graph6: String,
    pub invariants: Option<ChainValues>,
    pub witnesses: Option<ChainWitnesses>,
    pub classes: Option<Classes>,
    pub verdicts: Vec<PropertyVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorems: Option<Vec<TheoremCheck>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub problem1: Option<Problem1Flags>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    pub status: Status,
}

impl GraphRecord {
    fn new(input_index: Option<usize>, graph6: String, n: Option<usize>) -> Self {
        GraphRecord {
            input_index,
            n,
            graph6,
            invariants: None,
            witnesses: None,
            classes: None,
            verdicts: Vec::new(),
            theorems: None,
            problem1: None,
            elapsed_ms: None,
            status: Status::Ok,
        }
    }

    pub fn theorem_violations(&self) -> Vec<&'static str> {
        self.theorems
            .iter()
            .flatten()
            .filter(|c| c.is_violation())
            .map(|c| c.name)
            .collect()
    }
}

/// Parses one input line and analyzes it. Parse failures become skipped records.
pub fn process_line(index: usize, line: &str, opts: &ScanOptions) -> GraphRecord {
    let text = line.trim();
    match parse_graph6(text) {
        Ok(g) => {
            let mut rec = analyze(&g, opts);
            rec.input_index = Some(index);
            rec
        }
        Err(e) => {
            let mut rec = GraphRecord::new(Some(index), text.to_string(), None);
            rec.status = Status::Skipped { reason: e.to_string() };
            rec
        }
    }
}

/// Runs the mode's computations on `g`. Every failing verdict's witness is
/// re-validated by [`certify`] before the record is returned with `ok`.
pub fn analyze(g: &Graph, opts: &ScanOptions) -> GraphRecord {
    let start = Instant::now();
    let mut rec = GraphRecord::new(None, encode_graph6(g), Some(g.n()));
    if opts.connected_only && !g.is_connected() {
        rec.status = Status::Skipped { reason: "not connected".into() };
    } else if let Err(e) = fill(g, opts, &mut rec) {
        rec.status = match e {
            Error::Capacity { what, .. } => Status::Capped { invariants: vec![what] },
            other => Status::Failed { reason: other.to_string() },
        };
    }
    if opts.timings {
        rec.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    rec
}

fn fill(g: &Graph, opts: &ScanOptions, rec: &mut GraphRecord) -> Result<()> {
    let limits = &opts.limits;
    let report = domination_chain_report(g, limits)?;
    if let Err(reason) = certify::certify_report(g, &report) {
        return Err(Error::Consistency(reason));
    }
    let complete = report.is_complete();
    rec.invariants = Some(report.invariants.clone());
    rec.witnesses = Some(report.witnesses.clone());
    if !complete {
        rec.status = Status::Capped { invariants: report.limits_hit.clone() };
        return Ok(());
    }
    let values = report.invariants;
    let (f, f_alpha) = classes_from_values(g, &values).expect("complete report");
    match opts.mode {
        ScanMode::Report => {}
        ScanMode::Classify => {
            rec.classes = Some(Classes { f, f_alpha });
            rec.verdicts.push(classcheck::check_property_u(g, limits)?);
            rec.verdicts.extend(classcheck::necessary_condition_diagnostics(g, limits)?);
        }
        ScanMode::Theorems => {
            rec.classes = Some(Classes { f, f_alpha });
            let suite = theorems::check_theorems(g, limits)?;
            rec.verdicts = suite.verdicts;
            rec.theorems = Some(suite.checks);
        }
        ScanMode::Problem1 => {
            rec.classes = Some(Classes { f, f_alpha });
            if !g.is_connected() || !(g.n() <= 2 || g.is_twin_free()) {
                rec.status = Status::Skipped { reason: "search covers connected twin-free graphs".into() };
                return Ok(());
            }
            let Prop8Summary { gamma_sets, passing } = classcheck::prop8_summary(g, limits)?;
            rec.problem1 = Some(Problem1Flags {
                gamma_sets,
                passing,
                candidate_some: passing > 0 && !f,
                candidate_all: passing == gamma_sets && !f,
            });
        }
    }
    if let Some(bad) = rec.verdicts.iter().find(|v| !certify::revalidate(g, v, &values)) {
        return Err(Error::Consistency(format!("{} witness failed re-validation", bad.property)));
    }
    let violated = rec.theorem_violations();
    if !violated.is_empty() {
        rec.status = Status::Failed { reason: format!("violated: {}", violated.join(", ")) };
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub ok: usize,
    pub skipped: usize,
    pub capped: usize,
    pub failed: usize,
    #[serde(rename = "F")]
    pub in_f: usize,
    #[serde(rename = "F_alpha")]
    pub in_f_alpha: usize,
    pub theorem_violations: usize,
    pub problem1_some: usize,
    pub problem1_all: usize,
}

impl Summary {
    pub fn add(&mut self, rec: &GraphRecord) {
        self.total += 1;
        match rec.status {
            Status::Ok => self.ok += 1,
            Status::Skipped { .. } => self.skipped += 1,
            Status::Capped { .. } => self.capped += 1,
            Status::Failed { .. } => self.failed += 1,
        }
        if let Some(c) = rec.classes {
            self.in_f += usize::from(c.f);
            self.in_f_alpha += usize::from(c.f_alpha);
        }
        self.theorem_violations += rec.theorem_violations().len();
        if let Some(p) = rec.problem1 {
            self.problem1_some += usize::from(p.candidate_some);
            self.problem1_all += usize::from(p.candidate_all);
        }
    }
}

/// Vertex pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), ...`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Every labeled graph on `n` vertices, by edge bitmask ascending, where bit
/// `k` is the `k`-th vertex pair in graph6 order.
pub fn enumerate_labeled(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::input("enumeration needs at least one vertex"));
    }
    Limits::check("labeled graph enumeration", n, ENUMERATE_MAX_N)?;
    let pairs = pairs(n);
    let count = 1u64 << pairs.len();
    Ok((0..count).filter_map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).expect("pairs are in range");
        (!connected_only || g.is_connected()).then_some(g)
    }))
}
