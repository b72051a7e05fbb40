//! Batch classification over graph6 files, named constructions, CSV
//! summaries, and the content-addressed result cache backing the `census`
//! command.

use crate::classify::{classify_graph, Budgets, CayleyVerdict, ClassificationReport, UvtVerdict};
use crate::graphs::{self, Graph, GraphError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fs;
use std::io::{self};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),
}

/// Parses a named construction or a raw graph6/sparse6 line.
///
/// Named forms: `petersen`, `kneser:n:k`, `johnson:n:k`,
/// `circulant:n:a,b,...`, `line:<inner>`, `complement:<inner>`.
pub fn parse_construction(spec: &str) -> Result<Graph, CensusError> {
    let spec = spec.trim();
    if spec == "petersen" {
        return Ok(crate::presets::petersen());
    }
    if let Some(rest) = spec.strip_prefix("line:") {
        return Ok(graphs::line_graph(&parse_construction(rest)?)?);
    }
    if let Some(rest) = spec.strip_prefix("complement:") {
        return Ok(graphs::complement(&parse_construction(rest)?));
    }
    if let Some(rest) = spec.strip_prefix("kneser:") {
        let (n, k) = parse_two(rest).ok_or_else(|| bad(spec))?;
        return Ok(graphs::kneser(n, k)?);
    }
    if let Some(rest) = spec.strip_prefix("johnson:") {
        let (n, k) = parse_two(rest).ok_or_else(|| bad(spec))?;
        return Ok(graphs::johnson(n, k)?);
    }
    if let Some(rest) = spec.strip_prefix("circulant:") {
        let mut parts = rest.splitn(2, ':');
        let n: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad(spec))?;
        let conns: Vec<usize> = parts
            .next()
            .ok_or_else(|| bad(spec))?
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad(spec))?;
        return Ok(graphs::circulant(n, &conns)?);
    }
    Ok(graphs::parse_any_with_cap(spec, graphs::DEFAULT_PARSE_CAP)?)
}

fn parse_two(s: &str) -> Option<(usize, usize)> {
    let mut parts = s.split(':');
    let a = parts.next()?.parse().ok()?;
    let b = parts.next()?.parse().ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some((a, b))
}

fn bad(spec: &str) -> CensusError {
    CensusError::UnknownConstruction(spec.to_string())
}

/// One summary row per vertex count. On a file of vertex-transitive
/// non-Cayley graphs, `uvt + non_uvt + unknown = non_cayley = vt`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub vt: usize,
    pub non_cayley: usize,
    pub uvt: usize,
    pub non_uvt: usize,
    pub unknown: usize,
}

impl CensusRow {
    /// Row arithmetic: the three UVT columns partition the non-Cayley count.
    pub fn arithmetic_holds(&self) -> bool {
        self.uvt + self.non_uvt + self.unknown == self.non_cayley
    }
}

/// Options for a census run.
#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub budgets: Budgets,
    pub threads: usize,
    pub cache: Option<PathBuf>,
    /// Opt-in k-uniform pass (absent by default: it is expensive).
    pub kuvt: Option<usize>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            budgets: Budgets::default(),
            threads: 1,
            cache: None,
            kuvt: None,
        }
    }
}

pub struct CensusOutput {
    pub rows: Vec<CensusRow>,
    pub reports: Vec<ClassificationReport>,
}

/// Reads a graph6/sparse6 file (one graph per line; `>>`-header lines are
/// skipped) and returns the surviving lines.
pub fn read_graph_lines(path: &Path) -> Result<Vec<String>, CensusError> {
    let text = fs::read_to_string(path)?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with(">>"))
        .map(str::to_string)
        .collect())
}

/// Classifies every graph in the file. Individual failures are recorded as
/// unknown rather than aborting the run; output order follows input order
/// regardless of completion order.
pub fn run_census(path: &Path, opts: &CensusOptions) -> Result<CensusOutput, CensusError> {
    let lines = read_graph_lines(path)?;
    let reports = classify_lines(&lines, opts);
    let rows = tabulate(&reports);
    Ok(CensusOutput { rows, reports })
}

pub fn classify_lines(lines: &[String], opts: &CensusOptions) -> Vec<ClassificationReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        lines
            .par_iter()
            .map(|line| classify_one_cached(line, opts))
            .collect()
    })
}

fn classify_one_cached(line: &str, opts: &CensusOptions) -> ClassificationReport {
    if let Some(dir) = &opts.cache {
        let key = cache_key(line, opts);
        let path = dir.join(format!("{key}.json"));
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(report) = serde_json::from_str::<ClassificationReport>(&text) {
                // cache hits re-verify their witnesses before being trusted
                if report.id == line && report.verify_witnesses() {
                    return report;
                }
            }
        }
        let report = classify_one(line, opts);
        let _ = fs::create_dir_all(dir);
        if let Ok(json) = serde_json::to_string(&report) {
            let _ = fs::write(&path, json);
        }
        report
    } else {
        classify_one(line, opts)
    }
}

fn classify_one(line: &str, opts: &CensusOptions) -> ClassificationReport {
    match graphs::parse_any_with_cap(line, graphs::DEFAULT_PARSE_CAP) {
        Ok(g) => {
            let mut report = classify_graph(&g, line, &opts.budgets);
            if let Some(k) = opts.kuvt {
                report.kuvt = kuvt_report(&g, k, &opts.budgets);
            }
            report
        }
        Err(e) => failed_report(line, e.to_string()),
    }
}

fn kuvt_report(
    g: &Graph,
    k: usize,
    budgets: &Budgets,
) -> Option<crate::classify::KuvtReport> {
    let aut = crate::autgrp::automorphism_group(g);
    if !aut.is_transitive() {
        return None;
    }
    let report = match crate::classify::k_uvt(&aut, k, budgets) {
        Ok(crate::classify::KuvtDecision::Yes(s)) => crate::classify::KuvtReport {
            k,
            status: "yes".into(),
            witness: Some(s.perms),
        },
        Ok(crate::classify::KuvtDecision::No) => crate::classify::KuvtReport {
            k,
            status: "no".into(),
            witness: None,
        },
        Ok(crate::classify::KuvtDecision::Inconclusive { reason }) => {
            crate::classify::KuvtReport {
                k,
                status: format!("inconclusive: {reason}"),
                witness: None,
            }
        }
        Err(e) => crate::classify::KuvtReport {
            k,
            status: format!("error: {e}"),
            witness: None,
        },
    };
    Some(report)
}

fn failed_report(id: &str, reason: String) -> ClassificationReport {
    ClassificationReport {
        id: id.to_string(),
        n: 0,
        aut_order: "0".into(),
        vertex_transitive: false,
        cayley: CayleyVerdict::Inconclusive {
            reason: reason.clone(),
        },
        uvt: UvtVerdict::Inconclusive {
            lower: 0,
            upper: 0,
            reason,
        },
        factorizing: None,
        omega_deficit: None,
        kuvt: None,
        timings_ms: Default::default(),
        budget_flags: vec!["input_error".into()],
    }
}

/// Aggregates reports into per-vertex-count rows. A graph counts toward
/// `non_cayley` when it is vertex-transitive and not confirmed Cayley;
/// within those, `uvt`/`non_uvt` need a definitive verdict and everything
/// else is `unknown`.
pub fn tabulate(reports: &[ClassificationReport]) -> Vec<CensusRow> {
    let mut rows: BTreeMap<usize, CensusRow> = BTreeMap::new();
    for r in reports {
        let row = rows.entry(r.n).or_insert(CensusRow {
            n: r.n,
            vt: 0,
            non_cayley: 0,
            uvt: 0,
            non_uvt: 0,
            unknown: 0,
        });
        if !r.vertex_transitive {
            continue;
        }
        row.vt += 1;
        if r.is_cayley_yes() {
            continue;
        }
        row.non_cayley += 1;
        match &r.uvt {
            UvtVerdict::Yes { .. } => row.uvt += 1,
            UvtVerdict::No { .. } => row.non_uvt += 1,
            UvtVerdict::Inconclusive { .. } => row.unknown += 1,
        }
    }
    let rows: Vec<CensusRow> = rows.into_values().collect();
    for row in &rows {
        debug_assert!(row.arithmetic_holds());
    }
    rows
}

/// CSV with header `n,vt,non_cayley,uvt,non_uvt,unknown`; byte-identical
/// across runs with the same inputs and budgets.
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("n,vt,non_cayley,uvt,non_uvt,unknown\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n, r.vt, r.non_cayley, r.uvt, r.non_uvt, r.unknown
        ));
    }
    out
}

/// Cache key: SHA-256 over the graph6 line and the budget tuple.
pub fn cache_key(line: &str, opts: &CensusOptions) -> String {
    let mut hasher = Sha256::new();
    hasher.update(line.as_bytes());
    hasher.update(b"\n");
    hasher.update(
        format!(
            "clique={};cover={};maxgroup={};kuvt={:?}",
            opts.budgets.clique_nodes, opts.budgets.cover_nodes, opts.budgets.max_group, opts.kuvt
        )
        .as_bytes(),
    );
    hex::encode(hasher.finalize())
}
