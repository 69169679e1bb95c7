//! Batch sweeps over graph6 files: per-instance reports with per-stage
//! cutoffs, pairing of line-cospectral graphs, separation statistics, and
//! the frustration/defect correlation.

use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use alg_core::spectral::symmetric_eigenvalues;
use alg_core::{from_graph6, Result, SimpleGraph};

use crate::jsonfmt::round12;
use crate::report::{build_report, InvariantReport, StageOptions};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub cutoff: Duration,
    pub include_timings: bool,
    pub threads: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            cutoff: Duration::from_secs(10),
            include_timings: false,
            threads: None,
        }
    }
}

/// One line-cospectral pair with its separation flags.
#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    pub graph6_a: Option<String>,
    pub graph6_b: Option<String>,
    pub delta3_separated: bool,
    pub inertia_separated: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub malformed_lines: usize,
    pub timeout_instances: usize,
    pub correlation_sample: usize,
    pub pearson_l_def: Option<f64>,
    pub cospectral_groups: usize,
    pub cospectral_pairs: usize,
    pub pairs_delta3_separated: usize,
    pub pairs_inertia_separated: usize,
    pub pairs: Vec<PairRecord>,
}

pub struct SweepOutput {
    /// Reports in input order.
    pub reports: Vec<InvariantReport>,
    pub summary: SweepSummary,
    /// 1-based line numbers of lines that failed to parse.
    pub malformed: Vec<(usize, String)>,
}

/// Pearson correlation coefficient; `None` when degenerate.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

/// Grouping key for line-cospectral pairing: vertex count, edge count,
/// degree sequence, and the adjacency spectrum of the line graph rounded to
/// 1e-6.
type CospectralKey = (usize, usize, Vec<usize>, Vec<i64>);

fn cospectral_key(g: &SimpleGraph) -> Result<CospectralKey> {
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let spectrum = symmetric_eigenvalues(&g.line_graph().adjacency_matrix())?;
    let rounded: Vec<i64> = spectrum
        .eigenvalues
        .iter()
        .map(|&x| (x * 1e6).round() as i64)
        .collect();
    Ok((g.vertex_count(), g.edge_count(), degrees, rounded))
}

/// Statistics over the line-cospectral pairs of a report set.
fn pair_statistics(
    graphs: &[SimpleGraph],
    reports: &[InvariantReport],
) -> Result<(usize, Vec<PairRecord>)> {
    use std::collections::BTreeMap;
    let mut groups: BTreeMap<CospectralKey, Vec<usize>> = BTreeMap::new();
    for (idx, g) in graphs.iter().enumerate() {
        groups.entry(cospectral_key(g)?).or_default().push(idx);
    }
    let mut group_count = 0;
    let mut pairs = Vec::new();
    for members in groups.values().filter(|m| m.len() >= 2) {
        group_count += 1;
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                let (ri, rj) = (&reports[i], &reports[j]);
                let key =
                    |r: &InvariantReport| (r.inertia.positive, r.inertia.negative, r.inertia.zero);
                pairs.push(PairRecord {
                    graph6_a: ri.graph.graph6.clone(),
                    graph6_b: rj.graph.graph6.clone(),
                    delta3_separated: ri.census.delta3 != rj.census.delta3,
                    inertia_separated: key(ri) != key(rj),
                });
            }
        }
    }
    Ok((group_count, pairs))
}

/// Runs a sweep over graphs already in memory.
pub fn sweep_graphs(graphs: &[SimpleGraph], config: &SweepConfig) -> Result<SweepOutput> {
    let options = StageOptions {
        stage_cutoff: Some(config.cutoff),
        include_timings: config.include_timings,
        strict: false,
        ..StageOptions::default()
    };
    let run = || -> Result<Vec<InvariantReport>> {
        graphs
            .par_iter()
            .map(|g| build_report(g, &options))
            .collect()
    };
    let reports = match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| alg_core::AlgError::invalid(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }?;

    let timeout_instances = reports.iter().filter(|r| r.timeout_flag).count();
    let mut ls = Vec::new();
    let mut defs = Vec::new();
    for r in &reports {
        if let (Some(l), Some(def)) = (r.l_alg, r.defect) {
            ls.push(l as f64);
            defs.push(def as f64);
        }
    }
    let (cospectral_groups, pairs) = pair_statistics(graphs, &reports)?;
    let summary = SweepSummary {
        instances: graphs.len(),
        malformed_lines: 0,
        timeout_instances,
        correlation_sample: ls.len(),
        pearson_l_def: pearson(&ls, &defs).map(round12),
        cospectral_groups,
        cospectral_pairs: pairs.len(),
        pairs_delta3_separated: pairs.iter().filter(|p| p.delta3_separated).count(),
        pairs_inertia_separated: pairs.iter().filter(|p| p.inertia_separated).count(),
        pairs,
    };
    Ok(SweepOutput {
        reports,
        summary,
        malformed: Vec::new(),
    })
}

/// Parses a graph6 file (one graph per line, `#` comments allowed) and runs
/// the sweep. Malformed lines are skipped and reported, never fatal.
pub fn sweep_file(text: &str, config: &SweepConfig) -> Result<SweepOutput> {
    let mut graphs = Vec::new();
    let mut malformed = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match from_graph6(line) {
            Ok(g) => graphs.push(g),
            Err(e) => malformed.push((lineno + 1, e.to_string())),
        }
    }
    let mut output = sweep_graphs(&graphs, config)?;
    output.summary.malformed_lines = malformed.len();
    output.malformed = malformed;
    Ok(output)
}
