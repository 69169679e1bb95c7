//! Per-graph invariant reports: stage orchestration, JSON schema, and the
//! internal consistency check tying every printed bound to the exact values
//! in the same report.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use alg_core::graph::Orientation;
use alg_core::invariants::{triangle_census_combinatorial, triangle_census_trace};
use alg_core::opt::{self, Deadline, SearchLimits};
use alg_core::signed::{build_alg, signed_adjacency_matrix};
use alg_core::spectral;
use alg_core::{to_graph6, AlgError, Result, SimpleGraph};

use crate::jsonfmt::round12;

/// Which optional stages to run, their limits, and the per-stage cutoff.
#[derive(Clone, Debug)]
pub struct StageOptions {
    pub skip_frustration: bool,
    pub skip_energy: bool,
    pub skip_maxcut: bool,
    pub skip_oct: bool,
    pub skip_vf: bool,
    pub limits: SearchLimits,
    /// Wall-clock budget per stage; `None` means unbounded.
    pub stage_cutoff: Option<Duration>,
    /// Include wall-clock stage timings in the report. Off by default so
    /// that re-runs are byte-identical.
    pub include_timings: bool,
    /// When strict, exceeding a resource limit is a hard error; otherwise
    /// the stage is recorded as skipped (sweep mode).
    pub strict: bool,
}

impl Default for StageOptions {
    fn default() -> Self {
        StageOptions {
            skip_frustration: false,
            skip_energy: false,
            skip_maxcut: false,
            skip_oct: false,
            skip_vf: false,
            limits: SearchLimits::default(),
            stage_cutoff: None,
            include_timings: false,
            strict: true,
        }
    }
}

impl StageOptions {
    /// Parses the `--skip` list: stage names separated by commas.
    pub fn apply_skips(&mut self, list: &str) -> Result<()> {
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match name {
                "frustration" => self.skip_frustration = true,
                "energy" => self.skip_energy = true,
                "maxcut" => self.skip_maxcut = true,
                "oct" => self.skip_oct = true,
                "vf" => self.skip_vf = true,
                other => {
                    return Err(AlgError::invalid(format!(
                    "unknown stage {other:?}; valid stages: frustration, energy, maxcut, oct, vf"
                )))
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphIdentity {
    pub graph6: Option<String>,
    pub edge_hash: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct StatsJson {
    pub degrees: Vec<usize>,
    pub triangles: u64,
    pub bipartite: bool,
    pub components: usize,
    pub line_graph_components: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusJson {
    pub t_plus: u64,
    pub t_minus: u64,
    pub total: u64,
    pub delta3: i64,
    pub tau3_num: Option<i64>,
    pub tau3_den: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InertiaJson {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub uncertain: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectraJson {
    pub laplacian: Vec<f64>,
    pub signed: Vec<f64>,
    pub zero_threshold: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsJson {
    pub lower_def: Option<u64>,
    pub lower_spectral: f64,
    pub upper_amplified: Option<u64>,
    /// Which lower bound is active: "defect", "spectral", or "tie".
    pub active_lower: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    /// Optimal orientation as a `+`/`-` string over canonical edges.
    pub orientation: Option<String>,
    pub partition: Option<Vec<usize>>,
    pub defect_edges: Option<Vec<(usize, usize)>>,
    pub transversal: Option<Vec<usize>>,
    pub frustration_nodes: Option<u64>,
}

/// Bundled per-graph results. Field order is the serialization order.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub graph: GraphIdentity,
    pub stats: StatsJson,
    pub census: CensusJson,
    pub l_alg: Option<u64>,
    pub m_energy: Option<u64>,
    pub maxcut: Option<u64>,
    pub defect: Option<u64>,
    pub oct: Option<usize>,
    pub vf: Option<u64>,
    pub inertia: InertiaJson,
    pub spectra: SpectraJson,
    pub bounds: BoundsJson,
    pub witnesses: WitnessJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, u64>>,
    pub timeouts: Vec<String>,
    pub limit_skips: Vec<String>,
    pub timeout_flag: bool,
}

/// FNV-1a over the canonical edge list; stable across runs.
pub fn edge_hash(g: &SimpleGraph) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(g.vertex_count() as u64);
    for &(u, v) in g.edges() {
        eat(u as u64);
        eat(v as u64);
    }
    format!("{h:016x}")
}

struct StageRunner<'a> {
    options: &'a StageOptions,
    timings: BTreeMap<String, u64>,
    timeouts: Vec<String>,
    limit_skips: Vec<String>,
}

impl<'a> StageRunner<'a> {
    fn deadline(&self) -> Deadline {
        self.options.stage_cutoff.map(|d| Instant::now() + d)
    }

    fn run<T>(
        &mut self,
        name: &str,
        skip: bool,
        f: impl FnOnce(Deadline) -> Result<T>,
    ) -> Result<Option<T>> {
        if skip {
            return Ok(None);
        }
        let start = Instant::now();
        let outcome = f(self.deadline());
        self.timings
            .insert(name.to_string(), start.elapsed().as_millis() as u64);
        match outcome {
            Ok(v) => Ok(Some(v)),
            Err(AlgError::Timeout { .. }) => {
                self.timeouts.push(name.to_string());
                Ok(None)
            }
            Err(e @ AlgError::ResourceLimit { .. }) => {
                if self.options.strict {
                    Err(e)
                } else {
                    self.limit_skips.push(name.to_string());
                    Ok(None)
                }
            }
            Err(e) => Err(e),
        }
    }
}

/// Computes the full report for one graph.
pub fn build_report(g: &SimpleGraph, options: &StageOptions) -> Result<InvariantReport> {
    let stats = g.basic_stats();
    let alg = build_alg(g, &Orientation::reference(g.edge_count()))?;

    // census by both paths; they must agree exactly
    let census_trace = triangle_census_trace(&alg)?;
    let census_comb = triangle_census_combinatorial(g);
    if census_trace != census_comb {
        return Err(AlgError::Numeric(format!(
            "census paths disagree: trace {census_trace:?} vs combinatorial {census_comb:?}"
        )));
    }
    let census = CensusJson {
        t_plus: census_trace.t_plus,
        t_minus: census_trace.t_minus,
        total: census_trace.total,
        delta3: census_trace.delta3,
        tau3_num: census_trace.tau3.map(|r| *r.numer()),
        tau3_den: census_trace.tau3.map(|r| *r.denom()),
    };

    let s = signed_adjacency_matrix(&alg);
    let signed_spectrum = spectral::symmetric_eigenvalues(&s)?;
    let laplacian_spectrum = spectral::symmetric_eigenvalues(&g.laplacian())?;
    let inertia = spectral::signed_inertia(&alg)?;

    let mut runner = StageRunner {
        options,
        timings: BTreeMap::new(),
        timeouts: Vec::new(),
        limit_skips: Vec::new(),
    };
    let limits = &options.limits;

    let frustration = runner.run("frustration", options.skip_frustration, |d| {
        opt::frustration_index_exact_with(g, limits, d)
    })?;
    let m_energy = runner.run("energy", options.skip_energy, |d| {
        opt::max_imbalance_energy_with(g, limits, d)
    })?;
    let cut = runner.run("maxcut", options.skip_maxcut, |d| {
        opt::maxcut_exact_with(g, limits, d)
    })?;
    let oct = runner.run("oct", options.skip_oct, |d| {
        opt::oct_exact_with(g, limits, d)
    })?;
    let vf = runner.run("vf", options.skip_vf || options.skip_maxcut, |d| {
        opt::vertex_frustration_with(g, limits, d)
    })?;

    let lower_spectral = round12(spectral::spectral_lower_bound(g)?);
    let upper_amplified = match &cut {
        Some(c) => Some(opt::defect_amplification_upper_with(g, c, limits, None)?),
        None => None,
    };
    let active_lower = cut.as_ref().map(|c| {
        let def = c.defect as f64;
        if (def - lower_spectral).abs() < 1e-12 {
            "tie".to_string()
        } else if def > lower_spectral {
            "defect".to_string()
        } else {
            "spectral".to_string()
        }
    });

    let witnesses = WitnessJson {
        orientation: frustration.as_ref().map(|f| {
            f.witness
                .signs()
                .iter()
                .map(|&s| if s == 1 { '+' } else { '-' })
                .collect()
        }),
        partition: cut.as_ref().map(|c| c.partition.to_indices()),
        defect_edges: cut
            .as_ref()
            .map(|c| c.defect_edges.iter().map(|&e| g.edges()[e]).collect()),
        transversal: oct.as_ref().map(|o| o.transversal.to_indices()),
        frustration_nodes: frustration.as_ref().map(|f| f.nodes_explored),
    };

    let timeout_flag = !runner.timeouts.is_empty();
    let report = InvariantReport {
        graph: GraphIdentity {
            graph6: to_graph6(g).ok(),
            edge_hash: edge_hash(g),
            n: g.vertex_count(),
            m: g.edge_count(),
        },
        stats: StatsJson {
            degrees: stats.degrees,
            triangles: stats.triangle_count,
            bipartite: stats.bipartite,
            components: stats.components,
            line_graph_components: stats.line_graph_components,
        },
        census,
        l_alg: frustration.as_ref().map(|f| f.best_value),
        m_energy,
        maxcut: cut.as_ref().map(|c| c.maxcut_value),
        defect: cut.as_ref().map(|c| c.defect),
        oct: oct.as_ref().map(|o| o.oct_value),
        vf,
        inertia: InertiaJson {
            positive: inertia.positive,
            negative: inertia.negative,
            zero: inertia.zero,
            uncertain: inertia.uncertain,
        },
        spectra: SpectraJson {
            laplacian: laplacian_spectrum
                .eigenvalues
                .iter()
                .map(|&x| round12(x))
                .collect(),
            signed: signed_spectrum
                .eigenvalues
                .iter()
                .map(|&x| round12(x))
                .collect(),
            zero_threshold: round12(signed_spectrum.tolerance),
        },
        bounds: BoundsJson {
            lower_def: cut.as_ref().map(|c| c.defect),
            lower_spectral,
            upper_amplified,
            active_lower,
        },
        witnesses,
        timings: options.include_timings.then_some(runner.timings),
        timeouts: runner.timeouts,
        limit_skips: runner.limit_skips,
        timeout_flag,
    };
    consistency_check(&report)?;
    Ok(report)
}

/// Every populated bound must satisfy its inequality against the populated
/// exact values in the same report.
pub fn consistency_check(r: &InvariantReport) -> Result<()> {
    let fail = |msg: String| Err(AlgError::Numeric(format!("report inconsistency: {msg}")));
    if let (Some(l), Some(def)) = (r.l_alg, r.bounds.lower_def) {
        if def > l {
            return fail(format!("defect bound {def} exceeds l_alg {l}"));
        }
    }
    if let Some(l) = r.l_alg {
        if r.bounds.lower_spectral > l as f64 + 1e-9 {
            return fail(format!(
                "spectral bound {} exceeds l_alg {l}",
                r.bounds.lower_spectral
            ));
        }
        if let Some(upper) = r.bounds.upper_amplified {
            if l > upper {
                return fail(format!("l_alg {l} exceeds amplified bound {upper}"));
            }
        }
        if let Some(m_energy) = r.m_energy {
            let deg_sq: u64 = r.stats.degrees.iter().map(|&d| (d * d) as u64).sum();
            if 4 * l + m_energy != deg_sq {
                return fail(format!(
                    "imbalance identity broken: 4*{l} + {m_energy} != {deg_sq}"
                ));
            }
        }
    }
    if let (Some(vf), Some(def)) = (r.vf, r.defect) {
        if vf != def {
            return fail(format!("vf {vf} != defect {def}"));
        }
    }
    if let (Some(maxcut), Some(def)) = (r.maxcut, r.defect) {
        if maxcut + def != r.graph.m as u64 {
            return fail("maxcut + defect != m".to_string());
        }
    }
    Ok(())
}

/// Renders the report as an aligned key/value table.
pub fn render_table(r: &InvariantReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<18} {v}\n"));
    line(
        "graph6",
        r.graph.graph6.clone().unwrap_or_else(|| "-".into()),
    );
    line("n, m", format!("{}, {}", r.graph.n, r.graph.m));
    line("degrees", format!("{:?}", r.stats.degrees));
    line("bipartite", r.stats.bipartite.to_string());
    line("triangles", r.stats.triangles.to_string());
    line(
        "census",
        format!(
            "t+ {} / t- {} / T {} / delta3 {}",
            r.census.t_plus, r.census.t_minus, r.census.total, r.census.delta3
        ),
    );
    let tau = match (r.census.tau3_num, r.census.tau3_den) {
        (Some(n), Some(d)) => format!("{n}/{d}"),
        _ => "undefined".into(),
    };
    line("tau3", tau);
    let fmt_opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
    line("l_alg", fmt_opt(r.l_alg));
    line("m_energy", fmt_opt(r.m_energy));
    line(
        "maxcut / defect",
        format!("{} / {}", fmt_opt(r.maxcut), fmt_opt(r.defect)),
    );
    line("oct", r.oct.map_or("-".to_string(), |x| x.to_string()));
    line("vf", fmt_opt(r.vf));
    line(
        "inertia",
        format!(
            "({}, {}, {})",
            r.inertia.positive, r.inertia.negative, r.inertia.zero
        ),
    );
    line(
        "bounds",
        format!(
            "def {} | spectral {} | amplified {} | active {}",
            fmt_opt(r.bounds.lower_def),
            r.bounds.lower_spectral,
            fmt_opt(r.bounds.upper_amplified),
            r.bounds.active_lower.clone().unwrap_or_else(|| "-".into())
        ),
    );
    if let Some(o) = &r.witnesses.orientation {
        line("orientation", o.clone());
    }
    if !r.timeouts.is_empty() {
        line("timeouts", r.timeouts.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alg_core::generators;

    #[test]
    fn c5_report_values() {
        let r = build_report(&generators::cycle(5).unwrap(), &StageOptions::default()).unwrap();
        assert_eq!(r.l_alg, Some(1));
        assert_eq!(r.defect, Some(1));
        assert_eq!(r.oct, Some(1));
        assert_eq!(r.vf, Some(1));
        assert_eq!(r.census.delta3, 0);
        assert_eq!(r.census.total, 0);
        assert_eq!(r.census.tau3_num, None);
        assert_eq!(r.bounds.active_lower.as_deref(), Some("defect"));
        assert!(!r.timeout_flag);
    }

    #[test]
    fn skip_flags_null_out_stages() {
        let mut options = StageOptions::default();
        options.apply_skips("oct, frustration").unwrap();
        let r = build_report(&generators::cycle(5).unwrap(), &options).unwrap();
        assert_eq!(r.oct, None);
        assert_eq!(r.l_alg, None);
        assert!(r.witnesses.orientation.is_none());
        assert!(StageOptions::default().apply_skips("bogus").is_err());
    }

    #[test]
    fn strict_mode_propagates_limits() {
        let g = generators::complete(9).unwrap();
        let err = build_report(&g, &StageOptions::default()).unwrap_err();
        assert!(matches!(
            err,
            AlgError::ResourceLimit {
                stage: "frustration",
                ..
            }
        ));

        let relaxed = StageOptions {
            strict: false,
            ..StageOptions::default()
        };
        let r = build_report(&g, &relaxed).unwrap();
        assert_eq!(r.l_alg, None);
        assert!(r.limit_skips.contains(&"frustration".to_string()));
    }

    #[test]
    fn reports_serialize_deterministically() {
        let g = generators::petersen();
        let a =
            serde_json::to_string(&build_report(&g, &StageOptions::default()).unwrap()).unwrap();
        let b =
            serde_json::to_string(&build_report(&g, &StageOptions::default()).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("timings"));
    }
}
