//! Identity verification sweeps: each named identity runs its check over an
//! instance set (enumerated catalog, named families, seeded random sample,
//! or a user-supplied graph6 file) and reports violations by graph6 string.

use alg_core::graph::Orientation;
use alg_core::invariants::{triangle_census_combinatorial, triangle_census_trace};
use alg_core::signed::{audit_induced_cycle_signs, build_alg, lifted_cycle_parity_check};
use alg_core::{generators, opt, spectral, to_graph6, AlgError, Result, SimpleGraph};

use crate::samples;

pub const IDENTITY_NAMES: &[&str] = &[
    "parity",
    "audit",
    "dual-census",
    "imbalance",
    "vf-def",
    "sandwich",
    "cubic-oct",
    "multipartite",
    "matrix-tree",
];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest vertex count drawn from the enumerated catalog (capped by the
    /// catalog itself at 8; named cubic families go up to 12).
    pub n_max: usize,
    /// Explicit instance set; replaces the default one when given.
    pub graphs: Option<Vec<SimpleGraph>>,
    /// Seed for identities that draw a random sample.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 6,
            graphs: None,
            seed: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub identity: String,
    pub checked: usize,
    /// One entry per violating instance: graph6 string plus detail.
    pub violations: Vec<String>,
}

fn g6(g: &SimpleGraph) -> String {
    to_graph6(g).unwrap_or_else(|_| "<n>62>".into())
}

fn catalog_instances(config: &VerifyConfig) -> Result<Vec<SimpleGraph>> {
    match &config.graphs {
        Some(gs) => Ok(gs.clone()),
        None => alg_core::catalog::connected_graphs_up_to(config.n_max),
    }
}

/// Runs one identity check. Unknown names list the valid ones.
pub fn run_identity(name: &str, config: &VerifyConfig) -> Result<VerifyOutcome> {
    let mut violations = Vec::new();
    let checked = match name {
        "parity" => {
            let instances = catalog_instances(config)?;
            for g in &instances {
                if !lifted_cycle_parity_check(g)? {
                    violations.push(format!("{} cycle parity violated", g6(g)));
                }
            }
            instances.len()
        }
        "audit" => {
            let instances = catalog_instances(config)?;
            for g in &instances {
                let alg = build_alg(g, &Orientation::reference(g.edge_count()))?;
                let bad = audit_induced_cycle_signs(&alg, 7)?;
                if !bad.is_empty() {
                    violations.push(format!("{} induced-cycle audit: {bad:?}", g6(g)));
                }
            }
            instances.len()
        }
        "dual-census" => {
            let instances = catalog_instances(config)?;
            for g in &instances {
                let alg = build_alg(g, &Orientation::reference(g.edge_count()))?;
                if triangle_census_trace(&alg)? != triangle_census_combinatorial(g) {
                    violations.push(format!("{} census paths disagree", g6(g)));
                }
            }
            instances.len()
        }
        "imbalance" => {
            let mut instances: Vec<SimpleGraph> = catalog_instances(config)?
                .into_iter()
                .filter(|g| g.edge_count() <= 12)
                .collect();
            if config.graphs.is_none() {
                instances.extend(samples::random_sample(config.seed, 200, 8, 14));
            }
            for g in &instances {
                if !opt::imbalance_identity_check(g)? {
                    violations.push(format!("{} imbalance identity violated", g6(g)));
                }
            }
            instances.len()
        }
        "vf-def" => {
            let instances = catalog_instances(config)?;
            for g in &instances {
                // vertex_frustration errors out when it disagrees with the defect
                if let Err(e) = opt::vertex_frustration(g) {
                    violations.push(format!("{} {e}", g6(g)));
                }
            }
            instances.len()
        }
        "sandwich" => {
            let instances: Vec<SimpleGraph> = catalog_instances(config)?
                .into_iter()
                .filter(|g| !g.is_bipartite())
                .collect();
            for g in &instances {
                let cut = opt::maxcut_exact(g)?;
                let l = opt::frustration_index_exact(g)?.best_value;
                let amplified = opt::defect_amplification_upper(g, &cut)?;
                let cap = (g.max_degree() as u64 - 1) * cut.defect;
                if !(cut.defect <= l && l <= amplified && amplified <= cap) {
                    violations.push(format!(
                        "{} sandwich violated: def {} l {} amplified {} cap {}",
                        g6(g),
                        cut.defect,
                        l,
                        amplified,
                        cap
                    ));
                }
            }
            instances.len()
        }
        "cubic-oct" => {
            let instances: Vec<SimpleGraph> = match &config.graphs {
                Some(gs) => gs.iter().filter(|g| g.is_regular(3)).cloned().collect(),
                None => {
                    let mut set: Vec<SimpleGraph> =
                        alg_core::catalog::connected_graphs_up_to(config.n_max.min(7))?
                            .into_iter()
                            .filter(|g| g.is_regular(3))
                            .collect();
                    set.extend(
                        samples::cubic_catalog(config.n_max)
                            .into_iter()
                            .map(|(_, g)| g),
                    );
                    set
                }
            };
            for g in &instances {
                if !opt::cubic_exactness_check(g)? {
                    violations.push(format!("{} cubic identity l != 2*oct", g6(g)));
                }
            }
            instances.len()
        }
        "multipartite" => {
            let part_lists: Vec<Vec<usize>> = vec![
                vec![1, 1, 1],
                vec![2, 2, 2],
                vec![1, 2, 3],
                vec![3, 3, 3],
                vec![2, 3, 4],
            ];
            for parts in &part_lists {
                let g = generators::complete_multipartite(parts)?;
                let closed = opt::complete_multipartite_closed_form(parts)?;
                if g.edge_count() <= opt::SearchLimits::default().max_orientation_edges {
                    let searched = opt::frustration_index_exact(&g)?.best_value;
                    if searched != closed {
                        violations.push(format!(
                            "{} closed form {closed} != search {searched}",
                            g6(&g)
                        ));
                    }
                }
                let ratio = spectral::spectral_lower_bound(&g)? / closed as f64;
                if (ratio - 0.75).abs() > 1e-9 {
                    violations.push(format!("{} spectral ratio {ratio} != 3/4", g6(&g)));
                }
            }
            part_lists.len()
        }
        "matrix-tree" => {
            let instances: Vec<SimpleGraph> = catalog_instances(config)?
                .into_iter()
                .filter(|g| g.is_connected())
                .collect();
            for g in &instances {
                // the count itself cross-checks eigenvalue product vs cofactor
                if let Err(e) = spectral::spanning_tree_count(g) {
                    violations.push(format!("{} {e}", g6(g)));
                }
            }
            instances.len()
        }
        other => {
            return Err(AlgError::invalid(format!(
                "unknown identity {other:?}; valid identities: {}",
                IDENTITY_NAMES.join(", ")
            )))
        }
    };
    Ok(VerifyOutcome {
        identity: name.to_string(),
        checked,
        violations,
    })
}
