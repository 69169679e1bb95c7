//! Exact optimization: frustration index of the antisymmetric line graph,
//! maximal imbalance energy, Max-Cut defect, odd cycle transversal, vertex
//! frustration, odd-cycle packing, and the closed multipartite form.
//!
//! The frustration index is computed through its orientation form
//! `min over orientations of sum_v d+(v) d-(v)`: negative edges of the
//! antisymmetric line graph are exactly directed 2-paths. The search space
//! is quotiented by fixing one edge direction per line-graph component
//! (reversing a whole component is value-preserving), leaving
//! `2^(m - c(L(g)))` representatives, and explored by depth-first
//! branch and bound. All searches are exact; sizes beyond the configured
//! limits are hard errors, never silent truncation.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::cycles;
use crate::error::{AlgError, Result};
use crate::graph::{Orientation, SimpleGraph};

/// Hard size limits for the exact searches. These are configuration values;
/// exceeding one is an error naming the stage and limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    /// Edge cap for orientation searches (frustration index, imbalance energy).
    pub max_orientation_edges: usize,
    /// Vertex cap for exact Max-Cut.
    pub max_cut_vertices: usize,
    /// Vertex cap for exact odd cycle transversal.
    pub max_oct_vertices: usize,
    /// Vertex cap for odd-cycle packing (exhaustive cycle enumeration).
    pub max_packing_vertices: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_orientation_edges: 26,
            max_cut_vertices: 28,
            max_oct_vertices: 24,
            max_packing_vertices: 10,
        }
    }
}

/// Optional wall-clock deadline for a search stage.
pub type Deadline = Option<Instant>;

/// Periodic deadline probe, checked every few thousand search nodes.
struct Ticker {
    deadline: Deadline,
    counter: u32,
}

impl Ticker {
    fn new(deadline: Deadline) -> Self {
        Ticker {
            deadline,
            counter: 0,
        }
    }

    fn tick(&mut self, stage: &'static str) -> Result<()> {
        self.counter = self.counter.wrapping_add(1);
        if self.counter % 1024 == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(AlgError::Timeout { stage });
                }
            }
        }
        Ok(())
    }
}

/// Result of the exact orientation search for the frustration index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationSearchResult {
    /// `min over orientations of sum_v d+(v) d-(v)`.
    pub best_value: u64,
    /// Optimal orientation; lexicographically smallest sign sequence among
    /// optima (`+1` before `-1`, earliest edge first).
    pub witness: Orientation,
    pub nodes_explored: u64,
}

/// Result of the exact Max-Cut enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutResult {
    pub maxcut_value: u64,
    /// `|E| - maxcut_value`.
    pub defect: u64,
    /// Vertices on the side not containing vertex 0; lexicographically
    /// smallest bitset among maximum cuts.
    pub partition: BitSet,
    /// Canonical indices of the edges inside a side.
    pub defect_edges: Vec<usize>,
}

/// Result of the exact odd cycle transversal search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OctResult {
    pub oct_value: usize,
    /// Lexicographically smallest minimum transversal.
    pub transversal: BitSet,
}

/// Number of directed 2-paths `sum_v d+(v) d-(v)` under a fixed orientation;
/// equals the number of negative edges of the antisymmetric line graph.
pub fn directed_two_path_count(g: &SimpleGraph, o: &Orientation) -> Result<u64> {
    if o.len() != g.edge_count() {
        return Err(AlgError::invalid("orientation length mismatch"));
    }
    let n = g.vertex_count();
    let mut indeg = vec![0u64; n];
    let mut outdeg = vec![0u64; n];
    for (e, &edge) in g.edges().iter().enumerate() {
        let (head, tail) = o.head_tail(edge, e);
        indeg[head] += 1;
        outdeg[tail] += 1;
    }
    Ok((0..n).map(|v| indeg[v] * outdeg[v]).sum())
}

/// Lowest canonical edge index in each component of the line graph; these
/// edges are pinned to the reference direction during orientation searches.
fn fixed_edges(g: &SimpleGraph) -> Vec<bool> {
    let (comp, count) = g.components();
    let mut seen = vec![false; count];
    let mut fixed = vec![false; g.edge_count()];
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        if !seen[comp[u]] {
            seen[comp[u]] = true;
            fixed[e] = true;
        }
    }
    fixed
}

struct FrustrationSearch<'a> {
    g: &'a SimpleGraph,
    free: Vec<usize>,
    indeg: Vec<u64>,
    outdeg: Vec<u64>,
    partial: u64,
    best: u64,
    best_signs: Vec<i8>,
    signs: Vec<i8>,
    nodes: u64,
    ticker: Ticker,
}

impl<'a> FrustrationSearch<'a> {
    /// Orients edge `e` by `sign`, updating the partial sum of per-vertex
    /// in/out products. The delta at a vertex gaining an out-edge is its
    /// current in-degree, and symmetrically.
    fn assign(&mut self, e: usize, sign: i8) {
        self.signs[e] = sign;
        let (head, tail) = self.orient(e, sign);
        self.partial += self.indeg[tail] + self.outdeg[head];
        self.outdeg[tail] += 1;
        self.indeg[head] += 1;
    }

    fn unassign(&mut self, e: usize, sign: i8) {
        let (head, tail) = self.orient(e, sign);
        self.outdeg[tail] -= 1;
        self.indeg[head] -= 1;
        self.partial -= self.indeg[tail] + self.outdeg[head];
    }

    fn orient(&self, e: usize, sign: i8) -> (usize, usize) {
        let (u, v) = self.g.edges()[e];
        if sign == 1 {
            (v, u)
        } else {
            (u, v)
        }
    }

    fn dfs(&mut self, depth: usize) -> Result<()> {
        // partial products only grow as edges are added, so the running sum
        // over all vertices is an admissible lower bound
        if self.partial >= self.best {
            return Ok(());
        }
        if depth == self.free.len() {
            self.best = self.partial;
            self.best_signs = self.signs.clone();
            return Ok(());
        }
        let e = self.free[depth];
        for sign in [1i8, -1] {
            self.nodes += 1;
            self.ticker.tick("frustration")?;
            self.assign(e, sign);
            self.dfs(depth + 1)?;
            self.unassign(e, sign);
        }
        Ok(())
    }
}

/// Exact frustration index of the antisymmetric line graph, with the
/// default limits and no deadline.
pub fn frustration_index_exact(g: &SimpleGraph) -> Result<OrientationSearchResult> {
    frustration_index_exact_with(g, &SearchLimits::default(), None)
}

/// Exact frustration index by branch-and-bound over orientation
/// representatives. The witness is the lexicographically smallest optimal
/// sign sequence: the DFS assigns edges in canonical order, `+1` first, and
/// only strict improvements replace the incumbent, so the first optimum
/// found is the smallest.
pub fn frustration_index_exact_with(
    g: &SimpleGraph,
    limits: &SearchLimits,
    deadline: Deadline,
) -> Result<OrientationSearchResult> {
    let m = g.edge_count();
    if m > limits.max_orientation_edges {
        return Err(AlgError::ResourceLimit {
            stage: "frustration",
            limit: limits.max_orientation_edges,
            actual: m,
        });
    }
    let fixed = fixed_edges(g);
    let mut search = FrustrationSearch {
        g,
        free: (0..m).filter(|&e| !fixed[e]).collect(),
        indeg: vec![0; g.vertex_count()],
        outdeg: vec![0; g.vertex_count()],
        partial: 0,
        best: u64::MAX,
        best_signs: Vec::new(),
        signs: vec![1; m],
        nodes: 0,
        ticker: Ticker::new(deadline),
    };
    for (e, &pinned) in fixed.iter().enumerate() {
        if pinned {
            search.assign(e, 1);
        }
    }
    search.dfs(0)?;
    let witness = Orientation::new(search.best_signs).expect("signs are +/-1");
    debug_assert_eq!(directed_two_path_count(g, &witness)?, search.best);
    Ok(OrientationSearchResult {
        best_value: search.best,
        witness,
        nodes_explored: search.nodes,
    })
}

/// Exact maximal imbalance energy `M(g) = max over sign vectors x of
/// ||D x||^2`, with default limits.
pub fn max_imbalance_energy(g: &SimpleGraph) -> Result<u64> {
    max_imbalance_energy_with(g, &SearchLimits::default(), None)
}

/// Exact maximal imbalance energy by Gray-code enumeration of orientation
/// representatives: each step flips one edge and updates two vertex
/// imbalances in O(1). `||D x||^2 = sum_v (d+(v) - d-(v))^2`.
pub fn max_imbalance_energy_with(
    g: &SimpleGraph,
    limits: &SearchLimits,
    deadline: Deadline,
) -> Result<u64> {
    let m = g.edge_count();
    if m > limits.max_orientation_edges {
        return Err(AlgError::ResourceLimit {
            stage: "imbalance energy",
            limit: limits.max_orientation_edges,
            actual: m,
        });
    }
    let fixed = fixed_edges(g);
    let free: Vec<usize> = (0..m).filter(|&e| !fixed[e]).collect();
    let n = g.vertex_count();
    let mut imb = vec![0i64; n];
    for &(u, v) in g.edges() {
        imb[v] += 1;
        imb[u] -= 1;
    }
    let mut energy: i64 = imb.iter().map(|x| x * x).sum();
    let mut best = energy;
    let mut signs = vec![1i8; m];
    let mut ticker = Ticker::new(deadline);
    let steps: u64 = 1u64 << free.len();
    for k in 1..steps {
        ticker.tick("imbalance energy")?;
        let e = free[k.trailing_zeros() as usize];
        let (u, v) = g.edges()[e];
        let s = signs[e] as i64;
        signs[e] = -signs[e];
        energy -= imb[u] * imb[u] + imb[v] * imb[v];
        imb[v] -= 2 * s;
        imb[u] += 2 * s;
        energy += imb[u] * imb[u] + imb[v] * imb[v];
        if energy > best {
            best = energy;
        }
    }
    Ok(best as u64)
}

/// Checks the exact imbalance identity `4 l + M = sum_v d(v)^2`.
pub fn imbalance_identity_check(g: &SimpleGraph) -> Result<bool> {
    imbalance_identity_check_with(g, &SearchLimits::default(), None)
}

pub fn imbalance_identity_check_with(
    g: &SimpleGraph,
    limits: &SearchLimits,
    deadline: Deadline,
) -> Result<bool> {
    let l = frustration_index_exact_with(g, limits, deadline)?.best_value;
    let m_energy = max_imbalance_energy_with(g, limits, deadline)?;
    let degree_square_sum: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum();
    Ok(4 * l + m_energy == degree_square_sum)
}

fn mask_lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) == 0
}

/// Exact Max-Cut with default limits.
pub fn maxcut_exact(g: &SimpleGraph) -> Result<CutResult> {
    maxcut_exact_with(g, &SearchLimits::default(), None)
}

/// Exact Max-Cut by Gray-code enumeration of the `2^(n-1)` bipartitions
/// with vertex 0 fixed; ties break toward the lexicographically smallest
/// partition bitset.
pub fn maxcut_exact_with(
    g: &SimpleGraph,
    limits: &SearchLimits,
    deadline: Deadline,
) -> Result<CutResult> {
    let n = g.vertex_count();
    if n > limits.max_cut_vertices {
        return Err(AlgError::ResourceLimit {
            stage: "maxcut",
            limit: limits.max_cut_vertices,
            actual: n,
        });
    }
    let m = g.edge_count() as u64;
    if n <= 1 {
        return Ok(CutResult {
            maxcut_value: 0,
            defect: 0,
            partition: BitSet::new(n),
            defect_edges: (0..g.edge_count()).collect(),
        });
    }
    let adj = g.adjacency();
    // mask bit (v - 1) puts vertex v on the side away from vertex 0
    let mut mask: u64 = 0;
    let mut cut: u64 = 0;
    let side = |mask: u64, v: usize| -> bool { v > 0 && mask >> (v - 1) & 1 == 1 };
    let (mut best, mut best_mask) = (0u64, 0u64);
    let mut ticker = Ticker::new(deadline);
    let steps: u64 = 1u64 << (n - 1);
    for k in 1..steps {
        ticker.tick("maxcut")?;
        // flip the Gray-code vertex and update the cut incrementally
        let w = k.trailing_zeros() as usize + 1;
        let mut delta: i64 = 0;
        for &x in &adj[w] {
            if side(mask, x) == side(mask, w) {
                delta += 1;
            } else {
                delta -= 1;
            }
        }
        mask ^= 1 << (w - 1);
        cut = (cut as i64 + delta) as u64;
        if cut > best || (cut == best && mask_lex_less(mask, best_mask)) {
            best = cut;
            best_mask = mask;
        }
    }
    let defect_edges: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| side(best_mask, u) == side(best_mask, v))
        .map(|(e, _)| e)
        .collect();
    debug_assert_eq!(best + defect_edges.len() as u64, m);
    let mut partition = BitSet::new(n);
    for v in 1..n {
        if best_mask >> (v - 1) & 1 == 1 {
            partition.insert(v);
        }
    }
    Ok(CutResult {
        maxcut_value: best,
        defect: m - best,
        partition,
        defect_edges,
    })
}

fn is_bipartite_without_vertices(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    cycles::odd_cycle_in_subgraph(adj, removed).is_none()
}

/// An odd cycle avoiding the removed edges, as edge indices, via BFS
/// 2-coloring on the surviving subgraph.
fn odd_cycle_edges(g: &SimpleGraph, removed_edges: &[bool]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !removed_edges[e] {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let cycle = cycles::odd_cycle_in_subgraph(&adj, &vec![false; n])?;
    Some(
        (0..cycle.len())
            .map(|i| {
                g.edge_index(cycle[i], cycle[(i + 1) % cycle.len()])
                    .expect("cycle edge")
            })
            .collect(),
    )
}

/// Decision: can `k` edge deletions make the graph bipartite? Branches on
/// the edges of an odd cycle.
fn bipartization_decision(
    g: &SimpleGraph,
    removed_edges: &mut [bool],
    k: usize,
    ticker: &mut Ticker,
) -> Result<bool> {
    ticker.tick("vertex frustration")?;
    let Some(cycle_edges) = odd_cycle_edges(g, removed_edges) else {
        return Ok(true);
    };
    if k == 0 {
        return Ok(false);
    }
    for &e in &cycle_edges {
        removed_edges[e] = true;
        let ok = bipartization_decision(g, removed_edges, k - 1, ticker)?;
        removed_edges[e] = false;
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Decision: can `k` vertex deletions make the alive subgraph bipartite?
/// Branches on the vertices of an odd cycle found by BFS 2-coloring.
fn oct_decision(
    adj: &[Vec<usize>],
    removed: &mut [bool],
    k: usize,
    ticker: &mut Ticker,
) -> Result<bool> {
    ticker.tick("oct")?;
    let Some(cycle) = cycles::odd_cycle_in_subgraph(adj, removed) else {
        return Ok(true);
    };
    if k == 0 {
        return Ok(false);
    }
    for &v in &cycle {
        removed[v] = true;
        let ok = oct_decision(adj, removed, k - 1, ticker)?;
        removed[v] = false;
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exact odd cycle transversal with default limits.
pub fn oct_exact(g: &SimpleGraph) -> Result<OctResult> {
    oct_exact_with(g, &SearchLimits::default(), None)
}

/// Exact odd cycle transversal: increasing-size search where each size is
/// decided by branching over an odd cycle's vertices, then the witness is
/// the lexicographically smallest valid transversal of the minimum size
/// (certified by 2-coloring the remainder).
pub fn oct_exact_with(
    g: &SimpleGraph,
    limits: &SearchLimits,
    deadline: Deadline,
) -> Result<OctResult> {
    let n = g.vertex_count();
    if n > limits.max_oct_vertices {
        return Err(AlgError::ResourceLimit {
            stage: "oct",
            limit: limits.max_oct_vertices,
            actual: n,
        });
    }
    let adj = g.adjacency();
    let mut removed = vec![false; n];
    let mut ticker = Ticker::new(deadline);
    let Some(anchor_cycle) = cycles::odd_cycle_in_subgraph(&adj, &removed) else {
        return Ok(OctResult {
            oct_value: 0,
            transversal: BitSet::new(n),
        });
    };
    let k = (1..=n)
        .find_map(|k| match oct_decision(&adj, &mut removed, k, &mut ticker) {
            Ok(true) => Some(Ok(k)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .expect("deleting all vertices leaves a bipartite graph")?;

    // lexicographically smallest witness: scan k-subsets; every transversal
    // must meet the anchor odd cycle, which prunes most candidates
    let mut best: Option<BitSet> = None;
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        ticker.tick("oct")?;
        if combo.iter().any(|v| anchor_cycle.contains(v)) {
            for &v in &combo {
                removed[v] = true;
            }
            if is_bipartite_without_vertices(&adj, &removed) {
                let cand = BitSet::from_indices(n, &combo);
                if best
                    .as_ref()
                    .is_none_or(|b| cand.lex_cmp(b) == std::cmp::Ordering::Less)
                {
                    best = Some(cand);
                }
            }
            for &v in &combo {
                removed[v] = false;
            }
        }
        if !next_combination(&mut combo, n) {
            break;
        }
    }
    let transversal = best.ok_or_else(|| {
        AlgError::Numeric("oct witness scan found no transversal at the decided size".into())
    })?;
    Ok(OctResult {
        oct_value: k,
        transversal,
    })
}

/// Advances `combo` to the next k-subset of `0..n` in ascending-tuple order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Vertex frustration of the antisymmetric line graph: minimum number of
/// base-graph edges whose deletion leaves a bipartite graph (vertices of the
/// line graph are edges of the base graph). Cross-checked against the
/// Max-Cut defect, which it must equal.
pub fn vertex_frustration(g: &SimpleGraph) -> Result<u64> {
    vertex_frustration_with(g, &SearchLimits::default(), None)
}

pub fn vertex_frustration_with(
    g: &SimpleGraph,
    limits: &SearchLimits,
    deadline: Deadline,
) -> Result<u64> {
    let m = g.edge_count();
    if m > limits.max_orientation_edges {
        return Err(AlgError::ResourceLimit {
            stage: "vertex frustration",
            limit: limits.max_orientation_edges,
            actual: m,
        });
    }
    let mut ticker = Ticker::new(deadline);
    let mut removed = vec![false; m];
    let vf = (0..=m)
        .find_map(
            |k| match bipartization_decision(g, &mut removed, k, &mut ticker) {
                Ok(true) => Some(Ok(k as u64)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            },
        )
        .expect("deleting all edges leaves a bipartite graph")?;
    let cut = maxcut_exact_with(g, limits, deadline)?;
    if vf != cut.defect {
        return Err(AlgError::Numeric(format!(
            "vertex frustration {vf} disagrees with Max-Cut defect {}",
            cut.defect
        )));
    }
    Ok(vf)
}

/// Defect amplification upper bound: for a maximum cut, the sum over defect
/// edges of `min(d(u) - 1, d(v) - 1)`. The supplied cut is re-verified
/// against a fresh exact Max-Cut before use.
pub fn defect_amplification_upper(g: &SimpleGraph, cut: &CutResult) -> Result<u64> {
    defect_amplification_upper_with(g, cut, &SearchLimits::default(), None)
}

pub fn defect_amplification_upper_with(
    g: &SimpleGraph,
    cut: &CutResult,
    limits: &SearchLimits,
    deadline: Deadline,
) -> Result<u64> {
    let side = |v: usize| cut.partition.contains(v);
    let achieved = g
        .edges()
        .iter()
        .filter(|&&(u, v)| side(u) != side(v))
        .count() as u64;
    if achieved != cut.maxcut_value
        || maxcut_exact_with(g, limits, deadline)?.maxcut_value != cut.maxcut_value
    {
        return Err(AlgError::invalid("supplied cut is not a maximum cut"));
    }
    let deg = g.degrees();
    Ok(cut
        .defect_edges
        .iter()
        .map(|&e| {
            let (u, v) = g.edges()[e];
            (deg[u].min(deg[v]) as u64).saturating_sub(1)
        })
        .sum())
}

/// Maximum number of edge-disjoint odd cycles, by exhaustive simple-cycle
/// enumeration and branch-and-bound set packing.
pub fn odd_cycle_packing(g: &SimpleGraph) -> Result<u64> {
    odd_cycle_packing_with(g, &SearchLimits::default(), None)
}

pub fn odd_cycle_packing_with(
    g: &SimpleGraph,
    limits: &SearchLimits,
    deadline: Deadline,
) -> Result<u64> {
    let n = g.vertex_count();
    if n > limits.max_packing_vertices {
        return Err(AlgError::ResourceLimit {
            stage: "odd cycle packing",
            limit: limits.max_packing_vertices,
            actual: n,
        });
    }
    let mut cycles_by_edges: Vec<u64> = cycles::simple_cycles_up_to(g, n)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .map(|c| {
            let mut mask = 0u64;
            for i in 0..c.len() {
                let e = g
                    .edge_index(c[i], c[(i + 1) % c.len()])
                    .expect("cycle edge");
                mask |= 1 << e;
            }
            mask
        })
        .collect();
    cycles_by_edges.sort_by_key(|m| m.count_ones());

    struct Packing<'a> {
        cycles: &'a [u64],
        best: u64,
        ticker: Ticker,
    }
    impl Packing<'_> {
        fn dfs(&mut self, i: usize, used: u64, count: u64, free_edges: u32) -> Result<()> {
            self.best = self.best.max(count);
            if i == self.cycles.len() {
                return Ok(());
            }
            // every further cycle needs >= 3 unused edges
            let optimistic = count + ((self.cycles.len() - i) as u64).min((free_edges / 3) as u64);
            if optimistic <= self.best {
                return Ok(());
            }
            self.ticker.tick("odd cycle packing")?;
            let c = self.cycles[i];
            if used & c == 0 {
                self.dfs(i + 1, used | c, count + 1, free_edges - c.count_ones())?;
            }
            self.dfs(i + 1, used, count, free_edges)
        }
    }
    let mut packing = Packing {
        cycles: &cycles_by_edges,
        best: 0,
        ticker: Ticker::new(deadline),
    };
    packing.dfs(0, 0, 0, g.edge_count() as u32)?;
    Ok(packing.best)
}

/// Cubic exactness: on a 3-regular graph the frustration index equals twice
/// the odd cycle transversal number, and the mixed vertices of an optimal
/// orientation form a minimum transversal. Both sides are computed by
/// independent exact searches and the witness is validated.
pub fn cubic_exactness_check(g: &SimpleGraph) -> Result<bool> {
    cubic_exactness_check_with(g, &SearchLimits::default(), None)
}

pub fn cubic_exactness_check_with(
    g: &SimpleGraph,
    limits: &SearchLimits,
    deadline: Deadline,
) -> Result<bool> {
    if !g.is_regular(3) {
        return Err(AlgError::invalid(
            "cubic exactness requires a 3-regular graph",
        ));
    }
    let frustration = frustration_index_exact_with(g, limits, deadline)?;
    let oct = oct_exact_with(g, limits, deadline)?;
    if frustration.best_value != 2 * oct.oct_value as u64 {
        return Ok(false);
    }
    // mixed vertices of the optimal orientation: in- and out-degree both > 0
    let n = g.vertex_count();
    let mut indeg = vec![0u32; n];
    let mut outdeg = vec![0u32; n];
    for (e, &edge) in g.edges().iter().enumerate() {
        let (head, tail) = frustration.witness.head_tail(edge, e);
        indeg[head] += 1;
        outdeg[tail] += 1;
    }
    let mixed: Vec<bool> = (0..n).map(|v| indeg[v] > 0 && outdeg[v] > 0).collect();
    let mixed_count = mixed.iter().filter(|&&b| b).count();
    if mixed_count != oct.oct_value {
        return Ok(false);
    }
    Ok(is_bipartite_without_vertices(&g.adjacency(), &mixed))
}

/// Closed form for complete multipartite graphs: the frustration index is
/// the elementary symmetric sum `e3(n_1, ..., n_q)`.
pub fn complete_multipartite_closed_form(parts: &[usize]) -> Result<u64> {
    if parts.is_empty() {
        return Err(AlgError::invalid("part list must be nonempty"));
    }
    let mut e3 = 0u64;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for k in j + 1..parts.len() {
                e3 += (parts[i] * parts[j] * parts[k]) as u64;
            }
        }
    }
    Ok(e3)
}
