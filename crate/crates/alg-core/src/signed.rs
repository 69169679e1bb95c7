//! Signed graphs, switching, and the antisymmetric line graph.
//!
//! The antisymmetric line graph of `g` is the signed graph on the edges of
//! `g` whose signed adjacency matrix is `D^T D - 2I` for an oriented
//! incidence matrix `D`. Two edges meeting at a vertex get sign `+1` when
//! they are coherently incident there (both enter or both leave) and `-1`
//! when one enters and the other leaves. Reorienting edges of `g` switches
//! the signed graph, so the construction is canonical up to switching.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::cycles;
use crate::error::{AlgError, Result};
use crate::graph::{Orientation, SimpleGraph};
use crate::matrix::DenseSymmetricMatrix;

/// A graph together with a `+1`/`-1` sign per edge (canonical edge order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedGraph {
    underlying: SimpleGraph,
    signs: Vec<i8>,
}

/// Vertex subset of a signed graph used for switching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchingSet(pub BitSet);

impl SwitchingSet {
    pub fn empty(n: usize) -> Self {
        SwitchingSet(BitSet::new(n))
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        SwitchingSet(BitSet::from_indices(n, indices))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(v)
    }
}

impl SignedGraph {
    pub fn new(underlying: SimpleGraph, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != underlying.edge_count() {
            return Err(AlgError::invalid(format!(
                "sign vector length {} does not match edge count {}",
                signs.len(),
                underlying.edge_count()
            )));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(AlgError::invalid("edge signs must be +1 or -1"));
        }
        Ok(SignedGraph { underlying, signs })
    }

    pub fn all_positive(underlying: SimpleGraph) -> Self {
        let signs = vec![1; underlying.edge_count()];
        SignedGraph { underlying, signs }
    }

    pub fn underlying(&self) -> &SimpleGraph {
        &self.underlying
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, e: usize) -> i8 {
        self.signs[e]
    }

    pub fn negative_edge_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == -1).count()
    }
}

/// Builds the antisymmetric line graph of `g` under orientation `o`. The
/// underlying graph is the line graph of `g`; signs are the off-diagonal
/// entries of `D^T D`.
pub fn build_alg(g: &SimpleGraph, o: &Orientation) -> Result<SignedGraph> {
    if o.len() != g.edge_count() {
        return Err(AlgError::invalid(format!(
            "orientation length {} does not match edge count {}",
            o.len(),
            g.edge_count()
        )));
    }
    let lg = g.line_graph();
    let heads: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &edge)| o.head_tail(edge, e).0)
        .collect();
    let incidence_at = |e: usize, v: usize| -> i8 {
        if heads[e] == v {
            1
        } else {
            -1
        }
    };
    let mut signs = Vec::with_capacity(lg.edge_count());
    for &(e, f) in lg.edges() {
        let (a, b) = g.edges()[e];
        let (c, d) = g.edges()[f];
        let shared = if a == c || a == d { a } else { b };
        debug_assert!(shared == c || shared == d);
        signs.push(incidence_at(e, shared) * incidence_at(f, shared));
    }
    SignedGraph::new(lg, signs)
}

/// Signed adjacency matrix: zero diagonal, `±1` at signed adjacencies.
pub fn signed_adjacency_matrix(s: &SignedGraph) -> DenseSymmetricMatrix {
    let g = s.underlying();
    let n = g.vertex_count();
    DenseSymmetricMatrix::from_fn(n, |i, j| {
        if i == j {
            return 0.0;
        }
        match g.edge_index(i, j) {
            Some(e) => s.sign(e) as f64,
            None => 0.0,
        }
    })
}

/// Same matrix with exact integer entries (row-major), for trace arithmetic.
pub(crate) fn signed_adjacency_int(s: &SignedGraph) -> (usize, Vec<i64>) {
    let g = s.underlying();
    let n = g.vertex_count();
    let mut entries = vec![0i64; n * n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        entries[u * n + v] = s.sign(e) as i64;
        entries[v * n + u] = s.sign(e) as i64;
    }
    (n, entries)
}

/// Switches `s` at the vertex set `F`: an edge sign flips iff exactly one
/// endpoint lies in `F`. Involution: switching twice by the same set is the
/// identity.
pub fn switch(s: &SignedGraph, f: &SwitchingSet) -> SignedGraph {
    let g = s.underlying();
    let signs = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            if f.contains(u) != f.contains(v) {
                -s.sign(e)
            } else {
                s.sign(e)
            }
        })
        .collect();
    SignedGraph {
        underlying: g.clone(),
        signs,
    }
}

/// Checks that reversing the edges `f_edges` of the orientation commutes
/// with switching the antisymmetric line graph at the same set (viewed as
/// vertices of the line graph). Always true; exposed as a testable check.
pub fn orientation_switch_consistency(
    g: &SimpleGraph,
    o: &Orientation,
    f_edges: &[usize],
) -> Result<bool> {
    if f_edges.iter().any(|&e| e >= g.edge_count()) {
        return Err(AlgError::invalid("edge index out of range"));
    }
    let reversed = build_alg(g, &o.reversed_on(f_edges))?;
    let base = build_alg(g, o)?;
    let switched = switch(&base, &SwitchingSet::from_indices(g.edge_count(), f_edges));
    Ok(reversed == switched)
}

/// Size of the switching class of the antisymmetric line graph:
/// `2^(m - c(L(g)))` as an exact integer.
pub fn switching_class_size(g: &SimpleGraph) -> BigUint {
    let exponent = g.edge_count() - g.line_graph_component_count();
    BigUint::from(1u8) << exponent
}

/// Sign of a cycle: the product of its edge signs. The input must be a
/// closed sequence of distinct vertices whose consecutive pairs are edges.
pub fn cycle_sign(s: &SignedGraph, cycle: &[usize]) -> Result<i8> {
    if cycle.len() < 3 {
        return Err(AlgError::invalid("a cycle needs at least 3 vertices"));
    }
    let mut seen = std::collections::HashSet::new();
    if !cycle.iter().all(|&v| seen.insert(v)) {
        return Err(AlgError::invalid("cycle vertices must be distinct"));
    }
    let g = s.underlying();
    let mut product = 1i8;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let e = g
            .edge_index(a, b)
            .ok_or_else(|| AlgError::invalid(format!("({a}, {b}) is not an edge")))?;
        product *= s.sign(e);
    }
    Ok(product)
}

/// Verifies cycle parity: every simple cycle of `g` of length `k <= 8`
/// lifts to a cycle of sign `(-1)^k` in the antisymmetric line graph.
pub fn lifted_cycle_parity_check(g: &SimpleGraph) -> Result<bool> {
    let alg = build_alg(g, &Orientation::reference(g.edge_count()))?;
    for cyc in cycles::simple_cycles_up_to(g, 8) {
        let k = cyc.len();
        // lift: the edge sequence of the cycle, as vertices of the line graph
        let lifted: Vec<usize> = (0..k)
            .map(|i| {
                g.edge_index(cyc[i], cyc[(i + 1) % k])
                    .expect("cycle edges exist")
            })
            .collect();
        let expect = if k % 2 == 0 { 1 } else { -1 };
        if cycle_sign(&alg, &lifted)? != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Switching normal form: a switching-equivalent signed graph in which the
/// BFS spanning forest (rooted at the smallest vertex of each component,
/// neighbors visited in ascending order) is all-positive, together with the
/// switching set that produces it. Deterministic.
pub fn switching_normal_form(s: &SignedGraph) -> (SignedGraph, SwitchingSet) {
    let g = s.underlying();
    let n = g.vertex_count();
    let adj = g.adjacency();
    // theta[v] in {+1,-1}: potential making tree edges positive after
    // switching at {v : theta[v] = -1}
    let mut theta: Vec<i8> = vec![0; n];
    for root in 0..n {
        if theta[root] != 0 {
            continue;
        }
        theta[root] = 1;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if theta[w] == 0 {
                    let e = g.edge_index(v, w).expect("adjacent");
                    theta[w] = theta[v] * s.sign(e);
                    queue.push_back(w);
                }
            }
        }
    }
    let set: Vec<usize> = (0..n).filter(|&v| theta[v] == -1).collect();
    let f = SwitchingSet::from_indices(n, &set);
    (switch(s, &f), f)
}

/// Balance test via the normal form: balanced iff the normal form has no
/// negative edge.
pub fn is_balanced(s: &SignedGraph) -> bool {
    switching_normal_form(s).0.negative_edge_count() == 0
}

/// Labeled switching equivalence: both graphs share the same labeled
/// underlying graph and their normal forms carry identical sign vectors.
pub fn switching_equivalent(s1: &SignedGraph, s2: &SignedGraph) -> Result<bool> {
    if s1.underlying() != s2.underlying() {
        return Err(AlgError::invalid(
            "switching equivalence requires the same labeled underlying graph",
        ));
    }
    Ok(switching_normal_form(s1).0.signs() == switching_normal_form(s2).0.signs())
}

/// Which root graph a signed triangle identifies under Whitney ambiguity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootKind {
    /// The 3-cycle sign is `-1`: the root is the triangle `K3`.
    TriangleRoot,
    /// The 3-cycle sign is `+1`: the root is the star `K_{1,3}`.
    StarRoot,
}

/// Resolves the Whitney pair for a signing of `K3`: triangle roots give a
/// negative 3-cycle, star roots a positive one. The sign is a switching
/// invariant, so the answer is stable across the switching class.
pub fn whitney_disambiguate(s: &SignedGraph) -> Result<RootKind> {
    let g = s.underlying();
    let is_k3 = g.vertex_count() == 3 && g.edges() == [(0, 1), (0, 2), (1, 2)];
    if !is_k3 {
        return Err(AlgError::invalid("underlying graph must be K3"));
    }
    match cycle_sign(s, &[0, 1, 2])? {
        -1 => Ok(RootKind::TriangleRoot),
        _ => Ok(RootKind::StarRoot),
    }
}

/// An induced cycle whose sign contradicts the `(-1)^k` parity law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSignViolation {
    pub cycle: Vec<usize>,
    pub sign: i8,
    pub expected: i8,
}

/// Audits induced cycles of length `4..=max_len` in the underlying graph:
/// any member of the switching class of an antisymmetric line graph must
/// give every induced k-cycle sign `(-1)^k`. Returns the violations.
pub fn audit_induced_cycle_signs(
    s: &SignedGraph,
    max_len: usize,
) -> Result<Vec<CycleSignViolation>> {
    if max_len < 4 {
        return Err(AlgError::invalid("audit requires max_len >= 4"));
    }
    let mut violations = Vec::new();
    for cyc in cycles::induced_cycles(s.underlying(), 4, max_len) {
        let k = cyc.len();
        let expected = if k % 2 == 0 { 1 } else { -1 };
        let sign = cycle_sign(s, &cyc)?;
        if sign != expected {
            violations.push(CycleSignViolation {
                cycle: cyc,
                sign,
                expected,
            });
        }
    }
    Ok(violations)
}
