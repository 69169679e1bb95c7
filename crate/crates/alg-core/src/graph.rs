//! Finite simple graphs with a canonical edge ordering, reference
//! orientations, and the oriented incidence matrix.
//!
//! Every edge is stored as `(u, v)` with `u < v` and the edge list is kept in
//! strictly increasing lexicographic order; that order is the canonical edge
//! index used everywhere else (signed line graphs, orientations, witnesses).
//! The reference orientation directs each edge `u -> v`; an [`Orientation`]
//! records a sign per edge relative to that reference (`-1` = reversed).

use serde::{Deserialize, Serialize};

use crate::error::{AlgError, Result};
use crate::matrix::DenseSymmetricMatrix;

/// Finite simple graph on vertices `0..n` with canonically ordered edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph from an arbitrary pair list. Pairs are normalized to
    /// `u < v`, sorted, and duplicates collapsed. When `n` is given it must
    /// cover every endpoint; otherwise the vertex count is `max endpoint + 1`
    /// (or 0 for an empty pair list).
    pub fn from_edge_list(pairs: &[(usize, usize)], n: Option<usize>) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        let mut max_end = None::<usize>;
        for &(a, b) in pairs {
            if a == b {
                return Err(AlgError::invalid(format!("self-loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            max_end = Some(max_end.map_or(e.1, |m: usize| m.max(e.1)));
            edges.push(e);
        }
        let n = match (n, max_end) {
            (Some(n), Some(m)) => {
                if m >= n {
                    return Err(AlgError::invalid(format!(
                        "endpoint {m} exceeds vertex count {n}"
                    )));
                }
                n
            }
            (Some(n), None) => n,
            (None, Some(m)) => m + 1,
            (None, None) => 0,
        };
        edges.sort_unstable();
        edges.dedup();
        Ok(SimpleGraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, lexicographically
    /// increasing.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Canonical index of edge `{a, b}`, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Edge indices incident to each vertex.
    pub fn incident_edges(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(i);
            inc[v].push(i);
        }
        inc
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.n > 0 && self.degrees().iter().all(|&d| d == k)
    }

    /// Component id per vertex plus the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().1 == 1
    }

    /// Number of connected components of the line graph: components of the
    /// base graph that carry at least one edge.
    pub fn line_graph_component_count(&self) -> usize {
        let (comp, count) = self.components();
        let mut has_edge = vec![false; count];
        for &(u, _) in &self.edges {
            has_edge[comp[u]] = true;
        }
        has_edge.into_iter().filter(|&b| b).count()
    }

    /// Proper 2-coloring if one exists (one color per vertex, `false`/`true`
    /// as sides; vertex of smallest index in each component gets `false`).
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let adj = self.adjacency();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Exact triangle count by sorted adjacency intersection: each triangle
    /// `{a < b < c}` is counted once at its lowest edge `(a, b)`.
    pub fn triangle_count(&self) -> u64 {
        let adj = self.adjacency();
        let mut count = 0u64;
        for &(u, v) in &self.edges {
            let (mut i, mut j) = (0, 0);
            let (au, av) = (&adj[u], &adj[v]);
            while i < au.len() && j < av.len() {
                match au[i].cmp(&av[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        if au[i] > v {
                            count += 1;
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        count
    }

    /// Line graph: vertex `i` of the result is the `i`-th canonical edge,
    /// with adjacency iff the edges share an endpoint.
    pub fn line_graph(&self) -> SimpleGraph {
        let m = self.edges.len();
        let inc = self.incident_edges();
        let mut pairs = Vec::new();
        for edges_at_v in &inc {
            for (a, &e) in edges_at_v.iter().enumerate() {
                for &f in &edges_at_v[a + 1..] {
                    pairs.push((e, f));
                }
            }
        }
        SimpleGraph::from_edge_list(&pairs, Some(m)).expect("edge indices are loop-free")
    }

    /// Laplacian `L = diag(degrees) - adjacency`; orientation-independent.
    pub fn laplacian(&self) -> DenseSymmetricMatrix {
        let deg = self.degrees();
        DenseSymmetricMatrix::from_fn(self.n, |i, j| {
            if i == j {
                deg[i] as f64
            } else if self.has_edge(i, j) {
                -1.0
            } else {
                0.0
            }
        })
    }

    /// Adjacency matrix as a symmetric dense matrix.
    pub fn adjacency_matrix(&self) -> DenseSymmetricMatrix {
        DenseSymmetricMatrix::from_fn(self.n, |i, j| {
            if i != j && self.has_edge(i, j) {
                1.0
            } else {
                0.0
            }
        })
    }

    /// Summary statistics used by reports and audits.
    pub fn basic_stats(&self) -> GraphStats {
        GraphStats {
            degrees: self.degrees(),
            triangle_count: self.triangle_count(),
            bipartite: self.is_bipartite(),
            components: self.components().1,
            line_graph_components: self.line_graph_component_count(),
        }
    }
}

/// Degree sequence, triangle count, bipartiteness, and component counts of a
/// graph and of its line graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub degrees: Vec<usize>,
    pub triangle_count: u64,
    pub bipartite: bool,
    pub components: usize,
    pub line_graph_components: usize,
}

/// Orientation of a graph relative to the canonical reference orientation
/// (`u -> v` for each edge `u < v`): `+1` keeps the reference direction,
/// `-1` reverses it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orientation {
    signs: Vec<i8>,
}

impl Orientation {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(AlgError::invalid("orientation signs must be +1 or -1"));
        }
        Ok(Orientation { signs })
    }

    /// All edges in the reference direction.
    pub fn reference(m: usize) -> Self {
        Orientation { signs: vec![1; m] }
    }

    /// Orientation from a bitmask over edge indices; a set bit reverses the
    /// edge. Only valid for `m <= 64`.
    pub fn from_mask(m: usize, mask: u64) -> Self {
        Orientation {
            signs: (0..m)
                .map(|e| if mask >> e & 1 == 1 { -1 } else { 1 })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, e: usize) -> i8 {
        self.signs[e]
    }

    /// New orientation with the listed edges reversed.
    pub fn reversed_on(&self, edges: &[usize]) -> Orientation {
        let mut signs = self.signs.clone();
        for &e in edges {
            signs[e] = -signs[e];
        }
        Orientation { signs }
    }

    /// Head and tail of edge `e = (u, v)`: `(v, u)` under the reference
    /// direction, swapped when the edge is reversed.
    pub fn head_tail(&self, edge: (usize, usize), e: usize) -> (usize, usize) {
        let (u, v) = edge;
        if self.signs[e] == 1 {
            (v, u)
        } else {
            (u, v)
        }
    }
}

/// Oriented incidence matrix: `n x m` with one `+1` (head) and one `-1`
/// (tail) per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    m: usize,
    entries: Vec<i64>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.m
    }

    pub fn get(&self, v: usize, e: usize) -> i64 {
        self.entries[v * self.m + e]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `D * x` for an integer edge vector.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.m);
        let mut out = vec![0i64; self.n];
        for (v, out_v) in out.iter_mut().enumerate() {
            for (e, &xe) in x.iter().enumerate() {
                *out_v += self.entries[v * self.m + e] * xe;
            }
        }
        out
    }

    /// `D^T * y` for a real vertex vector.
    pub fn transpose_apply(&self, y: &[f64]) -> Vec<f64> {
        assert_eq!(y.len(), self.n);
        let mut out = vec![0.0; self.m];
        for (v, &yv) in y.iter().enumerate() {
            if yv == 0.0 {
                continue;
            }
            for (e, out_e) in out.iter_mut().enumerate() {
                *out_e += self.entries[v * self.m + e] as f64 * yv;
            }
        }
        out
    }
}

/// Oriented incidence matrix of `g` under orientation `o`.
pub fn incidence_matrix(g: &SimpleGraph, o: &Orientation) -> Result<IncidenceMatrix> {
    if o.len() != g.edge_count() {
        return Err(AlgError::invalid(format!(
            "orientation length {} does not match edge count {}",
            o.len(),
            g.edge_count()
        )));
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    let mut entries = vec![0i64; n * m];
    for (e, &edge) in g.edges().iter().enumerate() {
        let (head, tail) = o.head_tail(edge, e);
        entries[head * m + e] = 1;
        entries[tail * m + e] = -1;
    }
    Ok(IncidenceMatrix { n, m, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> SimpleGraph {
        SimpleGraph::from_edge_list(&[(0, 1), (1, 2), (0, 2)], None).unwrap()
    }

    #[test]
    fn from_edge_list_canonicalizes() {
        let g = SimpleGraph::from_edge_list(&[(2, 1), (1, 0), (0, 2), (1, 2)], None).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.vertex_count(), 3);
    }

    #[test]
    fn from_edge_list_rejects_loops_and_bad_endpoints() {
        assert!(SimpleGraph::from_edge_list(&[(1, 1)], None).is_err());
        assert!(SimpleGraph::from_edge_list(&[(0, 3)], Some(3)).is_err());
    }

    #[test]
    fn edgeless_graph_keeps_vertices() {
        let g = SimpleGraph::from_edge_list(&[], Some(4)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.components().1, 4);
        assert_eq!(g.line_graph_component_count(), 0);
    }

    #[test]
    fn witness_graph_shape() {
        let g = SimpleGraph::from_edge_list(
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 4),
                (2, 3),
                (3, 4),
                (3, 5),
                (3, 6),
                (5, 6),
            ],
            None,
        )
        .unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 9);
        // degree multiset from a direct count over the edge list
        let mut degs = g.degrees();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![4, 3, 3, 2, 2, 2, 2]);
    }

    #[test]
    fn incidence_columns() {
        let k2 = SimpleGraph::from_edge_list(&[(0, 1)], None).unwrap();
        let d = incidence_matrix(&k2, &Orientation::new(vec![1]).unwrap()).unwrap();
        assert_eq!((d.get(0, 0), d.get(1, 0)), (-1, 1));
        let d = incidence_matrix(&k2, &Orientation::new(vec![-1]).unwrap()).unwrap();
        assert_eq!((d.get(0, 0), d.get(1, 0)), (1, -1));

        let p3 = SimpleGraph::from_edge_list(&[(0, 1), (1, 2)], None).unwrap();
        let d = incidence_matrix(&p3, &Orientation::reference(2)).unwrap();
        assert_eq!(d.entries(), &[-1, 0, 1, -1, 0, 1]);

        assert!(incidence_matrix(&p3, &Orientation::reference(3)).is_err());
    }

    #[test]
    fn laplacian_values() {
        let k2 = SimpleGraph::from_edge_list(&[(0, 1)], None).unwrap();
        let l = k2.laplacian();
        assert_eq!(
            [l.get(0, 0), l.get(0, 1), l.get(1, 0), l.get(1, 1)],
            [1.0, -1.0, -1.0, 1.0]
        );
        let l3 = k3().laplacian();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 2.0 } else { -1.0 };
                assert_eq!(l3.get(i, j), expect);
            }
        }
    }

    #[test]
    fn line_graph_small_cases() {
        let star = SimpleGraph::from_edge_list(&[(0, 1), (0, 2), (0, 3)], None).unwrap();
        assert_eq!(k3().line_graph(), k3());
        assert_eq!(star.line_graph(), k3());
        let p3 = SimpleGraph::from_edge_list(&[(0, 1), (1, 2)], None).unwrap();
        assert_eq!(
            p3.line_graph(),
            SimpleGraph::from_edge_list(&[(0, 1)], None).unwrap()
        );
    }

    #[test]
    fn stats_on_k4_and_c6() {
        let k4 =
            SimpleGraph::from_edge_list(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], None)
                .unwrap();
        let s = k4.basic_stats();
        assert_eq!(s.degrees, vec![3, 3, 3, 3]);
        assert_eq!(s.triangle_count, 4);
        assert!(!s.bipartite);

        let c6 =
            SimpleGraph::from_edge_list(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)], None)
                .unwrap();
        assert!(c6.basic_stats().bipartite);
    }

    #[test]
    fn orientation_head_tail() {
        let g = k3();
        let o = Orientation::new(vec![1, -1, 1]).unwrap();
        assert_eq!(o.head_tail(g.edges()[0], 0), (1, 0));
        assert_eq!(o.head_tail(g.edges()[1], 1), (0, 2));
    }
}
