//! Simple-cycle and induced-cycle enumeration by DFS with smallest-vertex
//! anchoring. Each cycle is reported exactly once, as a vertex sequence
//! starting at its smallest vertex with the second vertex smaller than the
//! last.

use crate::graph::SimpleGraph;

/// All simple cycles of `g` with length in `3..=max_len`.
pub fn simple_cycles_up_to(g: &SimpleGraph, max_len: usize) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];

    fn extend(
        adj: &[Vec<usize>],
        anchor: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w == anchor && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if w <= anchor || on_path[w] || path.len() >= max_len {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            extend(adj, anchor, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }

    if max_len < 3 {
        return out;
    }
    for anchor in 0..n {
        path.clear();
        path.push(anchor);
        on_path[anchor] = true;
        extend(&adj, anchor, max_len, &mut path, &mut on_path, &mut out);
        on_path[anchor] = false;
    }
    out
}

/// All induced cycles of `g` with length in `min_len..=max_len`. A cycle is
/// induced when its only adjacencies are the consecutive ones, i.e. it has
/// no chord.
pub fn induced_cycles(g: &SimpleGraph, min_len: usize, max_len: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut adj_set = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj_set[u][v] = true;
        adj_set[v][u] = true;
    }
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];

    // Path invariant: `path` is an induced path anchored at its smallest
    // vertex. An extension w may only touch the last vertex; touching the
    // anchor as well closes an induced cycle.
    #[allow(clippy::too_many_arguments)]
    fn extend(
        adj: &[Vec<usize>],
        adj_set: &[Vec<bool>],
        anchor: usize,
        min_len: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w <= anchor || on_path[w] {
                continue;
            }
            if path.len() == 1 {
                // choosing the second vertex: nothing to close or chord yet
                path.push(w);
                on_path[w] = true;
                extend(adj, adj_set, anchor, min_len, max_len, path, on_path, out);
                on_path[w] = false;
                path.pop();
                continue;
            }
            // chord test against interior path vertices (everything except
            // the anchor and the last vertex)
            if path[1..path.len() - 1].iter().any(|&x| adj_set[w][x]) {
                continue;
            }
            let closes = adj_set[w][anchor];
            if closes && path[1] < w {
                let len = path.len() + 1;
                if len >= min_len && len <= max_len {
                    let mut cyc = path.clone();
                    cyc.push(w);
                    out.push(cyc);
                }
            }
            if !closes && path.len() < max_len - 1 {
                path.push(w);
                on_path[w] = true;
                extend(adj, adj_set, anchor, min_len, max_len, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    if max_len < 3 {
        return out;
    }
    for anchor in 0..n {
        path.clear();
        path.push(anchor);
        on_path[anchor] = true;
        extend(
            &adj,
            &adj_set,
            anchor,
            min_len.max(3),
            max_len,
            &mut path,
            &mut on_path,
            &mut out,
        );
        on_path[anchor] = false;
    }
    out
}

/// An odd cycle in the subgraph induced by the non-removed vertices, found
/// by BFS 2-coloring: a same-layer edge closes an odd cycle through the
/// BFS root.
pub(crate) fn odd_cycle_in_subgraph(adj: &[Vec<usize>], removed: &[bool]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if removed[root] || dist[root] != usize::MAX {
            continue;
        }
        dist[root] = 0;
        let mut q = std::collections::VecDeque::from([root]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if removed[y] {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if dist[y] % 2 == dist[x] % 2 && y != x {
                    return Some(splice_paths(&parent, x, y));
                }
            }
        }
    }
    None
}

/// A shortest odd cycle of `g`, if any, as a vertex sequence.
pub fn shortest_odd_cycle(g: &SimpleGraph) -> Option<Vec<usize>> {
    // BFS layering from each vertex; an edge inside a layer closes an odd
    // cycle through the BFS root.
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut q = std::collections::VecDeque::from([root]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if dist[y] == dist[x] && x < y {
                    // odd closed walk through root; extract the cycle part
                    let cycle = splice_paths(&parent, x, y);
                    if cycle.len() % 2 == 1 && best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

/// Joins root->x and root->y parent paths at their last common vertex,
/// yielding the simple cycle x .. lca .. y, x.
fn splice_paths(parent: &[usize], x: usize, y: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let px = path_to_root(x);
    let py = path_to_root(y);
    // find deepest common suffix element
    let mut i = px.len();
    let mut j = py.len();
    while i > 0 && j > 0 && px[i - 1] == py[j - 1] {
        i -= 1;
        j -= 1;
    }
    // cycle: x .. lca .. y (lca is px[i] == py[j])
    let mut cycle: Vec<usize> = px[..=i].to_vec();
    cycle.extend(py[..j].iter().rev());
    cycle
}
