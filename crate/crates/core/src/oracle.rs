//! Brute-force reference enumerators and the primitive checkers they use.
//!
//! Everything here is deliberately naive — bitmask sweeps over all subsets,
//! breadth-first traversal and 2-coloring written from first principles — and
//! shares no traversal or coloring code with the fast enumerators, so the two
//! can honestly check each other. Sizes are capped: the sweeps are
//! exponential and exist only to verify.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

/// Canonical solution collection: sorted id lists, deduplicated and ordered.
pub type SolutionSet = BTreeSet<Vec<usize>>;

/// Refusals from the exhaustive sweeps.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph too large for exhaustive vertex sweep: {n} vertices (limit {limit})")]
    TooManyVertices { n: usize, limit: usize },
    #[error("graph too large for exhaustive edge sweep: {m} edges (limit {limit})")]
    TooManyEdges { m: usize, limit: usize },
}

/// Largest graph the exhaustive sweeps will accept.
pub const SUBSET_SWEEP_LIMIT: usize = 20;

/// True iff the subgraph induced by `verts` is connected. `verts` must be
/// non-empty and duplicate-free.
pub fn is_connected_vertex_subset(graph: &Graph, verts: &[usize]) -> bool {
    let mut member = vec![false; graph.vertex_count()];
    for &v in verts {
        member[v] = true;
    }
    let mut seen = vec![false; graph.vertex_count()];
    let mut queue = std::collections::VecDeque::from([verts[0]]);
    seen[verts[0]] = true;
    let mut reached = 0;
    while let Some(v) = queue.pop_front() {
        reached += 1;
        for &(w, _) in graph.neighbors(v) {
            if member[w] && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    reached == verts.len()
}

/// True iff the subgraph induced by `verts` has a proper 2-coloring.
pub fn is_bipartite_vertex_subset(graph: &Graph, verts: &[usize]) -> bool {
    let mut member = vec![false; graph.vertex_count()];
    for &v in verts {
        member[v] = true;
    }
    let mut color: Vec<Option<bool>> = vec![None; graph.vertex_count()];
    for &start in verts {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].expect("colored before queueing");
            for &(w, _) in graph.neighbors(v) {
                if !member[w] {
                    continue;
                }
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// True iff the subgraph `(V[F], F)` formed by the edge ids in `edge_ids`
/// is connected. `edge_ids` must be non-empty and duplicate-free.
pub fn is_connected_edge_subset(graph: &Graph, edge_ids: &[usize]) -> bool {
    let mut in_subset = vec![false; graph.edge_count()];
    let mut touched = BTreeSet::new();
    for &e in edge_ids {
        in_subset[e] = true;
        let (u, v) = graph.endpoints(e);
        touched.insert(u);
        touched.insert(v);
    }
    let start = graph.endpoints(edge_ids[0]).0;
    let mut seen = vec![false; graph.vertex_count()];
    seen[start] = true;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &(w, e) in graph.neighbors(v) {
            if in_subset[e] && !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == touched.len()
}

/// True iff the subgraph `(V[F], F)` has a proper 2-coloring using only the
/// selected edges.
pub fn is_bipartite_edge_subset(graph: &Graph, edge_ids: &[usize]) -> bool {
    let mut in_subset = vec![false; graph.edge_count()];
    for &e in edge_ids {
        in_subset[e] = true;
    }
    let mut color: Vec<Option<bool>> = vec![None; graph.vertex_count()];
    for &e in edge_ids {
        let (u, _) = graph.endpoints(e);
        if color[u].is_some() {
            continue;
        }
        color[u] = Some(false);
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].expect("colored before queueing");
            for &(w, f) in graph.neighbors(v) {
                if !in_subset[f] {
                    continue;
                }
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// All non-empty vertex sets whose induced subgraph is connected and
/// bipartite, by sweeping every one of the `2^n - 1` subsets.
pub fn brute_force_induced(graph: &Graph) -> Result<SolutionSet, OracleError> {
    let n = graph.vertex_count();
    if n > SUBSET_SWEEP_LIMIT {
        return Err(OracleError::TooManyVertices { n, limit: SUBSET_SWEEP_LIMIT });
    }
    let mut out = SolutionSet::new();
    for mask in 1u32..(1u32 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_connected_vertex_subset(graph, &verts) && is_bipartite_vertex_subset(graph, &verts) {
            out.insert(verts);
        }
    }
    Ok(out)
}

/// All non-empty edge sets whose subgraph is connected and bipartite, by
/// sweeping every one of the `2^m - 1` subsets.
pub fn brute_force_edge(graph: &Graph) -> Result<SolutionSet, OracleError> {
    let m = graph.edge_count();
    if m > SUBSET_SWEEP_LIMIT {
        return Err(OracleError::TooManyEdges { m, limit: SUBSET_SWEEP_LIMIT });
    }
    let mut out = SolutionSet::new();
    for mask in 1u32..(1u32 << m) {
        let edges: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        if is_connected_edge_subset(graph, &edges) && is_bipartite_edge_subset(graph, &edges) {
            out.insert(edges);
        }
    }
    Ok(out)
}
