//! Degeneracy ordering by iterated minimum-degree peeling.
//!
//! Repeatedly remove a vertex of minimum degree in the remaining graph,
//! breaking ties toward the smallest original id. The position at which a
//! vertex is removed is its rank; the largest minimum degree seen at any
//! removal is the graph's degeneracy `k`. In the ranked graph every vertex
//! has at most `k` neighbors with larger rank — the property the enumerators'
//! cost bounds lean on.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Result of peeling: a rank permutation plus the degeneracy it certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    /// `rank[v]` = removal position of original vertex `v` (0-based).
    pub rank: Vec<usize>,
    /// Degeneracy: max over removals of the removed vertex's residual degree.
    pub degeneracy: usize,
}

/// Computes the ordering by min-degree peeling with smallest-id tie-breaks.
pub fn degeneracy_ordering(graph: &Graph) -> DegeneracyOrdering {
    let n = graph.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    // Ordered by (degree, id): `first()` is the min-degree vertex with the
    // smallest id, and degree updates are O(log n) delete/insert pairs.
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut rank = vec![0usize; n];
    let mut degeneracy = 0;

    for position in 0..n {
        let &(d, v) = queue.first().expect("one entry per unremoved vertex");
        queue.remove(&(d, v));
        removed[v] = true;
        rank[v] = position;
        degeneracy = degeneracy.max(d);
        for &(w, _) in graph.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }

    DegeneracyOrdering { rank, degeneracy }
}

impl DegeneracyOrdering {
    /// Rewrites the graph so vertex ids coincide with ranks. The relabeled
    /// graph is the one the enumerators run on; callers translate emitted ids
    /// back through `rank` if they need original labels.
    pub fn relabel(&self, graph: &Graph) -> Graph {
        let edges = graph
            .edges()
            .iter()
            .map(|&(u, v)| (self.rank[u], self.rank[v]));
        Graph::new(graph.vertex_count(), edges).expect("permuting a valid graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).unwrap()
    }

    /// Independent re-derivation of the degeneracy value (no ordering, no
    /// tie-break subtleties): repeatedly delete any min-degree vertex from an
    /// adjacency-set copy and track the maximum residual degree.
    fn naive_degeneracy(graph: &Graph) -> usize {
        let n = graph.vertex_count();
        let mut adj: Vec<std::collections::HashSet<usize>> = (0..n)
            .map(|v| graph.neighbors(v).iter().map(|&(w, _)| w).collect())
            .collect();
        let mut alive: Vec<usize> = (0..n).collect();
        let mut k = 0;
        while let Some(pos) = alive
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| adj[v].len())
            .map(|(pos, _)| pos)
        {
            let v = alive.swap_remove(pos);
            k = k.max(adj[v].len());
            let neighbors: Vec<usize> = adj[v].iter().copied().collect();
            for w in neighbors {
                adj[w].remove(&v);
            }
            adj[v].clear();
        }
        k
    }

    #[test]
    fn path_has_degeneracy_one() {
        assert_eq!(degeneracy_ordering(&path(4)).degeneracy, 1);
        assert_eq!(degeneracy_ordering(&path(9)).degeneracy, 1);
    }

    #[test]
    fn cycle_has_degeneracy_two() {
        assert_eq!(degeneracy_ordering(&cycle(6)).degeneracy, 2);
    }

    #[test]
    fn complete_graph_has_degeneracy_n_minus_one() {
        assert_eq!(degeneracy_ordering(&complete(5)).degeneracy, 4);
    }

    #[test]
    fn petersen_has_degeneracy_three() {
        // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        let g = Graph::new(10, edges).unwrap();
        let ord = degeneracy_ordering(&g);
        assert_eq!(ord.degeneracy, 3);
        assert_eq!(ord.degeneracy, naive_degeneracy(&g));
    }

    #[test]
    fn star_peeling_ranks() {
        // Leaves 1, 2, 3 peel first (degree 1, smallest id). Then the
        // center and leaf 4 tie at degree 1 and the center's smaller id
        // wins, so it ranks second-to-last.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let ord = degeneracy_ordering(&g);
        assert_eq!(ord.rank, vec![3, 0, 1, 2, 4]);
        assert_eq!(ord.degeneracy, 1);
    }

    #[test]
    fn path3_tie_breaks_toward_small_ids() {
        // P3 = 0 - 1 - 2. Both leaves have degree 1; vertex 0 goes first.
        // After it is gone, vertices 1 and 2 both have degree 1 and vertex 1
        // wins the tie, so the ranks are 0, 1, 2 in original id order.
        let ord = degeneracy_ordering(&path(3));
        assert_eq!(ord.rank, vec![0, 1, 2]);
    }

    #[test]
    fn relabel_matches_rank_permutation() {
        // Star with center 0: leaves 1, 2 peel first, then the center wins
        // the final degree-1 tie against leaf 3, giving ranks [2, 0, 1, 3].
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let ord = degeneracy_ordering(&g);
        assert_eq!(ord.rank, vec![2, 0, 1, 3]);
        let relabeled = ord.relabel(&g);
        assert_eq!(relabeled.edges(), &[(0, 2), (1, 2), (2, 3)]);
        // Every vertex has at most `degeneracy` larger-ranked neighbors.
        for v in 0..relabeled.vertex_count() {
            let larger = relabeled.neighbors(v).iter().filter(|&&(w, _)| w > v).count();
            assert!(larger <= ord.degeneracy);
        }
    }

    #[test]
    fn relabel_of_identity_permutation_is_noop() {
        let g = path(3);
        let ord = degeneracy_ordering(&g);
        assert_eq!(ord.relabel(&g), g);
    }

    #[test]
    fn matches_naive_on_varied_graphs() {
        for g in [path(7), cycle(8), complete(6)] {
            assert_eq!(degeneracy_ordering(&g).degeneracy, naive_degeneracy(&g));
        }
    }
}
