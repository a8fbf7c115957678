//! Deterministic graph families for tests and benchmarks.
//!
//! Random families take an explicit seed and use a fixed-algorithm generator
//! (ChaCha8), so the same seed yields the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Path on `n ≥ 1` vertices.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

/// `rows × cols` grid.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let at = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((at(r, c), at(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((at(r, c), at(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, edges).expect("grid edges are valid")
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("clique edges are valid")
}

/// Erdős–Rényi G(n, p): each pair independently an edge with probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("sampled edges are valid")
}

/// G(n, m): exactly `m` edges drawn uniformly among all pairs.
pub fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(m <= pairs.len(), "requested {m} edges but only {} pairs exist", pairs.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    Graph::new(n, pairs.into_iter().take(m)).expect("sampled edges are valid")
}

/// Connected graph with degeneracy exactly `k` (for `1 ≤ k < n`): a
/// `(k+1)`-clique seed, then each further vertex attaches to `k` distinct
/// random earlier vertices. Every vertex has at most `k` earlier neighbors
/// while the clique forces at least `k`.
pub fn k_degenerate(n: usize, k: usize, seed: u64) -> Graph {
    assert!(k >= 1 && k < n, "need 1 <= k < n");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    for v in k + 1..n {
        let mut earlier: Vec<usize> = (0..v).collect();
        earlier.shuffle(&mut rng);
        for &u in earlier.iter().take(k) {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("constructed edges are valid")
}

/// Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, edges).expect("fixed edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::degeneracy_ordering;

    #[test]
    fn shapes() {
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(grid(3, 4).vertex_count(), 12);
        assert_eq!(grid(3, 4).edge_count(), 17);
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().degree(0) == 3);
    }

    #[test]
    fn seeded_generators_are_deterministic() {
        assert_eq!(gnp(8, 0.4, 7), gnp(8, 0.4, 7));
        assert_eq!(gnm(9, 12, 3), gnm(9, 12, 3));
        assert_ne!(gnm(9, 12, 3), gnm(9, 12, 4));
        assert_eq!(gnm(9, 12, 3).edge_count(), 12);
        assert_eq!(k_degenerate(12, 3, 5), k_degenerate(12, 3, 5));
    }

    #[test]
    fn k_degenerate_hits_its_target() {
        for (n, k, seed) in [(8, 1, 0), (12, 2, 1), (15, 3, 2), (10, 4, 3)] {
            let g = k_degenerate(n, k, seed);
            assert_eq!(degeneracy_ordering(&g).degeneracy, k, "n={n} k={k}");
        }
    }

    #[test]
    fn grid_degeneracy_is_two() {
        assert_eq!(degeneracy_ordering(&grid(3, 3)).degeneracy, 2);
        assert_eq!(degeneracy_ordering(&grid(2, 7)).degeneracy, 2);
    }
}
