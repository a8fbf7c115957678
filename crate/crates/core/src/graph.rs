//! Simple undirected graphs with stable vertex and edge ids.
//!
//! Vertices are `0..n`, edges are `0..m`. Edge ids follow the canonical order
//! of their endpoint pairs `(min, max)`, sorted lexicographically, so an edge
//! id comparison is the same thing as comparing endpoint pairs. Adjacency
//! lists are sorted by neighbor id and carry the incident edge id, which for a
//! fixed vertex is equivalent to being sorted by edge id.

use std::fmt::Write as _;

use thiserror::Error;

/// Errors from building a graph out of an explicit edge list.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {id} out of range (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
}

/// Errors from parsing textual graph formats. Line numbers are 1-based.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected two integer tokens, got {got}")]
    TokenCount { line: usize, got: usize },
    #[error("line {line}: invalid integer token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: unknown line kind {kind:?}")]
    UnknownLine { line: usize, kind: String },
    #[error("line {line}: malformed problem line")]
    BadHeader { line: usize },
    #[error("edge before problem line at line {line}")]
    EdgeBeforeHeader { line: usize },
    #[error("duplicate problem line at line {line}")]
    DuplicateHeader { line: usize },
    #[error("missing problem line")]
    MissingHeader,
}

/// An immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Per-vertex `(neighbor, edge id)`, sorted by neighbor.
    adjacency: Vec<Vec<(usize, usize)>>,
    /// Endpoint pairs with `u < v`, sorted lexicographically; index = edge id.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges collapse to one;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new(
        n: usize,
        edge_list: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for (u, v) in edge_list {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::VertexOutOfRange { id, n });
                }
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adjacency = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { n, adjacency, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `(neighbor, edge id)` pairs of `v`, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Endpoints of edge `e` as `(u, v)` with `u < v`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search_by_key(&v, |&(w, _)| w).is_ok()
    }

    /// Canonical edge-list serialization: one `u v` line per edge, sorted by
    /// `(u, v)`. Parsing this output again reproduces the same graph as long
    /// as every vertex has at least one incident edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").expect("string write");
        }
        out
    }

    /// Parses the whitespace edge-list format: two non-negative integers per
    /// line, `#` starts a comment line, blank lines are skipped. Vertex
    /// labels are arbitrary and get compacted to `0..n` in order of first
    /// appearance.
    pub fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
        Self::parse_edge_list_labeled(input).map(|(graph, _)| graph)
    }

    /// Like [`Graph::parse_edge_list`], but also returns the original label
    /// of every compacted vertex: `labels[i]` is the input token that became
    /// internal id `i`.
    pub fn parse_edge_list_labeled(input: &str) -> Result<(Graph, Vec<usize>), ParseError> {
        let mut labels: Vec<usize> = Vec::new();
        let mut compact = std::collections::HashMap::new();
        let mut intern = |label: usize| -> usize {
            *compact.entry(label).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            })
        };

        let mut edges = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line = idx + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = text.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(ParseError::TokenCount { line, got: tokens.len() });
            }
            let mut pair = [0usize; 2];
            for (slot, token) in pair.iter_mut().zip(&tokens) {
                *slot = token
                    .parse()
                    .map_err(|_| ParseError::BadToken { line, token: token.to_string() })?;
            }
            if pair[0] == pair[1] {
                return Err(ParseError::SelfLoop { line, vertex: pair[0] });
            }
            let u = intern(pair[0]);
            let v = intern(pair[1]);
            edges.push((u, v));
        }
        let n = labels.len();
        let graph = Graph::new(n, edges).expect("compacted ids are in range and loop-free");
        Ok((graph, labels))
    }

    /// Parses DIMACS format: a `p edge n m` problem line, `e u v` edge lines
    /// with 1-based vertex ids, `c` comment lines.
    pub fn parse_dimacs(input: &str) -> Result<Graph, ParseError> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line = idx + 1;
            let text = raw.trim();
            if text.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = text.split_whitespace().collect();
            match tokens[0] {
                "c" => continue,
                "p" => {
                    if n.is_some() {
                        return Err(ParseError::DuplicateHeader { line });
                    }
                    if tokens.len() != 4 || tokens[1] != "edge" {
                        return Err(ParseError::BadHeader { line });
                    }
                    let count: usize = tokens[2]
                        .parse()
                        .map_err(|_| ParseError::BadHeader { line })?;
                    // The declared edge count is not trusted; files routinely
                    // disagree with their own body.
                    tokens[3]
                        .parse::<usize>()
                        .map_err(|_| ParseError::BadHeader { line })?;
                    n = Some(count);
                }
                "e" => {
                    let n = n.ok_or(ParseError::EdgeBeforeHeader { line })?;
                    if tokens.len() != 3 {
                        return Err(ParseError::TokenCount { line, got: tokens.len() - 1 });
                    }
                    let mut pair = [0usize; 2];
                    for (slot, token) in pair.iter_mut().zip(&tokens[1..]) {
                        *slot = token
                            .parse()
                            .map_err(|_| ParseError::BadToken { line, token: token.to_string() })?;
                    }
                    for &vertex in &pair {
                        if vertex == 0 || vertex > n {
                            return Err(ParseError::VertexRange { line, vertex, n });
                        }
                    }
                    if pair[0] == pair[1] {
                        return Err(ParseError::SelfLoop { line, vertex: pair[0] });
                    }
                    edges.push((pair[0] - 1, pair[1] - 1));
                }
                kind => {
                    return Err(ParseError::UnknownLine { line, kind: kind.to_string() });
                }
            }
        }
        let n = n.ok_or(ParseError::MissingHeader)?;
        Ok(Graph::new(n, edges).expect("validated ids"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_sorted_edges_and_adjacency() {
        let g = Graph::new(4, [(2, 0), (3, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.neighbors(0), &[(1, 0), (2, 1)]);
        assert_eq!(g.neighbors(1), &[(0, 0), (3, 2)]);
        assert!(g.has_edge(1, 3));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn labeled_parse_reports_first_appearance_labels() {
        let (g, labels) = Graph::parse_edge_list_labeled("7 9\n9 3\n").unwrap();
        assert_eq!(labels, vec![7, 9, 3]);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn collapses_duplicates() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert_eq!(Graph::new(3, [(1, 1)]).unwrap_err(), GraphError::SelfLoop(1));
        assert_eq!(
            Graph::new(2, [(0, 5)]).unwrap_err(),
            GraphError::VertexOutOfRange { id: 5, n: 2 }
        );
    }

    #[test]
    fn edge_list_parse_compacts_by_first_appearance() {
        let g = Graph::parse_edge_list("# a path\n7 3\n3 10\n").unwrap();
        // 7 -> 0, 3 -> 1, 10 -> 2
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_parse_errors_carry_line_numbers() {
        assert_eq!(
            Graph::parse_edge_list("0 1\n1 2 3\n"),
            Err(ParseError::TokenCount { line: 2, got: 3 })
        );
        assert_eq!(
            Graph::parse_edge_list("0 1\n\n4 4\n"),
            Err(ParseError::SelfLoop { line: 3, vertex: 4 })
        );
        assert!(matches!(
            Graph::parse_edge_list("0 x\n"),
            Err(ParseError::BadToken { line: 1, .. })
        ));
    }

    #[test]
    fn dimacs_parse() {
        let g = Graph::parse_dimacs("c a triangle plus isolated vertex\np edge 4 3\ne 1 2\ne 2 3\ne 3 1\n")
            .unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn dimacs_parse_errors() {
        assert_eq!(
            Graph::parse_dimacs("e 1 2\n"),
            Err(ParseError::EdgeBeforeHeader { line: 1 })
        );
        assert_eq!(
            Graph::parse_dimacs("p edge 2 1\ne 1 5\n"),
            Err(ParseError::VertexRange { line: 2, vertex: 5, n: 2 })
        );
        assert_eq!(Graph::parse_dimacs("c nothing\n"), Err(ParseError::MissingHeader));
    }

    #[test]
    fn serialization_round_trips() {
        let g = Graph::parse_edge_list("5 1\n1 9\n9 5\n").unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "0 1\n0 2\n1 2\n");
        let again = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(again, Graph::parse_edge_list(&again.to_edge_list()).unwrap());
        assert_eq!(again.edges(), g.edges());
    }

    #[test]
    fn empty_input_is_the_empty_graph() {
        let g = Graph::parse_edge_list("").unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }
}
