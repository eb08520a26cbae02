//! Labeled simple graphs on the vertex set `1..=n`.
//!
//! Edges are stored as sorted pairs `(u, v)` with `u < v`. The canonical edge
//! order (lexicographic on the sorted pair) fixes the edge-variable indexing
//! `t1..tq` used by every toric construction downstream.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::lattice::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}, column {column}: malformed header, expected `graph <n>`")]
    MalformedHeader { line: usize, column: usize },
    #[error("line {line}, column {column}: malformed edge line, expected `<u> <v>`")]
    MalformedEdge { line: usize, column: usize },
    #[error("line {line}, column {column}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange {
        line: usize,
        column: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}, column {column}: self-loop at vertex {vertex}")]
    SelfLoop {
        line: usize,
        column: usize,
        vertex: usize,
    },
    #[error("line {line}, column {column}: DuplicateEdge {{{u}, {v}}}")]
    DuplicateEdge {
        line: usize,
        column: usize,
        u: usize,
        v: usize,
    },
    #[error("missing `graph <n>` header")]
    MissingHeader,
    #[error("vertex count mismatch: {0} vs {1}")]
    VertexCountMismatch(usize, usize),
    #[error("invalid edge {{{0}, {1}}} for a simple graph on {2} vertices")]
    InvalidEdge(usize, usize, usize),
}

impl GraphError {
    /// Source line of a parse error, if any.
    pub fn line(&self) -> Option<usize> {
        match *self {
            GraphError::MalformedHeader { line, .. }
            | GraphError::MalformedEdge { line, .. }
            | GraphError::VertexOutOfRange { line, .. }
            | GraphError::SelfLoop { line, .. }
            | GraphError::DuplicateEdge { line, .. } => Some(line),
            _ => None,
        }
    }
}

/// A labeled simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// `k` has neighbors `i` and `j` that are not adjacent to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NonCliqueWitness {
    pub k: usize,
    pub i: usize,
    pub j: usize,
}

/// A simple cycle `v0, v1, ..., v_{r-1}` (closing edge back to `v0` implied),
/// stored in canonical form: least vertex first, then the smaller of its two
/// cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Builds a cycle from a closed vertex sequence (without repeating `v0`),
    /// checking adjacency in `g`, and canonicalizes it.
    pub fn new(g: &Graph, vertices: &[usize]) -> Option<Cycle> {
        let r = vertices.len();
        if r < 3 {
            return None;
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != r {
            return None;
        }
        for idx in 0..r {
            if !g.has_edge(vertices[idx], vertices[(idx + 1) % r]) {
                return None;
            }
        }
        Some(Cycle::canonical(vertices))
    }

    fn canonical(vertices: &[usize]) -> Cycle {
        let r = vertices.len();
        let start = (0..r).min_by_key(|&i| vertices[i]).unwrap();
        let next = vertices[(start + 1) % r];
        let prev = vertices[(start + r - 1) % r];
        let out = if next < prev {
            (0..r).map(|k| vertices[(start + k) % r]).collect()
        } else {
            (0..r).map(|k| vertices[(start + r - k) % r]).collect()
        };
        Cycle { vertices: out }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges along the canonical traversal, `{v0,v1}, {v1,v2}, ..., {v_{r-1},v0}`,
    /// each as a sorted pair.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let r = self.vertices.len();
        (0..r)
            .map(|i| sorted_pair(self.vertices[i], self.vertices[(i + 1) % r]))
            .collect()
    }
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and duplicates (in either orientation).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n || !set.insert(sorted_pair(a, b)) {
                return Err(GraphError::InvalidEdge(a, b, n));
            }
        }
        Ok(Graph { n, edges: set })
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = BTreeSet::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.insert((u, v));
            }
        }
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Graph {
        Graph {
            n,
            edges: (1..n).map(|u| (u, u + 1)).collect(),
        }
    }

    /// Cycle `1 - 2 - ... - n - 1`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.edges.insert((1, n));
        g
    }

    /// Complete bipartite graph with parts `1..=m` and `m+1..=m+k`.
    pub fn complete_bipartite(m: usize, k: usize) -> Graph {
        let mut edges = BTreeSet::new();
        for u in 1..=m {
            for v in m + 1..=m + k {
                edges.insert((u, v));
            }
        }
        Graph { n: m + k, edges }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    /// Number of unordered vertex pairs on `n` vertices, i.e. bits in an edge mask.
    pub fn pair_count(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    /// Graph whose edge set is selected by the bits of `mask`, bit `b`
    /// standing for the `b`-th pair in lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        let mut edges = BTreeSet::new();
        let mut bit = 0;
        for u in 1..=n {
            for v in u + 1..=n {
                if mask >> bit & 1 == 1 {
                    edges.insert((u, v));
                }
                bit += 1;
            }
        }
        Graph { n, edges }
    }

    pub fn edge_mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if self.edges.contains(&(u, v)) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&sorted_pair(u, v))
    }

    /// Zero-based position of an edge in the canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = sorted_pair(u, v);
        if !self.edges.contains(&e) {
            return None;
        }
        Some(self.edges.range(..e).count())
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// Maximal connected vertex sets, each sorted, blocks ordered by least element.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 1..=self.n {
            let root = find(&mut parent, v);
            blocks.entry(root).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
        out.sort_by_key(|b| b[0]);
        out
    }

    /// `true` when every vertex neighborhood induces a complete subgraph;
    /// otherwise the witness with smallest `k`, then smallest `(i, j)`.
    ///
    /// Cross-checks against the equivalent criterion that every connected
    /// component is a clique and panics if the two disagree.
    pub fn is_locally_complete(&self) -> Result<(), NonCliqueWitness> {
        let mut witness = None;
        'outer: for k in 1..=self.n {
            let nbrs = self.neighbors(k);
            for (a, &i) in nbrs.iter().enumerate() {
                for &j in &nbrs[a + 1..] {
                    if !self.has_edge(i, j) {
                        witness = Some(NonCliqueWitness { k, i, j });
                        break 'outer;
                    }
                }
            }
        }
        let components_complete = self.components_are_cliques();
        assert_eq!(
            witness.is_none(),
            components_complete,
            "neighborhood and component-clique criteria disagree on {self}"
        );
        match witness {
            None => Ok(()),
            Some(w) => Err(w),
        }
    }

    /// Every connected component induces a complete subgraph.
    pub fn components_are_cliques(&self) -> bool {
        self.connected_components().iter().all(|block| {
            block
                .iter()
                .enumerate()
                .all(|(a, &u)| block[a + 1..].iter().all(|&v| self.has_edge(u, v)))
        })
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.n + 1];
        for s in 1..=self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if !self.edges.contains(&(u, v)) {
                    edges.insert((u, v));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    pub fn edge_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        if self.n != other.n {
            return Err(GraphError::VertexCountMismatch(self.n, other.n));
        }
        Ok(Graph {
            n: self.n,
            edges: self.edges.union(&other.edges).copied().collect(),
        })
    }

    /// Restriction to non-isolated vertices with order-preserving relabeling.
    /// The returned map sends old labels to new ones.
    pub fn remove_isolated(&self) -> (Graph, BTreeMap<usize, usize>) {
        let kept: Vec<usize> = (1..=self.n).filter(|&v| self.degree(v) > 0).collect();
        let map: BTreeMap<usize, usize> = kept
            .iter()
            .enumerate()
            .map(|(idx, &old)| (old, idx + 1))
            .collect();
        let edges = self.edges.iter().map(|(u, v)| (map[u], map[v])).collect();
        (
            Graph {
                n: kept.len(),
                edges,
            },
            map,
        )
    }

    /// Subgraph induced on `vertices`, relabeled `1..=len` in sorted order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        let pos = |v: usize| sorted.binary_search(&v).ok().map(|p| p + 1);
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((pos(u)?, pos(v)?)))
            .collect();
        Graph {
            n: sorted.len(),
            edges,
        }
    }

    /// All simple cycles of even length `<= max_len`, once each, in canonical form.
    pub fn enumerate_even_cycles(&self, max_len: usize) -> Vec<Cycle> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.n + 1];
        for s in 1..=self.n {
            path.push(s);
            on_path[s] = true;
            self.extend_cycles(s, max_len, &mut path, &mut on_path, &mut out);
            on_path[s] = false;
            path.pop();
        }
        out.sort();
        out
    }

    fn extend_cycles(
        &self,
        start: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Cycle>,
    ) {
        let last = *path.last().unwrap();
        for w in self.neighbors(last) {
            if w == start && path.len() >= 3 && path.len().is_multiple_of(2) && path[1] < last {
                out.push(Cycle {
                    vertices: path.clone(),
                });
            }
            if w > start && !on_path[w] && path.len() < max_len {
                path.push(w);
                on_path[w] = true;
                self.extend_cycles(start, max_len, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    /// Vertex-edge incidence matrix, `n` rows by `q` columns in canonical edge order.
    pub fn incidence_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.n, self.edges.len());
        for (col, &(u, v)) in self.edges.iter().enumerate() {
            m.set(u - 1, col, 1);
            m.set(v - 1, col, 1);
        }
        m
    }

    /// Parses the edge-list format: a `graph <n>` header followed by `<u> <v>`
    /// lines. `#` starts a comment line and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut n = None;
        let mut edges = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let indent = raw.len() - trimmed.len();
            let tokens = tokens_with_columns(raw);
            let Some(n) = n else {
                match tokens.as_slice() {
                    [(_, "graph"), (col, count)] => {
                        let count = count
                            .parse::<usize>()
                            .map_err(|_| GraphError::MalformedHeader { line, column: *col })?;
                        n = Some(count);
                        continue;
                    }
                    _ => {
                        return Err(GraphError::MalformedHeader {
                            line,
                            column: indent + 1,
                        })
                    }
                }
            };
            let [(cu, su), (cv, sv)] = tokens.as_slice() else {
                return Err(GraphError::MalformedEdge {
                    line,
                    column: tokens.get(2).map_or(indent + 1, |t| t.0),
                });
            };
            let parse_vertex = |col: usize, s: &str| -> Result<usize, GraphError> {
                let vertex = s
                    .parse::<usize>()
                    .map_err(|_| GraphError::MalformedEdge { line, column: col })?;
                if vertex == 0 || vertex > n {
                    return Err(GraphError::VertexOutOfRange {
                        line,
                        column: col,
                        vertex,
                        n,
                    });
                }
                Ok(vertex)
            };
            let u = parse_vertex(*cu, su)?;
            let v = parse_vertex(*cv, sv)?;
            if u == v {
                return Err(GraphError::SelfLoop {
                    line,
                    column: *cv,
                    vertex: u,
                });
            }
            if !edges.insert(sorted_pair(u, v)) {
                return Err(GraphError::DuplicateEdge {
                    line,
                    column: *cu,
                    u,
                    v,
                });
            }
        }
        let n = n.ok_or(GraphError::MissingHeader)?;
        Ok(Graph { n, edges })
    }
}

/// Whitespace-separated tokens with their 1-based byte columns.
fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(pos),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..pos]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {}", self.n)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse(s)
    }
}
