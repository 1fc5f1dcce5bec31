//! Simple undirected graphs on the vertex set `0..n`.
//!
//! [`Graph`] is an immutable value: every edit (adding an edge, attaching a
//! path, relabeling) returns a new graph. Adjacency lists are kept sorted,
//! which makes equality, hashing and the canonical search deterministic.

mod canon;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use canon::{CanonicalCode, MAX_CANON_VERTICES};
pub use graph6::Graph6Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex subset must be nonempty")]
    EmptySubset,
    #[error("duplicate vertex {0} in subset")]
    DuplicateVertex(usize),
    #[error("canonical form supports at most {max} vertices, got {n}")]
    TooLargeForCanonical { n: usize, max: usize },
    #[error("permutation is not a bijection on 0..{0}")]
    InvalidPermutation(usize),
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Sorts and dedups raw (already symmetric, loop-free) adjacency lists.
    fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph { adj, m };
        debug_assert!(g.validate().is_ok(), "{:?}", g.validate());
        g
    }

    /// Checks the representation invariants: no loops, symmetry, strictly
    /// increasing neighbor lists and a consistent edge count.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.n();
        let mut total = 0;
        for (v, list) in self.adj.iter().enumerate() {
            total += list.len();
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(format!("adjacency of {v} not strictly increasing"));
                }
            }
            for &w in list {
                if w >= n {
                    return Err(format!("neighbor {w} of {v} out of range"));
                }
                if w == v {
                    return Err(format!("self-loop at {v}"));
                }
                if self.adj[w].binary_search(&v).is_err() {
                    return Err(format!("edge {v}-{w} not symmetric"));
                }
            }
        }
        if total != 2 * self.m {
            return Err(format!("edge count {} disagrees with degree sum {total}", self.m));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Sorted neighbor list of `v`. Panics when `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// True iff a traversal from vertex 0 reaches every vertex. The empty
    /// graph is reported as disconnected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        self.reachable_from(0, None) == n
    }

    /// Number of vertices reachable from `start`, optionally treating
    /// `removed` as deleted.
    pub(crate) fn reachable_from(&self, start: usize, removed: Option<usize>) -> usize {
        let mut seen = vec![false; self.n()];
        if let Some(r) = removed {
            seen[r] = true;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count
    }

    /// `G + ab`. Adding an existing edge returns an equal graph.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        self.edit(&[(a, b)], &[])
    }

    /// `G - ab`. Removing an absent edge returns an equal graph.
    pub fn without_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        self.edit(&[], &[(a, b)])
    }

    /// Removes then adds edges, returning the edited graph.
    pub fn edit(
        &self,
        add: &[(usize, usize)],
        remove: &[(usize, usize)],
    ) -> Result<Graph, GraphError> {
        let mut adj = self.adj.clone();
        for &(a, b) in remove {
            self.check_vertex(a)?;
            self.check_vertex(b)?;
            adj[a].retain(|&x| x != b);
            adj[b].retain(|&x| x != a);
        }
        for &(a, b) in add {
            self.check_vertex(a)?;
            self.check_vertex(b)?;
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Attaches a new path of `len` vertices to `v`. The new vertices are
    /// `n..n+len`; vertex `n` is adjacent to `v` and `n+len-1` is the leaf.
    pub fn attach_path(&self, v: usize, len: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let n = self.n();
        let mut adj = self.adj.clone();
        adj.resize(n + len, Vec::new());
        let mut prev = v;
        for x in n..n + len {
            adj[prev].push(x);
            adj[x].push(prev);
            prev = x;
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + off).collect()));
        Graph { adj, m: self.m + other.m }
    }

    /// Subgraph induced by `subset`; member `subset[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Graph, GraphError> {
        if subset.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in subset.iter().enumerate() {
            self.check_vertex(v)?;
            if pos[v] != usize::MAX {
                return Err(GraphError::DuplicateVertex(v));
            }
            pos[v] = i;
        }
        let adj = subset
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| pos[w] != usize::MAX)
                    .map(|&w| pos[w])
                    .collect()
            })
            .collect();
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        let mut hit = vec![false; n];
        if perm.len() != n {
            return Err(GraphError::InvalidPermutation(n));
        }
        for &p in perm {
            if p >= n || hit[p] {
                return Err(GraphError::InvalidPermutation(n));
            }
            hit[p] = true;
        }
        let mut adj = vec![Vec::new(); n];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&w| perm[w]).collect();
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Canonical isomorphism-class code (n <= 16).
    pub fn canonical_code(&self) -> Result<CanonicalCode, GraphError> {
        canon::canonical_code(self)
    }

    /// The canonically relabeled copy of this graph. Isomorphic graphs
    /// produce identical labeled graphs.
    pub fn canonical_form(&self) -> Result<Graph, GraphError> {
        let order = canon::canonical_order(self)?;
        let mut perm = vec![0; self.n()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        self.relabel(&perm)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool, GraphError> {
        if self.n() != other.n() || self.m() != other.m() {
            return Ok(false);
        }
        Ok(self.canonical_code()? == other.canonical_code()?)
    }

    pub fn to_graph6(&self) -> Result<String, Graph6Error> {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
        graph6::decode(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (a, b)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "])")
    }
}
