//! Structural analyzers: blocks and cut vertices, maximum matchings,
//! pendent paths and degree statistics.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("brute-force matching supports at most {max} edges, got {m}")]
    TooManyEdges { m: usize, max: usize },
}

/// Blocks (maximal 2-connected subgraphs or bridges) and articulation points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex sets, sorted lexicographically.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: BTreeSet<usize>,
}

struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    cuts: BTreeSet<usize>,
}

impl LowLink<'_> {
    fn dfs(&mut self, v: usize, parent: Option<usize>) {
        self.timer += 1;
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        let mut children = 0;
        for &w in self.g.neighbors(v) {
            if Some(w) == parent {
                continue;
            }
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push((v, w));
                self.dfs(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.cuts.insert(v);
                    }
                    let mut block = BTreeSet::new();
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block.into_iter().collect());
                }
            } else if self.disc[w] < self.disc[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

/// Biconnected components by DFS low-link.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    if g.n() == 1 {
        return Ok(BlockDecomposition { blocks: vec![vec![0]], cut_vertices: BTreeSet::new() });
    }
    let mut ll = LowLink {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        timer: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: BTreeSet::new(),
    };
    ll.dfs(0, None);
    let mut blocks = ll.blocks;
    blocks.sort();
    Ok(BlockDecomposition { blocks, cut_vertices: ll.cuts })
}

pub fn count_cut_vertices(g: &Graph) -> Result<usize, StructureError> {
    Ok(block_decomposition(g)?.cut_vertices.len())
}

/// Cut vertices by the deletion definition: removing `v` leaves the other
/// vertices disconnected.
pub fn count_cut_vertices_brute(g: &Graph) -> Result<usize, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let n = g.n();
    if n <= 2 {
        return Ok(0);
    }
    Ok((0..n)
        .filter(|&v| {
            let start = if v == 0 { 1 } else { 0 };
            g.reachable_from(start, Some(v)) < n - 1
        })
        .count())
}

/// A maximum matching and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    pub size: usize,
    /// Matched pairs `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let t = self.mate[to];
                    self.used[t] = true;
                    self.queue.push(t);
                }
            }
        }
        None
    }
}

/// Maximum matching by Edmonds' blossom algorithm.
pub fn matching_number(g: &Graph) -> MatchingResult {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: Vec::with_capacity(n),
    };
    // greedy start
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| b.mate[w] == NONE) {
                b.mate[v] = w;
                b.mate[w] = v;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NONE {
                let pv = b.parent[v];
                let next = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = next;
            }
        }
    }
    let edges: Vec<_> = (0..n).filter(|&v| b.mate[v] != NONE && v < b.mate[v]).map(|v| (v, b.mate[v])).collect();
    MatchingResult { size: edges.len(), edges }
}

pub const BRUTE_MATCHING_MAX_EDGES: usize = 24;

/// Matching number by include/exclude recursion over the edge list.
pub fn matching_number_brute(g: &Graph) -> Result<usize, StructureError> {
    let edges: Vec<_> = g.edges().collect();
    if edges.len() > BRUTE_MATCHING_MAX_EDGES {
        return Err(StructureError::TooManyEdges { m: edges.len(), max: BRUTE_MATCHING_MAX_EDGES });
    }
    fn best(edges: &[(usize, usize)], used: &mut [bool]) -> usize {
        let Some((i, &(a, b))) = edges.iter().enumerate().find(|(_, &(a, b))| !used[a] && !used[b])
        else {
            return 0;
        };
        let rest = &edges[i + 1..];
        used[a] = true;
        used[b] = true;
        let take = 1 + best(rest, used);
        used[a] = false;
        used[b] = false;
        take.max(best(rest, used))
    }
    Ok(best(&edges, &mut vec![false; g.n()]))
}

/// A maximal path of degree ≤ 2 vertices ending in a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendentPath {
    /// First vertex of degree ≥ 3 beyond the path; `None` when the whole
    /// graph is a path.
    pub anchor: Option<usize>,
    /// Path vertices from the leaf inward.
    pub vertices: Vec<usize>,
}

impl PendentPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// All pendent paths, one per leaf, ordered by leaf. A path graph yields a
/// single entry without an anchor, walked from its lower-numbered leaf.
pub fn pendent_paths(g: &Graph) -> Vec<PendentPath> {
    let mut out = Vec::new();
    for leaf in (0..g.n()).filter(|&v| g.neighbors(v).len() == 1) {
        let mut vertices = vec![leaf];
        let mut prev = leaf;
        let mut cur = g.neighbors(leaf)[0];
        while g.neighbors(cur).len() == 2 {
            vertices.push(cur);
            let nb = g.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        if g.neighbors(cur).len() == 1 {
            if leaf < cur {
                vertices.push(cur);
                out.push(PendentPath { anchor: None, vertices });
            }
        } else {
            out.push(PendentPath { anchor: Some(cur), vertices });
        }
    }
    out
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.neighbors(v).len()).max().unwrap_or(0)
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.neighbors(v).len()).min().unwrap_or(0)
}

pub fn is_regular(g: &Graph) -> bool {
    max_degree(g) == min_degree(g)
}
