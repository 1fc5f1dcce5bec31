//! Canonical labeling by partition refinement and individualization.
//!
//! The search refines the ordered vertex partition to an equitable one,
//! individualizes a vertex of the first smallest non-singleton cell and
//! recurses; the code of each discrete leaf is the upper-triangle bit string
//! of the adjacency matrix under that ordering, and the minimum over leaves
//! is kept. Only one vertex per twin class is individualized at each node:
//! swapping two twins in the same cell is an automorphism fixing the rest
//! of the partition, so their subtrees produce the same leaf codes.

use std::fmt;

use super::{Graph, GraphError};

/// Largest vertex count accepted by the canonical search.
pub const MAX_CANON_VERTICES: usize = 16;

/// Isomorphism-class identifier. Ordered by vertex count, then by the
/// adjacency bit string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Byte form: the vertex count followed by the big-endian adjacency
    /// bits, left-aligned and zero-padded to whole bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let n = self.n();
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(8);
        let mut out = Vec::with_capacity(1 + nbytes);
        out.push(self.n);
        if nbits > 0 {
            let aligned = self.bits << (128 - nbits);
            out.extend_from_slice(&aligned.to_be_bytes()[..nbytes]);
        }
        out
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.to_bytes() {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    adj: &'a [u32],
    best: Option<(u128, Vec<usize>)>,
}

fn bitmask(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | (1 << w)))
        .collect()
}

fn leaf_code(adj: &[u32], order: &[usize]) -> u128 {
    let n = order.len();
    let mut code = 0u128;
    for i in 0..n {
        let row = adj[order[i]];
        for &w in &order[i + 1..] {
            code = (code << 1) | ((row >> w) & 1) as u128;
        }
    }
    code
}

/// Refines `cells` until every cell is equitable with respect to every
/// other cell. Fragments are ordered by neighbor count, so the result
/// depends only on the isomorphism type of the labeled partition.
fn refine(adj: &[u32], cells: &mut Cells) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s].iter().fold(0u32, |acc, &v| acc | (1 << v));
            let mut next: Cells = Vec::with_capacity(cells.len() + 1);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((adj[v] & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    changed = true;
                }
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

impl Search<'_> {
    fn twins(&self, a: usize, b: usize) -> bool {
        (self.adj[a] & !(1 << b)) == (self.adj[b] & !(1 << a))
    }

    fn run(&mut self, mut cells: Cells) {
        refine(self.adj, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = leaf_code(self.adj, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let mut reps: Vec<usize> = Vec::new();
        for &v in &cells[t] {
            if reps.iter().any(|&r| self.twins(r, v)) {
                continue;
            }
            reps.push(v);
            let mut branch = Vec::with_capacity(cells.len() + 1);
            branch.extend_from_slice(&cells[..t]);
            branch.push(vec![v]);
            branch.push(cells[t].iter().copied().filter(|&w| w != v).collect());
            branch.extend_from_slice(&cells[t + 1..]);
            self.run(branch);
        }
    }
}

fn search(g: &Graph) -> Result<(u128, Vec<usize>), GraphError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::TooLargeForCanonical { n, max: MAX_CANON_VERTICES });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let adj = bitmask(g);
    let mut s = Search { adj: &adj, best: None };
    s.run(vec![(0..n).collect()]);
    Ok(s.best.expect("search visits at least one leaf"))
}

pub(super) fn canonical_code(g: &Graph) -> Result<CanonicalCode, GraphError> {
    let (bits, _) = search(g)?;
    Ok(CanonicalCode { n: g.n() as u8, bits })
}

/// `order[pos]` is the vertex placed at position `pos` by the canonical
/// labeling.
pub(super) fn canonical_order(g: &Graph) -> Result<Vec<usize>, GraphError> {
    Ok(search(g)?.1)
}
