//! Graph rewritings that move edges while keeping the graph class.
//!
//! * [`shift_neighbors`]: `G' = G − {vw : w ∈ N} + {uw : w ∈ N}`.
//! * [`pendent_swap`] / [`rebalance_pendent_paths`]: turn `G_{p,s,q}(u,v)`
//!   into `G_{p−1,s,q+1}(u,v)` by exchanging path segments.
//! * [`split_pendent_path`]: replace a pendent path of length `p` at `v` by
//!   two pendent paths of lengths 2 and `p − 2`.
//!
//! None of these compute spectra; the verification harness pairs them with
//! the eigensolver.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::families::{FamilyError, PendantPathGraph};
use crate::graph::{Graph, GraphError, MAX_CANON_VERTICES};
use crate::structure::matching_number;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("result is disconnected")]
    Disconnected,
    #[error("rebalanced graph is not isomorphic to the direct construction")]
    NotIsomorphic,
    #[error("matching number changed from {before} to {after}")]
    MatchingChanged { before: usize, after: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

fn precondition<T>(msg: impl Into<String>) -> Result<T, TransformError> {
    Err(TransformError::Precondition(msg.into()))
}

/// Moves the edges from `v` to each vertex of `moved` over to `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSpec {
    pub v: usize,
    pub u: usize,
    pub moved: BTreeSet<usize>,
}

impl ShiftSpec {
    pub fn new(v: usize, u: usize, moved: impl IntoIterator<Item = usize>) -> Self {
        ShiftSpec { v, u, moved: moved.into_iter().collect() }
    }

    /// Checks `∅ ≠ N ⊆ N(v) ∖ (N(u) ∪ {u})` and `u ≠ v`.
    pub fn check(&self, g: &Graph) -> Result<(), TransformError> {
        let n = g.n();
        if self.u >= n || self.v >= n {
            return precondition(format!("u={} or v={} out of range", self.u, self.v));
        }
        if self.u == self.v {
            return precondition("u and v must differ");
        }
        if self.moved.is_empty() {
            return precondition("moved set is empty");
        }
        for &w in &self.moved {
            if w == self.u {
                return precondition(format!("{w} is u itself"));
            }
            if !g.has_edge(self.v, w) {
                return precondition(format!("{w} is not a neighbor of v={}", self.v));
            }
            if g.has_edge(self.u, w) {
                return precondition(format!("{w} is already a neighbor of u={}", self.u));
            }
        }
        Ok(())
    }
}

pub fn shift_neighbors(g: &Graph, spec: &ShiftSpec) -> Result<Graph, TransformError> {
    if !g.is_connected() {
        return precondition("input graph must be connected");
    }
    spec.check(g)?;
    let remove: Vec<_> = spec.moved.iter().map(|&w| (spec.v, w)).collect();
    let add: Vec<_> = spec.moved.iter().map(|&w| (spec.u, w)).collect();
    let out = g.edit(&add, &remove)?;
    if !out.is_connected() {
        return Err(TransformError::Disconnected);
    }
    Ok(out)
}

/// The segment exchange `G_i` for `1 ≤ i ≤ q + 1` (with `v_{q+1} = v`):
///
/// * `i = 1`: `G − u_1u_2 + v_1u_1`;
/// * `i ≥ 2`: `G − v_{i−1}v_i − u_iu_{i+1} + v_{i−1}u_{i+1} + v_iu_i`.
///
/// Both produce `G_{p−1,s,q+1}(u,v)`; the returned roles are relabeled
/// accordingly. Requires `i + 1 ≤ p`.
pub fn pendent_swap(g: &PendantPathGraph, i: usize) -> Result<PendantPathGraph, TransformError> {
    let (p, q) = (g.p, g.q);
    if i == 0 || i > q + 1 {
        return precondition(format!("segment index i={i} must lie in 1..={}", q + 1));
    }
    if i + 1 > p {
        return precondition(format!("segment index i={i} needs p >= i + 1, got p={p}"));
    }
    // 1-based chains ending at the anchors: u_1..u_p, u and v_1..v_q, v
    let uc = |j: usize| if j == p + 1 { g.u } else { g.u_path[j - 1] };
    let vc = |j: usize| if j == q + 1 { g.v } else { g.v_path[j - 1] };
    let graph = if i == 1 {
        g.graph.edit(&[(vc(1), uc(1))], &[(uc(1), uc(2))])?
    } else {
        g.graph.edit(
            &[(vc(i - 1), uc(i + 1)), (vc(i), uc(i))],
            &[(vc(i - 1), vc(i)), (uc(i), uc(i + 1))],
        )?
    };
    let u_path: Vec<usize> = (1..i).map(vc).chain((i + 1..=p).map(uc)).collect();
    let v_path: Vec<usize> = (1..=i).map(uc).chain((i..=q).map(vc)).collect();
    let out = PendantPathGraph {
        graph,
        core: g.core,
        u: g.u,
        v: g.v,
        p: p - 1,
        s: g.s,
        q: q + 1,
        u_path,
        v_path,
        w_path: g.w_path.clone(),
    };
    out.validate().map_err(TransformError::Precondition)?;
    Ok(out)
}

/// `G_{p,s,q}(u,v) → G_{p−1,s,q+1}(u,v)` under `p − q ≥ max(s + 1, 2)`,
/// by moving the leaf `u_1` to the end of the `v` path. The result is
/// checked against the direct construction up to isomorphism.
pub fn rebalance_pendent_paths(g: &PendantPathGraph) -> Result<PendantPathGraph, TransformError> {
    let need = (g.s + 1).max(2);
    if g.p < g.q + need {
        return precondition(format!(
            "p - q >= max(s + 1, 2) fails: p={}, q={}, s={}",
            g.p, g.q, g.s
        ));
    }
    let out = pendent_swap(g, 1)?;
    if out.graph.n() <= MAX_CANON_VERTICES {
        let direct = g.shifted_target()?;
        if !out.graph.is_isomorphic(&direct.graph)? {
            return Err(TransformError::NotIsomorphic);
        }
    }
    Ok(out)
}

/// The pendent path of exactly `p` vertices hanging at `v`, listed leaf
/// first (`x_1` leaf, `x_p` adjacent to `v`).
pub fn pendent_path_at(t: &Graph, v: usize, p: usize) -> Option<Vec<usize>> {
    for &w in t.neighbors(v) {
        let mut chain = vec![w];
        let (mut prev, mut cur) = (v, w);
        while t.neighbors(cur).len() == 2 {
            let nb = t.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            if next == v {
                break;
            }
            chain.push(next);
            prev = cur;
            cur = next;
        }
        if t.neighbors(cur).len() == 1 && chain.len() == p {
            chain.reverse();
            return Some(chain);
        }
    }
    None
}

/// Every `(v, p)` with `p ≥ min_len` such that a pendent path of `p`
/// vertices hangs at `v` and `v` keeps at least one other neighbor.
pub fn pendent_path_sites(t: &Graph, min_len: usize) -> Vec<(usize, usize)> {
    let mut out = BTreeSet::new();
    for leaf in (0..t.n()).filter(|&x| t.neighbors(x).len() == 1) {
        let (mut prev, mut cur) = (leaf, t.neighbors(leaf)[0]);
        let mut len = 1;
        loop {
            if len >= min_len && t.neighbors(cur).len() >= 2 {
                out.insert((cur, len));
            }
            if t.neighbors(cur).len() != 2 {
                break;
            }
            let nb = t.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
            len += 1;
        }
    }
    out.into_iter().collect()
}

fn is_tree(t: &Graph) -> bool {
    t.n() >= 1 && t.m() + 1 == t.n() && t.is_connected()
}

/// Replaces the pendent path `x_1..x_p` at `v` by the paths `x_1x_2` and
/// `x_3..x_p`, both at `v`: `T' = T − x_2x_3 + x_2v`. Requires `p ≥ 4` and
/// that `v` has a neighbor outside the path (otherwise `T' ≅ T`).
pub fn split_pendent_path(t: &Graph, v: usize, p: usize) -> Result<Graph, TransformError> {
    if !is_tree(t) {
        return precondition("input must be a tree");
    }
    if p < 4 {
        return precondition(format!("path length p={p} must be at least 4"));
    }
    if v >= t.n() {
        return precondition(format!("vertex {v} out of range"));
    }
    let Some(x) = pendent_path_at(t, v, p) else {
        return precondition(format!("no pendent path of length {p} at vertex {v}"));
    };
    if t.neighbors(v).len() < 2 {
        return precondition(format!("vertex {v} has no neighbor outside the path"));
    }
    let out = t.edit(&[(x[1], v)], &[(x[1], x[2])])?;
    let before = matching_number(t).size;
    let after = matching_number(&out).size;
    if before != after {
        return Err(TransformError::MatchingChanged { before, after });
    }
    Ok(out)
}
