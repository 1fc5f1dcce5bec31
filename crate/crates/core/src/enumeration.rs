//! Isomorph-free generation of trees and connected graphs.
//!
//! Both generators grow level by level. A tree on `n` vertices arises from
//! one on `n − 1` by hanging a leaf anywhere; a connected graph arises from
//! a connected graph on `n − 1` vertices by adding a vertex joined to a
//! nonempty subset, since every connected graph has a non-cut vertex.
//! Candidates are deduplicated by canonical code and emitted in canonical
//! form, ordered by code.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{CanonicalCode, Graph, GraphError};
use crate::structure::{count_cut_vertices, matching_number};

/// Hard ceiling on `EnumBudget::max_n_trees`.
pub const TREE_BUDGET_LIMIT: usize = 16;
/// Hard ceiling on `EnumBudget::max_n_graphs`.
pub const GRAPH_BUDGET_LIMIT: usize = 8;

/// Environment variable read by [`EnumBudget::from_env`].
pub const BUDGET_ENV: &str = "ALPHA_SPECTRA_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("{kind} on {n} vertices exceed the enumeration budget of {max}")]
    OverBudget { kind: &'static str, n: usize, max: usize },
    #[error("n must be at least 1")]
    ZeroOrder,
    #[error("invalid class parameter: {0}")]
    InvalidClass(String),
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct EnumBudget {
    pub max_n_trees: usize,
    pub max_n_graphs: usize,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget { max_n_trees: 12, max_n_graphs: 7 }
    }
}

impl EnumBudget {
    pub fn new(max_n_trees: usize, max_n_graphs: usize) -> Result<Self, EnumError> {
        if max_n_trees > TREE_BUDGET_LIMIT {
            return Err(EnumError::InvalidBudget(format!(
                "trees={max_n_trees} exceeds the limit {TREE_BUDGET_LIMIT}"
            )));
        }
        if max_n_graphs > GRAPH_BUDGET_LIMIT {
            return Err(EnumError::InvalidBudget(format!(
                "graphs={max_n_graphs} exceeds the limit {GRAPH_BUDGET_LIMIT}"
            )));
        }
        Ok(EnumBudget { max_n_trees, max_n_graphs })
    }

    /// Default budget, overridden by `ALPHA_SPECTRA_BUDGET` when set.
    pub fn from_env() -> Result<Self, EnumError> {
        match std::env::var(BUDGET_ENV) {
            Ok(text) if !text.trim().is_empty() => text.parse(),
            _ => Ok(Self::default()),
        }
    }

    pub fn check_trees(&self, n: usize) -> Result<(), EnumError> {
        check(n, self.max_n_trees, "trees")
    }

    pub fn check_graphs(&self, n: usize) -> Result<(), EnumError> {
        check(n, self.max_n_graphs, "connected graphs")
    }
}

fn check(n: usize, max: usize, kind: &'static str) -> Result<(), EnumError> {
    if n == 0 {
        Err(EnumError::ZeroOrder)
    } else if n > max {
        Err(EnumError::OverBudget { kind, n, max })
    } else {
        Ok(())
    }
}

/// `trees=10,graphs=6`; either key may be omitted and keeps its default.
impl FromStr for EnumBudget {
    type Err = EnumError;

    fn from_str(text: &str) -> Result<Self, EnumError> {
        let mut out = EnumBudget::default();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| EnumError::InvalidBudget(format!("expected key=value, got '{part}'")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| EnumError::InvalidBudget(format!("'{value}' is not a count")))?;
            match key.trim() {
                "trees" => out.max_n_trees = value,
                "graphs" => out.max_n_graphs = value,
                other => return Err(EnumError::InvalidBudget(format!("unknown key '{other}'"))),
            }
        }
        EnumBudget::new(out.max_n_trees, out.max_n_graphs)
    }
}

impl fmt::Display for EnumBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "trees={},graphs={}", self.max_n_trees, self.max_n_graphs)
    }
}

type Level = BTreeMap<CanonicalCode, Graph>;

fn insert(level: &mut Level, g: Graph) -> Result<(), EnumError> {
    let code = g.canonical_code()?;
    if let std::collections::btree_map::Entry::Vacant(slot) = level.entry(code) {
        slot.insert(g.canonical_form()?);
    }
    Ok(())
}

fn tree_levels(n: usize) -> Result<Level, EnumError> {
    let mut level = Level::new();
    level.insert(Graph::empty(1).canonical_code()?, Graph::empty(1));
    for _ in 1..n {
        let mut next = Level::new();
        for t in level.values() {
            // one leaf per vertex orbit would do; canonical dedup absorbs the rest
            for v in 0..t.n() {
                insert(&mut next, t.attach_path(v, 1)?)?;
            }
        }
        level = next;
    }
    Ok(level)
}

fn graph_levels(n: usize) -> Result<Level, EnumError> {
    let mut level = Level::new();
    level.insert(Graph::empty(1).canonical_code()?, Graph::empty(1));
    for k in 1..n {
        let mut next = Level::new();
        for g in level.values() {
            for mask in 1u32..(1 << k) {
                let mut adj: Vec<(usize, usize)> = g.edges().collect();
                adj.extend((0..k).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k)));
                insert(&mut next, Graph::new(k + 1, &adj)?)?;
            }
        }
        level = next;
    }
    Ok(level)
}

/// One canonical representative per unlabeled tree on `n` vertices.
pub fn all_trees(n: usize, budget: &EnumBudget) -> Result<Vec<Graph>, EnumError> {
    budget.check_trees(n)?;
    Ok(tree_levels(n)?.into_values().collect())
}

/// One canonical representative per unlabeled connected graph on `n` vertices.
pub fn all_connected_graphs(n: usize, budget: &EnumBudget) -> Result<Vec<Graph>, EnumError> {
    budget.check_graphs(n)?;
    Ok(graph_levels(n)?.into_values().collect())
}

pub fn trees_with_matching(n: usize, k: usize, budget: &EnumBudget) -> Result<Vec<Graph>, EnumError> {
    budget.check_trees(n)?;
    if k == 0 || k > n / 2 {
        return Err(EnumError::InvalidClass(format!("matching number k={k} needs 1 <= k <= {}", n / 2)));
    }
    Ok(all_trees(n, budget)?.into_iter().filter(|t| matching_number(t).size == k).collect())
}

pub fn graphs_with_cut_vertices(n: usize, k: usize, budget: &EnumBudget) -> Result<Vec<Graph>, EnumError> {
    budget.check_graphs(n)?;
    if k > n.saturating_sub(2) {
        return Err(EnumError::InvalidClass(format!(
            "cut-vertex count k={k} needs k <= {}",
            n.saturating_sub(2)
        )));
    }
    let mut out = Vec::new();
    for g in all_connected_graphs(n, budget)? {
        if count_cut_vertices(&g).map_err(|e| EnumError::InvalidClass(e.to_string()))? == k {
            out.push(g);
        }
    }
    Ok(out)
}

/// Unlabeled tree counts for `n = 1..=12`.
pub const TREE_COUNTS: [usize; 12] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
/// Unlabeled connected graph counts for `n = 1..=7`.
pub const CONNECTED_GRAPH_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];
