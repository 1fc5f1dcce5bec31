use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::checks::{
    smith_dichotomy, theorem2_cell, theorem3_cell, transformation_a_cell, verify_lemma1_sample,
    verify_lemma2, verify_non_smith, verify_theorem1,
};
use super::{Claim, Report, VerificationOutcome, VerifyError, DEFAULT_TOLERANCE};
use crate::enumeration::{all_connected_graphs, all_trees, EnumBudget};
use crate::families::Core;
use crate::graph::{Graph, MAX_CANON_VERTICES};
use crate::spectral::AlphaParam;
use crate::structure::{count_cut_vertices, matching_number};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub alpha_grid: Vec<f64>,
    pub budget: EnumBudget,
    pub tolerance: f64,
    pub seed: u64,
    /// Valid shift instances compared per order `n` and `α` for Lemma 1.
    pub lemma1_trials: usize,
    /// Overrides the claim's default `n` range (inclusive).
    pub n_range: Option<(usize, usize)>,
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            alpha_grid: crate::DEFAULT_ALPHA_GRID.to_vec(),
            budget: EnumBudget::default(),
            tolerance: DEFAULT_TOLERANCE,
            seed: 0,
            lemma1_trials: 200,
            n_range: None,
            timing: true,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.alpha_grid.is_empty() {
            return Err(VerifyError::InvalidGrid("alpha grid is empty".into()));
        }
        for &a in &self.alpha_grid {
            AlphaParam::new(a)?;
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(VerifyError::InvalidGrid(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.lemma1_trials == 0 {
            return Err(VerifyError::InvalidGrid("lemma1 trials must be at least 1".into()));
        }
        if let Some((lo, hi)) = self.n_range {
            if lo > hi {
                return Err(VerifyError::InvalidGrid(format!("empty n range {lo}..{hi}")));
            }
        }
        Ok(())
    }

    /// The inclusive `n` range `claim` runs over: the override clipped
    /// below by the claim's minimum, or the default clipped by the budget.
    /// An override above the budget is refused.
    pub fn n_range_for(&self, claim: Claim) -> Result<(usize, usize), VerifyError> {
        let (min, default_hi) = default_n_range(claim);
        let cap = n_cap(claim, &self.budget);
        match self.n_range {
            Some((_, hi)) if hi > cap => Err(VerifyError::OverBudget { claim, n: hi, max: cap }),
            Some((lo, hi)) => Ok((lo.max(min), hi)),
            None => Ok((min, default_hi.min(cap))),
        }
    }
}

/// Smallest meaningful order and default largest order for each claim.
/// For Theorem 1 the range bounds the total vertex count of `G_{p,s,q}`.
pub fn default_n_range(claim: Claim) -> (usize, usize) {
    match claim {
        Claim::Lemma1 => (3, 6),
        Claim::Lemma2 => (1, 7),
        Claim::Theorem1 => (1, 16),
        Claim::Theorem2 => (2, 7),
        Claim::Theorem3 => (4, 12),
        Claim::TransformationA => (5, 10),
        Claim::SmithRadii => (1, 7),
    }
}

fn n_cap(claim: Claim, budget: &EnumBudget) -> usize {
    match claim {
        Claim::Theorem1 => MAX_CANON_VERTICES,
        Claim::Theorem3 | Claim::TransformationA => budget.max_n_trees,
        _ => budget.max_n_graphs,
    }
}

fn rng_for(seed: u64, n: usize, a: f64) -> ChaCha8Rng {
    let mix = seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ a.to_bits().rotate_left(17);
    ChaCha8Rng::seed_from_u64(mix)
}

fn cells<T: Sync, F>(items: &[T], eval: F) -> Result<Vec<VerificationOutcome>, VerifyError>
where
    F: Fn(&T) -> Result<VerificationOutcome, VerifyError> + Sync + Send,
{
    items.par_iter().map(eval).collect()
}

fn pairs<T: Copy>(ns: &[T], grid: &[f64]) -> Vec<(T, f64)> {
    ns.iter().flat_map(|&n| grid.iter().map(move |&a| (n, a))).collect()
}

/// Runs every cell of `claim` under `config` on the current rayon pool.
pub fn run_claim(claim: Claim, config: &VerifyConfig) -> Result<Vec<VerificationOutcome>, VerifyError> {
    config.validate()?;
    let (lo, hi) = config.n_range_for(claim)?;
    let grid = &config.alpha_grid;
    let tol = config.tolerance;
    let budget = &config.budget;
    let mut out = match claim {
        Claim::Lemma1 => {
            let corpora: BTreeMap<usize, Vec<Graph>> =
                (lo..=hi).map(|n| all_connected_graphs(n, budget).map(|g| (n, g))).collect::<Result<_, _>>()?;
            let work: Vec<_> = pairs(&corpora.keys().copied().collect::<Vec<_>>(), grid);
            cells(&work, |&(n, a)| {
                let mut rng = rng_for(config.seed, n, a);
                let mut o = verify_lemma1_sample(&corpora[&n], config.lemma1_trials, a, &mut rng, tol)?;
                o.params.n = Some(n);
                Ok(o)
            })?
        }
        Claim::Lemma2 => {
            let mut out = Vec::new();
            for n in lo..=hi {
                let graphs = all_connected_graphs(n, budget)?;
                out.extend(cells(grid, |&a| {
                    let each: Vec<_> = graphs.par_iter().map(|g| verify_lemma2(g, a, tol)).collect::<Result<_, _>>()?;
                    Ok(merge_lemma2(n, a, tol, each))
                })?);
            }
            out
        }
        Claim::Theorem1 => {
            let grid1 = theorem1_grid(lo, hi);
            let work: Vec<_> = grid1.iter().flat_map(|&c| grid.iter().map(move |&a| (c, a))).collect();
            cells(&work, |&((core, p, s, q), a)| verify_theorem1(core, p, s, q, a, tol))?
        }
        Claim::Theorem2 => {
            let mut out = Vec::new();
            for n in lo..=hi {
                let mut by_k: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
                for g in all_connected_graphs(n, budget)? {
                    by_k.entry(count_cut_vertices(&g)?).or_default().push(g);
                }
                let work: Vec<_> = pairs(&by_k.keys().copied().collect::<Vec<_>>(), grid);
                out.extend(cells(&work, |&(k, a)| theorem2_cell(&by_k[&k], n, k, a, tol))?);
            }
            out
        }
        Claim::Theorem3 => {
            let mut out = Vec::new();
            for n in lo..=hi {
                let mut by_k: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
                for t in all_trees(n, budget)? {
                    by_k.entry(matching_number(&t).size).or_default().push(t);
                }
                let work: Vec<_> = pairs(&by_k.keys().copied().collect::<Vec<_>>(), grid);
                out.extend(cells(&work, |&(k, a)| theorem3_cell(&by_k[&k], n, k, a, tol))?);
            }
            out
        }
        Claim::TransformationA => {
            let mut out = Vec::new();
            for n in lo..=hi {
                let trees = all_trees(n, budget)?;
                out.extend(cells(grid, |&a| transformation_a_cell(&trees, n, a, tol))?);
            }
            out
        }
        Claim::SmithRadii => {
            let mut out = smith_dichotomy(tol)?;
            for n in lo..=hi {
                let graphs = all_connected_graphs(n, budget)?;
                out.extend(cells(grid, |&a| verify_non_smith(&graphs, n, a, tol))?);
            }
            out
        }
    };
    if !config.timing {
        for o in &mut out {
            o.elapsed = None;
        }
    }
    Ok(out)
}

fn merge_lemma2(n: usize, a: f64, tol: f64, each: Vec<VerificationOutcome>) -> VerificationOutcome {
    let started = std::time::Instant::now();
    let applicable: Vec<&VerificationOutcome> = each.iter().filter(|o| o.params.checked.unwrap_or(0) > 0).collect();
    let worst = applicable.iter().copied().min_by(|x, y| x.margin.total_cmp(&y.margin));
    let mut params = super::Params { n: Some(n), alpha: Some(a), checked: Some(applicable.len()), ..Default::default() };
    params.skipped = Some(each.len() - applicable.len());
    let (margin, witness) = match worst {
        Some(o) => (o.margin, o.witness.clone()),
        None => (f64::INFINITY, Vec::new()),
    };
    let elapsed: f64 = each.iter().filter_map(|o| o.elapsed).sum();
    let mut o = VerificationOutcome::new(Claim::Lemma2, params, margin, tol, witness, started);
    o.elapsed = Some(elapsed);
    o
}

/// Theorem 1 cells: cores C3, C4, K4; `s ≤ 3`; `1 ≤ q ≤ 3`;
/// `q + max(s+1, 2) ≤ p ≤ q + 6`; total order within `lo..=hi`.
fn theorem1_grid(lo: usize, hi: usize) -> Vec<(Core, usize, usize, usize)> {
    let mut out = Vec::new();
    for core in [Core::Cycle(3), Core::Cycle(4), Core::Complete(4)] {
        let c = match core {
            Core::Cycle(c) | Core::Complete(c) => c,
        };
        for s in 0..=3usize {
            for q in 1..=3 {
                for p in q + (s + 1).max(2)..=q + 6 {
                    let n = c + s.saturating_sub(1) + p + q;
                    if (lo..=hi).contains(&n) {
                        out.push((core, p, s, q));
                    }
                }
            }
        }
    }
    out
}

/// Runs `claims` on a pool of `jobs` threads and returns the sorted report.
pub fn run_suite(claims: &[Claim], config: &VerifyConfig, jobs: usize) -> Result<Report, VerifyError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    let mut outcomes = Vec::new();
    for &claim in claims {
        outcomes.extend(pool.install(|| run_claim(claim, config))?);
    }
    let mut report = Report::new(config.clone(), claims.to_vec(), outcomes);
    report.sort();
    Ok(report)
}

#[cfg(test)]
pub(super) fn theorem1_cells(lo: usize, hi: usize) -> Vec<(Core, usize, usize, usize)> {
    theorem1_grid(lo, hi)
}
