use std::collections::BTreeSet;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;

use super::{Claim, Params, VerificationOutcome, VerifyError};
use crate::enumeration::{graphs_with_cut_vertices, trees_with_matching, EnumBudget};
use crate::families::{ank, cycle, gnk, gpsq, path, smith, smith_members, Core, SmithId};
use crate::graph::Graph;
use crate::spectral::{spectral_radius, AlphaParam, SpectralResult};
use crate::structure::pendent_paths;
use crate::transforms::{
    pendent_path_sites, rebalance_pendent_paths, split_pendent_path, ShiftSpec, TransformError,
};

/// Graphs with `ρ_α ≤ 2 + LEMMA2_RHO_FLOOR` are treated as outside the
/// lemma's hypothesis.
pub const LEMMA2_RHO_FLOOR: f64 = 1e-9;

/// Hypothesis slack for `x_u ≥ x_v` in Lemma 1 sampling.
const PERRON_SLACK: f64 = 1e-12;

/// Largest Smith family member checked by [`smith_dichotomy`].
const SMITH_MAX_SIZE: usize = 12;

fn alpha(a: f64) -> Result<AlphaParam<f64>, VerifyError> {
    Ok(AlphaParam::new(a)?)
}

fn radius(g: &Graph, a: &AlphaParam<f64>) -> Result<SpectralResult<f64>, VerifyError> {
    Ok(spectral_radius(g, a)?)
}

fn radii(gs: &[Graph], a: &AlphaParam<f64>) -> Result<Vec<f64>, VerifyError> {
    gs.par_iter().map(|g| radius(g, a).map(|r| r.rho)).collect()
}

fn g6(g: &Graph) -> Result<String, VerifyError> {
    Ok(g.to_graph6()?)
}

/// Index and value of the smallest non-NaN entry, first on ties.
fn argmin(values: &[f64]) -> Option<(usize, f64)> {
    values
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, m)| !m.is_nan())
        .fold(None, |best, (i, m)| match best {
            Some((_, b)) if b <= m => best,
            _ => Some((i, m)),
        })
}

/// Pendent-path monotonicity of the Perron vector.
///
/// Each pendent path is read leaf first and continued by its anchor; the
/// margin is the smallest relative step `(x_{i+1} − x_i) / x_{i+1}`.
pub fn verify_lemma2(g: &Graph, a: f64, tol: f64) -> Result<VerificationOutcome, VerifyError> {
    let started = Instant::now();
    let ap = alpha(a)?;
    let r = radius(g, &ap)?;
    let mut params = Params { n: Some(g.n()), alpha: Some(a), checked: Some(0), ..Params::default() };
    let mut margin = f64::INFINITY;
    if r.rho > 2.0 + LEMMA2_RHO_FLOOR {
        let mut checked = 0;
        for path in pendent_paths(g) {
            let Some(anchor) = path.anchor else { continue };
            let chain: Vec<f64> = path.vertices.iter().chain([&anchor]).map(|&v| r.x[v]).collect();
            for w in chain.windows(2) {
                margin = margin.min((w[1] - w[0]) / w[1]);
                checked += 1;
            }
        }
        params.checked = Some(checked);
    }
    Ok(VerificationOutcome::new(Claim::Lemma2, params, margin, tol, vec![g6(g)?], started))
}

/// `ρ_α(G_{p−1,s,q+1}) − ρ_α(G_{p,s,q})`, with the rebalancing move
/// cross-checked against the direct construction.
pub fn verify_theorem1(
    core: Core,
    p: usize,
    s: usize,
    q: usize,
    a: f64,
    tol: f64,
) -> Result<VerificationOutcome, VerifyError> {
    let started = Instant::now();
    if q == 0 {
        return Err(VerifyError::Hypothesis("q >= 1 is required".into()));
    }
    if p < q + (s + 1).max(2) {
        return Err(VerifyError::Hypothesis(format!("p - q >= max(s + 1, 2) fails: p={p}, q={q}, s={s}")));
    }
    let ap = alpha(a)?;
    let g = gpsq(core, p, s, q)?;
    let moved = rebalance_pendent_paths(&g)?;
    let r0 = radius(&g.graph, &ap)?.rho;
    let r1 = radius(&moved.graph, &ap)?.rho;
    let params = Params {
        n: Some(g.graph.n()),
        p: Some(p),
        s: Some(s),
        q: Some(q),
        core: Some(core.to_string()),
        alpha: Some(a),
        ..Params::default()
    };
    let witness = vec![g6(&g.graph)?, g6(&moved.graph)?];
    Ok(VerificationOutcome::new(Claim::Theorem1, params, r1 - r0, tol, witness, started))
}

/// The class maximizer must be `target`; the margin is its lead over the
/// runner-up.
fn unique_maximizer(
    claim: Claim,
    class: &[Graph],
    target: &Graph,
    mut params: Params,
    a: f64,
    tol: f64,
) -> Result<VerificationOutcome, VerifyError> {
    let started = Instant::now();
    let ap = alpha(a)?;
    let code = target.canonical_code()?;
    let Some(t) = class.iter().position(|g| g.canonical_code().ok() == Some(code)) else {
        return Err(VerifyError::InvalidGrid(format!("{claim}: extremal graph missing from its class")));
    };
    let rho = radii(class, &ap)?;
    let lag: Vec<f64> = rho.iter().map(|&r| rho[t] - r).enumerate().map(|(i, d)| if i == t { f64::NAN } else { d }).collect();
    let best = argmin(&lag);
    params.checked = Some(class.len());
    params.alpha = Some(a);
    let (margin, witness) = match best {
        Some((i, lead)) => (lead, vec![g6(&class[t])?, g6(&class[i])?]),
        None => (f64::INFINITY, vec![g6(&class[t])?]),
    };
    Ok(VerificationOutcome::new(claim, params, margin, tol, witness, started))
}

pub(crate) fn theorem2_cell(class: &[Graph], n: usize, k: usize, a: f64, tol: f64) -> Result<VerificationOutcome, VerifyError> {
    let params = Params { n: Some(n), k: Some(k), ..Params::default() };
    unique_maximizer(Claim::Theorem2, class, &gnk(n, k)?, params, a, tol)
}

pub(crate) fn theorem3_cell(class: &[Graph], n: usize, k: usize, a: f64, tol: f64) -> Result<VerificationOutcome, VerifyError> {
    let params = Params { n: Some(n), k: Some(k), ..Params::default() };
    unique_maximizer(Claim::Theorem3, class, &ank(n, k)?, params, a, tol)
}

/// Among connected graphs of order `n` with `k` cut vertices, `G_{n,k}`
/// is the unique maximizer of `ρ_α`.
pub fn verify_theorem2(n: usize, k: usize, a: f64, budget: &EnumBudget, tol: f64) -> Result<VerificationOutcome, VerifyError> {
    let class = graphs_with_cut_vertices(n, k, budget)?;
    if class.is_empty() {
        return Err(VerifyError::InvalidGrid(format!("no connected graph with n={n}, k={k}")));
    }
    theorem2_cell(&class, n, k, a, tol)
}

/// Among trees of order `n` with matching number `k`, `A(n, k)` is the
/// unique maximizer of `ρ_α`.
pub fn verify_theorem3(n: usize, k: usize, a: f64, budget: &EnumBudget, tol: f64) -> Result<VerificationOutcome, VerifyError> {
    if n < 4 {
        return Err(VerifyError::Hypothesis(format!("n >= 4 is required, got {n}")));
    }
    let class = trees_with_matching(n, k, budget)?;
    theorem3_cell(&class, n, k, a, tol)
}

/// Samples shifts `(v, u, N)` over `corpus` until `trials` instances with
/// `x_u ≥ x_v` have been compared. Shifts that fail the Perron hypothesis
/// or disconnect the graph are counted as skipped.
pub fn verify_lemma1_sample<R: Rng>(
    corpus: &[Graph],
    trials: usize,
    a: f64,
    rng: &mut R,
    tol: f64,
) -> Result<VerificationOutcome, VerifyError> {
    let started = Instant::now();
    if trials == 0 {
        return Err(VerifyError::InvalidGrid("trials must be at least 1".into()));
    }
    let ap = alpha(a)?;
    let base: Vec<SpectralResult<f64>> = corpus.par_iter().map(|g| radius(g, &ap)).collect::<Result<_, _>>()?;
    let (mut checked, mut skipped) = (0usize, 0usize);
    let mut worst: Option<(f64, usize, Graph)> = None;
    let max_attempts = trials.saturating_mul(50);
    let mut attempts = 0;
    while checked < trials && attempts < max_attempts && !corpus.is_empty() {
        attempts += 1;
        let gi = rng.gen_range(0..corpus.len());
        let g = &corpus[gi];
        if g.n() < 2 {
            continue;
        }
        let v = rng.gen_range(0..g.n());
        let u = rng.gen_range(0..g.n() - 1);
        let u = if u >= v { u + 1 } else { u };
        let pool: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w != u && !g.has_edge(u, w)).collect();
        if pool.is_empty() {
            continue;
        }
        let mask = rng.gen_range(1u32..(1 << pool.len()));
        let spec = ShiftSpec::new(v, u, (0..pool.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pool[i]));
        let x = &base[gi].x;
        if x[u] < x[v] - PERRON_SLACK {
            skipped += 1;
            continue;
        }
        let shifted = match crate::transforms::shift_neighbors(g, &spec) {
            Ok(h) => h,
            Err(TransformError::Disconnected) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let gain = radius(&shifted, &ap)?.rho - base[gi].rho;
        checked += 1;
        if worst.as_ref().is_none_or(|(m, _, _)| gain < *m) {
            worst = Some((gain, gi, shifted));
        }
    }
    let params = Params { alpha: Some(a), checked: Some(checked), skipped: Some(skipped), ..Params::default() };
    let (margin, witness) = match worst {
        Some((m, gi, h)) => (m, vec![g6(&corpus[gi])?, g6(&h)?]),
        None => (f64::INFINITY, Vec::new()),
    };
    Ok(VerificationOutcome::new(Claim::Lemma1, params, margin, tol, witness, started))
}

pub(crate) fn transformation_a_cell(trees: &[Graph], n: usize, a: f64, tol: f64) -> Result<VerificationOutcome, VerifyError> {
    let started = Instant::now();
    let ap = alpha(a)?;
    let per_tree: Vec<Vec<(f64, &Graph, Option<Graph>)>> = trees
        .par_iter()
        .map(|t| -> Result<_, VerifyError> {
            let sites = pendent_path_sites(t, 4);
            if sites.is_empty() {
                return Ok(Vec::new());
            }
            let r0 = radius(t, &ap)?.rho;
            let mut out = Vec::new();
            for (v, p) in sites {
                match split_pendent_path(t, v, p) {
                    Ok(split) => {
                        let gain = radius(&split, &ap)?.rho - r0;
                        out.push((gain, t, Some(split)));
                    }
                    Err(TransformError::MatchingChanged { .. }) => out.push((f64::NEG_INFINITY, t, None)),
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(out)
        })
        .collect::<Result<_, _>>()?;
    let all: Vec<(f64, &Graph, Option<Graph>)> = per_tree.into_iter().flatten().collect();
    let margins: Vec<f64> = all.iter().map(|c| c.0).collect();
    let params = Params { n: Some(n), alpha: Some(a), checked: Some(all.len()), ..Params::default() };
    let (margin, witness) = match argmin(&margins) {
        Some((i, m)) => {
            let mut w = vec![g6(all[i].1)?];
            if let Some(split) = &all[i].2 {
                w.push(g6(split)?);
            }
            (m, w)
        }
        None => (f64::INFINITY, Vec::new()),
    };
    Ok(VerificationOutcome::new(Claim::TransformationA, params, margin, tol, witness, started))
}

/// Splits every pendent path of length at least 4 in every tree of order
/// `n`; matching number must be kept and `ρ_α` must grow.
pub fn verify_transformation_a(n: usize, a: f64, budget: &EnumBudget, tol: f64) -> Result<VerificationOutcome, VerifyError> {
    let trees = crate::enumeration::all_trees(n, budget)?;
    transformation_a_cell(&trees, n, a, tol)
}

/// The `A_0` dichotomy on Smith graphs, paths and cycles up to size 12:
/// `ρ_0 < 2` for H1–H4 and paths, `ρ_0 = 2` for H5–H8 and cycles.
///
/// Members with `ρ_0 < 2` report `2 − ρ_0` as margin; members with
/// `ρ_0 = 2` report an infinite margin when `|ρ_0 − 2| ≤ 1e−9` and
/// `−|ρ_0 − 2|` otherwise.
pub fn smith_dichotomy(tol: f64) -> Result<Vec<VerificationOutcome>, VerifyError> {
    let mut members: Vec<(String, bool, Graph)> = Vec::new();
    for id in SmithId::ALL {
        for size in id.sizes_up_to(SMITH_MAX_SIZE) {
            members.push((id.name().to_string(), id.radius_is_two(), smith(id, size)?));
        }
    }
    for n in 1..=SMITH_MAX_SIZE {
        members.push(("P".into(), false, path(n)?));
    }
    for n in 3..=SMITH_MAX_SIZE {
        members.push(("C".into(), true, cycle(n)?));
    }
    let a0 = alpha(0.0)?;
    members
        .par_iter()
        .map(|(family, is_two, g)| {
            let started = Instant::now();
            let rho = radius(g, &a0)?.rho;
            let margin = match (is_two, (rho - 2.0).abs() <= 1e-9) {
                (true, true) => f64::INFINITY,
                (true, false) => -(rho - 2.0).abs(),
                (false, _) => 2.0 - rho,
            };
            let params = Params { n: Some(g.n()), family: Some(family.clone()), alpha: Some(0.0), ..Params::default() };
            Ok(VerificationOutcome::new(Claim::SmithRadii, params, margin, tol, vec![g6(g)?], started))
        })
        .collect()
}

/// `ρ_α > 2` for every graph in `graphs` (all of order `n`) that is not a
/// path, cycle or Smith graph. The margin is `min ρ_α − 2`.
pub fn verify_non_smith(graphs: &[Graph], n: usize, a: f64, tol: f64) -> Result<VerificationOutcome, VerifyError> {
    let started = Instant::now();
    let ap = alpha(a)?;
    let smith_codes: BTreeSet<_> =
        smith_members(n).iter().map(|(_, g)| g.canonical_code()).collect::<Result<_, _>>()?;
    let mut rest = Vec::new();
    for g in graphs {
        if !smith_codes.contains(&g.canonical_code()?) {
            rest.push(g.clone());
        }
    }
    let gaps: Vec<f64> = radii(&rest, &ap)?.into_iter().map(|r| r - 2.0).collect();
    let params = Params {
        n: Some(n),
        family: Some("non-Smith".into()),
        alpha: Some(a),
        checked: Some(rest.len()),
        ..Params::default()
    };
    let (margin, witness) = match argmin(&gaps) {
        Some((i, m)) => (m, vec![g6(&rest[i])?]),
        None => (f64::INFINITY, Vec::new()),
    };
    Ok(VerificationOutcome::new(Claim::SmithRadii, params, margin, tol, witness, started))
}
