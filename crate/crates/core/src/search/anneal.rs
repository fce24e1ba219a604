use crate::error::Result;
use crate::graph::{component_labels, Edge, Graph};
use crate::metrics::{girth_below, spectrum_with, Girth, SpectrumOptions};
use crate::rng::{self, Phase};

use super::trim::{insert_sorted, remove_sorted};

/// Annealing schedule and objective weights. `None` penalties default to
/// `10 · max(host_gap, 1e-3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnealOptions {
    pub t0: f64,
    /// `T_budget / T0`.
    pub final_ratio: f64,
    /// Accepted moves between exact gap evaluations.
    pub refresh_every: usize,
    pub penalty: Option<f64>,
    pub penalty_disconnected: Option<f64>,
}

impl Default for AnnealOptions {
    fn default() -> Self {
        AnnealOptions {
            t0: 1.0,
            final_ratio: 1e-3,
            refresh_every: 64,
            penalty: None,
            penalty_disconnected: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnnealOutcome {
    /// Best feasible state (girth target met, connected), sorted.
    pub kept: Vec<Edge>,
    pub best_objective: f64,
    /// Best-so-far objective after each move; non-decreasing.
    pub trace: Vec<f64>,
    pub accepted: usize,
}

/// `1 - λ₂`, or 0 for graphs with fewer than two vertices or several
/// components (where `λ₂ = 1`).
pub(crate) fn exact_gap(adj: &[Vec<usize>], spectral: &SpectrumOptions) -> Result<f64> {
    if adj.len() < 2 || component_labels(adj).0 > 1 {
        return Ok(0.0);
    }
    let g = Graph::from_adjacency_unchecked(adj.to_vec());
    Ok(spectrum_with(&g, spectral)?.gap)
}

struct DegreeStats {
    sum: f64,
    sum_sq: f64,
    n: f64,
}

impl DegreeStats {
    fn new(adj: &[Vec<usize>]) -> Self {
        let mut s = DegreeStats {
            sum: 0.0,
            sum_sq: 0.0,
            n: adj.len().max(1) as f64,
        };
        for list in adj {
            let d = list.len() as f64;
            s.sum += d;
            s.sum_sq += d * d;
        }
        s
    }

    /// Degree of one endpoint moves from `from` to `to`.
    fn shift(&mut self, from: usize, to: usize) {
        let (a, b) = (from as f64, to as f64);
        self.sum += b - a;
        self.sum_sq += b * b - a * a;
    }

    fn mean(&self) -> f64 {
        self.sum / self.n
    }

    fn std(&self) -> f64 {
        let m = self.mean();
        (self.sum_sq / self.n - m * m).max(0.0).sqrt()
    }
}

struct Anchor {
    gap: f64,
    mean: f64,
    std: f64,
}

/// Simulated annealing over spanning edge subsets of `host`, started from
/// `initial` (which must be feasible for `target`). Each move toggles one
/// uniformly random host edge. The objective is
/// `gap_proxy - penalty·max(0, target - girth) - penalty_disc·(components - 1)`,
/// where `gap_proxy` is the exact gap refreshed every `refresh_every`
/// accepted moves and, in between, the last exact gap shifted by
/// `scale · ((mean - mean₀) - (std - std₀)) / max_degree(host)` over the
/// degree sequence.
#[allow(clippy::too_many_arguments)]
pub fn anneal(
    host: &Graph,
    initial: &[Edge],
    target: usize,
    budget: usize,
    seed: u64,
    host_gap: f64,
    opts: &AnnealOptions,
    spectral: &SpectrumOptions,
) -> Result<AnnealOutcome> {
    let edges: Vec<Edge> = host.edges().collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); host.n()];
    for &(u, v) in initial {
        insert_sorted(&mut adj[u], v);
        insert_sorted(&mut adj[v], u);
    }
    let mut kept: Vec<bool> = edges.iter().map(|&(u, v)| adj[u].binary_search(&v).is_ok()).collect();

    let scale = host_gap.max(1e-3);
    let penalty = opts.penalty.unwrap_or(10.0 * scale);
    let penalty_disc = opts.penalty_disconnected.unwrap_or(10.0 * scale);
    let d_max = host.max_degree().max(1) as f64;
    let alpha = if budget > 0 {
        opts.final_ratio.powf(1.0 / budget as f64)
    } else {
        1.0
    };

    let deficit = |adj: &[Vec<usize>]| match girth_below(adj, target) {
        Girth::Finite(g) => target - g,
        Girth::Unbounded => 0,
    };

    let mut stats = DegreeStats::new(&adj);
    let mut anchor = Anchor {
        gap: exact_gap(&adj, spectral)?,
        mean: stats.mean(),
        std: stats.std(),
    };
    let objective = |gap: f64, deficit: usize, comps: usize| {
        gap - penalty * deficit as f64 - penalty_disc * (comps.saturating_sub(1)) as f64
    };

    let mut current = objective(anchor.gap, deficit(&adj), component_labels(&adj).0);
    let mut best_objective = current;
    let mut best = kept.clone();
    let mut trace = Vec::with_capacity(budget);
    let mut accepted = 0;
    let mut temperature = opts.t0;
    let mut rng = rng::stream(seed, Phase::Anneal);

    for _ in 0..budget {
        if edges.is_empty() {
            trace.push(best_objective);
            continue;
        }
        let e = rng::below(&mut rng, edges.len() as u64) as usize;
        let (u, v) = edges[e];
        let toggle = |adj: &mut [Vec<usize>], stats: &mut DegreeStats, add: bool| {
            for (a, b) in [(u, v), (v, u)] {
                let before = adj[a].len();
                if add {
                    insert_sorted(&mut adj[a], b);
                } else {
                    remove_sorted(&mut adj[a], b);
                }
                stats.shift(before, adj[a].len());
            }
        };
        toggle(&mut adj, &mut stats, !kept[e]);
        kept[e] = !kept[e];

        let def = deficit(&adj);
        let comps = component_labels(&adj).0;
        let proxy = anchor.gap + scale * ((stats.mean() - anchor.mean) - (stats.std() - anchor.std)) / d_max;
        let candidate = objective(proxy, def, comps);
        let delta = candidate - current;
        let accept = delta >= 0.0 || rng::unit_f64(&mut rng) < (delta / temperature).exp();
        if accept {
            accepted += 1;
            current = candidate;
            if accepted % opts.refresh_every.max(1) == 0 {
                anchor = Anchor {
                    gap: exact_gap(&adj, spectral)?,
                    mean: stats.mean(),
                    std: stats.std(),
                };
                current = objective(anchor.gap, def, comps);
            }
            if def == 0 && comps == 1 && current > best_objective {
                best_objective = current;
                best.clone_from(&kept);
            }
        } else {
            toggle(&mut adj, &mut stats, !kept[e]);
            kept[e] = !kept[e];
        }
        trace.push(best_objective);
        temperature *= alpha;
    }

    Ok(AnnealOutcome {
        kept: edges.iter().zip(&best).filter(|(_, &k)| k).map(|(&e, _)| e).collect(),
        best_objective,
        trace,
        accepted,
    })
}
