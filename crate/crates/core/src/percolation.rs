//! Bernoulli bond percolation with threshold coupling.
//!
//! Each edge `e` (canonical order) gets one uniform `u_e` from the seeded
//! percolation stream and is retained iff `u_e < p`. Samples at different
//! `p` with the same seed are therefore nested.

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::metrics::{spectrum_with, SpectrumOptions};
use crate::rng::{self, Phase};

#[derive(Debug, Clone, PartialEq)]
pub struct PercolationSample {
    pub p: f64,
    pub seed: u64,
    /// Indexed by the host's canonical edge order.
    pub retained: Vec<bool>,
    pub host_fingerprint: u64,
}

impl PercolationSample {
    pub fn retained_count(&self) -> usize {
        self.retained.iter().filter(|&&k| k).count()
    }

    pub fn retained_edges(&self, host: &Graph) -> Result<Vec<Edge>> {
        self.check_host(host)?;
        Ok(host.edges().zip(&self.retained).filter(|(_, &k)| k).map(|(e, _)| e).collect())
    }

    /// The retained spanning subgraph.
    pub fn subgraph(&self, host: &Graph) -> Result<Graph> {
        self.check_host(host)?;
        Ok(host.edge_subgraph_mask(&self.retained))
    }

    fn check_host(&self, host: &Graph) -> Result<()> {
        if host.m() != self.retained.len() || host.fingerprint() != self.host_fingerprint {
            return Err(Error::HostMismatch);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentSummary {
    pub count: usize,
    /// Descending; sums to `n`.
    pub sizes: Vec<usize>,
    pub giant_fraction: f64,
}

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidProbability(p))
    }
}

/// The coupling uniforms `u_e`, one per edge in canonical order.
pub fn edge_uniforms(g: &Graph, seed: u64) -> Vec<f64> {
    let mut rng = rng::stream(seed, Phase::Percolation);
    (0..g.m()).map(|_| rng::unit_f64(&mut rng)).collect()
}

pub fn percolate(g: &Graph, p: f64, seed: u64) -> Result<PercolationSample> {
    check_probability(p)?;
    Ok(PercolationSample {
        p,
        seed,
        retained: edge_uniforms(g, seed).into_iter().map(|u| u < p).collect(),
        host_fingerprint: g.fingerprint(),
    })
}

pub fn component_summary(g: &Graph, sample: &PercolationSample) -> Result<ComponentSummary> {
    sample.check_host(g)?;
    Ok(summarize(g, &sample.retained))
}

fn summarize(g: &Graph, retained: &[bool]) -> ComponentSummary {
    let n = g.n();
    let mut uf = UnionFind::<usize>::new(n);
    for ((u, v), _) in g.edges().zip(retained).filter(|(_, &k)| k) {
        uf.union(u, v);
    }
    let mut sizes = vec![0usize; n];
    for v in 0..n {
        sizes[uf.find_mut(v)] += 1;
    }
    sizes.retain(|&s| s > 0);
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let giant = sizes.first().copied().unwrap_or(0);
    ComponentSummary {
        count: sizes.len(),
        sizes,
        giant_fraction: if n == 0 { 0.0 } else { giant as f64 / n as f64 },
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionCheck {
    pub value: f64,
    pub satisfied: bool,
}

/// `rho_star(g) · max_degree(g) · p` against 1.
pub fn condition_check(g: &Graph, p: f64) -> Result<ConditionCheck> {
    condition_check_with(g, p, &SpectrumOptions::default())
}

pub fn condition_check_with(g: &Graph, p: f64, opts: &SpectrumOptions) -> Result<ConditionCheck> {
    check_probability(p)?;
    let rho = spectrum_with(g, opts)?.rho_star;
    Ok(condition_from_rho(rho, g.max_degree(), p))
}

fn condition_from_rho(rho_star: f64, max_degree: usize, p: f64) -> ConditionCheck {
    let value = rho_star * max_degree as f64 * p;
    ConditionCheck {
        value,
        satisfied: value < 1.0,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub seed_count: usize,
    pub giant_mean: f64,
    /// Sample standard deviation; zero for a single seed.
    pub giant_std: f64,
    pub condition: Option<ConditionCheck>,
}

/// Giant-fraction statistics per grid point. Seed `i` is
/// `split(base_seed, i)` at every `p`, so rows share their coupling.
pub fn percolation_sweep(
    g: &Graph,
    grid: &[f64],
    seeds: usize,
    base_seed: u64,
    check_condition: bool,
) -> Result<Vec<SweepRow>> {
    if grid.is_empty() {
        return Err(Error::param("percolation grid is empty"));
    }
    if seeds == 0 {
        return Err(Error::param("sweep needs at least one seed"));
    }
    for &p in grid {
        check_probability(p)?;
    }
    let rho = if check_condition {
        Some(spectrum_with(g, &SpectrumOptions::default())?.rho_star)
    } else {
        None
    };
    // fractions[i][j]: seed i, grid point j
    let fractions: Vec<Vec<f64>> = (0..seeds as u64)
        .into_par_iter()
        .map(|i| {
            let u = edge_uniforms(g, rng::split(base_seed, i));
            grid.iter()
                .map(|&p| {
                    let kept: Vec<bool> = u.iter().map(|&x| x < p).collect();
                    summarize(g, &kept).giant_fraction
                })
                .collect()
        })
        .collect();
    Ok(grid
        .iter()
        .enumerate()
        .map(|(j, &p)| {
            let xs: Vec<f64> = fractions.iter().map(|row| row[j]).collect();
            let mean = xs.iter().sum::<f64>() / seeds as f64;
            let std = if seeds > 1 {
                (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (seeds - 1) as f64).sqrt()
            } else {
                0.0
            };
            SweepRow {
                p,
                seed_count: seeds,
                giant_mean: mean,
                giant_std: std,
                condition: rho.map(|r| condition_from_rho(r, g.max_degree(), p)),
            }
        })
        .collect())
}
