//! Spanning subgraphs of a host graph with a girth floor and as much
//! expansion as can be kept.
//!
//! Three strategies are provided and can be raced against each other:
//!
//! * `trim`: delete edges of shortest cycles until the girth target holds;
//! * `percolate-repair`: bond-percolate, reconnect the pieces with bridges,
//!   add long-range host edges that cannot close short cycles, then trim the
//!   residue;
//! * `anneal`: simulated annealing over edge subsets started from the trim
//!   output.
//!
//! Whatever a strategy returns is re-measured from scratch before it is
//! reported.

mod anneal;
mod repair;
mod trim;

pub use anneal::{anneal, AnnealOptions, AnnealOutcome};
pub use repair::{augment_edges, reconnect_repair, Augmented};
pub use trim::trim_to_girth;

pub use crate::metrics::shortest_cycle;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::metrics::{cheeger_exact, diameter, girth, spectrum_with, Diameter, Girth, Rational, SpectrumOptions};
use crate::percolation::percolate;
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strategy {
    Anneal,
    PercolateRepair,
    Trim,
}

impl Strategy {
    /// In name order.
    pub const ALL: [Strategy; 3] = [Strategy::Anneal, Strategy::PercolateRepair, Strategy::Trim];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Anneal => "anneal",
            Strategy::PercolateRepair => "percolate-repair",
            Strategy::Trim => "trim",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::param(format!("unknown strategy `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GirthTarget {
    /// `ceil(c · diameter)`, with `0 < c <= 1`.
    Ratio(f64),
    Absolute(usize),
}

/// Slack absorbing representation error in `c · D` before the ceiling, so
/// that e.g. `0.1 · 10` gives 1 rather than 2.
const CEIL_SLACK: f64 = 1e-9;

impl GirthTarget {
    pub fn validate(self) -> Result<Self> {
        match self {
            GirthTarget::Ratio(c) if !(c > 0.0 && c <= 1.0) => {
                Err(Error::param(format!("girth ratio {c} outside (0, 1]")))
            }
            _ => Ok(self),
        }
    }

    /// The integer target for a host of the given diameter, never below 3.
    pub fn resolve(self, diameter: usize) -> usize {
        let raw = match self {
            GirthTarget::Ratio(c) => (c * diameter as f64 - CEIL_SLACK).ceil().max(0.0) as usize,
            GirthTarget::Absolute(t) => t,
        };
        raw.max(3)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub budget: usize,
    pub seed: u64,
    /// Retention probability for `percolate-repair`; default
    /// `clamp(1 / (rho_star · d), 0.05, 0.95)`.
    pub percolation_p: Option<f64>,
    pub anneal: AnnealOptions,
    pub spectral: SpectrumOptions,
    /// Exact `h` on the result only up to this many vertices.
    pub exact_limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 1000,
            seed: 0,
            percolation_p: None,
            anneal: AnnealOptions::default(),
            spectral: SpectrumOptions::default(),
            exact_limit: crate::metrics::DEFAULT_EXACT_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    /// Sorted subset of the host edges.
    pub kept: Vec<Edge>,
    pub n: usize,
    pub target: usize,
    pub girth: Girth,
    /// `1 - λ₂` of the kept subgraph; 0 when it is disconnected.
    pub gap: f64,
    pub h_exact: Option<Rational>,
    pub connected: bool,
    pub strategy: Strategy,
    pub seed: u64,
    pub iterations_used: usize,
}

impl SearchResult {
    pub fn meets_target(&self) -> bool {
        self.girth.meets(self.target)
    }

    /// Girth target met on a connected spanning subgraph.
    pub fn is_valid(&self) -> bool {
        self.meets_target() && self.connected
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n, self.kept.iter().copied()).expect("kept edges come from a simple host")
    }
}

/// Host-level quantities shared by every run on the same host.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HostProfile {
    pub diameter: usize,
    pub gap: f64,
    pub rho_star: f64,
    pub max_degree: usize,
}

impl HostProfile {
    pub fn measure(host: &Graph, spectral: &SpectrumOptions) -> Result<Self> {
        let Diameter::Finite(d) = diameter(host) else {
            return Err(Error::Disconnected);
        };
        let (gap, rho_star) = if host.n() >= 2 {
            let s = spectrum_with(host, spectral)?;
            (s.gap, s.rho_star)
        } else {
            (0.0, 0.0)
        };
        Ok(HostProfile {
            diameter: d,
            gap,
            rho_star,
            max_degree: host.max_degree(),
        })
    }

    pub fn default_percolation_p(&self) -> f64 {
        let x = 1.0 / (self.rho_star * self.max_degree as f64);
        if x.is_finite() {
            x.clamp(0.05, 0.95)
        } else {
            0.95
        }
    }
}

/// Re-measures a candidate edge set from scratch.
pub fn validate(
    host: &Graph,
    kept: &[Edge],
    target: usize,
    strategy: Strategy,
    seed: u64,
    iterations_used: usize,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    let g = host.edge_subgraph(kept)?;
    let connected = g.is_connected();
    let gap = if connected && g.n() >= 2 {
        spectrum_with(&g, &opts.spectral)?.gap
    } else {
        0.0
    };
    let h_exact = if g.n() >= 3 && g.n() <= opts.exact_limit {
        Some(cheeger_exact(&g, opts.exact_limit)?)
    } else {
        None
    };
    Ok(SearchResult {
        kept: g.edges().collect(),
        n: g.n(),
        target,
        girth: girth(&g),
        gap,
        h_exact,
        connected,
        strategy,
        seed,
        iterations_used,
    })
}

pub fn search_spanning_subexpander(
    host: &Graph,
    target: GirthTarget,
    strategy: Strategy,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    let profile = HostProfile::measure(host, &opts.spectral)?;
    search_with_profile(host, &profile, target, strategy, opts)
}

/// As [`search_spanning_subexpander`] with host quantities measured once.
pub fn search_with_profile(
    host: &Graph,
    profile: &HostProfile,
    target: GirthTarget,
    strategy: Strategy,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    if opts.budget == 0 {
        return Err(Error::param("search budget must be positive"));
    }
    let t = target.validate()?.resolve(profile.diameter);
    let (kept, iterations) = match strategy {
        Strategy::Trim => {
            let (g, deletions) = trim::trim_to_girth_counted(host, t);
            (g.edges().collect::<Vec<_>>(), deletions)
        }
        Strategy::PercolateRepair => {
            let p = opts.percolation_p.unwrap_or_else(|| profile.default_percolation_p());
            let sample = percolate(host, p, opts.seed)?;
            let repaired = reconnect_repair(host, &sample.retained_edges(host)?)?;
            let augmented = augment_edges(host, &repaired, t, opts.budget)?;
            let (g, deletions) = trim::trim_to_girth_counted(&host.edge_subgraph(&augmented.kept)?, t);
            (g.edges().collect(), augmented.added.len() + deletions)
        }
        Strategy::Anneal => {
            let start: Vec<Edge> = trim_to_girth(host, t).edges().collect();
            let out = anneal(host, &start, t, opts.budget, opts.seed, profile.gap, &opts.anneal, &opts.spectral)?;
            (out.kept, opts.budget)
        }
    };
    validate(host, &kept, t, strategy, opts.seed, iterations, opts)
}

/// Ordering used to pick a winner among strategy results for one target:
/// valid results by gap, otherwise by girth then gap. Earlier entries win
/// ties, so callers pass results in strategy name order.
pub fn best_result(results: &[SearchResult]) -> Option<&SearchResult> {
    let better = |a: &SearchResult, b: &SearchResult| -> bool {
        match (a.is_valid(), b.is_valid()) {
            (true, false) => true,
            (false, true) => false,
            (true, true) => a.gap > b.gap,
            (false, false) => a.girth > b.girth || (a.girth == b.girth && a.gap > b.gap),
        }
    };
    results
        .iter()
        .fold(None, |best: Option<&SearchResult>, r| match best {
            Some(b) if !better(r, b) => Some(b),
            _ => Some(r),
        })
}

/// Child seed for strategy `s` under `seed`.
pub fn strategy_seed(seed: u64, s: Strategy) -> u64 {
    rng::split(seed, s as u64)
}
