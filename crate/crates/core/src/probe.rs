//! Sweeps host families over girth ratios and strategies, keeping the best
//! spanning subgraph per (instance, ratio).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::{expand_family, FamilySpec};
use crate::metrics::{cheeger_exact, Girth, Rational};
use crate::rng;
use crate::search::{
    best_result, search_with_profile, strategy_seed, GirthTarget, HostProfile, SearchOptions, SearchResult,
    Strategy,
};

/// A family as written by the user together with its expanded instances.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeFamily {
    pub id: String,
    pub instances: Vec<FamilySpec>,
}

impl ProbeFamily {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(ProbeFamily {
            id: text.to_string(),
            instances: expand_family(text)?,
        })
    }
}

#[derive(Debug, Clone)]
pub struct ProbeOptions {
    pub ratios: Vec<f64>,
    /// Run order does not matter; ties are broken in name order.
    pub strategies: Vec<Strategy>,
    /// `seed` is the base seed of the whole probe.
    pub search: SearchOptions,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub strategy: Strategy,
    pub girth: Girth,
    pub gap: f64,
    pub valid: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeRecord {
    pub family: String,
    pub instance: String,
    /// Shared by an instance and its graph powers.
    pub group: String,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub host_gap: f64,
    pub host_h_exact: Option<Rational>,
    pub diameter: usize,
    pub c: f64,
    pub girth_target: usize,
    pub strategy: Strategy,
    pub best_girth: Girth,
    pub best_gap: f64,
    pub best_h_exact: Option<Rational>,
    /// `best_girth / diameter`; infinite for unbounded girth.
    pub ratio_achieved: f64,
    pub success: bool,
    pub degenerate_diameter: bool,
    pub seed: u64,
    /// Every strategy's validated outcome, in name order.
    pub candidates: Vec<Candidate>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioSummary {
    pub c: f64,
    /// Minimum best gap over the family's instances.
    pub f_estimate: f64,
    pub successes: usize,
    pub instances: usize,
    /// `(n, best girth)` in increasing `n`.
    pub girth_by_n: Vec<(usize, Girth)>,
    /// Largest instance beats the smallest; `None` with fewer than two sizes.
    pub girth_grew: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilySummary {
    pub family: String,
    pub ratios: Vec<RatioSummary>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub records: Vec<ProbeRecord>,
    pub summaries: Vec<FamilySummary>,
}

fn group_of(spec: &FamilySpec) -> String {
    match spec {
        FamilySpec::Power { inner, .. } => inner.to_string(),
        other => other.to_string(),
    }
}

pub fn conjecture_probe(families: &[ProbeFamily], opts: &ProbeOptions) -> Result<ProbeReport> {
    if opts.ratios.is_empty() {
        return Err(Error::param("ratio grid is empty"));
    }
    for &c in &opts.ratios {
        GirthTarget::Ratio(c).validate()?;
    }
    if opts.strategies.is_empty() {
        return Err(Error::param("no strategies selected"));
    }
    let mut strategies = opts.strategies.clone();
    strategies.sort_unstable();
    strategies.dedup();

    let mut records = Vec::new();
    let mut summaries = Vec::new();
    let mut instance_index = 0u64;
    for family in families {
        let first = records.len();
        for spec in &family.instances {
            let host = spec.build()?;
            if host.n() < 2 {
                return Err(Error::GraphTooSmall(host.n()));
            }
            let profile = HostProfile::measure(&host, &opts.search.spectral)?;
            let host_h_exact = if host.n() >= 3 && host.n() <= opts.search.exact_limit {
                Some(cheeger_exact(&host, opts.search.exact_limit)?)
            } else {
                None
            };
            let instance_seed = rng::split(opts.search.seed, instance_index);
            instance_index += 1;
            for (j, &c) in opts.ratios.iter().enumerate() {
                let ratio_seed = rng::split(instance_seed, j as u64);
                let results: Vec<SearchResult> = strategies
                    .par_iter()
                    .map(|&s| {
                        let run = SearchOptions {
                            seed: strategy_seed(ratio_seed, s),
                            ..opts.search
                        };
                        search_with_profile(&host, &profile, GirthTarget::Ratio(c), s, &run)
                    })
                    .collect::<Result<_>>()?;
                let best = best_result(&results).expect("at least one strategy");
                let ratio_achieved = match best.girth {
                    Girth::Finite(g) => g as f64 / profile.diameter as f64,
                    Girth::Unbounded => f64::INFINITY,
                };
                records.push(ProbeRecord {
                    family: family.id.clone(),
                    instance: spec.to_string(),
                    group: group_of(spec),
                    n: host.n(),
                    m: host.m(),
                    d: profile.max_degree,
                    host_gap: profile.gap,
                    host_h_exact,
                    diameter: profile.diameter,
                    c,
                    girth_target: best.target,
                    strategy: best.strategy,
                    best_girth: best.girth,
                    best_gap: best.gap,
                    best_h_exact: best.h_exact,
                    ratio_achieved,
                    success: best.is_valid(),
                    degenerate_diameter: profile.diameter == 1,
                    seed: best.seed,
                    candidates: results
                        .iter()
                        .map(|r| Candidate {
                            strategy: r.strategy,
                            girth: r.girth,
                            gap: r.gap,
                            valid: r.is_valid(),
                        })
                        .collect(),
                });
            }
        }
        summaries.push(summarize(&family.id, &opts.ratios, &records[first..]));
    }
    Ok(ProbeReport { records, summaries })
}

fn summarize(family: &str, ratios: &[f64], records: &[ProbeRecord]) -> FamilySummary {
    let ratios = ratios
        .iter()
        .map(|&c| {
            let rows: Vec<&ProbeRecord> = records.iter().filter(|r| r.c == c).collect();
            let mut girth_by_n: Vec<(usize, Girth)> = rows.iter().map(|r| (r.n, r.best_girth)).collect();
            girth_by_n.sort();
            let girth_grew = match (girth_by_n.first(), girth_by_n.last()) {
                (Some(a), Some(b)) if a.0 < b.0 => Some(b.1 > a.1),
                _ => None,
            };
            RatioSummary {
                c,
                f_estimate: rows.iter().map(|r| r.best_gap).fold(f64::INFINITY, f64::min),
                successes: rows.iter().filter(|r| r.success).count(),
                instances: rows.len(),
                girth_by_n,
                girth_grew,
            }
        })
        .collect();
    FamilySummary {
        family: family.to_string(),
        ratios,
    }
}
