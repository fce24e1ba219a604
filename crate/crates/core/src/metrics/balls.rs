//! Expansion of induced balls around every vertex.

use super::expansion::{cheeger_exact, Rational};
use super::spectral::{spectrum_with, SpectrumOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq)]
pub struct BallRow {
    pub vertex: usize,
    pub size: usize,
    pub edges: usize,
    /// Spectral gap of the ball; absent for single-vertex balls.
    pub gap: Option<f64>,
    pub h_exact: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BallSummary {
    pub min_gap: Option<f64>,
    pub median_gap: Option<f64>,
    pub min_h_exact: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BallProfile {
    pub radius: usize,
    pub rows: Vec<BallRow>,
    pub summary: BallSummary,
}

/// Metrics of `induced_ball(g, v, radius)` for every vertex `v`. Exact
/// expansion is included for balls with `3 <= size <= exact_limit`.
pub fn ball_expansion_profile(g: &Graph, radius: usize, exact_limit: usize) -> Result<BallProfile> {
    ball_expansion_profile_with(g, radius, exact_limit, &SpectrumOptions::default())
}

pub fn ball_expansion_profile_with(
    g: &Graph,
    radius: usize,
    exact_limit: usize,
    spectral: &SpectrumOptions,
) -> Result<BallProfile> {
    if radius == 0 {
        return Err(Error::param("ball radius must be at least 1"));
    }
    let mut rows = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let ball = g.induced_ball(v, radius)?.graph;
        let gap = if ball.n() >= 2 {
            Some(spectrum_with(&ball, spectral)?.gap)
        } else {
            None
        };
        let h_exact = if ball.n() >= 3 && ball.n() <= exact_limit {
            Some(cheeger_exact(&ball, exact_limit)?)
        } else {
            None
        };
        rows.push(BallRow {
            vertex: v,
            size: ball.n(),
            edges: ball.m(),
            gap,
            h_exact,
        });
    }
    let mut gaps: Vec<f64> = rows.iter().filter_map(|r| r.gap).collect();
    gaps.sort_by(f64::total_cmp);
    let median_gap = match gaps.len() {
        0 => None,
        k if k % 2 == 1 => Some(gaps[k / 2]),
        k => Some(0.5 * (gaps[k / 2 - 1] + gaps[k / 2])),
    };
    let summary = BallSummary {
        min_gap: gaps.first().copied(),
        median_gap,
        min_h_exact: rows.iter().filter_map(|r| r.h_exact).min(),
    };
    Ok(BallProfile {
        radius,
        rows,
        summary,
    })
}
