//! Girth and spectral gap along the congruence tower `q = p, p², ..., p^n`.

use super::{build_cayley, Recipe, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};
use crate::metrics::{girth, spectrum_with, Girth, SpectrumOptions};

#[derive(Debug, Clone, PartialEq)]
pub struct TowerRow {
    pub p: u64,
    pub level: u32,
    pub modulus: u64,
    pub vertices: usize,
    pub full_order: Option<u64>,
    pub girth: Girth,
    /// Absent when the level exceeds `TowerOptions::gap_vertex_limit`.
    pub gap: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TowerReport {
    pub recipe: Recipe,
    pub rows: Vec<TowerRow>,
}

impl TowerReport {
    /// A word closing mod `p^n` also closes mod `p^{n-1}`, so girth can only
    /// grow up the tower.
    pub fn girth_monotone(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].girth <= w[1].girth)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TowerOptions {
    pub order_cap: usize,
    pub gap_vertex_limit: Option<usize>,
    pub spectral: SpectrumOptions,
}

impl Default for TowerOptions {
    fn default() -> Self {
        TowerOptions {
            order_cap: DEFAULT_ORDER_CAP,
            gap_vertex_limit: None,
            spectral: SpectrumOptions::default(),
        }
    }
}

/// One row per level `1..=n_max` of `Cay(⟨recipe mod p^level⟩)`.
pub fn girth_tower_report(p: u64, n_max: u32, recipe: Recipe, opts: &TowerOptions) -> Result<TowerReport> {
    if p < 2 {
        return Err(Error::param(format!("prime must be at least 2, got {p}")));
    }
    if n_max == 0 {
        return Err(Error::param("tower needs at least one level"));
    }
    let mut rows = Vec::new();
    for level in 1..=n_max {
        let modulus = p
            .checked_pow(level)
            .ok_or_else(|| Error::param(format!("{p}^{level} overflows")))?;
        let cayley = build_cayley(recipe, modulus, opts.order_cap)?;
        let g = cayley.graph();
        let gap = match opts.gap_vertex_limit {
            Some(limit) if g.n() > limit => None,
            _ if g.n() < 2 => None,
            _ => Some(spectrum_with(g, &opts.spectral)?.gap),
        };
        rows.push(TowerRow {
            p,
            level,
            modulus,
            vertices: cayley.reached_order(),
            full_order: cayley.full_group_order(),
            girth: girth(g),
            gap,
        });
    }
    Ok(TowerReport { recipe, rows })
}
