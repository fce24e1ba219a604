//! `SL(m, Z/qZ)`, direct products of two copies, generator recipes and
//! Cayley graph enumeration.

mod cayley;
mod generators;
mod matrix;
mod tower;
mod words;

pub use cayley::{cayley_graph, CayleyGraph};
pub use generators::{
    elementary_generators, power_pair_generators, product_generators, sanov_generators, GeneratorSet,
    Pairing,
};
pub use matrix::{sl2_order, GroupElement, ModMatrix, ProductElement};
pub use tower::{girth_tower_report, TowerOptions, TowerReport, TowerRow};
pub use words::{
    find_relation, IntMat2, Letter, Relation, DEFAULT_RELATION_LENGTH, ELEMENTARY_PAIR, SANOV_PAIR,
};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on Cayley enumeration.
pub const DEFAULT_ORDER_CAP: usize = 1 << 21;

/// Base pair of `SL(2)` generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasePair {
    Sanov,
    Elementary,
}

/// Named generator recipes: `sanov`, `elementary`, `elementary-power:<k>`,
/// `product:<pairing>` (Sanov base) and `product:<pairing>:elementary`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recipe {
    Sanov,
    Elementary,
    /// `{x^k, y^k}` from the elementary pair.
    ElementaryPower(u32),
    Product(Pairing, BasePair),
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["sanov"] => Ok(Recipe::Sanov),
            ["elementary"] => Ok(Recipe::Elementary),
            ["elementary-power"] => Ok(Recipe::ElementaryPower(2)),
            ["elementary-power", k] => k
                .parse()
                .ok()
                .filter(|&k| k >= 1)
                .map(Recipe::ElementaryPower)
                .ok_or_else(|| Error::param(format!("bad power exponent `{k}`"))),
            ["product"] => Ok(Recipe::Product(Pairing::default(), BasePair::Sanov)),
            ["product", pairing] => Ok(Recipe::Product(pairing.parse()?, BasePair::Sanov)),
            ["product", pairing, "sanov"] => Ok(Recipe::Product(pairing.parse()?, BasePair::Sanov)),
            ["product", pairing, "elementary"] => {
                Ok(Recipe::Product(pairing.parse()?, BasePair::Elementary))
            }
            _ => Err(Error::param(format!("unknown generator recipe `{s}`"))),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Sanov => f.write_str("sanov"),
            Recipe::Elementary => f.write_str("elementary"),
            Recipe::ElementaryPower(k) => write!(f, "elementary-power:{k}"),
            Recipe::Product(p, BasePair::Sanov) => write!(f, "product:{p}"),
            Recipe::Product(p, BasePair::Elementary) => write!(f, "product:{p}:elementary"),
        }
    }
}

fn base_generators(base: BasePair, q: u64) -> Result<GeneratorSet<ModMatrix>> {
    match base {
        BasePair::Sanov => sanov_generators(q),
        BasePair::Elementary => elementary_generators(q),
    }
}

/// A Cayley graph over either a single `SL(2, Z/qZ)` or a product of two.
#[derive(Debug, Clone)]
pub enum AnyCayley {
    Linear(CayleyGraph<ModMatrix>),
    Product(CayleyGraph<ProductElement>),
}

impl AnyCayley {
    pub fn graph(&self) -> &Graph {
        match self {
            AnyCayley::Linear(c) => &c.graph,
            AnyCayley::Product(c) => &c.graph,
        }
    }

    pub fn into_graph(self) -> Graph {
        match self {
            AnyCayley::Linear(c) => c.graph,
            AnyCayley::Product(c) => c.graph,
        }
    }

    pub fn reached_order(&self) -> usize {
        match self {
            AnyCayley::Linear(c) => c.reached_order,
            AnyCayley::Product(c) => c.reached_order,
        }
    }

    pub fn full_group_order(&self) -> Option<u64> {
        match self {
            AnyCayley::Linear(c) => c.full_group_order,
            AnyCayley::Product(c) => c.full_group_order,
        }
    }

    pub fn label_text(&self) -> String {
        match self {
            AnyCayley::Linear(c) => c.label_text(),
            AnyCayley::Product(c) => c.label_text(),
        }
    }
}

/// Builds the Cayley graph of the subgroup generated by `recipe` mod `q`.
pub fn build_cayley(recipe: Recipe, q: u64, order_cap: usize) -> Result<AnyCayley> {
    Ok(match recipe {
        Recipe::Sanov => AnyCayley::Linear(cayley_graph(&sanov_generators(q)?, order_cap)?),
        Recipe::Elementary => AnyCayley::Linear(cayley_graph(&elementary_generators(q)?, order_cap)?),
        Recipe::ElementaryPower(k) => {
            let gs = power_pair_generators(&elementary_generators(q)?, k)?;
            AnyCayley::Linear(cayley_graph(&gs, order_cap)?)
        }
        Recipe::Product(pairing, base) => {
            let gs = product_generators(&base_generators(base, q)?, pairing)?;
            AnyCayley::Product(cayley_graph(&gs, order_cap)?)
        }
    })
}
