use std::fmt;
use std::str::FromStr;

use super::matrix::{GroupElement, ModMatrix, ProductElement};
use crate::error::{Error, Result};

/// A finite generating set. `core` keeps the generators as supplied (before
/// inverses were added); `elements` is what Cayley enumeration walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet<E> {
    core: Vec<E>,
    elements: Vec<E>,
    symmetric: bool,
}

impl<E: GroupElement> GeneratorSet<E> {
    /// Unsymmetrized set; duplicates and identities are dropped.
    pub fn new(core: Vec<E>) -> Self {
        let elements = dedup_non_identity(core.iter().cloned());
        GeneratorSet {
            core,
            elements,
            symmetric: false,
        }
    }

    /// `{s, s⁻¹ : s ∈ core}` without the identity, deduplicated, in the order
    /// all core elements first, then their inverses.
    pub fn symmetric(core: Vec<E>) -> Self {
        let with_inverses = core
            .iter()
            .cloned()
            .chain(core.iter().map(GroupElement::inverse));
        let elements = dedup_non_identity(with_inverses);
        GeneratorSet {
            core,
            elements,
            symmetric: true,
        }
    }

    pub fn symmetrize(&self) -> Self {
        Self::symmetric(self.core.clone())
    }

    pub fn core(&self) -> &[E] {
        &self.core
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Closed under inversion, as a set.
    pub fn is_inverse_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|s| self.elements.contains(&s.inverse()))
    }
}

fn dedup_non_identity<E: GroupElement>(items: impl Iterator<Item = E>) -> Vec<E> {
    let mut out: Vec<E> = Vec::new();
    for s in items {
        if !s.is_identity() && !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// The Sanov pair `[[1,2],[0,1]]`, `[[1,0],[2,1]]` mod `q`, symmetrized.
/// Over the integers it freely generates a free group of rank two.
pub fn sanov_generators(q: u64) -> Result<GeneratorSet<ModMatrix>> {
    if q < 3 {
        return Err(Error::param(format!(
            "Sanov generators need modulus >= 3 (they collapse mod {q})"
        )));
    }
    Ok(GeneratorSet::symmetric(vec![
        ModMatrix::new(2, q, &[1, 2, 0, 1])?,
        ModMatrix::new(2, q, &[1, 0, 2, 1])?,
    ]))
}

/// The elementary pair `[[1,1],[0,1]]`, `[[1,0],[1,1]]` mod `q`, symmetrized;
/// it generates all of `SL(2, Z/qZ)`.
pub fn elementary_generators(q: u64) -> Result<GeneratorSet<ModMatrix>> {
    if q < 2 {
        return Err(Error::param(format!("modulus must be at least 2, got {q}")));
    }
    Ok(GeneratorSet::symmetric(vec![
        ModMatrix::new(2, q, &[1, 1, 0, 1])?,
        ModMatrix::new(2, q, &[1, 0, 1, 1])?,
    ]))
}

/// `{a^k, b^k}` for the first two core generators, symmetrized. These lie in
/// the `k`-th power of the original set, so every edge of the new Cayley
/// graph joins vertices at distance at most `k` in the old one. For the
/// elementary pair and `k >= 2` the integer lifts generate a free group.
pub fn power_pair_generators(gs: &GeneratorSet<ModMatrix>, k: u32) -> Result<GeneratorSet<ModMatrix>> {
    if k == 0 {
        return Err(Error::param("power exponent must be at least 1"));
    }
    let [a, b] = first_two(gs)?;
    Ok(GeneratorSet::symmetric(vec![a.pow(k), b.pow(k)]))
}

fn first_two<E: GroupElement>(gs: &GeneratorSet<E>) -> Result<[E; 2]> {
    match gs.core() {
        [a, b, ..] => Ok([a.clone(), b.clone()]),
        _ => Err(Error::param(format!(
            "need at least 2 core generators, got {}",
            gs.core().len()
        ))),
    }
}

/// How two core generators `a, b` are paired into product elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pairing {
    /// `(a, a), (b, b)`: only reaches the diagonal subgroup.
    Diagonal,
    /// `(a, b), (b, a)`.
    #[default]
    Twisted,
    /// `(a, b), (b, ab)`.
    Mixed,
}

impl FromStr for Pairing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diagonal" => Ok(Pairing::Diagonal),
            "twisted" => Ok(Pairing::Twisted),
            "mixed" => Ok(Pairing::Mixed),
            other => Err(Error::param(format!("unknown pairing `{other}`"))),
        }
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pairing::Diagonal => "diagonal",
            Pairing::Twisted => "twisted",
            Pairing::Mixed => "mixed",
        })
    }
}

/// Generators of `SL × SL` built from a pair in one factor. Whether they
/// generate the whole product is not guaranteed; compare the reached order
/// reported by Cayley enumeration.
pub fn product_generators(
    gs: &GeneratorSet<ModMatrix>,
    pairing: Pairing,
) -> Result<GeneratorSet<ProductElement>> {
    let [a, b] = first_two(gs)?;
    let pairs = match pairing {
        Pairing::Diagonal => vec![(a.clone(), a), (b.clone(), b)],
        Pairing::Twisted => vec![(a.clone(), b.clone()), (b, a)],
        Pairing::Mixed => {
            let ab = a.mul(&b)?;
            vec![(a, b.clone()), (b, ab)]
        }
    };
    let core = pairs
        .into_iter()
        .map(|(l, r)| ProductElement::new(l, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorSet::symmetric(core))
}
