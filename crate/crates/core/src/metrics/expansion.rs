//! Exact vertex expansion and edge conductance by subset enumeration.
//!
//! Both routines walk every vertex subset as a bit mask, so they refuse graphs
//! above a caller-supplied size limit. Neighborhood unions are looked up from
//! two half-width tables (low bits and high bits of the mask), which keeps the
//! inner loop at a couple of table reads plus a popcount.

use std::cmp::Ordering;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};

pub type Rational = Ratio<u64>;

/// Default refusal threshold for the exponential subset loops.
pub const DEFAULT_EXACT_LIMIT: usize = 24;

// 2^40 subsets is already far past anything that finishes; masks are u64.
const MASK_LIMIT: usize = 40;

/// An optimal set together with its objective value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionWitness {
    pub value: Rational,
    pub set: VertexSubset,
}

#[derive(Clone, Copy)]
struct Candidate {
    num: u64,
    den: u64,
    mask: u64,
}

impl Candidate {
    /// Orders by ratio, then by set size, then lexicographically on the sorted
    /// member list (the set holding the lowest differing vertex comes first).
    fn cmp_key(&self, other: &Candidate) -> Ordering {
        (self.num as u128 * other.den as u128)
            .cmp(&(other.num as u128 * self.den as u128))
            .then(self.mask.count_ones().cmp(&other.mask.count_ones()))
            .then_with(|| {
                let diff = self.mask ^ other.mask;
                if diff == 0 {
                    Ordering::Equal
                } else if self.mask & (diff & diff.wrapping_neg()) != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
    }

    fn min(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
        match (a, b) {
            (Some(x), Some(y)) => Some(if y.cmp_key(&x) == Ordering::Less { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        }
    }
}

fn check_size(g: &Graph, min_n: usize, max_n: usize) -> Result<()> {
    let n = g.n();
    if n < min_n {
        return Err(Error::GraphTooSmall(n));
    }
    let limit = max_n.min(MASK_LIMIT);
    if n > limit {
        return Err(Error::ExactRefused { n, limit });
    }
    Ok(())
}

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect()
}

/// Exact `h(G)`: the minimum of `|∂S| / |S|` over sets with `0 < |S| < n/2`
/// (strict), where `∂S` is the outer vertex boundary. Zero exactly when some
/// union of components has fewer than `n/2` vertices.
pub fn cheeger_exact(g: &Graph, max_n: usize) -> Result<Rational> {
    vertex_expansion_exact(g, max_n).map(|w| w.value)
}

/// [`cheeger_exact`] with the optimal set. Ties go to the smallest set, then
/// the lexicographically smallest member list.
pub fn vertex_expansion_exact(g: &Graph, max_n: usize) -> Result<ExpansionWitness> {
    check_size(g, 3, max_n)?;
    let n = g.n();
    let nbr = neighbor_masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let lo_bits = n / 2;
    let hi_bits = n - lo_bits;
    let union_table = |offset: usize, bits: usize| -> Vec<u64> {
        let mut t = vec![0u64; 1 << bits];
        for mask in 1usize..1 << bits {
            let low = mask.trailing_zeros() as usize;
            t[mask] = t[mask & (mask - 1)] | nbr[offset + low];
        }
        t
    };
    let lo_nb = union_table(0, lo_bits);
    let hi_nb = union_table(lo_bits, hi_bits);

    let best = (0u64..1 << hi_bits)
        .into_par_iter()
        .map(|hi| {
            let hi_mask = hi << lo_bits;
            let hi_size = hi.count_ones() as u64;
            let mut best: Option<Candidate> = None;
            for lo in 0u64..1 << lo_bits {
                let size = hi_size + lo.count_ones() as u64;
                if size == 0 || 2 * size >= n as u64 {
                    continue;
                }
                let set = hi_mask | lo;
                let boundary = (lo_nb[lo as usize] | hi_nb[hi as usize]) & !set & full;
                let cand = Candidate {
                    num: boundary.count_ones() as u64,
                    den: size,
                    mask: set,
                };
                best = Candidate::min(best, Some(cand));
            }
            best
        })
        .reduce(|| None, Candidate::min)
        .expect("n >= 3 admits a singleton");
    Ok(ExpansionWitness {
        value: Rational::new(best.num, best.den),
        set: VertexSubset::from_mask(n, best.mask),
    })
}

/// Exact conductance: the minimum of `e(S, S̄) / vol(S)` over sets with
/// `0 < vol(S) <= vol(V) / 2`.
pub fn conductance_exact(g: &Graph, max_n: usize) -> Result<Rational> {
    conductance_exact_with_witness(g, max_n).map(|w| w.value)
}

pub fn conductance_exact_with_witness(g: &Graph, max_n: usize) -> Result<ExpansionWitness> {
    check_size(g, 2, max_n)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let nbr = neighbor_masks(g);
    let deg: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let total_vol: u64 = deg.iter().sum();
    let hi_bits = n - n / 2;
    let lo_bits = n / 2;

    let best = (0u64..1 << hi_bits)
        .into_par_iter()
        .map(|hi| {
            let mut best: Option<Candidate> = None;
            for lo in 0u64..1 << lo_bits {
                let set = hi << lo_bits | lo;
                if set == 0 {
                    continue;
                }
                let mut vol = 0;
                let mut cut = 0;
                let mut rest = set;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    vol += deg[v];
                    cut += (nbr[v] & !set).count_ones() as u64;
                }
                if vol == 0 || 2 * vol > total_vol {
                    continue;
                }
                let cand = Candidate {
                    num: cut,
                    den: vol,
                    mask: set,
                };
                best = Candidate::min(best, Some(cand));
            }
            best
        })
        .reduce(|| None, Candidate::min)
        .expect("a connected graph on >= 2 vertices has an admissible set");
    Ok(ExpansionWitness {
        value: Rational::new(best.num, best.den),
        set: VertexSubset::from_mask(n, best.mask),
    })
}

/// Outer vertex boundary `∂S`.
pub fn vertex_boundary(g: &Graph, s: &VertexSubset) -> Vec<usize> {
    let mut out: Vec<usize> = s
        .members()
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().copied())
        .filter(|&w| !s.contains(w))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Number of edges with exactly one endpoint in `S`.
pub fn edge_boundary_size(g: &Graph, s: &VertexSubset) -> usize {
    s.members()
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| !s.contains(w)).count())
        .sum()
}
