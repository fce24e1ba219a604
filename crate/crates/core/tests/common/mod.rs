#![allow(dead_code)]

use expander_core::metrics::Rational;
use expander_core::{Edge, Graph};
use proptest::prelude::*;

/// All pairs `u < v` of `0..n` in lexicographic order.
pub fn pairs(n: usize) -> Vec<Edge> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Arbitrary simple graph on `lo..=hi` vertices.
pub fn any_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let all = pairs(n);
        proptest::collection::vec(any::<bool>(), all.len()).prop_map(move |mask| {
            let edges = all.iter().zip(&mask).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Connected graph: a random recursive tree plus arbitrary extra edges.
pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let all = pairs(n);
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        (parents, proptest::collection::vec(prop::bool::weighted(0.25), all.len())).prop_map(
            move |(parents, mask)| {
                let mut edges: Vec<Edge> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
                edges.extend(all.iter().zip(&mask).filter(|(_, &k)| k).map(|(&e, _)| e));
                Graph::from_edges_collapsing(n, edges)
            },
        )
    })
}

/// Outer vertex boundary ratio minimized over `0 < |S| < n/2`, written
/// independently of the library (plain loops, no lookup tables).
pub fn brute_force_cheeger(g: &Graph) -> Rational {
    let n = g.n();
    let mut best: Option<Rational> = None;
    for mask in 1u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if 2 * size >= n {
            continue;
        }
        let mut boundary = 0u64;
        for v in 0..n {
            if mask >> v & 1 == 1 {
                for &w in g.neighbors(v) {
                    if mask >> w & 1 == 0 {
                        boundary |= 1 << w;
                    }
                }
            }
        }
        let r = Rational::new(boundary.count_ones() as u64, size as u64);
        if best.is_none_or(|b| r < b) {
            best = Some(r);
        }
    }
    best.expect("n >= 3 has an admissible set")
}

/// Subset of edges selected by a mask (mask may be longer than `m`).
pub fn select(g: &Graph, mask: &[bool]) -> Vec<Edge> {
    g.edges().zip(mask.iter().chain(std::iter::repeat(&false))).filter(|(_, &k)| k).map(|(e, _)| e).collect()
}
