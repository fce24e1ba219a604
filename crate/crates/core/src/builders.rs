//! Graph constructors that are not Cayley graphs.

use std::collections::VecDeque;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{self, Phase};

/// Whole-sample rejection budget for the configuration model.
pub const RANDOM_REGULAR_RETRIES: usize = 10_000;

/// Vertex cap for Cartesian products.
pub const PRODUCT_VERTEX_CAP: usize = 1 << 24;

/// Uniform simple `d`-regular graph on `n` vertices: a uniform perfect
/// matching of the `n·d` stubs, resampled from scratch until it has no loop
/// and no repeated edge.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n {
        return Err(Error::param(format!("degree {d} must be below n = {n}")));
    }
    if (n * d) % 2 == 1 {
        return Err(Error::param(format!("n·d = {} must be even", n * d)));
    }
    let mut rng = rng::stream(seed, Phase::RandomRegular);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(d); n];
    'attempt: for _ in 0..RANDOM_REGULAR_RETRIES {
        rng::shuffle(&mut rng, &mut stubs);
        adj.iter_mut().for_each(Vec::clear);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(&v) {
                continue 'attempt;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        return Ok(Graph::from_adjacency_unchecked(adj));
    }
    Err(Error::RetryCapExceeded(RANDOM_REGULAR_RETRIES))
}

/// `G^k`: same vertices, `u ~ v` iff `1 <= dist(u, v) <= k`.
pub fn graph_power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::param("graph power exponent must be at least 1"));
    }
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    let mut dist = vec![usize::MAX; n];
    let mut seen = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist[s] = 0;
        seen.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if dist[u] == k {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    seen.push(w);
                    queue.push_back(w);
                }
            }
        }
        for &v in &seen {
            if v != s {
                adj[s].push(v);
            }
            dist[v] = usize::MAX;
        }
        seen.clear();
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Cartesian product `g □ h` with vertex `(u, a)` at index `u·|h| + a`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g
        .n()
        .checked_mul(h.n())
        .filter(|&n| n <= PRODUCT_VERTEX_CAP)
        .ok_or_else(|| {
            Error::param(format!(
                "product of {} and {} vertices exceeds the cap of {PRODUCT_VERTEX_CAP}",
                g.n(),
                h.n()
            ))
        })?;
    let nh = h.n();
    let mut adj = vec![Vec::new(); n];
    for u in 0..g.n() {
        for a in 0..nh {
            let list = &mut adj[u * nh + a];
            list.extend(h.neighbors(a).iter().map(|&b| u * nh + b));
            list.extend(g.neighbors(u).iter().map(|&v| v * nh + a));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Cycle,
    Complete,
    Petersen,
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle" => Ok(NamedGraph::Cycle),
            "complete" => Ok(NamedGraph::Complete),
            "petersen" => Ok(NamedGraph::Petersen),
            other => Err(Error::param(format!("unknown named graph `{other}`"))),
        }
    }
}

/// Reference graphs. `n` is ignored for Petersen, which is built as the
/// Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint.
pub fn named_graph(kind: NamedGraph, n: usize) -> Result<Graph> {
    match kind {
        NamedGraph::Cycle => {
            if n < 3 {
                return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        NamedGraph::Complete => {
            if n < 1 {
                return Err(Error::param("complete graph needs n >= 1"));
            }
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        NamedGraph::Petersen => {
            let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
            let disjoint = |x: (usize, usize), y: (usize, usize)| x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1;
            let edges = (0..10).flat_map(|i| (i + 1..10).map(move |j| (i, j)));
            Graph::from_edges(10, edges.filter(|&(i, j)| disjoint(pairs[i], pairs[j])))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{diameter, girth, Diameter, Girth};

    #[test]
    fn random_regular_basic_properties() {
        let g = random_regular(10, 3, 1).unwrap();
        assert_eq!(g.m(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(random_regular(10, 3, 1).unwrap(), g);
        assert_eq!(random_regular(7, 0, 3).unwrap().m(), 0);
    }

    #[test]
    fn random_regular_rejects_bad_parameters() {
        assert!(random_regular(5, 3, 0).is_err());
        assert!(random_regular(4, 4, 0).is_err());
    }

    #[test]
    fn powers() {
        let c6 = named_graph(NamedGraph::Cycle, 6).unwrap();
        assert_eq!(graph_power(&c6, 1).unwrap(), c6);
        let sq = graph_power(&c6, 2).unwrap();
        assert!((0..6).all(|v| sq.degree(v) == 4));
        assert_eq!(diameter(&sq), Diameter::Finite(2));
        let big = graph_power(&c6, 3).unwrap();
        assert_eq!(big, named_graph(NamedGraph::Complete, 6).unwrap());
        assert!(graph_power(&c6, 0).is_err());
    }

    #[test]
    fn products() {
        let k2 = named_graph(NamedGraph::Complete, 2).unwrap();
        let sq = cartesian_product(&k2, &k2).unwrap();
        assert_eq!((sq.n(), sq.m()), (4, 4));
        assert!((0..4).all(|v| sq.degree(v) == 2));
        assert!(sq.is_connected());

        let c3 = named_graph(NamedGraph::Cycle, 3).unwrap();
        let t = cartesian_product(&c3, &c3).unwrap();
        assert_eq!(t.n(), 9);
        assert!((0..9).all(|v| t.degree(v) == 4));
        assert_eq!(diameter(&t), Diameter::Finite(2));
        assert_eq!(girth(&t), Girth::Finite(3));

        let p = named_graph(NamedGraph::Petersen, 0).unwrap();
        assert_eq!(cartesian_product(&p, &Graph::empty(1)).unwrap(), p);
    }

    #[test]
    fn named() {
        let c8 = named_graph(NamedGraph::Cycle, 8).unwrap();
        assert_eq!((girth(&c8), diameter(&c8)), (Girth::Finite(8), Diameter::Finite(4)));
        let p = named_graph(NamedGraph::Petersen, 0).unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(named_graph(NamedGraph::Complete, 4).unwrap().m(), 6);
        assert!(named_graph(NamedGraph::Cycle, 2).is_err());
        assert!(named_graph(NamedGraph::Complete, 0).is_err());
    }
}
