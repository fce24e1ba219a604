//! Girth, shortest cycles and diameter by breadth-first search.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{bfs_from, Graph};

/// Length of the shortest cycle; forests have unbounded girth.
///
/// `Unbounded` orders above every finite value, so comparisons treat it as +∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Girth {
    Finite(usize),
    Unbounded,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Unbounded => None,
        }
    }

    pub fn meets(self, target: usize) -> bool {
        self >= Girth::Finite(target)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Unbounded => f.write_str("unbounded"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => f.write_str("disconnected"),
        }
    }
}

/// A closed walk found from a BFS root: the non-tree edge `(u, w)` together
/// with the tree paths back to the root.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RootCycle {
    pub len: usize,
    pub u: usize,
    pub w: usize,
}

/// Reusable BFS buffers for repeated per-root cycle scans.
pub(crate) struct CycleScanner {
    dist: Vec<usize>,
    parent: Vec<usize>,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
}

const UNSEEN: usize = usize::MAX;

impl CycleScanner {
    pub fn new(n: usize) -> Self {
        CycleScanner {
            dist: vec![UNSEEN; n],
            parent: vec![UNSEEN; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.dist[v] = UNSEEN;
            self.parent[v] = UNSEEN;
        }
        self.touched.clear();
        self.queue.clear();
    }

    /// Shortest closed walk through `root` of length strictly below `bound`.
    /// Among equally short walks the first one met in BFS order (sorted
    /// adjacency) wins. Leaves the BFS tree in place for [`Self::cycle`].
    pub fn scan(&mut self, adj: &[Vec<usize>], root: usize, bound: usize) -> Option<RootCycle> {
        self.reset();
        self.dist[root] = 0;
        self.touched.push(root);
        self.queue.push_back(root);
        let mut best: Option<RootCycle> = None;
        let mut limit = bound;
        while let Some(u) = self.queue.pop_front() {
            let du = self.dist[u];
            // Every walk detected from here on has length >= 2·du.
            if 2 * du >= limit {
                break;
            }
            for &w in &adj[u] {
                if self.dist[w] == UNSEEN {
                    self.dist[w] = du + 1;
                    self.parent[w] = u;
                    self.touched.push(w);
                    self.queue.push_back(w);
                } else if w != self.parent[u] {
                    let len = du + self.dist[w] + 1;
                    if len < limit {
                        limit = len;
                        best = Some(RootCycle { len, u, w });
                    }
                }
            }
        }
        best
    }

    /// Vertex sequence of the walk found by the last [`Self::scan`], starting at
    /// the root. It is a simple cycle whenever its length equals the girth.
    pub fn cycle(&self, found: RootCycle) -> Vec<usize> {
        let path = |mut v: usize| {
            let mut p = vec![v];
            while self.parent[v] != UNSEEN {
                v = self.parent[v];
                p.push(v);
            }
            p.reverse();
            p
        };
        let mut left = path(found.u);
        let right = path(found.w);
        left.extend(right.into_iter().skip(1).rev());
        left
    }
}

/// Girth of raw adjacency lists; stops early once a triangle is found.
fn girth_of(adj: &[Vec<usize>]) -> Girth {
    girth_below(adj, usize::MAX)
}

/// `min(girth, Finite(bound))`-style query: returns the girth if it is below
/// `bound`, otherwise `Unbounded` (meaning "at least `bound`").
pub(crate) fn girth_below(adj: &[Vec<usize>], bound: usize) -> Girth {
    let mut scanner = CycleScanner::new(adj.len());
    let mut best = bound;
    for root in 0..adj.len() {
        if let Some(c) = scanner.scan(adj, root, best) {
            best = c.len;
            if best == 3 {
                break;
            }
        }
    }
    if best < bound {
        Girth::Finite(best)
    } else {
        Girth::Unbounded
    }
}

pub fn girth(g: &Graph) -> Girth {
    girth_of(g.adjacency())
}

/// One cycle of length exactly `girth(g)`: the smallest root carrying a
/// shortest cycle, with BFS tie-breaking by sorted adjacency.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    shortest_cycle_of(g.adjacency())
}

fn shortest_cycle_of(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut scanner = CycleScanner::new(adj.len());
    let mut best: Option<Vec<usize>> = None;
    for root in 0..adj.len() {
        let bound = best.as_ref().map_or(usize::MAX, Vec::len);
        if let Some(c) = scanner.scan(adj, root, bound) {
            best = Some(scanner.cycle(c));
            if c.len == 3 {
                break;
            }
        }
    }
    best
}

pub fn eccentricity(g: &Graph, v: usize) -> Option<usize> {
    bfs_from(g.adjacency(), v, usize::MAX)
        .into_iter()
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
}

pub fn diameter(g: &Graph) -> Diameter {
    if g.n() == 0 {
        return Diameter::Finite(0);
    }
    if !g.is_connected() {
        return Diameter::Disconnected;
    }
    let d = (0..g.n())
        .into_par_iter()
        .map(|v| eccentricity(g, v).expect("connected"))
        .max()
        .unwrap_or(0);
    Diameter::Finite(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{named_graph, NamedGraph};

    fn is_cycle_of(g: &Graph, cyc: &[usize]) -> bool {
        let k = cyc.len();
        let mut sorted = cyc.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == k && (0..k).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % k]))
    }

    #[test]
    fn girth_of_reference_graphs() {
        assert_eq!(girth(&named_graph(NamedGraph::Cycle, 5).unwrap()), Girth::Finite(5));
        assert_eq!(girth(&named_graph(NamedGraph::Complete, 4).unwrap()), Girth::Finite(3));
        assert_eq!(girth(&named_graph(NamedGraph::Petersen, 0).unwrap()), Girth::Finite(5));
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(girth(&tree), Girth::Unbounded);
        assert_eq!(girth(&Graph::empty(3)), Girth::Unbounded);
    }

    #[test]
    fn even_cycles_are_detected() {
        for n in 4..12 {
            assert_eq!(girth(&named_graph(NamedGraph::Cycle, n).unwrap()), Girth::Finite(n));
        }
    }

    #[test]
    fn shortest_cycles_are_real_cycles() {
        let c5 = named_graph(NamedGraph::Cycle, 5).unwrap();
        assert_eq!(shortest_cycle(&c5).unwrap(), vec![0, 1, 2, 3, 4]);
        let k4 = named_graph(NamedGraph::Complete, 4).unwrap();
        let tri = shortest_cycle(&k4).unwrap();
        assert_eq!(tri, vec![0, 1, 2]);
        let p = named_graph(NamedGraph::Petersen, 0).unwrap();
        let c = shortest_cycle(&p).unwrap();
        assert_eq!(c.len(), 5);
        assert!(is_cycle_of(&p, &c));
        let tree = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(shortest_cycle(&tree).is_none());
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&named_graph(NamedGraph::Cycle, 8).unwrap()), Diameter::Finite(4));
        assert_eq!(diameter(&named_graph(NamedGraph::Petersen, 0).unwrap()), Diameter::Finite(2));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(diameter(&two), Diameter::Disconnected);
        assert_eq!(diameter(&Graph::empty(1)), Diameter::Finite(0));
    }

    #[test]
    fn bounded_girth_query() {
        let c7 = named_graph(NamedGraph::Cycle, 7).unwrap();
        assert_eq!(girth_below(c7.adjacency(), 8), Girth::Finite(7));
        assert_eq!(girth_below(c7.adjacency(), 7), Girth::Unbounded);
    }
}
