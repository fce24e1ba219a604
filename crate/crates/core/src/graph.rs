//! Immutable simple undirected graphs on dense vertex indices `0..n`.
//!
//! Every other module consumes [`Graph`]. Edges are always reported in
//! lexicographic order of `(u, v)` with `u < v`; that order is the canonical
//! edge indexing used by edge masks throughout the crate.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

/// Serialization form of a graph: vertex count plus edges with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl EdgeList {
    pub fn new(n: usize, edges: Vec<Edge>) -> Self {
        EdgeList { n, edges }
    }

    /// Parses the plain-text interchange format: a header line `n m`, then
    /// `m` lines `u v`. Lines beginning with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.split('\n').enumerate() {
            let line_no = idx + 1;
            if raw.starts_with('#') || raw.is_empty() {
                continue;
            }
            last_line = line_no;
            let (a, b) = parse_pair(raw, line_no)?;
            match header {
                None => header = Some((a, b)),
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("more than the declared {m} edges"),
                        });
                    }
                    if a >= n || b >= n {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("vertex out of range for n = {n}"),
                        });
                    }
                    if a >= b {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("edge `{raw}` must satisfy u < v"),
                        });
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: last_line.max(1),
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Ok(EdgeList { n, edges })
    }

    /// Renders the canonical text form (single spaces, `\n` terminators).
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(12 * (self.edges.len() + 1));
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let bad = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let mut parts = line.split(' ');
    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(bad(format!("expected two space-separated integers, got `{line}`")));
    };
    let parse = |s: &str| {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad(format!("`{s}` is not a decimal integer")));
        }
        s.parse::<usize>()
            .map_err(|e| bad(format!("`{s}`: {e}")))
    };
    Ok((parse(a)?, parse(b)?))
}

/// A set of vertices of a host graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    n: usize,
    members: Vec<usize>,
}

impl VertexSubset {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(VertexSubset { n, members })
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "bit masks cover at most 64 vertices");
        let members = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        VertexSubset { n, members }
    }

    /// The `n`-bit mask form, available when the host has at most 64 vertices.
    pub fn to_mask(&self) -> Option<u64> {
        (self.n <= 64).then(|| self.members.iter().fold(0u64, |acc, &v| acc | 1 << v))
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn host_size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// Result of relabeling a subset of vertices to `0..k`.
#[derive(Debug, Clone)]
pub struct Relabeled {
    pub graph: Graph,
    /// `old_to_new[v]` is the new index of host vertex `v`, if retained.
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edge_list(el: &EdgeList) -> Result<Self> {
        Self::from_edges(el.n, el.edges.iter().copied())
    }

    /// Builds a graph from edges given in either orientation. Rejects
    /// self-loops, duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge(a, b));
            }
            m2 += list.len();
        }
        Ok(Graph { n, m: m2 / 2, adj })
    }

    /// Like [`Graph::from_edges`] but silently drops self-loops and repeated
    /// edges. Used by constructions that naturally produce multigraphs.
    pub fn from_edges_collapsing(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        Self::from_adjacency_unchecked(adj)
    }

    /// Sorts and dedups raw adjacency lists. The lists must already be
    /// symmetric and loop-free.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        let mut m2 = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Graph {
            n: adj.len(),
            m: m2 / 2,
            adj,
        }
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n,
            edges: self.edges().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Position of `(u, v)` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = (u.min(v), u.max(v));
        if v >= self.n || !self.has_edge(u, v) {
            return None;
        }
        let before: usize = (0..u)
            .map(|w| self.adj[w].iter().filter(|&&x| x > w).count())
            .sum();
        let within = self.adj[u].iter().filter(|&&x| x > u && x < v).count();
        Some(before + within)
    }

    /// Unweighted distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        if source >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: source,
                n: self.n,
            });
        }
        Ok(bfs_from(&self.adj, source, usize::MAX))
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || bfs_from(&self.adj, 0, usize::MAX).iter().all(Option::is_some)
    }

    /// Connected components as a label per vertex, numbered by smallest member.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        component_labels(&self.adj)
    }

    pub fn induced_subgraph(&self, s: &VertexSubset) -> Result<Relabeled> {
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        if s.host_size() != self.n {
            return Err(Error::param(format!(
                "subset is over {} vertices, graph has {}",
                s.host_size(),
                self.n
            )));
        }
        let mut old_to_new = vec![None; self.n];
        for (i, &v) in s.members().iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let adj = s
            .members()
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| old_to_new[w]).collect())
            .collect();
        Ok(Relabeled {
            graph: Self::from_adjacency_unchecked(adj),
            old_to_new,
            new_to_old: s.members().to_vec(),
        })
    }

    pub fn induced_ball(&self, center: usize, radius: usize) -> Result<Relabeled> {
        if center >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: center,
                n: self.n,
            });
        }
        let dist = bfs_from(&self.adj, center, radius);
        let members = dist
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_some())
            .map(|(v, _)| v);
        self.induced_subgraph(&VertexSubset::new(self.n, members)?)
    }

    /// Spanning subgraph on the same vertex set with exactly the listed edges.
    pub fn edge_subgraph(&self, keep: &[Edge]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in keep {
            if !self.has_edge(u, v) {
                return Err(Error::EdgeNotInHost(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// Spanning subgraph selecting edges by a mask over the canonical order.
    pub fn edge_subgraph_mask(&self, mask: &[bool]) -> Graph {
        assert_eq!(mask.len(), self.m, "mask length must equal edge count");
        let mut adj = vec![Vec::new(); self.n];
        for ((u, v), _) in self.edges().zip(mask).filter(|(_, &k)| k) {
            adj[u].push(v);
            adj[v].push(u);
        }
        Self::from_adjacency_unchecked(adj)
    }

    /// Stable 64-bit fingerprint of the edge structure (FNV-1a).
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        eat(self.n as u64);
        for (u, v) in self.edges() {
            eat(u as u64);
            eat(v as u64);
        }
        h
    }
}

/// BFS over raw adjacency lists, exploring at most `max_depth` layers.
pub(crate) fn bfs_from(adj: &[Vec<usize>], source: usize, max_depth: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices are labeled");
        if du >= max_depth {
            continue;
        }
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub(crate) fn component_labels(adj: &[Vec<usize>]) -> (usize, Vec<usize>) {
    let n = adj.len();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn empty_edge_list() {
        let g = Graph::from_edge_list(&EdgeList::new(3, vec![])).unwrap();
        assert_eq!((g.n(), g.m()), (3, 0));
        assert!(g.to_edge_list().edges.is_empty());
        assert_eq!(g.to_edge_list().n, 3);
    }

    #[test]
    fn four_cycle_from_edges() {
        let el = EdgeList::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]);
        let g = Graph::from_edge_list(&el).unwrap();
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(g.to_edge_list().edges, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(matches!(
            Graph::from_edge_list(&EdgeList::new(2, vec![(0, 0)])),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edge_list(&EdgeList::new(3, vec![(0, 1), (0, 1)])),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::from_edge_list(&EdgeList::new(3, vec![(0, 3)])),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn bfs_on_cycle_and_complete() {
        let d = cycle(8).bfs_distances(0).unwrap();
        let d: Vec<usize> = d.into_iter().map(Option::unwrap).collect();
        assert_eq!(d, vec![0, 1, 2, 3, 4, 3, 2, 1]);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            k4.bfs_distances(0).unwrap(),
            vec![Some(0), Some(1), Some(1), Some(1)]
        );
        assert!(k4.bfs_distances(4).is_err());
    }

    #[test]
    fn unreachable_sentinel_and_connectivity() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let d = g.bfs_distances(0).unwrap();
        assert!(d[3..].iter().all(Option::is_none));
        assert!(!g.is_connected());
        assert!(cycle(5).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn induced_subgraphs() {
        let c6 = cycle(6);
        let s = VertexSubset::new(6, [0, 1, 2]).unwrap();
        let r = c6.induced_subgraph(&s).unwrap();
        assert_eq!(r.graph.to_edge_list().edges, vec![(0, 1), (1, 2)]);
        assert_eq!(r.old_to_new[3], None);

        let all = c6.induced_subgraph(&VertexSubset::new(6, 0..6).unwrap()).unwrap();
        assert_eq!(all.graph, c6);
        assert_eq!(all.new_to_old, (0..6).collect::<Vec<_>>());

        let one = c6.induced_subgraph(&VertexSubset::new(6, [0]).unwrap()).unwrap();
        assert_eq!((one.graph.n(), one.graph.m()), (1, 0));

        assert!(matches!(
            c6.induced_subgraph(&VertexSubset::new(6, []).unwrap()),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn balls_on_ten_cycle() {
        let c10 = cycle(10);
        let b = c10.induced_ball(0, 2).unwrap();
        assert_eq!(b.graph.n(), 5);
        assert_eq!(b.graph.m(), 4);
        assert_eq!(b.new_to_old, vec![0, 1, 2, 8, 9]);
        assert_eq!(c10.induced_ball(3, 0).unwrap().graph.n(), 1);
        assert_eq!(c10.induced_ball(0, 5).unwrap().graph, c10);
        assert!(c10.induced_ball(10, 1).is_err());
    }

    #[test]
    fn edge_subgraphs_keep_vertex_set() {
        let c4 = cycle(4);
        let all: Vec<Edge> = c4.edges().collect();
        assert_eq!(c4.edge_subgraph(&all).unwrap(), c4);
        let none = c4.edge_subgraph(&[]).unwrap();
        assert_eq!((none.n(), none.m()), (4, 0));
        let path = c4.edge_subgraph(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.n(), 4);
        assert!(path.is_connected());
        assert!(matches!(
            c4.edge_subgraph(&[(0, 2)]),
            Err(Error::EdgeNotInHost(0, 2))
        ));
    }

    #[test]
    fn edge_index_matches_canonical_order() {
        let g = Graph::from_edges(5, [(0, 4), (1, 2), (0, 1), (3, 4), (2, 4)]).unwrap();
        for (i, (u, v)) in g.edges().enumerate() {
            assert_eq!(g.edge_index(u, v), Some(i));
            assert_eq!(g.edge_index(v, u), Some(i));
        }
        assert_eq!(g.edge_index(0, 2), None);
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# a comment\n4 3\n0 1\n1 2\n# inline comment\n2 3\n";
        let el = EdgeList::parse(text).unwrap();
        assert_eq!(el.edges, vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(el.to_text(), "4 3\n0 1\n1 2\n2 3\n");
    }

    #[test]
    fn text_format_errors_carry_line_numbers() {
        let err = EdgeList::parse("3 2\n0 1\n2 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = EdgeList::parse("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = EdgeList::parse("3 1\n0  1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = EdgeList::parse("3 1\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn vertex_subset_masks() {
        let s = VertexSubset::from_mask(6, 0b101001);
        assert_eq!(s.members(), &[0, 3, 5]);
        assert_eq!(s.to_mask(), Some(0b101001));
        assert!(VertexSubset::new(3, [3]).is_err());
    }
}
