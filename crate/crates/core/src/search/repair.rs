use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use petgraph::unionfind::UnionFind;

use super::trim::insert_sorted;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Adds host edges, in canonical order, that join distinct components of
/// `sub` until it spans a connected graph. Every added edge is a bridge when
/// inserted, so no cycle is created and girth is unchanged.
pub fn reconnect_repair(host: &Graph, sub: &[Edge]) -> Result<Vec<Edge>> {
    if !host.is_connected() {
        return Err(Error::Disconnected);
    }
    let base = host.edge_subgraph(sub)?;
    let mut uf = UnionFind::<usize>::new(host.n());
    for (u, v) in base.edges() {
        uf.union(u, v);
    }
    let mut kept: Vec<Edge> = base.edges().collect();
    for (u, v) in host.edges() {
        if uf.union(u, v) {
            kept.push((u, v));
        }
    }
    kept.sort_unstable();
    Ok(kept)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmented {
    /// Sorted kept edges after augmentation.
    pub kept: Vec<Edge>,
    /// Inserted edges in insertion order.
    pub added: Vec<Edge>,
}

/// Unreachable pairs sort above every finite distance.
const FAR: usize = usize::MAX;

/// BFS distance from `u` to `v` in `adj`, or [`FAR`].
fn distance(adj: &[Vec<usize>], u: usize, v: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) -> usize {
    const UNSEEN: usize = usize::MAX;
    let mut touched = vec![u];
    dist[u] = 0;
    queue.clear();
    queue.push_back(u);
    let mut found = FAR;
    'bfs: while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == UNSEEN {
                dist[y] = dist[x] + 1;
                touched.push(y);
                if y == v {
                    found = dist[y];
                    break 'bfs;
                }
                queue.push_back(y);
            }
        }
    }
    for t in touched {
        dist[t] = UNSEEN;
    }
    found
}

/// Greedily inserts host edges `{u, v}` missing from `sub` whose endpoints
/// are at distance at least `floor - 1` in the current subgraph, largest
/// distance first (unreachable first), ties lexicographic, up to `budget`
/// insertions. Each insertion closes only cycles of length `>= floor`.
/// Floors below 3 are treated as 3.
pub fn augment_edges(host: &Graph, sub: &[Edge], floor: usize, budget: usize) -> Result<Augmented> {
    let floor = floor.max(3);
    let base = host.edge_subgraph(sub)?;
    let n = host.n();
    let mut adj = base.adjacency().to_vec();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();

    // Max-heap on (distance, reversed edge); distances only shrink, so a
    // stale key is an upper bound and a popped entry whose key is still
    // exact is the true maximum.
    let mut heap: BinaryHeap<(usize, Reverse<Edge>)> = BinaryHeap::new();
    let admissible = |d: usize| d == FAR || d + 1 >= floor;
    for (u, v) in host.edges().filter(|&(u, v)| !base.has_edge(u, v)) {
        let d = distance(&adj, u, v, &mut dist, &mut queue);
        if admissible(d) {
            heap.push((d, Reverse((u, v))));
        }
    }

    let mut added = Vec::new();
    while added.len() < budget {
        let Some((stale, Reverse((u, v)))) = heap.pop() else { break };
        let d = distance(&adj, u, v, &mut dist, &mut queue);
        if !admissible(d) {
            continue;
        }
        if d != stale {
            heap.push((d, Reverse((u, v))));
            continue;
        }
        insert_sorted(&mut adj[u], v);
        insert_sorted(&mut adj[v], u);
        added.push((u, v));
    }

    let mut kept: Vec<Edge> = base.edges().chain(added.iter().copied()).collect();
    kept.sort_unstable();
    Ok(Augmented { kept, added })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{named_graph, NamedGraph};
    use crate::metrics::{girth, Girth};

    fn c5() -> Graph {
        named_graph(NamedGraph::Cycle, 5).unwrap()
    }

    #[test]
    fn repair_cases() {
        let g = c5();
        let all: Vec<Edge> = g.edges().collect();
        assert_eq!(reconnect_repair(&g, &all).unwrap(), all);
        let tree = reconnect_repair(&g, &[]).unwrap();
        assert_eq!(tree.len(), 4);
        let t = g.edge_subgraph(&tree).unwrap();
        assert!(t.is_connected());
        assert_eq!(girth(&t), Girth::Unbounded);
        // Two components: {0,1,2} via (0,1),(1,2) and {3,4} via (3,4).
        let two = reconnect_repair(&g, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(two.len(), 4);
        assert!(two.contains(&(0, 4)));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(reconnect_repair(&split, &[]).is_err());
    }

    #[test]
    fn augment_closes_the_five_cycle() {
        let g = c5();
        let path = [(0, 1), (1, 2), (2, 3), (3, 4)];
        let out = augment_edges(&g, &path, 5, 10).unwrap();
        assert_eq!(out.added, vec![(0, 4)]);
        assert_eq!(girth(&g.edge_subgraph(&out.kept).unwrap()), Girth::Finite(5));
        assert!(augment_edges(&g, &path, 6, 10).unwrap().added.is_empty());
    }

    #[test]
    fn augment_prefers_unreachable_then_far() {
        let k4 = named_graph(NamedGraph::Complete, 4).unwrap();
        let out = augment_edges(&k4, &[(0, 1)], 3, 100).unwrap();
        // (0,2) is unreachable first; afterwards (1,2) at distance 2, etc.
        assert_eq!(out.added[0], (0, 2));
        assert_eq!(out.kept.len(), 6);
        let capped = augment_edges(&k4, &[], 3, 2).unwrap();
        assert_eq!(capped.added.len(), 2);
    }

    #[test]
    fn no_candidates_means_unchanged() {
        let k4 = named_graph(NamedGraph::Complete, 4).unwrap();
        let all: Vec<Edge> = k4.edges().collect();
        let out = augment_edges(&k4, &all, 3, 10).unwrap();
        assert!(out.added.is_empty());
        assert_eq!(out.kept, all);
    }
}
