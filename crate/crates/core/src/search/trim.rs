use crate::graph::{Edge, Graph};
use crate::metrics::CycleScanner;

/// Removes `v` from the sorted list `list`.
pub(crate) fn remove_sorted(list: &mut Vec<usize>, v: usize) {
    if let Ok(i) = list.binary_search(&v) {
        list.remove(i);
    }
}

pub(crate) fn insert_sorted(list: &mut Vec<usize>, v: usize) {
    if let Err(i) = list.binary_search(&v) {
        list.insert(i, v);
    }
}

/// The cycle edge with the largest endpoint-degree sum; ties go to the
/// lexicographically smallest `(min, max)` pair.
fn pick_edge(adj: &[Vec<usize>], cycle: &[usize]) -> Edge {
    let k = cycle.len();
    (0..k)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .min_by_key(|&(u, v)| (std::cmp::Reverse(adj[u].len() + adj[v].len()), u, v))
        .expect("cycles are nonempty")
}

/// Deletes edges of shortest cycles until no cycle shorter than `target`
/// remains. Returns the number of deletions.
///
/// Roots are rescanned level by level: once every root below the pointer is
/// free of cycles of length `len`, deletions cannot bring one back, so the
/// pointer only moves forward. The cycle removed at each step is exactly the
/// one `shortest_cycle` would report.
pub(crate) fn trim_adjacency(adj: &mut [Vec<usize>], target: usize) -> usize {
    let n = adj.len();
    let mut scanner = CycleScanner::new(n);
    let mut deletions = 0;
    for len in 3..target {
        let mut root = 0;
        while root < n {
            match scanner.scan(adj, root, len + 1) {
                Some(found) => {
                    debug_assert_eq!(found.len, len);
                    let cycle = scanner.cycle(found);
                    let (u, v) = pick_edge(adj, &cycle);
                    remove_sorted(&mut adj[u], v);
                    remove_sorted(&mut adj[v], u);
                    deletions += 1;
                }
                None => root += 1,
            }
        }
    }
    deletions
}

/// Spanning subgraph of `g` with girth at least `target` (unbounded girth
/// satisfies every target). Only cycle edges are deleted, so connected
/// components are preserved. Targets of 3 or less leave `g` unchanged.
pub fn trim_to_girth(g: &Graph, target: usize) -> Graph {
    trim_to_girth_counted(g, target).0
}

pub(crate) fn trim_to_girth_counted(g: &Graph, target: usize) -> (Graph, usize) {
    let mut adj = g.adjacency().to_vec();
    let deletions = trim_adjacency(&mut adj, target);
    (Graph::from_adjacency_unchecked(adj), deletions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{named_graph, NamedGraph};
    use crate::metrics::{girth, shortest_cycle, Girth};

    /// Direct restatement: find `shortest_cycle`, delete its best edge, repeat.
    fn naive(g: &Graph, target: usize) -> Graph {
        let mut h = g.clone();
        while let Some(c) = shortest_cycle(&h).filter(|c| c.len() < target) {
            let mut adj = h.adjacency().to_vec();
            let (u, v) = pick_edge(&adj, &c);
            remove_sorted(&mut adj[u], v);
            remove_sorted(&mut adj[v], u);
            h = Graph::from_adjacency_unchecked(adj);
        }
        h
    }

    #[test]
    fn already_satisfied_is_unchanged() {
        let p = named_graph(NamedGraph::Petersen, 0).unwrap();
        assert_eq!(trim_to_girth(&p, 5), p);
        assert_eq!(trim_to_girth(&p, 2), p);
    }

    #[test]
    fn k4_to_girth_four() {
        let k4 = named_graph(NamedGraph::Complete, 4).unwrap();
        let t = trim_to_girth(&k4, 4);
        assert!(t.is_connected());
        assert!(girth(&t).meets(4));
        assert_eq!(t, naive(&k4, 4));
    }

    #[test]
    fn c5_to_girth_six_is_a_path() {
        let c5 = named_graph(NamedGraph::Cycle, 5).unwrap();
        let t = trim_to_girth(&c5, 6);
        assert_eq!(t.m(), 4);
        assert!(t.is_connected());
        assert_eq!(girth(&t), Girth::Unbounded);
    }

    #[test]
    fn matches_naive_restatement() {
        let k6 = named_graph(NamedGraph::Complete, 6).unwrap();
        for target in 3..8 {
            assert_eq!(trim_to_girth(&k6, target), naive(&k6, target));
        }
    }
}
