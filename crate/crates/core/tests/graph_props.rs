mod common;

use common::{any_graph, select};
use expander_core::{EdgeList, Graph, VertexSubset};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn adjacency_is_symmetric_sorted_and_counted(g in any_graph(0, 14)) {
        let adj = g.adjacency();
        let mut half = 0;
        for (u, list) in adj.iter().enumerate() {
            prop_assert!(list.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!list.contains(&u));
            for &v in list {
                prop_assert!(adj[v].binary_search(&u).is_ok());
            }
            half += list.len();
        }
        prop_assert_eq!(half, 2 * g.m());
    }

    #[test]
    fn edge_list_round_trip(g in any_graph(0, 14)) {
        let el = g.to_edge_list();
        prop_assert!(el.edges.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(el.edges.iter().all(|&(u, v)| u < v && v < el.n));
        prop_assert_eq!(Graph::from_edge_list(&el).unwrap(), g.clone());
        let text = el.to_text();
        prop_assert_eq!(EdgeList::parse(&text).unwrap(), el);
    }

    #[test]
    fn edge_subgraph_keeps_vertex_count(
        g in any_graph(1, 14),
        mask in proptest::collection::vec(any::<bool>(), 91),
    ) {
        let keep = select(&g, &mask);
        let sub = g.edge_subgraph(&keep).unwrap();
        prop_assert_eq!(sub.n(), g.n());
        prop_assert_eq!(sub.m(), keep.len());
        prop_assert!(sub.edges().all(|(u, v)| g.has_edge(u, v)));
    }

    #[test]
    fn bfs_layers_step_by_one(g in any_graph(1, 14), s in any::<prop::sample::Index>()) {
        let src = s.index(g.n());
        let d = g.bfs_distances(src).unwrap();
        prop_assert_eq!(d[src], Some(0));
        for (u, v) in g.edges() {
            // Reachability is shared across an edge; distances differ by at most 1.
            prop_assert_eq!(d[u].is_some(), d[v].is_some());
            if let (Some(a), Some(b)) = (d[u], d[v]) {
                prop_assert!(a.abs_diff(b) <= 1);
            }
        }
        for v in 0..g.n() {
            if let Some(k) = d[v].filter(|&k| k > 0) {
                prop_assert!(g.neighbors(v).iter().any(|&w| d[w] == Some(k - 1)));
            }
        }
    }

    #[test]
    fn balls_grow_and_stabilize_at_component(g in any_graph(1, 14), s in any::<prop::sample::Index>()) {
        let v = s.index(g.n());
        let vertex_set = |r: usize| -> Vec<usize> {
            let mut b = g.induced_ball(v, r).unwrap().new_to_old;
            b.sort_unstable();
            b
        };
        let component: Vec<usize> = {
            let d = g.bfs_distances(v).unwrap();
            (0..g.n()).filter(|&w| d[w].is_some()).collect()
        };
        let mut prev = vertex_set(0);
        prop_assert_eq!(&prev, &vec![v]);
        for r in 1..=g.n() {
            let cur = vertex_set(r);
            prop_assert!(prev.iter().all(|w| cur.binary_search(w).is_ok()));
            prev = cur;
        }
        prop_assert_eq!(prev, component);
    }

    #[test]
    fn subset_mask_round_trip(n in 1usize..=64, bits in any::<u64>()) {
        let mask = if n == 64 { bits } else { bits & ((1u64 << n) - 1) };
        let s = VertexSubset::from_mask(n, mask);
        prop_assert!(s.members().iter().all(|&v| v < n));
        prop_assert_eq!(s.to_mask(), Some(mask));
    }
}

#[test]
fn rejects_malformed_edge_lists() {
    assert!(Graph::from_edge_list(&EdgeList::new(2, vec![(0, 0)])).is_err());
    assert!(Graph::from_edge_list(&EdgeList::new(3, vec![(0, 1), (0, 1)])).is_err());
    assert!(Graph::from_edge_list(&EdgeList::new(3, vec![(0, 3)])).is_err());
    let c4 = Graph::from_edge_list(&EdgeList::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)])).unwrap();
    assert!((0..4).all(|v| c4.degree(v) == 2));
}
