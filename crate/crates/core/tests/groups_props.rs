use expander_core::groups::{
    build_cayley, elementary_generators, girth_tower_report, sanov_generators, GroupElement, ModMatrix, Recipe,
    TowerOptions,
};
use expander_core::Girth;
use proptest::prelude::*;

const MODULI: [u64; 5] = [3, 5, 9, 25, 27];

/// An element of SL(2, Z/q) as a product of elementary matrices with the
/// given shears. Over `Z/p^k` these products reach the whole group.
fn sl2(q: u64, shears: &[i64; 4]) -> ModMatrix {
    let [a, b, c, d] = *shears;
    [
        [1, a, 0, 1],
        [1, 0, b, 1],
        [1, c, 0, 1],
        [1, 0, d, 1],
    ]
    .iter()
    .map(|e| ModMatrix::special(2, q, e).unwrap())
    .reduce(|x, y| x.mul(&y).unwrap())
    .unwrap()
}

fn shears() -> impl Strategy<Value = [i64; 4]> {
    [any::<i32>(), any::<i32>(), any::<i32>(), any::<i32>()].prop_map(|s| s.map(i64::from))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn group_laws(x in shears(), y in shears(), z in shears()) {
        for q in MODULI {
            let (a, b, c) = (sl2(q, &x), sl2(q, &y), sl2(q, &z));
            let id = ModMatrix::identity(2, q);
            prop_assert_eq!(a.det(), 1);
            prop_assert!(a.entries().iter().all(|&e| e < q));
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), id.clone());
            prop_assert_eq!(a.inv().unwrap().mul(&a).unwrap(), id.clone());
            prop_assert_eq!(a.mul(&id).unwrap(), a.clone());
            prop_assert_eq!(id.mul(&a).unwrap(), a.clone());
        }
    }

    #[test]
    fn reduction_is_a_homomorphism(x in shears(), y in shears()) {
        for (q, r) in [(9, 3), (25, 5), (27, 3), (27, 9)] {
            let (a, b) = (sl2(q, &x), sl2(q, &y));
            let lhs = a.mul(&b).unwrap().reduce(r).unwrap();
            let rhs = a.reduce(r).unwrap().mul(&b.reduce(r).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

fn sorted_distances(g: &expander_core::Graph, v: usize) -> Vec<usize> {
    let mut d: Vec<usize> = g.bfs_distances(v).unwrap().into_iter().map(|x| x.unwrap()).collect();
    d.sort_unstable();
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cayley_graphs_are_regular_and_look_transitive(
        sanov in any::<bool>(),
        q in prop::sample::select(vec![4u64, 5, 7, 8, 9, 11]),
        picks in proptest::collection::vec(any::<prop::sample::Index>(), 10),
    ) {
        let (recipe, gens) = if sanov {
            (Recipe::Sanov, sanov_generators(q).unwrap())
        } else {
            (Recipe::Elementary, elementary_generators(q).unwrap())
        };
        let cay = build_cayley(recipe, q, 1 << 20).unwrap();
        let g = cay.graph();
        let degree = gens.elements().len();
        prop_assert!(gens.elements().iter().all(|s| !s.is_identity()));
        prop_assert!((0..g.n()).all(|v| g.degree(v) == degree));
        let reference = sorted_distances(g, 0);
        for p in picks {
            prop_assert_eq!(sorted_distances(g, p.index(g.n())), reference.clone());
        }
    }
}

#[test]
fn tower_girth_is_monotone_for_both_recipes() {
    let opts = TowerOptions {
        gap_vertex_limit: Some(0),
        ..TowerOptions::default()
    };
    for recipe in [Recipe::Sanov, Recipe::Elementary] {
        let report = girth_tower_report(3, 3, recipe, &opts).unwrap();
        let girths: Vec<Girth> = report.rows.iter().map(|r| r.girth).collect();
        assert!(report.girth_monotone(), "{recipe}: {girths:?}");
        assert!(girths.windows(2).all(|w| w[0] <= w[1]), "{recipe}: {girths:?}");
    }
}

#[test]
fn sanov_girth_grows_up_the_tower() {
    let opts = TowerOptions {
        gap_vertex_limit: Some(0),
        ..TowerOptions::default()
    };
    let report = girth_tower_report(3, 3, Recipe::Sanov, &opts).unwrap();
    let sizes: Vec<usize> = report.rows.iter().map(|r| r.vertices).collect();
    assert_eq!(sizes, vec![24, 648, 17496]);
    assert!(report.rows[2].girth > report.rows[0].girth);
}
