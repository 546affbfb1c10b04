use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tuttekit::combinatorics::{rat, TPoly};
use tuttekit::graphs::Multigraph;
use tuttekit::invariants::{chromatic_sym, specialize_t, tutte_sym};
use tuttekit::selfcheck::{random_multigraph, random_permutation, random_simple_graph};

fn multigraph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_multigraph(&mut rng, n, 7, 3, true)
    })
}

/// Image of vertex x after contracting the non-loop edge (a, b), a < b.
fn after_contract(x: usize, a: usize, b: usize) -> usize {
    match x.cmp(&b) {
        std::cmp::Ordering::Less => x,
        std::cmp::Ordering::Equal => a,
        std::cmp::Ordering::Greater => x - 1,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn deletion_contraction(g in multigraph(5), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.num_edges() > 0);
        let (u, v) = g.edges()[pick.index(g.num_edges())];
        prop_assume!(u != v);
        let del = g.delete_edges(&[(u, v)]).unwrap();
        let con = g.contract_edge(u, v).unwrap();
        let xb = tutte_sym(&del).unwrap().add(&tutte_sym(&con).unwrap().scale(&TPoly::t())).unwrap();
        prop_assert_eq!(tutte_sym(&g).unwrap(), xb);
        let x = chromatic_sym(&del).unwrap().sub(&chromatic_sym(&con).unwrap()).unwrap();
        prop_assert_eq!(chromatic_sym(&g).unwrap(), x);
    }

    #[test]
    fn contraction_order_is_irrelevant(
        g in multigraph(6),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
    ) {
        prop_assume!(g.num_edges() >= 2);
        let (i, j) = (i.index(g.num_edges()), j.index(g.num_edges()));
        prop_assume!(i != j);
        let (a, b) = g.edges()[i];
        prop_assume!(a != b);
        let (c, d) = g.edges()[j];
        let once = g.contract_edge_indices(&[i, j]).unwrap();
        let stepwise = g
            .contract_edge(a, b)
            .unwrap()
            .contract_edge(after_contract(c, a, b), after_contract(d, a, b))
            .unwrap();
        prop_assert!(once.is_isomorphic(&stepwise), "{} vs {}", once, stepwise);
        prop_assert_eq!(once.total_weight(), g.total_weight());
    }

    #[test]
    fn complement_is_an_involution(n in 1usize..=7, seed in any::<u64>()) {
        let g = random_simple_graph(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let h = g.complement().unwrap();
        prop_assert_eq!(g.num_edges() + h.num_edges(), n * (n - 1) / 2);
        prop_assert_eq!(h.complement().unwrap(), g);
    }

    #[test]
    fn relabelling_preserves_invariants(g in multigraph(6), seed in any::<u64>()) {
        let perm = random_permutation(&mut ChaCha8Rng::seed_from_u64(seed), g.n());
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
        prop_assert_eq!(tutte_sym(&g).unwrap(), tutte_sym(&h).unwrap());
    }

    #[test]
    fn xb_at_minus_one_is_x(g in multigraph(6)) {
        let xb = tutte_sym(&g).unwrap();
        prop_assert_eq!(specialize_t(&xb, &rat(-1, 1)), chromatic_sym(&g).unwrap());
    }
}
