use compaut::dim4::{default_bipartition, reduction_image};
use compaut::io::{parse_graph, write_graph6};
use compaut::permgraph::{gadget_product, gadget_rectangle, gadget_wreath, representation};
use compaut::{
    automorphism_group, brute_force_aut, build_modular_tree, count_orientations, four_chains, permgraph,
    verify_chain_intersection, Graph, GroupExpr, Oracle, Permutation,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

#[test]
fn graph6_through_group_engine() {
    let g = parse_graph("Ch\n").unwrap();
    let at = automorphism_group(&g).unwrap();
    assert_eq!(at.expr.to_string(), "S2");
    let two_k2 = parse_graph("4 2\n0 1\n2 3\n").unwrap();
    let at = automorphism_group(&two_k2).unwrap();
    assert_eq!(at.expr.to_string(), "S2 wr S2");
    assert_eq!(at.group.order_usize(), 8);
}

#[test]
fn gadget_groups_read_back_as_expressions() {
    let (k2, p4) = (Graph::complete(2), Graph::path(4));
    let g = gadget_rectangle(&p4, &k2, &k2).unwrap();
    let at = automorphism_group(&g).unwrap();
    assert_eq!(at.group.order_usize(), 16 * 4 * 4 * 4);
    assert!(matches!(at.expr, GroupExpr::SemidirectZ22 { .. }), "{}", at.expr);

    let w = automorphism_group(&gadget_wreath(&p4, 3).unwrap()).unwrap();
    assert_eq!(w.expr.to_string(), "S2 wr S3");

    let p = automorphism_group(&gadget_product(&k2, &p4).unwrap()).unwrap();
    assert_eq!(p.group.order_usize(), 4);
}

#[test]
fn orientation_count_of_a_join() {
    // K_{2,3} is the join of two independent sets
    let t = build_modular_tree(&Graph::complete_bipartite(2, 3)).unwrap();
    assert_eq!(count_orientations(&t).unwrap(), 2u32.into());
    let t = build_modular_tree(&Graph::complete(5)).unwrap();
    assert_eq!(count_orientations(&t).unwrap(), 120u32.into());
}

#[test]
fn incidence_route_certifies_non_bipartite_inputs() {
    let x = Graph::complete(4);
    let cy = reduction_image(&x).unwrap();
    let cs = four_chains(&cy, &default_bipartition(&cy.x).unwrap()).unwrap();
    assert!(verify_chain_intersection(&cs, &cy).unwrap().is_exact());
    let oracle = Oracle::with_max_vertices(128);
    assert_eq!(oracle.automorphisms(&cy.graph).unwrap().order_usize(), 24);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn aut_tree_agrees_with_brute_force(g in graph_strategy(8)) {
        let at = automorphism_group(&g).unwrap();
        let brute = brute_force_aut(&g).unwrap();
        prop_assert_eq!(at.group.element_set(), brute.element_set());
    }

    #[test]
    fn inversion_graphs_are_represented(images in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
        let g = permgraph::permutation_diagram_graph(&Permutation::from_images(images).unwrap());
        let rep = representation(&g).unwrap();
        prop_assert_eq!(rep.double_comparability_graph(), g);
    }

    #[test]
    fn graph6_survives_relabelling(g in graph_strategy(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut images: Vec<usize> = (0..g.n()).collect();
        images.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&Permutation::from_images(images).unwrap());
        let back = parse_graph(&write_graph6(&h)).unwrap();
        prop_assert_eq!(
            automorphism_group(&back).unwrap().group.order_usize(),
            automorphism_group(&g).unwrap().group.order_usize()
        );
    }
}
