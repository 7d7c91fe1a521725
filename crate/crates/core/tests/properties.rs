use polyuni_core::canon::{canonical_labeling, verify_isomorphism};
use polyuni_core::connectivity::{connectivity_at_least, Disconnection};
use polyuni_core::enumerate::unigraphic_check;
use polyuni_core::graph6;
use polyuni_core::planarity::{verify_embedding, verify_kuratowski};
use polyuni_core::sequence::{candidate_sequences, degree_sequence};
use polyuni_core::{canonical_form, is_isomorphic, is_polyhedral, planarity_check, Graph, Planarity};
use proptest::prelude::*;
use proptest::sample::select;

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn graph_with_perm(max_order: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn relabel_invariance((g, perm) in graph_with_perm(12)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let map = is_isomorphic(&g, &h).expect("relabelled graphs are isomorphic");
        prop_assert!(verify_isomorphism(&g, &h, &map));
    }

    #[test]
    fn canonical_labelling_realizes_the_code(g in graph(12)) {
        let (code, perm) = canonical_labeling(&g);
        prop_assert_eq!(code.to_graph(), g.relabel(&perm));
    }

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let bytes = graph6::encode(&g);
        prop_assert!(bytes.iter().all(|&b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&bytes).unwrap(), g);
    }

    #[test]
    fn cut_witnesses_are_valid(g in graph(10), k in 1usize..=3) {
        match connectivity_at_least(&g, k) {
            Ok(()) => {
                prop_assert!(g.order() > k);
                prop_assert!(g.min_degree() >= k);
            }
            Err(Disconnection::TooFewVertices { order, .. }) => prop_assert!(order <= k),
            Err(Disconnection::Cut(w)) => {
                prop_assert!(w.cut_vertices.len() < k);
                prop_assert!(w.verify(&g));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn planarity_certificates_verify(g in graph(10)) {
        match planarity_check(&g) {
            Planarity::Planar(emb) => prop_assert!(verify_embedding(&g, &emb)),
            Planarity::NonPlanar(w) => prop_assert!(verify_kuratowski(&g, &w)),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumeration_is_sound(s in select((4..=8).flat_map(candidate_sequences).collect::<Vec<_>>())) {
        let r = unigraphic_check(&s, None);
        prop_assert_eq!(r.realization_count, r.canonical_codes.len());
        for code in &r.canonical_codes {
            let g = code.to_graph();
            prop_assert!(is_polyhedral(&g));
            prop_assert_eq!(&degree_sequence(&g), &s);
        }
    }
}
