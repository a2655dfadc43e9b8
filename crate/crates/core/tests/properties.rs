mod common;

use std::collections::BTreeSet;

use chromapoly::verify::{brute_force_count, naive_chromatic, verify_structure};
use chromapoly::{
    chromatic, crt1_combine, parse_edge_list, to_edge_list, Edge, EngineConfig, Graph, Polynomial,
    Strategy as EngineStrategy,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn engine(g: &Graph, strategy: EngineStrategy) -> Polynomial {
    chromatic(g, &EngineConfig::with_strategy(strategy))
        .unwrap()
        .polynomial
}

fn auto(g: &Graph) -> Polynomial {
    engine(g, EngineStrategy::Auto)
}

/// `g` with `0..l` completed into a clique.
fn with_clique(g: &Graph, l: usize) -> Graph {
    let mut edges: BTreeSet<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
    for u in 0..l {
        for v in u + 1..l {
            edges.insert((u, v));
        }
    }
    Graph::from_edges(g.n(), edges).unwrap()
}

/// Identify vertices `0..l` of `a` and `b`.
fn glue(a: &Graph, b: &Graph, l: usize) -> Graph {
    let map = |v: usize| if v < l { v } else { a.n() + v - l };
    let mut edges: BTreeSet<(usize, usize)> = a.edges().iter().map(|e| e.endpoints()).collect();
    for e in b.edges() {
        let (u, v) = (map(e.lo()), map(e.hi()));
        edges.insert((u.min(v), u.max(v)));
    }
    Graph::from_edges(a.n() + b.n() - l, edges).unwrap()
}

fn glue_case() -> impl Strategy<Value = (Graph, Graph, usize)> {
    (1usize..=3).prop_flat_map(|l| {
        (
            common::graph(7, 0.4).prop_filter("needs the clique", move |g| g.n() >= l),
            common::graph(7, 0.4).prop_filter("needs the clique", move |g| g.n() >= l),
            Just(l),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn deletion_contraction_identity(
        (g, pick) in (common::connected_graph(2, 9, 0.35), any::<prop::sample::Index>())
    ) {
        let edges = g.edges();
        let e = edges[pick.index(edges.len())];
        let lhs = auto(&g);
        let rhs = &auto(&g.delete_edge(e).unwrap()) - &auto(&g.contract_edge(e).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn clique_glue_identity((a, b, l) in glue_case()) {
        let a = with_clique(&a, l);
        let b = with_clique(&b, l);
        let glued = glue(&a, &b, l);
        let combined = crt1_combine(&[auto(&a), auto(&b)], l).unwrap();
        prop_assert_eq!(auto(&glued), combined);
    }

    #[test]
    fn strategies_agree(g in common::graph(9, 0.4)) {
        let a = engine(&g, EngineStrategy::Auto);
        prop_assert_eq!(&a, &engine(&g, EngineStrategy::Naive));
        prop_assert_eq!(&a, &engine(&g, EngineStrategy::MemoOnly));
    }

    #[test]
    fn evaluations_match_enumeration(g in common::graph(8, 0.4)) {
        let p = auto(&g);
        for t in 0..=4u64 {
            prop_assert_eq!(p.eval_u64(t), brute_force_count(&g, t).unwrap(), "t = {}", t);
        }
    }

    #[test]
    fn oracles_agree(g in common::graph(7, 0.45)) {
        let p = naive_chromatic(&g).unwrap();
        for t in 0..=4u64 {
            prop_assert_eq!(p.eval_u64(t), brute_force_count(&g, t).unwrap(), "t = {}", t);
        }
    }

    #[test]
    fn engine_matches_naive_oracle(
        g in common::graph(10, 0.35).prop_filter("edge limit", |g| g.edge_count() <= 20)
    ) {
        prop_assert_eq!(auto(&g), naive_chromatic(&g).unwrap());
    }

    #[test]
    fn outputs_pass_structural_checks(g in common::graph(10, 0.4)) {
        for s in [EngineStrategy::Auto, EngineStrategy::MemoOnly] {
            let p = engine(&g, s);
            let report = verify_structure(&g, &p);
            prop_assert!(report.passed(), "{}", report);
        }
    }

    #[test]
    fn traces_replay(g in common::graph(9, 0.45)) {
        for s in [EngineStrategy::Auto, EngineStrategy::Naive, EngineStrategy::MemoOnly] {
            let out = chromatic(&g, &EngineConfig::with_strategy(s).traced()).unwrap();
            prop_assert_eq!(out.trace.unwrap().replay().unwrap(), out.polynomial);
        }
    }

    #[test]
    fn parallel_engine_agrees(g in common::connected_graph(6, 12, 0.35)) {
        let cfg = EngineConfig { threads: 3, ..EngineConfig::default() };
        prop_assert_eq!(chromatic(&g, &cfg).unwrap().polynomial, auto(&g));
    }

    #[test]
    fn contraction_stays_simple(
        (g, pick) in (common::connected_graph(2, 12, 0.4), any::<prop::sample::Index>())
    ) {
        let edges = g.edges();
        let e = edges[pick.index(edges.len())];
        let (u, v) = e.endpoints();
        let common_nbrs = g.neighbors(u).intersection_len(g.neighbors(v));
        let h = g.contract_edge(e).unwrap();
        prop_assert_eq!(h.n(), g.n() - 1);
        prop_assert_eq!(h.edge_count(), g.edge_count() - 1 - common_nbrs);
        for f in h.edges() {
            prop_assert!(f.lo() < f.hi());
        }
    }

    #[test]
    fn edge_list_round_trip(g in common::graph(12, 0.3)) {
        let again = parse_edge_list(&to_edge_list(&g)).unwrap();
        prop_assert_eq!(g.canonical_form(), again.canonical_form());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_ignores_labels(
        (g, perm) in common::graph(14, 0.4).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), common::permutation(n))
        })
    ) {
        prop_assert_eq!(g.canonical_form(), g.permute(&perm).canonical_form());
    }

    #[test]
    fn canonical_form_separates_non_isomorphic(
        (g, pick) in (common::connected_graph(3, 10, 0.4), any::<prop::sample::Index>())
    ) {
        // adding a missing edge changes the edge count; so must the key
        let n = g.n();
        let missing: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
            .filter(|e| !g.has_edge(e.lo(), e.hi()))
            .collect();
        prop_assume!(!missing.is_empty());
        let h = g.add_edge(missing[pick.index(missing.len())]).unwrap();
        prop_assert_ne!(g.canonical_form(), h.canonical_form());
    }
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-50i64..50, 0..7).prop_map(|c| Polynomial::from_i64s(&c))
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in small_poly(), k in 1usize..5) {
        let d = Polynomial::falling_factorial(k);
        prop_assert_eq!((&a * &d).exact_div(&d).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in small_poly(), b in small_poly(), t in -20i64..20) {
        let t = BigInt::from(t);
        prop_assert_eq!((&a * &b).eval(&t), a.eval(&t) * b.eval(&t));
        prop_assert_eq!((&a + &b).eval(&t), a.eval(&t) + b.eval(&t));
    }
}
