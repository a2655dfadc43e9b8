#![allow(dead_code)]

use chromapoly::Graph;
use proptest::prelude::*;

/// Random simple graph on `0..=max_n` vertices, each pair present with
/// probability about `density`.
pub fn graph(max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(prop::bool::weighted(density), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Random connected graph: a random spanning tree plus extra pairs.
pub fn connected_graph(min_n: usize, max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        (
            parents,
            prop::collection::vec(prop::bool::weighted(density), pairs),
        )
            .prop_map(move |(parents, bits)| {
                let mut edges = std::collections::BTreeSet::new();
                for (i, p) in parents.into_iter().enumerate() {
                    edges.insert((p, i + 1));
                }
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            edges.insert((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
    })
}

/// A uniformly random permutation of `0..n`.
pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
