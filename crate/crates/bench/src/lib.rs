//! Benchmark workloads shared by the criterion targets.

use chromapoly::{dataset, Family, Graph};

/// Named graphs ordered roughly by cost.
pub fn workloads() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = [
        Family::Wheel(12),
        Family::BrokenWheel(12),
        Family::Interlocking(7, 8),
        Family::Complete(10),
    ]
    .into_iter()
    .map(|f| (f.to_string(), f.build().expect("valid family")))
    .collect();
    for name in ["canada", "france", "usa"] {
        out.push((name.to_string(), dataset(name).expect("embedded").graph));
    }
    out
}

/// Square grid, which has no clique separators and many isomorphic
/// subproblems.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).expect("grid edges are simple")
}
