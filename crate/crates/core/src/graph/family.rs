use std::fmt;

use super::{Graph, GraphError};

/// Standard graph families with a fixed construction.
///
/// Vertex counts are the `n` in each variant: `Wheel(n)` is a hub joined to
/// an `(n − 1)`-cycle, `BrokenWheel(n)` is that wheel minus one rim edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Edgeless(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Wheel(usize),
    BrokenWheel(usize),
    /// Two wheels sharing a diamond: each hub sits on the other's rim.
    Interlocking(usize, usize),
}

fn below_minimum(family: &'static str, got: usize, min: usize) -> GraphError {
    GraphError::InvalidFamily {
        family,
        reason: format!("needs n >= {min}, got {got}"),
    }
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Edgeless(..) => "edgeless",
            Family::Path(..) => "path",
            Family::Cycle(..) => "cycle",
            Family::Complete(..) => "complete",
            Family::Wheel(..) => "wheel",
            Family::BrokenWheel(..) => "broken_wheel",
            Family::Interlocking(..) => "interlocking",
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            Family::Edgeless(n)
            | Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Wheel(n)
            | Family::BrokenWheel(n) => n,
            Family::Interlocking(m, n) => m + n - 4,
        }
    }

    pub fn build(self) -> Result<Graph, GraphError> {
        build_family(self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Interlocking(m, n) => write!(f, "interlocking({m},{n})"),
            other => write!(f, "{}({})", other.name(), other.vertex_count()),
        }
    }
}

/// Construct a member of a standard family.
///
/// * path `0-1-…-(n−1)`, cycle adds `{n−1, 0}`;
/// * wheel: hub `0`, rim cycle `1-2-…-(n−1)-1`; the broken wheel drops the
///   rim edge `{1, n−1}`;
/// * interlocking `(m, n)`: hub of `W_m` is `0`, hub of `W_n` is `1`, the
///   shared rim vertices are `2` and `3`. The rim of `W_m` is
///   `2, 1, 3, x…` and the rim of `W_n` is `2, 0, 3, y…`, with `m − 4` and
///   `n − 4` private vertices respectively.
pub fn build_family(family: Family) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let n = match family {
        Family::Edgeless(n) => n,
        Family::Path(n) => {
            if n < 1 {
                return Err(below_minimum("path", n, 1));
            }
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(below_minimum("cycle", n, 3));
            }
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        Family::Complete(n) => {
            if n < 1 {
                return Err(below_minimum("complete", n, 1));
            }
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
            n
        }
        Family::Wheel(n) | Family::BrokenWheel(n) => {
            let broken = matches!(family, Family::BrokenWheel(..));
            if n < 4 {
                return Err(below_minimum(family.name(), n, 4));
            }
            edges.extend((1..n).map(|i| (0, i)));
            edges.extend((1..n - 1).map(|i| (i, i + 1)));
            if !broken {
                edges.push((n - 1, 1));
            }
            n
        }
        Family::Interlocking(m, n) => {
            if m < 4 || n < 4 {
                return Err(GraphError::InvalidFamily {
                    family: "interlocking",
                    reason: format!("needs m, n >= 4, got ({m}, {n})"),
                });
            }
            let total = m + n - 4;
            let (hub_m, hub_n, a, b) = (0, 1, 2, 3);
            let mut next = 4;
            let mut rim_of = |other_hub: usize, private: usize| {
                let mut rim = vec![a, other_hub, b];
                rim.extend(next..next + private);
                next += private;
                rim
            };
            let rim_m = rim_of(hub_n, m - 4);
            let rim_n = rim_of(hub_m, n - 4);
            for (hub, rim) in [(hub_m, &rim_m), (hub_n, &rim_n)] {
                for (i, &v) in rim.iter().enumerate() {
                    edges.push((hub, v));
                    edges.push((v, rim[(i + 1) % rim.len()]));
                }
            }
            let mut norm: Vec<(usize, usize)> =
                edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            norm.sort_unstable();
            norm.dedup();
            edges = norm;
            total
        }
    };
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn small_members() {
        assert_eq!(Family::Path(1).build().unwrap().edge_count(), 0);
        assert_eq!(Family::Cycle(5).build().unwrap().edge_count(), 5);
        assert_eq!(Family::Complete(5).build().unwrap().edge_count(), 10);
        assert_eq!(Family::Wheel(6).build().unwrap().edge_count(), 10);
        assert_eq!(Family::BrokenWheel(6).build().unwrap().edge_count(), 9);
    }

    #[test]
    fn below_minimum_is_rejected() {
        assert!(Family::Cycle(2).build().is_err());
        assert!(Family::Wheel(3).build().is_err());
        assert!(Family::BrokenWheel(3).build().is_err());
        assert!(Family::Path(0).build().is_err());
        assert!(Family::Interlocking(3, 7).build().is_err());
    }

    #[test]
    fn wheel_four_is_k4() {
        assert_eq!(
            Family::Wheel(4).build().unwrap().canonical_form(),
            Family::Complete(4).build().unwrap().canonical_form()
        );
    }

    #[test]
    fn interlocking_six_seven_counts() {
        let g = Family::Interlocking(6, 7).build().unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 17);
        // the double wedge: hubs adjacent, both adjacent to a and b, a-b absent
        for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
            assert!(g.has_edge(u, v));
        }
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn interlocking_five_four_minus_chord_is_w5() {
        // with m = 5, n = 4 the W_4 rim closes a-b
        let g = Family::Interlocking(5, 4).build().unwrap();
        let w5 = g.delete_edge(Edge::new(2, 3)).unwrap();
        assert_eq!(
            w5.canonical_form(),
            Family::Wheel(5).build().unwrap().canonical_form()
        );
    }

    #[test]
    fn broken_wheel_matches_rim_deletion() {
        let w6 = Family::Wheel(6).build().unwrap();
        assert_eq!(
            w6.delete_edge(Edge::new(2, 3)).unwrap().canonical_form(),
            Family::BrokenWheel(6).build().unwrap().canonical_form()
        );
    }
}
