//! Clique separators: cliques whose removal disconnects the graph.
//!
//! A graph with a separating clique `C` is the overlap, in `C`, of the
//! subgraphs induced on `C ∪ S_i` for the components `S_i` of `G − C`.

use super::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorInfo {
    /// Pairwise adjacent vertices, ascending.
    pub clique: Vec<VertexId>,
    /// Components of `G − clique`, at least two, each ascending, ordered by
    /// smallest member.
    pub sides: Vec<Vec<VertexId>>,
}

impl SeparatorInfo {
    pub fn clique_size(&self) -> usize {
        self.clique.len()
    }

    /// Vertex sets `clique ∪ side_i`, ascending, one per side.
    pub fn pieces(&self) -> Vec<Vec<VertexId>> {
        self.sides
            .iter()
            .map(|side| {
                let mut p: Vec<VertexId> = side.iter().chain(&self.clique).copied().collect();
                p.sort_unstable();
                p
            })
            .collect()
    }

    fn largest_piece(&self) -> usize {
        self.sides.iter().map(Vec::len).max().unwrap_or(0) + self.clique.len()
    }
}

/// Smallest separating clique of size at most `max_clique_size`.
///
/// Cut vertices are tried first, then edges, then triangles. Among the
/// separators of the smallest size, the one whose largest piece is smallest
/// wins, ties going to the lexicographically smallest clique.
pub fn find_clique_separator(g: &Graph, max_clique_size: usize) -> Option<SeparatorInfo> {
    let n = g.n();
    if n < 3 || max_clique_size == 0 {
        return None;
    }
    let mut best: Option<SeparatorInfo> = None;
    let consider = |clique: Vec<VertexId>, best: &mut Option<SeparatorInfo>| {
        let mut blocked = VertexSet::new(n);
        for &v in &clique {
            blocked.insert(v);
        }
        let sides = g.component_sets(&blocked);
        if sides.len() < 2 {
            return;
        }
        let cand = SeparatorInfo { clique, sides };
        let better = match best {
            None => true,
            Some(b) => cand.largest_piece() < b.largest_piece(),
        };
        if better {
            *best = Some(cand);
        }
    };

    for v in articulation_points(g) {
        consider(vec![v], &mut best);
    }
    if best.is_some() || max_clique_size < 2 {
        return best;
    }
    for e in g.edges() {
        consider(vec![e.lo(), e.hi()], &mut best);
    }
    if best.is_some() || max_clique_size < 3 {
        return best;
    }
    for (a, b, c) in triangles(g) {
        consider(vec![a, b, c], &mut best);
    }
    if best.is_some() || max_clique_size < 4 {
        return best;
    }
    for size in 4..=max_clique_size.min(n - 2) {
        for clique in cliques_of_size(g, size) {
            consider(clique, &mut best);
        }
        if best.is_some() {
            return best;
        }
    }
    best
}

/// Cut vertices of a (not necessarily connected) graph, ascending.
pub fn articulation_points(g: &Graph) -> Vec<VertexId> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // iterative DFS: (vertex, parent, remaining neighbors)
        let mut stack: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, g.neighbors(root).iter().collect()));
        let mut root_children = 0;
        while let Some((u, parent, pending)) = stack.last_mut() {
            let u = *u;
            let parent = *parent;
            if let Some(v) = pending.pop() {
                if disc[v] == usize::MAX {
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, g.neighbors(v).iter().collect()));
                } else if v != parent {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != root && low[u] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

pub(crate) fn triangles(g: &Graph) -> Vec<(VertexId, VertexId, VertexId)> {
    let mut out = Vec::new();
    for e in g.edges() {
        let (a, b) = e.endpoints();
        let mut common = g.neighbors(a).clone();
        common.intersect_with(g.neighbors(b));
        out.extend(common.iter().filter(|&c| c > b).map(|c| (a, b, c)));
    }
    out
}

fn cliques_of_size(g: &Graph, size: usize) -> Vec<Vec<VertexId>> {
    fn extend(
        g: &Graph,
        size: usize,
        current: &mut Vec<VertexId>,
        candidates: VertexSet,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for v in candidates.iter() {
            let mut next = candidates.clone();
            next.intersect_with(g.neighbors(v));
            // keep only larger ids so each clique is produced once
            for w in next.clone().iter().filter(|&w| w < v) {
                next.remove(w);
            }
            current.push(v);
            extend(g, size, current, next, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(g, size, &mut Vec::new(), VertexSet::full(g.n()), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn cycles_have_no_clique_separator() {
        for n in 4..9 {
            let c = Family::Cycle(n).build().unwrap();
            assert_eq!(find_clique_separator(&c, 3), None);
            assert_eq!(find_clique_separator(&c, 1), None);
        }
    }

    #[test]
    fn path_splits_at_a_middle_vertex() {
        let p = Family::Path(5).build().unwrap();
        let s = find_clique_separator(&p, 1).unwrap();
        assert_eq!(s.clique, vec![2]);
        assert_eq!(s.sides, vec![vec![0, 1], vec![3, 4]]);
        assert_eq!(s.pieces(), vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }

    #[test]
    fn broken_wheel_splits_on_a_spoke() {
        let g = Family::BrokenWheel(6).build().unwrap();
        let s = find_clique_separator(&g, 3).unwrap();
        assert_eq!(s.clique_size(), 2);
        assert!(g.is_clique(&s.clique));
    }

    #[test]
    fn size_limit_is_respected() {
        // two K4 glued on a triangle: only a 3-clique separates
        let mut edges = Vec::new();
        for (u, v) in [
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (2, 3),
            (0, 4),
            (1, 4),
            (2, 4),
        ] {
            edges.push((u, v));
        }
        let g = Graph::from_edges(5, edges).unwrap();
        assert_eq!(find_clique_separator(&g, 2), None);
        let s = find_clique_separator(&g, 3).unwrap();
        assert_eq!(s.clique, vec![0, 1, 2]);
        assert_eq!(s.sides, vec![vec![3], vec![4]]);
    }

    #[test]
    fn four_clique_separator() {
        // two K5 sharing a K4
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if !(u == 4 && v == 5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(6, edges).unwrap();
        assert_eq!(find_clique_separator(&g, 3), None);
        let s = find_clique_separator(&g, 4).unwrap();
        assert_eq!(s.clique, vec![0, 1, 2, 3]);
    }

    #[test]
    fn articulation_points_of_two_triangles_on_a_vertex() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(articulation_points(&g), vec![2]);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(articulation_points(&star), vec![0]);
    }
}
