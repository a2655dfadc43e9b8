//! Finite simple undirected graphs.
//!
//! Vertices are the dense indices `0..n`. A graph may carry one unique label
//! per vertex (region names for the geographic datasets). Every operation
//! returns a new value; a [`Graph`] is never mutated once built.

mod bitset;
mod canon;
mod family;
mod separator;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use bitset::VertexSet;
pub use canon::CanonicalKey;
pub use family::Family;
pub use separator::SeparatorInfo;

/// Dense vertex index within one graph.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} is not present")]
    EdgeNotPresent(usize, usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid {family} parameters: {reason}")]
    InvalidFamily {
        family: &'static str,
        reason: String,
    },
}

/// Unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: VertexId,
    hi: VertexId,
}

impl Edge {
    /// Panics when `u == v`; loops are not edges of a simple graph.
    pub fn new(u: VertexId, v: VertexId) -> Edge {
        assert_ne!(u, v, "an edge needs two distinct endpoints");
        Edge {
            lo: u.min(v),
            hi: u.max(v),
        }
    }

    pub fn lo(self) -> VertexId {
        self.lo
    }

    pub fn hi(self) -> VertexId {
        self.hi
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.lo, self.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, v): (usize, usize)) -> Edge {
        Edge::new(u, v)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

/// One connected component together with the original ids of its vertices.
#[derive(Debug, Clone)]
pub struct Component {
    /// `vertices[i]` is the id in the parent graph of vertex `i` of `graph`.
    pub vertices: Vec<VertexId>,
    pub graph: Graph,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![VertexSet::new(n); n],
            edge_count: 0,
            labels: None,
        }
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for e in edges {
            let (u, v) = e.into();
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Attach vertex labels. Labels must be unique and one per vertex.
    pub fn with_labels<S: Into<String>>(
        mut self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Graph, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        let mut seen = HashMap::with_capacity(labels.len());
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// The same graph with labels dropped.
    pub fn unlabeled(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            edge_count: self.edge_count,
            labels: None,
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            let e = Edge::new(u, v);
            return Err(GraphError::DuplicateEdge(e.lo, e.hi));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// All edges in lexicographic `(lo, hi)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push(Edge { lo: u, hi: v });
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Label if present, otherwise the numeric id.
    pub fn display_name(&self, v: VertexId) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_owned)
    }

    fn check_edge(&self, e: Edge) -> Result<(), GraphError> {
        if self.has_edge(e.lo, e.hi) {
            Ok(())
        } else {
            Err(GraphError::EdgeNotPresent(e.lo, e.hi))
        }
    }

    /// `G − e`: same vertices, one edge fewer.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.adj[e.lo].remove(e.hi);
        g.adj[e.hi].remove(e.lo);
        g.edge_count -= 1;
        Ok(g)
    }

    /// The graph with one more edge.
    pub fn add_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(e.lo, e.hi)?;
        Ok(g)
    }

    /// `G / e`: identify the endpoints of `e`, keeping the graph simple.
    ///
    /// The merged vertex takes the smaller id; ids above the larger endpoint
    /// shift down by one. A label, if any, is kept from the smaller endpoint.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_edge(e)?;
        let (keep, gone) = (e.lo, e.hi);
        let n = self.n();
        let remap = |x: usize| if x > gone { x - 1 } else { x };
        let mut merged = self.adj[keep].clone();
        merged.union_with(&self.adj[gone]);
        merged.remove(keep);
        merged.remove(gone);

        let mut adj = vec![VertexSet::new(n - 1); n - 1];
        let mut edge_count = 0;
        for u in (0..n).filter(|&u| u != gone) {
            let row = if u == keep { &merged } else { &self.adj[u] };
            let ru = remap(u);
            for v in row.iter() {
                let v = if v == gone { keep } else { v };
                if v == u {
                    continue;
                }
                adj[ru].insert(remap(v));
            }
        }
        for (u, row) in adj.iter().enumerate() {
            edge_count += row.iter().filter(|&v| v > u).count();
        }
        let labels = self.labels.as_ref().map(|l| {
            l.iter()
                .enumerate()
                .filter(|&(i, _)| i != gone)
                .map(|(_, s)| s.clone())
                .collect()
        });
        Ok(Graph {
            adj,
            edge_count,
            labels,
        })
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let k = vertices.len();
        let mut adj = vec![VertexSet::new(k); k];
        let mut edge_count = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = pos[w];
                if j != usize::MAX {
                    adj[i].insert(j);
                    if j > i {
                        edge_count += 1;
                    }
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| vertices.iter().map(|&v| l[v].clone()).collect());
        Graph {
            adj,
            edge_count,
            labels,
        }
    }

    /// Relabel: vertex `v` of `self` becomes vertex `perm[v]` of the result.
    pub fn permute(&self, perm: &[VertexId]) -> Graph {
        let n = self.n();
        assert_eq!(perm.len(), n, "permutation length must equal vertex count");
        let mut adj = vec![VertexSet::new(n); n];
        for u in 0..n {
            for v in self.adj[u].iter() {
                adj[perm[u]].insert(perm[v]);
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for (v, s) in l.iter().enumerate() {
                out[perm[v]] = s.clone();
            }
            out
        });
        Graph {
            adj,
            edge_count: self.edge_count,
            labels,
        }
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub(crate) fn reach(&self, start: VertexId, blocked: &VertexSet) -> VertexSet {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) && !blocked.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Vertex sets of the components of `G − blocked`, ordered by smallest
    /// member. Each set is sorted ascending.
    pub(crate) fn component_sets(&self, blocked: &VertexSet) -> Vec<Vec<VertexId>> {
        let n = self.n();
        let mut done = blocked.clone();
        let mut out = Vec::new();
        for v in 0..n {
            if done.contains(v) {
                continue;
            }
            let comp = self.reach(v, blocked);
            done.union_with(&comp);
            out.push(comp.iter().collect());
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.component_sets(&VertexSet::new(self.n())).len()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.reach(0, &VertexSet::new(self.n())).len() == self.n()
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// Connected components ordered by smallest original vertex id.
    pub fn connected_components(&self) -> Vec<Component> {
        self.component_sets(&VertexSet::new(self.n()))
            .into_iter()
            .map(|vertices| Component {
                graph: self.induced_subgraph(&vertices),
                vertices,
            })
            .collect()
    }

    /// Disjoint union; vertices of `other` are numbered after those of `self`.
    /// Labels survive only if both sides are labeled and remain distinct.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let (a, b) = (self.n(), other.n());
        let mut g = Graph::empty(a + b);
        for e in self.edges() {
            g.insert_edge(e.lo, e.hi).expect("edge of a simple graph");
        }
        for e in other.edges() {
            g.insert_edge(e.lo + a, e.hi + a)
                .expect("edge of a simple graph");
        }
        if let (Some(l1), Some(l2)) = (&self.labels, &other.labels) {
            if let Ok(labeled) = g.clone().with_labels(l1.iter().chain(l2.iter()).cloned()) {
                return labeled;
            }
        }
        g
    }

    /// Isomorphism-invariant exact key.
    pub fn canonical_form(&self) -> CanonicalKey {
        canon::canonical_form(self)
    }

    /// A separating clique of at most `max_clique_size` vertices, if any.
    pub fn find_clique_separator(&self, max_clique_size: usize) -> Option<SeparatorInfo> {
        separator::find_clique_separator(self, max_clique_size)
    }

    pub fn is_clique(&self, vertices: &[VertexId]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().iter().map(|e| e.endpoints()).collect();
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert_eq!(
            Graph::from_edges(2, [(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 2, n: 2 }
        ));
    }

    #[test]
    fn delete_edge_of_cycle_gives_path() {
        let c4 = cycle(4);
        let p = c4.delete_edge(Edge::new(1, 2)).unwrap();
        assert_eq!(p.edge_count(), 3);
        assert_eq!(
            p.canonical_form(),
            Family::Path(4).build().unwrap().canonical_form()
        );
    }

    #[test]
    fn delete_only_edge_of_k2() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let h = g.delete_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn missing_edge_is_an_error() {
        let g = cycle(4);
        assert_eq!(
            g.delete_edge(Edge::new(0, 2)).unwrap_err(),
            GraphError::EdgeNotPresent(0, 2)
        );
        assert_eq!(
            g.contract_edge(Edge::new(0, 2)).unwrap_err(),
            GraphError::EdgeNotPresent(0, 2)
        );
    }

    #[test]
    fn contraction_remaps_ids() {
        // path 0-1-2-3 plus chord 0-2; contracting {1,3} is not allowed, {2,3} is
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        let h = g.contract_edge(Edge::new(1, 2)).unwrap();
        // merged vertex is 1; old 3 becomes 2; parallel 0-1 / 0-2 merge
        assert_eq!(h.n(), 3);
        let edges: Vec<_> = h.edges().iter().map(|e| e.endpoints()).collect();
        assert_eq!(edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn contracting_cycles_and_wheels() {
        let c4 = cycle(4);
        let c3 = c4.contract_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(c3.canonical_form(), cycle(3).canonical_form());
        for n in 4..10 {
            let c = cycle(n).contract_edge(Edge::new(2, 3)).unwrap();
            assert_eq!(c.canonical_form(), cycle(n - 1).canonical_form());
        }
        let w6 = Family::Wheel(6).build().unwrap();
        let w5 = w6.contract_edge(Edge::new(2, 3)).unwrap();
        assert_eq!(
            w5.canonical_form(),
            Family::Wheel(5).build().unwrap().canonical_form()
        );
    }

    #[test]
    fn contraction_keeps_smaller_label() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)])
            .unwrap()
            .with_labels(["a", "b", "c"])
            .unwrap();
        let h = g.contract_edge(Edge::new(1, 2)).unwrap();
        assert_eq!(h.labels().unwrap(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn components_of_edgeless_graph() {
        let g = Graph::empty(3);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.graph.n() == 1));
        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn labels_must_be_unique() {
        let err = Graph::empty(2).with_labels(["x", "x"]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateLabel("x".into()));
        assert!(Graph::empty(2).with_labels(["x"]).is_err());
    }

    #[test]
    fn trees() {
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(2).is_tree());
        assert!(Family::Path(5).build().unwrap().is_tree());
        assert!(!cycle(5).is_tree());
    }
}
