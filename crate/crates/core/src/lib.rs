//! Exact chromatic polynomials of simple graphs.

pub mod closed_forms;
pub mod datasets;
pub mod engine;
pub mod graph;
pub mod poly;
pub mod verify;

pub use closed_forms::{recognize, FamilyMatch};
pub use datasets::{dataset, parse_edge_list, to_edge_list, Dataset};
pub use engine::{
    chromatic, chromatic_polynomial, crt1_combine, select_branch_edge, select_branch_edge_with,
    BranchRule, Engine, EngineConfig, EngineError, Outcome, ReductionTrace, Strategy, TraceNode,
};
pub use graph::{
    CanonicalKey, Edge, Family, Graph, GraphError, SeparatorInfo, VertexId, VertexSet,
};
pub use poly::{PolyError, Polynomial};
pub use verify::{verify_structure, VerificationReport};
