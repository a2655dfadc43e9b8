use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use super::crt1_combine;
use crate::closed_forms::{ClosedFormError, FamilyMatch};
use crate::graph::{CanonicalKey, Edge};
use crate::poly::{PolyError, Polynomial};

/// One step of a reduction. Nodes that were stored in the memo carry their
/// key so that later `MemoHit` nodes can be resolved during replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceNode {
    /// Product over connected components.
    ComponentSplit {
        children: Vec<TraceNode>,
    },
    /// Pieces glued along a shared clique of `clique_size` vertices.
    CliqueSplit {
        clique_size: usize,
        children: Vec<TraceNode>,
        key: Option<CanonicalKey>,
    },
    /// `χ(G − e) − χ(G / e)`.
    DeleteContract {
        edge: Edge,
        delete: Box<TraceNode>,
        contract: Box<TraceNode>,
        key: Option<CanonicalKey>,
    },
    ClosedForm {
        family: FamilyMatch,
    },
    MemoHit {
        key: CanonicalKey,
    },
    /// `t^n`; also the empty graph when `n = 0`.
    Edgeless {
        n: usize,
    },
    /// Placeholder for work cut off by the node budget.
    Aborted,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("memo hit {0:?} does not refer to an earlier node")]
    UnresolvedMemoHit(CanonicalKey),
    #[error("trace is partial")]
    Aborted,
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error(transparent)]
    Division(#[from] PolyError),
}

/// Node counts per reduction kind.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TraceSummary {
    pub component_splits: u64,
    pub clique_splits: u64,
    pub delete_contracts: u64,
    pub closed_forms: u64,
    pub memo_hits: u64,
    pub edgeless_leaves: u64,
    pub aborted: u64,
    pub depth: u64,
}

impl TraceSummary {
    pub fn total(&self) -> u64 {
        self.component_splits
            + self.clique_splits
            + self.delete_contracts
            + self.closed_forms
            + self.memo_hits
            + self.edgeless_leaves
            + self.aborted
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub root: TraceNode,
}

impl ReductionTrace {
    /// Rebuild the polynomial from the trace alone.
    pub fn replay(&self) -> Result<Polynomial, ReplayError> {
        self.replay_with(|_| None)
    }

    /// Like [`replay`](Self::replay), falling back to `external` for memo
    /// hits on entries computed before this trace began.
    pub fn replay_with<F>(&self, external: F) -> Result<Polynomial, ReplayError>
    where
        F: Fn(&CanonicalKey) -> Option<Polynomial>,
    {
        let mut seen = HashMap::new();
        replay_node(&self.root, &mut seen, &external)
    }

    pub fn summary(&self) -> TraceSummary {
        let mut s = TraceSummary::default();
        // explicit stack: traces of large graphs are deep
        let mut stack = vec![(&self.root, 1u64)];
        while let Some((node, depth)) = stack.pop() {
            s.depth = s.depth.max(depth);
            match node {
                TraceNode::ComponentSplit { children } => {
                    s.component_splits += 1;
                    stack.extend(children.iter().map(|c| (c, depth + 1)));
                }
                TraceNode::CliqueSplit { children, .. } => {
                    s.clique_splits += 1;
                    stack.extend(children.iter().map(|c| (c, depth + 1)));
                }
                TraceNode::DeleteContract {
                    delete, contract, ..
                } => {
                    s.delete_contracts += 1;
                    stack.push((delete, depth + 1));
                    stack.push((contract, depth + 1));
                }
                TraceNode::ClosedForm { .. } => s.closed_forms += 1,
                TraceNode::MemoHit { .. } => s.memo_hits += 1,
                TraceNode::Edgeless { .. } => s.edgeless_leaves += 1,
                TraceNode::Aborted => s.aborted += 1,
            }
        }
        s
    }

    pub fn is_partial(&self) -> bool {
        self.summary().aborted > 0
    }
}

fn replay_node<F>(
    node: &TraceNode,
    seen: &mut HashMap<CanonicalKey, Polynomial>,
    external: &F,
) -> Result<Polynomial, ReplayError>
where
    F: Fn(&CanonicalKey) -> Option<Polynomial>,
{
    let (p, key) = match node {
        TraceNode::ComponentSplit { children } => {
            let mut acc = Polynomial::one();
            for c in children {
                acc = &acc * &replay_node(c, seen, external)?;
            }
            (acc, None)
        }
        TraceNode::CliqueSplit {
            clique_size,
            children,
            key,
        } => {
            let parts = children
                .iter()
                .map(|c| replay_node(c, seen, external))
                .collect::<Result<Vec<_>, _>>()?;
            (crt1_combine(&parts, *clique_size)?, key.as_ref())
        }
        TraceNode::DeleteContract {
            delete,
            contract,
            key,
            ..
        } => {
            let d = replay_node(delete, seen, external)?;
            let c = replay_node(contract, seen, external)?;
            (&d - &c, key.as_ref())
        }
        TraceNode::ClosedForm { family } => (family.polynomial()?, None),
        TraceNode::MemoHit { key } => {
            let p = seen
                .get(key)
                .cloned()
                .or_else(|| external(key))
                .ok_or_else(|| ReplayError::UnresolvedMemoHit(key.clone()))?;
            (p, None)
        }
        TraceNode::Edgeless { n } => (Polynomial::monomial(*n), None),
        TraceNode::Aborted => return Err(ReplayError::Aborted),
    };
    if let Some(k) = key {
        seen.insert(k.clone(), p.clone());
    }
    Ok(p)
}
