//! General chromatic polynomial computation.
//!
//! Each subproblem goes through, in order: component factorization, closed
//! form recognition, memo lookup, clique-separator splitting and finally
//! deletion–contraction on a selected edge.

mod memo;
mod trace;

use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;
use thiserror::Error;

use crate::closed_forms::{recognize, ClosedFormError};
use crate::graph::{CanonicalKey, Edge, Graph};
use crate::poly::{falling_factorial, PolyError, Polynomial};

pub use memo::MemoCache;
pub use trace::{ReductionTrace, ReplayError, TraceNode, TraceSummary};

/// Branches of deletion–contraction below this depth may run on separate
/// workers.
const PARALLEL_DEPTH: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Full pipeline.
    Auto,
    /// Deletion–contraction down to edgeless graphs and nothing else.
    Naive,
    /// Components, memo and deletion–contraction; no closed forms or
    /// separators.
    MemoOnly,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::Naive => "naive",
            Strategy::MemoOnly => "memo_only",
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Strategy, String> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "naive" => Ok(Strategy::Naive),
            "memo_only" => Ok(Strategy::MemoOnly),
            other => Err(format!("unknown strategy {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    pub strategy: Strategy,
    pub branch_rule: BranchRule,
    pub max_separator_clique: usize,
    /// Number of cached polynomials; 0 disables the memo.
    pub memo_capacity: usize,
    pub trace_enabled: bool,
    /// Maximum number of subproblems visited before aborting.
    pub node_budget: Option<u64>,
    /// Worker threads: 1 runs on the calling thread, 0 uses every core.
    /// Tracing and budgets always run on one thread so that the trace and
    /// the abort point are reproducible.
    pub threads: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            strategy: Strategy::Auto,
            branch_rule: BranchRule::MinDegree,
            max_separator_clique: 3,
            memo_capacity: 1 << 22,
            trace_enabled: false,
            node_budget: None,
            threads: 1,
        }
    }
}

impl EngineConfig {
    pub fn with_strategy(strategy: Strategy) -> Self {
        EngineConfig {
            strategy,
            ..Self::default()
        }
    }

    pub fn traced(mut self) -> Self {
        self.trace_enabled = true;
        self
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("invalid engine configuration: {0}")]
    InvalidConfig(String),
    #[error("node budget of {budget} exhausted")]
    BudgetExceeded {
        budget: u64,
        partial: Option<ReductionTrace>,
    },
    #[error("invalid decomposition: {0}")]
    Division(#[from] PolyError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub nodes: u64,
    pub memo_hits: u64,
    pub closed_forms: u64,
    pub clique_splits: u64,
    pub delete_contracts: u64,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub polynomial: Polynomial,
    /// Present when tracing was enabled.
    pub trace: Option<ReductionTrace>,
    pub stats: EngineStats,
}

/// Holds the memo so that it can be reused across computations.
pub struct Engine {
    cfg: EngineConfig,
    memo: MemoCache,
    pool: Option<rayon::ThreadPool>,
}

impl Engine {
    pub fn new(cfg: EngineConfig) -> Result<Engine, EngineError> {
        if cfg.max_separator_clique == 0 {
            return Err(EngineError::InvalidConfig(
                "max_separator_clique must be at least 1".into(),
            ));
        }
        let sequential = cfg.threads == 1 || cfg.trace_enabled || cfg.node_budget.is_some();
        let pool = if sequential {
            None
        } else {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(cfg.threads)
                    .build()
                    .map_err(|e| EngineError::InvalidConfig(e.to_string()))?,
            )
        };
        Ok(Engine {
            memo: MemoCache::new(cfg.memo_capacity),
            cfg,
            pool,
        })
    }

    pub fn config(&self) -> &EngineConfig {
        &self.cfg
    }

    pub fn memo(&self) -> &MemoCache {
        &self.memo
    }

    pub fn compute(&self, g: &Graph) -> Result<Outcome, EngineError> {
        let g = g.unlabeled();
        let run = Run {
            engine: self,
            tracing: self.cfg.trace_enabled,
            parallel: self.pool.is_some(),
            counters: Counters::default(),
        };
        let result = match &self.pool {
            Some(pool) => pool.install(|| run.solve(&g, 0)),
            None => run.solve(&g, 0),
        };
        match result {
            Ok((polynomial, node)) => Ok(Outcome {
                polynomial,
                trace: node.map(|root| ReductionTrace { root }),
                stats: run.counters.snapshot(),
            }),
            Err(Fail::Budget(partial)) => Err(EngineError::BudgetExceeded {
                budget: self.cfg.node_budget.unwrap_or(0),
                partial: partial.map(|root| ReductionTrace { root }),
            }),
            Err(Fail::Error(e)) => Err(e),
        }
    }
}

/// One-shot computation with a fresh memo.
pub fn chromatic(g: &Graph, cfg: &EngineConfig) -> Result<Outcome, EngineError> {
    Engine::new(cfg.clone())?.compute(g)
}

/// Chromatic polynomial with the default configuration.
pub fn chromatic_polynomial(g: &Graph) -> Result<Polynomial, EngineError> {
    Ok(chromatic(g, &EngineConfig::default())?.polynomial)
}

/// How deletion–contraction picks its edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchRule {
    /// A vertex of minimum positive degree and its smallest neighbor. Each
    /// branch moves that vertex toward a cut vertex or merges it away.
    #[default]
    MinDegree,
    /// See [`select_branch_edge`].
    MaxDegreeSum,
}

/// Edge whose endpoints have the largest degree sum, ties to the smallest
/// `(lo, hi)`. `None` for edgeless graphs.
pub fn select_branch_edge(g: &Graph) -> Option<Edge> {
    let mut best: Option<(usize, Edge)> = None;
    for e in g.edges() {
        let score = g.degree(e.lo()) + g.degree(e.hi());
        if best.is_none_or(|(s, _)| score > s) {
            best = Some((score, e));
        }
    }
    best.map(|(_, e)| e)
}

pub fn select_branch_edge_with(g: &Graph, rule: BranchRule) -> Option<Edge> {
    match rule {
        BranchRule::MaxDegreeSum => select_branch_edge(g),
        BranchRule::MinDegree => {
            let v = (0..g.n())
                .filter(|&v| g.degree(v) > 0)
                .min_by_key(|&v| g.degree(v))?;
            let w = g.neighbors(v).first()?;
            Some(Edge::new(v, w))
        }
    }
}

/// Glue `parts` that pairwise overlap in the same `K_l`:
/// `((p1·p2)/χ(K_l))·p3/χ(K_l)…`. An empty slice gives 1.
pub fn crt1_combine(parts: &[Polynomial], l: usize) -> Result<Polynomial, PolyError> {
    let Some((first, rest)) = parts.split_first() else {
        return Ok(Polynomial::one());
    };
    let clique = falling_factorial(l);
    let mut acc = first.clone();
    for p in rest {
        acc = (&acc * p).exact_div(&clique)?;
    }
    Ok(acc)
}

#[derive(Default)]
struct Counters {
    nodes: AtomicU64,
    memo_hits: AtomicU64,
    closed_forms: AtomicU64,
    clique_splits: AtomicU64,
    delete_contracts: AtomicU64,
}

impl Counters {
    fn bump(c: &AtomicU64) {
        c.fetch_add(1, Ordering::Relaxed);
    }

    fn snapshot(&self) -> EngineStats {
        let get = |c: &AtomicU64| c.load(Ordering::Relaxed);
        EngineStats {
            nodes: get(&self.nodes),
            memo_hits: get(&self.memo_hits),
            closed_forms: get(&self.closed_forms),
            clique_splits: get(&self.clique_splits),
            delete_contracts: get(&self.delete_contracts),
        }
    }
}

enum Fail {
    /// Carries the partial trace when tracing.
    Budget(Option<TraceNode>),
    Error(EngineError),
}

impl<E: Into<EngineError>> From<E> for Fail {
    fn from(e: E) -> Fail {
        Fail::Error(e.into())
    }
}

type Step = Result<(Polynomial, Option<TraceNode>), Fail>;

struct Run<'a> {
    engine: &'a Engine,
    tracing: bool,
    parallel: bool,
    counters: Counters,
}

impl Run<'_> {
    fn leaf(&self, node: impl FnOnce() -> TraceNode) -> Option<TraceNode> {
        self.tracing.then(node)
    }

    fn tick(&self) -> Result<(), Fail> {
        let visited = self.counters.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        match self.engine.cfg.node_budget {
            Some(b) if visited > b => Err(Fail::Budget(self.leaf(|| TraceNode::Aborted))),
            _ => Ok(()),
        }
    }

    fn solve(&self, g: &Graph, depth: usize) -> Step {
        self.tick()?;
        if g.edge_count() == 0 {
            return Ok((
                Polynomial::monomial(g.n()),
                self.leaf(|| TraceNode::Edgeless { n: g.n() }),
            ));
        }
        match self.engine.cfg.strategy {
            Strategy::Naive => self.delete_contract(g, None, depth),
            Strategy::Auto | Strategy::MemoOnly => {
                if g.is_connected() {
                    self.solve_connected(g, depth)
                } else {
                    self.components(g, depth)
                }
            }
        }
    }

    fn components(&self, g: &Graph, depth: usize) -> Step {
        let mut acc = Polynomial::one();
        let mut children = Vec::new();
        for comp in g.connected_components() {
            match self.solve(&comp.graph, depth + 1) {
                Ok((p, node)) => {
                    acc = &acc * &p;
                    children.extend(node);
                }
                Err(Fail::Budget(partial)) => {
                    let node = self.tracing.then(|| {
                        children.push(partial.unwrap_or(TraceNode::Aborted));
                        TraceNode::ComponentSplit { children }
                    });
                    return Err(Fail::Budget(node));
                }
                Err(e) => return Err(e),
            }
        }
        Ok((acc, self.leaf(|| TraceNode::ComponentSplit { children })))
    }

    fn solve_connected(&self, g: &Graph, depth: usize) -> Step {
        let auto = self.engine.cfg.strategy == Strategy::Auto;
        if auto {
            if let Some(family) = recognize(g) {
                Counters::bump(&self.counters.closed_forms);
                return Ok((
                    family.polynomial()?,
                    self.leaf(|| TraceNode::ClosedForm { family }),
                ));
            }
        }
        let key = g.canonical_form();
        if let Some(p) = self.engine.memo.lookup(&key) {
            Counters::bump(&self.counters.memo_hits);
            return Ok((p, self.leaf(|| TraceNode::MemoHit { key: key.clone() })));
        }
        if auto {
            if let Some(sep) = g.find_clique_separator(self.engine.cfg.max_separator_clique) {
                Counters::bump(&self.counters.clique_splits);
                let l = sep.clique_size();
                let mut parts = Vec::with_capacity(sep.sides.len());
                let mut children = Vec::new();
                for piece in sep.pieces() {
                    match self.solve(&g.induced_subgraph(&piece), depth + 1) {
                        Ok((p, node)) => {
                            parts.push(p);
                            children.extend(node);
                        }
                        Err(Fail::Budget(partial)) => {
                            let node = self.tracing.then(|| {
                                children.push(partial.unwrap_or(TraceNode::Aborted));
                                TraceNode::CliqueSplit {
                                    clique_size: l,
                                    children,
                                    key: None,
                                }
                            });
                            return Err(Fail::Budget(node));
                        }
                        Err(e) => return Err(e),
                    }
                }
                let p = crt1_combine(&parts, l)?;
                self.engine.memo.store(key.clone(), p.clone());
                let node = self.leaf(|| TraceNode::CliqueSplit {
                    clique_size: l,
                    children,
                    key: Some(key),
                });
                return Ok((p, node));
            }
        }
        self.delete_contract(g, Some(key), depth)
    }

    fn delete_contract(&self, g: &Graph, key: Option<CanonicalKey>, depth: usize) -> Step {
        Counters::bump(&self.counters.delete_contracts);
        let edge = select_branch_edge_with(g, self.engine.cfg.branch_rule)
            .expect("caller checked for edges");
        let deleted = g.delete_edge(edge).expect("selected edge exists");
        let contracted = g.contract_edge(edge).expect("selected edge exists");
        let (d, c) = if self.parallel && depth < PARALLEL_DEPTH {
            rayon::join(
                || self.solve(&deleted, depth + 1),
                || self.solve(&contracted, depth + 1),
            )
        } else {
            let d = self.solve(&deleted, depth + 1);
            if d.is_err() {
                (d, Err(Fail::Budget(None)))
            } else {
                (d, self.solve(&contracted, depth + 1))
            }
        };
        let abort = |delete: Option<TraceNode>, contract: Option<TraceNode>| {
            self.tracing.then(|| TraceNode::DeleteContract {
                edge,
                delete: Box::new(delete.unwrap_or(TraceNode::Aborted)),
                contract: Box::new(contract.unwrap_or(TraceNode::Aborted)),
                key: None,
            })
        };
        let (d, c) = match (d, c) {
            (Err(Fail::Error(e)), _) | (_, Err(Fail::Error(e))) => return Err(Fail::Error(e)),
            (Err(Fail::Budget(pd)), Err(Fail::Budget(pc))) => {
                return Err(Fail::Budget(abort(pd, pc)))
            }
            (Err(Fail::Budget(pd)), Ok(_)) => return Err(Fail::Budget(abort(pd, None))),
            (Ok((_, nd)), Err(Fail::Budget(pc))) => return Err(Fail::Budget(abort(nd, pc))),
            (Ok(d), Ok(c)) => (d, c),
        };
        let p = &d.0 - &c.0;
        if let Some(k) = &key {
            self.engine.memo.store(k.clone(), p.clone());
        }
        let node = self.tracing.then(|| TraceNode::DeleteContract {
            edge,
            delete: Box::new(d.1.unwrap_or(TraceNode::Aborted)),
            contract: Box::new(c.1.unwrap_or(TraceNode::Aborted)),
            key,
        });
        Ok((p, node))
    }
}
