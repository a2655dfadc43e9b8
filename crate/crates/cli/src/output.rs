use std::collections::BTreeMap;
use std::fmt::Write as _;

use chromapoly::datasets::Dataset;
use chromapoly::engine::TraceSummary;
use chromapoly::{Graph, Polynomial, VerificationReport};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct GraphInfo {
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
}

impl GraphInfo {
    pub fn new(source: String, g: &Graph) -> GraphInfo {
        GraphInfo {
            source,
            vertices: g.n(),
            edges: g.edge_count(),
            components: g.component_count(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PolyInfo {
    pub degree: Option<usize>,
    /// Decimal strings, highest power first.
    pub coefficients: Vec<String>,
    pub text: String,
}

#[derive(Debug, Serialize)]
pub struct Claim {
    pub label: &'static str,
    pub t: u64,
    pub value: String,
    pub computed: String,
    pub matches: bool,
}

#[derive(Debug, Serialize)]
pub struct Reference {
    pub matches: bool,
    /// Powers whose coefficient differs from the reference polynomial.
    pub mismatched_powers: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub compute_seconds: f64,
}

/// Everything `poly` and `verify` report. Field order is fixed and the only
/// run-dependent field is `timing`, which comes last.
#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub graph: GraphInfo,
    pub strategy: &'static str,
    pub polynomial: PolyInfo,
    pub evaluations: BTreeMap<i64, String>,
    pub verification: Verification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<Reference>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub published_claims: Vec<Claim>,
    pub timing: Timing,
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub passed: bool,
    #[serde(flatten)]
    pub report: VerificationReport,
}

pub fn poly_info(p: &Polynomial) -> PolyInfo {
    PolyInfo {
        degree: p.degree(),
        coefficients: p.to_decimal_descending(),
        text: p.to_string(),
    }
}

pub fn evaluations(p: &Polynomial, points: &[i64]) -> BTreeMap<i64, String> {
    points
        .iter()
        .map(|&t| (t, p.eval(&BigInt::from(t)).to_string()))
        .collect()
}

pub fn reference(dataset: Option<&Dataset>, p: &Polynomial) -> Option<Reference> {
    let expected = dataset?.expected.polynomial.as_ref()?;
    let top = p.degree().max(expected.degree()).unwrap_or(0);
    let mismatched_powers: Vec<usize> = (0..=top)
        .rev()
        .filter(|&i| p.coeff(i) != expected.coeff(i))
        .collect();
    Some(Reference {
        matches: mismatched_powers.is_empty(),
        mismatched_powers,
    })
}

pub fn claims(dataset: Option<&Dataset>, p: &Polynomial) -> Vec<Claim> {
    let Some(d) = dataset else {
        return Vec::new();
    };
    d.expected
        .claims
        .iter()
        .map(|c| {
            let computed = p.eval_u64(c.t);
            Claim {
                label: c.label,
                t: c.t,
                value: c.value.to_string(),
                computed: computed.to_string(),
                matches: computed == c.value,
            }
        })
        .collect()
}

pub fn render_text(doc: &OutputDocument) -> String {
    let mut out = String::new();
    let g = &doc.graph;
    let _ = writeln!(
        out,
        "graph: {} ({} vertices, {} edges, {} component{})",
        g.source,
        g.vertices,
        g.edges,
        g.components,
        if g.components == 1 { "" } else { "s" }
    );
    let _ = writeln!(out, "chi(t) = {}", doc.polynomial.text);
    if !doc.evaluations.is_empty() {
        let _ = writeln!(out, "evaluations:");
        for (t, v) in &doc.evaluations {
            let _ = writeln!(out, "  {t}: {v}");
        }
    }
    if let Some(r) = &doc.reference {
        if r.matches {
            let _ = writeln!(out, "reference polynomial: match");
        } else {
            let _ = writeln!(
                out,
                "reference polynomial: MISMATCH at powers {:?}",
                r.mismatched_powers
            );
        }
    }
    for c in &doc.published_claims {
        let _ = writeln!(
            out,
            "published chi({}) [{}] = {}: {} (computed {})",
            c.t,
            c.label,
            c.value,
            if c.matches { "match" } else { "mismatch" },
            c.computed
        );
    }
    if let Some(s) = &doc.trace {
        let _ = writeln!(
            out,
            "trace: {} nodes, depth {}; component splits {}, clique splits {}, \
             deletion-contractions {}, closed forms {}, memo hits {}, edgeless leaves {}",
            s.total(),
            s.depth,
            s.component_splits,
            s.clique_splits,
            s.delete_contracts,
            s.closed_forms,
            s.memo_hits,
            s.edgeless_leaves
        );
    }
    let _ = writeln!(
        out,
        "verification: {}",
        if doc.verification.passed {
            "pass"
        } else {
            "FAIL"
        }
    );
    out
}
