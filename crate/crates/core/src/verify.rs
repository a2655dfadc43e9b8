//! Independent checks on chromatic polynomials.
//!
//! [`verify_structure`] tests the necessary conditions every chromatic
//! polynomial satisfies. [`brute_force_count`] and [`naive_chromatic`] are
//! ground-truth oracles for small graphs; neither touches the reduction
//! engine.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::poly::Polynomial;

/// `t^|V| <= 2^30` keeps enumeration under about a billion leaf visits.
pub const BRUTE_FORCE_LOG2_LIMIT: f64 = 30.0;
/// Plain deletion–contraction is exponential in the edge count.
pub const NAIVE_EDGE_LIMIT: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("instance too large for {oracle}: {detail}")]
    InstanceTooLarge {
        oracle: &'static str,
        detail: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Degree,
    Monic,
    EdgeCoefficient,
    ConstantTerm,
    AlternatingSigns,
    LowestPower,
    CoefficientSum,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::Degree,
        Property::Monic,
        Property::EdgeCoefficient,
        Property::ConstantTerm,
        Property::AlternatingSigns,
        Property::LowestPower,
        Property::CoefficientSum,
    ];

    pub fn description(self) -> &'static str {
        match self {
            Property::Degree => "degree equals the number of vertices",
            Property::Monic => "leading coefficient is 1",
            Property::EdgeCoefficient => "coefficient of t^(n-1) is minus the number of edges",
            Property::ConstantTerm => "constant term is zero",
            Property::AlternatingSigns => "coefficients alternate in sign",
            Property::LowestPower => "lowest power equals the number of components",
            Property::CoefficientSum => "coefficients sum to zero",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub property: Property,
    pub status: Status,
    /// Observed vs expected values, or the offending coefficient.
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// True when no applicable check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn status(&self, property: Property) -> Status {
        self.checks
            .iter()
            .find(|c| c.property == property)
            .map_or(Status::NotApplicable, |c| c.status)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graph: {} vertices, {} edges, {} component(s)",
            self.vertices, self.edges, self.components
        )?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::NotApplicable => "N/A ",
            };
            writeln!(f, "  [{tag}] {}: {}", c.property.description(), c.witness)?;
        }
        Ok(())
    }
}

fn check(property: Property, ok: bool, witness: String) -> Check {
    Check {
        property,
        status: if ok { Status::Pass } else { Status::Fail },
        witness,
    }
}

fn not_applicable(property: Property, why: &str) -> Check {
    Check {
        property,
        status: Status::NotApplicable,
        witness: why.to_string(),
    }
}

/// Check `p` against the structural properties implied by `g`.
///
/// Alternation is read strictly: with `n = deg p`, every coefficient of
/// `t^{n−k}` down to `t^c` (`c` = component count) is nonzero with sign
/// `(−1)^k`, and everything below `t^c` is zero.
pub fn verify_structure(g: &Graph, p: &Polynomial) -> VerificationReport {
    let n = g.n();
    let m = g.edge_count();
    let components = g.component_count();
    let mut checks = Vec::with_capacity(7);

    let degree = p.degree();
    checks.push(check(
        Property::Degree,
        degree == Some(n),
        format!(
            "degree {} vs {n} vertices",
            degree.map_or_else(|| "undefined".to_string(), |d| d.to_string())
        ),
    ));

    let lead = p.leading().cloned().unwrap_or_default();
    checks.push(check(
        Property::Monic,
        lead.is_one(),
        format!("leading coefficient {lead}"),
    ));

    if n >= 1 {
        let c = p.coeff(n - 1);
        checks.push(check(
            Property::EdgeCoefficient,
            c == BigInt::from(-(m as i64)),
            format!("coefficient of t^{} is {c}, edges {m}", n - 1),
        ));
        let c0 = p.coeff(0);
        checks.push(check(
            Property::ConstantTerm,
            c0.is_zero(),
            format!("constant term {c0}"),
        ));
    } else {
        checks.push(not_applicable(
            Property::EdgeCoefficient,
            "graph has no vertices",
        ));
        checks.push(not_applicable(
            Property::ConstantTerm,
            "graph has no vertices",
        ));
    }

    checks.push(alternation(p, components));

    let low = p.lowest_power();
    checks.push(check(
        Property::LowestPower,
        low == Some(components),
        format!(
            "lowest power {} vs {components} component(s)",
            low.map_or_else(|| "undefined".to_string(), |l| l.to_string())
        ),
    ));

    if m >= 1 {
        let s = p.coefficient_sum();
        checks.push(check(
            Property::CoefficientSum,
            s.is_zero(),
            format!("coefficient sum {s}"),
        ));
    } else {
        checks.push(not_applicable(
            Property::CoefficientSum,
            "graph has no edges, so one color suffices",
        ));
    }

    VerificationReport {
        vertices: n,
        edges: m,
        components,
        checks,
    }
}

fn alternation(p: &Polynomial, components: usize) -> Check {
    let Some(deg) = p.degree() else {
        return check(Property::AlternatingSigns, false, "zero polynomial".into());
    };
    for i in (0..=deg).rev() {
        let c = p.coeff(i);
        let k = deg - i;
        if i < components {
            if !c.is_zero() {
                return check(
                    Property::AlternatingSigns,
                    false,
                    format!("coefficient of t^{i} is {c}, expected 0 below t^{components}"),
                );
            }
            continue;
        }
        let want_positive = k % 2 == 0;
        let ok = if want_positive {
            c.is_positive()
        } else {
            c.is_negative()
        };
        if !ok {
            return check(
                Property::AlternatingSigns,
                false,
                format!(
                    "coefficient of t^{i} is {c}, expected {}",
                    if want_positive {
                        "positive"
                    } else {
                        "negative"
                    }
                ),
            );
        }
    }
    check(
        Property::AlternatingSigns,
        true,
        format!("t^{deg} down to t^{components} alternate"),
    )
}

/// Count proper `t`-colorings by exhaustive backtracking.
pub fn brute_force_count(g: &Graph, t: u64) -> Result<BigInt, VerifyError> {
    let n = g.n();
    if t >= 2 && n as f64 * (t as f64).log2() > BRUTE_FORCE_LOG2_LIMIT {
        return Err(VerifyError::InstanceTooLarge {
            oracle: "brute_force_count",
            detail: format!("{t}^{n} assignments"),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    // only earlier neighbors constrain vertex v
    let earlier: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&w| w < v).collect())
        .collect();
    let mut colors = vec![0u64; n];
    fn go(v: usize, t: u64, earlier: &[Vec<usize>], colors: &mut [u64]) -> u64 {
        if v == colors.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..t {
            if earlier[v].iter().all(|&w| colors[w] != c) {
                colors[v] = c;
                total += go(v + 1, t, earlier, colors);
            }
        }
        total
    }
    Ok(BigInt::from(go(0, t, &earlier, &mut colors)))
}

/// Deletion–contraction on the lowest edge down to edgeless leaves, with
/// no caching, separators or closed forms. Leaves are tallied by vertex
/// count with their sign, so no polynomial arithmetic happens per node.
pub fn naive_chromatic(g: &Graph) -> Result<Polynomial, VerifyError> {
    if g.edge_count() > NAIVE_EDGE_LIMIT {
        return Err(VerifyError::InstanceTooLarge {
            oracle: "naive_chromatic",
            detail: format!("{} edges (limit {NAIVE_EDGE_LIMIT})", g.edge_count()),
        });
    }
    let mut tally = vec![0i128; g.n() + 1];
    fn go(g: &Graph, sign: i128, tally: &mut [i128]) {
        let Some(&e) = g.edges().first() else {
            tally[g.n()] += sign;
            return;
        };
        go(&g.delete_edge(e).expect("edge present"), sign, tally);
        go(&g.contract_edge(e).expect("edge present"), -sign, tally);
    }
    go(&g.unlabeled(), 1, &mut tally);
    Ok(Polynomial::from_coeffs(
        tally.into_iter().map(BigInt::from).collect(),
    ))
}

/// First edge in lexicographic order; exposed for tests of the oracle.
pub fn naive_branch_edge(g: &Graph) -> Option<Edge> {
    g.edges().first().copied()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn brute_force_examples() {
        let c3 = Family::Cycle(3).build().unwrap();
        assert_eq!(brute_force_count(&c3, 3).unwrap(), 6.into());
        assert_eq!(brute_force_count(&c3, 0).unwrap(), 0.into());
        let w6 = Family::Wheel(6).build().unwrap();
        assert_eq!(brute_force_count(&w6, 4).unwrap(), 120.into());
        assert_eq!(brute_force_count(&Graph::empty(0), 5).unwrap(), 1.into());
    }

    #[test]
    fn brute_force_guard() {
        let g = Graph::empty(20);
        assert!(matches!(
            brute_force_count(&g, 4),
            Err(VerifyError::InstanceTooLarge { .. })
        ));
        assert_eq!(brute_force_count(&g, 1).unwrap(), 1.into());
    }

    #[test]
    fn naive_examples() {
        let c5 = Family::Cycle(5).build().unwrap();
        let s = Polynomial::t_minus(1);
        assert_eq!(naive_chromatic(&c5).unwrap(), &s.pow(5) - &s);
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(
            naive_chromatic(&k4).unwrap(),
            Polynomial::falling_factorial(4)
        );
        let diamond = Family::BrokenWheel(4).build().unwrap();
        let expected = &Polynomial::falling_factorial(2) * &Polynomial::t_minus(2).pow(2);
        assert_eq!(naive_chromatic(&diamond).unwrap(), expected);
        assert_eq!(brute_force_count(&diamond, 3).unwrap(), 6.into());
    }

    #[test]
    fn naive_guard() {
        let k8 = Family::Complete(8).build().unwrap();
        assert!(naive_chromatic(&k8).is_err());
    }

    #[test]
    fn edgeless_two_vertices() {
        let g = Graph::empty(2);
        let r = verify_structure(&g, &Polynomial::monomial(2));
        assert!(r.passed());
        assert_eq!(r.status(Property::CoefficientSum), Status::NotApplicable);
        assert_eq!(r.status(Property::LowestPower), Status::Pass);
    }

    #[test]
    fn corrupted_c4() {
        let c4 = Family::Cycle(4).build().unwrap();
        let s = Polynomial::t_minus(1);
        let bad = &(&s.pow(4) + &s) + &Polynomial::one();
        let r = verify_structure(&c4, &bad);
        assert_eq!(r.status(Property::ConstantTerm), Status::Fail);
        assert_eq!(r.status(Property::CoefficientSum), Status::Fail);
        let good = &s.pow(4) + &s;
        assert!(verify_structure(&c4, &good).passed());
    }

    #[test]
    fn empty_graph() {
        let r = verify_structure(&Graph::empty(0), &Polynomial::one());
        assert!(r.passed(), "{r}");
        assert_eq!(r.components, 0);
    }
}
