//! Closed-form chromatic polynomials of standard families, and a recognizer
//! that detects those families up to isomorphism.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Family, Graph};
use crate::poly::{PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{family} requires {requirement}, got {got}")]
    OutOfRange {
        family: &'static str,
        requirement: &'static str,
        got: String,
    },
    #[error("graph is not a tree")]
    NotATree,
    #[error("interlocking-wheel formula did not divide exactly: {0}")]
    Division(#[from] PolyError),
}

fn out_of_range(
    family: &'static str,
    requirement: &'static str,
    got: impl fmt::Display,
) -> ClosedFormError {
    ClosedFormError::OutOfRange {
        family,
        requirement,
        got: got.to_string(),
    }
}

fn t() -> Polynomial {
    Polynomial::monomial(1)
}

/// `(t − 2)^k`.
fn t2(k: usize) -> Polynomial {
    Polynomial::t_minus(2).pow(k as u32)
}

fn sign(k: usize) -> Polynomial {
    Polynomial::constant(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// `t(t − 1)^{n−1}`.
pub fn chrom_path(n: usize) -> Result<Polynomial, ClosedFormError> {
    if n < 1 {
        return Err(out_of_range("path", "n >= 1", n));
    }
    Ok(&t() * &Polynomial::t_minus(1).pow(n as u32 - 1))
}

/// Every tree on `n` vertices has `t(t − 1)^{n−1}`.
pub fn chrom_tree(g: &Graph) -> Result<Polynomial, ClosedFormError> {
    if !g.is_tree() {
        return Err(ClosedFormError::NotATree);
    }
    chrom_path(g.n())
}

/// `(t − 1)^n + (−1)^n (t − 1)`.
pub fn chrom_cycle(n: usize) -> Result<Polynomial, ClosedFormError> {
    if n < 3 {
        return Err(out_of_range("cycle", "n >= 3", n));
    }
    let s = Polynomial::t_minus(1);
    Ok(&s.pow(n as u32) + &(&sign(n) * &s))
}

pub fn chrom_complete(n: usize) -> Result<Polynomial, ClosedFormError> {
    if n < 1 {
        return Err(out_of_range("complete", "n >= 1", n));
    }
    Ok(Polynomial::falling_factorial(n))
}

/// `t[(t − 2)^{n−1} + (−1)^{n−1}(t − 2)]` for the wheel on `n` vertices.
pub fn chrom_wheel(n: usize) -> Result<Polynomial, ClosedFormError> {
    if n < 4 {
        return Err(out_of_range("wheel", "n >= 4", n));
    }
    Ok(&t() * &(&t2(n - 1) + &(&sign(n - 1) * &t2(1))))
}

/// `t(t − 1)(t − 2)^{n−2}` for the broken wheel on `n` vertices.
pub fn chrom_broken_wheel(n: usize) -> Result<Polynomial, ClosedFormError> {
    if n < 4 {
        return Err(out_of_range("broken_wheel", "n >= 4", n));
    }
    Ok(&Polynomial::falling_factorial(2) * &t2(n - 2))
}

/// The two equivalent sign conventions in which the interlocking-wheel
/// formula is commonly written. `Statement` uses `+(−1)^n` factors,
/// `Proof` writes the same factors as `−(−1)^{n−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InterlockingVariant {
    Statement,
    Proof,
}

/// Variant wired into [`chrom_interlocking`]; chosen by agreement with
/// deletion–contraction on all `4 <= m, n <= 8`, `m + n >= 9`.
pub const VALIDATED_VARIANT: InterlockingVariant = InterlockingVariant::Statement;

/// Chromatic polynomial of `W_m ∧₂ W_n` for `m, n >= 4`, `m + n >= 9`.
pub fn chrom_interlocking(m: usize, n: usize) -> Result<Polynomial, ClosedFormError> {
    chrom_interlocking_variant(m, n, VALIDATED_VARIANT)
}

pub fn chrom_interlocking_variant(
    m: usize,
    n: usize,
    variant: InterlockingVariant,
) -> Result<Polynomial, ClosedFormError> {
    if m < 4 || n < 4 || m + n < 9 {
        return Err(out_of_range(
            "interlocking",
            "m, n >= 4 and m + n >= 9",
            format!("({m}, {n})"),
        ));
    }
    interlocking_formula(m, n, variant)
}

/// The formula itself, without the range check; `(4, 4)` is reachable here
/// for diagnostics.
pub fn interlocking_formula(
    m: usize,
    n: usize,
    variant: InterlockingVariant,
) -> Result<Polynomial, ClosedFormError> {
    if m < 4 || n < 4 {
        return Err(out_of_range(
            "interlocking",
            "m, n >= 4",
            format!("({m}, {n})"),
        ));
    }
    // factor(k, shift) = (t−2)^{k−shift} + σ, where σ is (−1)^k for shift 3
    // and (−1)^{k−1} for shift 4
    let factor = |k: usize, shift: usize| -> Polynomial {
        let term = match (variant, shift) {
            (InterlockingVariant::Statement, 3) => sign(k),
            (InterlockingVariant::Statement, _) => sign(k - 1),
            (InterlockingVariant::Proof, 3) => -&sign(k - 1),
            (InterlockingVariant::Proof, _) => -&sign(k - 2),
        };
        &t2(k - shift) + &term
    };
    let first = [
        t(),
        Polynomial::t_minus(2),
        Polynomial::t_minus(3),
        factor(n, 3),
        factor(m, 3),
    ]
    .iter()
    .fold(Polynomial::one(), |a, b| &a * b);
    let second = [t(), t2(3), factor(n, 4), factor(m, 4)]
        .iter()
        .fold(Polynomial::one(), |a, b| &a * b);
    Ok((&first + &second).exact_div(&Polynomial::t_minus(1))?)
}

/// A recognized family member with the parameters needed to rebuild it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyMatch {
    Edgeless { n: usize },
    Path { n: usize },
    Tree { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Wheel { n: usize },
    BrokenWheel { n: usize },
    InterlockingWheels { m: usize, n: usize },
}

impl FamilyMatch {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyMatch::Edgeless { .. } => "edgeless",
            FamilyMatch::Path { .. } => "path",
            FamilyMatch::Tree { .. } => "tree",
            FamilyMatch::Cycle { .. } => "cycle",
            FamilyMatch::Complete { .. } => "complete",
            FamilyMatch::Wheel { .. } => "wheel",
            FamilyMatch::BrokenWheel { .. } => "broken_wheel",
            FamilyMatch::InterlockingWheels { .. } => "interlocking_wheels",
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilyMatch::Edgeless { n }
            | FamilyMatch::Path { n }
            | FamilyMatch::Tree { n }
            | FamilyMatch::Cycle { n }
            | FamilyMatch::Complete { n }
            | FamilyMatch::Wheel { n }
            | FamilyMatch::BrokenWheel { n } => n,
            FamilyMatch::InterlockingWheels { m, n } => m + n - 4,
        }
    }

    /// The constructible family, if the match has a unique construction
    /// (trees do not).
    pub fn family(&self) -> Option<Family> {
        Some(match *self {
            FamilyMatch::Edgeless { n } => Family::Edgeless(n),
            FamilyMatch::Path { n } => Family::Path(n),
            FamilyMatch::Tree { .. } => return None,
            FamilyMatch::Cycle { n } => Family::Cycle(n),
            FamilyMatch::Complete { n } => Family::Complete(n),
            FamilyMatch::Wheel { n } => Family::Wheel(n),
            FamilyMatch::BrokenWheel { n } => Family::BrokenWheel(n),
            FamilyMatch::InterlockingWheels { m, n } => Family::Interlocking(m, n),
        })
    }

    pub fn polynomial(&self) -> Result<Polynomial, ClosedFormError> {
        match *self {
            FamilyMatch::Edgeless { n } => Ok(Polynomial::monomial(n)),
            FamilyMatch::Path { n } | FamilyMatch::Tree { n } => chrom_path(n),
            FamilyMatch::Cycle { n } => chrom_cycle(n),
            FamilyMatch::Complete { n } => chrom_complete(n),
            FamilyMatch::Wheel { n } => chrom_wheel(n),
            FamilyMatch::BrokenWheel { n } => chrom_broken_wheel(n),
            FamilyMatch::InterlockingWheels { m, n } => chrom_interlocking(m, n),
        }
    }
}

impl fmt::Display for FamilyMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyMatch::InterlockingWheels { m, n } => write!(f, "interlocking_wheels({m},{n})"),
            other => write!(f, "{}({})", other.name(), other.vertex_count()),
        }
    }
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

/// Confirm a candidate by exact isomorphism, after a cheap degree check.
fn confirm(g: &Graph, degrees: &[usize], family: Family) -> bool {
    let Ok(h) = family.build() else {
        return false;
    };
    h.edge_count() == g.edge_count()
        && sorted_degrees(&h) == degrees
        && h.canonical_form() == g.canonical_form()
}

/// Identify `g` (assumed connected) as a member of a family with a known
/// closed form. Precedence when several apply: complete, path, tree, cycle,
/// wheel, broken wheel, interlocking wheels.
pub fn recognize(g: &Graph) -> Option<FamilyMatch> {
    let n = g.n();
    let m = g.edge_count();
    if n == 0 {
        return None;
    }
    if m == 0 {
        return Some(if n == 1 {
            FamilyMatch::Complete { n: 1 }
        } else {
            FamilyMatch::Edgeless { n }
        });
    }
    if !g.is_connected() {
        return None;
    }
    if m == n * (n - 1) / 2 {
        return Some(FamilyMatch::Complete { n });
    }
    let degrees = sorted_degrees(g);
    let max_deg = *degrees.last().unwrap();
    if m + 1 == n {
        return Some(if max_deg <= 2 {
            FamilyMatch::Path { n }
        } else {
            FamilyMatch::Tree { n }
        });
    }
    if m == n && max_deg == 2 {
        return Some(FamilyMatch::Cycle { n });
    }
    if n >= 5 && m == 2 * (n - 1) && max_deg == n - 1 && confirm(g, &degrees, Family::Wheel(n)) {
        return Some(FamilyMatch::Wheel { n });
    }
    if n >= 4 && m == 2 * n - 3 && max_deg == n - 1 && confirm(g, &degrees, Family::BrokenWheel(n))
    {
        return Some(FamilyMatch::BrokenWheel { n });
    }
    // |E| = 2(m + n) − 9 with m + n = |V| + 4
    if n >= 5 && m == 2 * n - 1 {
        let total = n + 4;
        for a in 4..=total / 2 {
            let b = total - a;
            if b < 4 {
                continue;
            }
            if confirm(g, &degrees, Family::Interlocking(a, b)) {
                return Some(FamilyMatch::InterlockingWheels { m: a, n: b });
            }
        }
    }
    None
}
