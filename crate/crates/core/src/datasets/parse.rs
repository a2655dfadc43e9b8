use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("self-loop on {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("expected one or two vertex names, found {0}")]
    Malformed(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Parse the `.edges` format.
///
/// One edge per line as two whitespace-separated names, or a single name to
/// declare an isolated vertex. `#` comments run to end of line and blank
/// lines are ignored. Ids follow order of first appearance.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut names: Vec<&str> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let fail = |kind| Err(ParseError { line, kind });
        match tokens[..] {
            [] => {}
            [a] => {
                intern(a, &mut ids, &mut names);
            }
            [a, b] => {
                if a == b {
                    return fail(ParseErrorKind::SelfLoop(a.to_string()));
                }
                let u = intern(a, &mut ids, &mut names);
                let v = intern(b, &mut ids, &mut names);
                if !seen.insert((u.min(v), u.max(v))) {
                    return fail(ParseErrorKind::DuplicateEdge(a.to_string(), b.to_string()));
                }
                edges.push((u, v));
            }
            _ => return fail(ParseErrorKind::Malformed(tokens.len())),
        }
    }
    let g = Graph::from_edges(names.len(), edges).expect("edges validated while parsing");
    Ok(g.with_labels(names).expect("names are distinct"))
}

fn intern<'a>(name: &'a str, ids: &mut HashMap<&'a str, usize>, names: &mut Vec<&'a str>) -> usize {
    *ids.entry(name).or_insert_with(|| {
        names.push(name);
        names.len() - 1
    })
}

/// Serialize in the `.edges` format: edges in id order, then any isolated
/// vertices. Unlabeled vertices are written as their ids.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", g.display_name(e.lo()), g.display_name(e.hi()));
    }
    for v in (0..g.n()).filter(|&v| g.degree(v) == 0) {
        let _ = writeln!(out, "{}", g.display_name(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_of_three() {
        let g = parse_edge_list("A B\nB C\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
        assert_eq!(g.label(2), Some("C"));
    }

    #[test]
    fn comments_blanks_and_isolated() {
        let g = parse_edge_list("# header\n\nA B # trailing\n  C  \n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_edge_list("A A\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(matches!(e.kind, ParseErrorKind::SelfLoop(_)));
        let e = parse_edge_list("A B\n\nB A\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ParseErrorKind::DuplicateEdge(..)));
        let e = parse_edge_list("A B C\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Malformed(3));
    }

    #[test]
    fn names_are_case_sensitive() {
        let g = parse_edge_list("a A\n").unwrap();
        assert_eq!(g.n(), 2);
    }

    #[test]
    fn round_trip() {
        let text = "X Y\nY Z\nZ X\nW\n";
        let g = parse_edge_list(text).unwrap();
        let again = parse_edge_list(&to_edge_list(&g)).unwrap();
        assert_eq!(g.canonical_form(), again.canonical_form());
        assert_eq!(again.vertex_by_label("W").map(|v| again.degree(v)), Some(0));
    }
}
