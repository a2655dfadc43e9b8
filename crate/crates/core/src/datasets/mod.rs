//! Embedded map graphs and the `.edges` file format.

mod parse;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::Polynomial;

pub use parse::{parse_edge_list, to_edge_list, ParseError, ParseErrorKind};

const CANADA: &str = include_str!("../../data/canada.edges");
const CANADA_13: &str = include_str!("../../data/canada-13.edges");
const FRANCE: &str = include_str!("../../data/france.edges");
const USA: &str = include_str!("../../data/usa.edges");
const USA_FULL: &str = include_str!("../../data/usa-full.edges");

/// Names accepted by [`dataset`], in listing order.
pub const NAMES: [&str; 5] = ["canada", "canada-13", "france", "usa", "usa-full"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatasetError {
    #[error("unknown dataset {0:?}; known: canada, canada-13, france, usa, usa-full")]
    Unknown(String),
}

/// A published figure for `χ(t)` that is reported against, not asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub label: &'static str,
    pub t: u64,
    pub value: BigInt,
}

/// What the acceptance suite checks for a dataset. Absent entries are
/// unknown.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expected {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub chromatic_number: Option<u64>,
    /// Exact values of `χ(t)`.
    pub evaluations: Vec<(u64, BigInt)>,
    /// Reference polynomial, compared coefficient by coefficient.
    pub polynomial: Option<Polynomial>,
    pub claims: Vec<Claim>,
}

#[derive(Debug, Clone)]
pub struct Dataset {
    pub name: &'static str,
    pub description: &'static str,
    /// The shipped `.edges` text, comments included.
    pub source: &'static str,
    pub graph: Graph,
    pub expected: Expected,
}

pub fn dataset(name: &str) -> Result<Dataset, DatasetError> {
    let (name, description, source, expected) = match name {
        "canada" => (
            "canada",
            "Canadian provinces and territories, Prince Edward Island omitted",
            CANADA,
            canada(),
        ),
        "canada-13" => (
            "canada-13",
            "Canada with Prince Edward Island as an isolated vertex",
            CANADA_13,
            canada_13(),
        ),
        "france" => ("france", "Regions of metropolitan France", FRANCE, france()),
        "usa" => ("usa", "The 48 contiguous United States", USA, usa()),
        "usa-full" => (
            "usa-full",
            "All 50 United States; Alaska and Hawaii isolated",
            USA_FULL,
            usa_full(),
        ),
        other => return Err(DatasetError::Unknown(other.to_string())),
    };
    let graph = parse_edge_list(source).expect("embedded datasets parse");
    Ok(Dataset {
        name,
        description,
        source,
        graph,
        expected,
    })
}

pub fn all() -> Vec<Dataset> {
    NAMES.iter().map(|n| dataset(n).expect("listed")).collect()
}

fn poly(descending: &[&str]) -> Polynomial {
    Polynomial::from_decimal_descending(descending).expect("valid literals")
}

/// `t(t−1)^6(t−2)^3(t²−3t+3)`.
pub fn canada_polynomial() -> Polynomial {
    let quadratic = Polynomial::from_i64s(&[3, -3, 1]);
    &(&(&Polynomial::monomial(1) * &Polynomial::t_minus(1).pow(6)) * &Polynomial::t_minus(2).pow(3))
        * &quadratic
}

fn canada() -> Expected {
    Expected {
        vertices: 12,
        edges: 15,
        components: 1,
        chromatic_number: Some(3),
        evaluations: vec![(3, 576.into())],
        polynomial: Some(canada_polynomial()),
        claims: Vec::new(),
    }
}

fn canada_13() -> Expected {
    Expected {
        vertices: 13,
        edges: 15,
        components: 2,
        chromatic_number: Some(3),
        evaluations: vec![(3, 1728.into())],
        polynomial: Some(&canada_polynomial() * &Polynomial::monomial(1)),
        claims: Vec::new(),
    }
}

fn france() -> Expected {
    Expected {
        vertices: 12,
        edges: 23,
        components: 1,
        chromatic_number: Some(4),
        evaluations: vec![
            (1, 0.into()),
            (2, 0.into()),
            (3, 0.into()),
            (4, 5184.into()),
        ],
        polynomial: Some(poly(&[
            "1", "-23", "241", "-1519", "6400", "-18927", "40082", "-60751", "64520", "-45656",
            "19328", "-3696", "0",
        ])),
        claims: Vec::new(),
    }
}

/// The published 48-term polynomial for the contiguous states, descending.
pub const USA_PUBLISHED_COEFFICIENTS: [&str; 49] = [
    "1",
    "-105",
    "5404",
    "-181689",
    "4487296",
    "-86797239",
    "1369003119",
    "-18100363324",
    "204677484054",
    "-2009741557171",
    "17339117549604",
    "-132682763002081",
    "907423360476887",
    "-5581169381630167",
    "31031575427165032",
    "-156643500973559120",
    "720455907112532420",
    "-3028205766124900090",
    "11660587916045449786",
    "-41218581559720380212",
    "133971262465065322950",
    "-400893632262902775367",
    "1105490166090074304464",
    "-2811013847987117591939",
    "6593222714427581969721",
    "-14265139633481475975539",
    "28463416059570443463946",
    "-52346700555134790196556",
    "88655379811509518107152",
    "-138105582619332483057236",
    "197572598030181111248913",
    "-259057209010976705704331",
    "310574028340459418761423",
    "-339434199963516594330980",
    "336994442997740949240778",
    "-302626296141859413511498",
    "244548011549333689537938",
    "-176716253459552869763068",
    "113323961012010777670232",
    "-63883998375551455822512",
    "31284178773965469140544",
    "-13106541029265128508800",
    "4603738556785058047232",
    "-1318612298697138044928",
    "295742443634384435712",
    "-48705983353199143936",
    "5236695782665893888",
    "-275716645154500608",
    "0",
];

fn usa() -> Expected {
    Expected {
        vertices: 48,
        edges: 105,
        components: 1,
        chromatic_number: Some(4),
        evaluations: vec![(1, 0.into()), (2, 0.into()), (3, 0.into())],
        polynomial: Some(poly(&USA_PUBLISHED_COEFFICIENTS)),
        claims: vec![
            Claim {
                label: "short",
                t: 4,
                value: 12_811_729_152u64.into(),
            },
            Claim {
                label: "long",
                t: 4,
                value: 12_811_591_729_152u64.into(),
            },
        ],
    }
}

fn usa_full() -> Expected {
    Expected {
        vertices: 50,
        edges: 105,
        components: 3,
        chromatic_number: Some(4),
        evaluations: Vec::new(),
        polynomial: Some(&poly(&USA_PUBLISHED_COEFFICIENTS) * &Polynomial::monomial(2)),
        claims: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_match_metadata() {
        for d in all() {
            let e = &d.expected;
            assert_eq!(d.graph.n(), e.vertices, "{}", d.name);
            assert_eq!(d.graph.edge_count(), e.edges, "{}", d.name);
            assert_eq!(d.graph.component_count(), e.components, "{}", d.name);
            if let Some(p) = &e.polynomial {
                assert_eq!(p.degree(), Some(e.vertices), "{}", d.name);
            }
        }
    }

    #[test]
    fn reference_polynomials_agree_with_evaluations() {
        for d in all() {
            let Some(p) = &d.expected.polynomial else {
                continue;
            };
            for (t, v) in &d.expected.evaluations {
                assert_eq!(&p.eval_u64(*t), v, "{} at {t}", d.name);
            }
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(dataset("utah"), Err(DatasetError::Unknown(_))));
    }

    #[test]
    fn corner_contacts_are_absent() {
        let g = dataset("usa").unwrap().graph;
        let id = |s| g.vertex_by_label(s).unwrap();
        assert!(!g.has_edge(id("AZ"), id("CO")));
        assert!(!g.has_edge(id("UT"), id("NM")));
        assert!(g.has_edge(id("AZ"), id("NM")));
    }

    #[test]
    fn canada_value_at_three() {
        assert_eq!(canada_polynomial().eval_u64(3), 576.into());
    }
}
