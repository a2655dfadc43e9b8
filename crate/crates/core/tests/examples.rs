use chromapoly::closed_forms::{
    chrom_interlocking_variant, interlocking_formula, InterlockingVariant,
};
use chromapoly::verify::{naive_chromatic, verify_structure, Property, Status};
use chromapoly::{chromatic_polynomial, dataset, recognize, Family, FamilyMatch, Graph};

fn chromatic_number(p: &chromapoly::Polynomial) -> u64 {
    (0..).find(|&t| p.eval_u64(t) > 0.into()).unwrap()
}

#[test]
fn chromatic_numbers_of_maps() {
    for (name, k) in [("canada", 3), ("france", 4), ("usa", 4), ("usa-full", 4)] {
        let d = dataset(name).unwrap();
        let p = chromatic_polynomial(&d.graph).unwrap();
        assert_eq!(chromatic_number(&p), k, "{name}");
        assert_eq!(d.expected.chromatic_number, Some(k));
    }
}

#[test]
fn every_dataset_meets_its_metadata() {
    for d in chromapoly::datasets::all() {
        let p = chromatic_polynomial(&d.graph).unwrap();
        assert_eq!(p.degree(), Some(d.expected.vertices), "{}", d.name);
        let report = verify_structure(&d.graph, &p);
        assert!(report.passed(), "{}: {report}", d.name);
        assert_eq!(report.components, d.expected.components);
        for (t, v) in &d.expected.evaluations {
            assert_eq!(&p.eval_u64(*t), v, "{} at {t}", d.name);
        }
        if let Some(reference) = &d.expected.polynomial {
            assert_eq!(&p, reference, "{}", d.name);
        }
    }
}

#[test]
fn usa_edge_coefficient() {
    let d = dataset("usa").unwrap();
    let p = chromatic_polynomial(&d.graph).unwrap();
    assert_eq!(p.coeff(47), (-105).into());
    let report = verify_structure(&d.graph, &p);
    assert_eq!(report.status(Property::EdgeCoefficient), Status::Pass);
    assert_eq!(report.components, 1);
}

#[test]
fn canada_with_island_gains_a_factor_of_t() {
    let a = chromatic_polynomial(&dataset("canada").unwrap().graph).unwrap();
    let b = chromatic_polynomial(&dataset("canada-13").unwrap().graph).unwrap();
    assert_eq!(b, &a * &chromapoly::Polynomial::monomial(1));
}

/// Peel clique separators of size at most 2, keeping the largest piece.
fn core_of(mut g: Graph) -> Graph {
    while let Some(sep) = g.find_clique_separator(2) {
        let largest = sep.pieces().into_iter().max_by_key(Vec::len).unwrap();
        g = g.induced_subgraph(&largest);
    }
    g
}

#[test]
fn france_core_is_interlocking_wheels() {
    let g = dataset("france").unwrap().graph;
    let core = core_of(g);
    assert_eq!(core.n(), 9);
    assert_eq!(
        recognize(&core),
        Some(FamilyMatch::InterlockingWheels { m: 6, n: 7 })
    );
}

#[test]
fn interlocking_sign_variants_match_the_oracle() {
    for m in 4..=8 {
        for n in 4..=8 {
            if m + n < 9 {
                continue;
            }
            let oracle = naive_chromatic(&Family::Interlocking(m, n).build().unwrap()).unwrap();
            for v in [InterlockingVariant::Statement, InterlockingVariant::Proof] {
                assert_eq!(
                    chrom_interlocking_variant(m, n, v).unwrap(),
                    oracle,
                    "({m},{n}) {v:?}"
                );
            }
        }
    }
}

#[test]
fn four_four_interlocking_collapses_to_k4() {
    let g = Family::Interlocking(4, 4).build().unwrap();
    assert_eq!(g.n(), 4);
    assert_eq!(g.edge_count(), 6);
    assert!(chrom_interlocking_variant(4, 4, InterlockingVariant::Statement).is_err());
    // outside the guarded range, yet the formula still gives the falling factorial
    let formula = interlocking_formula(4, 4, InterlockingVariant::Statement).unwrap();
    assert_eq!(formula, naive_chromatic(&g).unwrap());
}
