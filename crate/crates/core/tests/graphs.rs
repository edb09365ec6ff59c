use std::collections::BTreeSet;

use ghilb_core::agraph;
use ghilb_core::algebra::{GPolynomial, GaussianRational, Monomial};
use ghilb_core::analysis::valid_groups;
use ghilb_core::ggraph::{self, GraphKind, Sign};
use ghilb_core::group::{self, Irrep};
use ghilb_core::lattice::{self, NewtonPoint};
use ghilb_core::oracle::{self, QuotientDim};

fn polys(list: &[&str]) -> Vec<GPolynomial> {
    list.iter().map(|s| s.parse().unwrap()).collect()
}

fn small_dihedral(max: u64) -> impl Iterator<Item = group::GroupParams> {
    valid_groups(max).into_iter().filter(|g| g.is_small() && !g.is_abelian())
}

#[test]
fn bd42_has_the_seven_printed_ideals() {
    let g = group::make_group(42, 13).unwrap();
    let graphs = ggraph::enumerate_ggraphs(&g).unwrap();
    let kinds: Vec<GraphKind> = graphs.iter().map(|x| x.kind).collect();
    use GraphKind::*;
    assert_eq!(kinds, [A, B1, B2, C(Sign::Plus), C(Sign::Minus), D(Sign::Plus), D(Sign::Minus)]);
    let expected = [
        polys(&["x*y", "x^29*y - x*y^29", "x^42 + y^42"]),
        polys(&["x^14 - y^14", "x^16*y^2 + x^2*y^16", "x^4*y^3", "x^3*y^4"]),
        polys(&["x^6*y^6", "x^13", "y^13", "x^7*y^3", "x^3*y^7"]),
        polys(&["y^3*(x^7 + i*y^7)", "x^3*(x^7 + i*y^7)", "x^6*y^6", "x^10*y^3", "x^3*y^10"]),
        polys(&["y^3*(x^7 - i*y^7)", "x^3*(x^7 - i*y^7)", "x^6*y^6", "x^10*y^3", "x^3*y^10"]),
        polys(&["x^7 + i*y^7", "x^6*y^6"]),
        polys(&["x^7 - i*y^7", "x^6*y^6"]),
    ];
    for (graph, ideal) in graphs.iter().zip(&expected) {
        assert!(oracle::ideals_equal(&graph.generators, ideal), "{}", graph.kind);
    }
}

#[test]
fn every_graph_ideal_is_a_g_cluster_up_to_sixty() {
    for g in small_dihedral(60) {
        for graph in ggraph::enumerate_ggraphs(&g).unwrap() {
            let report = oracle::is_g_cluster(&g, &graph.generators);
            assert_eq!(report.quotient_dim, QuotientDim::Finite(g.order() as usize), "{g} {}", graph.kind);
            assert!(report.is_g_cluster(), "{g} {}: {:?}", graph.kind, report.failure);
            let decomposition = report.decomposition.unwrap();
            for rho in group::irreps(&g) {
                assert_eq!(decomposition.of(rho), rho.dim(), "{g} {} {rho}", graph.kind);
            }
            assert_eq!(ggraph::basis_with_twins(&graph).counted() as u64, g.order(), "{g} {}", graph.kind);
        }
    }
}

#[test]
fn graph_count_is_half_boundary_plus_four() {
    for g in small_dihedral(60) {
        let graphs = ggraph::enumerate_ggraphs(&g).unwrap();
        let chain = g.boundary().middle_index().unwrap();
        assert_eq!(graphs.len(), chain + 4, "{g}");
    }
}

#[test]
fn d4_graph_twins_x4_and_y4() {
    let g = group::make_group(4, 3).unwrap();
    let ideal = polys(&["x*y", "x^4 + y^4"]);
    let report = oracle::is_g_cluster(&g, &ideal);
    assert_eq!(report.quotient_dim, QuotientDim::Finite(8));
    let decomposition = report.decomposition.unwrap();
    for rho in group::irreps(&g) {
        let expected = if rho.dim() == 1 { 1 } else { 2 };
        assert_eq!(decomposition.of(rho), expected, "{rho}");
    }
    assert_eq!(group::irreps(&g).iter().filter(|r| r.dim() == 2).count(), 1);

    let graphs = ggraph::enumerate_ggraphs(&g).unwrap();
    let b1 = graphs.iter().find(|x| x.kind == GraphKind::B1).unwrap();
    assert!(oracle::ideals_equal(&b1.generators, &ideal));
    let basis = ggraph::basis_with_twins(b1);
    assert_eq!(basis.monomials.len(), 9);
    assert_eq!(basis.counted(), 8);
    assert_eq!(basis.twins.len(), 1);
    let twin = &basis.twins[0];
    let pair: BTreeSet<Monomial> = [twin.first, twin.second].into();
    assert_eq!(pair, [Monomial::new(4, 0), Monomial::new(0, 4)].into());
    assert_eq!(twin.ratio, GaussianRational::from(-1));
}

#[test]
fn d4_has_six_graphs() {
    let g = group::make_group(4, 3).unwrap();
    let kinds: Vec<String> = ggraph::enumerate_ggraphs(&g).unwrap().iter().map(|x| x.kind.to_string()).collect();
    assert_eq!(kinds, ["B1", "B2", "C+", "C-", "D+", "D-"]);
}

#[test]
fn bd12_graphs_follow_the_boundary() {
    let g = group::make_group(12, 7).unwrap();
    let graphs = ggraph::enumerate_ggraphs(&g).unwrap();
    let summary: Vec<String> = graphs.iter().map(|x| format!("{} {} {}", x.kind, x.first, x.second)).collect();
    assert_eq!(summary, ["A (0,12) (1,7)", "A (1,7) (2,2)", "C+ (1,7) (2,2)", "C- (1,7) (2,2)", "D+ (1,7) (2,2)", "D- (1,7) (2,2)"]);
}

#[test]
fn oracle_rejects_broken_ideals() {
    let g = group::make_group(42, 13).unwrap();
    let graphs = ggraph::enumerate_ggraphs(&g).unwrap();
    let mut dropped = graphs[0].generators.clone();
    dropped.pop();
    let report = oracle::is_g_cluster(&g, &dropped);
    assert_eq!(report.quotient_dim, QuotientDim::Infinite);
    assert!(!report.is_g_cluster());

    // Not β-stable: only one of the two twin monomials killed.
    let d4 = group::make_group(4, 3).unwrap();
    assert!(!oracle::is_g_cluster(&d4, &polys(&["x*y", "x^4", "y^5"])).is_g_cluster());
    // Right dimension, wrong representation.
    let wrong = oracle::is_g_cluster(&d4, &polys(&["x", "y^8"]));
    assert!(!wrong.is_g_cluster());
}

#[test]
fn type_checks_reject_mismatched_corners() {
    let p = |x, y| NewtonPoint::new(x, y);
    assert!(ggraph::ideal_type_b1(p(0, 42), p(1, 13)).is_err());
    assert!(ggraph::ideal_type_a(p(1, 13), p(4, 10)).is_err());
    assert!(ggraph::ideal_type_a(p(0, 42), p(1, 13)).is_ok());
}

#[test]
fn cyclic_a_graphs_of_twelve_seven() {
    let boundary = lattice::newton_boundary(12, 7).unwrap();
    let points = boundary.points();
    assert_eq!(
        points,
        &[NewtonPoint::new(0, 12), NewtonPoint::new(1, 7), NewtonPoint::new(2, 2), NewtonPoint::new(7, 1), NewtonPoint::new(12, 0)]
    );
    let staircase = |cells: &[(u32, u32)]| -> BTreeSet<Monomial> { cells.iter().map(|&(i, j)| Monomial::new(i, j)).collect() };
    let row = |len: u32, y: u32| (0..len).map(move |i| (i, y));
    let col = |len: u32, x: u32| (0..len).map(move |j| (x, j));
    let expected = [
        staircase(&row(12, 0).collect::<Vec<_>>()),
        staircase(&row(7, 0).chain(row(5, 1)).collect::<Vec<_>>()),
        staircase(&col(7, 0).chain(col(5, 1)).collect::<Vec<_>>()),
        staircase(&col(12, 0).collect::<Vec<_>>()),
    ];
    let zero = GaussianRational::zero();
    let origins = [polys(&["x^12", "y"]), polys(&["x^7", "y^2", "x^5*y"]), polys(&["x^2", "y^7", "x*y^5"]), polys(&["x", "y^12"])];
    for (i, (first, second)) in boundary.transitions().enumerate() {
        let graph = agraph::a_graph(&boundary, first, second).unwrap();
        assert_eq!(graph.staircase, expected[i], "graph {i}");
        let ideal = agraph::a_cluster_ideal(first, second, &zero, &zero);
        assert!(oracle::ideals_equal(&ideal, &origins[i]), "graph {i}");
        assert_eq!(oracle::quotient_dimension(&ideal), QuotientDim::Finite(12));
    }
    // A generic point of the second chart.
    let (xi, eta) = (GaussianRational::from_fractions(2, 3, 1, 1), GaussianRational::from_fractions(-5, 7, 0, 1));
    let (first, second) = (points[1], points[2]);
    let ideal = agraph::a_cluster_ideal(first, second, &xi, &eta);
    let printed = vec![
        &GPolynomial::monomial(7, 0) - &GPolynomial::monomial(0, 1).scale(&xi),
        &GPolynomial::monomial(0, 2) - &GPolynomial::monomial(2, 0).scale(&eta),
        &GPolynomial::monomial(5, 1) - &GPolynomial::constant(&xi * &eta),
    ];
    assert!(oracle::ideals_equal(&ideal, &printed));
    assert!(oracle::is_cyclic_cluster(12, 7, &ideal));
}

#[test]
fn weight_fixed_generators_carry_one_dimensional_irreps() {
    let g = group::make_group(42, 13).unwrap();
    let graphs = ggraph::enumerate_ggraphs(&g).unwrap();
    let reps: Vec<Option<Irrep>> = graphs[5].generators.iter().map(|f| g.rep_of_polynomial(f).map(|(r, _)| r)).collect();
    assert!(reps.iter().all(|r| matches!(r, Some(Irrep::OneDim { .. }))));
}
