//! Acceptance criteria 1 to 8. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ghilb_cli::report::AnalysisReport;
use ghilb_core::agraph;
use ghilb_core::algebra::{GPolynomial, GaussianRational, Monomial};
use ghilb_core::analysis::valid_groups;
use ghilb_core::family::{self, TransitionKind};
use ghilb_core::ggraph::{self, GGraph, GraphKind};
use ghilb_core::group::{self, BetaEigen, GroupParams, Irrep};
use ghilb_core::lattice::{self, NewtonPoint};
use ghilb_core::oracle::{self, QuotientDim};
use ghilb_core::resolution;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

/// Fails the enclosing criterion with a formatted message.
macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn polys(list: &[&str]) -> Result<Vec<GPolynomial>, String> {
    list.iter().map(|s| s.parse::<GPolynomial>().map_err(|e| format!("{s}: {e}"))).collect()
}

fn group_of(two_n: u64, a: u64) -> Result<GroupParams, String> {
    group::make_group(two_n, a).map_err(|e| e.to_string())
}

fn graphs_of(g: &GroupParams) -> Result<Vec<GGraph>, String> {
    ggraph::enumerate_ggraphs(g).map_err(|e| format!("{g}: {e}"))
}

fn small_dihedral(max: u64) -> Vec<GroupParams> {
    valid_groups(max).into_iter().filter(|g| g.is_small() && !g.is_abelian()).collect()
}

fn bd42_golden() -> Check {
    let start = Instant::now();
    let out =
        Command::new(env!("CARGO_BIN_EXE_ghilb")).args(["analyze", "42", "13", "--format", "json"]).output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(out.status.success(), "exit status {:?}", out.status.code());
    let report: AnalysisReport = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure!(report.graphs.len() == 7, "{} graphs", report.graphs.len());
    let printed = [
        ("A", vec!["x*y", "x^29*y - x*y^29", "x^42 + y^42"]),
        ("B1", vec!["x^14 - y^14", "x^16*y^2 + x^2*y^16", "x^4*y^3", "x^3*y^4"]),
        ("B2", vec!["x^6*y^6", "x^13", "y^13", "x^7*y^3", "x^3*y^7"]),
        ("C+", vec!["y^3*(x^7 + i*y^7)", "x^3*(x^7 + i*y^7)", "x^6*y^6", "x^10*y^3", "x^3*y^10"]),
        ("C-", vec!["y^3*(x^7 - i*y^7)", "x^3*(x^7 - i*y^7)", "x^6*y^6", "x^10*y^3", "x^3*y^10"]),
        ("D+", vec!["x^7 + i*y^7", "x^6*y^6"]),
        ("D-", vec!["x^7 - i*y^7", "x^6*y^6"]),
    ];
    for (graph, (kind, ideal)) in report.graphs.iter().zip(&printed) {
        ensure!(graph.kind == *kind, "graph {} where {kind} was expected", graph.kind);
        let emitted: Vec<&str> = graph.generators.iter().map(String::as_str).collect();
        ensure!(oracle::ideals_equal(&polys(&emitted)?, &polys(ideal)?), "{kind}: emitted ideal {emitted:?} differs");
    }
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("7 ideals equal, {elapsed:.2?}"))
}

fn regular_oracle() -> Check {
    let start = Instant::now();
    let (mut groups, mut ideals) = (0, 0);
    for g in small_dihedral(60) {
        groups += 1;
        for graph in graphs_of(&g)? {
            ideals += 1;
            let report = oracle::is_g_cluster(&g, &graph.generators);
            ensure!(report.quotient_dim == QuotientDim::Finite(g.order() as usize), "{g} {}: {:?}", graph.kind, report.quotient_dim);
            let decomposition = report.decomposition.ok_or_else(|| format!("{g} {}: {:?}", graph.kind, report.failure))?;
            for rho in group::irreps(&g) {
                ensure!(decomposition.of(rho) == rho.dim(), "{g} {}: {rho} occurs {} times", graph.kind, decomposition.of(rho));
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!("{ideals} ideals over {groups} groups, {elapsed:.2?}"))
}

fn d4_regression() -> Check {
    let g = group_of(4, 3)?;
    let ideal = polys(&["x*y", "x^4 + y^4"])?;
    let report = oracle::is_g_cluster(&g, &ideal);
    ensure!(report.quotient_dim == QuotientDim::Finite(8), "quotient dimension {:?}", report.quotient_dim);
    let decomposition = report.decomposition.ok_or("not regular")?;
    for rho in group::irreps(&g) {
        ensure!(decomposition.of(rho) == rho.dim(), "{rho} occurs {} times", decomposition.of(rho));
    }
    let graphs = graphs_of(&g)?;
    let graph = graphs.iter().find(|x| x.kind == GraphKind::B1).ok_or("no B1 graph")?;
    ensure!(oracle::ideals_equal(&graph.generators, &ideal), "B1 ideal differs");
    let basis = ggraph::basis_with_twins(graph);
    ensure!(basis.counted() == 8, "{} counted basis elements", basis.counted());
    ensure!(basis.twins.len() == 1, "{} twin pairs", basis.twins.len());
    let twin = &basis.twins[0];
    let pair: BTreeSet<Monomial> = [twin.first, twin.second].into();
    ensure!(pair == [Monomial::new(4, 0), Monomial::new(0, 4)].into(), "twins {} {}", twin.first, twin.second);
    Ok(format!("{} cells, 8 counted, twins x^4 = {} * y^4", basis.monomials.len(), twin.ratio))
}

/// A table row: the α-column weight and either a β-eigenvalue (1-dim rows)
/// or `None` for 2-dim rows listing `(f, β(f))` pairs.
struct Row {
    weight: u64,
    beta: Option<BetaEigen>,
    entries: &'static [&'static str],
}

const fn one(weight: u64, beta: BetaEigen, entries: &'static [&'static str]) -> Row {
    Row { weight, beta: Some(beta), entries }
}

const fn pairs(weight: u64, entries: &'static [&'static str]) -> Row {
    Row { weight, beta: None, entries }
}

use BetaEigen::{Minus, Plus};

const D4_TABLE: &[Row] = &[
    one(0, Plus, &["1", "x^4 + y^4", "x^2*y^2", "x*y*(x^4 - y^4)"]),
    one(0, Minus, &["x*y", "x^4 - y^4"]),
    one(2, Plus, &["x^2 + y^2", "x*y*(x^2 - y^2)"]),
    one(2, Minus, &["x^2 - y^2", "x*y*(x^2 + y^2)"]),
    pairs(1, &["x", "y", "y^3", "-x^3", "x^2*y", "-x*y^2"]),
];

const BD12_TABLE: &[Row] = &[
    one(0, Plus, &["1", "x^12 + y^12", "x^5*y - x*y^5", "x^6*y^6", "x^8*y^4 + x^4*y^8"]),
    one(0, Minus, &["x^12 - y^12", "x^5*y + x*y^5", "x^3*y^3"]),
    one(2, Plus, &["x^2 + y^2", "x^7*y - x*y^7"]),
    one(2, Minus, &["x^2 - y^2", "x^7*y + x*y^7"]),
    one(4, Plus, &["x^4 + y^4", "x^9*y - x*y^9", "x^2*y^2"]),
    one(4, Minus, &["x^4 - y^4", "x^9*y + x*y^9", "x^5*y^5"]),
    one(6, Plus, &["x^6 + y^6", "x^11*y - x*y^11", "x^4*y^2 + x^2*y^4"]),
    one(6, Minus, &["x^6 - y^6", "x^11*y + x*y^11", "x^4*y^2 - x^2*y^4"]),
    one(8, Plus, &["x^8 + y^8", "x^6*y^2 + x^2*y^6", "x^4*y^4"]),
    one(8, Minus, &["x^8 - y^8", "x^6*y^2 - x^2*y^6", "x*y"]),
    one(10, Plus, &["x^10 + y^10", "x^3*y - x*y^3"]),
    one(10, Minus, &["x^10 - y^10", "x^3*y + x*y^3"]),
    pairs(1, &["x", "y", "y^7", "-x^7", "x^6*y", "-x*y^6", "x^2*y^5", "-x^5*y^2"]),
    pairs(3, &["x^3", "y^3", "y^9", "-x^9", "x*y^2", "x^2*y", "x^8*y", "-x*y^8"]),
    pairs(5, &["x^5", "y^5", "y^11", "-x^11", "x*y^4", "x^4*y", "x^10*y", "-x*y^10"]),
];

fn check_table(g: &GroupParams, table: &[Row]) -> Result<usize, String> {
    let mut checked = 0;
    for row in table {
        match row.beta {
            Some(beta) => {
                let expected = Irrep::OneDim { weight: row.weight, beta };
                for f in polys(row.entries)? {
                    let got = g.rep_of_polynomial(&f).map(|(rho, _)| rho);
                    ensure!(got == Some(expected), "{g}: {f} classified {got:?}, table row {expected}");
                    checked += 1;
                }
            }
            None => {
                let expected = Irrep::TwoDim { weight: g.canonical_weight(row.weight) };
                let mirror = (row.weight * g.a()) % g.two_n();
                for pair in polys(row.entries)?.chunks(2) {
                    let [first, second] = pair else { return Err(format!("{g}: odd pair list")) };
                    for (f, weight) in [(first, row.weight), (second, mirror)] {
                        let got = g.rep_of_polynomial(f).map(|(rho, _)| rho);
                        ensure!(got == Some(expected), "{g}: {f} classified {got:?}, table row {expected}");
                        ensure!(f.alpha_weight(g.two_n(), g.a()) == Some(weight), "{g}: {f} does not carry weight {weight}");
                    }
                    ensure!(first.act_beta() == *second, "{g}: beta({first}) is not {second}");
                    checked += 2;
                }
            }
        }
    }
    Ok(checked)
}

fn rep_tables() -> Check {
    let d4 = check_table(&group_of(4, 3)?, D4_TABLE)?;
    let bd12 = check_table(&group_of(12, 7)?, BD12_TABLE)?;
    Ok(format!("{d4} D4 and {bd12} BD_12(7) entries classified"))
}

fn cyclic_baseline() -> Check {
    let boundary = lattice::newton_boundary(12, 7).map_err(|e| e.to_string())?;
    let p = NewtonPoint::new;
    ensure!(boundary.points() == [p(0, 12), p(1, 7), p(2, 2), p(7, 1), p(12, 0)], "boundary {:?}", boundary.points());
    let cells = |list: Vec<(u32, u32)>| -> BTreeSet<Monomial> { list.into_iter().map(|(i, j)| Monomial::new(i, j)).collect() };
    let row = |len: u32, y: u32| (0..len).map(move |i| (i, y));
    let col = |len: u32, x: u32| (0..len).map(move |j| (x, j));
    let staircases = [
        cells(row(12, 0).collect()),
        cells(row(7, 0).chain(row(5, 1)).collect()),
        cells(col(7, 0).chain(col(5, 1)).collect()),
        cells(col(12, 0).collect()),
    ];
    let origins = [polys(&["x^12", "y"])?, polys(&["x^7", "y^2", "x^5*y"])?, polys(&["x^2", "y^7", "x*y^5"])?, polys(&["x", "y^12"])?];
    let zero = GaussianRational::zero();
    for (i, (first, second)) in boundary.transitions().enumerate() {
        let graph = agraph::a_graph(&boundary, first, second).map_err(|e| e.to_string())?;
        ensure!(graph.staircase == staircases[i], "staircase {i} differs");
        let ideal = agraph::a_cluster_ideal(first, second, &zero, &zero);
        ensure!(oracle::ideals_equal(&ideal, &origins[i]), "ideal {i} differs");
        ensure!(oracle::is_cyclic_cluster(12, 7, &ideal), "ideal {i} is not a cluster");
    }
    // The chart of the second graph away from its origin.
    let (xi, eta) = (GaussianRational::from_fractions(2, 3, 1, 1), GaussianRational::from_fractions(-5, 7, 0, 1));
    let ideal = agraph::a_cluster_ideal(p(1, 7), p(2, 2), &xi, &eta);
    let printed = vec![
        &GPolynomial::monomial(7, 0) - &GPolynomial::monomial(0, 1).scale(&xi),
        &GPolynomial::monomial(0, 2) - &GPolynomial::monomial(2, 0).scale(&eta),
        &GPolynomial::monomial(5, 1) - &GPolynomial::constant(&xi * &eta),
    ];
    ensure!(oracle::ideals_equal(&ideal, &printed), "generic chart ideal differs");
    ensure!(oracle::is_cyclic_cluster(12, 7, &ideal), "generic chart ideal is not a cluster");
    Ok("4 staircases and 4 ideals".to_owned())
}

const SAMPLES: usize = 5;
const SEED: u64 = 1;

fn walking_families() -> Check {
    let mut families = 0;
    for g in small_dihedral(42) {
        let graphs = graphs_of(&g)?;
        let expected = family::walking_families(&graphs).map_err(|e| format!("{g}: {e}"))?;
        let reports = family::verify_walking(&g, &graphs, SAMPLES, SEED).map_err(|e| format!("{g}: {e}"))?;
        ensure!(reports.len() == expected.len() && reports.len() == graphs.len() - 2, "{g}: {} families", reports.len());
        for report in &reports {
            families += 1;
            ensure!(report.first_endpoint_ok && report.second_endpoint_ok, "{g} {}: endpoint mismatch", report.kind);
            if matches!(report.kind, TransitionKind::CAPair | TransitionKind::CBPair) {
                ensure!(report.midpoint_ok == Some(true), "{g} {}: (1:1) is not the last chain graph", report.kind);
            }
            ensure!(report.samples.len() >= SAMPLES, "{g} {}: {} samples", report.kind, report.samples.len());
            ensure!(report.samples.iter().all(|s| s.is_g_cluster()), "{g} {}: a sample is not a G-cluster", report.kind);
            ensure!(report.passed(), "{g} {}: {report:?}", report.kind);
        }
    }
    Ok(format!("{families} families, {SAMPLES} samples each, seed {SEED}"))
}

fn specials_coherence() -> Check {
    let mut groups = 0;
    for g in small_dihedral(60) {
        groups += 1;
        let graphs = graphs_of(&g)?;
        let diagram = resolution::dynkin(&g).map_err(|e| format!("{g}: {e}"))?;
        let specials = resolution::special_representations_of(&g, &graphs).map_err(|e| format!("{g}: {e}"))?;
        let cycle = resolution::fundamental_cycle(&diagram).map_err(|e| format!("{g}: {e}"))?;
        let chain_graphs = g.boundary().middle_index().ok_or("no middle point")?;
        ensure!(specials.entries.len() == diagram.vertex_count(), "{g}: {} specials", specials.entries.len());
        ensure!(diagram.vertex_count() == chain_graphs + 2, "{g}: {} vertices", diagram.vertex_count());
        let (mut dims, mut coefficients) = (specials.dims(), cycle.values());
        dims.sort_unstable();
        coefficients.sort_unstable();
        ensure!(dims == coefficients, "{g}: dims {dims:?}, cycle {coefficients:?}");
        let middle_entry = g.continued_fraction().middle_entry().ok_or("no middle entry")?;
        ensure!(specials.all_one_dimensional() == (middle_entry != 2), "{g}: b_m = {middle_entry}");
    }
    let g = group_of(42, 13)?;
    let specials = resolution::special_representations(&g).map_err(|e| e.to_string())?;
    let frozen = [
        Irrep::OneDim { weight: 14, beta: Minus },
        Irrep::TwoDim { weight: 1 },
        Irrep::TwoDim { weight: 4 },
        Irrep::OneDim { weight: 7, beta: BetaEigen::MinusI },
        Irrep::OneDim { weight: 7, beta: BetaEigen::PlusI },
    ];
    ensure!(specials.irreps() == frozen, "BD_42(13) specials {:?}", specials.irreps());
    let cycle = resolution::fundamental_cycle(&resolution::dynkin(&g).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure!(cycle.values() == [1, 2, 2, 1, 1], "BD_42(13) cycle {:?}", cycle.values());
    Ok(format!("{groups} groups; BD_42(13) cycle (1,2,2,1,1)"))
}

fn smallness_agreement() -> Check {
    let mut valid = 0;
    for g in valid_groups(60) {
        valid += 1;
        let by_formula = g.is_small();
        let by_quasireflections = group::quasireflections(&g).is_empty();
        let by_fixed_locus = resolution::fixed_locus(&g).small;
        ensure!(
            by_formula == by_quasireflections && by_formula == by_fixed_locus,
            "{g}: {by_formula} {by_quasireflections} {by_fixed_locus}"
        );
    }
    ensure!(!group_of(12, 5)?.is_small(), "BD_12(5) accepted");
    ensure!(group_of(12, 7)?.is_small(), "BD_12(7) rejected");
    ensure!(group_of(4, 3)?.is_small(), "BD_4(3) rejected");
    Ok(format!("{valid} valid groups agree"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("BD_42(13) golden reproduction", bd42_golden),
        ("regular-representation oracle, 2n <= 60", regular_oracle),
        ("D4 regression", d4_regression),
        ("representation-table conformance", rep_tables),
        ("cyclic baseline 1/12(1,7)", cyclic_baseline),
        ("walking families, 2n <= 42", walking_families),
        ("specials and geometry coherence, 2n <= 60", specials_coherence),
        ("smallness triple agreement, 2n <= 60", smallness_agreement),
    ];
    let mut failures = 0;
    for (number, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", number + 1),
            Err(reason) => {
                failures += 1;
                println!("criterion {}: FAIL {name}: {reason}", number + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
