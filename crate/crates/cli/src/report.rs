//! Versioned, serialisable reports. Polynomials use the canonical text form
//! of the algebra module and irreps the `rho(w,±)` / `V(w)` labels.

use serde::{Deserialize, Serialize};

use ghilb_core::algebra::GPolynomial;
use ghilb_core::analysis::{Analysis, Catalogue, GraphRecord, RejectReason, Verification};
use ghilb_core::family::FamilyReport;
use ghilb_core::group::{self, GroupParams};
use ghilb_core::lattice::NewtonPoint;
use ghilb_core::oracle::{ClusterReport, QuotientDim};
use ghilb_core::resolution::FixedLocus;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub two_n: u64,
    pub a: u64,
    pub n: u64,
    pub q: u64,
    pub k: u64,
    pub order: u64,
    pub small: bool,
    pub quasireflections: Vec<u64>,
}

impl GroupInfo {
    pub fn of(g: &GroupParams) -> Self {
        GroupInfo {
            two_n: g.two_n(),
            a: g.a(),
            n: g.n(),
            q: g.q(),
            k: g.k(),
            order: g.order(),
            small: g.is_small(),
            quasireflections: group::quasireflections(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedLocusInfo {
    pub q: Option<u64>,
    pub j: Option<u64>,
    pub middle_entry: Option<u64>,
    pub fixed: String,
    pub small: bool,
}

pub fn fixed_locus_name(f: FixedLocus) -> &'static str {
    match f {
        FixedLocus::TwoPoints => "two_points",
        FixedLocus::PointAndLine => "point_and_line",
        FixedLocus::TwoLines => "two_lines",
        FixedLocus::NoMiddleCurve => "no_middle_curve",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinInfo {
    pub first: String,
    pub second: String,
    pub ratio: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleInfo {
    /// `None` when the quotient is infinite-dimensional.
    pub quotient_dim: Option<usize>,
    pub g_cluster: bool,
    pub failure: Option<String>,
}

impl OracleInfo {
    pub fn of(report: &ClusterReport) -> Self {
        let quotient_dim = match report.quotient_dim {
            QuotientDim::Finite(d) => Some(d),
            QuotientDim::Infinite => None,
        };
        OracleInfo { quotient_dim, g_cluster: report.is_g_cluster(), failure: report.failure.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepCount {
    pub irrep: String,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub kind: String,
    pub first: [u64; 2],
    pub second: [u64; 2],
    pub transition: String,
    pub generators: Vec<String>,
    /// Basis size with each twin pair counted once.
    pub basis_size: usize,
    /// Cells drawn in the staircase, twins included.
    pub basis_cells: usize,
    pub twins: Vec<TwinInfo>,
    pub oracle: OracleInfo,
    pub rep_content: Vec<RepCount>,
}

fn point(p: NewtonPoint) -> [u64; 2] {
    [p.x, p.y]
}

impl GraphInfo {
    pub fn of(record: &GraphRecord, oracle: &ClusterReport) -> Self {
        let graph = &record.graph;
        GraphInfo {
            kind: graph.kind.to_string(),
            first: point(graph.first),
            second: point(graph.second),
            transition: format!("{:?}", graph.transition),
            generators: graph.generators.iter().map(ToString::to_string).collect(),
            basis_size: record.basis.counted(),
            basis_cells: record.basis.monomials.len(),
            twins: record
                .basis
                .twins
                .iter()
                .map(|t| TwinInfo {
                    first: GPolynomial::from(t.first).to_string(),
                    second: GPolynomial::from(t.second).to_string(),
                    ratio: t.ratio.to_string(),
                })
                .collect(),
            oracle: OracleInfo::of(oracle),
            rep_content: record.content.iter().map(|(rho, &m)| RepCount { irrep: rho.to_string(), multiplicity: m }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinInfo {
    pub chain: Vec<i64>,
    pub horns: Vec<i64>,
    pub vertex_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleEntry {
    pub vertex: String,
    pub coefficient: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialInfo {
    pub vertex: String,
    pub irrep: String,
    pub dim: usize,
    /// `ρ_j^±` / `V_r` naming with `j = w/q`.
    pub conventional: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub kind: String,
    pub first_endpoint: bool,
    pub second_endpoint: bool,
    pub midpoint: Option<bool>,
    pub scale_invariant: bool,
    pub samples: usize,
    pub samples_passed: usize,
    pub passed: bool,
}

impl FamilyInfo {
    pub fn of(report: &FamilyReport) -> Self {
        FamilyInfo {
            kind: report.kind.to_string(),
            first_endpoint: report.first_endpoint_ok,
            second_endpoint: report.second_endpoint_ok,
            midpoint: report.midpoint_ok,
            scale_invariant: report.scale_invariant,
            samples: report.samples.len(),
            samples_passed: report.samples.iter().filter(|s| s.is_g_cluster()).count(),
            passed: report.passed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub samples_per_family: usize,
    pub seed: u64,
    pub families: Vec<FamilyInfo>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub group: GroupInfo,
    pub continued_fraction: Vec<u64>,
    pub boundary: Vec<[u64; 2]>,
    pub fixed_locus: FixedLocusInfo,
    pub graphs: Vec<GraphInfo>,
    pub dynkin: DynkinInfo,
    pub fundamental_cycle: Vec<CycleEntry>,
    pub specials: Vec<SpecialInfo>,
    pub families: FamilySummary,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub renders: Vec<String>,
}

impl AnalysisReport {
    pub fn of(analysis: &Analysis, samples: usize, seed: u64) -> Self {
        let g = &analysis.group;
        let verdict = analysis.fixed_locus;
        AnalysisReport {
            schema_version: SCHEMA_VERSION,
            group: GroupInfo::of(g),
            continued_fraction: analysis.continued_fraction.entries().to_vec(),
            boundary: analysis.boundary.points().iter().map(|&p| point(p)).collect(),
            fixed_locus: FixedLocusInfo {
                q: verdict.middle,
                j: verdict.adjacent,
                middle_entry: verdict.middle_entry,
                fixed: fixed_locus_name(verdict.fixed).to_owned(),
                small: verdict.small,
            },
            graphs: analysis
                .graphs
                .iter()
                .zip(&analysis.verification.graphs)
                .map(|(record, oracle)| GraphInfo::of(record, oracle))
                .collect(),
            dynkin: DynkinInfo {
                chain: analysis.dynkin.chain.clone(),
                horns: analysis.dynkin.horns.clone(),
                vertex_count: analysis.dynkin.vertex_count(),
            },
            fundamental_cycle: analysis
                .fundamental_cycle
                .coefficients
                .iter()
                .map(|&(v, c)| CycleEntry { vertex: v.to_string(), coefficient: c })
                .collect(),
            specials: analysis
                .specials
                .entries
                .iter()
                .map(|s| SpecialInfo {
                    vertex: s.vertex.to_string(),
                    irrep: s.irrep.to_string(),
                    dim: s.irrep.dim(),
                    conventional: s.irrep.conventional_name(g),
                })
                .collect(),
            families: family_summary(&analysis.verification, samples, seed),
            passed: analysis.passed(),
            renders: Vec::new(),
        }
    }
}

pub fn family_summary(verification: &Verification, samples: usize, seed: u64) -> FamilySummary {
    let families: Vec<FamilyInfo> = verification.families.iter().map(FamilyInfo::of).collect();
    let passed = families.iter().all(|f| f.passed);
    FamilySummary { samples_per_family: samples, seed, families, passed }
}

/// Output of `verify`: oracle verdicts without the geometric data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub group: GroupInfo,
    pub graphs: Vec<GraphVerdict>,
    pub families: FamilySummary,
    pub samples_checked: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVerdict {
    pub kind: String,
    pub generators: Vec<String>,
    pub oracle: OracleInfo,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub two_n: u64,
    pub a: u64,
    pub q: u64,
    pub continued_fraction: Vec<u64>,
    pub graph_kinds: Vec<String>,
    pub specials: Vec<String>,
    pub special_dims: Vec<usize>,
    pub fundamental_cycle: Vec<u64>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectInfo {
    pub two_n: u64,
    pub a: u64,
    /// `"not_small"` or `"abelian"`.
    pub reason: String,
    pub quasireflections: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub max_two_n: u64,
    pub groups: Vec<GroupSummary>,
    pub rejects: Vec<RejectInfo>,
    pub passed: bool,
}

impl SweepReport {
    pub fn of(catalogue: &Catalogue) -> Self {
        let groups: Vec<GroupSummary> = catalogue
            .groups
            .iter()
            .map(|an| GroupSummary {
                two_n: an.group.two_n(),
                a: an.group.a(),
                q: an.group.q(),
                continued_fraction: an.continued_fraction.entries().to_vec(),
                graph_kinds: an.graphs.iter().map(|r| r.graph.kind.to_string()).collect(),
                specials: an.specials.irreps().iter().map(ToString::to_string).collect(),
                special_dims: an.specials.irreps().iter().map(|r| r.dim()).collect(),
                fundamental_cycle: an.fundamental_cycle.values(),
                passed: an.passed(),
            })
            .collect();
        let rejects = catalogue
            .rejects
            .iter()
            .map(|r| {
                let (reason, quasireflections) = match &r.reason {
                    RejectReason::NotSmall { quasireflections } => ("not_small", quasireflections.clone()),
                    RejectReason::Abelian => ("abelian", Vec::new()),
                };
                RejectInfo { two_n: r.two_n, a: r.a, reason: reason.to_owned(), quasireflections }
            })
            .collect();
        let passed = groups.iter().all(|g| g.passed);
        SweepReport { schema_version: SCHEMA_VERSION, max_two_n: catalogue.max_two_n, groups, rejects, passed }
    }
}
