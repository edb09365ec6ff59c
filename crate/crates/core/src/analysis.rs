//! End-to-end analysis of one group and catalogue sweeps over many.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::family::{self, FamilyError, FamilyReport};
use crate::ggraph::{self, GGraph, GraphBasis, GraphError};
use crate::group::{self, GroupError, GroupParams, Irrep};
use crate::lattice::{BoundarySequence, ContinuedFraction};
use crate::oracle::{self, ClusterReport};
use crate::par::Strategy;
use crate::resolution::{self, DynkinDiagram, FixedLocusVerdict, FundamentalCycle, RepContent, ResolutionError, SpecialList};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Random points checked on each walking family.
    pub samples: usize,
    pub seed: u64,
    pub strategy: Strategy,
}

impl Default for Options {
    fn default() -> Self {
        Options { samples: 5, seed: 1, strategy: Strategy::Parallel }
    }
}

/// Oracle verdicts for a list of graph ideals and their walking families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub graphs: Vec<ClusterReport>,
    pub families: Vec<FamilyReport>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.graphs.iter().all(ClusterReport::is_g_cluster) && self.families.iter().all(FamilyReport::passed)
    }

    pub fn samples_checked(&self) -> usize {
        self.families.iter().map(|f| f.samples.len()).sum()
    }
}

/// Runs the oracle on every graph ideal and every sampled family point.
pub fn verify_graphs(g: &GroupParams, graphs: &[GGraph], opts: &Options) -> Result<Verification, AnalysisError> {
    let reports = opts.strategy.map(graphs, |graph| oracle::is_g_cluster(g, &graph.generators));
    let families = family::verify_walking_with(opts.strategy, g, graphs, opts.samples, opts.seed)?;
    Ok(Verification { graphs: reports, families })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRecord {
    pub graph: GGraph,
    pub basis: GraphBasis,
    pub content: RepContent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub group: GroupParams,
    pub continued_fraction: ContinuedFraction,
    pub boundary: BoundarySequence,
    pub fixed_locus: FixedLocusVerdict,
    pub graphs: Vec<GraphRecord>,
    pub verification: Verification,
    pub dynkin: DynkinDiagram,
    pub fundamental_cycle: FundamentalCycle,
    pub specials: SpecialList,
}

impl Analysis {
    /// Oracle verdicts plus the geometric coherence checks on the specials.
    pub fn passed(&self) -> bool {
        self.verification.passed() && self.coherent()
    }

    /// One special per curve, with dimensions equal to the fundamental cycle.
    pub fn coherent(&self) -> bool {
        self.specials.entries.len() == self.dynkin.vertex_count()
            && self.specials.dims() == self.fundamental_cycle.values()
            && self.specials.irreps().first() == Some(&resolution::first_special(&self.group))
    }
}

pub fn analyze(g: &GroupParams, opts: &Options) -> Result<Analysis, AnalysisError> {
    g.require_dihedral_small()?;
    let graphs = ggraph::enumerate_ggraphs(g)?;
    let verification = verify_graphs(g, &graphs, opts)?;
    let per_graph = opts.strategy.map(&graphs, |graph| (ggraph::basis_with_twins(graph), resolution::ideal_rep_content(g, graph)));
    let contents: Vec<BTreeSet<Irrep>> =
        per_graph.iter().map(|(_, content)| content.keys().copied().filter(|rho| !rho.is_trivial()).collect()).collect();
    let specials = resolution::specials_from_contents(&graphs, &contents)?;
    let dynkin = resolution::dynkin(g)?;
    let fundamental_cycle = resolution::fundamental_cycle(&dynkin)?;
    let graphs = graphs.into_iter().zip(per_graph).map(|(graph, (basis, content))| GraphRecord { graph, basis, content }).collect();
    Ok(Analysis {
        group: *g,
        continued_fraction: g.continued_fraction(),
        boundary: g.boundary(),
        fixed_locus: resolution::fixed_locus(g),
        graphs,
        verification,
        dynkin,
        fundamental_cycle,
        specials,
    })
}

/// Every `(2n, a)` with `4 ≤ 2n ≤ max_two_n` even, `1 ≤ a < 2n`, `gcd(a, 2n) = 1` and `a² ≡ 1`.
pub fn valid_groups(max_two_n: u64) -> Vec<GroupParams> {
    (2..=max_two_n / 2).map(|n| 2 * n).flat_map(|two_n| (1..two_n).filter_map(move |a| group::make_group(two_n, a).ok())).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    /// Contains quasireflections `α^i β` for the listed `i`.
    NotSmall { quasireflections: Vec<u64> },
    /// `a = 1`: small but abelian, handled by the cyclic description.
    Abelian,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reject {
    pub two_n: u64,
    pub a: u64,
    pub reason: RejectReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalogue {
    pub max_two_n: u64,
    pub groups: Vec<Analysis>,
    pub rejects: Vec<Reject>,
}

/// Analyses every small non-abelian group up to the bound, one task per group.
pub fn sweep(max_two_n: u64, opts: &Options) -> Result<Catalogue, AnalysisError> {
    let (small, rejected): (Vec<_>, Vec<_>) = valid_groups(max_two_n).into_iter().partition(|g| g.is_small() && !g.is_abelian());
    let rejects = rejected
        .into_iter()
        .map(|g| {
            let reason =
                if g.is_small() { RejectReason::Abelian } else { RejectReason::NotSmall { quasireflections: group::quasireflections(&g) } };
            Reject { two_n: g.two_n(), a: g.a(), reason }
        })
        .collect();
    let groups = opts.strategy.map(&small, |g| analyze(g, opts)).into_iter().collect::<Result<_, _>>()?;
    Ok(Catalogue { max_two_n, groups, rejects })
}
