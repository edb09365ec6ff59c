//! The exceptional divisor of the minimal resolution: Dynkin diagram,
//! β-fixed loci on the cyclic resolution, fundamental cycle and the special
//! representations read off the G-graph ideals.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::algebra::{linalg, GPolynomial, GaussianRational, Monomial};
use crate::ggraph::{self, GGraph, GraphError, GraphKind, Sign, TransitionType};
use crate::group::{BetaEigen, GroupError, GroupParams, Irrep};
use crate::oracle::buchberger;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("the intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("curve {curve} meets no single special representation: candidates {candidates:?}")]
    AmbiguousCurve { curve: String, candidates: Vec<Irrep> },
}

/// Which exceptional curve a vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    /// `E_i`, `1 ≤ i ≤ m`, along the chain.
    Chain(usize),
    Horn(Sign),
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Vertex::Chain(i) => write!(f, "E{i}"),
            Vertex::Horn(s) => write!(f, "H{}", s.symbol()),
        }
    }
}

/// Weighted dual graph of the exceptional divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    /// Self-intersections `[−b₁, …, −b_{m−1}, −(b_m + 2)/2]`, or the whole
    /// type-A chain in the abelian case.
    pub chain: Vec<i64>,
    /// Two `−2` curves attached to the last chain vertex; empty for type A.
    pub horns: Vec<i64>,
}

impl DynkinDiagram {
    pub fn vertex_count(&self) -> usize {
        self.chain.len() + self.horns.len()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let horns = [Sign::Plus, Sign::Minus].into_iter().take(self.horns.len()).map(Vertex::Horn);
        (1..=self.chain.len()).map(Vertex::Chain).chain(horns).collect()
    }

    pub fn self_intersections(&self) -> Vec<i64> {
        self.chain.iter().chain(&self.horns).copied().collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let len = self.chain.len();
        let mut edges: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
        edges.extend((0..self.horns.len()).map(|h| (len - 1, len + h)));
        edges
    }

    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let diag = self.self_intersections();
        let mut m: Vec<Vec<i64>> = (0..diag.len()).map(|i| (0..diag.len()).map(|j| if i == j { diag[i] } else { 0 }).collect()).collect();
        for (i, j) in self.edges() {
            m[i][j] = 1;
            m[j][i] = 1;
        }
        m
    }

    /// Sylvester's criterion on `−M`, exactly.
    pub fn is_negative_definite(&self) -> bool {
        leading_minors(&self.intersection_matrix()).iter().all(|d| d.is_positive())
    }
}

/// Leading principal minors of `−M` via exact Gaussian elimination.
fn leading_minors(m: &[Vec<i64>]) -> Vec<BigRational> {
    let size = m.len();
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|row| row.iter().map(|&v| BigRational::from_integer(BigInt::from(-v))).collect()).collect();
    let mut minors = Vec::with_capacity(size);
    let mut det = BigRational::from_integer(BigInt::from(1));
    for k in 0..size {
        let pivot = a[k][k].clone();
        det *= &pivot;
        minors.push(det.clone());
        if pivot.is_zero() {
            // Remaining minors are not positive either way; stop here.
            minors.extend(std::iter::repeat_n(BigRational::zero(), size - k - 1));
            break;
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower {
            let factor = &row[k] / &pivot;
            for (entry, above) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                *entry -= &factor * above;
            }
        }
    }
    minors
}

pub fn dynkin(g: &GroupParams) -> Result<DynkinDiagram, ResolutionError> {
    if !g.is_small() {
        return Err(GroupError::NotSmall { two_n: g.two_n(), a: g.a() }.into());
    }
    if g.is_abelian() {
        let n = g.n() as i64;
        return Ok(DynkinDiagram { chain: vec![-2, -(n + 1), -2], horns: Vec::new() });
    }
    let cf = g.continued_fraction();
    let middle = cf.middle_index().expect("small groups have odd length");
    let entries = cf.entries();
    let mut chain: Vec<i64> = entries[..middle - 1].iter().map(|&b| -(b as i64)).collect();
    chain.push(-((entries[middle - 1] as i64 + 2) / 2));
    Ok(DynkinDiagram { chain, horns: vec![-2, -2] })
}

/// What β fixes on the middle curve of the cyclic resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedLocus {
    /// Isolated fixed points; two `A₁` points on the quotient.
    TwoPoints,
    /// A fixed point and a fixed line through the chart.
    PointAndLine,
    TwoLines,
    /// Even continued-fraction length: no β-stable middle curve at all.
    NoMiddleCurve,
}

impl FixedLocus {
    pub fn is_small(self) -> bool {
        self == FixedLocus::TwoPoints
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedLocusVerdict {
    /// `q`, the coordinate of the diagonal boundary point.
    pub middle: Option<u64>,
    /// First coordinate of the boundary point preceding `(q, q)`.
    pub adjacent: Option<u64>,
    pub middle_entry: Option<u64>,
    pub fixed: FixedLocus,
    pub small: bool,
}

/// Decides smallness from the parities of `q`, `j` and `b_m`.
pub fn fixed_locus(g: &GroupParams) -> FixedLocusVerdict {
    let cf = g.continued_fraction();
    let boundary = g.boundary();
    let none = FixedLocusVerdict { middle: None, adjacent: None, middle_entry: None, fixed: FixedLocus::NoMiddleCurve, small: false };
    let (Some(entry), Some(mid)) = (cf.middle_entry(), boundary.middle_index()) else {
        return none;
    };
    let q = boundary.points()[mid].x;
    let j = boundary.points()[mid - 1].x;
    let fixed = match (q % 2, j % 2) {
        (0, _) if entry % 2 == 0 => FixedLocus::TwoPoints,
        (0, _) => FixedLocus::PointAndLine,
        (_, 0) if entry % 4 == 2 => FixedLocus::TwoPoints,
        (_, 0) => FixedLocus::TwoLines,
        _ if entry % 4 == 0 => FixedLocus::TwoPoints,
        _ => FixedLocus::TwoLines,
    };
    FixedLocusVerdict { middle: Some(q), adjacent: Some(j), middle_entry: Some(entry), fixed, small: fixed.is_small() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalCycle {
    pub coefficients: Vec<(Vertex, u64)>,
}

impl FundamentalCycle {
    pub fn values(&self) -> Vec<u64> {
        self.coefficients.iter().map(|&(_, c)| c).collect()
    }
}

/// Laufer's algorithm: raise the first vertex with `Z·E_i > 0` until none is left.
pub fn fundamental_cycle(d: &DynkinDiagram) -> Result<FundamentalCycle, ResolutionError> {
    if !d.is_negative_definite() {
        return Err(ResolutionError::NotNegativeDefinite);
    }
    let m = d.intersection_matrix();
    let mut z = vec![1i64; m.len()];
    let pairing = |z: &[i64], i: usize| m[i].iter().zip(z).map(|(a, b)| a * b).sum::<i64>();
    while let Some(i) = (0..m.len()).find(|&i| pairing(&z, i) > 0) {
        z[i] += 1;
    }
    let coefficients = d.vertices().into_iter().zip(z).map(|(v, c)| (v, c as u64)).collect();
    Ok(FundamentalCycle { coefficients })
}

/// Multiset of irreps occurring in `I/mI`.
pub type RepContent = BTreeMap<Irrep, usize>;

/// Irreps of the minimal generators `I/mI` of a graph ideal.
///
/// Graph ideals are homogeneous, so `I/mI` splits by degree as
/// `I_d / (x·I_{d−1} + y·I_{d−1})`; each piece is decomposed by α-weight and
/// β-eigenvalue. Only the degrees and weights of the given generators can
/// contribute, since their images span `I/mI`.
pub fn ideal_rep_content(g: &GroupParams, graph: &GGraph) -> RepContent {
    let gb = buchberger(&graph.generators);
    let two_n = g.two_n();
    let mut targets: BTreeMap<u32, BTreeSet<u64>> = BTreeMap::new();
    for f in &graph.generators {
        if let (Some(d), Some(w)) = (f.total_degree(), f.alpha_weight(two_n, g.a())) {
            targets.entry(d).or_default().insert(w);
        }
    }
    // Elements `m − NF(m)` for the non-standard monomials of degree `d` whose weight passes `keep`.
    let ideal_part = |d: u32, keep: &dyn Fn(u64) -> bool| -> Vec<GPolynomial> {
        (0..=d)
            .map(|i| Monomial::new(i, d - i))
            .filter(|&m| keep(g.weight(m)) && !gb.is_standard(m))
            .map(|m| {
                let f = GPolynomial::term(GaussianRational::one(), m);
                &f - &gb.normal_form(&f)
            })
            .collect()
    };
    let mut content = RepContent::new();
    for (&d, weights) in &targets {
        let current = ideal_part(d, &|w| weights.contains(&w));
        let below: BTreeSet<u64> = weights.iter().flat_map(|&w| [(w + two_n - 1) % two_n, (w + two_n - g.a()) % two_n]).collect();
        let shifted: Vec<GPolynomial> = match d {
            0 => Vec::new(),
            _ => ideal_part(d - 1, &|w| below.contains(&w))
                .iter()
                .flat_map(|f| [f.shift(Monomial::new(1, 0)), f.shift(Monomial::new(0, 1))])
                .collect(),
        };
        for (rho, count) in degree_content(g, &current, &shifted) {
            *content.entry(rho).or_default() += count;
        }
    }
    content
}

fn by_weight(g: &GroupParams, polys: &[GPolynomial]) -> BTreeMap<u64, Vec<GPolynomial>> {
    let mut out: BTreeMap<u64, Vec<GPolynomial>> = BTreeMap::new();
    for f in polys {
        let w = f.alpha_weight(g.two_n(), g.a()).expect("graph ideals are α-homogeneous");
        out.entry(w).or_default().push(f.clone());
    }
    out
}

fn span_rank(polys: &[GPolynomial]) -> usize {
    let monomials: BTreeSet<Monomial> = polys.iter().flat_map(GPolynomial::monomials).collect();
    let index: BTreeMap<Monomial, usize> = monomials.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let rows: Vec<Vec<GaussianRational>> = polys
        .iter()
        .map(|f| {
            let mut row = vec![GaussianRational::zero(); index.len()];
            for (m, c) in f.terms() {
                row[index[&m]] = c.clone();
            }
            row
        })
        .collect();
    linalg::rank(&rows)
}

/// `dim ker(β − λ)` on the span of `polys`.
fn eigen_dim(polys: &[GPolynomial], lambda: &GaussianRational) -> usize {
    let image: Vec<GPolynomial> = polys.iter().map(|f| &f.act_beta() - &f.scale(lambda)).collect();
    span_rank(polys) - span_rank(&image)
}

fn degree_content(g: &GroupParams, ideal: &[GPolynomial], shifted: &[GPolynomial]) -> RepContent {
    let ideal = by_weight(g, ideal);
    let shifted = by_weight(g, shifted);
    let empty = Vec::new();
    let mut out = RepContent::new();
    for (&w, gens) in &ideal {
        let lower = shifted.get(&w).unwrap_or(&empty);
        if g.is_fixed_weight(w) {
            for beta in g.beta_eigenvalues(w) {
                let count = eigen_dim(gens, &beta.value()) - eigen_dim(lower, &beta.value());
                if count > 0 {
                    out.insert(Irrep::OneDim { weight: w, beta }, count);
                }
            }
        } else if g.canonical_weight(w) == w {
            let count = span_rank(gens) - span_rank(lower);
            if count > 0 {
                out.insert(Irrep::TwoDim { weight: w }, count);
            }
        }
    }
    out
}

/// `ρ^{σ}_w` with a real sign, as used for weights `r + s` of boundary points.
fn signed_rep(g: &GroupParams, weight: u64, odd: bool) -> Irrep {
    let w = weight % g.two_n();
    let beta = if odd { BetaEigen::Minus } else { BetaEigen::Plus };
    if g.is_fixed_weight(w) {
        Irrep::OneDim { weight: w, beta }
    } else {
        Irrep::TwoDim { weight: g.canonical_weight(w) }
    }
}

/// `ρ^±_q`, spanned by `x^q ± (−i)^q y^q`, on which β acts by `±i^q`.
fn middle_rep(g: &GroupParams, sign: Sign) -> Irrep {
    let q = g.q();
    let plus = BetaEigen::i_pow(q);
    let beta = match sign {
        Sign::Plus => plus,
        Sign::Minus => plus.negate(),
    };
    Irrep::OneDim { weight: q % g.two_n(), beta }
}

/// `V_w`; a fixed weight (only `w ≡ 0` in practice) degenerates to `ρ^−_0`.
fn two_dim_rep(g: &GroupParams, weight: i64) -> Irrep {
    let w = weight.rem_euclid(g.two_n() as i64) as u64;
    if g.is_fixed_weight(w) {
        Irrep::OneDim { weight: w, beta: BetaEigen::Minus }
    } else {
        Irrep::TwoDim { weight: g.canonical_weight(w) }
    }
}

/// The non-trivial irreps predicted for `I/mI` from the graph's type and lattice data.
pub fn row_formula(g: &GroupParams, graph: &GGraph) -> BTreeSet<Irrep> {
    let (r, s) = (graph.first.x, graph.first.y);
    let (u, v) = (graph.second.x, graph.second.y);
    let reps = match graph.kind {
        GraphKind::A => vec![signed_rep(g, r + s, r % 2 == 1), signed_rep(g, u + v, u % 2 == 1)],
        GraphKind::B1 => vec![signed_rep(g, r + s, r % 2 == 1), two_dim_rep(g, r as i64)],
        GraphKind::B2 => vec![two_dim_rep(g, 2 * r as i64 - u as i64), two_dim_rep(g, r as i64)],
        GraphKind::C(sign) => {
            let other = match graph.transition {
                TransitionType::A => signed_rep(g, 2 * u, u % 2 == 1),
                TransitionType::B1 | TransitionType::B2 => two_dim_rep(g, r as i64),
            };
            vec![middle_rep(g, sign), other]
        }
        GraphKind::D(sign) => vec![middle_rep(g, sign)],
    };
    reps.into_iter().filter(|rho| !rho.is_trivial()).collect()
}

/// Non-trivial part of the computed `I/mI` content.
pub fn nontrivial_content(g: &GroupParams, graph: &GGraph) -> BTreeSet<Irrep> {
    ideal_rep_content(g, graph).into_keys().filter(|rho| !rho.is_trivial()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Special {
    pub vertex: Vertex,
    pub irrep: Irrep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialList {
    /// In vertex order: `E_1 … E_m`, then the horns `H+`, `H−`.
    pub entries: Vec<Special>,
}

impl SpecialList {
    pub fn irreps(&self) -> Vec<Irrep> {
        self.entries.iter().map(|s| s.irrep).collect()
    }

    pub fn dims(&self) -> Vec<u64> {
        self.entries.iter().map(|s| s.irrep.dim() as u64).collect()
    }

    pub fn all_one_dimensional(&self) -> bool {
        self.entries.iter().all(|s| s.irrep.dim() == 1)
    }
}

/// Specials as the union of non-trivial `I/mI` content over all G-graphs,
/// each attached to the curve on which its graphs meet: `E_i` joins
/// `Γ_{i−1}` and `Γ_i`, `E_m` joins `Γ_{m−1}` to both `C±`, and the horn
/// `H±` joins `C±` to `D±`.
pub fn special_representations(g: &GroupParams) -> Result<SpecialList, ResolutionError> {
    g.require_dihedral_small()?;
    let graphs = ggraph::enumerate_ggraphs(g)?;
    special_representations_of(g, &graphs)
}

pub fn special_representations_of(g: &GroupParams, graphs: &[GGraph]) -> Result<SpecialList, ResolutionError> {
    let contents: Vec<BTreeSet<Irrep>> = crate::par::map(graphs, |graph| nontrivial_content(g, graph));
    specials_from_contents(graphs, &contents)
}

/// Curve assignment from precomputed non-trivial contents, one per graph.
pub fn specials_from_contents(graphs: &[GGraph], contents: &[BTreeSet<Irrep>]) -> Result<SpecialList, ResolutionError> {
    let index = |kind: GraphKind| graphs.iter().position(|x| x.kind == kind).expect("all C/D graphs present");
    let chain = graphs.iter().take_while(|x| !matches!(x.kind, GraphKind::C(_) | GraphKind::D(_))).count();
    let (cp, cm) = (index(GraphKind::C(Sign::Plus)), index(GraphKind::C(Sign::Minus)));
    let (dp, dm) = (index(GraphKind::D(Sign::Plus)), index(GraphKind::D(Sign::Minus)));
    let mut curves: Vec<(Vertex, Vec<usize>)> = (1..chain).map(|i| (Vertex::Chain(i), vec![i - 1, i])).collect();
    curves.push((Vertex::Chain(chain), vec![chain - 1, cp, cm]));
    curves.push((Vertex::Horn(Sign::Plus), vec![cp, dp]));
    curves.push((Vertex::Horn(Sign::Minus), vec![cm, dm]));
    let entries = curves
        .into_iter()
        .map(|(vertex, members)| {
            let mut shared = contents[members[0]].clone();
            for &k in &members[1..] {
                shared = shared.intersection(&contents[k]).copied().collect();
            }
            match shared.len() {
                1 => Ok(Special { vertex, irrep: *shared.iter().next().expect("one element") }),
                _ => Err(ResolutionError::AmbiguousCurve { curve: vertex.to_string(), candidates: shared.into_iter().collect() }),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SpecialList { entries })
}

/// `ρ^−_{1+a}`, expected on `E_1`.
pub fn first_special(g: &GroupParams) -> Irrep {
    signed_rep(g, 1 + g.a(), true)
}
