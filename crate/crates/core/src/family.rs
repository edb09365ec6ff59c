//! One-parameter families of G-clusters joining consecutive G-graphs.
//!
//! A family is a list of generator templates over `P¹`. A point `(p0 : p1)`
//! specialises a pencil template to `p1·first + p0·second`, so `(0 : 1)` is
//! the first endpoint and `(1 : 0)` the second.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{GPolynomial, GaussianRational, Monomial};
use crate::ggraph::{diagonal_sum, middle_binomial, middle_pair, symmetric_pair, GGraph, GraphKind, Sign, TransitionType};
use crate::group::GroupParams;
use crate::lattice::NewtonPoint;
use crate::oracle::{self, ClusterReport};
use crate::par::Strategy;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{0} and {1} are not consecutive G-graphs")]
    NonConsecutive(GraphKind, GraphKind),
    #[error("(0 : 0) is not a point of P¹")]
    ZeroPoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransitionKind {
    AToA,
    AToB1,
    B1ToB2,
    B2ToB2,
    /// `C_A+ ↔ C_A−` through a last type-A graph.
    CAPair,
    /// `C_B+ ↔ C_B−` through a last type-B graph.
    CBPair,
    CToD(Sign),
}

impl std::fmt::Display for TransitionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TransitionKind::AToA => write!(f, "A->A"),
            TransitionKind::AToB1 => write!(f, "A->B1"),
            TransitionKind::B1ToB2 => write!(f, "B1->B2"),
            TransitionKind::B2ToB2 => write!(f, "B2->B2"),
            TransitionKind::CAPair => write!(f, "CA+<->CA-"),
            TransitionKind::CBPair => write!(f, "CB+<->CB-"),
            TransitionKind::CToD(s) => write!(f, "C{0}->D{0}", s.symbol()),
        }
    }
}

/// A generator of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Template {
    Fixed(GPolynomial),
    /// `p1·first + p0·second` at `(p0 : p1)`.
    Pencil {
        first: GPolynomial,
        second: GPolynomial,
    },
}

impl Template {
    fn pencil(first: GPolynomial, second: GPolynomial) -> Self {
        Template::Pencil { first, second }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionFamily {
    pub kind: TransitionKind,
    /// Lattice data `(r, s), (u, v)[, (t, w)]`.
    pub points: Vec<NewtonPoint>,
    pub templates: Vec<Template>,
}

/// A point `(p0 : p1)` of `P¹`.
pub type P1Point = (GaussianRational, GaussianRational);

pub fn specialize(fam: &TransitionFamily, p: &P1Point) -> Result<Vec<GPolynomial>, FamilyError> {
    let (p0, p1) = p;
    if p0.is_zero() && p1.is_zero() {
        return Err(FamilyError::ZeroPoint);
    }
    Ok(fam
        .templates
        .iter()
        .map(|t| match t {
            Template::Fixed(f) => f.clone(),
            Template::Pencil { first, second } => first.scale(p1) + second.scale(p0),
        })
        .filter(|f| !f.is_zero())
        .collect())
}

fn mono(i: u64, j: u64) -> GPolynomial {
    GPolynomial::monomial(exp(i), exp(j))
}

fn exp(v: u64) -> u32 {
    u32::try_from(v).expect("exponent fits in u32")
}

/// `x^{u+v} + (−1)^u y^{u+v}`.
fn diag(r: u64, s: u64) -> GPolynomial {
    diagonal_sum(exp(r), exp(s))
}

fn sym(i: u64, j: u64) -> GPolynomial {
    symmetric_pair(exp(i), exp(j))
}

/// `(x^u y^u : x^{u+v} + (−1)^u y^{u+v})`, the pencil leaving a type-A graph.
fn leave_type_a(u: u64, v: u64) -> Template {
    Template::pencil(mono(u, u), -diag(u, v))
}

/// The two pencils leaving a type-B graph `(r, s; u, v)` with step `m`.
/// The second pencil is the β-image of the first.
fn leave_type_b(s: u64, u: u64, m: u64) -> [Template; 2] {
    let (first, second) = (mono(u, m), -mono(0, s));
    let mirrored = Template::pencil(first.act_beta(), second.act_beta());
    [Template::pencil(first, second), mirrored]
}

/// Builds the family joining two G-graphs adjacent in walking order.
pub fn build_family(first: &GGraph, second: &GGraph) -> Result<TransitionFamily, FamilyError> {
    let err = || FamilyError::NonConsecutive(first.kind, second.kind);
    let (r, s) = (first.first.x, first.first.y);
    let (u, v) = (first.second.x, first.second.y);
    let chained = first.second == second.first;
    let same_middle = first.first == second.first && first.second == second.second;
    let (kind, templates) = match (first.kind, second.kind) {
        (GraphKind::A, GraphKind::A) if chained => {
            let (t, w) = (second.second.x, second.second.y);
            (
                TransitionKind::AToA,
                vec![
                    leave_type_a(u, v),
                    Template::Fixed(diag(r, s)),
                    Template::Fixed(sym(s - v, u - r)),
                    Template::Fixed(mono(t, t)),
                    Template::Fixed(sym(v - w, t - u)),
                ],
            )
        }
        (GraphKind::A, GraphKind::B1) if chained => {
            let t = second.second.x;
            let m = second.m.ok_or_else(err)?;
            (
                TransitionKind::AToB1,
                vec![
                    leave_type_a(u, v),
                    Template::Fixed(diag(r, s)),
                    Template::Fixed(sym(s - v, u - r)),
                    Template::Fixed(mono(t, m)),
                    Template::Fixed(mono(m, t)),
                    Template::Fixed(sym(m + v, m - u)),
                ],
            )
        }
        (GraphKind::B1, GraphKind::B2) if chained => {
            let t = second.second.x;
            let m = first.m.ok_or_else(err)?;
            let [p1, p2] = leave_type_b(s, u, m);
            (
                TransitionKind::B1ToB2,
                vec![
                    p1,
                    p2,
                    Template::Fixed(diag(r, s)),
                    Template::Fixed(sym(m + s, m - r)),
                    Template::Fixed(mono(t, m)),
                    Template::Fixed(mono(m, t)),
                    Template::Fixed(mono(2 * m, 2 * m)),
                ],
            )
        }
        (GraphKind::B2, GraphKind::B2) if chained => {
            let t = second.second.x;
            let m = first.m.ok_or_else(err)?;
            let [p1, p2] = leave_type_b(s, u, m);
            (
                TransitionKind::B2ToB2,
                vec![
                    p1,
                    p2,
                    Template::Fixed(mono(0, s + m)),
                    Template::Fixed(mono(s + m, 0)),
                    Template::Fixed(mono(t, m)),
                    Template::Fixed(mono(m, t)),
                    Template::Fixed(mono(2 * m, 2 * m)),
                ],
            )
        }
        (GraphKind::C(Sign::Plus), GraphKind::C(Sign::Minus)) if same_middle => middle_pair_family(first.transition, r, s, u),
        (GraphKind::C(cs), GraphKind::D(ds)) if same_middle && cs == ds => {
            (TransitionKind::CToD(cs), c_to_d_family(first.transition, r, s, u, cs))
        }
        _ => return Err(err()),
    };
    let mut points = vec![first.first, first.second];
    if chained {
        points.push(second.second);
    }
    Ok(TransitionFamily { kind, points, templates })
}

fn middle_pair_family(last: TransitionType, r: u64, s: u64, q: u64) -> (TransitionKind, Vec<Template>) {
    let (qe, re, se) = (exp(q), exp(r), exp(s));
    let plus = middle_binomial(qe, Sign::Plus);
    let minus = middle_binomial(qe, Sign::Minus);
    let (m1, m2) = (s - q, q - r);
    match last {
        TransitionType::A => (
            TransitionKind::CAPair,
            vec![
                Template::pencil(plus.pow(2), -minus.pow(2)),
                Template::Fixed(middle_pair(se, exp(m2), re, qe, Sign::Plus)),
                Template::Fixed(middle_pair(se, exp(m2), re, qe, Sign::Minus)),
                Template::Fixed(sym(m1, m2)),
                Template::Fixed(diag(r, s)),
            ],
        ),
        TransitionType::B1 | TransitionType::B2 => {
            let m = m1;
            let (first, second) = (plus.shift(Monomial::new(0, exp(m))), minus.shift(Monomial::new(0, exp(m))));
            let mirrored = Template::pencil(first.act_beta(), second.act_beta());
            let mut templates = vec![
                Template::pencil(first, second),
                mirrored,
                Template::Fixed(mono(2 * m, 2 * m)),
                Template::Fixed(middle_pair(se, exp(m), re, qe, Sign::Plus)),
                Template::Fixed(middle_pair(se, exp(m), re, qe, Sign::Minus)),
            ];
            if last == TransitionType::B1 {
                templates.push(Template::Fixed(diag(r, s)));
                templates.push(Template::Fixed(sym(m + s, m - r)));
            } else {
                templates.push(Template::Fixed(mono(0, s + m)));
                templates.push(Template::Fixed(mono(s + m, 0)));
            }
            (TransitionKind::CBPair, templates)
        }
    }
}

fn c_to_d_family(last: TransitionType, r: u64, s: u64, q: u64, sign: Sign) -> Vec<Template> {
    let (qe, re, se) = (exp(q), exp(r), exp(s));
    let core = middle_binomial(qe, sign);
    let (m1, m2) = (s - q, q - r);
    let mut templates = vec![Template::pencil(middle_pair(se, exp(m2), re, qe, sign), core.clone()), Template::Fixed(mono(s - r, s - r))];
    match last {
        TransitionType::A => templates.push(Template::Fixed(sym(m1, m2))),
        TransitionType::B1 | TransitionType::B2 => {
            templates.push(Template::Fixed(core.shift(Monomial::new(0, exp(m2)))));
            templates.push(Template::Fixed(core.shift(Monomial::new(exp(m2), 0))));
        }
    }
    templates.push(Template::Fixed(core.pow(2)));
    templates
}

/// All `#qG + 2` families of a group in walking order: the half-boundary
/// transitions, the `C+ ↔ C−` curve, then `C+ → D+` and `C− → D−`.
pub fn walking_families(graphs: &[GGraph]) -> Result<Vec<TransitionFamily>, FamilyError> {
    let chain = graphs.iter().take_while(|g| !matches!(g.kind, GraphKind::C(_) | GraphKind::D(_))).count();
    let find = |kind: GraphKind| graphs.iter().find(|g| g.kind == kind);
    let (Some(cp), Some(cm), Some(dp), Some(dm)) =
        (find(GraphKind::C(Sign::Plus)), find(GraphKind::C(Sign::Minus)), find(GraphKind::D(Sign::Plus)), find(GraphKind::D(Sign::Minus)))
    else {
        let last = graphs.last().map_or(GraphKind::A, |g| g.kind);
        return Err(FamilyError::NonConsecutive(last, last));
    };
    let mut out: Vec<TransitionFamily> = graphs[..chain].windows(2).map(|w| build_family(&w[0], &w[1])).collect::<Result<_, _>>()?;
    out.push(build_family(cp, cm)?);
    out.push(build_family(cp, dp)?);
    out.push(build_family(cm, dm)?);
    Ok(out)
}

/// `count` seeded generic points with both coordinates nonzero, numerators in
/// `[−7, 7]` and denominators in `[1, 7]`.
pub fn sample_points(seed: u64, count: usize) -> Vec<P1Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coordinate = |rng: &mut ChaCha8Rng| loop {
        let c = GaussianRational::from_fractions(rng.gen_range(-7..=7), rng.gen_range(1..=7), rng.gen_range(-7..=7), rng.gen_range(1..=7));
        if !c.is_zero() {
            return c;
        }
    };
    (0..count).map(|_| (coordinate(&mut rng), coordinate(&mut rng))).collect()
}

/// Result of checking one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub kind: TransitionKind,
    pub first_endpoint_ok: bool,
    pub second_endpoint_ok: bool,
    /// `Some` for the `C+ ↔ C−` curve: whether `(1 : 1)` gives the last graph.
    pub midpoint_ok: Option<bool>,
    /// Specialisation at `λ·p` spans the same ideal as at `p`.
    pub scale_invariant: bool,
    pub samples: Vec<ClusterReport>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.first_endpoint_ok
            && self.second_endpoint_ok
            && self.midpoint_ok.unwrap_or(true)
            && self.scale_invariant
            && self.samples.iter().all(ClusterReport::is_g_cluster)
    }
}

fn point(p0: i64, p1: i64) -> P1Point {
    (GaussianRational::from(p0), GaussianRational::from(p1))
}

/// Checks endpoints (and the midpoint of the `C` curve) against the
/// classified ideals, and every sample with the G-cluster oracle.
pub fn verify_family(
    g: &GroupParams,
    fam: &TransitionFamily,
    first: &GGraph,
    second: &GGraph,
    last: Option<&GGraph>,
    samples: &[P1Point],
) -> FamilyReport {
    let at = |p: &P1Point| specialize(fam, p).expect("nonzero point");
    let first_endpoint_ok = oracle::ideals_equal(&at(&point(0, 1)), &first.generators);
    let second_endpoint_ok = oracle::ideals_equal(&at(&point(1, 0)), &second.generators);
    let midpoint_ok = match fam.kind {
        TransitionKind::CAPair | TransitionKind::CBPair => {
            Some(last.is_some_and(|l| oracle::ideals_equal(&at(&point(1, 1)), &l.generators)))
        }
        _ => None,
    };
    let scale_invariant = samples.first().is_none_or(|p| {
        let lambda = GaussianRational::from_fractions(2, 3, -1, 5);
        let scaled = (&p.0 * &lambda, &p.1 * &lambda);
        oracle::ideals_equal(&at(p), &at(&scaled))
    });
    let samples = samples.iter().map(|p| oracle::is_g_cluster(g, &at(p))).collect();
    FamilyReport { kind: fam.kind, first_endpoint_ok, second_endpoint_ok, midpoint_ok, scale_invariant, samples }
}

/// Families of every transition with seeded samples and their reports.
pub fn verify_walking(g: &GroupParams, graphs: &[GGraph], samples_per_family: usize, seed: u64) -> Result<Vec<FamilyReport>, FamilyError> {
    verify_walking_with(Strategy::default(), g, graphs, samples_per_family, seed)
}

/// Family `i` draws its samples from seed `seed + i`.
pub fn verify_walking_with(
    strategy: Strategy,
    g: &GroupParams,
    graphs: &[GGraph],
    samples_per_family: usize,
    seed: u64,
) -> Result<Vec<FamilyReport>, FamilyError> {
    let families = walking_families(graphs)?;
    let chain = graphs.iter().take_while(|x| !matches!(x.kind, GraphKind::C(_) | GraphKind::D(_))).count();
    let last = chain.checked_sub(1).map(|i| &graphs[i]);
    let find = |kind: GraphKind| graphs.iter().find(|x| x.kind == kind).expect("present");
    let endpoints = |idx: usize| -> (&GGraph, &GGraph) {
        match idx {
            i if i + 1 < chain => (&graphs[i], &graphs[i + 1]),
            i if i + 1 == chain => (find(GraphKind::C(Sign::Plus)), find(GraphKind::C(Sign::Minus))),
            i if i == chain => (find(GraphKind::C(Sign::Plus)), find(GraphKind::D(Sign::Plus))),
            _ => (find(GraphKind::C(Sign::Minus)), find(GraphKind::D(Sign::Minus))),
        }
    };
    let jobs: Vec<(usize, &TransitionFamily)> = families.iter().enumerate().collect();
    Ok(strategy.map(&jobs, |(idx, fam)| {
        let (first, second) = endpoints(*idx);
        let points = sample_points(seed.wrapping_add(*idx as u64), samples_per_family);
        verify_family(g, fam, first, second, last, &points)
    }))
}
