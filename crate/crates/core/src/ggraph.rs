//! G-graphs of `BD_2n(a)`: one per consecutive pair on the half boundary
//! (types A, B.1, B.2) and the four middle graphs `C±`, `D±`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::agraph;
use crate::algebra::{GPolynomial, GaussianRational, Monomial};
use crate::group::{GroupError, GroupParams};
use crate::lattice::NewtonPoint;
use crate::oracle::{self, GroebnerBasis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0} → {1} is neither of type A nor of type B")]
    InvalidPoints(NewtonPoint, NewtonPoint),
    #[error("points {first} → {second} do not satisfy the hypotheses of type {expected}")]
    TypeMismatch { first: NewtonPoint, second: NewtonPoint, expected: &'static str },
}

/// Shape of a qG-graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QgKind {
    A,
    B,
}

/// Type of a G-graph coming from a half-boundary transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransitionType {
    A,
    B1,
    B2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> GaussianRational {
        match self {
            Sign::Plus => GaussianRational::one(),
            Sign::Minus => GaussianRational::from(-1),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    A,
    B1,
    B2,
    C(Sign),
    D(Sign),
}

impl From<TransitionType> for GraphKind {
    fn from(t: TransitionType) -> Self {
        match t {
            TransitionType::A => GraphKind::A,
            TransitionType::B1 => GraphKind::B1,
            TransitionType::B2 => GraphKind::B2,
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::A => write!(f, "A"),
            GraphKind::B1 => write!(f, "B1"),
            GraphKind::B2 => write!(f, "B2"),
            GraphKind::C(s) => write!(f, "C{}", s.symbol()),
            GraphKind::D(s) => write!(f, "D{}", s.symbol()),
        }
    }
}

/// Union of an A-graph with its mirror image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QgGraph {
    pub first: NewtonPoint,
    pub second: NewtonPoint,
    pub union: BTreeSet<Monomial>,
    pub overlap: BTreeSet<Monomial>,
    pub kind: QgKind,
}

/// Integer data of a transition `(r, s) → (u, v)`.
#[derive(Debug, Clone, Copy)]
struct Corners {
    r: u32,
    s: u32,
    u: u32,
    v: u32,
}

fn exp(v: u64) -> u32 {
    u32::try_from(v).expect("exponent fits in u32")
}

impl Corners {
    fn new(first: NewtonPoint, second: NewtonPoint) -> Self {
        Self { r: exp(first.x), s: exp(first.y), u: exp(second.x), v: exp(second.y) }
    }

    fn points(self) -> (NewtonPoint, NewtonPoint) {
        let p = |x: u32, y: u32| NewtonPoint::new(x.into(), y.into());
        (p(self.r, self.s), p(self.u, self.v))
    }

    fn mismatch(self, expected: &'static str) -> GraphError {
        let (first, second) = self.points();
        GraphError::TypeMismatch { first, second, expected }
    }

    /// `s − v`, or `None` when the points are not ordered along the boundary.
    fn drop_y(self) -> Option<u32> {
        self.s.checked_sub(self.v).filter(|_| self.u > self.r)
    }

    /// `m = s − v = u − r` of a type-B transition.
    fn type_b_m(self) -> Option<u32> {
        let m = self.drop_y()?;
        (m == self.u - self.r).then_some(m)
    }
}

pub fn qg_graph(g: &GroupParams, first: NewtonPoint, second: NewtonPoint) -> Result<QgGraph, GraphError> {
    let kind = match classify_transition(g, first, second)? {
        TransitionType::A => QgKind::A,
        TransitionType::B1 | TransitionType::B2 => QgKind::B,
    };
    let stairs = agraph::staircase(first, second);
    let mirror: BTreeSet<Monomial> = stairs.iter().map(|m| m.mirror()).collect();
    let union = stairs.union(&mirror).copied().collect();
    let overlap = stairs.intersection(&mirror).copied().collect();
    Ok(QgGraph { first, second, union, overlap, kind })
}

/// Type A when `u < s − v`; type B when `s − v = u − r = m`, split into B.1
/// (`u < 2m`) and B.2 (`u ≥ 2m`).
pub fn classify_transition(g: &GroupParams, first: NewtonPoint, second: NewtonPoint) -> Result<TransitionType, GraphError> {
    let c = Corners::new(first, second);
    let in_range = |p: NewtonPoint| p.x <= g.two_n() && p.y <= g.two_n();
    let drop_y = c.drop_y().filter(|_| in_range(first) && in_range(second));
    match (drop_y, c.type_b_m()) {
        (Some(d), _) if c.u < d => Ok(TransitionType::A),
        (_, Some(m)) if c.u < 2 * m => Ok(TransitionType::B1),
        (_, Some(_)) => Ok(TransitionType::B2),
        _ => Err(GraphError::InvalidPoints(first, second)),
    }
}

fn mono(i: u32, j: u32) -> Monomial {
    Monomial::new(i, j)
}

fn sign_pow(k: u32) -> GaussianRational {
    GaussianRational::sign_pow(k.into())
}

fn i_pow(k: u32) -> GaussianRational {
    GaussianRational::i_pow(k.into())
}

/// `x^{r+s} + (−1)^r y^{r+s}`.
pub(crate) fn diagonal_sum(r: u32, s: u32) -> GPolynomial {
    GPolynomial::binomial(mono(r + s, 0), sign_pow(r), mono(0, r + s))
}

/// `x^i y^j + (−1)^j x^j y^i`, a β-eigenvector.
pub(crate) fn symmetric_pair(i: u32, j: u32) -> GPolynomial {
    GPolynomial::binomial(mono(i, j), sign_pow(j), mono(j, i))
}

/// `(−i)^q` times the sign: the coefficient of `y^q` in the middle generators.
pub(crate) fn middle_coefficient(q: u32, sign: Sign) -> GaussianRational {
    &GaussianRational::i_pow(-i64::from(q)) * &sign.value()
}

/// `x^q ± (−i)^q y^q`.
pub fn middle_binomial(q: u32, sign: Sign) -> GPolynomial {
    GPolynomial::binomial(mono(q, 0), middle_coefficient(q, sign), mono(0, q))
}

/// `x^s y^t ± (−1)^r i^q x^t y^s`, the β-eigenvector in the weight of `x^q`.
pub(crate) fn middle_pair(s: u32, t: u32, r: u32, q: u32, sign: Sign) -> GPolynomial {
    let c = &(&sign_pow(r) * &i_pow(q)) * &sign.value();
    GPolynomial::binomial(mono(s, t), c, mono(t, s))
}

pub fn ideal_type_a(first: NewtonPoint, second: NewtonPoint) -> Result<Vec<GPolynomial>, GraphError> {
    let c = Corners::new(first, second);
    let d = c.drop_y().filter(|&d| c.u < d).ok_or_else(|| c.mismatch("A"))?;
    let Corners { r, s, u, .. } = c;
    Ok(vec![GPolynomial::monomial(u, u), symmetric_pair(d, u - r), diagonal_sum(r, s)])
}

pub fn ideal_type_b1(first: NewtonPoint, second: NewtonPoint) -> Result<Vec<GPolynomial>, GraphError> {
    let c = Corners::new(first, second);
    let m = c.type_b_m().filter(|&m| c.u < 2 * m).ok_or_else(|| c.mismatch("B1"))?;
    let Corners { r, s, u, .. } = c;
    Ok(vec![diagonal_sum(r, s), symmetric_pair(m + s, m - r), GPolynomial::monomial(u, m), GPolynomial::monomial(m, u)])
}

pub fn ideal_type_b2(first: NewtonPoint, second: NewtonPoint) -> Result<Vec<GPolynomial>, GraphError> {
    let c = Corners::new(first, second);
    let m = c.type_b_m().filter(|&m| c.u >= 2 * m).ok_or_else(|| c.mismatch("B2"))?;
    let Corners { s, u, .. } = c;
    Ok(vec![
        GPolynomial::monomial(2 * m, 2 * m),
        GPolynomial::monomial(s + m, 0),
        GPolynomial::monomial(0, s + m),
        GPolynomial::monomial(u, m),
        GPolynomial::monomial(m, u),
    ])
}

fn middle_corners(first: NewtonPoint, middle: NewtonPoint, expected: &'static str) -> Result<Corners, GraphError> {
    let c = Corners::new(first, middle);
    if !middle.is_diagonal() || c.r >= c.u || c.s <= c.u {
        return Err(c.mismatch(expected));
    }
    Ok(c)
}

/// `(x^q ± (−i)^q y^q, x^{s−r} y^{s−r})`.
pub fn ideal_type_d(first: NewtonPoint, middle: NewtonPoint, sign: Sign) -> Result<Vec<GPolynomial>, GraphError> {
    let Corners { r, s, u: q, .. } = middle_corners(first, middle, "D")?;
    Ok(vec![middle_binomial(q, sign), GPolynomial::monomial(s - r, s - r)])
}

/// The `C±` generators; the shape depends on the type of the last transition.
pub fn ideal_type_c(first: NewtonPoint, middle: NewtonPoint, sign: Sign, last: TransitionType) -> Result<Vec<GPolynomial>, GraphError> {
    let c = middle_corners(first, middle, "C")?;
    let Corners { r, s, u: q, .. } = c;
    let (m1, m2) = (s - q, q - r);
    match last {
        TransitionType::A if 2 * q < s => Ok(vec![middle_binomial(q, sign).pow(2), middle_pair(s, m2, r, q, sign), symmetric_pair(m1, m2)]),
        TransitionType::B1 | TransitionType::B2 if 2 * q == r + s => {
            let m = m1;
            let core = middle_binomial(q, sign);
            Ok(vec![
                core.shift(mono(0, m)),
                core.shift(mono(m, 0)),
                GPolynomial::monomial(s - r, s - r),
                GPolynomial::monomial(s, m),
                GPolynomial::monomial(m, s),
            ])
        }
        _ => Err(c.mismatch("C")),
    }
}

/// Drops zero generators, scalar duplicates and exact multiples of other generators.
pub fn reduce_generators(gens: Vec<GPolynomial>) -> Vec<GPolynomial> {
    let mut distinct: Vec<GPolynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() && !distinct.iter().any(|d| g.ratio_to(d).is_some()) {
            distinct.push(g);
        }
    }
    let divides = |d: &GPolynomial, p: &GPolynomial| matches!(p.exact_div(d), Ok(Some(_)));
    distinct
        .iter()
        .enumerate()
        .filter(|(i, p)| !distinct.iter().enumerate().any(|(j, d)| j != *i && divides(d, p)))
        .map(|(_, p)| p.clone())
        .collect()
}

/// A classified G-graph with its ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GGraph {
    pub kind: GraphKind,
    /// `(r, s)`.
    pub first: NewtonPoint,
    /// `(u, v)`; the diagonal point `(q, q)` for `C±` and `D±`.
    pub second: NewtonPoint,
    /// Type of the transition ending at `second` (for `C±`, `D±`: the last one).
    pub transition: TransitionType,
    /// `s − v = u − r` for type B.
    pub m: Option<u64>,
    /// `(s − q, q − r)` for `C±`, `D±`.
    pub m1_m2: Option<(u64, u64)>,
    pub generators: Vec<GPolynomial>,
}

impl GGraph {
    fn new(kind: GraphKind, first: NewtonPoint, second: NewtonPoint, transition: TransitionType, generators: Vec<GPolynomial>) -> Self {
        let c = Corners::new(first, second);
        let m = match kind {
            GraphKind::B1 | GraphKind::B2 => c.type_b_m().map(u64::from),
            _ => None,
        };
        let m1_m2 = matches!(kind, GraphKind::C(_) | GraphKind::D(_)).then(|| (first.y - second.y, second.x - first.x));
        Self { kind, first, second, transition, m, m1_m2, generators: reduce_generators(generators) }
    }

    pub fn groebner_basis(&self) -> GroebnerBasis {
        oracle::buchberger(&self.generators)
    }
}

/// All G-graphs in walking order: `Γ_0 … Γ_{l−1}`, then `C+`, `C−`, `D+`, `D−`.
pub fn enumerate_ggraphs(g: &GroupParams) -> Result<Vec<GGraph>, GraphError> {
    let middle = g.middle_point()?;
    let boundary = g.boundary();
    let half = boundary.half().expect("small groups have a diagonal boundary point");
    debug_assert_eq!(half.last(), Some(&middle));
    let mut graphs = Vec::with_capacity(half.len() + 3);
    let mut last = None;
    for pair in half.windows(2) {
        let (first, second) = (pair[0], pair[1]);
        let t = classify_transition(g, first, second)?;
        let gens = match t {
            TransitionType::A => ideal_type_a(first, second)?,
            TransitionType::B1 => ideal_type_b1(first, second)?,
            TransitionType::B2 => ideal_type_b2(first, second)?,
        };
        graphs.push(GGraph::new(t.into(), first, second, t, gens));
        last = Some((first, t));
    }
    let (first, t) = last.expect("a > 1 gives at least one transition");
    for sign in [Sign::Plus, Sign::Minus] {
        graphs.push(GGraph::new(GraphKind::C(sign), first, middle, t, ideal_type_c(first, middle, sign, t)?));
    }
    for sign in [Sign::Plus, Sign::Minus] {
        graphs.push(GGraph::new(GraphKind::D(sign), first, middle, t, ideal_type_d(first, middle, sign)?));
    }
    Ok(graphs)
}

/// A non-standard monomial congruent to a unit `±1, ±i` times a standard one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twin {
    /// The non-standard member.
    pub first: Monomial,
    /// The standard member.
    pub second: Monomial,
    /// `first ≡ ratio · second`.
    pub ratio: GaussianRational,
}

/// The monomials of a G-graph: standard monomials plus their twins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphBasis {
    pub monomials: BTreeSet<Monomial>,
    pub twins: Vec<Twin>,
}

impl GraphBasis {
    /// Size with each twin pair counted once.
    pub fn counted(&self) -> usize {
        self.monomials.len() - self.twins.len()
    }

    pub fn is_twin(&self, m: Monomial) -> bool {
        self.twins.iter().any(|t| t.first == m || t.second == m)
    }
}

pub fn basis_with_twins(graph: &GGraph) -> GraphBasis {
    basis_from_groebner(&graph.groebner_basis())
}

/// Standard monomials together with every non-standard monomial whose normal
/// form is a unit times a single standard monomial.
///
/// Requires an ideal generated by homogeneous polynomials: normal forms then
/// preserve degree, so no twin lies above the top standard degree.
pub fn basis_from_groebner(gb: &GroebnerBasis) -> GraphBasis {
    let standard = gb.standard_monomials().unwrap_or_default();
    let top = standard.iter().map(|m| m.degree()).max().unwrap_or(0);
    let mut monomials: BTreeSet<Monomial> = standard.iter().copied().collect();
    let mut twins = Vec::new();
    for d in 0..=top {
        for i in (0..=d).rev() {
            let m = mono(i, d - i);
            if gb.is_standard(m) {
                continue;
            }
            let nf = gb.normal_form(&m.into());
            let Some((partner, ratio)) = nf.leading_term().filter(|_| nf.is_monomial()) else {
                continue;
            };
            if ratio.is_unit_root() {
                monomials.insert(m);
                twins.push(Twin { first: m, second: partner, ratio: ratio.clone() });
            }
        }
    }
    GraphBasis { monomials, twins }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u64, y: u64) -> NewtonPoint {
        NewtonPoint::new(x, y)
    }

    #[test]
    fn reduction_drops_duplicates_and_multiples() {
        let gens = ["x*y", "x^5*y - x*y^5", "x*y", "x^4 + y^4", "0"].iter().map(|s| s.parse().unwrap()).collect();
        let texts: Vec<String> = reduce_generators(gens).iter().map(ToString::to_string).collect();
        assert_eq!(texts, ["x*y", "x^4 + y^4"]);
    }

    #[test]
    fn type_checks() {
        assert!(ideal_type_a(p(1, 13), p(4, 10)).is_err());
        assert!(ideal_type_b1(p(0, 42), p(1, 13)).is_err());
        assert!(ideal_type_b2(p(1, 13), p(4, 10)).is_err());
        assert!(ideal_type_d(p(4, 10), p(7, 8), Sign::Plus).is_err());
        assert!(ideal_type_c(p(4, 10), p(7, 7), Sign::Plus, TransitionType::A).is_err());
    }
}
