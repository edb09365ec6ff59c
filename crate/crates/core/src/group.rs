//! The binary dihedral group `BD_2n(a) = ⟨α, β⟩` with
//! `α = diag(ε, ε^a)`, `ε = e^{2πi/2n}`, and `β = [[0, 1], [−1, 0]]`.
//!
//! Polynomials carry the action `α(f) = f(εx, ε^a y)`, `β(f) = f(y, −x)`, so
//! `x^i y^j` has α-weight `i + a·j (mod 2n)` and `β² = α^n`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::algebra::{GPolynomial, GaussianRational, Monomial};
use crate::lattice::{self, BoundarySequence, ContinuedFraction, NewtonPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("need an even 2n ≥ 2 and 0 < a < 2n, got 2n = {two_n}, a = {a}")]
    OutOfRange { two_n: u64, a: u64 },
    #[error("gcd(a, 2n) = {gcd} ≠ 1 for 2n = {two_n}, a = {a}")]
    NotCoprime { two_n: u64, a: u64, gcd: u64 },
    #[error("a² ≢ 1 (mod 2n) for 2n = {two_n}, a = {a}")]
    NotInvolutive { two_n: u64, a: u64 },
    #[error("BD_{two_n}({a}) contains quasireflections")]
    NotSmall { two_n: u64, a: u64 },
    #[error("BD_{two_n}(1) is abelian; it has no dihedral G-graphs")]
    AbelianCase { two_n: u64 },
}

/// Validated parameters of `BD_2n(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    two_n: u64,
    a: u64,
    q: u64,
    small: bool,
}

/// Validates `(2n, a)` and derives `q`, `k` and smallness.
pub fn make_group(two_n: u64, a: u64) -> Result<GroupParams, GroupError> {
    if two_n < 2 || two_n % 2 == 1 || a == 0 || a >= two_n {
        return Err(GroupError::OutOfRange { two_n, a });
    }
    let gcd = two_n.gcd(&a);
    if gcd != 1 {
        return Err(GroupError::NotCoprime { two_n, a, gcd });
    }
    if (u128::from(a) * u128::from(a)) % u128::from(two_n) != 1 % u128::from(two_n) {
        return Err(GroupError::NotInvolutive { two_n, a });
    }
    let n = two_n / 2;
    // gcd(0, 2n) = 2n, so a = 1 gives q = 1 and an abelian group with 4n characters.
    let q = two_n / (a - 1).gcd(&two_n);
    let small = !n.is_multiple_of((a + 1).gcd(&two_n));
    Ok(GroupParams { two_n, a, q, small })
}

/// The sign carried by a β-eigenvector; always a fourth root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BetaEigen {
    Plus,
    Minus,
    PlusI,
    MinusI,
}

impl BetaEigen {
    pub const ALL: [BetaEigen; 4] = [BetaEigen::Plus, BetaEigen::Minus, BetaEigen::PlusI, BetaEigen::MinusI];

    pub fn value(self) -> GaussianRational {
        match self {
            BetaEigen::Plus => GaussianRational::from_integers(1, 0),
            BetaEigen::Minus => GaussianRational::from_integers(-1, 0),
            BetaEigen::PlusI => GaussianRational::from_integers(0, 1),
            BetaEigen::MinusI => GaussianRational::from_integers(0, -1),
        }
    }

    pub fn from_value(v: &GaussianRational) -> Option<Self> {
        Self::ALL.into_iter().find(|e| e.value() == *v)
    }

    /// `i^k`.
    pub fn i_pow(k: u64) -> Self {
        match k % 4 {
            0 => BetaEigen::Plus,
            1 => BetaEigen::PlusI,
            2 => BetaEigen::Minus,
            _ => BetaEigen::MinusI,
        }
    }

    /// `(−1)^k`.
    pub fn sign_pow(k: u64) -> Self {
        if k.is_multiple_of(2) {
            BetaEigen::Plus
        } else {
            BetaEigen::Minus
        }
    }

    pub fn negate(self) -> Self {
        match self {
            BetaEigen::Plus => BetaEigen::Minus,
            BetaEigen::Minus => BetaEigen::Plus,
            BetaEigen::PlusI => BetaEigen::MinusI,
            BetaEigen::MinusI => BetaEigen::PlusI,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BetaEigen::Plus => "+",
            BetaEigen::Minus => "-",
            BetaEigen::PlusI => "+i",
            BetaEigen::MinusI => "-i",
        }
    }
}

/// An irreducible representation.
///
/// `OneDim` is labelled by its α-weight and β-eigenvalue; `TwoDim` by
/// `min(r, a·r mod 2n)` over its pair of α-weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Irrep {
    OneDim { weight: u64, beta: BetaEigen },
    TwoDim { weight: u64 },
}

impl Irrep {
    pub const TRIVIAL: Irrep = Irrep::OneDim { weight: 0, beta: BetaEigen::Plus };

    pub fn dim(self) -> usize {
        match self {
            Irrep::OneDim { .. } => 1,
            Irrep::TwoDim { .. } => 2,
        }
    }

    pub fn weight(self) -> u64 {
        match self {
            Irrep::OneDim { weight, .. } | Irrep::TwoDim { weight } => weight,
        }
    }

    pub fn is_trivial(self) -> bool {
        self == Irrep::TRIVIAL
    }

    /// Name in the `ρ_j^±` / `V_r` style of the classical tables: `j = w/q`,
    /// `+` for eigenvalue `1` at even weight and `i^w` at odd weight.
    pub fn conventional_name(self, g: &GroupParams) -> String {
        match self {
            Irrep::OneDim { weight, beta } => {
                let plus = if weight % 2 == 0 { BetaEigen::Plus } else { BetaEigen::i_pow(weight) };
                let sign = if beta == plus { '+' } else { '-' };
                format!("rho_{}^{}", weight / g.q(), sign)
            }
            Irrep::TwoDim { weight } => format!("V_{weight}"),
        }
    }
}

/// `rho(14,-)`, `rho(7,+i)`, `V(4)`.
impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irrep::OneDim { weight, beta } => write!(f, "rho({weight},{})", beta.symbol()),
            Irrep::TwoDim { weight } => write!(f, "V({weight})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not an irrep label: {0:?}")]
pub struct IrrepParseError(pub String);

impl FromStr for Irrep {
    type Err = IrrepParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || IrrepParseError(s.to_owned());
        if let Some(body) = s.strip_prefix("V(").and_then(|b| b.strip_suffix(')')) {
            return Ok(Irrep::TwoDim { weight: body.parse().map_err(|_| err())? });
        }
        let body = s.strip_prefix("rho(").and_then(|b| b.strip_suffix(')')).ok_or_else(err)?;
        let (weight, sign) = body.split_once(',').ok_or_else(err)?;
        let beta = BetaEigen::ALL.into_iter().find(|b| b.symbol() == sign).ok_or_else(err)?;
        Ok(Irrep::OneDim { weight: weight.parse().map_err(|_| err())?, beta })
    }
}

/// How a semi-invariant polynomial sits inside its irrep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    /// A β-eigenvector spanning a 1-dim rep.
    Eigenvector,
    /// The basis vector of a 2-dim rep carrying the canonical weight.
    CanonicalWeight,
    /// The basis vector carrying the other weight `a·r`.
    MirrorWeight,
}

impl GroupParams {
    pub fn two_n(&self) -> u64 {
        self.two_n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn n(&self) -> u64 {
        self.two_n / 2
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> u64 {
        self.n() / self.q
    }

    pub fn order(&self) -> u64 {
        2 * self.two_n
    }

    pub fn is_small(&self) -> bool {
        self.small
    }

    pub fn is_abelian(&self) -> bool {
        self.a == 1
    }

    /// Rejects groups without dihedral G-graphs.
    pub fn require_dihedral_small(&self) -> Result<(), GroupError> {
        if !self.small {
            return Err(GroupError::NotSmall { two_n: self.two_n, a: self.a });
        }
        if self.is_abelian() {
            return Err(GroupError::AbelianCase { two_n: self.two_n });
        }
        Ok(())
    }

    pub fn weight(&self, m: Monomial) -> u64 {
        m.alpha_weight(self.two_n, self.a)
    }

    /// The involution `w ↦ a·w (mod 2n)` induced by conjugation with β.
    pub fn beta_weight(&self, w: u64) -> u64 {
        ((u128::from(self.a) * u128::from(w)) % u128::from(self.two_n)) as u64
    }

    pub fn is_fixed_weight(&self, w: u64) -> bool {
        self.beta_weight(w) == w % self.two_n
    }

    pub fn canonical_weight(&self, w: u64) -> u64 {
        let w = w % self.two_n;
        w.min(self.beta_weight(w))
    }

    /// The eigenvalues `λ` with `λ² = (−1)^w`, the scalar of `α^n` on weight `w`.
    pub fn beta_eigenvalues(&self, w: u64) -> [BetaEigen; 2] {
        if w.is_multiple_of(2) {
            [BetaEigen::Plus, BetaEigen::Minus]
        } else {
            [BetaEigen::PlusI, BetaEigen::MinusI]
        }
    }

    pub fn continued_fraction(&self) -> ContinuedFraction {
        lattice::hj_expand(self.two_n, self.a).expect("validated group")
    }

    pub fn boundary(&self) -> BoundarySequence {
        lattice::newton_boundary(self.two_n, self.a).expect("validated group")
    }

    /// The diagonal boundary point `(q, q)`.
    pub fn middle_point(&self) -> Result<NewtonPoint, GroupError> {
        self.require_dihedral_small()?;
        Ok(NewtonPoint::new(self.q, self.q))
    }

    /// The irrep of a semi-invariant polynomial, or `None` if `f` is zero or not semi-invariant.
    pub fn rep_of_polynomial(&self, f: &GPolynomial) -> Option<(Irrep, Component)> {
        let w = f.alpha_weight(self.two_n, self.a)?;
        if self.is_fixed_weight(w) {
            let ratio = f.act_beta().ratio_to(f)?;
            let beta = BetaEigen::from_value(&ratio)?;
            return Some((Irrep::OneDim { weight: w, beta }, Component::Eigenvector));
        }
        let canonical = self.canonical_weight(w);
        let role = if canonical == w { Component::CanonicalWeight } else { Component::MirrorWeight };
        Some((Irrep::TwoDim { weight: canonical }, role))
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BD_{}({})", self.two_n, self.a)
    }
}

/// Exponents `i ∈ [0, 2n)` with `α^i β` a quasireflection: `(a + 1)·i ≡ n (mod 2n)`.
pub fn quasireflections(g: &GroupParams) -> Vec<u64> {
    let modulus = u128::from(g.two_n);
    (0..g.two_n).filter(|&i| (u128::from(g.a + 1) * u128::from(i)) % modulus == u128::from(g.n())).collect()
}

/// All irreps: `4k` one-dimensional, `n − k` two-dimensional.
pub fn irreps(g: &GroupParams) -> Vec<Irrep> {
    let one_dim = (0..g.two_n).step_by(g.q as usize).flat_map(|w| g.beta_eigenvalues(w).map(|beta| Irrep::OneDim { weight: w, beta }));
    let two_dim = (0..g.two_n).filter(|&w| !g.is_fixed_weight(w) && g.canonical_weight(w) == w).map(|weight| Irrep::TwoDim { weight });
    one_dim.chain(two_dim).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(make_group(12, 7).unwrap().is_small());
        assert!(!make_group(12, 5).unwrap().is_small());
        assert_eq!(make_group(12, 6), Err(GroupError::NotCoprime { two_n: 12, a: 6, gcd: 6 }));
        assert_eq!(make_group(12, 11).map(|g| g.q()), Ok(6));
        assert!(matches!(make_group(12, 13), Err(GroupError::OutOfRange { .. })));
        assert!(matches!(make_group(9, 2), Err(GroupError::OutOfRange { .. })));
        assert!(matches!(make_group(10, 3), Err(GroupError::NotInvolutive { .. })));
        let d4 = make_group(4, 3).unwrap();
        assert_eq!((d4.q(), d4.k(), d4.is_small()), (2, 1, true));
    }

    #[test]
    fn irrep_labels_round_trip() {
        for label in ["rho(14,-)", "rho(7,+i)", "rho(0,+)", "V(4)"] {
            assert_eq!(label.parse::<Irrep>().unwrap().to_string(), label);
        }
        assert!("rho(1,?)".parse::<Irrep>().is_err());
    }
}
