//! Independent exact verifier for G-cluster claims.
//!
//! The quotient `C[x, y]/I` is graded by α-weight. On a β-fixed weight `w`
//! the β-matrix on normal forms is diagonalised by kernel ranks of `M − λ`;
//! a 2-cycle `{r, a·r}` of weights contributes `dim Q_r` copies of `V_r`.

mod groebner;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::linalg;
use crate::algebra::{GPolynomial, GaussianRational, Monomial};
use crate::group::{self, GroupParams, Irrep};

pub use groebner::{buchberger, ideals_equal, GroebnerBasis, QuotientDim};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("generator {0} mixes α-weights")]
    NotAlphaHomogeneous(String),
    #[error("the quotient is infinite-dimensional")]
    NonFiniteQuotient,
    #[error("the ideal is not β-stable: β({0}) is not in the ideal")]
    NotBetaStable(String),
    #[error("the two α-weight pieces {0} and {1} of a 2-dim rep have different sizes")]
    UnbalancedPair(u64, u64),
}

pub fn quotient_dimension(gens: &[GPolynomial]) -> QuotientDim {
    buchberger(gens).quotient_dimension()
}

/// Multiplicities of irreps in `C[x, y]/I`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RegularDecomposition {
    pub multiplicity: BTreeMap<Irrep, usize>,
    pub total_dim: usize,
}

impl RegularDecomposition {
    pub fn of(&self, rho: Irrep) -> usize {
        self.multiplicity.get(&rho).copied().unwrap_or(0)
    }

    /// Each irrep `ρ` appears exactly `dim ρ` times and nothing else appears.
    pub fn is_regular(&self, g: &GroupParams) -> bool {
        let all = group::irreps(g);
        all.iter().all(|rho| self.of(*rho) == rho.dim())
            && self.multiplicity.iter().all(|(rho, &m)| m == 0 || all.contains(rho))
            && self.total_dim == g.two_n() as usize * 2
    }
}

/// The β-action on the weight-`w` piece of the quotient, `w` β-fixed.
///
/// Column `k` holds the normal form of `β(basis[k])` in the `basis` coordinates.
pub fn beta_matrix(gb: &GroebnerBasis, basis: &[Monomial]) -> linalg::Matrix {
    let index: BTreeMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = vec![vec![GaussianRational::zero(); basis.len()]; basis.len()];
    for (col, m) in basis.iter().enumerate() {
        let image = gb.normal_form(&GPolynomial::from(*m).act_beta());
        for (term, c) in image.terms() {
            let row = index[&term];
            rows[row][col] = c.clone();
        }
    }
    rows
}

fn check_inputs(g: &GroupParams, gens: &[GPolynomial]) -> Result<GroebnerBasis, OracleError> {
    if let Some(bad) = gens.iter().find(|f| !f.is_zero() && f.alpha_weight(g.two_n(), g.a()).is_none()) {
        return Err(OracleError::NotAlphaHomogeneous(bad.to_string()));
    }
    let gb = buchberger(gens);
    if let Some(bad) = gb.generators().iter().find(|f| !gb.contains(&f.act_beta())) {
        return Err(OracleError::NotBetaStable(bad.to_string()));
    }
    Ok(gb)
}

/// Decomposes the quotient by an α-homogeneous, β-stable ideal into irreps.
pub fn decompose_regular(g: &GroupParams, gens: &[GPolynomial]) -> Result<RegularDecomposition, OracleError> {
    let gb = check_inputs(g, gens)?;
    decompose_with_basis(g, &gb)
}

/// As [`decompose_regular`] for an already computed Gröbner basis.
pub fn decompose_with_basis(g: &GroupParams, gb: &GroebnerBasis) -> Result<RegularDecomposition, OracleError> {
    let standard = gb.standard_monomials().ok_or(OracleError::NonFiniteQuotient)?;
    let mut by_weight: BTreeMap<u64, Vec<Monomial>> = BTreeMap::new();
    for m in &standard {
        by_weight.entry(g.weight(*m)).or_default().push(*m);
    }
    let mut multiplicity = BTreeMap::new();
    for (&w, basis) in &by_weight {
        if g.is_fixed_weight(w) {
            let m = beta_matrix(gb, basis);
            for beta in g.beta_eigenvalues(w) {
                let lambda = beta.value();
                let mut shifted = m.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] -= &lambda;
                }
                let count = basis.len() - linalg::rank(&shifted);
                if count > 0 {
                    multiplicity.insert(Irrep::OneDim { weight: w, beta }, count);
                }
            }
        } else if g.canonical_weight(w) == w {
            let partner = g.beta_weight(w);
            let partner_dim = by_weight.get(&partner).map_or(0, Vec::len);
            if partner_dim != basis.len() {
                return Err(OracleError::UnbalancedPair(w, partner));
            }
            multiplicity.insert(Irrep::TwoDim { weight: w }, basis.len());
        } else if !by_weight.contains_key(&g.canonical_weight(w)) {
            return Err(OracleError::UnbalancedPair(g.canonical_weight(w), w));
        }
    }
    Ok(RegularDecomposition { multiplicity, total_dim: standard.len() })
}

/// Outcome of a G-cluster check, with the reason on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterReport {
    pub quotient_dim: QuotientDim,
    pub decomposition: Option<RegularDecomposition>,
    pub failure: Option<String>,
}

impl ClusterReport {
    pub fn is_g_cluster(&self) -> bool {
        self.failure.is_none()
    }
}

/// `C[x, y]/I` is the regular representation of `g`.
pub fn is_g_cluster(g: &GroupParams, gens: &[GPolynomial]) -> ClusterReport {
    let gb = match check_inputs(g, gens) {
        Ok(gb) => gb,
        Err(e) => {
            let quotient_dim = quotient_dimension(gens);
            return ClusterReport { quotient_dim, decomposition: None, failure: Some(e.to_string()) };
        }
    };
    cluster_report(g, &gb)
}

/// As [`is_g_cluster`] for an already computed Gröbner basis of a β-stable,
/// α-homogeneous ideal.
pub fn cluster_report(g: &GroupParams, gb: &GroebnerBasis) -> ClusterReport {
    let quotient_dim = gb.quotient_dimension();
    let order = g.order() as usize;
    if quotient_dim != QuotientDim::Finite(order) {
        let failure = Some(format!("quotient dimension {quotient_dim:?} ≠ {order}"));
        return ClusterReport { quotient_dim, decomposition: None, failure };
    }
    match decompose_with_basis(g, gb) {
        Ok(d) => {
            let failure = (!d.is_regular(g)).then(|| "not the regular representation".to_owned());
            ClusterReport { quotient_dim, decomposition: Some(d), failure }
        }
        Err(e) => ClusterReport { quotient_dim, decomposition: None, failure: Some(e.to_string()) },
    }
}

/// The quotient by an α-homogeneous ideal is the regular representation of
/// the cyclic group `(1/k)(1, a)`: every weight occurs exactly once.
pub fn is_cyclic_cluster(modulus: u64, a: u64, gens: &[GPolynomial]) -> bool {
    if gens.iter().any(|f| f.alpha_weight(modulus, a).is_none()) {
        return false;
    }
    let Some(standard) = buchberger(gens).standard_monomials() else {
        return false;
    };
    let mut seen = vec![false; modulus as usize];
    standard.len() == modulus as usize && standard.iter().all(|m| !std::mem::replace(&mut seen[m.alpha_weight(modulus, a) as usize], true))
}
