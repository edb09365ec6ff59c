//! A-graphs and A-cluster ideals of the cyclic group `A = (1/k)(1, a)`.
//!
//! The chart of consecutive boundary points `(r, s), (u, v)` is cut out by
//! `x^s − ξ·y^r`, `y^u − η·x^v`, `x^{s−v} y^{u−r} − ξη`; at `ξ = η = 0` its
//! standard monomials form the staircase.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::algebra::{GPolynomial, GaussianRational, Monomial};
use crate::lattice::{BoundarySequence, NewtonPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AGraphError {
    #[error("{0} and {1} are not consecutive boundary points")]
    NonConsecutivePoints(NewtonPoint, NewtonPoint),
}

/// The staircase of a cyclic chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AGraph {
    pub first: NewtonPoint,
    pub second: NewtonPoint,
    pub staircase: BTreeSet<Monomial>,
}

fn exp(v: u64) -> u32 {
    u32::try_from(v).expect("exponent fits in u32")
}

/// Monomials outside `(x^s, y^u, x^{s−v} y^{u−r})`.
pub fn staircase(first: NewtonPoint, second: NewtonPoint) -> BTreeSet<Monomial> {
    let (r, s, u, v) = (exp(first.x), exp(first.y), exp(second.x), exp(second.y));
    let corner = Monomial::new(s - v, u - r);
    (0..s).flat_map(|i| (0..u).map(move |j| Monomial::new(i, j))).filter(|m| !corner.divides(*m)).collect()
}

pub fn a_graph(boundary: &BoundarySequence, first: NewtonPoint, second: NewtonPoint) -> Result<AGraph, AGraphError> {
    if !boundary.transitions().any(|pair| pair == (first, second)) {
        return Err(AGraphError::NonConsecutivePoints(first, second));
    }
    Ok(AGraph { first, second, staircase: staircase(first, second) })
}

/// Generators of the chart ideal at `(ξ, η)`; end charts drop the redundant
/// third generator.
pub fn a_cluster_ideal(first: NewtonPoint, second: NewtonPoint, xi: &GaussianRational, eta: &GaussianRational) -> Vec<GPolynomial> {
    let (r, s, u, v) = (exp(first.x), exp(first.y), exp(second.x), exp(second.y));
    let mut gens = vec![
        GPolynomial::binomial(Monomial::new(s, 0), -xi, Monomial::new(0, r)),
        GPolynomial::binomial(Monomial::new(0, u), -eta, Monomial::new(v, 0)),
    ];
    if r != 0 && v != 0 {
        gens.push(GPolynomial::binomial(Monomial::new(s - v, u - r), -(xi * eta), Monomial::ONE));
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::newton_boundary;

    #[test]
    fn end_chart_has_two_generators() {
        let zero = GaussianRational::zero();
        let gens = a_cluster_ideal(NewtonPoint::new(0, 12), NewtonPoint::new(1, 7), &zero, &zero);
        assert_eq!(gens.len(), 2);
    }

    #[test]
    fn rejects_non_consecutive() {
        let b = newton_boundary(12, 7).unwrap();
        let err = a_graph(&b, NewtonPoint::new(0, 12), NewtonPoint::new(2, 2));
        assert!(matches!(err, Err(AGraphError::NonConsecutivePoints(..))));
    }
}
