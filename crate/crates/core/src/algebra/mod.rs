//! Exact arithmetic: Gaussian rationals, bivariate monomials and polynomials
//! under graded-lex order, and the generator actions on polynomials.

mod gaussian;
pub mod linalg;
mod monomial;
mod parse;
mod poly;

pub use gaussian::GaussianRational;
pub use monomial::Monomial;
pub use poly::GPolynomial;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse polynomial at byte {position}: {message}")]
    Parse { position: usize, message: String },
}
