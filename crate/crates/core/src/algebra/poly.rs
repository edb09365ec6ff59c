use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, GaussianRational, Monomial};

/// A polynomial in `x, y` with Gaussian-rational coefficients.
///
/// Invariant: no stored coefficient is zero, so equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GPolynomial {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl GPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: GaussianRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// The monomial `x^i y^j` with coefficient 1.
    pub fn monomial(i: u32, j: u32) -> Self {
        Self::term(GaussianRational::one(), Monomial::new(i, j))
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1)
    }

    /// `lhs + c·rhs` for two monomials, the shape of most generators here.
    pub fn binomial(lhs: Monomial, c: GaussianRational, rhs: Monomial) -> Self {
        let mut p = Self::term(GaussianRational::one(), lhs);
        p.add_term(rhs, &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, GaussianRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Option<&GaussianRational> {
        self.terms.get(&m)
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &GaussianRational)> + '_ {
        self.terms.iter().rev().map(|(m, c)| (*m, c))
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().rev().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_term(&self) -> Option<(Monomial, &GaussianRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Monomial, GaussianRational)> {
        self.terms.pop_last()
    }

    /// `self -= c·m·other`, the reduction step.
    pub fn sub_scaled_shifted(&mut self, c: &GaussianRational, m: Monomial, other: &GPolynomial) {
        for (om, oc) in &other.terms {
            self.add_term(*om * m, &-(c * oc));
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn shift(&self, m: Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (*k * m, v.clone())).collect() }
    }

    /// Scales so the leading coefficient is 1. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().expect("stored coefficients are nonzero")),
            None => Self::zero(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `f(x, y) ↦ f(y, −x)`, so `x^i y^j ↦ (−1)^j x^j y^i`.
    pub fn act_beta(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let sign = GaussianRational::sign_pow(i64::from(m.y));
            out.add_term(m.mirror(), &(&sign * c));
        }
        out
    }

    /// `f(x, y) ↦ f(y, x)`.
    pub fn mirror(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.mirror(), c.clone())).collect() }
    }

    /// Distinct α-weights of the terms modulo `modulus`.
    pub fn alpha_weights(&self, modulus: u64, a: u64) -> BTreeSet<u64> {
        self.terms.keys().map(|m| m.alpha_weight(modulus, a)).collect()
    }

    /// The common α-weight if every term shares one.
    pub fn alpha_weight(&self, modulus: u64, a: u64) -> Option<u64> {
        let weights = self.alpha_weights(modulus, a);
        match weights.len() {
            1 => weights.into_iter().next(),
            _ => None,
        }
    }

    /// `Some(c)` with `self = c·other` when the two are proportional and nonzero.
    pub fn ratio_to(&self, other: &GPolynomial) -> Option<GaussianRational> {
        let (m, c) = self.leading_term()?;
        let (om, oc) = other.leading_term()?;
        if m != om || self.len() != other.len() {
            return None;
        }
        let ratio = c.checked_div(oc).ok()?;
        (other.scale(&ratio) == *self).then_some(ratio)
    }

    /// Exact quotient `self / divisor`, or `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &GPolynomial) -> Result<Option<GPolynomial>, AlgebraError> {
        let (dm, dc) = divisor.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let dc_inv = dc.inv()?;
        let mut rest = self.clone();
        let mut quotient = GPolynomial::zero();
        while let Some((m, c)) = rest.leading_term() {
            let Some(shift) = m.checked_div(dm) else {
                return Ok(None);
            };
            let factor = c * &dc_inv;
            quotient.add_term(shift, &factor);
            rest.sub_scaled_shifted(&factor, shift, divisor);
        }
        Ok(Some(quotient))
    }
}

impl From<Monomial> for GPolynomial {
    fn from(m: Monomial) -> Self {
        Self::term(GaussianRational::one(), m)
    }
}

impl From<GaussianRational> for GPolynomial {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl Add<&GPolynomial> for &GPolynomial {
    type Output = GPolynomial;
    fn add(self, rhs: &GPolynomial) -> GPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&GPolynomial> for &GPolynomial {
    type Output = GPolynomial;
    fn sub(self, rhs: &GPolynomial) -> GPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul<&GPolynomial> for &GPolynomial {
    type Output = GPolynomial;
    fn mul(self, rhs: &GPolynomial) -> GPolynomial {
        let mut out = GPolynomial::zero();
        for (m, c) in &self.terms {
            for (om, oc) in &rhs.terms {
                out.add_term(*m * *om, &(c * oc));
            }
        }
        out
    }
}

impl Neg for &GPolynomial {
    type Output = GPolynomial;
    fn neg(self) -> GPolynomial {
        self.scale(&GaussianRational::from(-1))
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GPolynomial> for GPolynomial {
            type Output = GPolynomial;
            fn $method(self, rhs: GPolynomial) -> GPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GPolynomial> for GPolynomial {
            type Output = GPolynomial;
            fn $method(self, rhs: &GPolynomial) -> GPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<GPolynomial> for &GPolynomial {
            type Output = GPolynomial;
            fn $method(self, rhs: GPolynomial) -> GPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for GPolynomial {
    type Output = GPolynomial;
    fn neg(self) -> GPolynomial {
        -&self
    }
}

/// Canonical text: terms in descending graded-lex order, e.g. `x^7 + i*y^7`.
impl fmt::Display for GPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.prints_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                debug_assert!(magnitude.is_pure() || magnitude.to_string().starts_with('('));
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_integers(re, im)
    }

    #[test]
    fn beta_examples() {
        let sum = GPolynomial::monomial(2, 0) + GPolynomial::monomial(0, 2);
        assert_eq!(sum.act_beta(), sum);
        let xy = GPolynomial::monomial(1, 1);
        assert_eq!(xy.act_beta(), -&xy);
        assert_eq!(GPolynomial::x().act_beta(), GPolynomial::y());
        assert_eq!(GPolynomial::x().act_beta().act_beta(), -GPolynomial::x());
    }

    #[test]
    fn canonical_text() {
        let p = GPolynomial::binomial(Monomial::new(7, 0), gi(0, 1), Monomial::new(0, 7));
        assert_eq!(p.to_string(), "x^7 + i*y^7");
        let q = GPolynomial::binomial(Monomial::new(29, 1), gi(-1, 0), Monomial::new(1, 29));
        assert_eq!(q.to_string(), "x^29*y - x*y^29");
        let r = GPolynomial::from_terms([(Monomial::ONE, gi(-2, 0)), (Monomial::new(0, 1), gi(1, 1))]);
        assert_eq!(r.to_string(), "(1 + i)*y - 2");
        assert_eq!(GPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let xy = GPolynomial::monomial(1, 1);
        let p = GPolynomial::binomial(Monomial::new(29, 1), gi(-1, 0), Monomial::new(1, 29));
        let q = p.exact_div(&xy).unwrap().unwrap();
        assert_eq!(&q * &xy, p);
        assert_eq!(xy.exact_div(&p).unwrap(), None);
    }
}
