//! Exact Gaussian rationals `re + im·i` with `re, im ∈ Q`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// An element of `Q(i)`. Equality is exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        Self::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`.
    ///
    /// # Panics
    /// Panics if a denominator is zero.
    pub fn from_fractions(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(BigRational::new(re_num.into(), re_den.into()), BigRational::new(im_num.into(), im_den.into()))
    }

    pub fn real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_integers(1, 0)
    }

    pub fn i() -> Self {
        Self::from_integers(0, 1)
    }

    /// `i^k` for any integer exponent.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::from_integers(1, 0),
            1 => Self::from_integers(0, 1),
            2 => Self::from_integers(-1, 0),
            _ => Self::from_integers(0, -1),
        }
    }

    /// `(-1)^k`.
    pub fn sign_pow(k: i64) -> Self {
        Self::from_integers(if k.rem_euclid(2) == 0 { 1 } else { -1 }, 0)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True for the four units `±1, ±i`.
    pub fn is_unit_root(&self) -> bool {
        let abs_one = |v: &BigRational| v.abs().is_one();
        (abs_one(&self.re) && self.im.is_zero()) || (self.re.is_zero() && abs_one(&self.im))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::new(&self.re / &norm, -(&self.im / &norm)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// True when the value reads as a negated "positive" coefficient in
    /// canonical text: a negative real or a negative purely imaginary value.
    pub(crate) fn prints_negative(&self) -> bool {
        (self.im.is_zero() && self.re.is_negative()) || (self.re.is_zero() && self.im.is_negative())
    }

    pub(crate) fn is_pure(&self) -> bool {
        self.re.is_zero() || self.im.is_zero()
    }
}

fn fmt_rational(v: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if v.denom() == &BigInt::one() {
        write!(f, "{}", v.numer())
    } else {
        write!(f, "{}/{}", v.numer(), v.denom())
    }
}

/// Canonical text: `3/2`, `-i`, `2*i`, `(1 - 3/4*i)`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &BigRational| -> fmt::Result {
            if v.is_one() {
                write!(f, "i")
            } else if (-v).is_one() {
                write!(f, "-i")
            } else {
                fmt_rational(v, f)?;
                write!(f, "*i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rational(&self.re, f),
            (true, false) => imag(f, &self.im),
            (false, false) => {
                write!(f, "(")?;
                fmt_rational(&self.re, f)?;
                let magnitude = self.im.abs();
                write!(f, " {} ", if self.im.is_negative() { '-' } else { '+' })?;
                imag(f, &magnitude)?;
                write!(f, ")")
            }
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_integers(v, 0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_product_is_real() {
        let a = GaussianRational::from_integers(1, 1);
        let b = GaussianRational::from_integers(1, -1);
        assert_eq!(&a * &b, GaussianRational::from(2));
    }

    #[test]
    fn powers_of_i() {
        assert_eq!(GaussianRational::i().pow(4), GaussianRational::one());
        let minus_i = -GaussianRational::i();
        assert_eq!(minus_i.pow(7), GaussianRational::i());
        assert_eq!(GaussianRational::i_pow(-1), minus_i);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(GaussianRational::zero().inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::from_fractions(3, 2, 0, 1).to_string(), "3/2");
        assert_eq!(GaussianRational::from_integers(0, -1).to_string(), "-i");
        assert_eq!(GaussianRational::from_integers(0, 2).to_string(), "2*i");
        assert_eq!(GaussianRational::from_fractions(1, 1, -3, 4).to_string(), "(1 - 3/4*i)");
    }
}
