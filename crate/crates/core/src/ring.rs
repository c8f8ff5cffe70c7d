//! Coefficient rings.
//!
//! Every container in this crate (group algebra, tensor matrices, parameter
//! polynomials) is generic over [`Ring`]. The trait does not assume
//! commutativity: `U(gl_N)` is a valid coefficient ring for matrices, and
//! products always keep the left operand on the left.
//!
//! All rings here are algebras over the rationals, so [`Ring::from_rational`]
//! is part of the contract.

use core::fmt::Debug;

use num_traits::{One, Zero};

use crate::Rational;

pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_rational(value: &Rational) -> Self;

    fn from_integer(value: i64) -> Self {
        Self::from_rational(&Rational::from_integer(value.into()))
    }

    fn scale(&self, factor: &Rational) -> Self {
        Self::from_rational(factor).mul_ref(self)
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn scale(&self, factor: &Rational) -> Self {
        self * factor
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = crate::Integer::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// Shorthand for an integer-valued rational.
pub fn rat(value: i64) -> Rational {
    Rational::from_integer(value.into())
}

/// Shorthand for `num / den`. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
