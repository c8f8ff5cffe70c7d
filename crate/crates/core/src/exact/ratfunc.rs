use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ExactError, UniPoly, Var};

use crate::Rational;

/// Reduced quotient `num / den` of univariate polynomials.
///
/// The denominator is monic and coprime to the numerator, so two equal
/// functions have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, ExactError> {
        let var = num.unify(&den)?;
        if den.is_zero() {
            return Err(ExactError::DivisionByZero("rational function"));
        }
        if num.is_zero() {
            return Ok(Self::zero(var));
        }
        let g = num.gcd(&den)?;
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
        };
        let lc = den.leading_coeff().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num: num.with_var(var), den: den.with_var(var) })
    }

    pub fn zero(var: Var) -> Self {
        RationalFunction { num: UniPoly::zero(var), den: UniPoly::constant(var, Rational::one()) }
    }

    pub fn constant(var: Var, value: Rational) -> Self {
        RationalFunction {
            num: UniPoly::constant(var, value),
            den: UniPoly::constant(var, Rational::one()),
        }
    }

    pub fn from_poly(num: UniPoly) -> Self {
        let var = num.var();
        RationalFunction { num, den: UniPoly::constant(var, Rational::one()) }
    }

    /// The variable itself.
    pub fn variable(var: Var) -> Self {
        Self::from_poly(UniPoly::variable(var))
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn var(&self) -> Var {
        if self.num.is_constant() { self.den.var() } else { self.num.var() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_constant() { self.num.constant_value() } else { None }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.den == other.den {
            return Self::new(self.num.try_add(&other.num)?, self.den.clone());
        }
        let num = self.num.try_mul(&other.den)?.try_add(&other.num.try_mul(&self.den)?)?;
        Self::new(num, self.den.try_mul(&other.den)?)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        Self::new(self.num.try_mul(&other.num)?, self.den.try_mul(&other.den)?)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero("rational function"));
        }
        Self::new(self.num.try_mul(&other.den)?, self.den.try_mul(&other.num)?)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.var());
        }
        RationalFunction { num: self.num.scale(factor), den: self.den.clone() }
    }

    /// `ord_p(num) - ord_p(den)`; `None` stands for `+∞` (the zero function).
    pub fn valuation_at(&self, point: &Rational) -> Option<i64> {
        let top = self.num.valuation_at(point)?;
        let bottom = self.den.valuation_at(point).unwrap_or(0);
        Some(i64::from(top) - i64::from(bottom))
    }

    /// `max(0, -valuation)`.
    pub fn pole_order_at(&self, point: &Rational) -> u32 {
        match self.valuation_at(point) {
            Some(v) if v < 0 => (-v) as u32,
            _ => 0,
        }
    }

    /// Value of the reduced function at `point`.
    pub fn limit_at(&self, point: &Rational) -> Result<Rational, ExactError> {
        let den = self.den.eval(point);
        if den.is_zero() {
            return Err(ExactError::Pole { order: self.pole_order_at(point) });
        }
        Ok(self.num.eval(point) / den)
    }

    /// Substitutes `var -> a + b·var` (with the same tag).
    pub fn substitute_affine(&self, a: &Rational, b: &Rational) -> Self {
        let var = self.var();
        let arg = UniPoly::linear(var, a.clone(), b.clone());
        let compose = |p: &UniPoly| {
            let mut acc = UniPoly::zero(var);
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * &arg) + &UniPoly::constant(var, c.clone());
            }
            acc
        };
        Self::new(compose(&self.num), compose(&self.den)).expect("affine substitution keeps a nonzero denominator")
    }
}

impl From<UniPoly> for RationalFunction {
    fn from(num: UniPoly) -> Self {
        Self::from_poly(num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_add(rhs).expect("rational function addition")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_sub(rhs).expect("rational function subtraction")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_mul(rhs).expect("rational function multiplication")
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;

    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_div(rhs).expect("rational function division")
    }
}

impl crate::ring::Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero(Var::default())
    }

    fn one() -> Self {
        RationalFunction::constant(Var::default(), <Rational as One>::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
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
        RationalFunction::constant(Var::default(), value.clone())
    }

    fn scale(&self, factor: &Rational) -> Self {
        RationalFunction::scale(self, factor)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &UniPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if wrap(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if wrap(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use proptest::prelude::*;

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(Var::Z, coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(poly(num), poly(den)).unwrap()
    }

    #[test]
    fn arithmetic_reduces() {
        let inv_z = rf(&[1], &[0, 1]);
        assert_eq!(&inv_z + &inv_z, rf(&[2], &[0, 1]));
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), rf(&[1, 1], &[1]));
        assert_eq!(&inv_z * &rf(&[0, 1], &[1]), rf(&[1], &[1]));
        // the denominator is made monic
        let half = rf(&[1], &[0, 2]);
        assert_eq!(half.denom(), &poly(&[0, 1]));
        assert_eq!(half.numer().coeff(0), crate::ring::frac(1, 2));
    }

    #[test]
    fn division_by_zero_function() {
        let zero = RationalFunction::zero(Var::Z);
        assert_eq!(
            rf(&[1], &[1]).try_div(&zero),
            Err(ExactError::DivisionByZero("rational function"))
        );
        assert!(RationalFunction::new(poly(&[1]), poly(&[])).is_err());
    }

    #[test]
    fn valuations() {
        assert_eq!(rf(&[1], &[0, 1]).valuation_at(&rat(0)), Some(-1));
        assert_eq!(rf(&[1, 1], &[0, 0, 0, 1]).valuation_at(&rat(0)), Some(-3));
        assert_eq!(rf(&[0, 1, 1], &[1]).valuation_at(&rat(0)), Some(1));
        assert_eq!(RationalFunction::zero(Var::Z).valuation_at(&rat(0)), None);
    }

    #[test]
    fn limits() {
        assert_eq!(rf(&[0, 1, 1], &[0, 1]).limit_at(&rat(0)), Ok(rat(1)));
        assert_eq!(rf(&[5], &[1]).limit_at(&rat(7)), Ok(rat(5)));
        assert_eq!(rf(&[1], &[0, 1]).limit_at(&rat(0)), Err(ExactError::Pole { order: 1 }));
    }

    #[test]
    fn affine_substitution() {
        // 1/z at z -> 1 + 2z
        let f = rf(&[1], &[0, 1]).substitute_affine(&rat(1), &rat(2));
        assert_eq!(f, rf(&[1], &[1, 2]));
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-4i64..=4, 0..4).prop_map(|c| poly(&c))
    }

    fn small_rf() -> impl Strategy<Value = RationalFunction> {
        (small_poly(), small_poly().prop_filter("nonzero", |p| !p.is_zero()))
            .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn multiplication_commutes(f in small_rf(), g in small_rf()) {
            prop_assert_eq!(&f * &g, &g * &f);
        }

        #[test]
        fn additive_inverse(f in small_rf()) {
            prop_assert!((&f + &(-&f)).is_zero());
        }

        #[test]
        fn valuation_is_additive(f in small_rf(), g in small_rf(), p in -2i64..=2) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let p = rat(p);
            let sum = f.valuation_at(&p).unwrap() + g.valuation_at(&p).unwrap();
            prop_assert_eq!((&f * &g).valuation_at(&p), Some(sum));
        }

        #[test]
        fn limit_matches_substitution(num in proptest::collection::vec(-4i64..=4, 0..4),
                                      den in proptest::collection::vec(-4i64..=4, 1..4),
                                      p in -3i64..=3) {
            let (n, d) = (poly(&num), poly(&den));
            let p = rat(p);
            prop_assume!(!d.eval(&p).is_zero());
            let f = RationalFunction::new(n.clone(), d.clone()).unwrap();
            prop_assert_eq!(f.limit_at(&p).unwrap(), n.eval(&p) / d.eval(&p));
        }

        #[test]
        fn gcd_divides_both(a in small_poly(), b in small_poly()) {
            let g = a.gcd(&b).unwrap();
            prop_assume!(!g.is_zero());
            prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
            prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
        }
    }
}
