use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Var};

use crate::Rational;

/// Univariate polynomial over the rationals, coefficients lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.var == other.var || self.coeffs.len() <= 1)
    }
}

impl Eq for UniPoly {}

impl UniPoly {
    pub fn zero(var: Var) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, value: Rational) -> Self {
        Self::from_coeffs(var, vec![value])
    }

    /// The polynomial `var` itself.
    pub fn variable(var: Var) -> Self {
        Self::from_coeffs(var, vec![Rational::zero(), Rational::one()])
    }

    /// `constant + slope·var`.
    pub fn linear(var: Var, constant: Rational, slope: Rational) -> Self {
        Self::from_coeffs(var, vec![constant, slope])
    }

    pub fn monomial(var: Var, coeff: Rational, degree: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = coeff;
        UniPoly { var, coeffs }
    }

    pub fn from_coeffs(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same polynomial, reinterpreted in another variable.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Tag of the result of combining `self` with `other`.
    pub(crate) fn unify(&self, other: &Self) -> Result<Var, ExactError> {
        if self.is_constant() {
            Ok(other.var)
        } else if other.is_constant() || self.var == other.var {
            Ok(self.var)
        } else {
            Err(ExactError::VariableMismatch { left: self.var, right: other.var })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        let var = self.unify(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            let value = match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            coeffs.push(value);
        }
        Ok(Self::from_coeffs(var, coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let var = self.unify(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(var));
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self::from_coeffs(var, coeffs))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.var);
        }
        UniPoly { var: self.var, coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ExactError> {
        let var = self.unify(divisor)?;
        let Some(divisor_degree) = divisor.degree() else {
            return Err(ExactError::DivisionByZero("polynomial"));
        };
        let lc_inv = divisor.coeffs[divisor_degree].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= divisor_degree {
            return Ok((Self::zero(var), Self::from_coeffs(var, rem)));
        }
        let mut quot = vec![Rational::zero(); rem.len() - divisor_degree];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + divisor_degree] * &lc_inv;
            if top.is_zero() {
                continue;
            }
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &top * d;
            }
            quot[shift] = top;
        }
        rem.truncate(divisor_degree);
        Ok((Self::from_coeffs(var, quot), Self::from_coeffs(var, rem)))
    }

    pub fn eval(&self, point: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point + c;
        }
        acc
    }

    /// Multiplicity of `point` as a root; `None` for the zero polynomial.
    pub fn valuation_at(&self, point: &Rational) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        if point.is_zero() {
            let low = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
            return Some(low as u32);
        }
        let mut order = 0;
        let mut current = self.coeffs.clone();
        loop {
            // synthetic division by (var - point)
            let mut quot = vec![Rational::zero(); current.len() - 1];
            let mut carry = Rational::zero();
            for k in (0..current.len()).rev() {
                let value = &current[k] + &carry * point;
                if k == 0 {
                    if !value.is_zero() {
                        return Some(order);
                    }
                } else {
                    quot[k - 1] = value.clone();
                }
                carry = value;
            }
            order += 1;
            current = quot;
        }
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self, ExactError> {
        let var = self.unify(other)?;
        if self.is_zero() {
            return Ok(other.monic().with_var(var));
        }
        if other.is_zero() {
            return Ok(self.monic().with_var(var));
        }
        if self.is_constant() || other.is_constant() {
            return Ok(Self::constant(var, Rational::one()));
        }
        let (mut a, mut b) = (primitive_part(&self.coeffs), primitive_part(&other.coeffs));
        if a.len() < b.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_remainder(&a, &b);
            a = b;
            b = if r.is_empty() { r } else { normalize_primitive(r) };
        }
        let coeffs = a.into_iter().map(Rational::from_integer).collect();
        Ok(Self::from_coeffs(var, coeffs).monic())
    }

    /// Polynomial with the given roots, `∏ (var - r)`.
    pub fn from_roots<'a>(var: Var, roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        let mut acc = Self::constant(var, Rational::one());
        for r in roots {
            acc = &acc * &Self::linear(var, -r, Rational::one());
        }
        acc
    }
}

fn primitive_part(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    normalize_primitive(ints)
}

/// Removes the content and makes the leading coefficient positive.
fn normalize_primitive(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    let content = content * sign;
    ints.iter().map(|c| c / &content).collect()
}

fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] -= &lr * bk;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        if r.len() > 8 {
            r = shrink_content(r);
        }
    }
    r
}

fn shrink_content(ints: Vec<BigInt>) -> Vec<BigInt> {
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.iter().map(|c| c / &content).collect()
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        -&self
    }
}

// Operators panic on mixed variables; use the `try_*` methods to recover.
impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl crate::ring::Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::zero(Var::default())
    }

    fn one() -> Self {
        UniPoly::constant(Var::default(), <Rational as One>::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
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
        UniPoly::constant(Var::default(), value.clone())
    }

    fn scale(&self, factor: &Rational) -> Self {
        UniPoly::scale(self, factor)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}*")?;
                    }
                    f.write_str(self.var.name())?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{frac, rat};

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(Var::Z, coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(poly(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[]).degree(), None);
    }

    #[test]
    fn division_with_remainder() {
        // z^3 - 1 = (z - 1)(z^2 + z + 1)
        let (q, r) = poly(&[-1, 0, 0, 1]).div_rem(&poly(&[-1, 1])).unwrap();
        assert_eq!(q, poly(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = poly(&[1, 0, 1]).div_rem(&poly(&[0, 2])).unwrap();
        assert_eq!(q, UniPoly::from_coeffs(Var::Z, vec![rat(0), frac(1, 2)]));
        assert_eq!(r, poly(&[1]));
        assert_eq!(poly(&[1]).div_rem(&poly(&[])), Err(ExactError::DivisionByZero("polynomial")));
    }

    #[test]
    fn gcd_is_monic() {
        // (z - 1)(z + 2) and 3(z - 1)(z - 5)
        let a = poly(&[-2, 1, 1]);
        let b = poly(&[15, -18, 3]);
        assert_eq!(a.gcd(&b).unwrap(), poly(&[-1, 1]));
        assert_eq!(a.gcd(&poly(&[7])).unwrap(), poly(&[1]));
        assert_eq!(poly(&[]).gcd(&poly(&[0, 4])).unwrap(), poly(&[0, 1]));
    }

    #[test]
    fn valuation_counts_root_multiplicity() {
        let p = UniPoly::from_roots(Var::Z, &[rat(2), rat(2), rat(-1)]);
        assert_eq!(p.valuation_at(&rat(2)), Some(2));
        assert_eq!(p.valuation_at(&rat(-1)), Some(1));
        assert_eq!(p.valuation_at(&rat(0)), Some(0));
        assert_eq!(poly(&[0, 0, 3]).valuation_at(&rat(0)), Some(2));
        assert_eq!(poly(&[]).valuation_at(&rat(0)), None);
    }

    #[test]
    fn mixed_variables_are_rejected() {
        let z = UniPoly::variable(Var::Z);
        let u = UniPoly::variable(Var::U);
        assert_eq!(
            z.try_add(&u),
            Err(ExactError::VariableMismatch { left: Var::Z, right: Var::U })
        );
        // constants adopt the other operand's variable
        let sum = poly(&[3]).with_var(Var::U).try_add(&z).unwrap();
        assert_eq!(sum.var(), Var::Z);
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", poly(&[1, -1, 0, 2])), "2*z^3 - z + 1");
        assert_eq!(alloc::format!("{}", poly(&[])), "0");
    }
}
