//! `U(gl_N)` in PBW normal form.
//!
//! A monomial is a product of generators `E_ij` sorted by `(i, j)`. Products
//! are rewritten into this form with `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Default bound on the degree of any monomial produced by a product.
pub const DEFAULT_DEGREE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum UglError {
    #[error("product would reach degree {degree}, above the cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("elements of gl_{left} and gl_{right} cannot be combined")]
    RankMismatch { left: usize, right: usize },
    #[error("generator E_{i}{j} out of range for gl_{n}")]
    OutOfRange { i: usize, j: usize, n: usize },
}

/// The generator `E_ij`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub fn new(i: usize, j: usize) -> Self {
        Gen { i: i as u8, j: j as u8 }
    }
}

/// Sorted product of generators (repetitions allowed).
pub type Monomial = Vec<Gen>;

/// Element of `U(gl_N)`. Scalars carry rank 0 and combine with any rank.
#[derive(Clone)]
pub struct UglElement {
    rank: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl UglElement {
    pub fn zero_of(rank: usize) -> Self {
        UglElement { rank, terms: BTreeMap::new() }
    }

    pub fn scalar(value: Rational) -> Self {
        let mut out = Self::zero_of(0);
        out.add_term(Vec::new(), value);
        out
    }

    /// The generator `E_ij` of `gl_n`.
    pub fn generator(n: usize, i: usize, j: usize) -> Result<Self, UglError> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(UglError::OutOfRange { i, j, n });
        }
        let mut out = Self::zero_of(n);
        out.add_term(vec![Gen::new(i, j)], Rational::one());
        Ok(out)
    }

    /// Builds an element from arbitrary (unsorted) generator words.
    pub fn from_words(n: usize, words: impl IntoIterator<Item = (Vec<(usize, usize)>, Rational)>) -> Result<Self, UglError> {
        let mut out = Self::zero_of(n);
        for (word, coeff) in words {
            let mut term = Self::scalar(coeff);
            term.rank = n;
            for (i, j) in word {
                term = term.try_mul(&Self::generator(n, i, j)?)?;
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn with_rank(mut self, rank: usize) -> Self {
        self.rank = rank;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(Vec::is_empty)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    fn joint_rank(&self, other: &Self) -> Result<usize, UglError> {
        match (self.rank, other.rank) {
            (0, r) | (r, 0) => Ok(r),
            (a, b) if a == b => Ok(a),
            (_, b) if self.is_scalar() => Ok(b),
            (a, _) if other.is_scalar() => Ok(a),
            (a, b) => Err(UglError::RankMismatch { left: a, right: b }),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, UglError> {
        let rank = self.joint_rank(other)?;
        let mut out = self.clone();
        out.rank = rank;
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        UglElement { rank: self.rank, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, UglError> {
        self.try_add(&other.neg())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero_of(self.rank);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * factor);
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, UglError> {
        self.try_mul_with_cap(other, DEFAULT_DEGREE_CAP)
    }

    /// Product in PBW normal form, rejecting monomials above `cap`.
    pub fn try_mul_with_cap(&self, other: &Self, cap: usize) -> Result<Self, UglError> {
        let rank = self.joint_rank(other)?;
        let degree = self.degree() + other.degree();
        if !self.is_zero() && !other.is_zero() && degree > cap {
            return Err(UglError::DegreeCap { degree, cap });
        }
        let mut out = Self::zero_of(rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let coeff = ca * cb;
                for (m, c) in mul_monomials(ma, mb) {
                    out.add_term(m, c * &coeff);
                }
            }
        }
        Ok(out)
    }

    /// `[self, other] = self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self, UglError> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Whether the element commutes with every `E_ij`, `i, j ≤ n`.
    pub fn is_central_in(&self, n: usize) -> Result<bool, UglError> {
        for i in 1..=n {
            for j in 1..=n {
                if !self.commutator(&Self::generator(n, i, j)?)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// [`Self::is_central_in`] for the element's own rank.
    pub fn is_central(&self) -> Result<bool, UglError> {
        self.is_central_in(self.rank)
    }

    /// Exponent form `[(i, j, e)]` of a monomial, sorted by `(i, j)`.
    pub fn exponents(mono: &Monomial) -> Vec<(usize, usize, u32)> {
        let mut out: Vec<(usize, usize, u32)> = Vec::new();
        for g in mono {
            match out.last_mut() {
                Some(last) if last.0 == g.i as usize && last.1 == g.j as usize => last.2 += 1,
                _ => out.push((g.i as usize, g.j as usize, 1)),
            }
        }
        out
    }

    /// Builds a monomial from exponent form; the triples need not be sorted.
    pub fn monomial_from_exponents(triples: &[(usize, usize, u32)]) -> Monomial {
        let mut mono: Monomial = triples.iter().flat_map(|&(i, j, e)| (0..e).map(move |_| Gen::new(i, j))).collect();
        mono.sort_unstable();
        mono
    }

    pub fn from_monomials(rank: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut out = Self::zero_of(rank);
        for (m, c) in terms {
            let mut m = m;
            m.sort_unstable();
            out.add_term(m, c);
        }
        out
    }
}

/// `[E_ij, E_kl]` as a list of `(generator, ±1)`.
fn bracket(x: Gen, y: Gen) -> Vec<(Gen, i32)> {
    let mut out = Vec::with_capacity(2);
    if x.j == y.i {
        out.push((Gen { i: x.i, j: y.j }, 1));
    }
    if y.j == x.i {
        out.push((Gen { i: y.i, j: x.j }, -1));
    }
    // [E_ii, E_ii] = 0
    if out.len() == 2 && out[0].0 == out[1].0 {
        out.clear();
    }
    out
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> BTreeMap<Monomial, Rational> {
    let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
    acc.insert(a.clone(), Rational::one());
    for &g in b {
        let mut next: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in acc {
            for (m2, c2) in mul_mono_gen(&m, g) {
                let e = next.entry(m2).or_insert_with(Rational::zero);
                *e += &c * c2;
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc
}

/// `m · g` in normal form, with integer coefficients.
fn mul_mono_gen(m: &Monomial, g: Gen) -> Vec<(Monomial, Rational)> {
    match m.last() {
        None => vec![(vec![g], Rational::one())],
        Some(&x) if x <= g => {
            let mut out = m.clone();
            out.push(g);
            vec![(out, Rational::one())]
        }
        Some(&x) => {
            // m'·x·g = (m'·g)·x + m'·[x, g]
            let prefix = &m[..m.len() - 1];
            let prefix: Monomial = prefix.to_vec();
            let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
            for (m1, c1) in mul_mono_gen(&prefix, g) {
                for (m2, c2) in mul_mono_gen(&m1, x) {
                    *out.entry(m2).or_insert_with(Rational::zero) += &c1 * c2;
                }
            }
            for (h, sign) in bracket(x, g) {
                for (m2, c2) in mul_mono_gen(&prefix, h) {
                    *out.entry(m2).or_insert_with(Rational::zero) += c2 * Rational::from_integer(sign.into());
                }
            }
            out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        }
    }
}

impl crate::ring::Ring for UglElement {
    fn zero() -> Self {
        UglElement::zero_of(0)
    }

    fn one() -> Self {
        UglElement::scalar(<Rational as One>::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("U(gl_N) addition")
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("U(gl_N) subtraction")
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("U(gl_N) multiplication")
    }

    fn neg_ref(&self) -> Self {
        self.neg()
    }

    fn from_rational(value: &Rational) -> Self {
        UglElement::scalar(value.clone())
    }

    fn scale(&self, factor: &Rational) -> Self {
        UglElement::scale(self, factor)
    }
}

impl fmt::Display for UglElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mono, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = coeff.abs();
            if mono.is_empty() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            for (idx, (i, j, e)) in Self::exponents(mono).into_iter().enumerate() {
                if idx > 0 {
                    f.write_str("*")?;
                }
                write!(f, "E{i}{j}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Equality of elements; the rank tag is not compared.
impl PartialEq for UglElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for UglElement {}

impl fmt::Debug for UglElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UglElement[gl_{}]({self})", self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Ring};
    use proptest::prelude::*;

    fn e(n: usize, i: usize, j: usize) -> UglElement {
        UglElement::generator(n, i, j).unwrap()
    }

    fn mul(a: &UglElement, b: &UglElement) -> UglElement {
        a.try_mul(b).unwrap()
    }

    #[test]
    fn reordering_applies_one_commutator() {
        let sorted = mul(&e(2, 1, 2), &e(2, 2, 1));
        assert_eq!(sorted.len(), 1);
        let swapped = mul(&e(2, 2, 1), &e(2, 1, 2));
        let expected = sorted.try_sub(&e(2, 1, 1)).unwrap().try_add(&e(2, 2, 2)).unwrap();
        assert_eq!(swapped, expected);
        assert_eq!(alloc::format!("{swapped}"), "-E11 + E12*E21 + E22");
    }

    #[test]
    fn unit_and_weights() {
        let x = e(3, 2, 3);
        assert_eq!(mul(&UglElement::one(), &x), x);
        assert_eq!(e(2, 1, 1).commutator(&e(2, 1, 2)).unwrap(), e(2, 1, 2));
    }

    #[test]
    fn centrality() {
        let trace = e(2, 1, 1).try_add(&e(2, 2, 2)).unwrap();
        assert!(trace.is_central().unwrap());
        assert!(!e(2, 1, 2).is_central().unwrap());
        for n in 1..=3 {
            let mut casimir = UglElement::zero_of(n);
            for i in 1..=n {
                for j in 1..=n {
                    casimir = casimir.try_add(&mul(&e(n, i, j), &e(n, j, i))).unwrap();
                }
            }
            assert!(casimir.is_central().unwrap(), "N = {n}");
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let x = e(2, 2, 1);
        let mut p = UglElement::one();
        for _ in 0..3 {
            p = mul(&p, &x);
        }
        assert_eq!(p.try_mul_with_cap(&p, 5), Err(UglError::DegreeCap { degree: 6, cap: 5 }));
        assert_eq!(UglElement::generator(2, 3, 1), Err(UglError::OutOfRange { i: 3, j: 1, n: 2 }));
    }

    #[test]
    fn exponent_form() {
        let x = mul(&mul(&e(2, 2, 1), &e(2, 1, 1)), &e(2, 1, 1));
        let (top, _) = x.terms().find(|(m, _)| m.len() == 3).unwrap();
        assert_eq!(UglElement::exponents(top), vec![(1, 1, 2), (2, 1, 1)]);
        assert_eq!(UglElement::monomial_from_exponents(&[(2, 1, 1), (1, 1, 2)]), top.clone());
    }

    #[test]
    fn ranks_must_agree() {
        assert_eq!(e(2, 1, 1).try_add(&e(3, 1, 1)), Err(UglError::RankMismatch { left: 2, right: 3 }));
        assert_eq!(UglElement::scalar(rat(2)).try_add(&e(3, 1, 1)).unwrap().rank(), 3);
    }

    fn element(n: usize) -> impl Strategy<Value = UglElement> {
        let word = proptest::collection::vec((1..=n, 1..=n), 0..=2);
        proptest::collection::vec((word, -2i64..=2), 0..=3)
            .prop_map(move |terms| UglElement::from_words(n, terms.into_iter().map(|(w, c)| (w, rat(c)))).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn associativity((a, b, c) in (1usize..=3).prop_flat_map(|n| (element(n), element(n), element(n)))) {
            prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        }
    }
}
