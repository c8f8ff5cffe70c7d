//! Differential operators with polynomial coefficients on `C^N ⊗ C^M`.
//!
//! Variables `x_ia` and `∂_ia` are stored as flat exponent grids indexed by
//! `(i - 1)·M + (a - 1)`. Monomials are normal ordered: every `x` to the left
//! of every `∂`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::{factorial, rat};
use crate::symgroup::Permutation;
use crate::tensormat::e_lambda;
use crate::ugl::UglElement;
use crate::young::YoungDiagram;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("operator shapes differ: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("index ({i}, {a}) outside {n}×{m}")]
    OutOfRange { i: usize, a: usize, n: usize, m: usize },
}

/// `x^α ∂^β` with flat exponent grids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMonomial {
    pub x: Vec<u32>,
    pub d: Vec<u32>,
}

impl WeylMonomial {
    pub fn unit(vars: usize) -> Self {
        WeylMonomial { x: vec![0; vars], d: vec![0; vars] }
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn d_degree(&self) -> u32 {
        self.d.iter().sum()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement {
    n: usize,
    m: usize,
    terms: BTreeMap<WeylMonomial, Rational>,
}

/// Which side of `gl_N × gl_M` a generator comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    GlN,
    GlM,
}

impl WeylElement {
    pub fn zero(n: usize, m: usize) -> Self {
        WeylElement { n, m, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, m: usize) -> Self {
        Self::scalar(n, m, rat(1))
    }

    pub fn scalar(n: usize, m: usize, value: Rational) -> Self {
        let mut out = Self::zero(n, m);
        out.add_term(WeylMonomial::unit(n * m), value);
        out
    }

    fn index(&self, i: usize, a: usize) -> Result<usize, WeylError> {
        if i == 0 || a == 0 || i > self.n || a > self.m {
            return Err(WeylError::OutOfRange { i, a, n: self.n, m: self.m });
        }
        Ok((i - 1) * self.m + (a - 1))
    }

    /// The coordinate `x_ia` (1-based).
    pub fn x(n: usize, m: usize, i: usize, a: usize) -> Result<Self, WeylError> {
        let mut out = Self::zero(n, m);
        let k = out.index(i, a)?;
        let mut mono = WeylMonomial::unit(n * m);
        mono.x[k] = 1;
        out.add_term(mono, rat(1));
        Ok(out)
    }

    /// The derivation `∂_ia` (1-based).
    pub fn d(n: usize, m: usize, i: usize, a: usize) -> Result<Self, WeylError> {
        let mut out = Self::zero(n, m);
        let k = out.index(i, a)?;
        let mut mono = WeylMonomial::unit(n * m);
        mono.d[k] = 1;
        out.add_term(mono, rat(1));
        Ok(out)
    }

    /// Builds an element from normal-ordered terms, dropping zeros.
    pub fn from_terms(n: usize, m: usize, terms: impl IntoIterator<Item = (WeylMonomial, Rational)>) -> Result<Self, WeylError> {
        let mut out = Self::zero(n, m);
        for (mono, c) in terms {
            if mono.x.len() != n * m || mono.d.len() != n * m {
                return Err(WeylError::ShapeMismatch { left: (n, m), right: (mono.x.len(), mono.d.len()) });
            }
            out.add_term(mono, c);
        }
        Ok(out)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &WeylMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Whether every monomial has x-degree `p` and ∂-degree `q`.
    pub fn is_homogeneous(&self, p: u32, q: u32) -> bool {
        self.terms.keys().all(|mono| mono.x_degree() == p && mono.d_degree() == q)
    }

    pub fn add_term(&mut self, mono: WeylMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), WeylError> {
        if self.shape() != other.shape() {
            return Err(WeylError::ShapeMismatch { left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, WeylError> {
        self.check(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, WeylError> {
        self.try_add(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        WeylElement { n: self.n, m: self.m, terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.n, self.m);
        }
        WeylElement { n: self.n, m: self.m, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * factor)).collect() }
    }

    /// Normal-ordered product.
    pub fn try_mul(&self, other: &Self) -> Result<Self, WeylError> {
        self.check(other)?;
        let mut out = Self::zero(self.n, self.m);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let coeff = ca * cb;
                for (mono, c) in mul_monomials(a, b) {
                    out.add_term(mono, &coeff * c);
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self, WeylError> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, WeylError> {
        if self.shape() != f.shape() {
            return Err(WeylError::ShapeMismatch { left: self.shape(), right: f.shape() });
        }
        let mut out = Polynomial::zero(self.n, self.m);
        for (op, c) in &self.terms {
            'terms: for (exps, e) in &f.terms {
                let mut coeff = c * e;
                let mut result = exps.clone();
                for (v, &b) in op.d.iter().enumerate() {
                    if b > result[v] {
                        continue 'terms;
                    }
                    for t in 0..b {
                        coeff *= rat(i64::from(result[v] - t));
                    }
                    result[v] -= b;
                }
                for (r, &a) in result.iter_mut().zip(&op.x) {
                    *r += a;
                }
                out.add_term(result, coeff);
            }
        }
        Ok(out)
    }
}

/// `(x^α ∂^β)(x^γ ∂^δ)` in normal order, using
/// `∂^b x^c = Σ_k C(b,k) C(c,k) k! x^{c-k} ∂^{b-k}` in each variable.
fn mul_monomials(left: &WeylMonomial, right: &WeylMonomial) -> Vec<(WeylMonomial, Rational)> {
    let vars = left.x.len();
    let mut out = vec![(
        WeylMonomial {
            x: left.x.iter().zip(&right.x).map(|(a, b)| a + b).collect(),
            d: left.d.iter().zip(&right.d).map(|(a, b)| a + b).collect(),
        },
        rat(1),
    )];
    for v in 0..vars {
        let (b, c) = (left.d[v], right.x[v]);
        if b == 0 || c == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (b.min(c) as usize + 1));
        for (mono, coeff) in &out {
            for k in 0..=b.min(c) {
                let weight = binomial(b, k) * binomial(c, k) * factorial(k as usize);
                let mut reduced = mono.clone();
                reduced.x[v] -= k;
                reduced.d[v] -= k;
                next.push((reduced, coeff * weight));
            }
        }
        out = next;
    }
    out
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    Rational::from_integer(acc)
}

impl Add for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: Self) -> WeylElement {
        self.try_add(rhs).expect("Weyl shape mismatch")
    }
}

impl Sub for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: Self) -> WeylElement {
        self.try_sub(rhs).expect("Weyl shape mismatch")
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: Self) -> WeylElement {
        self.try_mul(rhs).expect("Weyl shape mismatch")
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        self.neg_ref()
    }
}

fn var_name(f: &mut fmt::Formatter<'_>, letter: char, flat: usize, m: usize, exp: u32) -> fmt::Result {
    let (i, a) = (flat / m + 1, flat % m + 1);
    write!(f, "{letter}{i}{a}")?;
    if exp > 1 {
        write!(f, "^{exp}")?;
    }
    Ok(())
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    m: usize,
    terms: impl Iterator<Item = (&'a [u32], &'a [u32], &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (x, d, c) in terms {
        let negative = *c < Rational::zero();
        let magnitude = if negative { -c } else { c.clone() };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let vars: Vec<(char, usize, u32)> = x
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(k, e)| ('x', k, *e))
            .chain(d.iter().enumerate().filter(|(_, e)| **e > 0).map(|(k, e)| ('d', k, *e)))
            .collect();
        let mut need_star = false;
        if vars.is_empty() || !magnitude.is_one() {
            write!(f, "{magnitude}")?;
            need_star = true;
        }
        for (letter, k, e) in vars {
            if need_star {
                f.write_str("*")?;
            }
            var_name(f, letter, k, m, e)?;
            need_star = true;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.m, self.terms.iter().rev().map(|(k, c)| (k.x.as_slice(), k.d.as_slice(), c)))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement[{}x{}]({self})", self.n, self.m)
    }
}

/// Polynomial functions on `C^N ⊗ C^M`.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    m: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize, m: usize) -> Self {
        Polynomial { n, m, terms: BTreeMap::new() }
    }

    pub fn monomial(n: usize, m: usize, exps: Vec<u32>, coeff: Rational) -> Self {
        assert_eq!(exps.len(), n * m, "exponent grid size");
        let mut out = Self::zero(n, m);
        out.add_term(exps, coeff);
        out
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// All monomials of total degree `degree` with coefficient 1.
    pub fn monomials_of_degree(n: usize, m: usize, degree: u32) -> Vec<Polynomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; n * m];
        fill(&mut exps, 0, degree, &mut |e| out.push(Polynomial::monomial(n, m, e.to_vec(), rat(1))));
        out
    }
}

fn fill(exps: &mut [u32], pos: usize, remaining: u32, emit: &mut impl FnMut(&[u32])) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        emit(exps);
        exps[pos] = 0;
        return;
    }
    if exps.is_empty() {
        if remaining == 0 {
            emit(exps);
        }
        return;
    }
    for k in 0..=remaining {
        exps[pos] = k;
        fill(exps, pos + 1, remaining - k, emit);
    }
    exps[pos] = 0;
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zeros = vec![0u32; self.n * self.m];
        write_terms(f, self.m, self.terms.iter().rev().map(|(k, c)| (k.as_slice(), zeros.as_slice(), c)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}x{}]({self})", self.n, self.m)
    }
}

/// `E_ij ↦ Σ_b x_ib ∂_jb` on the `gl_N` side, `E_ab ↦ Σ_j x_ja ∂_jb` on the `gl_M` side.
pub fn gl_action(side: Side, n: usize, m: usize, i: usize, j: usize) -> Result<WeylElement, WeylError> {
    let mut out = WeylElement::zero(n, m);
    match side {
        Side::GlN => {
            for b in 1..=m {
                out = &out + &(&WeylElement::x(n, m, i, b)? * &WeylElement::d(n, m, j, b)?);
            }
        }
        Side::GlM => {
            for r in 1..=n {
                out = &out + &(&WeylElement::x(n, m, r, i)? * &WeylElement::d(n, m, r, j)?);
            }
        }
    }
    Ok(out)
}

/// Multiplicative extension of `E_ij ↦ gl_action(GlN, i, j)` to `U(gl_N)`.
pub fn ugl_to_weyl(x: &UglElement, n: usize, m: usize) -> Result<WeylElement, WeylError> {
    let mut images: BTreeMap<(u8, u8), WeylElement> = BTreeMap::new();
    let mut out = WeylElement::zero(n, m);
    for (mono, c) in x.terms() {
        let mut acc = WeylElement::scalar(n, m, c.clone());
        for g in mono {
            let image = match images.entry((g.i, g.j)) {
                Entry::Occupied(e) => e.into_mut(),
                Entry::Vacant(e) => e.insert(gl_action(Side::GlN, n, m, g.i as usize, g.j as usize)?),
            };
            acc = acc.try_mul(image)?;
        }
        out = out.try_add(&acc)?;
    }
    Ok(out)
}

fn for_each_index(len: usize, base: usize, mut f: impl FnMut(&[usize])) {
    if base == 0 && len > 0 {
        return;
    }
    let mut idx = vec![0usize; len];
    loop {
        f(&idx);
        let mut k = len;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < base {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// `(1/n!) Σ_{σ, i⃗, a⃗} χ_λ(σ) x_{i_1 a_1}⋯x_{i_n a_n} ∂_{i_σ(1) a_1}⋯∂_{i_σ(n) a_n}`.
pub fn c_lambda(shape: &YoungDiagram, n: usize, m: usize) -> WeylElement {
    let size = shape.size();
    let mut out = WeylElement::zero(n, m);
    let norm = factorial(size);
    for sigma in Permutation::all(size) {
        let chi = shape.character(&sigma).expect("matching degree");
        if chi.is_zero() {
            continue;
        }
        let coeff = chi / &norm;
        for_each_index(size, n, |is| {
            for_each_index(size, m, |as_| {
                let mut mono = WeylMonomial::unit(n * m);
                for k in 0..size {
                    mono.x[is[k] * m + as_[k]] += 1;
                    mono.d[is[sigma.apply(k)] * m + as_[k]] += 1;
                }
                out.add_term(mono, coeff.clone());
            });
        });
    }
    out
}

/// How the Kronecker term of the ordered product is summed against `a⃗`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaReading {
    /// `-c_k δ` sits inside the sum over `a_k`, so it is counted `M` times.
    Literal,
    /// `-c_k δ` is added once per factor: `Σ_a x_{i_k a} ∂_{i_σ(k) a} - c_k δ`.
    PerFactor,
}

/// `Σ_σ y_σ Σ_{i⃗, a⃗} ∏→_k (x_{i_k a_k} ∂_{i_σ(k) a_k} - c_k δ_{i_k i_σ(k)})`.
pub fn capelli_product(shape: &YoungDiagram, n: usize, m: usize, reading: DeltaReading) -> WeylElement {
    let size = shape.size();
    let contents = shape.contents();
    let y = shape.y_coefficients();
    let mut out = WeylElement::zero(n, m);
    let mut xd: BTreeMap<(usize, usize, usize), WeylElement> = BTreeMap::new();
    let mut summed: BTreeMap<(usize, usize), WeylElement> = BTreeMap::new();
    let mut factor = |i: usize, j: usize, a: Option<usize>, c: i64| -> WeylElement {
        let delta = if i == j { rat(c) } else { rat(0) };
        let base = match a {
            Some(a) => xd
                .entry((i, j, a))
                .or_insert_with(|| &WeylElement::x(n, m, i + 1, a + 1).unwrap() * &WeylElement::d(n, m, j + 1, a + 1).unwrap())
                .clone(),
            None => summed.entry((i, j)).or_insert_with(|| gl_action(Side::GlN, n, m, i + 1, j + 1).unwrap()).clone(),
        };
        &base - &WeylElement::scalar(n, m, delta)
    };
    for (sigma, y_sigma) in y.terms() {
        for_each_index(size, n, |is| {
            let mut term = WeylElement::scalar(n, m, y_sigma.clone());
            match reading {
                DeltaReading::PerFactor => {
                    for k in 0..size {
                        let f = factor(is[k], is[sigma.apply(k)], None, contents[k]);
                        term = &term * &f;
                    }
                    out = &out + &term;
                }
                DeltaReading::Literal => {
                    for_each_index(size, m, |as_| {
                        let mut t = term.clone();
                        for k in 0..size {
                            let f = factor(is[k], is[sigma.apply(k)], Some(as_[k]), contents[k]);
                            t = &t * &f;
                        }
                        out = &out + &t;
                    });
                }
            }
        });
    }
    out
}

/// Outcome of comparing the three realizations of the higher Capelli operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapelliCheck {
    /// `ugl_to_weyl(e_λ) = c_λ`.
    pub image_matches: bool,
    /// `capelli_product = c_λ`.
    pub product_matches: bool,
}

impl CapelliCheck {
    pub fn passed(&self) -> bool {
        self.image_matches && self.product_matches
    }
}

pub fn verify_capelli_identity(shape: &YoungDiagram, n: usize, m: usize) -> CapelliCheck {
    let c = c_lambda(shape, n, m);
    let image = ugl_to_weyl(&e_lambda(shape, n, &rat(0)), n, m).expect("shapes agree");
    let product = capelli_product(shape, n, m, DeltaReading::PerFactor);
    CapelliCheck { image_matches: image == c, product_matches: product == c }
}

/// `[c_λ, g] = 0` for every generator `g` of `gl_N × gl_M`.
pub fn verify_invariance(shape: &YoungDiagram, n: usize, m: usize) -> bool {
    let c = c_lambda(shape, n, m);
    let mut generators = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            generators.push(gl_action(Side::GlN, n, m, i, j).expect("in range"));
        }
    }
    for a in 1..=m {
        for b in 1..=m {
            generators.push(gl_action(Side::GlM, n, m, a, b).expect("in range"));
        }
    }
    generators.iter().all(|g| c.commutator(g).expect("shapes agree").is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn shape(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn x(n: usize, m: usize, i: usize, a: usize) -> WeylElement {
        WeylElement::x(n, m, i, a).unwrap()
    }

    fn d(n: usize, m: usize, i: usize, a: usize) -> WeylElement {
        WeylElement::d(n, m, i, a).unwrap()
    }

    #[test]
    fn canonical_commutation() {
        let lhs = &d(1, 1, 1, 1) * &x(1, 1, 1, 1);
        let expected = &(&x(1, 1, 1, 1) * &d(1, 1, 1, 1)) + &WeylElement::one(1, 1);
        assert_eq!(lhs, expected);
        let commuting = &x(2, 2, 1, 1) * &d(2, 2, 2, 2);
        assert_eq!(commuting, &d(2, 2, 2, 2) * &x(2, 2, 1, 1));
        assert_eq!(commuting.len(), 1);
    }

    #[test]
    fn second_order() {
        let (xx, dd) = (x(1, 1, 1, 1), d(1, 1, 1, 1));
        let lhs = &(&dd * &dd) * &(&xx * &xx);
        let x2d2 = &(&xx * &xx) * &(&dd * &dd);
        let xd = &xx * &dd;
        let expected = &(&x2d2 + &xd.scale(&rat(4))) + &WeylElement::scalar(1, 1, rat(2));
        assert_eq!(lhs, expected);
        assert_eq!(lhs.to_string(), "x11^2*d11^2 + 4*x11*d11 + 2");
    }

    #[test]
    fn actions() {
        let e11 = gl_action(Side::GlN, 1, 2, 1, 1).unwrap();
        assert_eq!(e11, &(&x(1, 2, 1, 1) * &d(1, 2, 1, 1)) + &(&x(1, 2, 1, 2) * &d(1, 2, 1, 2)));
        assert_eq!(gl_action(Side::GlM, 1, 2, 1, 2).unwrap(), &x(1, 2, 1, 1) * &d(1, 2, 1, 2));
        let (n, m) = (2, 2);
        let g = |i, j| gl_action(Side::GlN, n, m, i, j).unwrap();
        assert_eq!(g(1, 2).commutator(&g(2, 1)).unwrap(), &g(1, 1) - &g(2, 2));
        let h = |a, b| gl_action(Side::GlM, n, m, a, b).unwrap();
        assert!(g(1, 2).commutator(&h(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn enveloping_images() {
        assert_eq!(ugl_to_weyl(&UglElement::scalar(rat(1)), 2, 2).unwrap(), WeylElement::one(2, 2));
        let e12 = UglElement::generator(2, 1, 2).unwrap();
        let e21 = UglElement::generator(2, 2, 1).unwrap();
        let lhs = ugl_to_weyl(&e12.try_mul(&e21).unwrap(), 2, 1).unwrap();
        let rhs = &(&x(2, 1, 1, 1) * &d(2, 1, 2, 1)) * &(&x(2, 1, 2, 1) * &d(2, 1, 1, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn operators_for_small_shapes() {
        assert_eq!(c_lambda(&shape("1"), 2, 3), {
            let mut acc = WeylElement::zero(2, 3);
            for i in 1..=2 {
                acc = &acc + &gl_action(Side::GlN, 2, 3, i, i).unwrap();
            }
            acc
        });
        let (xx, dd) = (x(1, 1, 1, 1), d(1, 1, 1, 1));
        let x2d2 = &(&xx * &xx) * &(&dd * &dd);
        assert_eq!(c_lambda(&shape("2"), 1, 1), x2d2);
        assert!(c_lambda(&shape("1,1"), 1, 1).is_zero());
        for reading in [DeltaReading::Literal, DeltaReading::PerFactor] {
            assert_eq!(capelli_product(&shape("2"), 1, 1, reading), x2d2);
            assert!(capelli_product(&shape("1,1"), 1, 1, reading).is_zero());
        }
        assert_eq!(c_lambda(&YoungDiagram::empty(), 2, 2), WeylElement::one(2, 2));
        assert_eq!(capelli_product(&YoungDiagram::empty(), 2, 2, DeltaReading::PerFactor), WeylElement::one(2, 2));
    }

    #[test]
    fn classical_capelli() {
        let check = verify_capelli_identity(&shape("1,1"), 2, 2);
        assert!(check.passed(), "{check:?}");
        assert!(verify_capelli_identity(&shape("2,1"), 2, 2).passed());
        assert!(verify_capelli_identity(&shape("1"), 3, 2).passed());
    }

    #[test]
    fn literal_reading_overcounts() {
        let l = shape("1,1");
        assert_ne!(capelli_product(&l, 2, 2, DeltaReading::Literal), c_lambda(&l, 2, 2));
        assert_eq!(capelli_product(&l, 2, 1, DeltaReading::Literal), c_lambda(&l, 2, 1));
    }

    #[test]
    fn invariance() {
        assert!(verify_invariance(&shape("1,1"), 2, 2));
        assert!(verify_invariance(&shape("2"), 2, 3));
        assert!(c_lambda(&shape("2,1"), 2, 2).is_homogeneous(3, 3));
    }

    #[test]
    fn applying_operators() {
        let xd = &x(1, 1, 1, 1) * &d(1, 1, 1, 1);
        let cube = Polynomial::monomial(1, 1, vec![3], rat(1));
        assert_eq!(xd.apply(&cube).unwrap(), Polynomial::monomial(1, 1, vec![3], rat(3)));
        let c2 = c_lambda(&shape("2"), 2, 2);
        for f in Polynomial::monomials_of_degree(2, 2, 1) {
            assert!(c2.apply(&f).unwrap().is_zero());
        }
        assert_eq!(Polynomial::monomials_of_degree(2, 2, 2).len(), 10);
    }

    fn weyl_strategy() -> impl Strategy<Value = WeylElement> {
        prop::collection::vec((prop::collection::vec(0u32..3, 4), prop::collection::vec(0u32..3, 4), -3i64..4), 1..4).prop_map(|terms| {
            WeylElement::from_terms(2, 2, terms.into_iter().map(|(x, d, c)| (WeylMonomial { x, d }, rat(c)))).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multiplication_is_associative(a in weyl_strategy(), b in weyl_strategy(), c in weyl_strategy()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn action_is_a_module(a in weyl_strategy(), b in weyl_strategy(), e in prop::collection::vec(0u32..4, 4)) {
            let f = Polynomial::monomial(2, 2, e, rat(1));
            prop_assert_eq!((&a * &b).apply(&f).unwrap(), a.apply(&b.apply(&f).unwrap()).unwrap());
        }
    }
}
