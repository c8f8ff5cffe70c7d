//! Permutations and the group algebra `C·S_n`.
//!
//! Composition is right to left: `(σ∘τ)(k) = σ(τ(k))`, and the group-algebra
//! product of basis elements is `σ·τ = σ∘τ`. Points are 0-based internally
//! and 1-based in every public constructor and in display.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::ring::Ring;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SymGroupError {
    #[error("images {0:?} do not form a permutation of 1..n")]
    NotBijective(Vec<usize>),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("degree {0} exceeds the supported maximum of 255")]
    TooLarge(usize),
}

/// A bijection of `{1..n}` stored by its images.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= 255, "degree too large");
        Permutation { images: (0..degree as u8).collect() }
    }

    /// The transposition of the 1-based points `i` and `j`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self, SymGroupError> {
        for point in [i, j] {
            if point == 0 || point > degree {
                return Err(SymGroupError::OutOfRange { point, degree });
            }
        }
        let mut p = Self::identity(degree);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self, SymGroupError> {
        let n = images.len();
        if n > 255 {
            return Err(SymGroupError::TooLarge(n));
        }
        let mut seen = alloc::vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(SymGroupError::NotBijective(images.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| (x - 1) as u8).collect() })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.iter().enumerate().all(|(k, &x)| k == x as usize)
        });
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of the 0-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }


    /// 0-based images.
    pub fn images_zero_based(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k == x as usize)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, SymGroupError> {
        if self.degree() != other.degree() {
            return Err(SymGroupError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Permutation { images: other.images.iter().map(|&k| self.images[k as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u8; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize] = k as u8;
        }
        Permutation { images: inv }
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        let mut even = true;
        for cycle in self.cycles() {
            if cycle.len() % 2 == 0 {
                even = !even;
            }
        }
        if even { 1 } else { -1 }
    }

    /// Disjoint cycles (0-based), each starting at its smallest point,
    /// including fixed points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = self.apply(k);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// `self ∘ (i j)` for 0-based points: swaps two image slots.
    pub(crate) fn times_transposition(&self, i: usize, j: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i, j);
        Permutation { images }
    }

    /// Moves the permutation onto the points `offset..offset+n` of a larger
    /// set, fixing everything else.
    pub fn embed_shift(&self, offset: usize, new_degree: usize) -> Result<Self, SymGroupError> {
        if offset + self.degree() > new_degree {
            return Err(SymGroupError::OutOfRange { point: offset + self.degree(), degree: new_degree });
        }
        if new_degree > 255 {
            return Err(SymGroupError::TooLarge(new_degree));
        }
        let mut p = Self::identity(new_degree);
        for (k, &x) in self.images.iter().enumerate() {
            p.images[offset + k] = offset as u8 + x;
        }
        Ok(p)
    }

    /// All permutations of the given degree in lexicographic order.
    pub fn all(degree: usize) -> Vec<Self> {
        let mut current: Vec<u8> = (0..degree as u8).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation { images: current.clone() });
            // next lexicographic permutation
            let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).expect("exists");
            current.swap(i - 1, j);
            current[i..].reverse();
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation with 1-based points, e.g. `(1 3)(2 4)`; the identity is `e`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let body: Vec<String> = cycle.iter().map(|k| alloc::format!("{}", k + 1)).collect();
            write!(f, "({})", body.join(" "))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("e")?;
        }
        Ok(())
    }
}

/// Sparse element of the group algebra of `S_n` over a ring `C`.
#[derive(Clone, PartialEq)]
pub struct GroupAlgebraElement<C> {
    degree: usize,
    terms: BTreeMap<Permutation, C>,
}

impl<C: Ring> GroupAlgebraElement<C> {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement { degree, terms: BTreeMap::new() }
    }

    pub fn one(degree: usize) -> Self {
        Self::from_perm(Permutation::identity(degree), C::one())
    }

    pub fn from_perm(perm: Permutation, coeff: C) -> Self {
        let mut out = Self::zero(perm.degree());
        out.add_term(perm, coeff);
        out
    }

    /// Collects terms, summing repeated permutations.
    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Permutation, C)>,
    ) -> Result<Self, SymGroupError> {
        let mut out = Self::zero(degree);
        for (perm, coeff) in terms {
            if perm.degree() != degree {
                return Err(SymGroupError::DegreeMismatch { left: degree, right: perm.degree() });
            }
            out.add_term(perm, coeff);
        }
        Ok(out)
    }

    /// `a + b·(i j)` with 1-based points.
    pub fn linear_transposition(degree: usize, a: C, i: usize, j: usize, b: C) -> Result<Self, SymGroupError> {
        let mut out = Self::zero(degree);
        out.add_term(Permutation::identity(degree), a);
        out.add_term(Permutation::transposition(degree, i, j)?, b);
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of image sequences.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, perm: &Permutation) -> C {
        self.terms.get(perm).cloned().unwrap_or_else(C::zero)
    }

    pub fn identity_coeff(&self) -> C {
        self.coeff(&Permutation::identity(self.degree))
    }

    pub fn add_term(&mut self, perm: Permutation, coeff: C) {
        debug_assert_eq!(perm.degree(), self.degree);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(perm) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_degree(&self, other: &Self) -> Result<(), SymGroupError> {
        if self.degree != other.degree {
            return Err(SymGroupError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SymGroupError> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (perm, coeff) in &other.terms {
            out.add_term(perm.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SymGroupError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(C::neg_ref)
    }

    /// Convolution product.
    pub fn try_mul(&self, other: &Self) -> Result<Self, SymGroupError> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose_unchecked(q), a.mul_ref(b));
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient on the left by `c`.
    pub fn scale_by(&self, c: &C) -> Self {
        let mut out = Self::zero(self.degree);
        for (perm, coeff) in &self.terms {
            out.add_term(perm.clone(), c.mul_ref(coeff));
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero(self.degree);
        for (perm, coeff) in &self.terms {
            out.add_term(perm.clone(), coeff.scale(factor));
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, mut f: impl FnMut(&C) -> D) -> GroupAlgebraElement<D> {
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (perm, coeff) in &self.terms {
            out.add_term(perm.clone(), f(coeff));
        }
        out
    }

    pub fn try_map_coeffs<D: Ring, E>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, E>,
    ) -> Result<GroupAlgebraElement<D>, E> {
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (perm, coeff) in &self.terms {
            out.add_term(perm.clone(), f(coeff)?);
        }
        Ok(out)
    }

    /// The antiautomorphism `σ ↦ σ⁻¹`.
    pub fn alpha(&self) -> Self {
        let mut out = Self::zero(self.degree);
        for (perm, coeff) in &self.terms {
            out.add_term(perm.inverse(), coeff.clone());
        }
        out
    }

    /// Conjugates every permutation onto `offset+1..offset+n` inside `S_{new_degree}`.
    pub fn embed_shift(&self, offset: usize, new_degree: usize) -> Result<Self, SymGroupError> {
        let mut out = Self::zero(new_degree);
        if offset + self.degree > new_degree {
            return Err(SymGroupError::OutOfRange { point: offset + self.degree, degree: new_degree });
        }
        for (perm, coeff) in &self.terms {
            out.add_term(perm.embed_shift(offset, new_degree)?, coeff.clone());
        }
        Ok(out)
    }

    /// `self · (a + b·(i j))` with 0-based points. Cheaper than a general product.
    pub fn mul_transposition_factor(&self, a: &C, b: &C, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.degree);
        for (perm, coeff) in &self.terms {
            out.add_term(perm.clone(), coeff.mul_ref(a));
            out.add_term(perm.times_transposition(i, j), coeff.mul_ref(b));
        }
        out
    }
}

impl<C: Ring + fmt::Display> fmt::Display for GroupAlgebraElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (perm, coeff)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{coeff}]{perm}")?;
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for GroupAlgebraElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupAlgebraElement").field("degree", &self.degree).field("terms", &self.terms).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use alloc::vec;
    use proptest::prelude::*;

    type Ga = GroupAlgebraElement<Rational>;

    fn tr(n: usize, i: usize, j: usize) -> Permutation {
        Permutation::transposition(n, i, j).unwrap()
    }

    fn one_plus(n: usize, sign: i64, i: usize, j: usize) -> Ga {
        Ga::linear_transposition(n, rat(1), i, j, rat(sign)).unwrap()
    }

    #[test]
    fn composition_is_right_to_left() {
        // (12)∘(13): 1 -> 3 -> 3, 3 -> 1 -> 2, 2 -> 2 -> 1
        let p = tr(3, 1, 2).compose(&tr(3, 1, 3)).unwrap();
        assert_eq!(p.images(), vec![3, 1, 2]);
        assert_eq!(alloc::format!("{p}"), "(1 3 2)");
    }

    #[test]
    fn annihilating_product() {
        let prod = one_plus(2, -1, 1, 2).try_mul(&one_plus(2, 1, 1, 2)).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn product_of_two_binomials() {
        // brute force: every product of one term from each factor
        let lhs = one_plus(3, 1, 1, 2).try_mul(&one_plus(3, 1, 1, 3)).unwrap();
        let mut expected = Ga::zero(3);
        for p in [Permutation::identity(3), tr(3, 1, 2)] {
            for q in [Permutation::identity(3), tr(3, 1, 3)] {
                let images: Vec<usize> = (1..=3).map(|k| p.images()[q.images()[k - 1] - 1]).collect();
                expected.add_term(Permutation::from_images(&images).unwrap(), rat(1));
            }
        }
        assert_eq!(lhs, expected);
        assert_eq!(lhs.len(), 4);
    }

    #[test]
    fn degree_mismatch() {
        assert_eq!(
            Ga::one(2).try_mul(&Ga::one(3)),
            Err(SymGroupError::DegreeMismatch { left: 2, right: 3 })
        );
        assert!(Permutation::from_images(&[1, 1]).is_err());
    }

    #[test]
    fn alpha_inverts() {
        let c = Permutation::from_images(&[2, 3, 1]).unwrap();
        let x = Ga::one(3).try_add(&Ga::from_perm(c.clone(), rat(2))).unwrap();
        let y = Ga::one(3).try_add(&Ga::from_perm(c.inverse(), rat(2))).unwrap();
        assert_eq!(x.alpha(), y);
        assert_eq!(x.alpha().alpha(), x);
    }

    #[test]
    fn embedding() {
        let x = Ga::from_perm(tr(2, 1, 2), rat(1));
        assert_eq!(x.embed_shift(1, 3).unwrap(), Ga::from_perm(tr(3, 2, 3), rat(1)));
        assert_eq!(Ga::one(2).embed_shift(5, 9).unwrap(), Ga::one(9));
        assert_eq!(one_plus(2, -1, 1, 2).embed_shift(2, 4).unwrap(), one_plus(4, -1, 3, 4));
        assert!(x.embed_shift(2, 3).is_err());
    }

    #[test]
    fn transposition_factor_matches_general_product() {
        let x = one_plus(3, 1, 1, 2).try_mul(&one_plus(3, -1, 2, 3)).unwrap();
        let direct = x.try_mul(&Ga::linear_transposition(3, rat(2), 1, 3, rat(-5)).unwrap()).unwrap();
        assert_eq!(x.mul_transposition_factor(&rat(2), &rat(-5), 0, 2), direct);
    }

    #[test]
    fn enumeration_is_complete() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(0).len(), 1);
    }

    fn perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle().prop_map(Permutation::from_zero_based)
    }

    fn element(n: usize) -> impl Strategy<Value = Ga> {
        proptest::collection::vec((perm(n), -3i64..=3), 0..4)
            .prop_map(move |terms| Ga::from_terms(n, terms.into_iter().map(|(p, c)| (p, rat(c)))).unwrap())
    }

    proptest! {
        #[test]
        fn associativity((a, b, c) in (1usize..=5).prop_flat_map(|n| (element(n), element(n), element(n)))) {
            let left = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
            let right = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn sign_is_multiplicative(p in perm(5), q in perm(5)) {
            prop_assert_eq!(p.compose_unchecked(&q).sign(), p.sign() * q.sign());
        }

        #[test]
        fn embedding_is_multiplicative(a in element(3), b in element(3)) {
            let lhs = a.try_mul(&b).unwrap().embed_shift(2, 6).unwrap();
            let rhs = a.embed_shift(2, 6).unwrap().try_mul(&b.embed_shift(2, 6).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn alpha_reverses_products(a in element(4), b in element(4)) {
            prop_assert_eq!(a.try_mul(&b).unwrap().alpha(), b.alpha().try_mul(&a.alpha()).unwrap());
        }
    }
}
