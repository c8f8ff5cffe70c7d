//! Sparse matrices on `(C^N)^{⊗n}` with entries in a ring.
//!
//! A basis vector `e_{i_1} ⊗ … ⊗ e_{i_n}` (0-based `i_k`) is indexed by
//! `Σ i_k N^{n-k}`, the first tensor factor being the most significant digit.
//! The permutation `σ` acts by moving the factor in position `k` to position
//! `σ(k)`, which makes `σ ↦ P_σ` a homomorphism.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;


use crate::exact::{RationalFunction, UniPoly, Var};
use crate::ring::{rat, Ring};
use crate::symgroup::{GroupAlgebraElement, Permutation};
use crate::ugl::{UglElement, UglError};
use crate::young::YoungDiagram;
use crate::Rational;

/// Polynomial in one central parameter with coefficients in a ring,
/// lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamPoly<A> {
    coeffs: Vec<A>,
}

impl<A: Ring> ParamPoly<A> {
    pub fn from_coeffs(mut coeffs: Vec<A>) -> Self {
        while coeffs.last().is_some_and(A::is_zero) {
            coeffs.pop();
        }
        ParamPoly { coeffs }
    }

    pub fn constant(a: A) -> Self {
        Self::from_coeffs(vec![a])
    }

    /// `a + b·x` with scalar `a`, `b`.
    pub fn linear(a: &Rational, b: &Rational) -> Self {
        Self::from_coeffs(vec![A::from_rational(a), A::from_rational(b)])
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> A {
        self.coeffs.get(k).cloned().unwrap_or_else(A::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `Σ a_k x^k` at a rational point.
    pub fn eval(&self, x: &Rational) -> A {
        let mut acc = A::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x).add_ref(c);
        }
        acc
    }

    pub fn map<B: Ring>(&self, f: impl FnMut(&A) -> B) -> ParamPoly<B> {
        ParamPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl ParamPoly<Rational> {
    pub fn to_unipoly(&self, var: Var) -> UniPoly {
        UniPoly::from_coeffs(var, self.coeffs.clone())
    }

    pub fn from_unipoly(p: &UniPoly) -> Self {
        Self::from_coeffs(p.coeffs().to_vec())
    }
}

impl<A: Ring> Ring for ParamPoly<A> {
    fn zero() -> Self {
        ParamPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(A::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..len).map(|k| self.coeff(k).add_ref(&rhs.coeff(k))).collect())
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..len).map(|k| self.coeff(k).sub_ref(&rhs.coeff(k))).collect())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![A::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        Self::from_coeffs(out)
    }

    fn neg_ref(&self) -> Self {
        ParamPoly { coeffs: self.coeffs.iter().map(A::neg_ref).collect() }
    }

    fn from_rational(value: &Rational) -> Self {
        Self::constant(A::from_rational(value))
    }

    fn scale(&self, factor: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.scale(factor)).collect())
    }
}

impl<A: fmt::Debug> fmt::Debug for ParamPoly<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl<A: Ring + fmt::Display> fmt::Display for ParamPoly<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Matrix on `(C^N)^{⊗n}` with sparse rows.
#[derive(Clone, PartialEq)]
pub struct TensorMatrix<A> {
    local_dim: usize,
    factors: usize,
    rows: Vec<BTreeMap<usize, A>>,
}

impl<A: Ring> TensorMatrix<A> {
    pub fn zero(local_dim: usize, factors: usize) -> Self {
        let size = local_dim.pow(factors as u32);
        TensorMatrix { local_dim, factors, rows: vec![BTreeMap::new(); size] }
    }

    pub fn identity(local_dim: usize, factors: usize) -> Self {
        let mut out = Self::zero(local_dim, factors);
        for r in 0..out.size() {
            out.rows[r].insert(r, A::one());
        }
        out
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    /// `N^n`.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, col: usize) -> A {
        self.rows[row].get(&col).cloned().unwrap_or_else(A::zero)
    }

    pub fn add_entry(&mut self, row: usize, col: usize, value: A) {
        if value.is_zero() {
            return;
        }
        let entries = &mut self.rows[row];
        match entries.get_mut(&col) {
            Some(existing) => {
                let sum = existing.add_ref(&value);
                if sum.is_zero() {
                    entries.remove(&col);
                } else {
                    *existing = sum;
                }
            }
            None => {
                entries.insert(col, value);
            }
        }
    }

    /// Nonzero entries `(row, col, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &A)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    /// 0-based tensor digits of a basis index.
    pub fn digits(&self, index: usize) -> Vec<usize> {
        digits(index, self.local_dim, self.factors)
    }

    pub fn index_of(&self, digits: &[usize]) -> usize {
        index_of(digits, self.local_dim)
    }

    fn check_shape(&self, other: &Self) {
        assert!(
            self.local_dim == other.local_dim && self.factors == other.factors,
            "matrix shapes differ: (N={}, n={}) vs (N={}, n={})",
            self.local_dim,
            self.factors,
            other.local_dim,
            other.factors
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_shape(other);
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_entry(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(A::neg_ref)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map(|v| v.scale(factor))
    }

    /// Multiplies every entry on the left by `a`.
    pub fn left_scalar(&self, a: &A) -> Self {
        self.map(|v| a.mul_ref(v))
    }

    pub fn map<B: Ring>(&self, mut f: impl FnMut(&A) -> B) -> TensorMatrix<B> {
        let mut out = TensorMatrix::zero(self.local_dim, self.factors);
        for (r, c, v) in self.entries() {
            out.add_entry(r, c, f(v));
        }
        out
    }

    pub fn try_map<B: Ring, E>(&self, mut f: impl FnMut(&A) -> Result<B, E>) -> Result<TensorMatrix<B>, E> {
        let mut out = TensorMatrix::zero(self.local_dim, self.factors);
        for (r, c, v) in self.entries() {
            out.add_entry(r, c, f(v)?);
        }
        Ok(out)
    }

    /// Matrix product; entry products keep the left operand on the left.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_shape(other);
        let mut out = Self::zero(self.local_dim, self.factors);
        for (r, row) in self.rows.iter().enumerate() {
            for (&s, x) in row {
                for (&c, y) in &other.rows[s] {
                    out.add_entry(r, c, x.mul_ref(y));
                }
            }
        }
        out
    }

    pub fn trace(&self) -> A {
        let mut acc = A::zero();
        for r in 0..self.size() {
            if let Some(v) = self.rows[r].get(&r) {
                acc.add_assign_ref(v);
            }
        }
        acc
    }

    /// `P_σ · self`.
    pub fn permute_left(&self, sigma: &Permutation) -> Self {
        let mut out = Self::zero(self.local_dim, self.factors);
        for (r, row) in self.rows.iter().enumerate() {
            out.rows[act(sigma, r, self.local_dim, self.factors)] = row.clone();
        }
        out
    }

    /// `self · P_σ`.
    pub fn permute_right(&self, sigma: &Permutation) -> Self {
        let inverse = sigma.inverse();
        let mut out = Self::zero(self.local_dim, self.factors);
        for (r, row) in self.rows.iter().enumerate() {
            for (&s, v) in row {
                out.rows[r].insert(act(&inverse, s, self.local_dim, self.factors), v.clone());
            }
        }
        out
    }

    /// `x ↦ 1^{⊗offset} ⊗ x ⊗ 1^{⊗rest}` into `total` factors.
    pub fn embed(&self, offset: usize, total: usize) -> Self {
        assert!(offset + self.factors <= total, "embedding out of range");
        let n = self.local_dim;
        let mut out = Self::zero(n, total);
        let outer = n.pow(offset as u32);
        let inner = n.pow((total - offset - self.factors) as u32);
        let block = self.size();
        for a in 0..outer {
            for (r, c, v) in self.entries() {
                for b in 0..inner {
                    let row = (a * block + r) * inner + b;
                    let col = (a * block + c) * inner + b;
                    out.add_entry(row, col, v.clone());
                }
            }
        }
        out
    }
}

impl<A: Ring + fmt::Debug> fmt::Debug for TensorMatrix<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorMatrix(N={}, n={}) ", self.local_dim, self.factors)?;
        f.debug_map().entries(self.entries().map(|(r, c, v)| ((r, c), v))).finish()
    }
}

pub fn digits(mut index: usize, local_dim: usize, factors: usize) -> Vec<usize> {
    let mut out = vec![0; factors];
    for k in (0..factors).rev() {
        out[k] = index % local_dim;
        index /= local_dim;
    }
    out
}

pub fn index_of(digits: &[usize], local_dim: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * local_dim + d)
}

/// Basis index of `P_σ e_i`: the digit at position `k` moves to `σ(k)`.
fn act(sigma: &Permutation, index: usize, local_dim: usize, factors: usize) -> usize {
    let from = digits(index, local_dim, factors);
    let mut to = vec![0; factors];
    for (k, &d) in from.iter().enumerate() {
        to[sigma.apply(k)] = d;
    }
    index_of(&to, local_dim)
}

/// Linear extension of `σ ↦ P_σ`.
pub fn perm_to_matrix(x: &GroupAlgebraElement<Rational>, local_dim: usize) -> TensorMatrix<Rational> {
    let n = x.degree();
    let mut out = TensorMatrix::zero(local_dim, n);
    for (sigma, coeff) in x.terms() {
        for i in 0..out.size() {
            out.add_entry(act(sigma, i, local_dim, n), i, coeff.clone());
        }
    }
    out
}

/// `P_σ` for a single permutation.
pub fn permutation_matrix(sigma: &Permutation, local_dim: usize) -> TensorMatrix<Rational> {
    perm_to_matrix(&GroupAlgebraElement::from_perm(sigma.clone(), rat(1)), local_dim)
}

/// The projector `F_λ`, image of `(dim U_λ / n!)·Φ_λ`.
pub fn f_lambda(shape: &YoungDiagram, local_dim: usize) -> TensorMatrix<Rational> {
    perm_to_matrix(&shape.y_coefficients(), local_dim)
}

/// `e_ij` placed in tensor position `k` (0-based) of `n` factors.
pub fn matrix_unit(local_dim: usize, factors: usize, k: usize, i: usize, j: usize) -> TensorMatrix<Rational> {
    let mut out = TensorMatrix::zero(local_dim, factors);
    for idx in 0..out.size() {
        let mut d = digits(idx, local_dim, factors);
        if d[k] != j {
            continue;
        }
        d[k] = i;
        out.add_entry(index_of(&d, local_dim), idx, rat(1));
    }
    out
}

pub fn lift<A: Ring>(m: &TensorMatrix<Rational>) -> TensorMatrix<A> {
    m.map(A::from_rational)
}

/// `E_k = ι_k ⊗ id (Σ e_ji ⊗ E_ij)`: entry `(r, c)` is `E_{c_k r_k}` when
/// `r` and `c` agree outside position `k`.
pub fn e_matrix(n_gl: usize, factors: usize, k: usize) -> TensorMatrix<UglElement> {
    let mut out = TensorMatrix::zero(n_gl, factors);
    for c in 0..out.size() {
        let mut d = digits(c, n_gl, factors);
        let col_digit = d[k];
        for a in 0..n_gl {
            d[k] = a;
            let g = UglElement::generator(n_gl, col_digit + 1, a + 1).expect("in range");
            out.add_entry(index_of(&d, n_gl), c, g);
        }
    }
    out
}

/// `X · (E_k + s)` for a polynomial scalar `s`, without forming `E_k`.
fn mul_e_factor(x: &TensorMatrix<ParamPoly<UglElement>>, k: usize, shift: &ParamPoly<UglElement>) -> TensorMatrix<ParamPoly<UglElement>> {
    let n = x.local_dim;
    let mut out = TensorMatrix::zero(n, x.factors);
    let mut cache: BTreeMap<(usize, usize), ParamPoly<UglElement>> = BTreeMap::new();
    for (r, s, v) in x.entries() {
        out.add_entry(r, s, v.mul_ref(shift));
        let mut d = digits(s, n, x.factors);
        let row_digit = d[k];
        for b in 0..n {
            d[k] = b;
            let g = cache
                .entry((b, row_digit))
                .or_insert_with(|| ParamPoly::constant(UglElement::generator(n, b + 1, row_digit + 1).expect("in range")));
            out.add_entry(r, index_of(&d, n), v.mul_ref(g));
        }
    }
    out
}

pub type UPolyMatrix = TensorMatrix<ParamPoly<UglElement>>;

/// `E_λ(z) = F_λ ⊗ 1 · (E_1 + z - c_1) ⋯ (E_n + z - c_n)`.
#[derive(Clone, Debug)]
pub struct CapelliMatrix {
    pub matrix: UPolyMatrix,
    /// Set when `λ` has more than `N` rows, so that `F_λ = 0`.
    pub vanishes: bool,
}

pub fn capelli_matrix_polynomial(shape: &YoungDiagram, n_gl: usize) -> CapelliMatrix {
    let n = shape.size();
    let f = f_lambda(shape, n_gl);
    let vanishes = f.is_zero();
    let mut acc: UPolyMatrix = lift(&f);
    for (k, &c) in shape.contents().iter().enumerate() {
        let shift = ParamPoly::linear(&rat(-c), &rat(1));
        acc = mul_e_factor(&acc, k, &shift);
    }
    debug_assert_eq!(acc.factors(), n);
    CapelliMatrix { matrix: acc, vanishes }
}

/// `tr ⊗ id` of `E_λ(z)`: a polynomial in `z` over `U(gl_N)`.
pub fn e_lambda_poly(shape: &YoungDiagram, n_gl: usize) -> ParamPoly<UglElement> {
    let out = capelli_matrix_polynomial(shape, n_gl).matrix.trace();
    out.map(|c| c.clone().with_rank(n_gl))
}

/// `e_λ(z)` at a rational point; `at = 0` gives the quantum immanant `e_λ`.
pub fn e_lambda(shape: &YoungDiagram, n_gl: usize, at: &Rational) -> UglElement {
    e_lambda_poly(shape, n_gl).eval(at).with_rank(n_gl)
}

/// The quantum determinant.
#[derive(Clone, Debug)]
pub struct QuantumDeterminant {
    /// `D_1, …, D_N`, the coefficients of `u^{-1}, …, u^{-N}`.
    pub coefficients: Vec<UglElement>,
    /// `p(u) = tr(F_N ∏ (u - k + 1 - E_k))`, so that `D(u) = p(u) / ∏ (u - k + 1)`.
    pub numerator: ParamPoly<UglElement>,
    /// Whether `F_N ∏ (u - k + 1 - E_k) = F_N ⊗ p(u)` exactly.
    pub divisible: bool,
}

pub fn quantum_determinant(n_gl: usize) -> QuantumDeterminant {
    let column = YoungDiagram::new(vec![1; n_gl]).expect("partition");
    let f = f_lambda(&column, n_gl);
    let mut acc: UPolyMatrix = lift(&f);
    let mut q = ParamPoly::<Rational>::one();
    for k in 0..n_gl {
        // u - k - E_k = -(E_k + (k - u))
        let shift = ParamPoly::linear(&rat(k as i64), &-rat(1));
        acc = mul_e_factor(&acc, k, &shift).neg();
        q = q.mul_ref(&ParamPoly::linear(&rat(-(k as i64)), &rat(1)));
    }
    let p = acc.trace().map(|c| c.clone().with_rank(n_gl));
    let reconstructed: UPolyMatrix = lift::<ParamPoly<UglElement>>(&f).map(|v| v.mul_ref(&p));
    let divisible = reconstructed == acc;
    // q(u) D(u) = p(u) with D_0 = 1
    let big_n = n_gl;
    let mut d: Vec<UglElement> = vec![UglElement::one()];
    for s in 1..=big_n {
        let mut value = p.coeff(big_n - s);
        for (m, dm) in d.iter().enumerate() {
            value = value.sub_ref(&dm.scale(&q.coeff(big_n - s + m)));
        }
        d.push(value.with_rank(n_gl));
    }
    d.remove(0);
    QuantumDeterminant { coefficients: d, numerator: p, divisible }
}

type Poly2<A> = ParamPoly<ParamPoly<A>>;

/// The RTT relation under the evaluation map, `T(u) = 1 - E/u`, cleared of
/// denominators: `((u-v) - P)(u - E_1)(v - E_2) = (v - E_2)(u - E_1)((u-v) - P)`.
pub fn verify_rtt_evaluation(n_gl: usize) -> bool {
    let u = Poly2::<UglElement>::from_coeffs(vec![ParamPoly::zero(), ParamPoly::one()]);
    let v = Poly2::<UglElement>::constant(ParamPoly::from_coeffs(vec![UglElement::zero(), UglElement::one()]));
    let identity: TensorMatrix<Poly2<UglElement>> = TensorMatrix::identity(n_gl, 2);
    let swap = lift::<Poly2<UglElement>>(&permutation_matrix(&Permutation::transposition(2, 1, 2).expect("ok"), n_gl));
    let lift_e = |k: usize| e_matrix(n_gl, 2, k).map(|g| Poly2::constant(ParamPoly::constant(g.clone())));
    let r = identity.left_scalar(&u.sub_ref(&v)).sub(&swap);
    let t1 = identity.left_scalar(&u).sub(&lift_e(0));
    let t2 = identity.left_scalar(&v).sub(&lift_e(1));
    r.mul(&t1).mul(&t2) == t2.mul(&t1).mul(&r)
}

/// Both sides of `(1 - Σ_k P_{1,k+1}/u)(id ⊗ F_λ) = ∏_k R_{1,k+1}(u, c_k)(id ⊗ F_λ)`
/// multiplied through by `u ∏_k (u - c_k)`.
pub fn fused_r_matrix_sides(shape: &YoungDiagram, n_gl: usize) -> (TensorMatrix<ParamPoly<Rational>>, TensorMatrix<ParamPoly<Rational>>) {
    let n = shape.size();
    let f: TensorMatrix<ParamPoly<Rational>> = lift(&f_lambda(shape, n_gl).embed(1, n + 1));
    let u = ParamPoly::linear(&rat(0), &rat(1));
    let transposition = |k: usize| Permutation::transposition(n + 1, 1, k + 2).expect("in range");
    let mut denominators = ParamPoly::<Rational>::one();
    for &c in &shape.contents() {
        denominators = denominators.mul_ref(&ParamPoly::linear(&rat(-c), &rat(1)));
    }
    // u·(1 - ΣP/u) = u - ΣP
    let mut lhs = f.left_scalar(&u);
    for k in 0..n {
        lhs = lhs.sub(&f.permute_left(&transposition(k)));
    }
    let lhs = lhs.left_scalar(&denominators);
    // u·∏ ((u - c_k) - P_{1,k+1}) applied right to left onto F
    let mut rhs = f.left_scalar(&u);
    for (k, &c) in shape.contents().iter().enumerate().rev() {
        let shifted = ParamPoly::linear(&rat(-c), &rat(1));
        rhs = rhs.left_scalar(&shifted).sub(&rhs.permute_left(&transposition(k)));
    }
    (lhs, rhs)
}

pub fn verify_fused_r_matrix(shape: &YoungDiagram, n_gl: usize) -> bool {
    let (lhs, rhs) = fused_r_matrix_sides(shape, n_gl);
    lhs == rhs
}

/// `ρ(E_ij) = Σ_k ι_k(e_ij)` on `(C^N)^{⊗m}`, extended multiplicatively.
pub struct TensorRepresentation {
    local_dim: usize,
    factors: usize,
    generators: BTreeMap<(usize, usize), TensorMatrix<Rational>>,
}

impl TensorRepresentation {
    pub fn new(local_dim: usize, factors: usize) -> Self {
        let mut generators = BTreeMap::new();
        for i in 0..local_dim {
            for j in 0..local_dim {
                let mut sum = TensorMatrix::zero(local_dim, factors);
                for k in 0..factors {
                    sum = sum.add(&matrix_unit(local_dim, factors, k, i, j));
                }
                generators.insert((i + 1, j + 1), sum);
            }
        }
        TensorRepresentation { local_dim, factors, generators }
    }

    pub fn apply(&self, x: &UglElement) -> TensorMatrix<Rational> {
        let mut out = TensorMatrix::zero(self.local_dim, self.factors);
        for (mono, coeff) in x.terms() {
            let mut m = TensorMatrix::identity(self.local_dim, self.factors);
            for g in mono {
                m = m.mul(&self.generators[&(g.i as usize, g.j as usize)]);
            }
            out = out.add(&m.scale(coeff));
        }
        out
    }
}

/// Whether `F_μ ρ_μ(x) F_μ = 0` for every entry `x` of `E_λ(0)`.
pub fn verify_vanishing(lambda: &YoungDiagram, mu: &YoungDiagram, n_gl: usize) -> bool {
    let e0 = capelli_matrix_polynomial(lambda, n_gl).matrix.map(|p| p.eval(&rat(0)));
    let m = mu.size();
    let rep = TensorRepresentation::new(n_gl, m);
    let f = f_lambda(mu, n_gl);
    let vanishes = e0.entries().all(|(_, _, x)| f.mul(&rep.apply(x)).mul(&f).is_zero());
    vanishes
}

/// `R_λμ(z) = (F_λ ⊗ id) ∏_{(k,l)} R_{k,l+n}(c_k, d_l + z) (id ⊗ F_μ)` as
/// `G(z) / D(z)` with `D = ∏ (c_k - d_l - z)`.
pub fn r_lambda_mu_cleared(lambda: &YoungDiagram, mu: &YoungDiagram, n_gl: usize) -> (TensorMatrix<ParamPoly<Rational>>, UniPoly) {
    let (n, m) = (lambda.size(), mu.size());
    let total = n + m;
    let (c, d) = (lambda.contents(), mu.contents());
    let mut acc: TensorMatrix<ParamPoly<Rational>> = lift(&f_lambda(lambda, n_gl).embed(0, total));
    let mut den = UniPoly::constant(Var::Z, rat(1));
    for (k, ck) in c.iter().enumerate() {
        for (l, dl) in d.iter().enumerate() {
            let sigma = Permutation::transposition(total, k + 1, n + l + 1).expect("in range");
            let linear = ParamPoly::linear(&rat(ck - dl), &-rat(1));
            acc = acc.map(|x| x.mul_ref(&linear)).sub(&acc.permute_right(&sigma));
            den = &den * &linear.to_unipoly(Var::Z);
        }
    }
    let acc = acc.mul(&lift(&f_lambda(mu, n_gl).embed(n, total)));
    (acc, den)
}

pub fn r_lambda_mu(lambda: &YoungDiagram, mu: &YoungDiagram, n_gl: usize) -> TensorMatrix<RationalFunction> {
    let (num, den) = r_lambda_mu_cleared(lambda, mu, n_gl);
    num.map(|g| RationalFunction::new(g.to_unipoly(Var::Z), den.clone()).expect("nonzero denominator"))
}

/// Order of the pole of `R_λμ(z)` at `z = 0`.
pub fn r_lambda_mu_pole_order(lambda: &YoungDiagram, mu: &YoungDiagram, n_gl: usize) -> u32 {
    let (num, den) = r_lambda_mu_cleared(lambda, mu, n_gl);
    let singular = den.valuation_at(&rat(0)).unwrap_or(0);
    let min_val = num.entries().filter_map(|(_, _, g)| g.to_unipoly(Var::Z).valuation_at(&rat(0))).min();
    min_val.map_or(0, |v| singular.saturating_sub(v))
}

/// Every `z`-coefficient of `e_λ(z)` commutes with `gl_N`.
pub fn e_lambda_coefficients_central(shape: &YoungDiagram, n_gl: usize) -> Result<bool, UglError> {
    for c in e_lambda_poly(shape, n_gl).coeffs() {
        if !c.is_central_in(n_gl)? {
            return Ok(false);
        }
    }
    Ok(true)
}
