//! Ordered products of `φ_ij(u, v) = 1 - (i j)/(u - v)` in the group algebra.
//!
//! Parameters are one-variable affine expressions, so every coefficient is a
//! reduced [`RationalFunction`]. The multivariate restriction to equal
//! parameters within each row of the column tableau is taken along the line
//! `z_i = r_i·t`, `r_i` the row of `i`, and the fusion limit is `t → 0`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exact::{ExactError, RationalFunction, UniPoly, Var};
use crate::ring::rat;
use crate::symgroup::{GroupAlgebraElement, Permutation};
use crate::young::YoungDiagram;
use crate::Rational;

pub type RfElement = GroupAlgebraElement<RationalFunction>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FusionError {
    #[error("factor φ_{i}{j} has identical arguments")]
    CoincidentArguments { i: usize, j: usize },
    #[error("coefficient of {perm} is singular at the limit point: {source}")]
    Singular { perm: Permutation, source: ExactError },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// `a + b·x` for the free parameter `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub a: Rational,
    pub b: Rational,
}

impl Affine {
    pub fn new(a: Rational, b: Rational) -> Self {
        Affine { a, b }
    }

    pub fn constant(a: Rational) -> Self {
        Affine { a, b: Rational::zero() }
    }

    pub fn to_function(&self, var: Var) -> RationalFunction {
        RationalFunction::from_poly(UniPoly::linear(var, self.a.clone(), self.b.clone()))
    }
}

/// `φ_ij(u, v)` with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiFactor {
    pub i: usize,
    pub j: usize,
    pub u: Affine,
    pub v: Affine,
}

impl PhiFactor {
    /// `-1/(u - v)`, the coefficient of `(i j)`.
    fn transposition_coeff(&self, var: Var) -> Result<RationalFunction, FusionError> {
        let diff = Affine::new(&self.u.a - &self.v.a, &self.u.b - &self.v.b);
        if diff.a.is_zero() && diff.b.is_zero() {
            return Err(FusionError::CoincidentArguments { i: self.i, j: self.j });
        }
        let one = RationalFunction::constant(var, Rational::one());
        Ok(-(&one / &diff.to_function(var)))
    }
}

/// Right-multiplies `acc` by each factor in turn.
pub fn multiply_factors(acc: &RfElement, factors: &[PhiFactor], var: Var) -> Result<RfElement, FusionError> {
    let one = RationalFunction::constant(var, Rational::one());
    let mut acc = acc.clone();
    for f in factors {
        acc = acc.mul_transposition_factor(&one, &f.transposition_coeff(var)?, f.i - 1, f.j - 1);
    }
    Ok(acc)
}

/// The line `z_i = r_i·t` through the fusion point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionLine {
    pub shape: YoungDiagram,
    pub contents: Vec<i64>,
    pub multipliers: Vec<Rational>,
}

impl FusionLine {
    pub fn new(shape: &YoungDiagram) -> Self {
        FusionLine {
            shape: shape.clone(),
            contents: shape.contents(),
            multipliers: shape.column_tableau_rows().into_iter().map(|r| rat(r as i64)).collect(),
        }
    }

    /// `φ_ij(c_i + r_i t, c_j + r_j t)`.
    pub fn factor(&self, i: usize, j: usize) -> PhiFactor {
        let arg = |k: usize| Affine::new(rat(self.contents[k - 1]), self.multipliers[k - 1].clone());
        PhiFactor { i, j, u: arg(i), v: arg(j) }
    }
}

/// Pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn lexicographic_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Which half of the `Υ·Θ` decomposition a pair belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// `i` precedes `j` in the row reading of the column tableau.
    A,
    /// `i` follows `j`.
    B,
}

/// All pairs in the `≺` order: the `A` pairs by increasing `j`, then the `B`
/// pairs by decreasing `j`; for equal `j` in the order of the row reading.
pub fn prec_order(shape: &YoungDiagram) -> Vec<(usize, usize, PairKind)> {
    let word = shape.column_tableau().row_reading_word();
    let n = word.len();
    let position = |k: usize| word.iter().position(|&x| x == k).expect("entry present");
    let mut a_pairs = Vec::new();
    let mut b_pairs = Vec::new();
    for j in 1..=n {
        let pj = position(j);
        for &i in &word {
            if i >= j {
                continue;
            }
            if position(i) < pj {
                a_pairs.push((i, j, PairKind::A));
            } else {
                b_pairs.push((i, j, PairKind::B));
            }
        }
    }
    // stable sort keeps reading order within equal j
    b_pairs.sort_by_key(|x| core::cmp::Reverse(x.1));
    a_pairs.extend(b_pairs);
    a_pairs
}

fn line_product(shape: &YoungDiagram, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<RfElement, FusionError> {
    let line = FusionLine::new(shape);
    let factors: Vec<PhiFactor> = pairs.into_iter().map(|(i, j)| line.factor(i, j)).collect();
    multiply_factors(&GroupAlgebraElement::one(shape.size()), &factors, Var::T)
}

/// The product over lexicographically ordered pairs along the fusion line.
pub fn fusion_product(shape: &YoungDiagram) -> Result<RfElement, FusionError> {
    line_product(shape, lexicographic_pairs(shape.size()))
}

/// The same product with the factors rearranged in the `≺` order.
pub fn fusion_product_prec(shape: &YoungDiagram) -> Result<RfElement, FusionError> {
    line_product(shape, prec_order(shape).into_iter().map(|(i, j, _)| (i, j)))
}

/// Product of the factors of one kind, in the `≺` order.
pub fn partial_product(shape: &YoungDiagram, kind: PairKind) -> Result<RfElement, FusionError> {
    let pairs = prec_order(shape).into_iter().filter(|p| p.2 == kind).map(|(i, j, _)| (i, j));
    line_product(shape, pairs)
}

/// Coefficientwise value at `point`.
pub fn limit(x: &RfElement, point: &Rational) -> Result<GroupAlgebraElement<Rational>, FusionError> {
    let mut out = GroupAlgebraElement::zero(x.degree());
    for (perm, coeff) in x.terms() {
        let value = coeff
            .limit_at(point)
            .map_err(|source| FusionError::Singular { perm: perm.clone(), source })?;
        out.add_term(perm.clone(), value);
    }
    Ok(out)
}

/// Maximal pole order at `point` over all coefficients.
pub fn pole_order(x: &RfElement, point: &Rational) -> u32 {
    x.terms().map(|(_, c)| c.pole_order_at(point)).max().unwrap_or(0)
}

pub fn fusion_limit(shape: &YoungDiagram) -> Result<GroupAlgebraElement<Rational>, FusionError> {
    limit(&fusion_product(shape)?, &Rational::zero())
}

/// Value at the fusion point of the product of the `A` factors.
pub fn upsilon_limit(shape: &YoungDiagram) -> Result<GroupAlgebraElement<Rational>, FusionError> {
    limit(&partial_product(shape, PairKind::A)?, &Rational::zero())
}

/// Value at the fusion point of the product of the `B` factors.
pub fn theta_limit(shape: &YoungDiagram) -> Result<GroupAlgebraElement<Rational>, FusionError> {
    limit(&partial_product(shape, PairKind::B)?, &Rational::zero())
}

fn constant_element(x: &GroupAlgebraElement<Rational>, var: Var) -> RfElement {
    x.map_coeffs(|c| RationalFunction::constant(var, c.clone()))
}

/// `Φ_λμ(z)` with its denominators cleared: returns `(G, D)` with
/// `Φ_λμ(z) = G(z) / D(z)`, `D = ∏ (c_i - d_j - z)` over all pairs and `G`
/// polynomial in `z`.
pub fn phi_lambda_mu_cleared(
    lambda: &YoungDiagram,
    mu: &YoungDiagram,
) -> (GroupAlgebraElement<UniPoly>, UniPoly) {
    let (n, m) = (lambda.size(), mu.size());
    let total = n + m;
    let c = lambda.contents();
    let d = mu.contents();
    let to_poly = |x: &Rational| UniPoly::constant(Var::Z, x.clone());
    let phi_l = lambda.symmetrizers().phi.embed_shift(0, total).expect("fits");
    let phi_m = mu.symmetrizers().phi.embed_shift(n, total).expect("fits");
    let mut acc = phi_l.map_coeffs(to_poly);
    let mut den = UniPoly::constant(Var::Z, Rational::one());
    let minus_one = UniPoly::constant(Var::Z, -Rational::one());
    for (i, ci) in c.iter().enumerate() {
        for (j, dj) in d.iter().enumerate() {
            // (c_i - d_j - z) - (i, j+n)
            let linear = UniPoly::linear(Var::Z, rat(ci - dj), -Rational::one());
            acc = acc.mul_transposition_factor(&linear, &minus_one, i, n + j);
            den = &den * &linear;
        }
    }
    let acc = acc.try_mul(&phi_m.map_coeffs(to_poly)).expect("same degree");
    (acc, den)
}

/// `Φ_λ · ∏ φ_{i,j+n}(c_i, d_j + z) · Φ_μ^∨` in `C·S_{n+m}` over `Q(z)`.
pub fn phi_lambda_mu(lambda: &YoungDiagram, mu: &YoungDiagram) -> RfElement {
    let (num, den) = phi_lambda_mu_cleared(lambda, mu);
    num.map_coeffs(|g| RationalFunction::new(g.clone(), den.clone()).expect("nonzero denominator"))
}

/// Order of the pole of `Φ_λμ(z)` at `z = 0`, maximised over coefficients.
pub fn pole_order_phi(lambda: &YoungDiagram, mu: &YoungDiagram) -> u32 {
    dense::pole_order(lambda, mu).unwrap_or_else(|| pole_order_phi_exact(lambda, mu))
}

/// Same as [`pole_order_phi`], always through big-rational polynomials.
pub fn pole_order_phi_exact(lambda: &YoungDiagram, mu: &YoungDiagram) -> u32 {
    let (num, den) = phi_lambda_mu_cleared(lambda, mu);
    let singular = den.valuation_at(&Rational::zero()).unwrap_or(0);
    let Some(min_val) = num.terms().filter_map(|(_, g)| g.valuation_at(&Rational::zero())).min() else {
        return 0;
    };
    singular.saturating_sub(min_val)
}

/// Machine-integer kernel for the cleared numerator of `Φ_λμ(z)`.
///
/// The group algebra of `S_{n+m}` is stored densely, indexed by the
/// lexicographic rank of each permutation. Both symmetrizers are scaled to
/// integer coefficients, which leaves valuations unchanged. Returns `None`
/// on `i128` overflow.
mod dense {
    use alloc::vec;
    use alloc::vec::Vec;

    use num_integer::Integer as _;
    use num_traits::{One, ToPrimitive};

    use crate::symgroup::{GroupAlgebraElement, Permutation};
    use crate::young::YoungDiagram;
    use crate::{Integer, Rational};

    type Poly = Vec<i128>;

    fn rank(images: &[u8], factorials: &[usize]) -> usize {
        let n = images.len();
        let mut r = 0;
        for i in 0..n {
            let smaller = images[i + 1..].iter().filter(|&&x| x < images[i]).count();
            r += smaller * factorials[n - 1 - i];
        }
        r
    }

    fn integer_terms(x: &GroupAlgebraElement<Rational>) -> Option<Vec<(Permutation, i128)>> {
        let lcm = x.terms().fold(Integer::one(), |acc, (_, c)| acc.lcm(c.denom()));
        x.terms()
            .map(|(p, c)| (c * Rational::from_integer(lcm.clone())).to_integer().to_i128().map(|v| (p.clone(), v)))
            .collect()
    }

    fn add_scaled(target: &mut Poly, source: &[i128], factor: i128) -> Option<()> {
        if target.len() < source.len() {
            target.resize(source.len(), 0);
        }
        for (t, s) in target.iter_mut().zip(source) {
            *t = t.checked_add(s.checked_mul(factor)?)?;
        }
        Some(())
    }

    /// `target += source · (a + b z)`.
    fn add_times_linear(target: &mut Poly, source: &[i128], a: i128, b: i128) -> Option<()> {
        if target.len() < source.len() + 1 {
            target.resize(source.len() + 1, 0);
        }
        for (k, s) in source.iter().enumerate() {
            target[k] = target[k].checked_add(s.checked_mul(a)?)?;
            target[k + 1] = target[k + 1].checked_add(s.checked_mul(b)?)?;
        }
        Some(())
    }

    fn valuation(p: &[i128]) -> Option<u32> {
        p.iter().position(|&c| c != 0).map(|k| k as u32)
    }

    pub(super) fn pole_order(lambda: &YoungDiagram, mu: &YoungDiagram) -> Option<u32> {
        let (n, m) = (lambda.size(), mu.size());
        let total = n + m;
        if total > 10 {
            return None;
        }
        let mut factorials = vec![1usize; total + 1];
        for k in 1..=total {
            factorials[k] = factorials[k - 1] * k;
        }
        let perms = Permutation::all(total);
        let (c, d) = (lambda.contents(), mu.contents());

        let mut state: Vec<Poly> = vec![Vec::new(); perms.len()];
        for (p, v) in integer_terms(&lambda.symmetrizers().phi.embed_shift(0, total).ok()?)? {
            state[rank(p.images_zero_based(), &factorials)] = vec![v];
        }
        let mut singular = 0;
        let mut images = vec![0u8; total];
        for (i, ci) in c.iter().enumerate() {
            for (j, dj) in d.iter().enumerate() {
                let a = i128::from(ci - dj);
                if a == 0 {
                    singular += 1;
                }
                let mut next: Vec<Poly> = vec![Vec::new(); perms.len()];
                for (idx, poly) in state.iter().enumerate() {
                    if poly.is_empty() {
                        continue;
                    }
                    add_times_linear(&mut next[idx], poly, a, -1)?;
                    images.copy_from_slice(perms[idx].images_zero_based());
                    images.swap(i, n + j);
                    add_scaled(&mut next[rank(&images, &factorials)], poly, -1)?;
                }
                for poly in next.iter_mut() {
                    if poly.iter().all(|&x| x == 0) {
                        poly.clear();
                    }
                }
                state = next;
            }
        }
        let right = integer_terms(&mu.symmetrizers().phi.embed_shift(n, total).ok()?)?;
        let mut out: Vec<Poly> = vec![Vec::new(); perms.len()];
        for (idx, poly) in state.iter().enumerate() {
            if poly.is_empty() {
                continue;
            }
            for (q, v) in &right {
                let product = perms[idx].compose(q).ok()?;
                add_scaled(&mut out[rank(product.images_zero_based(), &factorials)], poly, *v)?;
            }
        }
        let min_val = out.iter().filter_map(|p| valuation(p)).min();
        Some(min_val.map_or(0, |v| (singular as u32).saturating_sub(v)))
    }
}

/// Both sides of `∏_i φ_{1,i+1}(u, c_i)·Φ^∨ = (1 - Σ_i (1,i+1)/u)·Φ^∨`.
pub fn transposition_sum_sides(shape: &YoungDiagram) -> Result<(RfElement, RfElement), FusionError> {
    let n = shape.size();
    let phi = constant_element(&shape.symmetrizers().phi.embed_shift(1, n + 1).expect("fits"), Var::U);
    let u = Affine::new(Rational::zero(), Rational::one());
    let factors: Vec<PhiFactor> = shape
        .contents()
        .iter()
        .enumerate()
        .map(|(k, &c)| PhiFactor { i: 1, j: k + 2, u: u.clone(), v: Affine::constant(rat(c)) })
        .collect();
    let lhs = multiply_factors(&GroupAlgebraElement::one(n + 1), &factors, Var::U)?.try_mul(&phi).expect("same degree");
    let mut bracket = GroupAlgebraElement::one(n + 1);
    let coeff = -(&RationalFunction::constant(Var::U, Rational::one()) / &RationalFunction::variable(Var::U));
    for k in 2..=n + 1 {
        bracket.add_term(Permutation::transposition(n + 1, 1, k).expect("in range"), coeff.clone());
    }
    let rhs = bracket.try_mul(&phi).expect("same degree");
    Ok((lhs, rhs))
}

pub fn verify_transposition_sum(shape: &YoungDiagram) -> Result<bool, FusionError> {
    let (lhs, rhs) = transposition_sum_sides(shape)?;
    Ok(lhs == rhs)
}

/// Outcome of one local identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
}

mod local {
    use super::*;

    pub(super) type Arg = RationalFunction;

    pub(super) fn phi(n: usize, i: usize, j: usize, u: &Arg, v: &Arg) -> RfElement {
        let diff = u - v;
        assert!(!diff.is_zero(), "φ_{i}{j} with equal arguments");
        let coeff = -(&Arg::constant(diff.var(), Rational::one()) / &diff);
        GroupAlgebraElement::linear_transposition(n, Arg::constant(diff.var(), Rational::one()), i, j, coeff)
            .expect("in range")
    }

    pub(super) fn mul(a: &RfElement, b: &RfElement) -> RfElement {
        a.try_mul(b).expect("same degree")
    }

    /// `φ_ij(u,v) φ_ik(u,w) φ_jk(v,w)` in `S_3` with `(i,j,k) = (1,2,3)`.
    pub(super) fn phi3(u: &Arg, v: &Arg, w: &Arg) -> RfElement {
        mul(&mul(&phi(3, 1, 2, u, v), &phi(3, 1, 3, u, w)), &phi(3, 2, 3, v, w))
    }

    pub(super) fn phi3_reversed(u: &Arg, v: &Arg, w: &Arg) -> RfElement {
        mul(&mul(&phi(3, 2, 3, v, w), &phi(3, 1, 3, u, w)), &phi(3, 1, 2, u, v))
    }

    /// `a + b·(i j) + c·(k l)` in `S_n` with constant coefficients.
    pub(super) fn combo(n: usize, a: &Arg, terms: &[(usize, usize, Arg)]) -> RfElement {
        let mut out = GroupAlgebraElement::from_perm(Permutation::identity(n), a.clone());
        for (i, j, c) in terms {
            out.add_term(Permutation::transposition(n, *i, *j).expect("in range"), c.clone());
        }
        out
    }

    pub(super) fn konst(var: Var, x: Rational) -> Arg {
        Arg::constant(var, x)
    }
}

/// The Yang–Baxter relation, the commutation of disjoint factors, and the
/// restriction formulas used for regularity, each checked at three generic
/// rational samples with one variable left free, and once along a generic line.
pub fn verify_local_identities() -> Vec<IdentityCheck> {
    use local::*;
    use crate::ring::frac;

    let samples: [(Rational, Rational, Rational); 3] =
        [(frac(7, 3), frac(-5, 11), frac(13, 17)), (frac(-19, 7), frac(3, 29), frac(31, 5)), (frac(2, 13), frac(41, 9), frac(-23, 6))];
    let t = || Arg::variable(Var::T);
    // generic line: x = a + b t
    let line = |a: i64, b: i64| Arg::from_poly(UniPoly::linear(Var::T, rat(a), rat(b)));
    let one = |var: Var| konst(var, Rational::one());
    let mut checks = Vec::new();
    let mut record = |name: &'static str, passed: bool| checks.push(IdentityCheck { name, passed });

    // Yang-Baxter, one of u, v, w free in turn
    let mut ok = true;
    for (k, (a, b, c)) in samples.iter().enumerate() {
        let (u, v, w) = match k {
            0 => (Arg::variable(Var::U), konst(Var::U, b.clone()), konst(Var::U, c.clone())),
            1 => (konst(Var::V, a.clone()), Arg::variable(Var::V), konst(Var::V, c.clone())),
            _ => (konst(Var::W, a.clone()), konst(Var::W, b.clone()), Arg::variable(Var::W)),
        };
        ok &= phi3(&u, &v, &w) == phi3_reversed(&u, &v, &w);
    }
    record("yang-baxter (samples)", ok);
    let (u, v, w) = (t(), line(3, 2), line(-5, 7));
    record("yang-baxter (line)", phi3(&u, &v, &w) == phi3_reversed(&u, &v, &w));

    // disjoint factors commute in S_4
    let mut ok = true;
    for (a, b, c) in &samples {
        let z = Arg::variable(Var::Z);
        let (u, v, w) = (konst(Var::Z, a.clone()), konst(Var::Z, b.clone()), konst(Var::Z, c.clone()));
        let x = phi(4, 1, 2, &u, &v);
        let y = phi(4, 3, 4, &z, &w);
        ok &= mul(&x, &y) == mul(&y, &x);
    }
    record("disjoint commutation (samples)", ok);
    let (x, y) = (phi(4, 1, 2, &t(), &line(1, 3)), phi(4, 3, 4, &line(-2, 5), &line(4, -1)));
    record("disjoint commutation (line)", mul(&x, &y) == mul(&y, &x));

    // restriction u = v ± 1: (1 ∓ (12))(1 - ((13)+(23))/(v - w))
    let restrict_first = |v: &Arg, w: &Arg, sign: i64| {
        let var = if v.is_polynomial() && !v.numer().is_constant() { v.var() } else { w.var() };
        let u = v + &konst(var, rat(sign));
        let lhs = phi3(&u, v, w);
        let inv = -(&one(var) / &(v - w));
        let rhs = mul(&combo(3, &one(var), &[(1, 2, konst(var, rat(-sign)))]), &combo(3, &one(var), &[(1, 3, inv.clone()), (2, 3, inv)]));
        lhs == rhs
    };
    let mut ok = true;
    for (a, _, _) in &samples {
        for sign in [1, -1] {
            ok &= restrict_first(&konst(Var::W, a.clone()), &Arg::variable(Var::W), sign);
        }
    }
    record("restriction u = v ± 1 (samples)", ok);
    record("restriction u = v ± 1 (line)", [1, -1].iter().all(|&s| restrict_first(&t(), &line(-3, 2), s)));

    // restriction w = v ± 1: (1 - ((12)+(13))/(u - v))(1 ± (23))
    let restrict_last = |u: &Arg, v: &Arg, sign: i64| {
        let var = if u.is_polynomial() && !u.numer().is_constant() { u.var() } else { v.var() };
        let w = v + &konst(var, rat(sign));
        let lhs = phi3(u, v, &w);
        let inv = -(&one(var) / &(u - v));
        let rhs = mul(&combo(3, &one(var), &[(1, 2, inv.clone()), (1, 3, inv)]), &combo(3, &one(var), &[(2, 3, konst(var, rat(sign)))]));
        lhs == rhs
    };
    let mut ok = true;
    for (_, b, _) in &samples {
        for sign in [1, -1] {
            ok &= restrict_last(&Arg::variable(Var::U), &konst(Var::U, b.clone()), sign);
        }
    }
    record("restriction w = v ± 1 (samples)", ok);
    record("restriction w = v ± 1 (line)", [1, -1].iter().all(|&s| restrict_last(&line(5, 3), &t(), s)));

    // value at w = v - 1 of φ_123(v-1, v, w)·φ_32(w, v) is -2(13)(1 + (23))
    let expected = |var: Var| mul(&combo(3, &konst(var, Rational::zero()), &[(1, 3, konst(var, rat(-2)))]), &combo(3, &one(var), &[(2, 3, one(var))]));
    let merged_value = |v: &Arg, w: &Arg, var: Var, point: &Rational| {
        let u = v - &one(var);
        let product = mul(&phi3(&u, v, w), &phi(3, 3, 2, w, v));
        match limit(&product, point) {
            Ok(value) => constant_element(&value, var) == expected(var),
            Err(_) => false,
        }
    };
    let mut ok = true;
    for (_, _, c) in &samples {
        let v = konst(Var::W, c.clone());
        ok &= merged_value(&v, &Arg::variable(Var::W), Var::W, &(c - Rational::one()));
    }
    record("value at w = v - 1 (samples)", ok);
    // approach (v, w) = (4, 3) along v = 4 + t, w = 3 + 3t
    record("value at w = v - 1 (line)", merged_value(&line(4, 1), &line(3, 3), Var::T, &Rational::zero()));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::frac;
    use alloc::vec;

    fn shape(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn binomial(n: usize, sign: i64, i: usize, j: usize) -> GroupAlgebraElement<Rational> {
        GroupAlgebraElement::linear_transposition(n, rat(1), i, j, rat(sign)).unwrap()
    }

    #[test]
    fn single_row_product_is_constant() {
        let p = fusion_product(&shape("2")).unwrap();
        assert!(p.terms().all(|(_, c)| c.constant_value().is_some()));
        assert_eq!(limit(&p, &Rational::zero()).unwrap(), binomial(2, 1, 1, 2));
    }

    #[test]
    fn single_column_product_depends_on_t() {
        // u - v = (c1 - c2) + (r1 - r2)t = 1 - t
        let p = fusion_product(&shape("1,1")).unwrap();
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        let expected = RationalFunction::new(
            UniPoly::constant(Var::T, rat(-1)),
            UniPoly::linear(Var::T, rat(1), rat(-1)),
        )
        .unwrap();
        assert_eq!(p.coeff(&swap), expected);
        assert_eq!(fusion_limit(&shape("1,1")).unwrap(), binomial(2, -1, 1, 2));
    }

    #[test]
    fn fusion_limit_with_a_singular_pair() {
        let l = shape("2,2");
        assert_eq!(l.contents()[0], l.contents()[3]);
        let raw = fusion_product(&l).unwrap();
        assert!(raw.terms().all(|(_, c)| c.valuation_at(&Rational::zero()).unwrap_or(0) >= 0));
        assert_eq!(fusion_limit(&l).unwrap(), l.symmetrizers().phi);
    }

    #[test]
    fn prec_order_for_hook() {
        // column tableau of (2,1): rows [1,3], [2]; reading word 1 3 2
        let order = prec_order(&shape("2,1"));
        assert_eq!(order, vec![(1, 2, PairKind::A), (1, 3, PairKind::A), (2, 3, PairKind::B)]);
    }

    #[test]
    fn upsilon_for_hook() {
        let expected = binomial(3, -1, 1, 2).try_mul(&binomial(3, 1, 1, 3)).unwrap();
        assert_eq!(upsilon_limit(&shape("2,1")).unwrap(), expected);
    }

    #[test]
    fn reordering_does_not_change_the_product() {
        for n in 1..=4 {
            for l in YoungDiagram::all_of_size(n) {
                assert_eq!(fusion_product(&l).unwrap(), fusion_product_prec(&l).unwrap(), "{l}");
            }
        }
    }

    #[test]
    fn phi_pair_for_single_boxes() {
        let one = shape("1");
        let x = phi_lambda_mu(&one, &one);
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        let inv_z = RationalFunction::new(UniPoly::constant(Var::Z, rat(1)), UniPoly::variable(Var::Z)).unwrap();
        assert_eq!(x.coeff(&swap), inv_z);
        assert_eq!(x.identity_coeff(), RationalFunction::constant(Var::Z, rat(1)));
        assert_eq!(pole_order_phi(&one, &one), 1);
        assert_eq!(pole_order(&x, &Rational::zero()), 1);
    }

    #[test]
    fn phi_pair_regular_when_not_contained() {
        assert_eq!(pole_order_phi(&shape("2"), &shape("1,1")), 0);
        assert!(pole_order_phi(&shape("2,1"), &shape("2,1")) <= 1);
        assert!(pole_order_phi(&shape("1,1"), &shape("1,1")) <= 1);
    }

    #[test]
    fn dense_kernel_matches_exact_path() {
        let shapes: Vec<YoungDiagram> = (0..=3).flat_map(YoungDiagram::all_of_size).collect();
        for l in &shapes {
            for m in &shapes {
                assert_eq!(dense::pole_order(l, m), Some(pole_order_phi_exact(l, m)), "{l} | {m}");
            }
        }
    }

    #[test]
    fn cleared_and_reduced_forms_agree() {
        let (l, m) = (shape("2,1"), shape("2"));
        let direct = {
            let n = l.size();
            let total = n + m.size();
            let mut acc = constant_element(&l.symmetrizers().phi.embed_shift(0, total).unwrap(), Var::Z);
            let (c, d) = (l.contents(), m.contents());
            let factors: Vec<PhiFactor> = (0..n)
                .flat_map(|i| (0..m.size()).map(move |j| (i, j)))
                .map(|(i, j)| PhiFactor {
                    i: i + 1,
                    j: j + n + 1,
                    u: Affine::constant(rat(c[i])),
                    v: Affine::new(rat(d[j]), rat(1)),
                })
                .collect();
            acc = multiply_factors(&acc, &factors, Var::Z).unwrap();
            acc.try_mul(&constant_element(&m.symmetrizers().phi.embed_shift(n, total).unwrap(), Var::Z)).unwrap()
        };
        assert_eq!(phi_lambda_mu(&l, &m), direct);
    }

    #[test]
    fn transposition_sum_small_shapes() {
        for s in ["", "1", "2", "1,1", "2,1"] {
            assert!(verify_transposition_sum(&shape(s)).unwrap(), "{s}");
        }
    }

    #[test]
    fn transposition_sum_for_one_row() {
        // φ_12(u,0) φ_13(u,1) (1 + (23)) = (1 - ((12)+(13))/u)(1 + (23))
        let (lhs, rhs) = transposition_sum_sides(&shape("2")).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 6);
    }

    #[test]
    fn local_identities_hold() {
        for check in verify_local_identities() {
            assert!(check.passed, "{}", check.name);
        }
    }

    #[test]
    fn coincident_arguments_are_rejected() {
        let f = PhiFactor { i: 1, j: 2, u: Affine::constant(frac(1, 2)), v: Affine::constant(frac(1, 2)) };
        assert_eq!(
            multiply_factors(&GroupAlgebraElement::one(2), &[f], Var::T),
            Err(FusionError::CoincidentArguments { i: 1, j: 2 })
        );
    }
}
