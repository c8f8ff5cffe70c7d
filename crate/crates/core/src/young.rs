//! Young diagrams, tableaux, contents, symmetrizers and characters.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::ring::factorial;
use crate::symgroup::{GroupAlgebraElement, Permutation};
use crate::{Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum YoungError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cannot parse {0:?} as a partition")]
    Parse(String),
    #[error("permutation of degree {got} given for a diagram with {expected} boxes")]
    DegreeMismatch { expected: usize, got: usize },
}

/// A partition, stored as its weakly decreasing row lengths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self, YoungError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(YoungError::NotAPartition(parts));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Column lengths `λ′`.
    pub fn conjugate(&self) -> YoungDiagram {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect();
        YoungDiagram { parts }
    }

    /// Number of boxes on the main diagonal.
    pub fn rank(&self) -> usize {
        self.parts.iter().enumerate().filter(|&(i, &p)| p > i).count()
    }

    /// Whether `self ⊆ other` as diagrams.
    pub fn contains_in(&self, other: &YoungDiagram) -> bool {
        self.parts.len() <= other.parts.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all_of_size(n: usize) -> Vec<YoungDiagram> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if remaining == 0 {
                out.push(YoungDiagram { parts: prefix.clone() });
                return;
            }
            for p in (1..=max.min(remaining)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Boxes `(row, col)` that can be removed leaving a diagram.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.parts.len())
            .filter(|&r| r + 1 == self.parts.len() || self.parts[r + 1] < self.parts[r])
            .map(|r| (r, self.parts[r] - 1))
            .collect()
    }

    fn without_box_in_row(&self, row: usize) -> YoungDiagram {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        YoungDiagram { parts }
    }

    /// Filling by columns, left to right, each column top to bottom.
    pub fn column_tableau(&self) -> StandardTableau {
        let mut rows: Vec<Vec<usize>> = self.parts.iter().map(|&p| vec![0; p]).collect();
        let mut next = 1;
        for (c, &height) in self.conjugate().parts.iter().enumerate() {
            for row in rows.iter_mut().take(height) {
                row[c] = next;
                next += 1;
            }
        }
        StandardTableau { shape: self.clone(), rows }
    }

    /// Filling by rows, top to bottom, each row left to right.
    pub fn row_tableau(&self) -> StandardTableau {
        let mut next = 0;
        let rows = self
            .parts
            .iter()
            .map(|&p| {
                let row = (next + 1..=next + p).collect();
                next += p;
                row
            })
            .collect();
        StandardTableau { shape: self.clone(), rows }
    }

    /// Contents `c_i = col - row` of the box holding `i` in the column tableau.
    pub fn contents(&self) -> Vec<i64> {
        self.column_tableau().contents()
    }

    /// Row index (1-based) of the box holding `i` in the column tableau.
    pub fn column_tableau_rows(&self) -> Vec<usize> {
        let t = self.column_tableau();
        (1..=self.size()).map(|k| t.position(k).0 + 1).collect()
    }

    /// All standard tableaux of this shape.
    pub fn standard_tableaux(&self) -> Vec<StandardTableau> {
        if self.parts.is_empty() {
            return vec![StandardTableau { shape: self.clone(), rows: Vec::new() }];
        }
        let n = self.size();
        let mut out = Vec::new();
        for (r, _) in self.corners() {
            for mut t in self.without_box_in_row(r).standard_tableaux() {
                if r == t.rows.len() {
                    t.rows.push(Vec::new());
                }
                t.rows[r].push(n);
                t.shape = self.clone();
                out.push(t);
            }
        }
        out.sort_by(|a, b| a.rows.cmp(&b.rows));
        out
    }

    /// `dim U_λ`, by counting standard tableaux.
    pub fn dimension(&self) -> Integer {
        fn count(shape: &YoungDiagram, memo: &mut BTreeMap<Vec<usize>, Integer>) -> Integer {
            if shape.parts.is_empty() {
                return Integer::one();
            }
            if let Some(v) = memo.get(&shape.parts) {
                return v.clone();
            }
            let mut total = Integer::zero();
            for (r, _) in shape.corners() {
                total += count(&shape.without_box_in_row(r), memo);
            }
            memo.insert(shape.parts.clone(), total.clone());
            total
        }
        count(self, &mut BTreeMap::new())
    }

    /// `n! / ∏ hook lengths`.
    pub fn hook_length_dimension(&self) -> Integer {
        let conj = self.conjugate();
        let mut hooks = Integer::one();
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p {
                hooks *= (p - c) + (conj.parts[c] - r) - 1;
            }
        }
        factorial(self.size()).to_integer() / hooks
    }

    /// Number of semistandard tableaux with entries in `1..=n_max`
    /// (hook-content formula).
    pub fn semistandard_count(&self, n_max: usize) -> Integer {
        let conj = self.conjugate();
        let mut value = Rational::one();
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p {
                let content = n_max as i64 + c as i64 - r as i64;
                let hook = (p - c) + (conj.parts[c] - r) - 1;
                value = value * Rational::from_integer(content.into()) / Rational::from_integer(hook.into());
            }
        }
        value.to_integer()
    }

    /// The row symmetrizer `P_λ`, the signed column symmetrizer `Q_λ`, and
    /// `Φ_λ = Q_λ P_λ Q_λ / ∏ λ′_s!`, all for the column tableau.
    pub fn symmetrizers(&self) -> Symmetrizers {
        let n = self.size();
        let t = self.column_tableau();
        let mut p = GroupAlgebraElement::one(n);
        for row in &t.rows {
            p = p.try_mul(&set_symmetrizer(n, row, false)).expect("same degree");
        }
        let mut q = GroupAlgebraElement::one(n);
        let mut norm = Rational::one();
        for column in t.columns() {
            norm *= factorial(column.len());
            q = q.try_mul(&set_symmetrizer(n, &column, true)).expect("same degree");
        }
        let phi = q.try_mul(&p).and_then(|qp| qp.try_mul(&q)).expect("same degree").scale(&norm.recip());
        Symmetrizers { p, q, phi }
    }

    /// The idempotent `(dim U_λ / n!)·Φ_λ`; its coefficients are the `y_σ`.
    pub fn y_coefficients(&self) -> GroupAlgebraElement<Rational> {
        let scale = Rational::from_integer(self.dimension()) / factorial(self.size());
        self.symmetrizers().phi.scale(&scale)
    }

    /// The irreducible character `χ_λ(σ)` (Murnaghan–Nakayama rule).
    pub fn character(&self, sigma: &Permutation) -> Result<Rational, YoungError> {
        if sigma.degree() != self.size() {
            return Err(YoungError::DegreeMismatch { expected: self.size(), got: sigma.degree() });
        }
        let ell = self.parts.len();
        let beta: Vec<usize> = self.parts.iter().enumerate().map(|(i, &p)| p + ell - 1 - i).collect();
        let value = murnaghan_nakayama(beta, &sigma.cycle_type());
        Ok(Rational::from_integer(value.into()))
    }
}

fn murnaghan_nakayama(beta: Vec<usize>, cycles: &[usize]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut next = beta.clone();
        next[idx] = b - k;
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(next, rest);
    }
    total
}

/// `Σ_σ σ` (or `Σ_σ sgn(σ) σ`) over permutations of the 1-based points in `set`.
fn set_symmetrizer(n: usize, set: &[usize], signed: bool) -> GroupAlgebraElement<Rational> {
    let mut out = GroupAlgebraElement::zero(n);
    for local in Permutation::all(set.len()) {
        let mut images: Vec<u8> = (0..n as u8).collect();
        for (k, &point) in set.iter().enumerate() {
            images[point - 1] = (set[local.apply(k)] - 1) as u8;
        }
        let sign = if signed { local.sign() } else { 1 };
        out.add_term(Permutation::from_zero_based(images), Rational::from_integer(sign.into()));
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct Symmetrizers {
    pub p: GroupAlgebraElement<Rational>,
    pub q: GroupAlgebraElement<Rational>,
    pub phi: GroupAlgebraElement<Rational>,
}

impl FromStr for YoungDiagram {
    type Err = YoungError;

    /// Comma-separated row lengths, e.g. `"3,2,1"`; the empty string is the
    /// empty diagram.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| YoungError::Parse(s.into()))?;
        Self::new(parts)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A filling of a diagram by `1..n` with rows and columns increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: YoungDiagram,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect()).collect()
    }

    /// 0-based `(row, col)` of the entry `k`. Panics if absent.
    pub fn position(&self, k: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == k) {
                return (r, c);
            }
        }
        panic!("entry {k} not in tableau");
    }

    /// `c_i = col - row` for `i = 1..n`.
    pub fn contents(&self) -> Vec<i64> {
        (1..=self.shape.size())
            .map(|k| {
                let (r, c) = self.position(k);
                c as i64 - r as i64
            })
            .collect()
    }

    /// Entries read row by row, top to bottom, left to right.
    pub fn row_reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        let mut all = self.row_reading_word();
        all.sort_unstable();
        rows_ok && cols_ok && all.iter().enumerate().all(|(k, &x)| x == k + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{frac, rat};

    fn shape(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn tr(n: usize, i: usize, j: usize) -> Permutation {
        Permutation::transposition(n, i, j).unwrap()
    }

    fn binomial(n: usize, sign: i64, i: usize, j: usize) -> GroupAlgebraElement<Rational> {
        GroupAlgebraElement::linear_transposition(n, rat(1), i, j, rat(sign)).unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(shape("3,2,1").parts(), &[3, 2, 1]);
        assert_eq!(shape(""), YoungDiagram::empty());
        assert!("1,2".parse::<YoungDiagram>().is_err());
        assert!("a".parse::<YoungDiagram>().is_err());
        assert!("2,0".parse::<YoungDiagram>().is_err());
    }

    #[test]
    fn contents_follow_the_column_tableau() {
        assert_eq!(shape("2").contents(), vec![0, 1]);
        assert_eq!(shape("1,1").contents(), vec![0, -1]);
        assert_eq!(shape("2,2").contents(), vec![0, -1, 1, 0]);
        assert_eq!(shape("3,1").column_tableau().rows(), &[vec![1, 3, 4], vec![2]]);
    }

    #[test]
    fn small_symmetrizers() {
        let s = shape("2").symmetrizers();
        assert_eq!(s.p, binomial(2, 1, 1, 2));
        assert_eq!(s.q, GroupAlgebraElement::one(2));
        assert_eq!(s.phi, binomial(2, 1, 1, 2));
        let s = shape("1,1").symmetrizers();
        assert_eq!(s.p, GroupAlgebraElement::one(2));
        assert_eq!(s.phi, binomial(2, -1, 1, 2));
    }

    #[test]
    fn hook_shape_symmetrizer() {
        // column tableau of (2,1): rows {1,3}, {2}; column {1,2}
        let expected = binomial(3, -1, 1, 2)
            .try_mul(&binomial(3, 1, 1, 3))
            .unwrap()
            .try_mul(&binomial(3, -1, 1, 2))
            .unwrap()
            .scale(&frac(1, 2));
        let phi = shape("2,1").symmetrizers().phi;
        assert_eq!(phi, expected);
        assert_eq!(phi.identity_coeff(), rat(1));
    }

    #[test]
    fn characters() {
        let c3 = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(shape("2,1").character(&c3).unwrap(), rat(-1));
        for p in Permutation::all(4) {
            assert_eq!(shape("4").character(&p).unwrap(), rat(1));
            assert_eq!(shape("1,1,1,1").character(&p).unwrap(), rat(p.sign().into()));
        }
        assert!(shape("2").character(&tr(3, 1, 2)).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(shape("5").dimension(), 1.into());
        assert_eq!(shape("2,1").dimension(), 2.into());
        assert_eq!(shape("2,2").dimension(), 2.into());
        assert_eq!(shape("3,2,1").dimension(), 16.into());
        assert_eq!(YoungDiagram::empty().dimension(), 1.into());
        for n in 0..=6 {
            let total: Integer = YoungDiagram::all_of_size(n).iter().map(|l| l.dimension().pow(2)).sum();
            assert_eq!(total, factorial(n).to_integer());
        }
    }

    #[test]
    fn tableau_enumeration() {
        let tabs = shape("3,2").standard_tableaux();
        assert_eq!(tabs.len(), 5);
        assert!(tabs.iter().all(StandardTableau::is_standard));
        assert!(shape("3,2").column_tableau().is_standard());
        assert!(shape("3,2").row_tableau().is_standard());
    }

    #[test]
    fn rank_and_containment() {
        assert_eq!(shape("2,2").rank(), 2);
        assert_eq!(shape("4").rank(), 1);
        assert_eq!(YoungDiagram::empty().rank(), 0);
        assert!(shape("2,1").contains_in(&shape("2,2")));
        assert!(!shape("2").contains_in(&shape("1,1")));
        assert!(YoungDiagram::empty().contains_in(&shape("1")));
    }

    #[test]
    fn idempotents() {
        assert_eq!(shape("1").y_coefficients(), GroupAlgebraElement::one(1));
        assert_eq!(shape("2").y_coefficients(), binomial(2, 1, 1, 2).scale(&frac(1, 2)));
        for n in 1..=4 {
            for l in YoungDiagram::all_of_size(n) {
                let y = l.y_coefficients();
                assert_eq!(y.try_mul(&y).unwrap(), y, "{l}");
                assert_eq!(l.symmetrizers().phi.alpha(), l.symmetrizers().phi);
            }
        }
    }

    #[test]
    fn empty_diagram_is_degenerate() {
        let s = YoungDiagram::empty().symmetrizers();
        assert_eq!(s.phi, GroupAlgebraElement::one(0));
        assert_eq!(s.phi.len(), 1);
    }

    #[test]
    fn semistandard_counts() {
        assert_eq!(shape("1,1").semistandard_count(2), 1.into());
        assert_eq!(shape("2").semistandard_count(2), 3.into());
        assert_eq!(shape("2,1").semistandard_count(3), 8.into());
        assert_eq!(shape("1,1,1").semistandard_count(2), 0.into());
    }
}
