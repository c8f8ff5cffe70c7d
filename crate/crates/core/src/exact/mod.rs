//! Exact scalar arithmetic: rationals, univariate polynomials over the
//! rationals, and reduced rational functions.
//!
//! Polynomials and rational functions carry a variable tag ([`Var`]). Two
//! non-constant operands with different tags cannot be combined; constants
//! are compatible with every tag.

mod poly;
mod ratfunc;

use core::fmt;

pub use poly::UniPoly;
pub use ratfunc::RationalFunction;

/// Name of the single free parameter of a polynomial or rational function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Var {
    /// Parameter of the fusion line `z_i = r_i t`.
    #[default]
    T,
    /// Spectral shift in `Φ_λμ(z)`, `E_λ(z)` and `R_λμ(z)`.
    Z,
    /// Spectral parameter of `T(u)`, `R(u, v)` and the identity for `φ_{1,i+1}(u, c_i)`.
    U,
    V,
    W,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Z => "z",
            Var::U => "u",
            Var::V => "v",
            Var::W => "w",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by the zero {0}")]
    DivisionByZero(&'static str),
    #[error("cannot combine expressions in different variables {left} and {right}")]
    VariableMismatch { left: Var, right: Var },
    #[error("pole of order {order} at the evaluation point")]
    Pole { order: u32 },
}
