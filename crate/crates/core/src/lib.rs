//! Exact computer algebra for the fusion procedure of the symmetric group,
//! evaluation modules of the Yangian `Y(gl_N)`, and the higher Capelli
//! identities.
//!
//! Everything here is pure and allocation-only: no IO, no floating point,
//! no global state. Coefficients are arbitrary-precision rationals, or
//! rational functions / polynomials built on top of them.
//!
//! Module map:
//!
//! - [`exact`]: rationals, tagged univariate polynomials, reduced rational
//!   functions with valuation and limit queries.
//! - [`ring`]: the coefficient-ring abstraction shared by every container.
//! - [`symgroup`]: permutations and the group algebra `C·S_n`.
//! - [`young`]: diagrams, tableaux, contents, Young symmetrizers, characters.
//! - [`fusion`]: ordered products of `φ_ij(u, v) = 1 - (i j)/(u - v)`, the
//!   fusion limit, the two-diagram function `Φ_λμ(z)` and its pole order.
//! - [`ugl`]: `U(gl_N)` in PBW normal form.
//! - [`tensormat`]: sparse matrices on `(C^N)^{⊗n}` with entries in any ring;
//!   Young projectors, the Capelli matrix polynomial, quantum determinant.
//! - [`weyl`]: polynomial differential operators on `C^N ⊗ C^M` and the
//!   Capelli operators.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod exact;
pub mod fusion;
pub mod ring;
pub mod symgroup;
pub mod tensormat;
pub mod ugl;
pub mod weyl;
pub mod young;

pub use exact::{ExactError, RationalFunction, UniPoly, Var};
pub use ring::Ring;
pub use symgroup::{GroupAlgebraElement, Permutation, SymGroupError};
pub use tensormat::{ParamPoly, TensorMatrix};
pub use ugl::{UglElement, UglError};
pub use weyl::{Polynomial, WeylElement, WeylError};
pub use young::{StandardTableau, Symmetrizers, YoungDiagram, YoungError};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
