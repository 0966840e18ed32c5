//! Exact weighted lattice-path polynomials and classical orthogonal
//! polynomial families over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`] and [`poly`]: arbitrary-precision rationals, generalized
//!   binomials, and dense univariate polynomials with the transforms the
//!   rest of the crate needs (affine substitution, antiderivatives, the
//!   `(x-1)^n p(x/(x-1))` substitution, exact integration).
//! * [`paths`]: brute-force enumerators and dynamic programs for
//!   Delannoy, Schröder, modified Delannoy and Motzkin paths.
//! * [`orthopoly`]: Jacobi (integer parameters of either sign), shifted
//!   Jacobi, Legendre, Romanovski-Jacobi, Laguerre, Schröder and Narayana
//!   polynomials.
//! * [`functionals`]: moment functionals, Gram and Hankel matrices, exact
//!   determinants and Favard coefficient fitting.
//! * [`identities`]: a registry of named identity checks run over
//!   parameter grids, producing [`identities::IdentityReport`]s.
//!
//! Every computation is exact. Grid sweeps run on rayon when the
//! `parallel` feature is enabled (the default) and fall back to plain
//! iteration otherwise.

pub mod error;
pub mod exact;
pub mod functionals;
pub mod identities;
pub mod orthopoly;
mod par;
pub mod paths;
pub mod poly;

pub use error::{Error, Result};
pub use exact::{binom_general, factorial, pochhammer, Integer, Rational};
pub use poly::Polynomial;
