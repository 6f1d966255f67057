//! Exact computation of the q-Faulhaber polynomials `P(m,k)`, `Q(m,k)` and
//! the q-Salie polynomials `G(m,k)`, `H(m,k)`.
//!
//! Three independent routes are provided and cross-checked:
//!
//! * determinants of complete homogeneous symmetric functions ([`qcoeffs`]),
//! * inversion of lower triangular matrices at rational points
//!   ([`qcoeffs::invert_route`]),
//! * weighted enumeration of non-intersecting lattice paths and the
//!   Lindstrom-Gessel-Viennot determinant ([`lgv`]).
//!
//! [`identities`] checks the q-power-sum identities these polynomials
//! appear in.

pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod homog;
pub mod identities;
pub mod lgv;
pub mod qcoeffs;

pub use error::{Error, Result};
pub use exactpoly::{BigRational, LaurentPoly};
