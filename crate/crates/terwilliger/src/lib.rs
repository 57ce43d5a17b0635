//! Exact-arithmetic computation of Terwilliger (subconstituent) algebra
//! invariants for rank-3 association schemes.
//!
//! The crate provides:
//!
//! * dense exact linear algebra over big integers and rationals, including
//!   characteristic/minimal polynomials and multiplicative span closure
//!   ([`matrix`], [`span`]);
//! * complete factorization of integer polynomials over the rationals
//!   ([`poly`], [`factor`]);
//! * number-field descriptors with certified isomorphism/non-isomorphism
//!   tests ([`numfield`]);
//! * tournament and association-scheme construction, verification, and
//!   file I/O ([`scheme`]);
//! * the subconstituent decomposition, its identity suite, closed-form
//!   complex dimensions, rational Wedderburn signatures, and the
//!   span-closure oracle that cross-checks them ([`subconstituent`],
//!   [`invariants`]).
//!
//! Vertices are 0-based everywhere. All arithmetic is exact; no floating
//! point is used anywhere in the crate.

pub mod error;
pub mod factor;
pub mod invariants;
pub mod matrix;
pub mod modp;
pub mod numfield;
pub mod poly;
pub mod scalar;
pub mod scheme;
pub mod span;
pub mod subconstituent;

pub use error::{Error, Result};
pub use factor::{factor_over_q, FactoredPoly};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use poly::{IntPoly, Poly, RatPoly};
pub use scalar::Scalar;
pub use span::{span_closure, SpanBasis};
