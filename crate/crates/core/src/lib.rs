//! Exact computation of mth-order Eulerian numbers and the objects built from them.
//!
//! The crate is `no_std` (it needs `alloc`). Every count is an arbitrary-precision
//! [`BigInt`]; nothing is ever rounded except inside the quadrature used by
//! [`fractions::integral_check`].
//!
//! Layout:
//!
//! - [`algebra`]: big integers, dense polynomials, rational functions over powers of `(1 - t)`.
//! - [`triangle`]: the Eulerian triangle by recurrence, by the composition formula, closed forms.
//! - [`oracle`]: brute-force enumeration of m-Stirling permutations.
//! - [`fractions`]: Eulerian polynomials and fractions, series coefficients, inversion, quadrature.
//! - [`stirling`]: Stirling numbers of both kinds, conversions, and the Worpitzky-type function.
//! - [`verify`]: the identity battery that cross-checks all of the above.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod fractions;
pub mod oracle;
pub mod stirling;
pub mod triangle;
pub mod verify;

pub use algebra::{binom, BigInt, BinomRat, Poly, Rational, RationalPoly};
pub use error::Error;
pub use triangle::EulerianTriangle;
