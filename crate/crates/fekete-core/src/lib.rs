//! Exact-arithmetic toolkit for Legendre-symbol sequences and algebraic
//! power series: Fekete coefficient streams and character sums, conversion
//! of annihilating polynomials to linear ODEs and P-recurrences with
//! explicit order/degree bound checks, minimal algebraic-approximation
//! degree computation by exact nullspace guessing, and the oscillation /
//! interval-construction machinery that links the two.
//!
//! Everything on a decision path is exact: arbitrary-precision rationals,
//! Gaussian rationals, certified root enclosures, and rational enclosures
//! of the constants e^2 and e^3. Floating point appears only in report
//! fields that are explicitly labeled approximate.

pub mod error;
pub mod gauss;
pub mod linalg;
pub mod numtheory;
pub mod poly;
pub mod rat;

pub mod guess;
pub mod holonomy;
pub mod jsonio;
pub mod oscillation;

pub mod acceptance;

pub use error::{Error, Result};
pub use gauss::Gaussian;
pub use numtheory::{
    fekete_coefficients, incomplete_pair_sum, legendre_symbol, max_incomplete_sum,
    smallest_nonresidue, CharSumReport, FeketeSeries, PrimeModulus,
};
pub use poly::{BiPoly, RootEnclosure, Series, UniPoly};
pub use rat::Rat;
