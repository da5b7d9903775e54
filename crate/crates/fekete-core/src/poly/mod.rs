//! Exact polynomial arithmetic: univariate and bivariate polynomials over
//! Q(i), rational functions, truncated power series, and certified root
//! enclosures.

pub mod bi;
pub mod ratfunc;
pub mod roots;
pub mod series;
pub mod uni;
pub mod ypoly;

pub use bi::BiPoly;
pub use ratfunc::RatFunc;
pub use roots::{pellet_certifies, real_root_enclosures, root_enclosures, Realness, RootEnclosure};
pub use series::Series;
pub use uni::UniPoly;
pub use ypoly::{ext_gcd_mod_h, YPoly};
