//! Truncated formal power series in one and two variables, sparse Laurent
//! polynomials, and the two-variable expansions built on top of them.

mod bi;
pub mod expand;
mod laurent;
mod text;
mod uni;

pub use bi::{divide_by_linear, BiSeries, LinearForm};
pub use expand::{expand_f, expand_g1, expand_g_alt, expand_g_closed, g_coefficient, phi};
pub use laurent::LaurentPoly;
pub use uni::UniSeries;
