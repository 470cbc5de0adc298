//! Exact arithmetic: integer and prime-field polynomials, factorization mod p,
//! and bivariate rational functions over Q.

pub mod arith;
pub mod bipoly;
pub mod factor;
pub(crate) mod gcd;
pub mod int_poly;
pub mod mod_poly;
pub mod ratfunc;

pub use bipoly::{BiPoly, Monomial};
pub use factor::{factor_mod_p, factor_mod_p_seeded, Factorization};
pub use int_poly::IntPoly;
pub use mod_poly::ModPoly;
pub use ratfunc::BiRatFunc;
