pub mod error;
pub mod exactalg;
pub mod lie;
pub mod numberfield;
pub mod padic;
pub mod zeta;

pub use error::{Error, Result};
pub use exactalg::{BiPoly, BiRatFunc, IntPoly, ModPoly, Monomial};
pub use numberfield::DecompType;
