//! Local zeta functions `W_{e,f}`, the alternating sums `Φ_r`, functional
//! equation detection, and two independent ways to extract coefficients.

pub mod euler;
pub mod local;
pub mod phi;
pub mod series;
pub mod symmetry;

pub use euler::euler_partial;
pub use local::{local_factor, local_factor_any, local_factor_quadratic, Family, LocalFactor};
pub use phi::{phi_eval, phi_reciprocity_check, PhiAssignment, PhiSpec, PhiValue};
pub use series::{dirichlet_coeffs, vsum_coeffs, vsum_truncation};
pub use symmetry::{symmetry_check, symmetry_factor, Symmetry};
