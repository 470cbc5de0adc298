//! The Lie lattices attached to `Δ = f^ℓ`: construction from structure
//! constants and exact verification of the axioms, the symmetrizer, and the
//! automorphism families.

pub mod field;
pub mod lattice;
pub mod matrix;
pub mod rho;
pub mod sigma;

pub use field::FieldElt;
pub use lattice::{
    build_lattice, check_lie_axioms, rho1, rho3, verify_automorphism, AxiomReport, LieLattice,
};
pub use matrix::{companion, QMatrix};
pub use rho::{det2, random_sl2, rho2_conjugated, verify_quadratic_iso, verify_rho2, Mat2};
pub use sigma::solve_sigma;
