//! Arithmetic of `Q[x]/(f)`: irreducibility certificates, the conductor test,
//! and decomposition types of rational primes.

pub mod certify;
pub mod decomp;
pub mod dedekind;

pub use certify::{certify_irreducible, CertificateMethod, IrreducibilityCertificate};
pub use decomp::{decomposition_type, decomposition_type_seeded, DecompType};
pub use dedekind::conductor_coprime;
