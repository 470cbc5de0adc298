use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::arith::primes_up_to;
use crate::exactalg::IntPoly;
use crate::numberfield::{certify_irreducible, conductor_coprime, decomposition_type};

use super::series::dirichlet_coeffs;

/// Coefficients `b_m`, `m <= max_index`, of the Euler product restricted to
/// primes `<= prime_bound`; indices with a larger prime factor are omitted.
///
/// Every prime in range must be coprime to the conductor.
pub fn euler_partial(
    f: &IntPoly,
    prime_bound: u64,
    max_index: u64,
) -> Result<BTreeMap<u64, BigInt>> {
    certify_irreducible(f)?;
    let n = f.degree().unwrap();
    let primes = primes_up_to(prime_bound);
    for &p in &primes {
        if !conductor_coprime(f, p)? {
            return Err(Error::ConductorPrime { p, poly: f.clone() });
        }
    }
    let local: Vec<(u64, Vec<BigInt>)> = primes
        .par_iter()
        .filter(|&&p| p <= max_index)
        .map(|&p| {
            let mut k = 0usize;
            let mut pk = 1u64;
            while pk.checked_mul(p).is_some_and(|v| v <= max_index) {
                pk *= p;
                k += 1;
            }
            let d = decomposition_type(f, p)?;
            Ok((p, dirichlet_coeffs(n, &d, p, k)?))
        })
        .collect::<Result<_>>()?;

    let mut out = BTreeMap::new();
    'index: for m in 1..=max_index {
        let mut rest = m;
        let mut b = BigInt::one();
        for (p, coeffs) in &local {
            let mut k = 0;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            if k > 0 {
                b *= &coeffs[k];
            }
        }
        if rest != 1 {
            continue 'index;
        }
        out.insert(m, b);
    }
    Ok(out)
}
