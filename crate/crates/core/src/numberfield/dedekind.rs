use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::arith::is_prime;
use crate::exactalg::factor::factor_mod_p;
use crate::exactalg::{IntPoly, ModPoly};

/// Whether `p` is coprime to the index of `Z[x]/(f)` in the maximal order.
///
/// Immediate when `p ∤ disc(f)`; otherwise Dedekind's criterion.
pub fn conductor_coprime(f: &IntPoly, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic(f.clone()));
    }
    let disc = f.discriminant()?;
    if !disc.is_multiple_of(&BigInt::from(p)) {
        return Ok(true);
    }
    Ok(dedekind_criterion(f, p))
}

/// Dedekind's criterion for a monic `f`: with `f ≡ ∏ g_i^{e_i} (mod p)`,
/// `g = ∏ g_i`, `h = ∏ g_i^{e_i - 1}` and `M = (f - g h)/p`, the prime `p` does
/// not divide the index iff `gcd(M, g, h) = 1` in `F_p[x]`.
pub fn dedekind_criterion(f: &IntPoly, p: u64) -> bool {
    let fac = factor_mod_p(f, p).expect("monic input of positive degree");
    let one = ModPoly::one(p);
    let gbar = fac
        .factors
        .iter()
        .fold(one.clone(), |acc, (g, _)| acc.mul(g));
    let hbar = fac
        .factors
        .iter()
        .fold(one, |acc, (g, m)| (1..*m).fold(acc, |a, _| a.mul(g)));
    let g = IntPoly::lift(&gbar);
    let h = IntPoly::lift(&hbar);
    let diff = f - &(&g * &h);
    let pb = BigInt::from(p);
    debug_assert!(diff.coeffs().iter().all(|c| (c % &pb).is_zero()));
    let m = IntPoly::new(diff.coeffs().iter().map(|c| c / &pb).collect());
    let d = ModPoly::gcd(&ModPoly::gcd(&m.reduce_mod(p), &gbar), &hbar);
    d.is_one()
}
