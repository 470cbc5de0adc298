use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::arith::is_prime;
use crate::numberfield::DecompType;

use super::local::local_factor_any;

/// `b_{p^0}, ..., b_{p^K}`: Taylor coefficients of `W_{e,f}(p, Y)` in `Y`.
///
/// Every coefficient counts subalgebras, so a negative or non-integral value
/// is reported as [`Error::IntegralityViolated`].
pub fn dirichlet_coeffs(n: usize, d: &DecompType, p: u64, k: usize) -> Result<Vec<BigInt>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let w = local_factor_any(n, d)?.value;
    let series = w.series_coeffs(&BigRational::from(BigInt::from(p)), k)?;
    series
        .into_iter()
        .enumerate()
        .map(|(index, c)| {
            if !c.is_integer() || c.is_negative() {
                Err(Error::IntegralityViolated {
                    index,
                    value: c.to_string(),
                })
            } else {
                Ok(c.to_integer())
            }
        })
        .collect()
}

/// Number of `v` terms used by [`vsum_coeffs`]: `ceil(K / (n + 2)) + 1`.
pub fn vsum_truncation(n: usize, k: usize) -> usize {
    k.div_ceil(n + 2) + 1
}

/// Same coefficients as [`dirichlet_coeffs`], from the geometric sum
/// `Σ_v p^{4nv} ∏_i (1 - p^{e_i f_i v + f_i}) / (1 - p^{f_i}) · Y^{(n+2)v}`.
pub fn vsum_coeffs(n: usize, d: &DecompType, p: u64, k: usize) -> Result<Vec<BigInt>> {
    if n < 3 {
        return Err(Error::UseQuadraticFamily(n));
    }
    if d.degree() as usize != n {
        return Err(Error::InvalidDecomposition(format!(
            "{d} does not have degree {n}"
        )));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pb = BigInt::from(p);
    let mut out = vec![BigInt::zero(); k + 1];
    for v in 0..vsum_truncation(n, k) {
        let idx = (n + 2) * v;
        if idx > k {
            break;
        }
        let mut term = pb.pow((4 * n * v) as u32);
        for (e, f) in d.pairs() {
            let num = BigInt::one() - pb.pow(e * f * v as u32 + f);
            let den = BigInt::one() - pb.pow(f);
            debug_assert!((&num % &den).is_zero());
            term *= num / den;
        }
        out[idx] = term;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dt(e: &[u32], f: &[u32]) -> DecompType {
        DecompType::new(e.to_vec(), f.to_vec()).unwrap()
    }

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn mixed_cubic_at_five() {
        let d = dt(&[1, 1], &[1, 2]);
        assert_eq!(dirichlet_coeffs(3, &d, 5, 0).unwrap(), vec![big(1)]);
        let c = dirichlet_coeffs(3, &d, 5, 5).unwrap();
        let expected = big(5).pow(12) + big(5).pow(13) + big(5).pow(14) + big(5).pow(15);
        assert_eq!(c[5], expected);
        assert_eq!(c[5], big(5).pow(12) * big(6) * big(26));
        assert!(c[1..5].iter().all(Zero::is_zero));
    }

    #[test]
    fn inert_cubic_support() {
        let c = dirichlet_coeffs(3, &dt(&[1], &[3]), 2, 20).unwrap();
        for (k, b) in c.iter().enumerate() {
            if k % 5 != 0 {
                assert!(b.is_zero());
            }
        }
    }

    #[test]
    fn vsum_examples() {
        let c = vsum_coeffs(3, &dt(&[3], &[1]), 3, 5).unwrap();
        assert_eq!(c[0], big(1));
        assert_eq!(c[5], big(3).pow(12) * big(40));
        assert_eq!(c, dirichlet_coeffs(3, &dt(&[3], &[1]), 3, 5).unwrap());
        assert_eq!(vsum_truncation(3, 30), 7);
        assert_eq!(
            vsum_coeffs(2, &dt(&[1], &[2]), 3, 5),
            Err(Error::UseQuadraticFamily(2))
        );
    }

    #[test]
    fn quadratic_coefficients() {
        // 1/((1 - X^4Y^2)(1 - X^5Y^2)) at X = 2: Y^2 coefficient 2^4 + 2^5
        let c = dirichlet_coeffs(2, &dt(&[2], &[1]), 2, 4).unwrap();
        assert_eq!(
            c,
            vec![big(1), big(0), big(48), big(0), big(256 + 512 + 1024)]
        );
    }

    #[test]
    fn rejects_composite() {
        assert_eq!(
            dirichlet_coeffs(3, &dt(&[1], &[3]), 4, 3),
            Err(Error::NotPrime(4))
        );
    }
}
