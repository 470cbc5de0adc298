use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::factor::{factor_mod_p, is_irreducible};
use crate::exactalg::{IntPoly, ModPoly};

/// Number of primes not dividing the discriminant that the first two tiers inspect.
pub const SIEVE_PRIMES: usize = 25;

/// Largest degree for which the factor-recombination search is attempted.
pub const MAX_SEARCH_DEGREE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateMethod {
    /// `f mod p` is irreducible for the witness prime.
    ModPIrreducible,
    /// The possible factor degrees over Q, intersected across the witness
    /// primes, contain nothing strictly between 0 and `deg f`.
    DegreePatternSieve,
    /// No recombination of the Hensel-lifted factors at the witness prime
    /// yields an integer factor of degree `<= deg f / 2`.
    ZassenhausSearch,
}

impl CertificateMethod {
    pub fn name(&self) -> &'static str {
        match self {
            CertificateMethod::ModPIrreducible => "mod-p-irreducible",
            CertificateMethod::DegreePatternSieve => "degree-pattern-sieve",
            CertificateMethod::ZassenhausSearch => "zassenhaus-search",
        }
    }
}

/// Proof of irreducibility over Q that can be rechecked from the witnesses alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub poly: IntPoly,
    pub method: CertificateMethod,
    pub witnesses: Vec<u64>,
}

impl IrreducibilityCertificate {
    pub fn verify(&self) -> bool {
        let f = &self.poly;
        let Ok(disc) = f.discriminant() else {
            return false;
        };
        if disc.is_zero()
            || self.witnesses.is_empty()
            || self
                .witnesses
                .iter()
                .any(|&p| disc.is_multiple_of(&BigInt::from(p)))
        {
            return false;
        }
        let n = f.degree().unwrap();
        match self.method {
            CertificateMethod::ModPIrreducible => is_irreducible(&f.reduce_mod(self.witnesses[0])),
            CertificateMethod::DegreePatternSieve => {
                let patterns: Vec<Vec<usize>> = self
                    .witnesses
                    .iter()
                    .map(|&p| factor_mod_p(f, p).unwrap().degree_pattern())
                    .collect();
                possible_degrees(&patterns, n).is_empty()
            }
            CertificateMethod::ZassenhausSearch => {
                n <= MAX_SEARCH_DEGREE && recombination_search(f, self.witnesses[0]).is_none()
            }
        }
    }
}

/// Establishes irreducibility over Q of a monic integer polynomial of degree >= 2.
///
/// Tries, in order: irreducibility modulo one of the first [`SIEVE_PRIMES`]
/// good primes, the degree-pattern sieve across those primes, and an
/// exhaustive recombination search over Hensel-lifted factors. A reducible
/// input yields [`Error::Reducible`] with a factor of least degree.
pub fn certify_irreducible(f: &IntPoly) -> Result<IrreducibilityCertificate> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => {
            return Err(Error::InvalidArgument(
                "irreducibility certification needs degree >= 2".into(),
            ))
        }
    };
    if !f.is_monic() {
        return Err(Error::NotMonic(f.clone()));
    }
    let disc = f.discriminant()?;
    if disc.is_zero() {
        // repeated factor over Q
        let g = IntPoly::gcd(f, &f.derivative());
        return Err(Error::Reducible {
            factor: g.primitive_part(),
        });
    }
    let primes = good_primes(&disc, SIEVE_PRIMES);
    let mut patterns = Vec::with_capacity(primes.len());
    for &p in &primes {
        let fac = factor_mod_p(f, p)?;
        if fac.factors.len() == 1 {
            return Ok(IrreducibilityCertificate {
                poly: f.clone(),
                method: CertificateMethod::ModPIrreducible,
                witnesses: vec![p],
            });
        }
        patterns.push((p, fac.degree_pattern()));
    }
    let only: Vec<Vec<usize>> = patterns.iter().map(|(_, d)| d.clone()).collect();
    if possible_degrees(&only, n).is_empty() {
        // keep only the primes needed for an empty intersection
        let mut used = Vec::new();
        let mut acc: Vec<Vec<usize>> = Vec::new();
        for (p, d) in &patterns {
            used.push(*p);
            acc.push(d.clone());
            if possible_degrees(&acc, n).is_empty() {
                break;
            }
        }
        return Ok(IrreducibilityCertificate {
            poly: f.clone(),
            method: CertificateMethod::DegreePatternSieve,
            witnesses: used,
        });
    }
    if n > MAX_SEARCH_DEGREE {
        return Err(Error::CertificationFailed(format!(
            "degree {n} exceeds the recombination search limit {MAX_SEARCH_DEGREE}"
        )));
    }
    // the prime with the fewest modular factors keeps the search small
    let p = patterns
        .iter()
        .min_by_key(|(_, d)| d.len())
        .map(|(p, _)| *p)
        .expect("at least one good prime");
    match recombination_search(f, p) {
        Some(factor) => Err(Error::Reducible { factor }),
        None => Ok(IrreducibilityCertificate {
            poly: f.clone(),
            method: CertificateMethod::ZassenhausSearch,
            witnesses: vec![p],
        }),
    }
}

fn good_primes(disc: &BigInt, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut p = 1u64;
    while out.len() < count {
        p += 1;
        if crate::exactalg::arith::is_prime(p) && !disc.is_multiple_of(&BigInt::from(p)) {
            out.push(p);
        }
    }
    out
}

/// Degrees in `1..n` that are subset sums of every modular degree pattern.
fn possible_degrees(patterns: &[Vec<usize>], n: usize) -> BTreeSet<usize> {
    let mut acc: BTreeSet<usize> = (1..n).collect();
    for degs in patterns {
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for &d in degs {
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        acc.retain(|&k| sums[k]);
    }
    acc
}

/// Searches for an integer factor of degree `<= deg f / 2` by lifting the
/// factorization at `p` and trying every combination of lifted factors.
/// Returns the factor of least degree with lexicographically smallest
/// coefficients, or `None` when `f` is irreducible.
fn recombination_search(f: &IntPoly, p: u64) -> Option<IntPoly> {
    let n = f.degree().unwrap();
    let fac = factor_mod_p(f, p).ok()?;
    let modular: Vec<ModPoly> = fac.factors.iter().map(|(g, _)| g.clone()).collect();
    debug_assert!(fac.factors.iter().all(|(_, m)| *m == 1));

    // Mignotte: every coefficient of a monic factor of degree d is at most 2^d ||f||_2
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    let bound = (BigInt::one() << (n / 2)) * norm;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }
    let lifted: Vec<IntPoly> = modular
        .iter()
        .map(|g| {
            let fp = f.reduce_mod(p);
            let h = fp.div(g);
            hensel_lift(f, g, &h, p, k)
        })
        .collect();

    let m = lifted.len();
    let mut best: Option<IntPoly> = None;
    for mask in 1u32..(1 << m) {
        let deg: usize = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| lifted[i].degree().unwrap())
            .sum();
        if deg == 0 || deg > n / 2 {
            continue;
        }
        let cand = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .fold(IntPoly::one(), |acc, i| {
                (&acc * &lifted[i]).symmetric_mod(&modulus)
            });
        if f.div_exact(&cand).is_some() {
            let better = match &best {
                None => true,
                Some(b) => (deg, cand.coeffs()) < (b.degree().unwrap(), b.coeffs()),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    best
}

/// Lifts `f ≡ g h (mod p)` with `g` monic and coprime to `h` to `f ≡ G H (mod p^k)`
/// and returns `G`.
fn hensel_lift(f: &IntPoly, g: &ModPoly, h: &ModPoly, p: u64, k: u32) -> IntPoly {
    let (one, s, t) = ModPoly::xgcd(g, h);
    assert!(one.is_one(), "modular factors must be coprime");
    let pb = BigInt::from(p);
    let mut gz = IntPoly::lift(g);
    let mut hz = IntPoly::lift(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff = f - &(&gz * &hz);
        let e = IntPoly::new(diff.coeffs().iter().map(|c| c / &pj).collect()).reduce_mod(p);
        let (q, dg) = t.mul(&e).div_rem(g);
        let dh = e.mul(&s).add(&q.mul(h));
        gz = &gz + &IntPoly::lift(&dg).scale(&pj);
        hz = &hz + &IntPoly::lift(&dh).scale(&pj);
        pj *= &pb;
    }
    gz
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn cube_root_of_two() {
        let cert = certify_irreducible(&poly(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(cert.method, CertificateMethod::ModPIrreducible);
        assert_eq!(cert.witnesses, vec![7]);
        assert!(cert.verify());
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(
            certify_irreducible(&poly(&[-1, 0, 1])),
            Err(Error::Reducible {
                factor: poly(&[-1, 1])
            })
        );
    }

    #[test]
    fn swinnerton_dyer_quartic() {
        // x^4 + 1 is reducible modulo every prime
        let f = poly(&[1, 0, 0, 0, 1]);
        let cert = certify_irreducible(&f).unwrap();
        assert!(matches!(
            cert.method,
            CertificateMethod::DegreePatternSieve | CertificateMethod::ZassenhausSearch
        ));
        assert!(cert.verify());
        // x^4 - 10x^2 + 1 as well
        let g = poly(&[1, 0, -10, 0, 1]);
        let cert = certify_irreducible(&g).unwrap();
        assert_eq!(cert.method, CertificateMethod::ZassenhausSearch);
        assert!(cert.verify());
    }

    #[test]
    fn hidden_quadratic_factors() {
        // (x^2 + x + 1)(x^2 - 3)
        let f = &poly(&[1, 1, 1]) * &poly(&[-3, 0, 1]);
        assert_eq!(
            certify_irreducible(&f),
            Err(Error::Reducible {
                factor: poly(&[-3, 0, 1])
            })
        );
        // (x^3 - 2)(x^3 + 3x + 7) with large lifted coefficients
        let g = &poly(&[-2, 0, 0, 1]) * &poly(&[7, 3, 0, 1]);
        assert_eq!(
            certify_irreducible(&g),
            Err(Error::Reducible {
                factor: poly(&[-2, 0, 0, 1])
            })
        );
    }

    #[test]
    fn repeated_factor() {
        let f = poly(&[1, 0, 1]).pow(2);
        assert_eq!(
            certify_irreducible(&f),
            Err(Error::Reducible {
                factor: poly(&[1, 0, 1])
            })
        );
    }

    #[test]
    fn forged_certificates_fail() {
        let bogus = IrreducibilityCertificate {
            poly: poly(&[-1, 0, 1]),
            method: CertificateMethod::ModPIrreducible,
            witnesses: vec![3],
        };
        assert!(!bogus.verify());
        let bad_prime = IrreducibilityCertificate {
            poly: poly(&[-2, 0, 0, 1]),
            method: CertificateMethod::ModPIrreducible,
            witnesses: vec![2],
        };
        assert!(!bad_prime.verify());
    }

    #[test]
    fn input_validation() {
        assert!(matches!(
            certify_irreducible(&poly(&[1, 2])),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            certify_irreducible(&poly(&[1, 0, 2])),
            Err(Error::NotMonic(_))
        ));
    }
}
