//! Factorization over prime fields: square-free decomposition, distinct-degree
//! splitting, and Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arith::is_prime;
use super::{IntPoly, ModPoly};
use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_d15c;

/// `f ≡ lead · ∏ factor^multiplicity (mod p)` with monic irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub lead: u64,
    pub factors: Vec<(ModPoly, u32)>,
}

impl Factorization {
    pub fn product(&self, p: u64) -> ModPoly {
        self.factors
            .iter()
            .fold(ModPoly::new(vec![self.lead], p), |acc, (g, m)| {
                (0..*m).fold(acc, |a, _| a.mul(g))
            })
    }

    pub fn has_repeated_factor(&self) -> bool {
        self.factors.iter().any(|(_, m)| *m > 1)
    }

    /// Degrees of the irreducible factors, with repetition.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.degree().unwrap(), *m as usize))
            .collect();
        degs.sort_unstable();
        degs
    }
}

pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<Factorization> {
    factor_mod_p_seeded(f, p, DEFAULT_SEED)
}

pub fn factor_mod_p_seeded(f: &IntPoly, p: u64, seed: u64) -> Result<Factorization> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    match f.degree() {
        Some(d) if d >= 1 => {}
        _ => {
            return Err(Error::InvalidArgument(
                "factor_mod_p needs degree >= 1".into(),
            ))
        }
    }
    let fp = f.reduce_mod(p);
    if fp.degree() != f.degree() {
        return Err(Error::LeadingCoefficientVanishes { p });
    }
    Ok(factor_modpoly(&fp, seed))
}

/// Factors a nonzero polynomial over `F_p`.
pub fn factor_modpoly(f: &ModPoly, seed: u64) -> Factorization {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (sqf, mult) in squarefree(&f.monic()) {
        for (block, d) in distinct_degree(&sqf) {
            for g in equal_degree(&block, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        (a.degree(), a.coeffs(), ma).cmp(&(b.degree(), b.coeffs(), mb))
    });
    Factorization {
        lead: f.leading_coeff(),
        factors,
    }
}

/// Square-free decomposition of a monic polynomial: pairs `(g, m)` with `g`
/// square-free, pairwise coprime, and `f = ∏ g^m`.
pub fn squarefree(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree(&f.pth_root()) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = ModPoly::gcd(f, &df);
    let mut w = f.div(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = ModPoly::gcd(&w, &c);
        let z = w.div(&y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div(&w);
    }
    if !c.is_one() {
        for (g, m) in squarefree(&c.pth_root()) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Splits a monic square-free polynomial into products of irreducibles of equal degree.
pub fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.modulus();
    let pexp = BigUint::from(p);
    let x = ModPoly::x(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&pexp, &rest);
        let g = ModPoly::gcd(&rest, &h.sub(&x));
        if !g.is_one() {
            rest = rest.div(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
pub fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let p = f.modulus();
    let qd = BigUint::from(p).pow(d as u32);
    loop {
        let a = ModPoly::new((0..n).map(|_| rng.gen_range(0..p)).collect(), p);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let probe = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let two = BigUint::from(2u32);
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.pow_mod(&two, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (&qd - BigUint::one()) / 2u32;
            a.pow_mod(&e, f).sub(&ModPoly::one(p))
        };
        let g = ModPoly::gcd(f, &probe);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div(&g), d, rng));
            return out;
        }
    }
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &ModPoly) -> bool {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    let p = f.modulus();
    let f = f.monic();
    let x = ModPoly::x(p);
    let frob = |k: usize| x.pow_mod(&BigUint::from(p).pow(k as u32), &f);
    if !frob(n).sub(&x).rem(&f).is_zero() {
        return false;
    }
    let prime_divisors = (2..=n).filter(|q| n % q == 0 && (2..*q).all(|r| q % r != 0));
    for q in prime_divisors {
        let g = ModPoly::gcd(&f, &frob(n / q).sub(&x));
        if !g.is_one() {
            return false;
        }
    }
    true
}

/// Lexicographically first monic irreducible polynomial of degree `d` over `F_p`.
pub fn first_irreducible(p: u64, d: usize) -> ModPoly {
    let mut low = vec![0u64; d];
    loop {
        let mut c = low.clone();
        c.push(1);
        let g = ModPoly::new(c, p);
        if is_irreducible(&g) {
            return g;
        }
        // odometer over the lower coefficients
        let mut i = 0;
        while i < d {
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            i += 1;
        }
        assert!(i < d, "no irreducible polynomial of degree {d} mod {p}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots_brute(f: &IntPoly, p: u64) -> Vec<u64> {
        let fp = f.reduce_mod(p);
        (0..p).filter(|&r| fp.eval(r) == 0).collect()
    }

    #[test]
    fn cube_root_of_two_mod_31_splits() {
        let f = IntPoly::from_i64(&[-2, 0, 0, 1]);
        let fac = factor_mod_p(&f, 31).unwrap();
        let roots = roots_brute(&f, 31);
        assert_eq!(roots, vec![4, 7, 20]);
        let expected: Vec<(ModPoly, u32)> = roots
            .iter()
            .rev()
            .map(|r| (ModPoly::new(vec![31 - r, 1], 31), 1))
            .collect();
        assert_eq!(fac.factors, expected);
    }

    #[test]
    fn cube_root_of_two_mod_5() {
        let f = IntPoly::from_i64(&[-2, 0, 0, 1]);
        let fac = factor_mod_p(&f, 5).unwrap();
        assert_eq!(roots_brute(&f, 5), vec![3]);
        // quotient x^2 + 3x + 4 has no roots: discriminant 9 - 16 = -7 ≡ 3 is a non-residue mod 5
        assert!((1..5u64).all(|y| y * y % 5 != 3));
        assert_eq!(
            fac.factors,
            vec![
                (ModPoly::new(vec![2, 1], 5), 1),
                (ModPoly::new(vec![4, 3, 1], 5), 1)
            ]
        );
    }

    #[test]
    fn repeated_factor_mod_2() {
        let f = IntPoly::from_i64(&[1, 0, 1]);
        let fac = factor_mod_p(&f, 2).unwrap();
        assert_eq!(fac.factors, vec![(ModPoly::new(vec![1, 1], 2), 2)]);
    }

    #[test]
    fn rejects_composite_and_vanishing_lead() {
        let f = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(factor_mod_p(&f, 9), Err(Error::NotPrime(9)));
        let g = IntPoly::from_i64(&[1, 0, 3]);
        assert_eq!(
            factor_mod_p(&g, 3),
            Err(Error::LeadingCoefficientVanishes { p: 3 })
        );
    }

    #[test]
    fn pth_power_inputs() {
        // (x^2 + 1)^3 * (x + 2) mod 3 exercises the p-th root branch
        let base = IntPoly::from_i64(&[1, 0, 1]);
        let f = &base.pow(3) * &IntPoly::from_i64(&[2, 1]);
        let fac = factor_mod_p(&f, 3).unwrap();
        assert_eq!(fac.product(3), f.reduce_mod(3));
        assert!(fac.factors.contains(&(ModPoly::new(vec![1, 0, 1], 3), 3)));
    }

    #[test]
    fn irreducible_search() {
        let g = first_irreducible(2, 2);
        assert_eq!(g, ModPoly::new(vec![1, 1, 1], 2));
        assert!(is_irreducible(&first_irreducible(7, 3)));
        assert!(!is_irreducible(&ModPoly::new(vec![1, 0, 1], 2)));
    }
}
