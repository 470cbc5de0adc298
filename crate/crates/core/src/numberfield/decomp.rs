use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::factor::{factor_mod_p_seeded, DEFAULT_SEED};
use crate::exactalg::IntPoly;

use super::dedekind::conductor_coprime;

/// Ramification indices `e` and residue degrees `f` of the primes above `p`,
/// stored sorted by `(f_i, e_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecompType {
    e: Vec<u32>,
    f: Vec<u32>,
}

impl DecompType {
    pub fn new(e: Vec<u32>, f: Vec<u32>) -> Result<Self> {
        if e.is_empty() || e.len() != f.len() {
            return Err(Error::InvalidDecomposition(format!(
                "e and f must be nonempty of equal length (got {} and {})",
                e.len(),
                f.len()
            )));
        }
        if e.iter().chain(&f).any(|&v| v == 0) {
            return Err(Error::InvalidDecomposition(
                "entries must be positive".into(),
            ));
        }
        let mut pairs: Vec<(u32, u32)> = f.into_iter().zip(e).collect();
        pairs.sort_unstable();
        let (f, e) = pairs.into_iter().unzip();
        Ok(DecompType { e, f })
    }

    /// All `e_i = 1`.
    pub fn unramified(f: Vec<u32>) -> Result<Self> {
        Self::new(vec![1; f.len()], f)
    }

    pub fn e(&self) -> &[u32] {
        &self.e
    }

    pub fn f(&self) -> &[u32] {
        &self.f
    }

    /// Number of primes above `p`.
    pub fn r(&self) -> usize {
        self.e.len()
    }

    /// `Σ e_i f_i`.
    pub fn degree(&self) -> u32 {
        self.e.iter().zip(&self.f).map(|(e, f)| e * f).sum()
    }

    pub fn is_unramified(&self) -> bool {
        self.e.iter().all(|&e| e == 1)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.e.iter().copied().zip(self.f.iter().copied())
    }

    /// Every decomposition type of total degree `n`, in sorted order.
    pub fn all_of_degree(n: u32) -> Vec<DecompType> {
        let mut parts: Vec<(u32, u32)> = Vec::new();
        for ef in 1..=n {
            for f in 1..=ef {
                if ef % f == 0 {
                    parts.push((f, ef / f));
                }
            }
        }
        parts.sort_unstable();
        let mut out = Vec::new();
        let mut current = Vec::new();
        multisets(&parts, 0, n, &mut current, &mut out);
        out.sort();
        out
    }

    pub fn all_unramified_of_degree(n: u32) -> Vec<DecompType> {
        Self::all_of_degree(n)
            .into_iter()
            .filter(DecompType::is_unramified)
            .collect()
    }
}

fn multisets(
    parts: &[(u32, u32)],
    start: usize,
    remaining: u32,
    current: &mut Vec<(u32, u32)>,
    out: &mut Vec<DecompType>,
) {
    if remaining == 0 {
        let (f, e) = current.iter().copied().unzip();
        out.push(DecompType { e, f });
        return;
    }
    for i in start..parts.len() {
        let (f, e) = parts[i];
        if e * f <= remaining {
            current.push((f, e));
            multisets(parts, i, remaining - e * f, current, out);
            current.pop();
        }
    }
}

impl fmt::Display for DecompType {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(fm, "e=({}) f=({})", list(&self.e), list(&self.f))
    }
}

/// Decomposition type of `p` in `Q[x]/(f)` read off from the factorization of `f mod p`.
///
/// `f` is assumed irreducible; primes dividing the conductor are refused.
pub fn decomposition_type(f: &IntPoly, p: u64) -> Result<DecompType> {
    decomposition_type_seeded(f, p, DEFAULT_SEED)
}

/// As [`decomposition_type`] with an explicit seed for the randomized splitting.
pub fn decomposition_type_seeded(f: &IntPoly, p: u64, seed: u64) -> Result<DecompType> {
    if !f.is_monic() {
        return Err(Error::NotMonic(f.clone()));
    }
    if !conductor_coprime(f, p)? {
        return Err(Error::ConductorPrime { p, poly: f.clone() });
    }
    let fac = factor_mod_p_seeded(f, p, seed)?;
    let (e, fs) = fac
        .factors
        .iter()
        .map(|(g, m)| (*m, g.degree().unwrap() as u32))
        .unzip();
    let t = DecompType::new(e, fs)?;
    assert_eq!(t.degree() as usize, f.degree().unwrap());
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> IntPoly {
        IntPoly::from_i64(&[-2, 0, 0, 1])
    }

    #[test]
    fn cube_root_of_two_types() {
        let t = |p| decomposition_type(&cubic(), p).unwrap();
        assert_eq!(
            t(31),
            DecompType::new(vec![1, 1, 1], vec![1, 1, 1]).unwrap()
        );
        assert_eq!(t(5), DecompType::new(vec![1, 1], vec![1, 2]).unwrap());
        assert_eq!(t(3), DecompType::new(vec![3], vec![1]).unwrap());
        assert_eq!(t(2), DecompType::new(vec![3], vec![1]).unwrap());
        assert_eq!(t(7), DecompType::new(vec![1], vec![3]).unwrap());
    }

    #[test]
    fn conductor_prime_is_refused() {
        let f = IntPoly::from_i64(&[3, 0, 1]);
        assert!(matches!(
            decomposition_type(&f, 2),
            Err(Error::ConductorPrime { p: 2, .. })
        ));
    }

    #[test]
    fn canonical_order_and_validation() {
        let t = DecompType::new(vec![1, 2, 1], vec![2, 1, 1]).unwrap();
        assert_eq!(t.f(), &[1, 1, 2]);
        assert_eq!(t.e(), &[1, 2, 1]);
        assert_eq!(t.degree(), 5);
        assert!(DecompType::new(vec![1], vec![]).is_err());
        assert!(DecompType::new(vec![0], vec![1]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        // unramified types are the partitions of n
        let partitions = [1, 2, 3, 5, 7, 11, 15];
        for (n, &count) in (1..=7).zip(&partitions) {
            assert_eq!(DecompType::all_unramified_of_degree(n).len(), count);
        }
        let all = DecompType::all_of_degree(3);
        // (1,1,1),(1,2),(3) unramified; (2e,1f)+(1,1); (3e,1f)
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(|t| t.degree() == 3));
    }
}
