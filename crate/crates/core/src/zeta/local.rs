use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, BiRatFunc, Monomial};
use crate::numberfield::DecompType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `n >= 3`
    General,
    /// `n = 2`
    Quadratic,
}

/// Local zeta function `W_{e,f}(X, Y)` for a degree and decomposition type;
/// the local zeta function at `p` is `W_{e,f}(p, p^{-s})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFactor {
    pub n: usize,
    pub decomp: DecompType,
    pub value: BiRatFunc,
    pub family: Family,
}

fn check_degree(n: usize, d: &DecompType) -> Result<()> {
    if d.degree() as usize != n {
        return Err(Error::InvalidDecomposition(format!(
            "{d} has total degree {} but n = {n}",
            d.degree()
        )));
    }
    Ok(())
}

/// `W_{e,f} = ∏ 1/(1 - X^{f_i}) · Σ_{I ⊆ [r]} (-1)^{|I|} X^{Σ_I f_i} / (1 - X^{4n + Σ_I e_i f_i} Y^{n+2})`.
pub fn local_factor(n: usize, d: &DecompType) -> Result<LocalFactor> {
    if n < 3 {
        return Err(Error::UseQuadraticFamily(n));
    }
    check_degree(n, d)?;
    let pairs: Vec<(u32, u32)> = d.pairs().collect();
    let r = pairs.len();
    let ny = n as u32 + 2;
    // subsets sharing Σ_I e_i f_i share a denominator; collect their numerators
    let mut groups: BTreeMap<u32, BTreeMap<u32, i64>> = BTreeMap::new();
    for mask in 0usize..(1 << r) {
        let (mut ef, mut fs, mut sign) = (0u32, 0u32, 1i64);
        for (i, &(e, f)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                ef += e * f;
                fs += f;
                sign = -sign;
            }
        }
        *groups.entry(ef).or_default().entry(fs).or_default() += sign;
    }
    let parts: Vec<(BiPoly, BiPoly)> = groups
        .into_iter()
        .map(|(ef, nums)| {
            let num = BiPoly::from_terms(
                nums.into_iter()
                    .map(|(x, c)| (Monomial::new(x, 0), BigRational::from(BigInt::from(c)))),
            );
            (num, BiPoly::one_minus(4 * n as u32 + ef, ny))
        })
        .collect();
    let (num, den) = sum_fractions(&parts);
    let prefactor = pairs.iter().fold(BiPoly::one(), |acc, &(_, f)| {
        &acc * &BiPoly::one_minus(f, 0)
    });
    let value = BiRatFunc::normalize(num, &den * &prefactor)?;
    Ok(LocalFactor {
        n,
        decomp: d.clone(),
        value,
        family: Family::General,
    })
}

/// `∏_i W(X^{f_i}, Y^{f_i})` with `W = 1/((1 - X^4 Y^2)(1 - X^5 Y^2))`.
pub fn local_factor_quadratic(d: &DecompType) -> Result<LocalFactor> {
    check_degree(2, d)?;
    let den = d.f().iter().fold(BiPoly::one(), |acc, &f| {
        &(&acc * &BiPoly::one_minus(4 * f, 2 * f)) * &BiPoly::one_minus(5 * f, 2 * f)
    });
    Ok(LocalFactor {
        n: 2,
        decomp: d.clone(),
        value: BiRatFunc::normalize(BiPoly::one(), den)?,
        family: Family::Quadratic,
    })
}

/// Dispatches on `n` between the quadratic and general families.
pub fn local_factor_any(n: usize, d: &DecompType) -> Result<LocalFactor> {
    match n {
        2 => local_factor_quadratic(d),
        _ => local_factor(n, d),
    }
}

/// `Σ num_i / den_i` over the common denominator `∏ den_i`, without reduction.
pub(crate) fn sum_fractions(parts: &[(BiPoly, BiPoly)]) -> (BiPoly, BiPoly) {
    let k = parts.len();
    // prefix[i] = ∏_{j<i} den_j, suffix[i] = ∏_{j>=i} den_j
    let mut prefix = vec![BiPoly::one()];
    for (_, d) in parts {
        prefix.push(prefix.last().unwrap() * d);
    }
    let mut suffix = vec![BiPoly::one(); k + 1];
    for i in (0..k).rev() {
        suffix[i] = &suffix[i + 1] * &parts[i].1;
    }
    let mut num = BiPoly::zero();
    for (i, (n, _)) in parts.iter().enumerate() {
        num = &num + &(&(n * &prefix[i]) * &suffix[i + 1]);
    }
    (num, prefix.pop().unwrap())
}
