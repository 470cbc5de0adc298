use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, BiRatFunc, Monomial};

use super::local::sum_fractions;

/// Values assigned to the variables `X_I`, indexed by the bitmask of `I ⊆ [r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhiAssignment {
    /// `X_I = X^{a_I} Y^{b_I}` with integer (possibly negative) exponents.
    Monomials(Vec<(i64, i64)>),
    /// `X_I` a rational number.
    Rationals(Vec<BigRational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiSpec {
    pub r: usize,
    pub assignment: PhiAssignment,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhiValue {
    Function(BiRatFunc),
    Number(BigRational),
}

impl PhiSpec {
    pub fn monomials(r: usize, exps: Vec<(i64, i64)>) -> Result<Self> {
        let spec = PhiSpec {
            r,
            assignment: PhiAssignment::Monomials(exps),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn rationals(r: usize, values: Vec<BigRational>) -> Result<Self> {
        let spec = PhiSpec {
            r,
            assignment: PhiAssignment::Rationals(values),
        };
        spec.validate()?;
        Ok(spec)
    }

    fn len(&self) -> usize {
        match &self.assignment {
            PhiAssignment::Monomials(v) => v.len(),
            PhiAssignment::Rationals(v) => v.len(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.r >= usize::BITS as usize - 1 || self.len() != 1 << self.r {
            return Err(Error::InvalidArgument(format!(
                "Phi_{} needs {} assigned values, got {}",
                self.r,
                1usize.checked_shl(self.r as u32).unwrap_or(0),
                self.len()
            )));
        }
        if let Some(subset) = self.pole() {
            return Err(Error::PhiPole { subset });
        }
        Ok(())
    }

    fn pole(&self) -> Option<usize> {
        match &self.assignment {
            PhiAssignment::Monomials(v) => v.iter().position(|&m| m == (0, 0)),
            PhiAssignment::Rationals(v) => v.iter().position(|x| x.is_one()),
        }
    }

    /// The assignment `X_I ↦ X_I^{-1}`.
    pub fn inverted(&self) -> Result<PhiSpec> {
        let assignment = match &self.assignment {
            PhiAssignment::Monomials(v) => {
                PhiAssignment::Monomials(v.iter().map(|&(a, b)| (-a, -b)).collect())
            }
            PhiAssignment::Rationals(v) => PhiAssignment::Rationals(
                v.iter()
                    .map(|x| {
                        if x.is_zero() {
                            Err(Error::DivisionByZero)
                        } else {
                            Ok(x.recip())
                        }
                    })
                    .collect::<Result<_>>()?,
            ),
        };
        let spec = PhiSpec {
            r: self.r,
            assignment,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn sign(mask: usize) -> i64 {
    if mask.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `X^a Y^b = U / V` with `U`, `V` coprime monomials.
fn split_laurent(a: i64, b: i64) -> (Monomial, Monomial) {
    let up = Monomial::new(a.max(0) as u32, b.max(0) as u32);
    let down = Monomial::new((-a).max(0) as u32, (-b).max(0) as u32);
    (up, down)
}

/// `m/(1 - m) = U/(V - U)` for the Laurent monomial `m = U/V`.
fn term_fraction(a: i64, b: i64) -> (Monomial, BiPoly) {
    let (u, v) = split_laurent(a, b);
    let den = &BiPoly::term(BigRational::one(), v) - &BiPoly::term(BigRational::one(), u);
    (u, den)
}

/// `Φ_r = Σ_{I ⊆ [r]} (-1)^{|I|} X_I / (1 - X_I)` under the assignment.
pub fn phi_eval(spec: &PhiSpec) -> Result<PhiValue> {
    spec.validate()?;
    match &spec.assignment {
        PhiAssignment::Rationals(v) => {
            let mut acc = BigRational::zero();
            for (mask, x) in v.iter().enumerate() {
                let t = x / (BigRational::one() - x);
                if sign(mask) > 0 {
                    acc += t;
                } else {
                    acc -= t;
                }
            }
            Ok(PhiValue::Number(acc))
        }
        PhiAssignment::Monomials(v) => {
            // subsets with the same X_I share one fraction
            let mut groups: BTreeMap<(i64, i64), i64> = BTreeMap::new();
            for (mask, &m) in v.iter().enumerate() {
                *groups.entry(m).or_default() += sign(mask);
            }
            let parts: Vec<(BiPoly, BiPoly)> = groups
                .into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|((a, b), c)| {
                    let (u, den) = term_fraction(a, b);
                    (BiPoly::term(BigRational::from(BigInt::from(c)), u), den)
                })
                .collect();
            if parts.is_empty() {
                return Ok(PhiValue::Function(BiRatFunc::zero()));
            }
            let (num, den) = sum_fractions(&parts);
            Ok(PhiValue::Function(BiRatFunc::normalize(num, den)?))
        }
    }
}

/// Exact check of `Φ_r({X_I^{-1}}) = -Φ_r({X_I})` under the assignment.
///
/// Rational assignments are evaluated on both sides. For monomial assignments
/// the difference is accumulated subset by subset, pairing the `I`-th term of
/// each side, so no common denominator over all `2^r` subsets is formed.
pub fn phi_reciprocity_check(spec: &PhiSpec) -> Result<bool> {
    let inv = spec.inverted()?;
    match (&spec.assignment, &inv.assignment) {
        (PhiAssignment::Rationals(_), _) => {
            let (PhiValue::Number(a), PhiValue::Number(b)) = (phi_eval(spec)?, phi_eval(&inv)?)
            else {
                unreachable!()
            };
            Ok(a == -b)
        }
        (PhiAssignment::Monomials(v), PhiAssignment::Monomials(w)) => {
            let mut acc = BiRatFunc::zero();
            for (mask, (&(a, b), &(c, d))) in v.iter().zip(w).enumerate() {
                let (u1, d1) = term_fraction(a, b);
                let (u2, d2) = term_fraction(c, d);
                let t1 = BiRatFunc::normalize(BiPoly::term(BigRational::one(), u1), d1)?;
                let t2 = BiRatFunc::normalize(BiPoly::term(BigRational::one(), u2), d2)?;
                let pair = &t1 + &t2;
                acc = if sign(mask) > 0 {
                    &acc + &pair
                } else {
                    &acc - &pair
                };
            }
            Ok(acc.is_zero())
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn func(v: PhiValue) -> BiRatFunc {
        match v {
            PhiValue::Function(f) => f,
            PhiValue::Number(_) => panic!("expected a function"),
        }
    }

    fn frac(x: u32, y: u32) -> BiRatFunc {
        BiRatFunc::normalize(BiPoly::monomial(x, y), BiPoly::one_minus(x, y)).unwrap()
    }

    #[test]
    fn eval_examples() {
        let s = PhiSpec::monomials(0, vec![(1, 0)]).unwrap();
        assert_eq!(func(phi_eval(&s).unwrap()), frac(1, 0));

        let s = PhiSpec::rationals(1, vec![q(2, 1), q(3, 1)]).unwrap();
        assert_eq!(phi_eval(&s).unwrap(), PhiValue::Number(q(-1, 2)));

        let s = PhiSpec::monomials(1, vec![(1, 0), (1, 1)]).unwrap();
        assert_eq!(func(phi_eval(&s).unwrap()), &frac(1, 0) - &frac(1, 1));
    }

    #[test]
    fn poles_are_rejected() {
        assert_eq!(
            PhiSpec::rationals(1, vec![q(2, 1), q(1, 1)]),
            Err(Error::PhiPole { subset: 1 })
        );
        assert_eq!(
            PhiSpec::monomials(1, vec![(0, 0), (1, 0)]),
            Err(Error::PhiPole { subset: 0 })
        );
        assert!(PhiSpec::monomials(2, vec![(1, 0)]).is_err());
    }

    #[test]
    fn reciprocity_small() {
        let s = PhiSpec::rationals(1, vec![q(2, 1), q(3, 1)]).unwrap();
        assert!(phi_reciprocity_check(&s).unwrap());
        let inv = phi_eval(&s.inverted().unwrap()).unwrap();
        assert_eq!(inv, PhiValue::Number(q(1, 2)));

        // X_I = X^{4 + Σ_I f_i} Y with f = (1, 1)
        let s = PhiSpec::monomials(2, vec![(4, 1), (5, 1), (5, 1), (6, 1)]).unwrap();
        assert!(phi_reciprocity_check(&s).unwrap());
    }

    #[test]
    fn reciprocity_fails_without_subsets() {
        // Φ_0(X^{-1}) = 1/(X - 1) differs from -Φ_0(X) = X/(X - 1) by 1
        let s = PhiSpec::rationals(0, vec![q(5, 1)]).unwrap();
        assert!(!phi_reciprocity_check(&s).unwrap());
        let m = PhiSpec::monomials(0, vec![(1, 0)]).unwrap();
        assert!(!phi_reciprocity_check(&m).unwrap());
    }

    #[test]
    fn laurent_monomials() {
        // X_∅ = X/Y: (X/Y)/(1 - X/Y) = X/(Y - X)
        let s = PhiSpec::monomials(0, vec![(1, -1)]).unwrap();
        let expected = BiRatFunc::normalize(
            BiPoly::monomial(1, 0),
            BiPoly::from_int_terms(&[(0, 1, 1), (1, 0, -1)]),
        )
        .unwrap();
        assert_eq!(func(phi_eval(&s).unwrap()), expected);
    }
}
