use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::exactalg::IntPoly;

use super::matrix::{companion, QMatrix};

/// Element of `Q[x]/(Δ)` as its coefficient vector in the basis `1, x, ..., x^{m-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElt {
    coeffs: Vec<BigRational>,
    modulus: IntPoly,
}

impl FieldElt {
    /// Reduces `coeffs` (any length) modulo the monic `modulus`.
    pub fn new(coeffs: Vec<BigRational>, modulus: &IntPoly) -> Self {
        let m = modulus.degree().expect("nonconstant modulus");
        assert!(modulus.is_monic(), "modulus must be monic");
        let mut c = coeffs;
        for k in (m..c.len()).rev() {
            let lead = std::mem::replace(&mut c[k], BigRational::zero());
            if lead.is_zero() {
                continue;
            }
            for j in 0..m {
                let a = modulus.coeff(j);
                if !a.is_zero() {
                    c[k - m + j] -= &lead * BigRational::from(a);
                }
            }
        }
        c.resize(m, BigRational::zero());
        FieldElt {
            coeffs: c,
            modulus: modulus.clone(),
        }
    }

    pub fn from_i64(coeffs: &[i64], modulus: &IntPoly) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&v| BigRational::from(BigInt::from(v)))
                .collect(),
            modulus,
        )
    }

    pub fn from_int(v: i64, modulus: &IntPoly) -> Self {
        Self::from_i64(&[v], modulus)
    }

    /// The class of `x`.
    pub fn generator(modulus: &IntPoly) -> Self {
        Self::from_i64(&[0, 1], modulus)
    }

    pub fn zero(modulus: &IntPoly) -> Self {
        Self::new(Vec::new(), modulus)
    }

    pub fn one(modulus: &IntPoly) -> Self {
        Self::from_int(1, modulus)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(&self.modulus)
    }

    pub fn add(&self, rhs: &FieldElt) -> FieldElt {
        let c = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        FieldElt {
            coeffs: c,
            modulus: self.modulus.clone(),
        }
    }

    pub fn neg(&self) -> FieldElt {
        FieldElt {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
            modulus: self.modulus.clone(),
        }
    }

    pub fn sub(&self, rhs: &FieldElt) -> FieldElt {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &FieldElt) -> FieldElt {
        let m = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Self::new(prod, &self.modulus)
    }

    /// Matrix of multiplication by `self` acting on row vectors: `Σ α_i C^i`
    /// with `C` the companion matrix of the modulus.
    pub fn iota(&self) -> QMatrix {
        let c = companion(&self.modulus).expect("monic modulus");
        let m = self.coeffs.len();
        let mut acc = QMatrix::zeros(m, m);
        let mut power = QMatrix::identity(m);
        for a in &self.coeffs {
            if !a.is_zero() {
                acc = acc.add(&power.scale(a));
            }
            power = &power * &c;
        }
        acc
    }

    /// Random element with integer coefficients in `[-bound, bound]`.
    pub fn random<R: Rng>(modulus: &IntPoly, bound: i64, rng: &mut R) -> Self {
        let m = modulus.degree().unwrap();
        let c: Vec<i64> = (0..m).map(|_| rng.gen_range(-bound..=bound)).collect();
        Self::from_i64(&c, modulus)
    }
}

impl fmt::Display for FieldElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => c.to_string(),
                1 if c.is_one() => "b".to_string(),
                1 => format!("{c}*b"),
                _ if c.is_one() => format!("b^{k}"),
                _ => format!("{c}*b^{k}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for FieldElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElt({self})")
    }
}
