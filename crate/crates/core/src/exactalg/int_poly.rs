use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ModPoly;
use crate::error::{Error, Result};

/// Univariate polynomial over the integers, constant coefficient first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn max_norm(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// `f(x + c)`
    pub fn shift(&self, c: &BigInt) -> Self {
        let lin = IntPoly::new(vec![c.clone(), BigInt::one()]);
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, a| {
            &(&acc * &lin) + &IntPoly::constant(a.clone())
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = IntPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact quotient in `Z[x]`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        let lc = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dj;
            }
            q[k] = qk;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// Pseudo-remainder `prem(self, d)`: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let lc = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let top = rem[k].clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &top * dj;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    /// Greatest common divisor in `Z[x]`, normalized to a positive leading
    /// coefficient. Content is included.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a.is_zero() {
            return b.normalized_sign();
        }
        if b.is_zero() {
            return a.normalized_sign();
        }
        let content = a.content().gcd(&b.content());
        let (pa, pb) = (a.primitive_part(), b.primitive_part());
        let g = super::gcd::heuristic_gcd_univariate(&pa, &pb)
            .unwrap_or_else(|| Self::gcd_prs(&pa, &pb));
        g.scale(&content)
    }

    /// Primitive polynomial remainder sequence; exact fallback for [`IntPoly::gcd`].
    pub(crate) fn gcd_prs(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    fn normalized_sign(&self) -> IntPoly {
        if self.leading_coeff().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Resultant computed by the Euclidean algorithm over the rationals.
    pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
        let to_q = |p: &IntPoly| -> Vec<BigRational> {
            p.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect()
        };
        let r = resultant_q(to_q(a), to_q(b));
        debug_assert!(r.is_integer());
        r.to_integer()
    }

    /// `disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return Err(Error::ConstantPolynomial),
        };
        let res = Self::resultant(self, &self.derivative());
        let d = res / self.leading_coeff();
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
    }

    pub fn reduce_mod(&self, p: u64) -> ModPoly {
        let pb = BigInt::from(p);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect();
        ModPoly::new(coeffs, p)
    }

    /// Lifts residues in `[0, p)` to integer coefficients.
    pub fn lift(m: &ModPoly) -> IntPoly {
        IntPoly::new(m.coeffs().iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients reduced into the symmetric range `(-m/2, m/2]`.
    pub fn symmetric_mod(&self, m: &BigInt) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| symmetric_residue(c, m))
                .collect(),
        )
    }
}

pub(crate) fn symmetric_residue(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn trim_q(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rem_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lc = &b[db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let q = &r[k] / lc;
        for (j, bj) in b.iter().enumerate() {
            let t = &q * bj;
            r[k - db + j] -= t;
        }
        r.pop();
        trim_q(&mut r);
    }
    r
}

/// res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) res(b, r), r = a mod b.
fn resultant_q(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> BigRational {
    trim_q(&mut a);
    trim_q(&mut b);
    let mut acc = BigRational::one();
    loop {
        if a.is_empty() || b.is_empty() {
            return BigRational::zero();
        }
        let (da, db) = (a.len() - 1, b.len() - 1);
        if db == 0 {
            return acc * num_traits::pow(b[0].clone(), da);
        }
        if da == 0 {
            return acc * num_traits::pow(a[0].clone(), db);
        }
        let r = rem_q(&a, &b);
        if r.is_empty() {
            return BigRational::zero();
        }
        let dr = r.len() - 1;
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(b[db].clone(), da - dr);
        a = b;
        b = r;
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    /// Sylvester matrix determinant by cofactor expansion over the rationals;
    /// kept separate from the Euclidean resultant used by the library.
    fn sylvester_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
        let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (j, c) in a.coeffs().iter().rev().enumerate() {
                mat[row][row + j] = c.clone();
            }
        }
        for row in 0..m {
            for (j, c) in b.coeffs().iter().rev().enumerate() {
                mat[n + row][row + j] = c.clone();
            }
        }
        fn det(m: &[Vec<BigInt>]) -> BigInt {
            if m.len() == 1 {
                return m[0][0].clone();
            }
            let mut acc = BigInt::zero();
            for col in 0..m.len() {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * det(&minor);
                if col % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        det(&mat)
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(
            p(&[-2, 0, 0, 1]).discriminant().unwrap(),
            BigInt::from(-108)
        );
        assert_eq!(p(&[1, 0, 1]).discriminant().unwrap(), BigInt::from(-4));
        assert_eq!(p(&[-1, -1, 1]).discriminant().unwrap(), BigInt::from(5));
        assert_eq!(p(&[7]).discriminant(), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn resultant_matches_sylvester_determinant() {
        let cases = [
            (p(&[-1, -1, 1]), p(&[-1, 2])),
            (p(&[-2, 0, 0, 1]), p(&[0, 0, 3])),
            (p(&[3, -1, 4, 1, 5]), p(&[2, 6, -5, 3])),
            (p(&[1, 1, 0, 2]), p(&[0, 1, 1])),
            (p(&[-4, 0, 1]), p(&[2, 1])),
        ];
        for (a, b) in cases {
            assert_eq!(
                IntPoly::resultant(&a, &b),
                sylvester_resultant(&a, &b),
                "{a} / {b}"
            );
        }
        // x^2 - x - 1 with its derivative: the oracle for disc = 5
        let f = p(&[-1, -1, 1]);
        let res = sylvester_resultant(&f, &f.derivative());
        assert_eq!(-res, BigInt::from(5));
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 2, 1]);
        assert_eq!(IntPoly::gcd(&a, &b), p(&[1, 1]));
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
        assert_eq!(p(&[2, 2]).div_exact(&p(&[1, 2])), None);
        assert_eq!(IntPoly::gcd(&p(&[6, 6]), &p(&[4, 4])), p(&[2, 2]));
    }

    #[test]
    fn shift_and_display() {
        let f = p(&[-2, 0, 0, 1]);
        assert_eq!(f.shift(&BigInt::from(1)), p(&[-1, 3, 3, 1]));
        assert_eq!(f.to_string(), "x^3 - 2");
        assert_eq!(p(&[0, -1, 3]).to_string(), "3*x^2 - x");
    }
}
