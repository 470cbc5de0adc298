use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::ZBi;
use super::IntPoly;

/// `X^x Y^y`, ordered graded-lexicographically with X before Y.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.x).cmp(&(other.degree(), other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y)
    }
}

/// Sparse polynomial in `Q[X, Y]` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BiPoly { terms }
    }

    pub fn monomial(x: u32, y: u32) -> Self {
        Self::term(BigRational::one(), Monomial::new(x, y))
    }

    /// `1 - X^x Y^y`
    pub fn one_minus(x: u32, y: u32) -> Self {
        &Self::one() - &Self::monomial(x, y)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Self {
        let mut out = BiPoly::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(x, y, c)| (Monomial::new(x, y), BigRational::from_integer(c.into()))),
        )
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> BigRational {
        self.terms
            .get(&m)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Greatest term under graded-lex.
    pub fn leading(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Smallest term under graded-lex.
    pub fn trailing(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|m| m.x).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|m| m.y).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k * m, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `X -> X^kx`, `Y -> Y^ky`.
    pub fn inflate(&self, kx: u32, ky: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x * kx, m.y * ky), c.clone()))
                .collect(),
        }
    }

    /// `X^dx Y^dy · self(1/X, 1/Y)` with `(dx, dy)` the maximal degrees.
    pub fn reversed(&self) -> (BiPoly, Monomial) {
        let top = Monomial::new(self.degree_x(), self.degree_y());
        let rev = BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(top.x - m.x, top.y - m.y), c.clone()))
                .collect(),
        };
        (rev, top)
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (m, c)| {
            acc + c
                * num_traits::pow(x.clone(), m.x as usize)
                * num_traits::pow(y.clone(), m.y as usize)
        })
    }

    /// Coefficients of `Y^0, Y^1, ...` after substituting `X = x`.
    pub fn substitute_x(&self, x: &BigRational) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree_y() as usize + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            out[m.y as usize] += c * num_traits::pow(x.clone(), m.x as usize);
        }
        out
    }

    /// Positive common denominator of all coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()))
    }

    /// `self = zbi / den` with `zbi` integral.
    pub(crate) fn to_zbi(&self) -> (ZBi, BigInt) {
        let den = self.denominator_lcm();
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); self.degree_y() as usize + 1];
        for (m, c) in &self.terms {
            let row = &mut rows[m.y as usize];
            if row.len() <= m.x as usize {
                row.resize(m.x as usize + 1, BigInt::zero());
            }
            row[m.x as usize] = (c * BigRational::from_integer(den.clone())).to_integer();
        }
        if self.is_zero() {
            rows.clear();
        }
        (ZBi::new(rows.into_iter().map(IntPoly::new).collect()), den)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        if d.is_zero() {
            return None;
        }
        let (za, da) = self.to_zbi();
        let (zb, db) = d.to_zbi();
        // a primitive divisor keeps the quotient integral by Gauss's lemma
        let content = zb
            .rows
            .iter()
            .flat_map(|r| r.coeffs().iter())
            .fold(BigInt::zero(), |g, c| g.gcd(c));
        let zb = ZBi::new(
            zb.rows
                .iter()
                .map(|r| r.div_exact(&IntPoly::constant(content.clone())).unwrap())
                .collect(),
        );
        let q = za.div_exact(&zb)?;
        Some(BiPoly::from_zbi(&q, &BigRational::new(db, da * content)))
    }

    pub(crate) fn from_zbi(z: &ZBi, scale: &BigRational) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (j, row) in z.rows.iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert(
                        Monomial::new(i as u32, j as u32),
                        BigRational::from_integer(c.clone()) * scale,
                    );
                }
            }
        }
        BiPoly { terms }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        if self.len() * rhs.len() <= 64 {
            let mut out = BiPoly::zero();
            for (ma, ca) in &self.terms {
                for (mb, cb) in &rhs.terms {
                    out.add_term(*ma * *mb, ca * cb);
                }
            }
            return out;
        }
        let (za, da) = self.to_zbi();
        let (zb, db) = rhs.to_zbi();
        BiPoly::from_zbi(&za.mul(&zb), &BigRational::new(BigInt::one(), da * db))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut parts = Vec::new();
    match m.x {
        0 => {}
        1 => parts.push("X".to_string()),
        e => parts.push(format!("X^{e}")),
    }
    match m.y {
        0 => {}
        1 => parts.push("Y".to_string()),
        e => parts.push(format!("Y^{e}")),
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let mut ms = vec![
            Monomial::new(0, 2),
            Monomial::new(1, 1),
            Monomial::new(2, 0),
            Monomial::new(0, 1),
            Monomial::new(1, 0),
            Monomial::ONE,
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                Monomial::ONE,
                Monomial::new(0, 1),
                Monomial::new(1, 0),
                Monomial::new(0, 2),
                Monomial::new(1, 1),
                Monomial::new(2, 0)
            ]
        );
    }

    #[test]
    fn dense_and_sparse_products_agree() {
        let a = BiPoly::from_int_terms(&[(0, 0, 1), (3, 1, -2), (5, 2, 7), (1, 4, 3)]);
        let b = &a * &a;
        let big: BiPoly = (0..12).fold(BiPoly::one(), |acc, k| {
            &acc * &BiPoly::one_minus(k + 1, k % 3)
        });
        let big2 = &big * &a;
        let mut naive = BiPoly::zero();
        for (ma, ca) in big.terms() {
            for (mb, cb) in a.terms() {
                naive.add_term(*ma * *mb, ca * cb);
            }
        }
        assert_eq!(big2, naive);
        assert_eq!(
            b.coeff(Monomial::new(10, 4)),
            BigRational::from_integer(49.into())
        );
    }

    #[test]
    fn display() {
        let p = BiPoly::from_int_terms(&[(0, 0, 1), (4, 2, -1), (13, 5, 2)]);
        assert_eq!(p.to_string(), "1 - X^4*Y^2 + 2*X^13*Y^5");
    }
}
