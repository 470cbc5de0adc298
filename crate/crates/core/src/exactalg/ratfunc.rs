use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bipoly::{BiPoly, Monomial};
use super::gcd::gcd_bi;
use crate::error::{Error, Result};

/// Element of `Q(X, Y)` in canonical form.
///
/// `num` and `den` are coprime, `den` has coprime integer coefficients and its
/// graded-lex trailing coefficient is positive. Two values are equal as
/// rational functions iff they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiRatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl BiRatFunc {
    pub fn normalize(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (zn, dn) = num.to_zbi();
        let (zd, dd) = den.to_zbi();
        let g = gcd_bi(&zn, &zd);
        let zn = zn.div_exact(&g).expect("gcd divides numerator");
        let zd = zd.div_exact(&g).expect("gcd divides denominator");
        let mut content = zd.integer_content();
        let den_poly = BiPoly::from_zbi(&zd, &BigRational::one());
        if den_poly.trailing().unwrap().1.is_negative() {
            content = -content;
        }
        let den_poly = den_poly.scale(&BigRational::new(BigInt::one(), content.clone()));
        // num/den = (zn/dn) / (zd/dd) = zn * dd / (dn * content * den_poly)
        let scale = BigRational::new(dd, dn * content);
        Ok(BiRatFunc {
            num: BiPoly::from_zbi(&zn, &scale),
            den: den_poly,
        })
    }

    pub fn zero() -> Self {
        BiRatFunc {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        BiRatFunc {
            num: BiPoly::constant(c),
            den: BiPoly::one(),
        }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        BiRatFunc {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn monomial(x: u32, y: u32) -> Self {
        Self::from_poly(BiPoly::monomial(x, y))
    }

    /// `X^x Y^y` with possibly negative exponents.
    pub fn laurent_monomial(x: i64, y: i64) -> Self {
        let up = Monomial::new(x.max(0) as u32, y.max(0) as u32);
        let down = Monomial::new((-x).max(0) as u32, (-y).max(0) as u32);
        BiRatFunc {
            num: BiPoly::term(BigRational::one(), up),
            den: BiPoly::term(BigRational::one(), down),
        }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::normalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &BiRatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// The denominator as `∏ (1 - X^a Y^b)^mult`, listed as `(a, b, mult)` in
    /// graded-lex order, when it has that shape.
    pub fn den_binomial_factors(&self) -> Option<Vec<(u32, u32, u32)>> {
        let mut rest = self.den.clone();
        let mut out: Vec<(u32, u32, u32)> = Vec::new();
        while rest.as_constant().is_none() {
            // the graded-lex smallest nonconstant monomial of such a product is one of its factors
            let (m, c) = rest.terms().find(|(m, _)| m.degree() > 0)?;
            let (m, c) = (*m, c.clone());
            if !c.is_integer() || !c.is_negative() {
                return None;
            }
            rest = rest.div_exact(&BiPoly::one_minus(m.x, m.y))?;
            match out.last_mut() {
                Some(last) if (last.0, last.1) == (m.x, m.y) => last.2 += 1,
                _ => out.push((m.x, m.y, 1)),
            }
        }
        rest.as_constant().filter(|c| c.is_one()).map(|_| out)
    }

    /// Equality by cross-multiplication; does not rely on canonical forms.
    pub fn equals(&self, other: &BiRatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// `r(1/X, 1/Y)` in canonical form.
    pub fn invert_vars(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (rn, tn) = self.num.reversed();
        let (rd, td) = self.den.reversed();
        // r(1/X,1/Y) = rn X^-tn / (rd X^-td) = rn X^td / (rd X^tn); cancel the common part
        let common = Monomial::new(tn.x.min(td.x), tn.y.min(td.y));
        let num_shift = Monomial::new(td.x - common.x, td.y - common.y);
        let den_shift = Monomial::new(tn.x - common.x, tn.y - common.y);
        Self::normalize(rn.mul_monomial(num_shift), rd.mul_monomial(den_shift))
            .expect("reversed denominator is nonzero")
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x, y);
        if d.is_zero() {
            return Err(Error::EvaluationAtPole);
        }
        Ok(self.num.eval(x, y) / d)
    }

    /// Taylor coefficients of `Y^0..=Y^k` after substituting `X = x`.
    pub fn series_coeffs(&self, x: &BigRational, k: usize) -> Result<Vec<BigRational>> {
        let num = self.num.substitute_x(x);
        let den = self.den.substitute_x(x);
        let d0 = den.first().cloned().unwrap_or_else(BigRational::zero);
        if d0.is_zero() {
            return Err(Error::NonExpandable);
        }
        let mut out: Vec<BigRational> = Vec::with_capacity(k + 1);
        for i in 0..=k {
            let mut acc = num.get(i).cloned().unwrap_or_else(BigRational::zero);
            for j in 1..=i.min(den.len().saturating_sub(1)) {
                if !den[j].is_zero() {
                    acc -= &den[j] * &out[i - j];
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }
}

impl Add for &BiRatFunc {
    type Output = BiRatFunc;
    fn add(self, rhs: &BiRatFunc) -> BiRatFunc {
        if self.den == rhs.den {
            return BiRatFunc::normalize(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        BiRatFunc::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Sub for &BiRatFunc {
    type Output = BiRatFunc;
    fn sub(self, rhs: &BiRatFunc) -> BiRatFunc {
        self + &(-rhs)
    }
}

impl Mul for &BiRatFunc {
    type Output = BiRatFunc;
    fn mul(self, rhs: &BiRatFunc) -> BiRatFunc {
        BiRatFunc::normalize(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &BiRatFunc {
    type Output = BiRatFunc;
    fn neg(self) -> BiRatFunc {
        BiRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiRatFunc {
            type Output = BiRatFunc;
            fn $m(self, rhs: BiRatFunc) -> BiRatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiRatFunc {
    type Output = BiRatFunc;
    fn neg(self) -> BiRatFunc {
        -&self
    }
}

impl From<BiPoly> for BiRatFunc {
    fn from(p: BiPoly) -> Self {
        BiRatFunc::from_poly(p)
    }
}

impl fmt::Display for BiRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for BiRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiRatFunc({self})")
    }
}
