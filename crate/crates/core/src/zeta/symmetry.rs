use std::fmt;

use num_traits::{One, Signed};

use crate::exactalg::{BiRatFunc, Monomial};

/// `r(X^{-1}, Y^{-1}) = sign · X^a Y^b · r(X, Y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub sign: i8,
    pub a: i64,
    pub b: i64,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{s}X^{}*Y^{}", self.a, self.b)
    }
}

/// Detects whether `r(1/X, 1/Y) / r(X, Y)` is `±` a Laurent monomial.
///
/// The candidate monomial and sign come from the graded-lex trailing terms
/// of the two cross products; the identity is then confirmed by exact
/// polynomial comparison. Returns `None` for `r = 0` or when no such
/// monomial exists.
pub fn symmetry_check(r: &BiRatFunc) -> Option<Symmetry> {
    if r.is_zero() {
        return None;
    }
    let inv = r.invert_vars();
    // inv = s m r  <=>  inv.num · r.den = s m · r.num · inv.den
    let lhs = inv.num() * r.den();
    let rhs = r.num() * inv.den();
    let (ml, cl) = lhs.trailing()?;
    let (mr, cr) = rhs.trailing()?;
    let ratio = cl / cr;
    let sign: i8 = if ratio.is_one() {
        1
    } else if (-&ratio).is_one() {
        -1
    } else {
        return None;
    };
    let a = ml.x as i64 - mr.x as i64;
    let b = ml.y as i64 - mr.y as i64;
    let shift_l = Monomial::new((-a).max(0) as u32, (-b).max(0) as u32);
    let shift_r = Monomial::new(a.max(0) as u32, b.max(0) as u32);
    let lhs = lhs.mul_monomial(shift_l);
    let rhs = rhs.mul_monomial(shift_r);
    let rhs = if sign > 0 { rhs } else { -rhs };
    if lhs == rhs {
        debug_assert!(ratio.abs().is_one());
        Some(Symmetry { sign, a, b })
    } else {
        None
    }
}

/// `sign · X^a Y^b` as a rational function.
pub fn symmetry_factor(s: &Symmetry) -> BiRatFunc {
    let m = BiRatFunc::laurent_monomial(s.a, s.b);
    if s.sign > 0 {
        m
    } else {
        -m
    }
}
