//! Exact gcd in `Z[x]` and `Z[X, Y]`.
//!
//! The primary route is the heuristic gcd (evaluate at a large integer, take
//! the gcd one level down, rebuild by symmetric radix expansion, confirm by
//! exact division). A primitive remainder sequence is the fallback whenever
//! the heuristic gives up, so results are always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::int_poly::symmetric_residue;
use super::IntPoly;

const HEURISTIC_ROUNDS: usize = 6;
/// Evaluation points are abandoned beyond this many bits of `ξ^deg`.
const MAX_EVAL_BITS: u64 = 40_000_000;

fn next_point(xi: &BigInt) -> BigInt {
    xi * BigInt::from(73794) / BigInt::from(27011)
}

fn initial_point(na: &BigInt, nb: &BigInt) -> BigInt {
    na.min(nb) * 2 + 29
}

/// Digits of `gamma` in base `xi`, symmetric range.
fn radix_digits(gamma: &BigInt, xi: &BigInt) -> IntPoly {
    let mut digits = Vec::new();
    let mut g = gamma.clone();
    while !g.is_zero() {
        let d = symmetric_residue(&g, xi);
        g = (&g - &d) / xi;
        digits.push(d);
    }
    IntPoly::new(digits)
}

/// Heuristic gcd of primitive polynomials; `None` means "use the fallback".
pub(crate) fn heuristic_gcd_univariate(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    let (da, db) = (a.degree()?, b.degree()?);
    if da == 0 || db == 0 {
        return Some(IntPoly::one());
    }
    let mut xi = initial_point(&a.max_norm(), &b.max_norm());
    for _ in 0..HEURISTIC_ROUNDS {
        if xi.bits() * da.max(db) as u64 > MAX_EVAL_BITS {
            return None;
        }
        let gamma = a.eval(&xi).gcd(&b.eval(&xi));
        let g = radix_digits(&gamma, &xi).primitive_part();
        if !g.is_zero() && a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
            return Some(g);
        }
        xi = next_point(&xi);
    }
    None
}

/// Dense polynomial in `Z[X][Y]`: `rows[j]` is the coefficient of `Y^j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct ZBi {
    pub rows: Vec<IntPoly>,
}

impl ZBi {
    pub fn new(mut rows: Vec<IntPoly>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        ZBi { rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn max_norm(&self) -> BigInt {
        self.rows
            .iter()
            .map(IntPoly::max_norm)
            .max()
            .unwrap_or_default()
    }

    pub fn integer_content(&self) -> BigInt {
        self.rows
            .iter()
            .fold(BigInt::zero(), |g, r| g.gcd(&r.content()))
    }

    pub fn scale_div(&self, c: &BigInt) -> ZBi {
        ZBi::new(
            self.rows
                .iter()
                .map(|r| IntPoly::new(r.coeffs().iter().map(|a| a / c).collect()))
                .collect(),
        )
    }

    /// Lowest exponents of X and Y occurring.
    pub fn min_exponents(&self) -> (usize, usize) {
        let y = self.rows.iter().position(|r| !r.is_zero()).unwrap_or(0);
        let x = self
            .rows
            .iter()
            .filter_map(|r| r.coeffs().iter().position(|c| !c.is_zero()))
            .min()
            .unwrap_or(0);
        (x, y)
    }

    pub fn shift_down(&self, sx: usize, sy: usize) -> ZBi {
        ZBi::new(
            self.rows[sy.min(self.rows.len())..]
                .iter()
                .map(|r| IntPoly::new(r.coeffs().iter().skip(sx).cloned().collect()))
                .collect(),
        )
    }

    pub fn shift_up(&self, sx: usize, sy: usize) -> ZBi {
        let mut rows = vec![IntPoly::zero(); sy];
        rows.extend(self.rows.iter().map(|r| {
            let mut c = vec![BigInt::zero(); sx];
            c.extend(r.coeffs().iter().cloned());
            IntPoly::new(c)
        }));
        ZBi::new(rows)
    }

    /// gcd of all exponents of X and of Y (0 entries are ignored).
    pub fn exponent_gcds(&self) -> (usize, usize) {
        let mut gx = 0usize;
        let mut gy = 0usize;
        for (j, r) in self.rows.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            gy = gy.gcd(&j);
            for (i, c) in r.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    gx = gx.gcd(&i);
                }
            }
        }
        (gx, gy)
    }

    /// Substitutes `X^gx -> X`, `Y^gy -> Y`; all exponents must be multiples.
    pub fn compress(&self, gx: usize, gy: usize) -> ZBi {
        ZBi::new(
            self.rows
                .iter()
                .step_by(gy)
                .map(|r| IntPoly::new(r.coeffs().iter().step_by(gx).cloned().collect()))
                .collect(),
        )
    }

    pub fn inflate(&self, gx: usize, gy: usize) -> ZBi {
        let mut rows = vec![IntPoly::zero(); (self.rows.len().max(1) - 1) * gy + 1];
        for (j, r) in self.rows.iter().enumerate() {
            let mut c = vec![BigInt::zero(); (r.coeffs().len().max(1) - 1) * gx + 1];
            for (i, a) in r.coeffs().iter().enumerate() {
                c[i * gx] = a.clone();
            }
            rows[j * gy] = IntPoly::new(c);
        }
        ZBi::new(rows)
    }

    pub fn mul(&self, rhs: &ZBi) -> ZBi {
        if self.is_zero() || rhs.is_zero() {
            return ZBi::default();
        }
        let mut rows = vec![IntPoly::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.rows.iter().enumerate() {
                if !b.is_zero() {
                    rows[i + j] = &rows[i + j] + &(a * b);
                }
            }
        }
        ZBi::new(rows)
    }

    fn eval_x(&self, xi: &BigInt) -> IntPoly {
        IntPoly::new(self.rows.iter().map(|r| r.eval(xi)).collect())
    }

    pub fn div_exact(&self, d: &ZBi) -> Option<ZBi> {
        let m = d.deg_y()?;
        let Some(n) = self.deg_y() else {
            return Some(ZBi::default());
        };
        if n < m {
            return None;
        }
        let lead = &d.rows[m];
        let mut rem = self.rows.clone();
        let mut q = vec![IntPoly::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            if rem[k + m].is_zero() {
                continue;
            }
            let qk = rem[k + m].div_exact(lead)?;
            for (j, dj) in d.rows.iter().enumerate() {
                if !dj.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&qk * dj);
                }
            }
            q[k] = qk;
        }
        rem.iter().all(IntPoly::is_zero).then(|| ZBi::new(q))
    }

    fn row_content(&self) -> IntPoly {
        self.rows
            .iter()
            .fold(IntPoly::zero(), |g, r| IntPoly::gcd(&g, r))
    }

    /// Primitive with respect to both `Z` and `Z[X]`, positive leading coefficient.
    fn primitive_rows(&self) -> ZBi {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.row_content();
        let mut out = ZBi::new(self.rows.iter().map(|r| r.div_exact(&c).unwrap()).collect());
        if out.rows.last().unwrap().leading_coeff().is_negative() {
            out.rows.iter_mut().for_each(|r| *r = -&*r);
        }
        out
    }

    /// Integer-primitive with positive leading coefficient (in Y, then X).
    pub fn primitive(&self) -> ZBi {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.integer_content();
        if self.rows.last().unwrap().leading_coeff().is_negative() {
            c = -c;
        }
        self.scale_div(&c)
    }

    fn pseudo_rem(&self, d: &ZBi) -> ZBi {
        let m = d.deg_y().unwrap();
        let lead = &d.rows[m];
        let mut rem = self.rows.clone();
        while rem.len() > m && !rem.is_empty() {
            let k = rem.len() - 1;
            let top = rem[k].clone();
            for r in rem.iter_mut() {
                *r = &*r * lead;
            }
            for (j, dj) in d.rows.iter().enumerate() {
                rem[k - m + j] = &rem[k - m + j] - &(&top * dj);
            }
            while rem.last().is_some_and(|r| r.is_zero()) {
                rem.pop();
            }
        }
        ZBi::new(rem)
    }
}

fn heuristic_gcd_bi(a: &ZBi, b: &ZBi) -> Option<ZBi> {
    let deg = a
        .rows
        .iter()
        .chain(&b.rows)
        .filter_map(IntPoly::degree)
        .max()
        .unwrap_or(0)
        .max(1);
    let mut xi = initial_point(&a.max_norm(), &b.max_norm());
    for _ in 0..HEURISTIC_ROUNDS {
        if xi.bits() * deg as u64 > MAX_EVAL_BITS {
            return None;
        }
        let gamma = IntPoly::gcd(&a.eval_x(&xi), &b.eval_x(&xi));
        let g = ZBi::new(
            gamma
                .coeffs()
                .iter()
                .map(|c| radix_digits(c, &xi))
                .collect(),
        )
        .primitive();
        if !g.is_zero() && a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
            return Some(g);
        }
        xi = next_point(&xi);
    }
    None
}

fn prs_gcd_bi(a: &ZBi, b: &ZBi) -> ZBi {
    let content = IntPoly::gcd(&a.row_content(), &b.row_content());
    let (mut a, mut b) = (a.primitive_rows(), b.primitive_rows());
    if a.deg_y() < b.deg_y() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_rows();
    }
    let a = a.primitive_rows();
    ZBi::new(a.rows.iter().map(|r| r * &content).collect()).primitive()
}

/// Integer-primitive gcd in `Z[X, Y]` with positive leading coefficient.
pub(crate) fn gcd_bi(a: &ZBi, b: &ZBi) -> ZBi {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let (ax, ay) = a.min_exponents();
    let (bx, by) = b.min_exponents();
    let a = a.shift_down(ax, ay);
    let b = b.shift_down(bx, by);
    let (gax, gay) = a.exponent_gcds();
    let (gbx, gby) = b.exponent_gcds();
    let gx = gax.gcd(&gbx).max(1);
    let gy = gay.gcd(&gby).max(1);
    let (ca, cb) = (a.compress(gx, gy), b.compress(gx, gy));
    let (ca, cb) = (ca.primitive(), cb.primitive());
    let g = heuristic_gcd_bi(&ca, &cb).unwrap_or_else(|| prs_gcd_bi(&ca, &cb));
    g.inflate(gx, gy).shift_up(ax.min(bx), ay.min(by))
}
