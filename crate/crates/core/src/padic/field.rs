use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::arith::{is_prime, prime_power};
use crate::exactalg::factor::first_irreducible;

/// Truncated model of `F = Q_{p^f}(π)` with `π^e = p`: the unramified
/// extension of degree `f` (generated by a root of a monic `h` irreducible
/// mod `p`) followed by the Eisenstein extension `x^e - p`.
///
/// Elements are known modulo `π^N` relative to their leading power of `π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFieldSpec {
    p: u64,
    e: u32,
    f: u32,
    n: u32,
    /// monic, degree `f`, constant term first
    h: Vec<u64>,
    /// digits of `p` kept in each body coefficient
    m: u32,
    pm: u64,
}

impl LocalFieldSpec {
    pub fn new(p: u64, e: u32, f: u32, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 || f == 0 || n == 0 {
            return Err(Error::InvalidArgument("e, f and N must be positive".into()));
        }
        let m = n.div_ceil(e) + 1;
        let pm = (0..m)
            .try_fold(1u64, |acc, _| acc.checked_mul(p))
            .filter(|&v| v < 1 << 62)
            .ok_or_else(|| {
                Error::InvalidArgument(format!("precision N = {n} too large for p = {p}, e = {e}"))
            })?;
        let h = if f == 1 {
            vec![0, 1]
        } else {
            first_irreducible(p, f as usize).coeffs().to_vec()
        };
        Ok(LocalFieldSpec {
            p,
            e,
            f,
            n,
            h,
            m,
            pm,
        })
    }

    /// Field with residue field of size `q` and ramification `e`.
    pub fn from_q(q: u64, e: u32, n: u32) -> Result<Self> {
        let (p, f) = prime_power(q)
            .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        Self::new(p, e, f, n)
    }

    /// Default working precision `2 max_m + 4`.
    pub fn default_precision(max_m: u32) -> u32 {
        2 * max_m + 4
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn precision(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.f)
    }

    /// Residue-field representative of index `idx < q`: the polynomial in the
    /// unramified generator whose coefficients are the base-`p` digits of `idx`.
    pub fn digit(&self, idx: u64) -> Vec<u64> {
        let mut c = Vec::with_capacity(self.f as usize);
        let mut rest = idx;
        for _ in 0..self.f {
            c.push(rest % self.p);
            rest /= self.p;
        }
        debug_assert_eq!(rest, 0, "digit index out of range");
        c
    }

    fn zero_unit(&self) -> Vec<u64> {
        vec![0; self.f as usize]
    }

    fn zero_body(&self) -> Vec<Vec<u64>> {
        vec![self.zero_unit(); self.e as usize]
    }

    fn add_u(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(x, y)| ((*x as u128 + *y as u128) % self.pm as u128) as u64)
            .collect()
    }

    fn neg_u(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .map(|x| (self.pm - x % self.pm) % self.pm)
            .collect()
    }

    fn scale_u(&self, a: &[u64], c: u64) -> Vec<u64> {
        a.iter()
            .map(|x| ((*x as u128 * c as u128) % self.pm as u128) as u64)
            .collect()
    }

    /// Product in `(Z/p^M)[t]/(h)`.
    fn mul_u(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.f as usize;
        let pm = self.pm as u128;
        let mut prod = vec![0u128; 2 * f];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % pm;
            }
        }
        for k in (f..2 * f).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..f {
                let hj = self.h[j] as u128;
                prod[k - f + j] = (prod[k - f + j] + (pm - c) * hj) % pm;
            }
        }
        prod.truncate(f);
        prod.into_iter().map(|v| v as u64).collect()
    }

    fn vp_u(&self, a: &[u64]) -> Option<u32> {
        a.iter()
            .filter(|&&x| x != 0)
            .map(|&x| {
                let mut v = 0;
                let mut y = x;
                while y % self.p == 0 {
                    y /= self.p;
                    v += 1;
                }
                v
            })
            .min()
    }

    /// `body · π`.
    fn shift_body(&self, body: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let e = self.e as usize;
        let mut out = self.zero_body();
        for j in 0..e {
            if j + 1 < e {
                out[j + 1] = body[j].clone();
            } else {
                out[0] = self.scale_u(&body[j], self.p);
            }
        }
        out
    }

    fn mul_body(&self, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let e = self.e as usize;
        let mut out = self.zero_body();
        for (j, aj) in a.iter().enumerate() {
            if aj.iter().all(|&x| x == 0) {
                continue;
            }
            for (k, bk) in b.iter().enumerate() {
                let t = self.mul_u(aj, bk);
                let (idx, t) = if j + k >= e {
                    (j + k - e, self.scale_u(&t, self.p))
                } else {
                    (j + k, t)
                };
                out[idx] = self.add_u(&out[idx], &t);
            }
        }
        out
    }

    /// `min_j (e · v_p(u_j) + j)`, or `None` for the zero body.
    fn body_valuation(&self, body: &[Vec<u64>]) -> Option<i64> {
        body.iter()
            .enumerate()
            .filter_map(|(j, u)| self.vp_u(u).map(|v| self.e as i64 * v as i64 + j as i64))
            .min()
    }

    pub fn zero(&self) -> LocalElt {
        LocalElt {
            shift: 0,
            body: self.zero_body(),
            prec: self.n as i64,
        }
    }

    pub fn one(&self) -> LocalElt {
        self.pi_power(0)
    }

    /// `π^k`, exact.
    pub fn pi_power(&self, k: i64) -> LocalElt {
        let mut body = self.zero_body();
        body[0][0] = 1;
        LocalElt {
            shift: k,
            body,
            prec: k + self.n as i64,
        }
    }

    /// `p^v`, exact.
    pub fn p_power(&self, v: i64) -> LocalElt {
        self.pi_power(self.e as i64 * v)
    }

    /// `π^k Σ_i [λ_i] π^i` for digit indices `λ_i < q`; when `known` is
    /// `Some(j)` only the first `j` digits are known and the value is
    /// determined modulo `π^{k+j}`.
    pub fn from_digits(&self, k: i64, digits: &[u64], known: Option<usize>) -> LocalElt {
        let e = self.e as usize;
        let mut body = self.zero_body();
        for (i, &d) in digits.iter().enumerate() {
            if d == 0 {
                continue;
            }
            // π^i = p^{i / e} π^{i mod e}
            let pk = (0..i / e).fold(1u64, |acc, _| acc.saturating_mul(self.p));
            if i / e >= self.m as usize {
                continue;
            }
            let u = self.scale_u(&self.digit(d), pk);
            body[i % e] = self.add_u(&body[i % e], &u);
        }
        let rel = match known {
            Some(j) => (j as i64).min(self.n as i64),
            None => self.n as i64,
        };
        LocalElt {
            shift: k,
            body,
            prec: k + rel,
        }
    }

    pub fn neg(&self, a: &LocalElt) -> LocalElt {
        LocalElt {
            shift: a.shift,
            body: a.body.iter().map(|u| self.neg_u(u)).collect(),
            prec: a.prec,
        }
    }

    pub fn add(&self, a: &LocalElt, b: &LocalElt) -> LocalElt {
        let s = a.shift.min(b.shift);
        let align = |x: &LocalElt| {
            let mut body = x.body.clone();
            for _ in 0..(x.shift - s) {
                body = self.shift_body(&body);
            }
            body
        };
        let (ba, bb) = (align(a), align(b));
        let body = ba.iter().zip(&bb).map(|(u, w)| self.add_u(u, w)).collect();
        LocalElt {
            shift: s,
            body,
            prec: a.prec.min(b.prec).min(s + self.n as i64),
        }
    }

    pub fn sub(&self, a: &LocalElt, b: &LocalElt) -> LocalElt {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &LocalElt, b: &LocalElt) -> LocalElt {
        let va = self.valuation_bound(a);
        let vb = self.valuation_bound(b);
        let shift = a.shift + b.shift;
        let prec = (a.prec + vb)
            .min(b.prec + va)
            .min(a.prec + b.prec)
            .min(shift + self.n as i64);
        LocalElt {
            shift,
            body: self.mul_body(&a.body, &b.body),
            prec,
        }
    }

    /// Valuation if decided at the available precision.
    pub fn valuation(&self, a: &LocalElt) -> Valuation {
        match self.body_valuation(&a.body) {
            Some(v) if a.shift + v < a.prec => Valuation::Exact(a.shift + v),
            _ => Valuation::AtLeast(a.prec),
        }
    }

    fn valuation_bound(&self, a: &LocalElt) -> i64 {
        match self.valuation(a) {
            Valuation::Exact(v) | Valuation::AtLeast(v) => v,
        }
    }

    /// Whether `a ∈ O_F`; errors if the known digits cannot decide it.
    pub fn is_integral(&self, a: &LocalElt) -> Result<bool> {
        match self.valuation(a) {
            Valuation::Exact(v) => Ok(v >= 0),
            Valuation::AtLeast(v) if v >= 0 => Ok(true),
            Valuation::AtLeast(v) => Err(Error::PrecisionExhausted { known: v }),
        }
    }

    /// Whether `a` vanishes at the available precision.
    pub fn is_zero(&self, a: &LocalElt) -> bool {
        matches!(self.valuation(a), Valuation::AtLeast(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Exact(i64),
    /// the element vanishes modulo `π^k`
    AtLeast(i64),
}

/// `π^shift · Σ_j u_j π^j` with `u_j` in the unramified ring mod `p^M`,
/// known modulo `π^prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalElt {
    shift: i64,
    body: Vec<Vec<u64>>,
    prec: i64,
}

impl LocalElt {
    /// Absolute precision: the element is known modulo `π^prec`.
    pub fn precision(&self) -> i64 {
        self.prec
    }
}

impl fmt::Display for LocalElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pi^{} * {:?} + O(pi^{})",
            self.shift, self.body, self.prec
        )
    }
}
