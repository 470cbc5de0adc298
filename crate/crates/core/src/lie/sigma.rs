use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::IntPoly;

use super::matrix::{companion, QMatrix};

/// Largest total size `Σ |c_i|` of the basis combinations tried by [`solve_sigma`].
pub const SIGMA_SEARCH_BOUND: i64 = 10;

/// Symmetric unimodular integer `σ` with `σ C = C^T σ`, `C` the companion matrix of `Δ`.
///
/// Solves the linear system over Q with the unknowns of the last row ordered
/// last, so they become the free parameters, then tries integer combinations
/// of the basis in order of increasing size until one has determinant `±1`.
pub fn solve_sigma(delta: &IntPoly) -> Result<QMatrix> {
    let c = companion(delta)?;
    let m = c.rows();
    // unknown σ_{ij}, i <= j, with pairs touching the last index at the end
    let mut vars: Vec<(usize, usize)> = Vec::new();
    for i in 0..m {
        for j in i..m {
            if j != m - 1 {
                vars.push((i, j));
            }
        }
    }
    for i in 0..m {
        vars.push((i, m - 1));
    }
    let index = |i: usize, j: usize| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        vars.iter().position(|&v| v == (a, b)).unwrap()
    };
    // (σC - C^Tσ)_{ij} = Σ_k σ_ik C_kj - C_ki σ_kj
    let mut sys = QMatrix::zeros(m * m, vars.len());
    for i in 0..m {
        for j in 0..m {
            let row = i * m + j;
            for k in 0..m {
                if !c[(k, j)].is_zero() {
                    let col = index(i, k);
                    sys[(row, col)] = &sys[(row, col)] + &c[(k, j)];
                }
                if !c[(k, i)].is_zero() {
                    let col = index(k, j);
                    sys[(row, col)] = &sys[(row, col)] - &c[(k, i)];
                }
            }
        }
    }
    let basis: Vec<QMatrix> = sys
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut s = QMatrix::zeros(m, m);
            for (idx, &(i, j)) in vars.iter().enumerate() {
                s[(i, j)] = v[idx].clone();
                s[(j, i)] = v[idx].clone();
            }
            s
        })
        .collect();
    for coeffs in combinations(basis.len(), SIGMA_SEARCH_BOUND) {
        let mut s = QMatrix::zeros(m, m);
        for (b, &k) in basis.iter().zip(&coeffs) {
            if k != 0 {
                s = s.add(&b.scale(&BigRational::from(BigInt::from(k))));
            }
        }
        if s.is_integral() && s.det().abs().is_one() {
            debug_assert!(s.is_symmetric());
            debug_assert_eq!(&s * &c, &c.transpose() * &s);
            return Ok(s);
        }
    }
    Err(Error::NoUnimodularSymmetrizer(SIGMA_SEARCH_BOUND))
}

/// Integer vectors of length `k` ordered by `Σ |c_i|` (1 up to `bound`), each
/// level enumerated with earlier coordinates varying slowest and positive
/// values first.
fn combinations(k: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    (1..=bound).flat_map(move |total| {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        fill(k, total, &mut current, &mut out);
        out
    })
}

fn fill(k: usize, remaining: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if current.len() == k {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let mut values: Vec<i64> = Vec::new();
    for a in (1..=remaining).rev() {
        values.push(a);
        values.push(-a);
    }
    values.push(0);
    for v in values {
        current.push(v);
        fill(k, remaining - v.abs(), current, out);
        current.pop();
    }
}
