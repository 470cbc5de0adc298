use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::IntPoly;
use crate::numberfield::certify_irreducible;

use super::matrix::{companion, QMatrix};

/// Sparse structure constants: `[e_i, e_j] = Σ_k c_k e_k` stored as `(k, c_k)` pairs.
type Bracket = Vec<(usize, BigInt)>;

/// Class-2 nilpotent Lie lattice with basis `x_1..x_m, y_1..y_m, z_1, z_2` and
/// `[x_i, y_j] = δ_ij z_1 + C_ij z_2`, `C` the companion matrix of `Δ`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieLattice {
    delta: IntPoly,
    m: usize,
    table: Vec<Vec<Bracket>>,
}

impl LieLattice {
    /// Lattice attached to a monic `Δ` of degree `m`; no irreducibility check.
    pub fn from_delta(delta: &IntPoly) -> Result<Self> {
        let c = companion(delta)?;
        let m = delta.degree().unwrap();
        let rank = 2 * m + 2;
        let (z1, z2) = (2 * m, 2 * m + 1);
        let mut table = vec![vec![Vec::new(); rank]; rank];
        for i in 0..m {
            for j in 0..m {
                let mut b: Bracket = Vec::new();
                if i == j {
                    b.push((z1, BigInt::one()));
                }
                let cij = c[(i, j)].to_integer();
                if !cij.is_zero() {
                    b.push((z2, cij));
                }
                table[m + j][i] = b.iter().map(|(k, v)| (*k, -v)).collect();
                table[i][m + j] = b;
            }
        }
        Ok(LieLattice {
            delta: delta.clone(),
            m,
            table,
        })
    }

    pub fn delta(&self) -> &IntPoly {
        &self.delta
    }

    /// `ℓ n`, the number of `x` (and of `y`) generators.
    pub fn half_rank(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        2 * self.m + 2
    }

    pub fn label(&self, i: usize) -> String {
        let m = self.m;
        match i {
            _ if i < m => format!("x_{}", i + 1),
            _ if i < 2 * m => format!("y_{}", i - m + 1),
            _ => format!("z_{}", i - 2 * m + 1),
        }
    }

    pub fn x(&self, i: usize) -> usize {
        i - 1
    }

    pub fn y(&self, i: usize) -> usize {
        self.m + i - 1
    }

    pub fn z(&self, i: usize) -> usize {
        2 * self.m + i - 1
    }

    /// Structure-constant vector of `[e_i, e_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.rank()];
        for (k, c) in &self.table[i][j] {
            v[*k] = c.clone();
        }
        v
    }

    /// Overwrites one entry of the bracket table (for constructing broken examples).
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &[BigInt]) {
        self.table[i][j] = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vec(&self, u: &[BigRational], v: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.rank()];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || self.table[i][j].is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &ab * BigRational::from(c.clone());
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.rank()];
        v[i] = BigRational::one();
        v
    }
}

impl fmt::Debug for LieLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieLattice(Δ = {}, rank {})", self.delta, self.rank())
    }
}

/// Lattice for `Δ = f^ℓ` with `f` certified irreducible of degree `>= 2`.
pub fn build_lattice(f: &IntPoly, ell: u32) -> Result<LieLattice> {
    if ell == 0 {
        return Err(Error::InvalidArgument("ell must be at least 1".into()));
    }
    match f.degree() {
        Some(n) if n >= 2 => {}
        _ => {
            return Err(Error::InvalidArgument(
                "f must have degree at least 2".into(),
            ))
        }
    }
    certify_irreducible(f)?;
    LieLattice::from_delta(&f.pow(ell))
}

/// Violations found by [`check_lie_axioms`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// Pairs `(i, j)` with `[e_i, e_j] != -[e_j, e_i]` (including `[e_i, e_i] != 0`).
    pub antisymmetry: Vec<(usize, usize)>,
    /// Triples failing the Jacobi identity.
    pub jacobi: Vec<(usize, usize, usize)>,
    /// Dimension of the center over Q.
    pub center_dim: usize,
    /// Whether the center is exactly `span(z_1, z_2)`.
    pub center_is_z: bool,
}

impl AxiomReport {
    pub fn is_lie_algebra(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }

    pub fn all_pass(&self) -> bool {
        self.is_lie_algebra() && self.center_is_z
    }
}

/// Checks antisymmetry and Jacobi on basis elements and computes the center.
/// Bilinearity holds by construction of the bracket from a table.
pub fn check_lie_axioms(l: &LieLattice) -> AxiomReport {
    let rank = l.rank();
    let mut report = AxiomReport::default();
    for i in 0..rank {
        for j in i..rank {
            let a = l.bracket(i, j);
            let b = l.bracket(j, i);
            if a.iter().zip(&b).any(|(u, v)| u + v != BigInt::zero()) {
                report.antisymmetry.push((i, j));
            }
        }
    }
    let units: Vec<Vec<BigRational>> = (0..rank).map(|i| l.unit(i)).collect();
    for i in 0..rank {
        for j in 0..rank {
            let ij = l.bracket_vec(&units[i], &units[j]);
            for k in 0..rank {
                let jk = l.bracket_vec(&units[j], &units[k]);
                let ki = l.bracket_vec(&units[k], &units[i]);
                let s1 = l.bracket_vec(&ij, &units[k]);
                let s2 = l.bracket_vec(&jk, &units[i]);
                let s3 = l.bracket_vec(&ki, &units[j]);
                if s1
                    .iter()
                    .zip(&s2)
                    .zip(&s3)
                    .any(|((a, b), c)| !(a + b + c).is_zero())
                {
                    report.jacobi.push((i, j, k));
                }
            }
        }
    }
    // v is central iff Σ_i v_i [e_i, e_j] = 0 for every j
    let mut m = QMatrix::zeros(rank * rank, rank);
    for i in 0..rank {
        for j in 0..rank {
            for (k, c) in &l.table[i][j] {
                m[(j * rank + k, i)] = BigRational::from(c.clone());
            }
        }
    }
    let center = m.nullspace();
    report.center_dim = center.len();
    let (z1, z2) = (l.z(1), l.z(2));
    report.center_is_z = center.len() == 2
        && center.iter().all(|v| {
            v.iter()
                .enumerate()
                .all(|(k, c)| k == z1 || k == z2 || c.is_zero())
        });
    report
}

/// Whether `g` preserves the bracket. Row `i` of `g` is the image of `e_i`.
pub fn verify_automorphism(l: &LieLattice, g: &QMatrix) -> Result<bool> {
    let rank = l.rank();
    if g.rows() != rank || g.cols() != rank {
        return Err(Error::InvalidArgument(format!(
            "expected a {rank}x{rank} matrix, got {}x{}",
            g.rows(),
            g.cols()
        )));
    }
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    for i in 0..rank {
        for j in (i + 1)..rank {
            let lhs = l.bracket_vec(g.row(i), g.row(j));
            let mut rhs = vec![BigRational::zero(); rank];
            for (k, c) in &l.table[i][j] {
                let c = BigRational::from(c.clone());
                for (t, gk) in g.row(*k).iter().enumerate() {
                    rhs[t] += &c * gk;
                }
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `diag(a I, I, a I_2)`.
pub fn rho1(l: &LieLattice, a: &BigRational) -> QMatrix {
    let m = l.half_rank();
    let mut g = QMatrix::identity(l.rank());
    for i in (0..m).chain(2 * m..2 * m + 2) {
        g[(i, i)] = a.clone();
    }
    g
}

/// Identity plus central components: row `i < 2m` gains `c[i] = (c_{i,1}, c_{i,2})`
/// in the `z_1`, `z_2` columns.
pub fn rho3(l: &LieLattice, c: &[(BigRational, BigRational)]) -> QMatrix {
    let m = l.half_rank();
    assert_eq!(c.len(), 2 * m, "one pair per non-central generator");
    let mut g = QMatrix::identity(l.rank());
    for (i, (a, b)) in c.iter().enumerate() {
        g[(i, 2 * m)] = a.clone();
        g[(i, 2 * m + 1)] = b.clone();
    }
    g
}
