use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};

use super::field::{LocalElt, LocalFieldSpec};

/// Default limit on the number of representatives materialized at once.
pub const DEFAULT_ENUM_BUDGET: u64 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepKind {
    /// `[[π^m, 0], [π^{-m} κ, π^{-m}]]`, `κ ∈ I_{2m}`
    A,
    /// `[[0, -π^m], [π^{-m}, -π^{-m+1} κ]]`, `κ ∈ I_{2m-1}`
    B,
}

/// Representative of a right coset of `SL_2(O_F)` in `SL_2(F)`; `kappa`
/// lists the residue digit indices of `κ`, least significant first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetRep {
    pub kind: RepKind,
    pub m: u32,
    pub kappa: Vec<u64>,
}

impl CosetRep {
    pub fn kappa_len(kind: RepKind, m: u32) -> usize {
        match kind {
            RepKind::A => 2 * m as usize,
            RepKind::B => 2 * m as usize - 1,
        }
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}(m={}, kappa={:?})", self.kind, self.m, self.kappa)
    }
}

pub type Mat2 = [[LocalElt; 2]; 2];

/// Matrix of a representative; when `known` is `Some(j)` only the first `j`
/// digits of `κ` are known.
pub fn rep_matrix(field: &LocalFieldSpec, rep: &CosetRep, known: Option<usize>) -> Mat2 {
    let m = rep.m as i64;
    match rep.kind {
        RepKind::A => [
            [field.pi_power(m), field.zero()],
            [field.from_digits(-m, &rep.kappa, known), field.pi_power(-m)],
        ],
        RepKind::B => [
            [field.zero(), field.neg(&field.pi_power(m))],
            [
                field.pi_power(-m),
                field.neg(&field.from_digits(1 - m, &rep.kappa, known)),
            ],
        ],
    }
}

fn mat_mul(field: &LocalFieldSpec, a: &Mat2, b: &Mat2) -> Mat2 {
    let entry = |i: usize, j: usize| {
        field.add(
            &field.mul(&a[i][0], &b[0][j]),
            &field.mul(&a[i][1], &b[1][j]),
        )
    };
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// Inverse of a determinant-one matrix.
fn sl2_inverse(field: &LocalFieldSpec, a: &Mat2) -> Mat2 {
    [
        [a[1][1].clone(), field.neg(&a[0][1])],
        [field.neg(&a[1][0]), a[0][0].clone()],
    ]
}

/// Whether `det = 1` at the working precision.
pub fn determinant_is_one(field: &LocalFieldSpec, rep: &CosetRep) -> bool {
    let g = rep_matrix(field, rep, None);
    let det = field.sub(
        &field.mul(&g[0][0], &g[1][1]),
        &field.mul(&g[0][1], &g[1][0]),
    );
    field.is_zero(&field.sub(&det, &field.one()))
}

/// Number of representatives with `m <= max_m`.
pub fn rep_count(q: u64, max_m: u32) -> BigInt {
    let qb = BigInt::from(q);
    let mut total = BigInt::zero();
    for m in 0..=max_m {
        total += qb.pow(2 * m);
        if m >= 1 {
            total += qb.pow(2 * m - 1);
        }
    }
    total
}

fn check_budget(q: u64, max_m: u32, budget: u64) -> Result<()> {
    let required = rep_count(q, max_m);
    if required > BigInt::from(budget) {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// All representatives of kind A with `m <= max_m` and of kind B with `1 <= m <= max_m`.
pub fn enum_reps(field: &LocalFieldSpec, max_m: u32, budget: u64) -> Result<Vec<CosetRep>> {
    let q = field.q();
    check_budget(q, max_m, budget)?;
    let mut out = Vec::new();
    for kind in [RepKind::A, RepKind::B] {
        for m in 0..=max_m {
            if kind == RepKind::B && m == 0 {
                continue;
            }
            let len = CosetRep::kappa_len(kind, m);
            let mut kappa = vec![0u64; len];
            loop {
                out.push(CosetRep {
                    kind,
                    m,
                    kappa: kappa.clone(),
                });
                // odometer in base q
                let mut i = 0;
                while i < len {
                    kappa[i] += 1;
                    if kappa[i] < q {
                        break;
                    }
                    kappa[i] = 0;
                    i += 1;
                }
                if i == len {
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn all_integral(field: &LocalFieldSpec, g: &Mat2) -> Result<bool> {
    for row in g {
        for x in row {
            if !field.is_integral(x)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `r1 r2^{-1} ∈ SL_2(O_F)`.
pub fn same_coset(field: &LocalFieldSpec, r1: &CosetRep, r2: &CosetRep) -> Result<bool> {
    let g1 = rep_matrix(field, r1, None);
    let g2 = rep_matrix(field, r2, None);
    all_integral(field, &mat_mul(field, &g1, &sl2_inverse(field, &g2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctnessReport {
    pub reps: usize,
    pub pairs_checked: usize,
    pub collisions: Vec<(CosetRep, CosetRep)>,
}

impl DistinctnessReport {
    pub fn passed(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// Checks that no two representatives with `m <= max_m` lie in the same coset.
pub fn transversal_distinctness(
    field: &LocalFieldSpec,
    max_m: u32,
    budget: u64,
) -> Result<DistinctnessReport> {
    let reps = enum_reps(field, max_m, budget)?;
    let pairs = reps.len() * reps.len().saturating_sub(1) / 2;
    let collisions: Vec<Vec<(CosetRep, CosetRep)>> = (0..reps.len())
        .into_par_iter()
        .map(|i| {
            let mut found = Vec::new();
            for j in (i + 1)..reps.len() {
                if same_coset(field, &reps[i], &reps[j])? {
                    found.push((reps[i].clone(), reps[j].clone()));
                }
            }
            Ok(found)
        })
        .collect::<Result<_>>()?;
    Ok(DistinctnessReport {
        reps: reps.len(),
        pairs_checked: pairs,
        collisions: collisions.into_iter().flatten().collect(),
    })
}

/// Membership of a (possibly partially known) representative in `S_F(a)`,
/// `v_p(a) = v`: is `[[a α_11, α_12], [a α_21, α_22]]` integral?
fn in_s(field: &LocalFieldSpec, v: u32, g: &Mat2) -> Result<bool> {
    let a = field.p_power(v as i64);
    let scaled = [
        [field.mul(&a, &g[0][0]), g[0][1].clone()],
        [field.mul(&a, &g[1][0]), g[1][1].clone()],
    ];
    let mut undecided = None;
    for row in &scaled {
        for x in row {
            match field.is_integral(x) {
                Ok(false) => return Ok(false),
                Ok(true) => {}
                Err(e) => undecided = Some(e),
            }
        }
    }
    match undecided {
        Some(e) => Err(e),
        None => Ok(true),
    }
}

/// How [`count_in_s`] obtained its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    /// every representative with `m <= e v` was materialized and tested
    Exhaustive,
    /// digits of `κ` were fixed one at a time, stopping as soon as membership
    /// is decided by the known digits
    DigitTree,
}

/// Number of coset representatives contained in `S_F(a)` for `v_p(a) = v`.
///
/// Exhaustive when the `q^{O(ev)}` representatives fit in `budget`, otherwise
/// enumerated by digit prefixes.
pub fn count_in_s(field: &LocalFieldSpec, v: u32, budget: u64) -> Result<(BigInt, CountMethod)> {
    let max_m = field.e() * v;
    if rep_count(field.q(), max_m) <= BigInt::from(budget) {
        let reps = enum_reps(field, max_m, budget)?;
        let mut count = 0u64;
        for r in &reps {
            if in_s(field, v, &rep_matrix(field, r, None))? {
                count += 1;
            }
        }
        return Ok((BigInt::from(count), CountMethod::Exhaustive));
    }
    let mut total = BigInt::zero();
    for kind in [RepKind::A, RepKind::B] {
        for m in 0..=max_m {
            if kind == RepKind::B && m == 0 {
                continue;
            }
            let mut prefix = Vec::new();
            total += count_prefix(field, v, kind, m, &mut prefix)?;
        }
    }
    Ok((total, CountMethod::DigitTree))
}

fn count_prefix(
    field: &LocalFieldSpec,
    v: u32,
    kind: RepKind,
    m: u32,
    prefix: &mut Vec<u64>,
) -> Result<BigInt> {
    let len = CosetRep::kappa_len(kind, m);
    let rep = CosetRep {
        kind,
        m,
        kappa: prefix.clone(),
    };
    let known = if prefix.len() == len {
        None
    } else {
        Some(prefix.len())
    };
    match in_s(field, v, &rep_matrix(field, &rep, known)) {
        Ok(true) => Ok(BigInt::from(field.q()).pow((len - prefix.len()) as u32)),
        Ok(false) => Ok(BigInt::zero()),
        Err(e) if prefix.len() == len => Err(e),
        Err(_) => {
            let mut total = BigInt::zero();
            for d in 0..field.q() {
                prefix.push(d);
                total += count_prefix(field, v, kind, m, prefix)?;
                prefix.pop();
            }
            Ok(total)
        }
    }
}

/// `(1 - q^{ev+1}) / (1 - q)`.
pub fn expected_count(q: u64, e: u32, v: u32) -> BigInt {
    let qb = BigInt::from(q);
    (0..=e * v).map(|k| qb.pow(k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64, e: u32, max_m: u32) -> LocalFieldSpec {
        LocalFieldSpec::from_q(q, e, LocalFieldSpec::default_precision(max_m)).unwrap()
    }

    #[test]
    fn enumeration_sizes() {
        let f = field(2, 1, 1);
        assert_eq!(enum_reps(&f, 0, 100).unwrap().len(), 1);
        assert_eq!(enum_reps(&f, 1, 100).unwrap().len(), 7);
        assert_eq!(enum_reps(&field(3, 1, 1), 1, 100).unwrap().len(), 13);
        assert_eq!(rep_count(2, 2), BigInt::from(31));
        assert!(matches!(
            enum_reps(&f, 5, 100),
            Err(Error::BudgetExceeded { budget: 100, .. })
        ));
    }

    #[test]
    fn coset_membership_examples() {
        let f = field(2, 1, 1);
        let id = CosetRep {
            kind: RepKind::A,
            m: 0,
            kappa: vec![],
        };
        let a1 = CosetRep {
            kind: RepKind::A,
            m: 1,
            kappa: vec![0, 0],
        };
        assert!(same_coset(&f, &id, &id).unwrap());
        assert!(!same_coset(&f, &id, &a1).unwrap());
        let b0 = CosetRep {
            kind: RepKind::B,
            m: 1,
            kappa: vec![0],
        };
        let b1 = CosetRep {
            kind: RepKind::B,
            m: 1,
            kappa: vec![1],
        };
        assert!(!same_coset(&f, &b0, &b1).unwrap());
        // I_m depends on the field: any representative times an integral matrix stays put
        assert!(determinant_is_one(&f, &b1));
    }

    #[test]
    fn distinctness_small() {
        for (q, e, max_m, reps) in [(2, 1, 2, 31), (3, 1, 1, 13), (2, 2, 1, 7)] {
            let r = transversal_distinctness(&field(q, e, max_m), max_m, 1000).unwrap();
            assert_eq!(r.reps, reps);
            assert!(r.passed(), "{:?}", r.collisions);
        }
    }

    #[test]
    fn insufficient_precision_is_reported() {
        let f = LocalFieldSpec::from_q(2, 1, 2).unwrap();
        let a = CosetRep {
            kind: RepKind::A,
            m: 2,
            kappa: vec![1, 0, 0, 0],
        };
        assert!(matches!(
            same_coset(&f, &a, &a),
            Err(Error::PrecisionExhausted { .. })
        ));
    }

    #[test]
    fn counts_match_formula() {
        let f = field(3, 1, 2);
        assert_eq!(count_in_s(&f, 0, 1000).unwrap().0, BigInt::from(1));
        assert_eq!(
            count_in_s(&f, 2, 1000).unwrap(),
            (BigInt::from(13), CountMethod::Exhaustive)
        );
        let g = field(2, 2, 2);
        assert_eq!(count_in_s(&g, 1, 1000).unwrap().0, BigInt::from(7));
        let (c, method) = count_in_s(&field(7, 3, 9), 3, 1000).unwrap();
        assert_eq!(method, CountMethod::DigitTree);
        assert_eq!(c, expected_count(7, 3, 3));
    }
}
