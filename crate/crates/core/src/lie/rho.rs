use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::IntPoly;
use crate::numberfield::certify_irreducible;

use super::field::FieldElt;
use super::lattice::{verify_automorphism, LieLattice};
use super::matrix::QMatrix;
use super::sigma::solve_sigma;

/// 2x2 matrix over `Q[x]/(Δ)`, `[[a11, a12], [a21, a22]]`.
pub type Mat2 = [[FieldElt; 2]; 2];

pub fn det2(a: &Mat2) -> FieldElt {
    a[0][0].mul(&a[1][1]).sub(&a[0][1].mul(&a[1][0]))
}

/// `Σ ρ_2(A) Σ^{-1}` with `Σ = diag(I, σ, I_2)`:
/// `[[ι(a11), ι(a12) σ^{-1}], [σ ι(a21), σ ι(a22) σ^{-1}]] ⊕ I_2`.
pub fn rho2_conjugated(a: &Mat2, sigma: &QMatrix) -> Result<QMatrix> {
    let m = sigma.rows();
    let sinv = sigma.inverse()?;
    let mut g = QMatrix::identity(2 * m + 2);
    g.set_block(0, 0, &a[0][0].iota());
    g.set_block(0, m, &(&a[0][1].iota() * &sinv));
    g.set_block(m, 0, &(sigma * &a[1][0].iota()));
    g.set_block(m, m, &(&(sigma * &a[1][1].iota()) * &sinv));
    Ok(g)
}

/// Whether `Σ ρ_2(A) Σ^{-1}` is an automorphism of the lattice of `Δ` with determinant 1.
pub fn verify_rho2(delta: &IntPoly, a: &Mat2) -> Result<bool> {
    let d = det2(a);
    if !d.is_one() {
        return Err(Error::DeterminantNotOne(d.to_string()));
    }
    let l = LieLattice::from_delta(delta)?;
    let sigma = solve_sigma(delta)?;
    let g = rho2_conjugated(a, &sigma)?;
    Ok(verify_automorphism(&l, &g)? && g.det().is_one())
}

/// Random element of `SL_2(Q[x]/(Δ))` as a product of `steps` elementary
/// matrices with integer coefficients in `[-bound, bound]`.
pub fn random_sl2<R: Rng>(delta: &IntPoly, steps: usize, bound: i64, rng: &mut R) -> Mat2 {
    let one = FieldElt::one(delta);
    let zero = FieldElt::zero(delta);
    let mut acc: Mat2 = [[one.clone(), zero.clone()], [zero.clone(), one.clone()]];
    for step in 0..steps {
        let t = FieldElt::random(delta, bound, rng);
        let e: Mat2 = if step % 2 == 0 {
            [[one.clone(), t], [zero.clone(), one.clone()]]
        } else {
            [[one.clone(), zero.clone()], [t, one.clone()]]
        };
        acc = mul2(&acc, &e);
    }
    acc
}

fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    let entry = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// Element `x⊗α + y⊗β + z⊗γ` of the Heisenberg algebra over `Q[x]/(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct HeisenbergElt {
    x: FieldElt,
    y: FieldElt,
    z: FieldElt,
}

impl HeisenbergElt {
    fn bracket(&self, other: &HeisenbergElt) -> HeisenbergElt {
        let zero = FieldElt::zero(self.x.modulus());
        HeisenbergElt {
            x: zero.clone(),
            y: zero,
            z: self.x.mul(&other.y).sub(&other.x.mul(&self.y)),
        }
    }

    fn scale_add(&self, c: &BigRational, acc: &HeisenbergElt) -> HeisenbergElt {
        let k = FieldElt::new(vec![c.clone()], self.x.modulus());
        HeisenbergElt {
            x: acc.x.add(&self.x.mul(&k)),
            y: acc.y.add(&self.y.mul(&k)),
            z: acc.z.add(&self.z.mul(&k)),
        }
    }
}

/// Checks that `x_1 ↦ x⊗1, x_2 ↦ x⊗β_1, y_1 ↦ y⊗(-β_2), y_2 ↦ y⊗1,
/// z_1 ↦ z⊗(-β_2), z_2 ↦ z⊗1` (with `β_1` the class of `x` and
/// `β_2 = -b - β_1`) is a Lie algebra isomorphism from the lattice of
/// `f = x^2 + bx + c` onto `H ⊗ Q[x]/(f)`.
pub fn verify_quadratic_iso(f: &IntPoly) -> Result<bool> {
    if f.degree() != Some(2) {
        return Err(Error::InvalidArgument(format!("{f} is not quadratic")));
    }
    certify_irreducible(f)?;
    let l = LieLattice::from_delta(f)?;
    let zero = FieldElt::zero(f);
    let one = FieldElt::one(f);
    let beta1 = FieldElt::generator(f);
    let beta2 = FieldElt::from_i64(&[-1], f)
        .mul(&FieldElt::new(vec![BigRational::from(f.coeff(1))], f))
        .sub(&beta1);
    let neg_beta2 = beta2.neg();
    let elt = |x: &FieldElt, y: &FieldElt, z: &FieldElt| HeisenbergElt {
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
    };
    let images = [
        elt(&one, &zero, &zero),
        elt(&beta1, &zero, &zero),
        elt(&zero, &neg_beta2, &zero),
        elt(&zero, &one, &zero),
        elt(&zero, &zero, &neg_beta2),
        elt(&zero, &zero, &one),
    ];
    // bijectivity: the six images are Q-linearly independent
    let mut coords = QMatrix::zeros(6, 6);
    for (i, h) in images.iter().enumerate() {
        for (j, c) in
            h.x.coeffs()
                .iter()
                .chain(h.y.coeffs())
                .chain(h.z.coeffs())
                .enumerate()
        {
            coords[(i, j)] = c.clone();
        }
    }
    if coords.det().is_zero() {
        return Ok(false);
    }
    let origin = elt(&zero, &zero, &zero);
    for i in 0..6 {
        for j in (i + 1)..6 {
            let lhs = images[i].bracket(&images[j]);
            let rhs = l
                .bracket(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(origin.clone(), |acc, (k, c)| {
                    images[k].scale_add(&BigRational::from(c.clone()), &acc)
                });
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cubic() -> IntPoly {
        IntPoly::from_i64(&[-2, 0, 0, 1])
    }

    #[test]
    fn rho2_examples() {
        let f = cubic();
        let one = FieldElt::one(&f);
        let zero = FieldElt::zero(&f);
        let beta = FieldElt::generator(&f);
        let id: Mat2 = [[one.clone(), zero.clone()], [zero.clone(), one.clone()]];
        assert!(verify_rho2(&f, &id).unwrap());
        let unipotent: Mat2 = [[one.clone(), beta.clone()], [zero.clone(), one.clone()]];
        assert!(verify_rho2(&f, &unipotent).unwrap());
        let w: Mat2 = [[zero.clone(), one.neg()], [one.clone(), zero.clone()]];
        assert!(verify_rho2(&f, &w).unwrap());
        let bad: Mat2 = [[beta.clone(), zero.clone()], [zero.clone(), one.clone()]];
        assert!(matches!(
            verify_rho2(&f, &bad),
            Err(Error::DeterminantNotOne(_))
        ));
    }

    #[test]
    fn random_elements_have_determinant_one() {
        let f = cubic();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let a = random_sl2(&f, 4, 2, &mut rng);
            assert!(det2(&a).is_one());
            assert!(verify_rho2(&f, &a).unwrap());
        }
    }

    #[test]
    fn unconjugated_rho2_fails() {
        // without Σ the block [[ι, ι],[ι, ι]] does not preserve the bracket
        let f = cubic();
        let l = LieLattice::from_delta(&f).unwrap();
        let one = FieldElt::one(&f);
        let zero = FieldElt::zero(&f);
        let beta = FieldElt::generator(&f);
        let a: Mat2 = [[one.clone(), beta], [zero, one]];
        let g = rho2_conjugated(&a, &QMatrix::identity(3)).unwrap();
        assert!(!verify_automorphism(&l, &g).unwrap());
    }

    #[test]
    fn quadratic_iso_examples() {
        assert!(verify_quadratic_iso(&IntPoly::from_i64(&[1, 0, 1])).unwrap());
        assert!(verify_quadratic_iso(&IntPoly::from_i64(&[-1, -1, 1])).unwrap());
        assert!(verify_quadratic_iso(&IntPoly::from_i64(&[0, 0, 1])).is_err());
        assert!(verify_quadratic_iso(&IntPoly::from_i64(&[-2, 0, 0, 1])).is_err());
    }
}
