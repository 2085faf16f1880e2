//! The double ratio of two points and its characteristic polynomial.
//!
//! For points `a = (Q₁, Q₂)` and `b = (R₁, R₂)` with `R₁` transverse to `Q₂`
//! and `R₂` transverse to `Q₁`, let `M = angular(R₁; Q₁, Q₂)` and
//! `N = angular(R₂; Q₂, Q₁)`. The operator `NM` on `Q₁` changes by
//! conjugation under `G`, so its characteristic polynomial is an invariant of
//! the pair.

use serde::{Deserialize, Serialize};

use crate::catalog::SeriesEntry;
use crate::charts::{angular_operator, AngularCoords};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Ring, Scalar};
use crate::spaces::{contains, SpacePoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleRatio {
    /// `NM` in the canonical basis of `Q₁`
    pub operator: Matrix,
    /// characteristic polynomial, highest degree first; over ℍ it is that of
    /// the complex form of `NM`
    pub charpoly: Vec<Scalar>,
}

/// Double ratio of two points of the space of `e`.
pub fn double_ratio(e: &SeriesEntry, a: &SpacePoint, b: &SpacePoint) -> Result<DoubleRatio> {
    for pt in [a, b] {
        if !contains(e, pt)? {
            return Err(Error::NotAPoint);
        }
    }
    double_ratio_of_pairs(a, b)
}

/// Double ratio of two decompositions, without membership checks.
pub fn double_ratio_of_pairs(a: &SpacePoint, b: &SpacePoint) -> Result<DoubleRatio> {
    let m = angular_operator(&b.q1, &a.q1, &a.q2)?;
    let n = angular_operator(&b.q2, &a.q2, &a.q1)?;
    let operator = &n * &m;
    let charpoly = charpoly(&operator)?;
    Ok(DoubleRatio { operator, charpoly })
}

/// `(1 − Y₂X₁)⁻¹ (X₂ − Y₂) (1 − Y₁X₂)⁻¹ (X₁ − Y₁)` for chart coordinates
/// `x = (X₁, X₂)` and `y = (Y₁, Y₂)` of two points.
pub fn double_ratio_in_chart(x: &AngularCoords, y: &AngularCoords) -> Result<Matrix> {
    let id_x = Matrix::identity(x.m.ring(), x.m.cols());
    let id_y = Matrix::identity(x.m.ring(), x.m.rows());
    let left = (&id_x - &(&y.n * &x.m)).invert().map_err(|_| Error::NotTransverse)?;
    let mid = (&id_y - &(&y.m * &x.n)).invert().map_err(|_| Error::NotTransverse)?;
    Ok(&(&(&left * &(&x.n - &y.n)) * &mid) * &(&x.m - &y.m))
}

/// Characteristic polynomial `det(t·1 − A)` by the Faddeev–LeVerrier
/// recursion; quaternionic matrices are complexified first.
pub fn charpoly(a: &Matrix) -> Result<Vec<Scalar>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    let a = if a.ring() == Ring::H { a.complexify()? } else { a.clone() };
    let ring = a.ring();
    let n = a.rows();
    let mut coeffs = vec![Scalar::one(ring)];
    let mut acc = Matrix::zeros(ring, n, n);
    for k in 1..=n {
        let shifted = &acc + &Matrix::scalar(n, coeffs.last().expect("leading coefficient"));
        acc = &a * &shifted;
        let scale = -Rational::new(1.into(), (k as i64).into());
        coeffs.push(acc.trace().scale(&scale));
    }
    Ok(coeffs)
}

/// Evaluate a polynomial given highest degree first.
pub fn eval_poly(coeffs: &[Scalar], t: &Scalar) -> Scalar {
    let ring = coeffs.first().map_or(t.ring(), |c| c.ring().join(t.ring()));
    coeffs.iter().fold(Scalar::zero(ring), |acc, c| &(&acc * t) + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_2x2() {
        let a = Matrix::from_i64(Ring::R, &[&[1, 2], &[3, 4]]);
        let p = charpoly(&a).unwrap();
        let expect: Vec<Scalar> = [1, -5, -2].iter().map(|&v| Scalar::from_i64(Ring::R, v)).collect();
        assert_eq!(p, expect);
    }

    #[test]
    fn charpoly_of_quaternion_is_norm_polynomial() {
        let q = Matrix::scalar(1, &Scalar::quaternion_i64(1, 1, 1, 1));
        let p = charpoly(&q).unwrap();
        let expect: Vec<Scalar> = [1, -2, 4].iter().map(|&v| Scalar::from_i64(Ring::C, v)).collect();
        assert_eq!(p, expect);
    }

    #[test]
    fn cayley_hamilton_small() {
        let a = Matrix::from_i64(Ring::R, &[&[0, 1, 2], &[1, 0, 3], &[4, -1, 0]]);
        let p = charpoly(&a).unwrap();
        let mut acc = Matrix::zeros(Ring::R, 3, 3);
        for c in &p {
            acc = &(&acc * &a) + &Matrix::scalar(3, c);
        }
        assert!(acc.is_zero());
    }
}
