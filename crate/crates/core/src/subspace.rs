//! Right submodules of `K^n` in canonical column-reduced echelon form.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Ring, Scalar};

/// A subspace of `K^n`, stored by a canonical basis so that equality of
/// subspaces is equality of the stored matrices.
///
/// The canonical basis is the column-reduced echelon form: pivots are
/// normalized to 1 by right scalar multiplication and pivot columns are
/// ordered by pivot row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ring: Ring,
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    /// Right column span of `spanning`, in canonical form.
    pub fn canonicalize(spanning: &Matrix) -> Subspace {
        // Column operations on A are row operations on A*, and
        // (v·λ)* = conj(λ)·v*, so the right column span of A corresponds to
        // the left row space of A*.
        let (r, pivots) = spanning.conj_transpose().rref();
        let rows: Vec<usize> = (0..pivots.len()).collect();
        let basis = r.select_rows(&rows).conj_transpose();
        Subspace {
            ring: spanning.ring(),
            ambient_dim: spanning.rows(),
            basis,
        }
    }

    pub fn zero(ring: Ring, n: usize) -> Subspace {
        Subspace {
            ring,
            ambient_dim: n,
            basis: Matrix::zeros(ring, n, 0),
        }
    }

    pub fn full(ring: Ring, n: usize) -> Subspace {
        Subspace {
            ring,
            ambient_dim: n,
            basis: Matrix::identity(ring, n),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ring: Ring, n: usize, indices: &[usize]) -> Subspace {
        let id = Matrix::identity(ring, n);
        Subspace::canonicalize(&id.select_columns(indices))
    }

    /// Build from an already canonical matrix (used by deserialization);
    /// rejects matrices that are not in canonical form.
    pub fn from_canonical(basis: Matrix) -> Result<Subspace> {
        let s = Subspace::canonicalize(&basis);
        if s.basis != basis {
            return Err(Error::Parse("basis is not in canonical column-reduced form".into()));
        }
        Ok(s)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of K^{} and K^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: other.ring,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::canonicalize(&Matrix::hstack(&[&self.basis, &other.basis])))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        // U·a = W·b  ⇔  [U | −W]·(a; b) = 0
        let stacked = Matrix::hstack(&[&self.basis, &-&other.basis]);
        let kernel = stacked.kernel();
        let coeffs = kernel.submatrix(0..self.dim(), 0..kernel.cols());
        Ok(Subspace::canonicalize(&(&self.basis * &coeffs)))
    }

    /// `V = U ⊕ W`.
    pub fn is_direct_complement(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        if self.dim() + other.dim() != self.ambient_dim {
            return Ok(false);
        }
        let stacked = Matrix::hstack(&[&self.basis, &other.basis]);
        Ok(stacked.rank() == self.ambient_dim)
    }

    /// `U ∩ W = 0`.
    pub fn is_transverse(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        let stacked = Matrix::hstack(&[&self.basis, &other.basis]);
        Ok(stacked.rank() == self.dim() + other.dim())
    }

    pub fn contains(&self, v: &Matrix) -> bool {
        let stacked = Matrix::hstack(&[&self.basis, v]);
        stacked.rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        other.contains(&self.basis)
    }

    /// Image `g·U` under a linear operator.
    pub fn image(&self, g: &Matrix) -> Subspace {
        assert_eq!(g.cols(), self.ambient_dim, "operator does not act on this space");
        Subspace::canonicalize(&(g * &self.basis))
    }

    /// A vector of the subspace from coordinates in the canonical basis.
    pub fn vector(&self, coords: &[Scalar]) -> Matrix {
        &self.basis * &Matrix::column_vector(self.ring, coords.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rescaled_spanning_vectors_agree() {
        let a = Subspace::canonicalize(&Matrix::from_i64(Ring::R, &[&[1], &[2]]));
        let b = Subspace::canonicalize(&Matrix::from_i64(Ring::R, &[&[2], &[4]]));
        assert_eq!(a, b);
    }

    #[test]
    fn identity_spans_everything() {
        let s = Subspace::canonicalize(&Matrix::identity(Ring::C, 3));
        assert_eq!(s.basis(), &Matrix::identity(Ring::C, 3));
        assert_eq!(s, Subspace::full(Ring::C, 3));
    }

    #[test]
    fn quaternion_line_normalizes_to_one() {
        let s = Subspace::canonicalize(&Matrix::from_rows(Ring::H, vec![vec![Scalar::j()]]));
        // oracle: (1) = (j)·(−j) lies in the right span of (j)
        let j = Matrix::from_rows(Ring::H, vec![vec![Scalar::j()]]);
        assert_eq!(j.scale_right(&-Scalar::j()), Matrix::identity(Ring::H, 1));
        assert_eq!(s.basis(), &Matrix::identity(Ring::H, 1));
    }

    #[test]
    fn axes_are_complementary() {
        let x = Subspace::coordinate(Ring::R, 2, &[0]);
        let y = Subspace::coordinate(Ring::R, 2, &[1]);
        assert!(x.is_direct_complement(&y).unwrap());
        assert!(!x.is_direct_complement(&x).unwrap());
    }

    #[test]
    fn plane_and_diagonal_in_r3() {
        let u = Subspace::coordinate(Ring::R, 3, &[0, 1]);
        let w = Subspace::canonicalize(&Matrix::from_i64(Ring::R, &[&[1], &[1], &[1]]));
        assert_eq!(u.sum(&w).unwrap(), Subspace::full(Ring::R, 3));
        assert_eq!(u.intersect(&w).unwrap().dim(), 0);
        assert!(u.is_direct_complement(&w).unwrap());
    }

    #[test]
    fn mismatched_ambient_dimensions() {
        let u = Subspace::full(Ring::R, 2);
        let w = Subspace::full(Ring::R, 3);
        assert!(matches!(u.sum(&w), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn quaternionic_right_span_is_respected() {
        // (1, i) and (j, ij) = (1, i)·j span the same right line.
        let v = Matrix::from_rows(
            Ring::H,
            vec![vec![Scalar::one(Ring::H)], vec![Scalar::i().promote(Ring::H)]],
        );
        let w = v.scale_right(&Scalar::j());
        assert_eq!(Subspace::canonicalize(&v), Subspace::canonicalize(&w));
        // but (j, j·i) = j·(1, i) is a different line
        let left = v.scale_left(&Scalar::j());
        assert_ne!(Subspace::canonicalize(&v), Subspace::canonicalize(&left));
    }
}
