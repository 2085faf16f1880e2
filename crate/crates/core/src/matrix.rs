//! Dense matrices over ℝ, ℂ and ℍ with exact Gaussian elimination.
//!
//! Vectors are columns, operators act from the left (`v ↦ A·v`) and scalars
//! multiply vectors from the right (`v ↦ v·λ`). Row reduction therefore
//! multiplies rows on the left, which keeps the right nullspace and the
//! solution sets of `A·x = b` intact over a noncommutative ring.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

#[derive(Clone, Debug)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Matrix {}

impl Matrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        Matrix {
            ring,
            rows,
            cols,
            data: vec![Scalar::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one(ring);
        }
        m
    }

    pub fn from_fn(ring: Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c).promote(ring));
            }
        }
        Matrix { ring, rows, cols, data }
    }

    /// Rows of scalars; the ring is the join of `ring` and every entry's ring.
    pub fn from_rows(ring: Ring, rows: Vec<Vec<Scalar>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        let ring = rows.iter().flatten().fold(ring, |acc, s| acc.join(s.ring()));
        let data = rows.into_iter().flatten().map(|s| s.promote(ring)).collect();
        Matrix {
            ring,
            rows: n_rows,
            cols: n_cols,
            data,
        }
    }

    pub fn from_i64(ring: Ring, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_i64(ring, v)).collect())
            .collect();
        Self::from_rows(ring, rows)
    }

    pub fn column_vector(ring: Ring, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let ring = entries.iter().fold(ring, |acc, s| acc.join(s.ring()));
        Matrix {
            ring,
            rows: n,
            cols: 1,
            data: entries.into_iter().map(|s| s.promote(ring)).collect(),
        }
    }

    pub fn diagonal(ring: Ring, diag: &[Scalar]) -> Self {
        let n = diag.len();
        Self::from_fn(ring, n, n, |r, c| if r == c { diag[r].clone() } else { Scalar::zero(ring) })
    }

    /// `s·I` for a scalar `s`.
    pub fn scalar(n: usize, s: &Scalar) -> Self {
        Self::diagonal(s.ring(), &vec![s.clone(); n])
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        if v.ring() > self.ring {
            *self = self.promote(v.ring());
        }
        let idx = r * self.cols + c;
        self.data[idx] = v.promote(self.ring);
    }

    /// Same entries viewed over a larger ring.
    pub fn promote(&self, ring: Ring) -> Self {
        let ring = ring.join(self.ring);
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|s| s.promote(ring)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn column(&self, c: usize) -> Matrix {
        self.submatrix(0..self.rows, c..c + 1)
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let (r0, c0) = (rows.start, cols.start);
        Matrix::from_fn(self.ring, rows.len(), cols.len(), |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.ring, self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.ring, idx.len(), self.cols, |r, c| self.get(idx[r], c).clone())
    }

    pub fn hstack(parts: &[&Matrix]) -> Matrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        assert!(parts.iter().all(|m| m.rows == rows), "hstack: row counts differ");
        let ring = parts.iter().fold(Ring::R, |acc, m| acc.join(m.ring));
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(ring, rows, cols);
        let mut offset = 0;
        for m in parts {
            for r in 0..rows {
                for c in 0..m.cols {
                    out.data[r * cols + offset + c] = m.get(r, c).promote(ring);
                }
            }
            offset += m.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        assert!(parts.iter().all(|m| m.cols == cols), "vstack: column counts differ");
        let ring = parts.iter().fold(Ring::R, |acc, m| acc.join(m.ring));
        let rows = parts.iter().map(|m| m.rows).sum();
        let data = parts
            .iter()
            .flat_map(|m| m.data.iter().map(|s| s.promote(ring)))
            .collect();
        Matrix { ring, rows, cols, data }
    }

    pub fn block_diag(parts: &[&Matrix]) -> Matrix {
        let ring = parts.iter().fold(Ring::R, |acc, m| acc.join(m.ring));
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(ring, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.data[(r0 + r) * cols + c0 + c] = m.get(r, c).promote(ring);
                }
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// `[[a, b], [c, d]]` assembled from four blocks.
    pub fn from_blocks(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        Matrix::vstack(&[&Matrix::hstack(&[a, b]), &Matrix::hstack(&[c, d])])
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        let data: Vec<Scalar> = self.data.iter().map(f).collect();
        let ring = data.iter().fold(self.ring, |acc, s| acc.join(s.ring()));
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data: data.into_iter().map(|s| s.promote(ring)).collect(),
        }
    }

    /// Entrywise `a·s`: right scalar multiplication of every column.
    pub fn scale_right(&self, s: &Scalar) -> Matrix {
        self.map(|a| a * s)
    }

    /// Entrywise `s·a`.
    pub fn scale_left(&self, s: &Scalar) -> Matrix {
        self.map(|a| s * a)
    }

    pub fn conj(&self) -> Matrix {
        if self.ring == Ring::R {
            return self.clone();
        }
        self.map(Scalar::conj)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    /// Conjugate transpose for sesquilinear pairings, plain transpose for bilinear ones.
    pub fn adjoint(&self, sesquilinear: bool) -> Matrix {
        if sesquilinear {
            self.conj_transpose()
        } else {
            self.transpose()
        }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).fold(Scalar::zero(self.ring), |acc, i| &acc + self.get(i, i))
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &Matrix) -> Matrix {
        let ring = self.ring.join(rhs.ring);
        let mut out = Matrix::zeros(ring, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[r * rhs.cols + c] += &(a * b);
                }
            }
        }
        out
    }

    /// Reduced row echelon form under left row operations, with pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            m.scale_row_left(row, &inv, col);
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_row_multiple(r, row, &factor, col);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row ← s·row, only touching columns from `from` on (earlier ones are zero).
    fn scale_row_left(&mut self, row: usize, s: &Scalar, from: usize) {
        for c in from..self.cols {
            let idx = row * self.cols + c;
            if !self.data[idx].is_zero() {
                self.data[idx] = s * &self.data[idx];
            }
        }
    }

    /// target ← target − f·source.
    fn sub_row_multiple(&mut self, target: usize, source: usize, f: &Scalar, from: usize) {
        for c in from..self.cols {
            let s = &self.data[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let delta = f * s;
            self.data[target * self.cols + c] -= &delta;
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis (as columns) of the right nullspace `{x : A·x = 0}`.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.ring, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = Scalar::one(self.ring);
            for (row, &p) in pivots.iter().enumerate() {
                out[(p, k)] = -r.get(row, f);
            }
        }
        out
    }

    /// Unique solution `X` of `A·X = B`.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "system has {} equations, right-hand side has {} rows",
                self.rows, rhs.rows
            )));
        }
        let aug = Matrix::hstack(&[self, rhs]);
        let (r, pivots) = aug.rref();
        if pivots.len() != self.cols || pivots.iter().any(|&p| p >= self.cols) {
            return Err(Error::NoUniqueSolution);
        }
        Ok(r.submatrix(0..self.cols, self.cols..self.cols + rhs.cols))
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        self.solve(&Matrix::identity(self.ring, self.rows))
            .map_err(|_| Error::Singular)
    }

    /// The complex `2n×2n` matrix of a quaternionic operator.
    ///
    /// Writing each entry as `q = a + j·b` with `a, b ∈ ℂ`, the entry becomes
    /// the block `[[a, −conj(b)], [b, conj(a)]]`; blocks are laid out globally
    /// as `[[A, −conj(B)], [B, conj(A)]]`. This is a unital ring homomorphism.
    pub fn complexify(&self) -> Result<Matrix> {
        if self.ring != Ring::H {
            return Err(Error::RingMismatch {
                expected: Ring::H,
                found: self.ring,
            });
        }
        let a = self.map(|q| Scalar::complex(q.coeff(0).clone(), q.coeff(1).clone()));
        let b = self.map(|q| Scalar::complex(q.coeff(2).clone(), -q.coeff(3)));
        Ok(Matrix::from_blocks(&a, &-&b.conj(), &b, &a.conj()).demote(Ring::C))
    }

    /// Reinterpret over a smaller ring; entries must fit.
    pub fn demote(&self, ring: Ring) -> Matrix {
        assert!(self.data.iter().all(|s| s.fits(ring)), "entries do not fit in {ring}");
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|s| Scalar::from_coeffs(ring, s.coeffs())).collect(),
        }
    }

    /// Smallest ring containing every entry.
    pub fn minimal_ring(&self) -> Ring {
        [Ring::R, Ring::C, Ring::H]
            .into_iter()
            .find(|&r| self.data.iter().all(|s| s.fits(r)))
            .unwrap_or(Ring::H)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        self.mul_unchecked(rhs)
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add: shape mismatch");
        let ring = self.ring.join(rhs.ring);
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| (a + b).promote(ring)).collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub: shape mismatch");
        let ring = self.ring.join(rhs.ring);
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| (a - b).promote(ring)).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|s| -s).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
