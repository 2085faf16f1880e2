//! Real-linear algebra on spaces of matrices over ℝ, ℂ, ℍ.
//!
//! A matrix over `K` is flattened into its real coordinates (row-major, then
//! the 1, 2 or 4 real components of each entry). Solution spaces of
//! ℝ-linear conditions are then kernels of rational matrices.

use num_traits::Zero;

use crate::matrix::Matrix;
use crate::scalar::{Rational, Ring, Scalar};

/// Shape of an unknown matrix: ring and dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub ring: Ring,
    pub rows: usize,
    pub cols: usize,
}

impl Shape {
    pub fn new(ring: Ring, rows: usize, cols: usize) -> Shape {
        Shape { ring, rows, cols }
    }

    pub fn real_dim(&self) -> usize {
        self.rows * self.cols * self.ring.real_dim()
    }

    /// The real basis `E_rc·u` with `u` running over the units `1, i, j, k`.
    pub fn basis(&self) -> Vec<Matrix> {
        let units = self.ring.units();
        let mut out = Vec::with_capacity(self.real_dim());
        for r in 0..self.rows {
            for c in 0..self.cols {
                for u in &units {
                    let mut m = Matrix::zeros(self.ring, self.rows, self.cols);
                    m.set(r, c, u.clone());
                    out.push(m);
                }
            }
        }
        out
    }

    /// Rebuild a matrix from real coordinates in the order of [`Shape::basis`].
    pub fn from_real(&self, coords: &[Rational]) -> Matrix {
        let d = self.ring.real_dim();
        Matrix::from_fn(self.ring, self.rows, self.cols, |r, c| {
            let start = (r * self.cols + c) * d;
            Scalar::from_coeffs(self.ring, &coords[start..start + d])
        })
    }
}

/// Real coordinates of a matrix, `ring.real_dim()` per entry.
pub fn to_real(m: &Matrix, ring: Ring) -> Vec<Rational> {
    let d = ring.real_dim();
    let mut out = Vec::with_capacity(m.rows() * m.cols() * d);
    for s in m.entries() {
        out.extend(s.promote(ring).coeffs()[..d].iter().cloned());
    }
    out
}

/// Basis of the real solution space of `f(X₁, …, X_k) = 0`, where `f` is
/// ℝ-linear and returns a list of matrices (all of which must vanish).
pub fn solve_linear(shapes: &[Shape], f: impl Fn(&[Matrix]) -> Vec<Matrix>) -> Vec<Vec<Matrix>> {
    let zeros: Vec<Matrix> = shapes
        .iter()
        .map(|s| Matrix::zeros(s.ring, s.rows, s.cols))
        .collect();
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    for (slot, shape) in shapes.iter().enumerate() {
        for e in shape.basis() {
            let mut args = zeros.clone();
            args[slot] = e;
            let outputs = f(&args);
            let mut col = Vec::new();
            for o in &outputs {
                col.extend(to_real(o, Ring::H));
            }
            columns.push(col);
        }
    }
    let n_unknowns = columns.len();
    if n_unknowns == 0 {
        return Vec::new();
    }
    let live_rows: Vec<usize> = (0..columns[0].len())
        .filter(|&r| columns.iter().any(|c| !c[r].is_zero()))
        .collect();
    let system = Matrix::from_fn(Ring::R, live_rows.len(), n_unknowns, |r, c| {
        Scalar::from_rational(Ring::R, columns[c][live_rows[r]].clone())
    });
    let kernel = system.kernel();
    (0..kernel.cols())
        .map(|k| {
            let coords: Vec<Rational> = (0..n_unknowns).map(|r| kernel.get(r, k).re().clone()).collect();
            let mut offset = 0;
            shapes
                .iter()
                .map(|s| {
                    let part = s.from_real(&coords[offset..offset + s.real_dim()]);
                    offset += s.real_dim();
                    part
                })
                .collect()
        })
        .collect()
}

/// Real dimension of the solution space, without building the basis.
pub fn solution_dim(shapes: &[Shape], f: impl Fn(&[Matrix]) -> Vec<Matrix>) -> usize {
    solve_linear(shapes, f).len()
}
