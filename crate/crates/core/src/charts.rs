//! Angular-operator charts.
//!
//! A chart is centred at a decomposition `V = X ⊕ Y`. A subspace `R`
//! transverse to `Y` with `dim R = dim X` is the graph `{x + Lx}` of a unique
//! `L : X → Y`, its angular operator. A pair `(Q₁, Q₂)` near `(X, Y)` gets the
//! coordinates `M : X → Y` (for `Q₁`) and `N : Y → X` (for `Q₂`), written in
//! the canonical bases of `X` and `Y`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::SeriesEntry;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::realify::{solve_linear, Shape};
use crate::scalar::{Ring, Scalar};
use crate::spaces::SpacePoint;
use crate::subspace::Subspace;

/// `(M, N)` coordinates of a pair in a chart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngularCoords {
    #[serde(rename = "M")]
    pub m: Matrix,
    #[serde(rename = "N")]
    pub n: Matrix,
}

/// The conditions cutting a space out of the pairs of graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeCondition {
    /// `Q₁ ∩ Q₂ = 0`: `1 − MN` invertible
    Transversal,
    /// `Q₁`, `Q₂` isotropic for `B`
    Isotropy,
    /// `Q₂` is the `D`-orthogonal complement of `Q₁`
    Orthogonality,
    /// `Q₂ = J·Q₁`
    Exchange,
}

impl ShapeCondition {
    pub fn describe(self) -> &'static str {
        match self {
            ShapeCondition::Transversal => "1 - MN invertible",
            ShapeCondition::Isotropy => "B-isotropy of both graphs",
            ShapeCondition::Orthogonality => "D-orthogonality of the graphs",
            ShapeCondition::Exchange => "N = J M J^-1",
        }
    }
}

/// The linear conditions that apply to the entries of one list.
pub fn linear_conditions(list: u8) -> &'static [ShapeCondition] {
    use ShapeCondition::*;
    match list {
        1 => &[Isotropy, Orthogonality, Exchange],
        2 => &[Isotropy],
        3 => &[Exchange],
        4 => &[Orthogonality],
        _ => &[],
    }
}

/// The angular operator of `r` with respect to `V = x ⊕ y`.
pub fn angular_operator(r: &Subspace, x: &Subspace, y: &Subspace) -> Result<Matrix> {
    let frame = Matrix::hstack(&[x.basis(), y.basis()]);
    let coeffs = frame.solve(r.basis()).map_err(|_| Error::NotTransverse)?;
    let kx = x.dim();
    if r.dim() != kx {
        return Err(Error::NotTransverse);
    }
    let c1 = coeffs.submatrix(0..kx, 0..kx);
    let c2 = coeffs.submatrix(kx..coeffs.rows(), 0..kx);
    let c1_inv = c1.invert().map_err(|_| Error::NotTransverse)?;
    Ok(&c2 * &c1_inv)
}

#[derive(Clone, Debug)]
pub struct Chart {
    x: Subspace,
    y: Subspace,
    frame: Matrix,
    frame_inv: Matrix,
}

impl Chart {
    pub fn new(x: Subspace, y: Subspace) -> Result<Chart> {
        if !x.is_direct_complement(&y)? {
            return Err(Error::NotTransverse);
        }
        let frame = Matrix::hstack(&[x.basis(), y.basis()]);
        let frame_inv = frame.invert()?;
        Ok(Chart { x, y, frame, frame_inv })
    }

    pub fn centred_at(pt: &SpacePoint) -> Result<Chart> {
        Chart::new(pt.q1.clone(), pt.q2.clone())
    }

    pub fn base(e: &SeriesEntry) -> Chart {
        Chart::new(e.base.0.clone(), e.base.1.clone()).expect("base points are decompositions")
    }

    pub fn x(&self) -> &Subspace {
        &self.x
    }

    pub fn y(&self) -> &Subspace {
        &self.y
    }

    pub fn ring(&self) -> Ring {
        self.frame.ring()
    }

    /// `[X | Y]`, the adapted basis.
    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    fn kx(&self) -> usize {
        self.x.dim()
    }

    fn ky(&self) -> usize {
        self.y.dim()
    }

    pub fn to_coords(&self, pt: &SpacePoint) -> Result<AngularCoords> {
        Ok(AngularCoords {
            m: angular_operator(&pt.q1, &self.x, &self.y)?,
            n: angular_operator(&pt.q2, &self.y, &self.x)?,
        })
    }

    pub fn from_coords(&self, c: &AngularCoords) -> Result<SpacePoint> {
        self.check_sizes(c)?;
        let xb = self.x.basis();
        let yb = self.y.basis();
        let q1 = xb + &(yb * &c.m);
        let q2 = yb + &(xb * &c.n);
        Ok(SpacePoint::new(Subspace::canonicalize(&q1), Subspace::canonicalize(&q2)))
    }

    fn check_sizes(&self, c: &AngularCoords) -> Result<()> {
        let (kx, ky) = (self.kx(), self.ky());
        if (c.m.rows(), c.m.cols()) != (ky, kx) || (c.n.rows(), c.n.cols()) != (kx, ky) {
            return Err(Error::DimensionMismatch(format!(
                "chart coordinates need M of size {ky}×{kx} and N of size {kx}×{ky}"
            )));
        }
        Ok(())
    }

    /// `g` in the adapted basis, split into `[[A, B], [C, D]]`.
    fn blocks(&self, g: &Matrix) -> [Matrix; 4] {
        let h = &(&self.frame_inv * g) * &self.frame;
        let (kx, n) = (self.kx(), h.rows());
        [
            h.submatrix(0..kx, 0..kx),
            h.submatrix(0..kx, kx..n),
            h.submatrix(kx..n, 0..kx),
            h.submatrix(kx..n, kx..n),
        ]
    }

    /// `M ↦ (C + DM)(A + BM)⁻¹` and `N ↦ (B + AN)(D + CN)⁻¹`.
    pub fn act_on_coords(&self, g: &Matrix, c: &AngularCoords) -> Result<AngularCoords> {
        self.check_sizes(c)?;
        let [a, b, cc, d] = self.blocks(g);
        let den_m = (&a + &(&b * &c.m)).invert().map_err(|_| Error::ChartBoundary)?;
        let den_n = (&d + &(&cc * &c.n)).invert().map_err(|_| Error::ChartBoundary)?;
        Ok(AngularCoords {
            m: &(&cc + &(&d * &c.m)) * &den_m,
            n: &(&b + &(&a * &c.n)) * &den_n,
        })
    }

    /// Left-hand sides of the linear conditions of `e`, all of which vanish
    /// on the coordinates of points of the space.
    pub fn residuals(&self, e: &SeriesEntry, m: &Matrix, n: &Matrix) -> Vec<(ShapeCondition, Matrix)> {
        let xb = self.x.basis();
        let yb = self.y.basis();
        let mut out = Vec::new();
        for &cond in linear_conditions(e.list) {
            match cond {
                ShapeCondition::Isotropy => {
                    let b = e.form_b.as_ref().expect("isotropy needs B");
                    let g_xy = b.pair_gram(yb, xb);
                    let g_yx = b.pair_gram(xb, yb);
                    out.push((cond, &(&g_xy * m) + &(&b.adjoint(m) * &g_yx)));
                    out.push((cond, &(&g_yx * n) + &(&b.adjoint(n) * &g_xy)));
                }
                ShapeCondition::Orthogonality => {
                    let d = e.managing.as_ref().expect("orthogonality needs D");
                    let d_xx = d.pullback_gram(xb);
                    let d_yy = d.pullback_gram(yb);
                    out.push((cond, &(&d.adjoint(n) * &d_xx) + &(&d_yy * m)));
                }
                ShapeCondition::Exchange => {
                    let j = e.semiinv.as_ref().expect("exchange needs J");
                    let (j12, j21_inv) = self.exchange_blocks(j);
                    let m_tw = if j.is_antilinear() { m.conj() } else { m.clone() };
                    out.push((cond, n - &(&(&j12 * &m_tw) * &j21_inv)));
                }
                ShapeCondition::Transversal => {}
            }
        }
        out
    }

    /// `(Ĵ₁₂, Ĵ₂₁⁻¹)` for `Ĵ` the matrix of `J` in the adapted basis.
    fn exchange_blocks(&self, j: &crate::involutions::Semiinvolution) -> (Matrix, Matrix) {
        let jh = j.in_basis(&self.frame).expect("adapted frame is invertible");
        let jm = jh.matrix();
        let (kx, n) = (self.kx(), jm.rows());
        let j12 = jm.submatrix(0..kx, kx..n);
        let j21 = jm.submatrix(kx..n, 0..kx);
        let j21_inv = j21.invert().expect("chart centre satisfies JX = Y");
        (j12, j21_inv)
    }

    /// Checks `(M, N)` against every condition of `e`, reporting the first
    /// violated one.
    pub fn check_shape(&self, e: &SeriesEntry, c: &AngularCoords) -> Result<()> {
        self.check_sizes(c)?;
        if !transversal(&c.m, &c.n) {
            return Err(Error::ShapeViolation(ShapeCondition::Transversal.describe().into()));
        }
        for (cond, r) in self.residuals(e, &c.m, &c.n) {
            if !r.is_zero() {
                return Err(Error::ShapeViolation(cond.describe().into()));
            }
        }
        Ok(())
    }

    /// Real basis of the `(M, N)` solving the linear conditions of `e`.
    pub fn admissible_basis(&self, e: &SeriesEntry) -> Vec<AngularCoords> {
        let ring = self.ring();
        let shapes = [Shape::new(ring, self.ky(), self.kx()), Shape::new(ring, self.kx(), self.ky())];
        solve_linear(&shapes, |v| self.residuals(e, &v[0], &v[1]).into_iter().map(|(_, r)| r).collect())
            .into_iter()
            .map(|mut v| {
                let n = v.pop().expect("two unknowns");
                let m = v.pop().expect("two unknowns");
                AngularCoords { m, n }
            })
            .collect()
    }
}

/// `1 − MN` invertible, tested on the complex form over ℍ.
pub fn transversal(m: &Matrix, n: &Matrix) -> bool {
    let prod = m * n;
    let one_minus = &Matrix::identity(prod.ring(), prod.rows()) - &prod;
    if one_minus.ring() == Ring::H {
        one_minus.complexify().map(|c| c.is_invertible()).unwrap_or(false)
    } else {
        one_minus.is_invertible()
    }
}

/// Real dimension of the space of entry `e`: the dimension of its chart at
/// the base point.
pub fn grassmannian_dim(e: &SeriesEntry) -> usize {
    Chart::base(e).admissible_basis(e).len()
}

/// Draws admissible coordinates `Σ cₖ·bₖ` with integer `cₖ ∈ [−bound, bound]`.
pub struct ChartSampler {
    chart: Chart,
    basis: Vec<AngularCoords>,
    bound: i64,
}

impl ChartSampler {
    pub fn new(e: &SeriesEntry, chart: Chart, bound: i64) -> ChartSampler {
        let basis = chart.admissible_basis(e);
        ChartSampler { chart, basis, bound }
    }

    pub fn base(e: &SeriesEntry, bound: i64) -> ChartSampler {
        ChartSampler::new(e, Chart::base(e), bound)
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Admissible coordinates; they may violate the transversality condition.
    pub fn coords<R: Rng>(&self, rng: &mut R) -> AngularCoords {
        let ring = self.chart.ring();
        let (kx, ky) = (self.chart.kx(), self.chart.ky());
        let mut m = Matrix::zeros(ring, ky, kx);
        let mut n = Matrix::zeros(ring, kx, ky);
        for b in &self.basis {
            let c = Scalar::from_i64(Ring::R, rng.gen_range(-self.bound..=self.bound));
            m = &m + &b.m.scale_right(&c);
            n = &n + &b.n.scale_right(&c);
        }
        AngularCoords { m, n }
    }

    /// A point of the space in the chart, drawn from admissible coordinates.
    pub fn point<R: Rng>(&self, rng: &mut R, retries: usize) -> Result<(AngularCoords, SpacePoint)> {
        for _ in 0..retries {
            let c = self.coords(rng);
            if transversal(&c.m, &c.n) {
                let pt = self.chart.from_coords(&c)?;
                return Ok((c, pt));
            }
        }
        Err(Error::SamplerExhausted)
    }
}
