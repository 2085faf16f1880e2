//! Semiinvolutions, their consistency with forms, and the managing form.
//!
//! A linear semiinvolution acts as `Jv = C·v`; an antilinear one (over ℂ
//! only) as `Jv = C·conj(v)`. Composition of antilinear maps follows from
//! this: `J₁J₂v = C₁·conj(C₂)·v`.

pub mod groups;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{Form, FormKind, FormType};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Ring, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Linearity {
    #[serde(rename = "lin")]
    Linear,
    #[serde(rename = "antilin")]
    Antilinear,
}

impl Linearity {
    pub fn symbol(self) -> &'static str {
        match self {
            Linearity::Linear => "lin",
            Linearity::Antilinear => "antilin",
        }
    }
}

/// The five kinds of split semiinvolution and the structure each one induces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Species {
    /// linear, `J² = 1`: a decomposition `V = V₊ ⊕ V₋`
    A,
    /// ℝ, linear, `J² = −1`: a complex structure
    B,
    /// ℂ, antilinear, `J² = −1`: a quaternionic structure
    C,
    /// ℂ, antilinear, `J² = 1`: a real form
    D,
    /// ℍ, linear, `J² = −1`: a complex form of a quaternionic space
    E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semiinvolution {
    linearity: Linearity,
    epsilon: i64,
    matrix: Matrix,
}

impl Semiinvolution {
    pub fn new(linearity: Linearity, epsilon: i64, matrix: Matrix) -> Result<Semiinvolution> {
        if epsilon != 1 && epsilon != -1 {
            return Err(Error::InvalidSemiinvolution(format!("J² = {epsilon} is not ±1")));
        }
        if !matrix.is_square() {
            return Err(Error::InvalidSemiinvolution("matrix is not square".into()));
        }
        let matrix = if linearity == Linearity::Antilinear {
            if matrix.ring() == Ring::H {
                return Err(Error::InvalidSemiinvolution(
                    "antilinear operators exist only over ℂ".into(),
                ));
            }
            matrix.promote(Ring::C)
        } else {
            matrix
        };
        let j = Semiinvolution {
            linearity,
            epsilon,
            matrix,
        };
        let square = j.square_matrix();
        let n = j.dim();
        if square != Matrix::scalar(n, &Scalar::from_i64(j.ring(), epsilon)) {
            return Err(Error::InvalidSemiinvolution(format!("J² ≠ {epsilon}")));
        }
        Ok(j)
    }

    pub fn linear(matrix: Matrix, epsilon: i64) -> Result<Semiinvolution> {
        Semiinvolution::new(Linearity::Linear, epsilon, matrix)
    }

    pub fn antilinear(matrix: Matrix, epsilon: i64) -> Result<Semiinvolution> {
        Semiinvolution::new(Linearity::Antilinear, epsilon, matrix)
    }

    /// `[[0, ε·I], [I, 0]]` on `K^{2m}`, swapping the two coordinate blocks.
    pub fn exchange(ring: Ring, linearity: Linearity, epsilon: i64, m: usize) -> Result<Semiinvolution> {
        let i = Matrix::identity(ring, m);
        let z = Matrix::zeros(ring, m, m);
        let top = if epsilon > 0 { i.clone() } else { -&i };
        Semiinvolution::new(linearity, epsilon, Matrix::from_blocks(&z, &top, &i, &z))
    }

    pub fn linearity(&self) -> Linearity {
        self.linearity
    }

    pub fn is_antilinear(&self) -> bool {
        self.linearity == Linearity::Antilinear
    }

    pub fn epsilon(&self) -> i64 {
        self.epsilon
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn ring(&self) -> Ring {
        self.matrix.ring()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `C²` or `C·conj(C)`, the matrix of `J²`.
    fn square_matrix(&self) -> Matrix {
        match self.linearity {
            Linearity::Linear => &self.matrix * &self.matrix,
            Linearity::Antilinear => &self.matrix * &self.matrix.conj(),
        }
    }

    /// Apply `J` to every column of `v`.
    pub fn apply(&self, v: &Matrix) -> Matrix {
        match self.linearity {
            Linearity::Linear => &self.matrix * v,
            Linearity::Antilinear => &self.matrix * &v.conj(),
        }
    }

    pub fn apply_subspace(&self, u: &Subspace) -> Subspace {
        Subspace::canonicalize(&self.apply(u.basis()))
    }

    /// `J⁻¹ = ε·J`.
    pub fn apply_inverse(&self, v: &Matrix) -> Matrix {
        let jv = self.apply(v);
        if self.epsilon > 0 {
            jv
        } else {
            -&jv
        }
    }

    /// `gJ = Jg`: `g·C = C·g`, or `g·C = C·conj(g)` when antilinear.
    pub fn commutes_with(&self, g: &Matrix) -> bool {
        if g.rows() != self.dim() || g.cols() != self.dim() {
            return false;
        }
        let lhs = g * &self.matrix;
        match self.linearity {
            Linearity::Linear => lhs == &self.matrix * g,
            Linearity::Antilinear => lhs == &self.matrix * &g.conj(),
        }
    }

    /// The same semiinvolution written in the basis given by the columns of
    /// `p`: `P⁻¹·J·P`.
    pub fn in_basis(&self, p: &Matrix) -> Result<Semiinvolution> {
        let p_inv = p.invert()?;
        let m = match self.linearity {
            Linearity::Linear => &(&p_inv * &self.matrix) * p,
            Linearity::Antilinear => &(&p_inv * &self.matrix) * &p.conj(),
        };
        Semiinvolution::new(self.linearity, self.epsilon, m)
    }

    pub fn species(&self) -> Result<Species> {
        match (self.ring(), self.linearity, self.epsilon) {
            (_, Linearity::Linear, 1) => Ok(Species::A),
            (Ring::R, Linearity::Linear, -1) => Ok(Species::B),
            (Ring::C, Linearity::Antilinear, -1) => Ok(Species::C),
            (Ring::C, Linearity::Antilinear, 1) => Ok(Species::D),
            (Ring::H, Linearity::Linear, -1) => Ok(Species::E),
            _ => Err(Error::WrongSpecies(
                "a linear semiinvolution over ℂ with J² = −1 is i times one with J² = 1".into(),
            )),
        }
    }

    /// Dimensions of the `±1` eigenspaces (species a only).
    pub fn eigenspaces(&self) -> Result<(Subspace, Subspace)> {
        if self.species()? != Species::A {
            return Err(Error::WrongSpecies("eigenspaces need J linear with J² = 1".into()));
        }
        let id = Matrix::identity(self.ring(), self.dim());
        let plus = Subspace::canonicalize(&(&self.matrix - &id).kernel());
        let minus = Subspace::canonicalize(&(&self.matrix + &id).kernel());
        Ok((plus, minus))
    }

    /// Whether some subspace `Q` has `V = Q ⊕ JQ`.
    pub fn is_split(&self) -> bool {
        match self.species() {
            Ok(Species::A) => {
                let (p, m) = self.eigenspaces().expect("species a");
                p.dim() == m.dim()
            }
            Ok(_) => self.dim().is_multiple_of(2),
            Err(_) => false,
        }
    }

    /// A basis `[b | Jb]` adapted to the complex (species b) or quaternionic
    /// (species c) structure; the columns `b` form a basis over the bigger
    /// field.
    pub fn adapted_basis(&self) -> Result<Matrix> {
        match self.species()? {
            Species::B | Species::C => {}
            _ => return Err(Error::WrongSpecies("adapted bases exist for species b and c".into())),
        }
        let ring = self.ring();
        let n = self.dim();
        let id = Matrix::identity(ring, n);
        let mut chosen: Vec<Matrix> = Vec::new();
        let mut span = Matrix::zeros(ring, n, 0);
        for i in 0..n {
            if chosen.len() * 2 == n {
                break;
            }
            let e = id.column(i);
            let trial = Matrix::hstack(&[&span, &e]);
            if trial.rank() > span.cols() {
                let je = self.apply(&e);
                span = Matrix::hstack(&[&span, &e, &je]);
                chosen.push(e);
            }
        }
        let b = Matrix::hstack(&chosen.iter().collect::<Vec<_>>());
        let jb = self.apply(&b);
        Ok(Matrix::hstack(&[&b, &jb]))
    }

    /// Coordinates over ℂ (species b) or ℍ (species c) of the vectors in
    /// the columns of `v`, relative to [`Semiinvolution::adapted_basis`].
    pub fn structure_coordinates(&self, v: &Matrix) -> Result<Matrix> {
        let species = self.species()?;
        let p = self.adapted_basis()?;
        let xy = p.solve(v)?;
        let k = self.dim() / 2;
        let x = xy.submatrix(0..k, 0..v.cols());
        let y = xy.submatrix(k..2 * k, 0..v.cols());
        Ok(match species {
            // z = x + i·y
            Species::B => Matrix::from_fn(Ring::C, k, v.cols(), |r, c| {
                Scalar::complex(x.get(r, c).re().clone(), y.get(r, c).re().clone())
            }),
            // q = x + conj(y)·j
            _ => Matrix::from_fn(Ring::H, k, v.cols(), |r, c| {
                let (xs, ys) = (x.get(r, c), y.get(r, c));
                Scalar::quaternion(
                    xs.coeff(0).clone(),
                    xs.coeff(1).clone(),
                    ys.coeff(0).clone(),
                    -ys.coeff(1),
                )
            }),
        })
    }

    /// Matrix over ℂ (species b) or ℍ (species c) of an operator commuting
    /// with `J`.
    pub fn structure_operator(&self, g: &Matrix) -> Result<Matrix> {
        if !self.commutes_with(g) {
            return Err(Error::NotInGroup);
        }
        let p = self.adapted_basis()?;
        let k = self.dim() / 2;
        self.structure_coordinates(&(g * &p.submatrix(0..self.dim(), 0..k)))
    }
}

impl fmt::Display for Semiinvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} semiinvolution, J² = {}, matrix\n{}",
            self.linearity.symbol(),
            self.epsilon,
            self.matrix
        )
    }
}

/// The central `μ` with `B(Jv, Jw) = μ·B(v, w)` (linear `J`) or
/// `B(Jv, Jw) = μ·conj(B(v, w))` (antilinear `J`).
pub fn detect_mu(b: &Form, j: &Semiinvolution) -> Result<i64> {
    if b.dim() != j.dim() {
        return Err(Error::DimensionMismatch(format!(
            "form on K^{} and semiinvolution on K^{}",
            b.dim(),
            j.dim()
        )));
    }
    if j.is_antilinear() && b.ring() != Ring::C {
        return Err(Error::RingMismatch {
            expected: Ring::C,
            found: b.ring(),
        });
    }
    let c = j.matrix().promote(b.ring().join(j.ring()));
    let lhs = &(&b.adjoint(&c) * b.gram()) * &c;
    let target = if j.is_antilinear() { b.gram().conj() } else { b.gram().clone() };
    let (r, col) = (0..target.rows())
        .flat_map(|r| (0..target.cols()).map(move |c| (r, c)))
        .find(|&(r, c)| !target.get(r, c).is_zero())
        .expect("nondegenerate Gram matrix");
    let mu = lhs.get(r, col) * &target.get(r, col).inv().expect("nonzero");
    if !mu.is_central() || target.scale_right(&mu) != lhs {
        return Err(Error::NotConsistent);
    }
    if mu.is_one() {
        Ok(1)
    } else if (-&mu).is_one() {
        Ok(-1)
    } else {
        Err(Error::NotPlusMinusOne(mu.to_string()))
    }
}

/// Predicted type of `D(v, w) = B(v, Jw)`: the linearity flips with an
/// antilinear `J`, and `D(w, v) = ±μ·ε·D(v, w)` with `B`'s own sign.
pub fn managing_type(b: FormType, linearity: Linearity, epsilon: i64, mu: i64) -> Result<FormType> {
    let sesq = b.kind.is_sesquilinear() ^ (linearity == Linearity::Antilinear);
    FormType::from_parts(b.ring, sesq, b.kind.sign() * epsilon * mu)
}

/// A form together with a consistent semiinvolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistentPair {
    pub form: Form,
    pub semiinv: Semiinvolution,
    pub mu: i64,
}

impl ConsistentPair {
    pub fn new(form: Form, semiinv: Semiinvolution) -> Result<ConsistentPair> {
        let mu = detect_mu(&form, &semiinv)?;
        Ok(ConsistentPair { form, semiinv, mu })
    }

    /// `D(v, w) = B(v, Jw)`, with Gram `C†·G` (`†` the adjoint of `B`).
    pub fn managing_form(&self) -> Result<Form> {
        let ftype = managing_type(self.form.form_type(), self.semiinv.linearity(), self.semiinv.epsilon(), self.mu)?;
        let c = self.semiinv.matrix().promote(self.form.ring());
        let gram = &self.form.adjoint(&c) * self.form.gram();
        Form::new(ftype.ring, ftype.kind, gram)
    }

    /// Gram of `B(v, w) = D(v, J⁻¹w)` recovered from `D`: `ε·C†·G_D`, with
    /// `†` the adjoint of `D`'s kind.
    pub fn recovered_gram(&self, d: &Form) -> Matrix {
        let c = self.semiinv.matrix().promote(d.ring());
        let g = &d.adjoint(&c) * d.gram();
        g.scale_right(&Scalar::from_i64(d.ring(), self.semiinv.epsilon()))
    }

    /// The ℂ-valued form `Z = B + μ·i·D` on the complex structure of a
    /// species b pair; sesquilinear for `μ = 1`, bilinear for `μ = −1`.
    pub fn complexified_form(&self) -> Result<Form> {
        if self.semiinv.species()? != Species::B {
            return Err(Error::WrongSpecies("complexified form needs species b".into()));
        }
        let d = self.managing_form()?;
        let value = |v: &Matrix, w: &Matrix| -> Scalar {
            let bv = self.form.evaluate(v, w).expect("dimensions");
            let dv = d.evaluate(v, w).expect("dimensions");
            Scalar::complex(bv.re().clone(), dv.re() * &Rational::from_integer(self.mu.into()))
        };
        self.structure_form(Ring::C, self.mu == 1, value)
    }

    /// The ℍ-valued form on the quaternionic structure of a species c pair.
    pub fn quaternionified_form(&self) -> Result<Form> {
        if self.semiinv.species()? != Species::C {
            return Err(Error::WrongSpecies("quaternionified form needs species c".into()));
        }
        let d = self.managing_form()?;
        let (i, j) = (Scalar::i(), Scalar::j());
        let sesq = self.form.is_sesquilinear();
        let mu = self.mu;
        let value = |v: &Matrix, w: &Matrix| -> Scalar {
            let bv = self.form.evaluate(v, w).expect("dimensions").promote(Ring::H);
            let dv = d.evaluate(v, w).expect("dimensions").promote(Ring::H);
            match (sesq, mu) {
                (true, 1) => &bv + &(&j * &dv),
                (true, _) => &i * &(&bv - &(&j * &dv)),
                (false, 1) => &dv - &(&j * &bv),
                (false, _) => &i * &(&dv + &(&j * &bv)),
            }
        };
        self.structure_form(Ring::H, true, value)
    }

    /// Gram matrix over the structure field from values on the adapted basis,
    /// with the kind read off from its symmetry.
    fn structure_form(&self, ring: Ring, sesq: bool, value: impl Fn(&Matrix, &Matrix) -> Scalar) -> Result<Form> {
        let p = self.semiinv.adapted_basis()?;
        let k = self.semiinv.dim() / 2;
        let gram = Matrix::from_fn(ring, k, k, |r, c| value(&p.column(c), &p.column(r)));
        let adj = gram.adjoint(sesq);
        let kind = if adj == gram {
            FormKind::from_parts(sesq, 1)
        } else if adj == -&gram {
            FormKind::from_parts(sesq, -1)
        } else {
            return Err(Error::InvalidForm("structure form has no symmetry".into()));
        };
        Form::new(ring, kind, gram)
    }
}
