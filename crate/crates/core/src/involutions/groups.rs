//! Classical groups given by defining data: membership, Lie algebras and
//! exact sampling through the Cayley transform.

use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Linearity, Semiinvolution, Species};
use crate::error::{Error, Result};
use crate::forms::{Form, FormKind};
use crate::matrix::Matrix;
use crate::realify::{solve_linear, Shape};
use crate::scalar::{Ring, Scalar};

/// Names of the classical groups. Parameters follow the usual notation:
/// `Sp(2n, ℝ)` and `SO*(2n)` store the `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum GroupName {
    GL(Ring, usize),
    O(usize, usize),
    OC(usize),
    SpR(usize),
    SpC(usize),
    U(usize, usize),
    Sp(usize, usize),
    SOStar(usize),
}

impl GroupName {
    /// Real dimension of the group.
    pub fn dim(self) -> usize {
        match self {
            GroupName::GL(ring, n) => ring.real_dim() * n * n,
            GroupName::O(p, q) => {
                let n = p + q;
                n * n.saturating_sub(1) / 2
            }
            GroupName::OC(n) => n * n.saturating_sub(1),
            GroupName::SpR(m) => (m / 2) * (m + 1),
            GroupName::SpC(m) => m * (m + 1),
            GroupName::U(p, q) => (p + q) * (p + q),
            GroupName::Sp(p, q) => (p + q) * (2 * (p + q) + 1),
            GroupName::SOStar(m) => (m / 2) * m.saturating_sub(1),
        }
    }

    /// Equality up to exchanging the inertia indexes.
    pub fn same_as(self, other: GroupName) -> bool {
        self.normalized() == other.normalized()
    }

    fn normalized(self) -> GroupName {
        match self {
            GroupName::O(p, q) => GroupName::O(p.max(q), p.min(q)),
            GroupName::U(p, q) => GroupName::U(p.max(q), p.min(q)),
            GroupName::Sp(p, q) => GroupName::Sp(p.max(q), p.min(q)),
            other => other,
        }
    }

    /// The group `U(B)` of a form, named by its type and inertia.
    pub fn of_form(form: &Form) -> GroupName {
        let n = form.dim();
        match (form.ring(), form.kind()) {
            (Ring::R, FormKind::Symmetric) | (_, FormKind::Hermitian) | (Ring::C, FormKind::Antihermitian) => {
                let (p, q) = form.inertia().expect("form with inertia");
                match form.ring() {
                    Ring::R => GroupName::O(p, q),
                    Ring::C => GroupName::U(p, q),
                    Ring::H => GroupName::Sp(p, q),
                }
            }
            (Ring::R, _) => GroupName::SpR(n),
            (Ring::C, FormKind::Symmetric) => GroupName::OC(n),
            (Ring::C, _) => GroupName::SpC(n),
            (Ring::H, _) => GroupName::SOStar(2 * n),
        }
    }

    /// The centralizer `GL^J`, named by species.
    pub fn of_centralizer(j: &Semiinvolution) -> Result<Vec<GroupName>> {
        let n = j.dim();
        Ok(match j.species()? {
            Species::A => {
                let (plus, minus) = j.eigenspaces()?;
                vec![GroupName::GL(j.ring(), plus.dim()), GroupName::GL(j.ring(), minus.dim())]
            }
            Species::B => vec![GroupName::GL(Ring::C, n / 2)],
            Species::C => vec![GroupName::GL(Ring::H, n / 2)],
            Species::D => vec![GroupName::GL(Ring::R, n)],
            Species::E => vec![GroupName::GL(Ring::C, n)],
        })
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupName::GL(ring, n) => write!(f, "GL({n}, {ring})"),
            GroupName::O(p, q) if q == 0 => write!(f, "O({p})"),
            GroupName::O(p, q) => write!(f, "O({p}, {q})"),
            GroupName::OC(n) => write!(f, "O({n}, C)"),
            GroupName::SpR(m) => write!(f, "Sp({m}, R)"),
            GroupName::SpC(m) => write!(f, "Sp({m}, C)"),
            GroupName::U(p, q) if q == 0 => write!(f, "U({p})"),
            GroupName::U(p, q) => write!(f, "U({p}, {q})"),
            GroupName::Sp(p, q) if q == 0 => write!(f, "Sp({p})"),
            GroupName::Sp(p, q) => write!(f, "Sp({p}, {q})"),
            GroupName::SOStar(m) => write!(f, "SO*({m})"),
        }
    }
}

/// Product of named groups, written `A × B`.
pub fn product_name(names: &[GroupName]) -> String {
    names.iter().map(ToString::to_string).collect::<Vec<_>>().join(" × ")
}

/// Data sufficient to decide membership of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupData {
    /// all invertible `n × n` matrices
    General { ring: Ring, n: usize },
    /// `U(B)`
    Form(Form),
    /// `GL^J`
    Centralizer(Semiinvolution),
    /// `U^J(B)`
    FormCentralizer(Form, Semiinvolution),
    /// block-diagonal product acting on the direct sum
    Product(Vec<GroupData>),
}

impl GroupData {
    pub fn ring(&self) -> Ring {
        match self {
            GroupData::General { ring, .. } => *ring,
            GroupData::Form(b) | GroupData::FormCentralizer(b, _) => b.ring(),
            GroupData::Centralizer(j) => j.ring(),
            GroupData::Product(parts) => parts.iter().fold(Ring::R, |r, p| r.join(p.ring())),
        }
    }

    /// Size of the matrices in the group.
    pub fn size(&self) -> usize {
        match self {
            GroupData::General { n, .. } => *n,
            GroupData::Form(b) | GroupData::FormCentralizer(b, _) => b.dim(),
            GroupData::Centralizer(j) => j.dim(),
            GroupData::Product(parts) => parts.iter().map(GroupData::size).sum(),
        }
    }

    pub fn contains(&self, g: &Matrix) -> bool {
        if g.rows() != self.size() || g.cols() != self.size() || g.ring() > self.ring() {
            return false;
        }
        match self {
            GroupData::General { .. } => g.is_invertible(),
            GroupData::Form(b) => b.is_preserved_by(g),
            GroupData::Centralizer(j) => j.commutes_with(g) && g.is_invertible(),
            GroupData::FormCentralizer(b, j) => b.is_preserved_by(g) && j.commutes_with(g),
            GroupData::Product(parts) => {
                let mut offset = 0;
                for part in parts {
                    let k = part.size();
                    let n = self.size();
                    let block = g.submatrix(offset..offset + k, offset..offset + k);
                    let above = g.submatrix(0..offset, offset..offset + k);
                    let below = g.submatrix(offset + k..n, offset..offset + k);
                    if !above.is_zero() || !below.is_zero() || !part.contains(&block) {
                        return false;
                    }
                    offset += k;
                }
                true
            }
        }
    }

    /// The linearized membership conditions at the identity; the Lie algebra
    /// is the common kernel.
    fn lie_conditions(&self, x: &Matrix) -> Vec<Matrix> {
        let form_condition = |b: &Form| &(&b.adjoint(x) * b.gram()) + &(b.gram() * x);
        let commutator = |j: &Semiinvolution| match j.linearity() {
            Linearity::Linear => &(x * j.matrix()) - &(j.matrix() * x),
            Linearity::Antilinear => &(x * j.matrix()) - &(j.matrix() * &x.conj()),
        };
        match self {
            GroupData::General { .. } => Vec::new(),
            GroupData::Form(b) => vec![form_condition(b)],
            GroupData::Centralizer(j) => vec![commutator(j)],
            GroupData::FormCentralizer(b, j) => vec![form_condition(b), commutator(j)],
            GroupData::Product(_) => unreachable!("products are assembled from their factors"),
        }
    }

    /// A real basis of the Lie algebra.
    pub fn lie_algebra_basis(&self) -> Vec<Matrix> {
        let ring = self.ring();
        let n = self.size();
        if let GroupData::Product(parts) = self {
            let mut out = Vec::new();
            let mut offset = 0;
            for part in parts {
                let k = part.size();
                for x in part.lie_algebra_basis() {
                    let mut big = Matrix::zeros(ring, n, n);
                    for r in 0..k {
                        for c in 0..k {
                            big.set(offset + r, offset + c, x.get(r, c).clone());
                        }
                    }
                    out.push(big);
                }
                offset += k;
            }
            return out;
        }
        if let GroupData::General { .. } = self {
            return Shape::new(ring, n, n).basis();
        }
        solve_linear(&[Shape::new(ring, n, n)], |xs| self.lie_conditions(&xs[0]))
            .into_iter()
            .map(|mut v| v.remove(0))
            .collect()
    }

    pub fn lie_algebra_dim(&self) -> usize {
        self.lie_algebra_basis().len()
    }
}

/// A group with a display name and membership data.
#[derive(Clone, Debug)]
pub struct GroupDescriptor {
    pub names: Vec<GroupName>,
    pub data: GroupData,
    basis: OnceLock<Vec<Matrix>>,
}

impl PartialEq for GroupDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.data == other.data
    }
}

impl GroupDescriptor {
    pub fn new(names: Vec<GroupName>, data: GroupData) -> GroupDescriptor {
        GroupDescriptor {
            names,
            data,
            basis: OnceLock::new(),
        }
    }

    pub fn name(&self) -> String {
        product_name(&self.names)
    }

    /// Sum of the dimensions of the named factors.
    pub fn named_dim(&self) -> usize {
        self.names.iter().map(|g| g.dim()).sum()
    }

    pub fn contains(&self, g: &Matrix) -> bool {
        self.data.contains(g)
    }

    pub fn lie_algebra_basis(&self) -> &[Matrix] {
        self.basis.get_or_init(|| self.data.lie_algebra_basis())
    }

    pub fn lie_algebra_dim(&self) -> usize {
        self.lie_algebra_basis().len()
    }

    /// `g = (1 − A)(1 + A)⁻¹` for a random small-integer combination `A` of
    /// the Lie algebra basis.
    pub fn cayley_sample<R: Rng>(&self, rng: &mut R) -> Result<Matrix> {
        let basis = self.lie_algebra_basis();
        let ring = self.data.ring();
        let n = self.data.size();
        let id = Matrix::identity(ring, n);
        for _ in 0..CAYLEY_RETRIES {
            let mut a = Matrix::zeros(ring, n, n);
            for k in rand::seq::index::sample(rng, basis.len(), CAYLEY_TERMS.min(basis.len())) {
                let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
                a = &a + &basis[k].scale_right(&Scalar::from_i64(ring, c));
            }
            // on gl(n) the numerator can be singular as well
            if let Ok(inv) = (&id + &a).invert() {
                let g = &(&id - &a) * &inv;
                if g.is_invertible() {
                    return Ok(g);
                }
            }
        }
        Err(Error::SamplerExhausted)
    }
}

/// Number of distinct Lie algebra basis elements combined per Cayley sample.
pub const CAYLEY_TERMS: usize = 4;

/// Retry budget of the Cayley sampler.
pub const CAYLEY_RETRIES: usize = 32;

/// A random invertible matrix with small integer entries.
pub fn random_invertible<R: Rng>(rng: &mut R, ring: Ring, n: usize) -> Matrix {
    loop {
        let g = random_matrix(rng, ring, n, n, 2);
        if g.is_invertible() {
            return g;
        }
    }
}

/// A random matrix whose real coordinates lie in `[−bound, bound]`.
pub fn random_matrix<R: Rng>(rng: &mut R, ring: Ring, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(ring, rows, cols, |_, _| {
        let coeffs: Vec<_> = (0..ring.real_dim())
            .map(|_| crate::scalar::Rational::from_integer(rng.gen_range(-bound..=bound).into()))
            .collect();
        Scalar::from_coeffs(ring, &coeffs)
    })
}

/// Outcome of evaluating the three descriptions of `U^J(B)` on samples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checked: usize,
    pub members: usize,
    /// indices of samples on which the three predicates disagree
    pub counterexamples: Vec<usize>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// For each sample, compare `U(B) ∩ GL^J`, `U(B) ∩ U(D)` and `U(D) ∩ GL^J`.
pub fn centralizer_identities_check(b: &Form, j: &Semiinvolution, d: &Form, samples: &[Matrix]) -> IdentityReport {
    let mut report = IdentityReport::default();
    for (k, g) in samples.iter().enumerate() {
        let in_b = b.is_preserved_by(g);
        let in_d = d.is_preserved_by(g);
        let in_j = j.commutes_with(g) && g.is_invertible();
        let first = in_b && in_j;
        let second = in_b && in_d;
        let third = in_d && in_j;
        report.checked += 1;
        if first {
            report.members += 1;
        }
        if first != second || second != third {
            report.counterexamples.push(k);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_lie_algebra_dimensions() {
        let o3 = GroupData::Form(Form::signature(Ring::R, 3, 0).unwrap());
        assert_eq!(o3.lie_algebra_dim(), 3);
        let sp2 = GroupData::Form(Form::hyperbolic(Ring::R, FormKind::Skew, 1).unwrap());
        assert_eq!(sp2.lie_algebra_dim(), 3);
        let u11 = GroupData::Form(Form::signature(Ring::C, 1, 1).unwrap());
        assert_eq!(u11.lie_algebra_dim(), 4);
    }

    #[test]
    fn membership_examples() {
        let hyp = GroupData::Form(Form::hyperbolic(Ring::R, FormKind::Symmetric, 1).unwrap());
        let d = Matrix::diagonal(Ring::R, &[Scalar::from_i64(Ring::R, 2), Scalar::from_ratio(Ring::R, 1, 2)]);
        assert!(hyp.contains(&d));
        assert!(!hyp.contains(&Matrix::scalar(2, &Scalar::from_i64(Ring::R, 2))));
        assert!(hyp.contains(&Matrix::identity(Ring::R, 2)));
    }

    #[test]
    fn cayley_samples_are_members_and_deterministic() {
        let g = GroupDescriptor::new(
            vec![GroupName::Sp(1, 1)],
            GroupData::Form(Form::signature(Ring::H, 1, 1).unwrap()),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = g.cayley_sample(&mut rng).unwrap();
        assert!(g.contains(&a));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        assert_eq!(g.cayley_sample(&mut rng).unwrap(), a);
    }

    #[test]
    fn named_dimensions() {
        assert_eq!(GroupName::GL(Ring::H, 2).dim(), 16);
        assert_eq!(GroupName::SpR(4).dim(), 10);
        assert_eq!(GroupName::SOStar(4).dim(), 6);
        assert_eq!(GroupName::Sp(1, 0).dim(), 3);
        assert!(GroupName::U(1, 2).same_as(GroupName::U(2, 1)));
        assert!(!GroupName::U(1, 2).same_as(GroupName::O(2, 1)));
    }
}
