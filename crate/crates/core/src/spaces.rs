//! Points of the symmetric spaces: pairs `(Q₁, Q₂)` with `Q₁ ⊕ Q₂ = V`.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::SeriesEntry;
use crate::error::{Error, Result};
use crate::forms::{hermitian_inertia, FormKind};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpacePoint {
    pub q1: Subspace,
    pub q2: Subspace,
}

/// Inertia `(p, q)` of the managing form restricted to `Q₁`; it indexes the
/// components of a ★ entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label(pub usize, pub usize);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

impl SpacePoint {
    pub fn new(q1: Subspace, q2: Subspace) -> SpacePoint {
        SpacePoint { q1, q2 }
    }

    pub fn base(e: &SeriesEntry) -> SpacePoint {
        SpacePoint::new(e.base.0.clone(), e.base.1.clone())
    }

    pub fn image(&self, g: &Matrix) -> SpacePoint {
        SpacePoint::new(self.q1.image(g), self.q2.image(g))
    }
}

fn check_ambient(e: &SeriesEntry, u: &Subspace) -> Result<()> {
    if u.ambient_dim() != e.dim {
        return Err(Error::DimensionMismatch(format!(
            "subspace of K^{} in a space over K^{}",
            u.ambient_dim(),
            e.dim
        )));
    }
    if u.ring() > e.ring {
        return Err(Error::RingMismatch { expected: e.ring, found: u.ring() });
    }
    Ok(())
}

/// Whether `(q1, q2)` is a point of the space of entry `e`.
pub fn is_member(e: &SeriesEntry, q1: &Subspace, q2: &Subspace) -> Result<bool> {
    check_ambient(e, q1)?;
    check_ambient(e, q2)?;
    let q1 = &promote(q1, e);
    let q2 = &promote(q2, e);
    if !q1.is_direct_complement(q2)? {
        return Ok(false);
    }
    let half = e.dim / 2;
    Ok(match e.list {
        1 => {
            let b = e.form_b.as_ref().expect("List 1 form");
            let j = e.semiinv.as_ref().expect("List 1 semiinvolution");
            q1.dim() == half && b.is_isotropic(q1) && b.is_isotropic(q2) && &j.apply_subspace(q1) == q2
        }
        2 => {
            let b = e.form_b.as_ref().expect("List 2 form");
            q1.dim() == half && q2.dim() == half && b.is_isotropic(q1) && b.is_isotropic(q2)
        }
        3 => {
            let j = e.semiinv.as_ref().expect("List 3 semiinvolution");
            &j.apply_subspace(q1) == q2
        }
        4 => {
            let d = e.managing.as_ref().expect("List 4 form");
            q1.dim() == e.base.0.dim() && &d.orthogonal_complement(q1) == q2
        }
        _ => q1.dim() == e.params.p,
    })
}

fn promote(u: &Subspace, e: &SeriesEntry) -> Subspace {
    if u.ring() == e.ring {
        u.clone()
    } else {
        Subspace::canonicalize(&u.basis().promote(e.ring))
    }
}

pub fn contains(e: &SeriesEntry, pt: &SpacePoint) -> Result<bool> {
    is_member(e, &pt.q1, &pt.q2)
}

/// `g·(Q₁, Q₂)` for `g ∈ G`; on Lists 2 and 5, where `G* = G × G`, the same
/// `g` acts on both members.
pub fn act(e: &SeriesEntry, g: &Matrix, pt: &SpacePoint) -> Result<SpacePoint> {
    if !e.g.contains(g) {
        return Err(Error::NotInGroup);
    }
    Ok(pt.image(g))
}

/// `(g₁, g₂)·(Q₁, Q₂) = (g₁Q₁, g₂Q₂)` for `G* = G × G` (Lists 2 and 5).
pub fn act_pair(e: &SeriesEntry, g1: &Matrix, g2: &Matrix, pt: &SpacePoint) -> Result<SpacePoint> {
    if !matches!(e.list, 2 | 5) {
        return Err(Error::MissingStructure("a product group G* = G × G"));
    }
    if !e.g.contains(g1) || !e.g.contains(g2) {
        return Err(Error::NotInGroup);
    }
    Ok(SpacePoint::new(pt.q1.image(g1), pt.q2.image(g2)))
}

/// The component label of a point of a ★ entry.
pub fn component_index(e: &SeriesEntry, pt: &SpacePoint) -> Result<Label> {
    if !e.star {
        return Err(Error::NotStar(e.id));
    }
    let d = e.managing.as_ref().expect("★ entries carry a managing form");
    let gram = d.pullback_gram(pt.q1.basis());
    let sesq = d.is_sesquilinear();
    let gram = if d.kind() == FormKind::Antihermitian {
        gram.scale_left(&Scalar::i())
    } else {
        gram
    };
    let (p, q, z) = hermitian_inertia(&gram, sesq);
    if z != 0 {
        return Err(Error::NotTransverse);
    }
    Ok(Label(p, q))
}

/// A point `g·o` for `g` drawn from the Cayley sampler of `G`.
pub fn random_orbit_point<R: Rng>(e: &SeriesEntry, rng: &mut R) -> Result<SpacePoint> {
    let g = e.g.cayley_sample(rng)?;
    Ok(SpacePoint::base(e).image(&g))
}

/// Every label of a ★ entry: `(p, n − p)` on List 1, `(r', m − r')` within
/// the inertia bounds on List 4.
pub fn all_labels(e: &SeriesEntry) -> Result<Vec<Label>> {
    if !e.star {
        return Err(Error::NotStar(e.id));
    }
    let m = e.base.0.dim();
    Ok(match e.list {
        1 => (0..=m).map(|p| Label(p, m - p)).collect(),
        _ => (0..=m)
            .filter(|&r| r <= e.params.p && m - r <= e.params.q)
            .map(|r| Label(r, m - r))
            .collect(),
    })
}

/// An explicit point with component label `label`, built from coordinate
/// subspaces: on List 1, `Q₁` spans `e_i` for `i < p` and `f_i` for `i ≥ p`
/// with `Q₂ = J·Q₁`; on List 4, `Q₁` takes `r` positive and `m − r`
/// negative coordinate directions of `D`.
pub fn label_representative(e: &SeriesEntry, label: Label) -> Result<SpacePoint> {
    if !all_labels(e)?.contains(&label) {
        return Err(Error::BadParams(format!("label {label} is outside the union of entry {}", e.id)));
    }
    let m = e.base.0.dim();
    let pt = match e.list {
        1 => {
            let idx: Vec<usize> = (0..label.0).chain(m + label.0..2 * m).collect();
            let q1 = Subspace::coordinate(e.ring, e.dim, &idx);
            let j = e.semiinv.as_ref().expect("List 1 semiinvolution");
            let q2 = j.apply_subspace(&q1);
            SpacePoint::new(q1, q2)
        }
        _ => {
            let p = e.params.p;
            let idx: Vec<usize> = (0..label.0).chain(p..p + label.1).collect();
            let q1 = Subspace::coordinate(e.ring, e.dim, &idx);
            let d = e.managing.as_ref().expect("List 4 form");
            let q2 = d.orthogonal_complement(&q1);
            SpacePoint::new(q1, q2)
        }
    };
    Ok(pt)
}
