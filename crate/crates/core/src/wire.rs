//! JSON wire formats.
//!
//! Scalars are arrays of 1, 2 or 4 exact rationals written `"p"` or `"p/q"`
//! (coefficients of `1, i, j, k`); matrices are arrays of rows. Structured
//! values carry their ring explicitly so that empty bases and real-valued
//! matrices over ℂ or ℍ round-trip.

use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{Form, FormKind};
use crate::involutions::{Linearity, Semiinvolution};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Ring, Scalar};
use crate::spaces::SpacePoint;
use crate::subspace::Subspace;

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

pub fn scalar_from_strings(parts: &[String]) -> Result<Scalar> {
    let ring = match parts.len() {
        1 => Ring::R,
        2 => Ring::C,
        4 => Ring::H,
        k => return Err(Error::Parse(format!("a scalar has 1, 2 or 4 coefficients, not {k}"))),
    };
    let coeffs = parts.iter().map(|p| parse_rational(p)).collect::<Result<Vec<_>>>()?;
    Ok(Scalar::from_coeffs(ring, &coeffs))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(d)?;
        scalar_from_strings(&parts).map_err(de::Error::custom)
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows()))?;
        for r in 0..self.rows() {
            let row: Vec<&Scalar> = (0..self.cols()).map(|c| self.get(r, c)).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Scalar>>::deserialize(d)?;
        matrix_from_rows(Ring::R, rows).map_err(de::Error::custom)
    }
}

fn matrix_from_rows(ring: Ring, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::Parse("matrix rows have different lengths".into()));
    }
    Ok(Matrix::from_rows(ring, rows))
}

fn ring_of(symbol: &str) -> Result<Ring> {
    Ring::from_symbol(symbol).ok_or_else(|| Error::Parse(format!("unknown ring {symbol:?}")))
}

/// A matrix over an explicit ring with `rows` rows.
fn typed_matrix(ring: Ring, rows: usize, m: Matrix) -> Result<Matrix> {
    if m.ring() > ring {
        return Err(Error::RingMismatch { expected: ring, found: m.ring() });
    }
    if m.rows() == 0 && rows > 0 {
        return Ok(Matrix::zeros(ring, rows, 0));
    }
    if m.rows() != rows {
        return Err(Error::Parse(format!("expected {rows} rows, found {}", m.rows())));
    }
    Ok(m.promote(ring))
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Subspace", 3)?;
        st.serialize_field("ring", self.ring().symbol())?;
        st.serialize_field("ambient_dim", &self.ambient_dim())?;
        st.serialize_field("basis", self.basis())?;
        st.end()
    }
}

#[derive(Deserialize)]
struct SubspaceWire {
    ring: String,
    ambient_dim: usize,
    basis: Matrix,
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SubspaceWire::deserialize(d)?;
        let build = || -> Result<Subspace> {
            let ring = ring_of(&w.ring)?;
            let basis = typed_matrix(ring, w.ambient_dim, w.basis)?;
            Ok(Subspace::canonicalize(&basis))
        };
        build().map_err(de::Error::custom)
    }
}

impl Serialize for Form {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Form", 3)?;
        st.serialize_field("ring", self.ring().symbol())?;
        st.serialize_field("kind", &self.kind())?;
        st.serialize_field("gram", self.gram())?;
        st.end()
    }
}

#[derive(Deserialize)]
struct FormWire {
    ring: String,
    kind: FormKind,
    gram: Matrix,
}

impl<'de> Deserialize<'de> for Form {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = FormWire::deserialize(d)?;
        let build = || -> Result<Form> {
            let ring = ring_of(&w.ring)?;
            let rows = w.gram.rows();
            Form::new(ring, w.kind, typed_matrix(ring, rows, w.gram)?)
        };
        build().map_err(de::Error::custom)
    }
}

impl Serialize for Semiinvolution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Semiinvolution", 3)?;
        st.serialize_field("linearity", &self.linearity())?;
        st.serialize_field("epsilon", &self.epsilon())?;
        st.serialize_field("matrix", self.matrix())?;
        st.end()
    }
}

#[derive(Deserialize)]
struct SemiinvolutionWire {
    linearity: Linearity,
    epsilon: i64,
    matrix: Matrix,
}

impl<'de> Deserialize<'de> for Semiinvolution {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SemiinvolutionWire::deserialize(d)?;
        Semiinvolution::new(w.linearity, w.epsilon, w.matrix).map_err(de::Error::custom)
    }
}

/// A point of the space of one series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointWire {
    pub entry: usize,
    pub q1: Subspace,
    pub q2: Subspace,
}

impl PointWire {
    pub fn new(entry: usize, pt: &SpacePoint) -> PointWire {
        PointWire { entry, q1: pt.q1.clone(), q2: pt.q2.clone() }
    }

    pub fn point(&self) -> SpacePoint {
        SpacePoint::new(self.q1.clone(), self.q2.clone())
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("wire types serialize")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
