//! Exact arithmetic for classical pseudo-Riemannian symmetric spaces realized
//! as spaces of pairs of complementary subspaces.

pub mod catalog;
pub mod charts;
pub mod error;
pub mod forms;
pub mod invariants;
pub mod involutions;
pub mod matrix;
pub mod realify;
pub mod scalar;
pub mod spaces;
pub mod subspace;
pub mod wire;

pub use catalog::{build, Params, SeriesEntry};
pub use error::{Error, Result};
pub use forms::{Form, FormKind, FormType};
pub use matrix::Matrix;
pub use scalar::{Rational, Ring, Scalar};
pub use spaces::SpacePoint;
pub use subspace::Subspace;
