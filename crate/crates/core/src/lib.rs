//! Tightness, weak Golodness and Hochster/moment-angle decompositions for
//! finite simplicial complexes, with exact arithmetic over `Q` and `F_p`.

pub mod complex;
pub mod error;
pub mod field;
pub mod fm;
pub mod generators;
pub mod hochster;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod manifold;
pub mod oracle;
mod parallel;
pub mod report;
pub mod tightness;

pub use complex::{BuildOptions, Face, SimplicialComplex};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
