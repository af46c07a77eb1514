//! Stanley–Reisner Betti numbers of subdivided simplicial complexes.

pub mod asymptotics;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod formulas;
pub mod hochster;
pub mod homology;
pub mod io;
pub mod iso;
pub mod linalg;
pub mod report;
pub mod subdivision;

pub use complex::{FVector, Face, FaceTable, Restriction, SimplicialComplex, VertexId, VertexLabel};
pub use error::{Error, Result};
pub use fixtures::{standard_complex, StandardSpec};
pub use linalg::FieldSpec;
