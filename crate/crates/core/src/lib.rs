//! Matroids, cyclic-flat lattices and locally repairable codes.

pub mod codes;
pub mod construct;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod lrc;
pub mod matroid;
pub mod subset;
pub mod zlattice;

pub use codes::{GeneralCode, LinearCode, Polymatroid};
pub use error::{Error, Result};
pub use gf::{Field, FieldElement, FieldSpec, GfError};
pub use linalg::Matrix;
pub use matroid::Matroid;
pub use subset::{Ground, Label, Subset};
pub use zlattice::CyclicFlatLattice;
