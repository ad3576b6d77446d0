//! Structure and substructure connectivity of hypercubes with respect to
//! paths and cycles: vertex and automorphism primitives, embeddings of paths
//! and cycles, explicit cut families, cut validation, an exhaustive search
//! oracle for small cubes, and the closed-form values.

pub mod analysis;
pub mod bitset;
pub mod construct;
pub mod cube;
pub mod embed;
pub mod error;
pub mod family;
pub mod formulas;
pub mod oracle;
pub mod sampling;

pub use analysis::{components_after_removal, validate_cut, ComplementReport, Verdict};
pub use construct::{build_cycle_cut, build_path_cut};
pub use cube::{Automorphism, Cube, Vertex};
pub use embed::{CubeCycle, CubePath, Subcube};
pub use error::{Error, Result};
pub use family::{CutFamily, CutMode, Element, StructureKind};
pub use oracle::{min_structure_cut, OracleResult, OracleValue, SearchBudget};
