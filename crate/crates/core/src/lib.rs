//! Quiver algebras `KQ/I` with `I` generated by quadratic monomials and
//! (anti-)commutativity relations: orthogonal ideals, admissibility,
//! graded centers, finite generation and Hochschild cohomology modulo
//! nilpotence, with an exact linear-algebra oracle to check them against.

pub mod center;
pub mod dsl;
pub mod fingen;
pub mod graph;
pub mod ideal;
pub mod koszul;
pub mod normal_form;
pub mod notice;
pub mod oracle;
pub mod quiver;
pub mod report;

#[cfg(test)]
mod fixtures;

pub use ideal::{AlgebraPresentation, Flavor, IdealError, IdealSpec, KoszulBasis};
pub use notice::Notice;
pub use quiver::{ArrowId, Path, Quiver, QuiverError, VertexId};
