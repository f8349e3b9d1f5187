//! Simplicial complexes, hypergraphs and the graded Betti numbers of their
//! Stanley-Reisner ideals.
//!
//! Faces are `u64` bit sets over a [`VertexUniverse`] of at most 63 vertices.
//! Betti numbers come from Hochster's formula, from closed forms for the
//! uniform hypergraph families in [`families`], or from the f-vector when
//! the resolution is linear.

pub mod betti;
pub mod complex;
pub mod error;
pub mod face;
pub mod families;
pub mod field;
pub mod format;
pub mod homology;
pub mod hypergraph;
pub mod rank;
pub mod verify;

pub use betti::{BettiTable, HilbertSeries, MultigradedBettiTable, SweepConfig};
pub use complex::{Dimension, SimplicialComplex};
pub use error::{Error, Result};
pub use face::{Face, VertexUniverse};
pub use families::{FamilyKind, FamilySpec, IntervalSpec};
pub use field::FieldSpec;
pub use homology::{boundary_matrix, reduced_homology, HomologyProfile};
pub use hypergraph::Hypergraph;
