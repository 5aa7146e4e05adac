//! Exact homological algebra for Nakayama algebras.
//!
//! Algebras are given by Kupisch series, indecomposable modules by their top
//! vertex and length. On top of that calculus the crate computes φ-dimension,
//! finitistic, global, Gorenstein and dominant dimensions, the syzygy
//! filtered algebra `ε(Λ)` and its iterates, and an exhaustive verifier that
//! checks the known relations between all of these over every algebra in a
//! size budget.

pub mod algebra;
pub mod error;
pub mod extnat;
pub mod filtration;
pub mod invariants;
pub mod module;
pub mod relations;
pub mod text;
pub mod verify;

pub use algebra::{Algebra, Kind};
pub use error::{Error, Result, Violation};
pub use extnat::ExtNat;
pub use filtration::{
    epsilon, epsilon_chain, eta, filtration_data, phi_dim_fast, restrict_to_epsilon, ChainEnd,
    EpsilonChain, EpsilonModule, EpsilonResult, FiltrationData,
};
pub use invariants::{phi, Gorenstein, InvariantReport, RankSequence};
pub use module::{ModuleSet, Side, Step, UniserialModule};
pub use relations::{relations_from_kupisch, Relation, RelationSystem};
