//! Graph invariants and conjecture checking for the Randić index and the
//! algebraic connectivity of small connected graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`], [`graph6`], [`family`]: bit-row graphs, interchange format and
//!   named families (path, cycle, complete, star, double comet).
//! - [`spectrum`], [`flow`], [`invariants`]: Laplacian eigenvalues by cyclic
//!   Jacobi, edge connectivity by unit-capacity max-flow, and the aggregated
//!   [`InvariantReport`].
//! - [`bounds`]: every inequality as a graded predicate.
//! - [`canon`], [`enumerate`]: canonical certificates and isomorph-free
//!   streams of connected graphs and trees.
//! - [`objective`], [`search`]: objective expressions over invariants and a
//!   variable neighbourhood search for extremal graphs.

pub mod bounds;
pub mod canon;
pub mod enumerate;
pub mod family;
pub mod flow;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod objective;
pub mod search;
pub mod spectrum;

pub use bounds::{BoundVerdict, PredicateId, Status};
pub use canon::{canonical_form, Certificate};
pub use family::{family, FamilyKind};
pub use graph::{Graph, GraphError};
pub use graph6::{decode_graph6, encode_graph6, to_graph6_string, Graph6Error};
pub use invariants::{invariant_report, InvariantReport};
