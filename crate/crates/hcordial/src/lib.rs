//! A self-verifying toolkit for H-cordial-family edge labelings.
//!
//! The crate provides, in dependency order:
//!
//! * [`graph`] — simple graphs as normalized edge lists, family generators,
//!   structural predicates, Euler tours, and the text format;
//! * [`labeling`] — labelings, induced vertex values, tallies, the four
//!   definition verifiers, and the necessary-condition predicates;
//! * [`constructors`] — one constructive labeler per supported family, each
//!   re-verified before it returns;
//! * [`oracle`] — exhaustive, optionally pruned and parallel search for valid
//!   labelings, used to arbitrate existence questions at desk scale;
//! * [`catalog`] — hard-coded reference graphs with machine-checkable claims;
//! * [`dot`] — DOT rendering of graphs and labelings.

pub mod catalog;
pub mod constructors;
pub mod dot;
pub mod graph;
pub mod labeling;
pub mod oracle;

pub use graph::{Graph, GraphError, Path, TreeStats};
pub use labeling::{
    Labeling, LabelingError, LabelingKind, Obstruction, Tally, VerificationReport,
};
