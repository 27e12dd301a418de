//! Customizable hub labeling.
//!
//! The pipeline is split into a metric-independent phase and a metric-dependent
//! customization phase:
//!
//! 1. [`ordering`] computes balanced separators and a nested dissection order.
//! 2. [`hierarchy`] builds the chordal supergraph (the CCH) for that order.
//! 3. [`labeling`] derives the canonical hierarchical labels from the
//!    supergraph's upward search spaces.
//! 4. [`customize`] fills distance entries for a concrete metric, either with
//!    the hierarchical engines or with the queue-driven engine that works for
//!    any labeling with the customizable cover property.
//! 5. [`query`] answers exact distance queries by merging two labels.
//!
//! [`oracles`] and [`bounds`] hold the metric-dependent baselines and the
//! separator-based label-size checks used to validate everything above.

pub mod bounds;
pub mod customize;
mod error;
pub mod generators;
pub mod graph;
pub mod hierarchy;
pub mod io;
pub mod labeling;
pub mod oracles;
mod parallel;
pub mod ordering;
pub mod query;

pub use error::{Error, Result};
pub use graph::{Graph, Metric, Order, VertexId, Weight, INFINITY};
pub use hierarchy::ChordalSupergraph;
pub use labeling::{InverseLabels, LabelSet};
pub use query::CustomizedLabels;
