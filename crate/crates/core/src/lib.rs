//! Cyclic hyper degrees: a polynomially recognizable family of degree
//! sequences that are always realized by a simple hypergraph.
//!
//! The crate is organized bottom-up:
//!
//! * [`bittable`]: implicit bit columns, shifted tables, row distinctness.
//! * [`ranges`]: closed-form ranges of contiguous window sums.
//! * [`matching`]: column/coordinate assignment.
//! * [`recognizer`]: the decision procedure.
//! * [`witness`]: certificates and explicit edge sets.
//! * [`oracle`]: brute-force ground truth for small orders.
//! * [`analysis`]: counting and the lower bound.
//! * [`verify`]: self-check suites used by the `chd verify` command.
//! * [`cli`]: the `chd` command-line front end.

pub mod analysis;
pub mod bittable;
pub mod cli;
pub mod error;
pub mod matching;
pub mod oracle;
pub mod ranges;
pub mod recognizer;
pub mod verify;
pub mod witness;

pub use bittable::{rotate, BitColumn, RowVector, ShiftVector};
pub use error::{Error, Result};
pub use ranges::{range_of, range_size, SumRange};
pub use recognizer::{candidate_lengths, feasible, recognize, Assignment, DegreeSequence};
pub use witness::{build_witness, materialize_edges, solve_start, verify_witness, Hyperedge, Witness};
