//! Soft-set algebra with set-operation based distance and similarity measures.
//!
//! * [`softset`]: soft spaces, soft sets, union, restricted intersection,
//!   complement.
//! * [`matrix`]: the 0/1 matrix representation and its loss of partiality.
//! * [`matrix_measures`]: matching-function similarity and the Hamming /
//!   Euclidean distances over indicator matrices.
//! * [`distance`]: the set-operation distances `d`, `l`, `c`, `p`, `e`, `q`.
//! * [`similarity`]: matching similarity `M`, Koczy and Williams–Steele
//!   similarities, α-similarity and significant similarity.
//! * [`axioms`]: sample-based metric and similarity axiom checks with witnesses.
//! * [`diagnosis`]: profile-vs-model diagnosis reports.
//!
//! Results carry exact values (rationals, radicals, reciprocals of radicals)
//! where the measure allows it.

pub mod axioms;
pub mod cli;
pub mod diagnosis;
pub mod distance;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod io;
pub mod matrix;
pub mod matrix_measures;
pub mod measure;
pub mod sampler;
pub mod similarity;
pub mod softset;
pub mod value;

pub use error::{Result, SoftSetError};
pub use exact::{ExactValue, Rational, Surd};
pub use measure::{MeasureId, MeasureKind};
pub use softset::{ComplementConvention, SoftSet, SoftSpace};
pub use value::MeasureValue;
