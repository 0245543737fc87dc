//! Exact big-integer incidence-matrix algebra.
//!
//! Nothing in here uses fixed-width or floating-point arithmetic on values
//! derived from the morphism: |φⁿ(b)| grows exponentially.

mod charpoly;
mod matrix;
mod occurrence;
mod recurrence;
mod weights;

pub use charpoly::{char_poly, CharPoly};
pub use matrix::{incidence_matrix, iterate_parikh, parikh, IncidenceMatrix, Matrix, ParikhVector};
pub use occurrence::{
    occurrence_decider, occurrence_profile, Occurrence, OccurrenceWitness, OCCURRENCE_CAP,
};
pub use recurrence::{recurrence_from_charpoly, LinearRecurrence};
pub use weights::{weight_sequence, WeightSequences};
