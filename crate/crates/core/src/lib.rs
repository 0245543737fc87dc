//! Pure morphic words and their iterative monomial algebras.
//!
//! * [`word`]: morphisms, fixed-point prefixes, factor sets.
//! * [`linalg`]: exact incidence-matrix algebra over big integers.
//! * [`deciders`]: three-valued word-property deciders and the ring-property report.
//! * [`graded`]: grading-aware audits (position-degree sets, chains, rotations, Lie brackets).
//! * [`algebra`]: the monomial algebra A_w as a computational object.

pub mod algebra;
pub mod deciders;
pub mod error;
pub mod exec;
pub mod gallery;
pub mod graded;
pub mod linalg;
pub mod word;

pub use error::{Error, Result};
pub use exec::Exec;
pub use word::{Letter, Morphism, Word};
