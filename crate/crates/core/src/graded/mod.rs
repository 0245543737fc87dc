//! Grading-aware audits of a fixed point: position-degree sets, homogeneous
//! chains, cyclic-rotation and Lie-bracket sweeps, and window checks.

mod chains;
mod checks;
mod lie;
mod rotation;
mod sset;

pub use chains::{graded_nilpotency_scan, max_homogeneous_chain, ChainStatus, ChainWitness, NilpotencyScan, ScanRow};
pub use checks::{leading_letter_check, prefix_identity_check, window_check, PrefixIdentity, WindowCheck};
pub use lie::{lie_decomposition, lie_sweep, LieCertificate, LieSweep, LieTree};
pub use rotation::{cyclic_rotation_audit, RotationAudit};
pub use sset::{s_set, PositionDegreeSet};
