//! Spin operators for the Dirac particle.
//!
//! The crate realizes the two bases of the Dirac formalism (momentum/spin
//! and covariant bispinor), the calculus that moves momentum-dependent
//! operators between them, closed forms for eleven relativistic spin
//! operators, and the checks that classify them: sector preservation,
//! parity, isotropy, su(2) closure, charge symmetry, rotation covariance
//! and the non-relativistic limit.

pub mod cli;
pub mod clifford;
pub mod dirac_basis;
pub mod error;
pub mod kinematics;
pub mod linalg;
pub mod report;
pub mod spin_catalog;
pub mod symmetries;

pub use dirac_basis::{amplitude, projector, DiracMatrixOp, SectorBlocks};
pub use error::{Result, SpinError};
pub use kinematics::{on_shell, EnergySign, FourMomentum, LorentzTransform};
pub use linalg::{Complex, Mat2, Mat4, Vec3Of};
pub use report::{CheckRecord, CheckReport};
pub use spin_catalog::OperatorKind;
