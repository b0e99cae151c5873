//! Exact computations with finite-dimensional Hopf algebras: structure
//! constants, Hopf pairings, generalized quantum doubles, partially
//! admissible mapping systems with their left partial duals, and the
//! module categories related by the equivalence functors.

pub mod doubles;
pub mod error;
pub mod exactmath;
pub mod functors;
pub mod hopf;
pub mod io;
pub mod modcats;
pub mod pairing;
pub mod partialdual;
pub mod registry;
pub mod report;

pub use error::{HopfError, Result};
pub use exactmath::{FieldSpec, Matrix, Scalar};
pub use hopf::HopfAlgebraData;
pub use pairing::HopfPairing;
pub use report::VerificationReport;
