//! Qubit states and gates as real multivectors.
//!
//! The crate is layered bottom-up:
//!
//! - [`clifford`]: dense real Clifford algebras Cl(p,q).
//! - [`msta`]: n-qubit states in the product of Pauli-algebra even subspaces.
//! - [`gates`]: one- and two-qubit gate actions and circuits.
//! - [`rotors`]: Spin+(3) rotors, SU(2) conversion, and H/T synthesis.
//! - [`density`]: density operators as multivectors.
//! - [`oracle`]: an independent complex-matrix simulator used for checking.

pub mod clifford;
pub mod density;
pub mod error;
pub mod gates;
pub mod msta;
pub mod oracle;
pub mod rotors;

pub use clifford::{Blade, Multivector, Signature};
pub use error::{Error, Result};
pub use gates::{Circuit, GateKind, Op};
pub use msta::{MstaMultivector, MstaState, SpinorVec};
pub use oracle::{ComplexMatrix, StateVec};
pub use rotors::{AxisAngle, GateWord, Rotor};

/// Tolerance for identities that hold exactly in exact arithmetic.
pub const EXACT_TOL: f64 = 1e-12;

/// Tolerance for results of composed numerical pipelines.
pub const PIPELINE_TOL: f64 = 1e-10;
