//! Quantum Latin squares of prescribed cardinality.
//!
//! A quantum Latin square of order `v` is a `v x v` array of unit vectors in
//! `C^v` whose rows and columns are orthonormal bases. Its cardinality is the
//! number of entries that are distinct up to a global phase. This crate
//! builds squares for a requested cardinality, verifies arbitrary squares and
//! measures their cardinality with an auditable tolerance policy.

pub mod catalog;
pub mod constructions;
pub mod error;
pub mod io;
pub mod latin;
pub mod numerics;
pub mod phase;
pub mod square;

pub use error::{Error, Result};
pub use numerics::{Complex, StateVector, Tolerance, UnitaryMatrix};
pub use square::{qls_cardinality, verify_qls, CardinalityReport, Grid, Qls, VerificationReport};
