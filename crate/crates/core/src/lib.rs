//! Weight and character counts of saturated fusion systems.
//!
//! The crate computes w(F), k(F), m(F), m*(F) and the defect-graded m(F, d) for
//! fusion systems realized by finite groups and for the nonconstrained fusion
//! systems on the extraspecial group p^{1+2}_+, and verifies the identities
//! between them by independent computations.

pub mod catalog;
pub mod error;
pub mod fusion;
pub mod group;
pub mod modular;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
