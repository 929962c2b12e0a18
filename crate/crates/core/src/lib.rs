//! Exact computations with fusion rings and modular data.
//!
//! A fusion ring is a free Z-module with a distinguished basis, a unit
//! basis element, a duality involution, and nonnegative integer structure
//! constants. This crate validates the defining axioms, computes
//! Frobenius-Perron dimensions by power iteration, builds the adjoint
//! subring and the universal grading, runs the upper and lower central
//! series with their nilpotency classes, decomposes based modules, and
//! analyzes modular S/T-matrix data (Verlinde fusion rules, centralizers,
//! and the duality between the two central series).
//!
//! All operations are pure functions over immutable data and are safe to
//! call concurrently. Floating point enters only through Perron
//! eigenvectors and S-matrix entries; every such result carries the
//! tolerance it was computed at.

pub mod based_module;
pub mod catalog;
pub mod error;
pub mod fp;
pub mod grading;
pub mod group;
pub mod io;
pub mod modular;
pub mod report;
pub mod ring;
pub mod series;
pub mod validation;

pub use error::Error;
pub use fp::{fp_dimensions, FpOptions, FpData};
pub use ring::{ElementVec, FusionRing, SubringBasis};
pub use validation::{ValidationReport, Violation};
