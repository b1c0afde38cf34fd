//! Quandle cohomology and quandle-cocycle state-sum invariants.
//!
//! The crate computes cohomology of small finite quandles and evaluates
//! cocycle invariants of closed braids, torus links, twist-spun torus knots
//! and the deform-spun figure-eight knot.

pub mod braid;
pub mod cohomology;
pub mod data;
pub mod error;
pub mod group_ring;
pub mod linalg;
pub mod quandle;
pub mod surface;
pub mod tables;
pub mod torus;

pub use error::{Error, Result};
pub use group_ring::{GroupRingElement, Modulus};
pub use quandle::{
    make_alexander, make_dihedral, make_s4, make_trivial, quandle_from_spec, AlexanderModule,
    AlexanderSpec, GroupWord, Quandle, QuandleSpec,
};
