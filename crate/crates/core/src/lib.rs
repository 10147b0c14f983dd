//! Schur expansions of the products s_{μ'} s_{μ^c}, where μ^c is the
//! complement of μ in an m×m square, and the cover relation they induce on
//! partitions.
//!
//! The crate is organised bottom-up:
//!
//! * [`partition`]: partitions, conjugates, complements, corners.
//! * [`classify`]: the type 1 / type 2 readings and the predicted cover.
//! * [`lr`]: Littlewood-Richardson tableaux on chains of shapes.
//! * [`schur`]: product expansions, differences, symmetry and stability checks.
//! * [`cover`]: cover verdicts and exhaustive sweeps.
//! * [`inject`]: the tableau injections behind the positive cases.
//!
//! With the default `parallel` feature the sweeps run on rayon's thread
//! pool; without it everything runs sequentially and produces the same
//! results.

pub mod classify;
pub mod cover;
pub mod error;
pub mod inject;
pub mod lr;
pub mod par;
pub mod partition;
pub mod schur;

pub use error::{Error, Result};
pub use partition::{Cell, Partition};
