//! Median-based and mean-based position/momentum uncertainty products for
//! one-dimensional pure states.

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod dispersion;
pub mod error;
pub mod hermite;
pub mod momentum;
pub mod numerics;
pub mod qubit;
pub mod search;
pub mod states;

pub use error::{Error, Result};
