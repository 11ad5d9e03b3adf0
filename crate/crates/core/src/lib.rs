//! Exact construction and verification of Witt and Virasoro actions on
//! truncated sl(2) weight modules, plus free Lie algebra relation checks.

pub mod driver;
pub mod error;
pub mod extend;
pub mod freelie;
pub mod json;
pub mod report;
pub mod reproduce;
pub mod scalar;
pub mod weightmod;

pub use error::{Error, Result};
pub use report::Report;
