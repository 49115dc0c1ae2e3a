//! Numerical laboratory for the non-relativistic limit of the quartic scalar
//! model in two space dimensions: renormalized contact scattering, bound
//! states under three regularizations, few-boson stability probes and
//! boosted-dispersion positivity checks.

pub mod cli;
pub mod cutoff;
pub mod error;
pub mod fewbody;
pub mod lattice;
pub mod params;
pub mod passivity;
pub mod quad;
pub mod roots;
pub mod special;
pub mod squarewell;

pub use error::{Error, Result};
