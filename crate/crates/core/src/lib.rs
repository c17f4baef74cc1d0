//! Exact arithmetic for the Hermite, Gegenbauer and relativistic Hermite
//! polynomial families and a checker for identities relating them.

pub mod algebra;
pub mod error;
pub mod families;
pub mod fault;
pub mod identities;
pub mod numeric;
pub mod report;
pub mod suite;
pub mod turan;

pub use error::{Error, Result};
