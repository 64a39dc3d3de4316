//! Right-angled Artin groups from their defining flag complexes.
//!
//! * [`complex`]: simplicial complexes and the constructions on them
//!   (flag completion, subdivision, cone, join, quotients, fixtures).
//! * [`homology`]: exact integral and mod-p homology.
//! * [`models`]: the poset complex, Salvetti complexes, finite abelian
//!   covers and mod-p homology growth.
//! * [`classify`]: the zero/positive minimal volume entropy decision
//!   procedure with replayable certificates.

pub mod classify;
pub mod complex;
pub mod error;
pub mod homology;
pub mod models;

pub use error::{Error, Result};
