//! Universal Vassiliev invariant of braids on closed orientable surfaces,
//! truncated at a fixed degree.

pub mod braid_words;
pub mod combing;
pub mod coset_split;
pub mod diagram_algebra;
pub mod error;
pub mod free_group;
pub mod par;
pub mod surface_group;

pub use error::{Error, Result};
