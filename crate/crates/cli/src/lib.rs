//! Command-line front end and serialization for `n2sc-core`.

pub mod app;
pub mod dto;
pub mod render;

pub use app::{run, Outcome};
