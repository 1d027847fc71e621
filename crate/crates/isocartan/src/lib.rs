//! Std side of the workspace: JSON model files, report serialization, the
//! census tables with their stored reference values, and the command line.

pub mod census;
pub mod cli;
pub mod io;
pub mod text;

pub use isocartan_core;
