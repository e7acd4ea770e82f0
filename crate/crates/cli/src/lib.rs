//! Library side of the `zetalab` binary: argument types, command
//! implementations, serialization, plotting, and the claims audit.

pub mod audit;
pub mod cli;
pub mod commands;
pub mod emit;
pub mod error;
pub mod svg;
