//! Registry of named permutation groups, the verification certificate built on
//! it, report rendering and the command-line front end.

pub mod certificate;
pub mod cli;
pub mod expectations;
pub mod registry;
pub mod render;
pub mod report;

pub use repcert_core as core;
