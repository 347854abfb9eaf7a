//! Finite permutation groups, exact character theory and the normal-subgroup
//! machinery needed to certify fixed-point dimensions of real representations.
//!
//! Everything here works without `std`; allocation is required.

#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod analysis;
pub mod chain;
pub mod character;
pub mod classes;
pub mod cyclotomic;
pub mod error;
pub mod family;
pub mod group;
pub mod groupfile;
pub mod induction;
pub mod iso;
pub mod modp;
pub mod perm;
pub mod real;
pub mod structure;
pub mod subgroups;

pub use error::{Error, ParseError};
pub use group::PermGroup;
pub use perm::Permutation;
