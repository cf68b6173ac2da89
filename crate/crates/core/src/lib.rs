//! Automorphisms of free products of a free group with finite abelian groups.

pub mod automorphism;
pub mod covering;
pub mod embedding;
pub mod error;
pub mod freegroup;
pub mod group;
pub mod relations;
pub mod restriction;

pub use error::{Error, Result};
pub use group::{AbelVector, FactorSpec, GroupSpec, Payload, SubgroupSpec, Syllable, Word};
