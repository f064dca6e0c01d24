//! Non-abelian tensor squares of small finite groups.
//!
//! The crate builds concrete finite groups, enumerates cosets of finitely
//! presented groups, constructs `G ⊗ G` by two independent routes and
//! classifies the automorphisms of `G` against the tensor-analogue
//! conditions (tensor commuting, tensor central). The [`harness`] module
//! turns every identity into a per-group check with witnesses.

pub mod automorphisms;
pub mod error;
pub mod fp;
pub mod group;
pub mod harness;
pub mod invariants;
pub mod tensor;

pub use error::{Error, Result};
pub use group::{Elem, FiniteGroup, GroupHom, Subgroup};
