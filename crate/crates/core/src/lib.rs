//! Combinatorics engine for the weak order on permutations, the Tamari
//! lattice and its intervals, integer posets, permutrees, the s-weak
//! order and q,t-Catalan statistics.
//!
//! Everything is exact and deterministic. Enumerations are desk scale:
//! they are meant for exhaustive verification up to sizes around 8-12
//! depending on the object, not for asymptotic exploration.

#![allow(clippy::needless_range_loop)]

pub mod dot;
pub mod integer_posets;
pub mod intervals;
pub mod perm;
pub mod permutrees;
pub mod poly;
pub mod qt;
pub mod rat;
pub mod suites;
pub mod sweak;
pub mod tamari;

pub use perm::{InversionSet, Permutation};
pub use tamari::{BinaryTree, DyckPath, NuPath};
