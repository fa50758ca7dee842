//! Permutation-group toolkit built around short-word search.
//!
//! * [`perm`]: permutations, generator files and stabilizer chains.
//! * [`words`]: numerical words, shortlex order and word-tree frontiers.
//! * [`shortwords`]: short generating words for subgroups and elements.
//! * [`structure`]: brute-force class tables, centralizers and 2-subgroups.
//! * [`cli`]: the `shortwords` command-line front end.
//!
//! Products are always read left to right: `p * q` applies `p` first.

pub mod cli;
pub mod error;
pub mod perm;
pub mod shortwords;
pub mod structure;
pub mod words;

pub use error::{Error, ErrorClass, Result};
pub use perm::{GeneratorSet, PermGroup, Permutation};

/// Default guard on brute-force element enumeration.
pub const DEFAULT_ELEMENT_LIMIT: u128 = 20_000;
