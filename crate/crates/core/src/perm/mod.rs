//! Permutations, generator sets and the stabilizer-chain group engine.

mod chain;
mod coset;
mod genfile;
mod group;
mod permutation;

pub use coset::{coset_action, CosetActionResult};
pub use genfile::{format_generator_file, parse_generator_file};
pub use group::{default_names, GeneratorSet, PermGroup};
pub use permutation::Permutation;
