//! Short-word search: generating words for subgroups and words for elements.
//!
//! Words are visited breadth first through the word tree, level by level and
//! in shortlex order within each level. Every letter and exponent in a result
//! refers to the generator set passed in by the caller, even when the search
//! itself ran over a reduced subset.

mod getshort;
mod lookup;
mod reduce;
mod twostep;
mod walker;

use serde::{Deserialize, Serialize};

pub use getshort::get_short_gens;
pub use lookup::lookup_word;
pub use reduce::{reduce_gens_for_elt, reduce_gens_for_group};
pub use twostep::{two_step_get_short_gens, two_step_lookup_word, TwoStepLookup, TwoStepShortGens};

use crate::perm::{PermGroup, Permutation};
use crate::words::PoweredWord;
use crate::DEFAULT_ELEMENT_LIMIT;

/// Default cap on letters held by one level of the search.
pub const DEFAULT_FRONTIER_CAP: usize = 20_000_000;

#[derive(Clone, Debug)]
pub struct ShortGensOptions {
    /// Seeds the found subgroup with `target ∩ exclude` and widens the
    /// coverage check to `⟨gens, exclude⟩`.
    pub exclude: Option<PermGroup>,
    /// Drop redundant generators before searching.
    pub reduce_first: bool,
    /// Drop redundant found words after the search completes.
    pub reduce_more: bool,
    /// Only try powers that leave an element of one of these orders.
    pub order_restriction: Option<Vec<u64>>,
    /// Maximum number of word-tree levels to search.
    pub iteration_limit: Option<usize>,
    pub frontier_cap: usize,
    /// Guard for the brute-force intersection `target ∩ exclude`.
    pub element_limit: u128,
}

impl Default for ShortGensOptions {
    fn default() -> Self {
        ShortGensOptions {
            exclude: None,
            reduce_first: true,
            reduce_more: true,
            order_restriction: None,
            iteration_limit: None,
            frontier_cap: DEFAULT_FRONTIER_CAP,
            element_limit: DEFAULT_ELEMENT_LIMIT,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LookupOptions {
    /// Accept a word whose value is conjugate to the target in `⟨gens⟩`.
    pub conjugate_check: bool,
    /// Ignored when `conjugate_check` is set.
    pub reduce_first: bool,
    pub iteration_limit: Option<usize>,
    pub frontier_cap: usize,
    /// Guard for brute-force conjugacy tests.
    pub element_limit: u128,
}

impl Default for LookupOptions {
    fn default() -> Self {
        LookupOptions {
            conjugate_check: false,
            reduce_first: true,
            iteration_limit: None,
            frontier_cap: DEFAULT_FRONTIER_CAP,
            element_limit: DEFAULT_ELEMENT_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStatus {
    Complete,
    /// The level limit was reached before the target was generated.
    Unfinished,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortGensResult {
    pub status: SearchStatus,
    pub powered_words: Vec<PoweredWord>,
    pub rendered: Vec<String>,
    /// Values of `powered_words`.
    pub elements: Vec<Permutation>,
    /// Generators (1-based) left after the initial reduction.
    pub kept_generator_indices: Vec<usize>,
    /// Word-tree levels visited.
    pub levels: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LookupResult {
    pub powered_word: PoweredWord,
    pub rendered: String,
    /// Value of `powered_word`; equals the target unless `conjugate` is set.
    pub element: Permutation,
    /// The value is only conjugate to the target; `witness` conjugates it
    /// onto the target (`witness^-1 * element * witness == target`).
    pub conjugate: bool,
    pub witness: Option<Permutation>,
    pub kept_generator_indices: Vec<usize>,
    pub levels: usize,
}
