//! Brute-force structure queries for small groups.
//!
//! Everything here enumerates group elements, so each operation takes an
//! explicit element limit and fails with [`crate::Error::OrderExceedsLimit`]
//! beyond it.

mod classes;
mod elab;
mod subgroups;
mod sylow;
mod table;

pub use classes::{are_conjugate, conjugacy_classes, power_map, ClassTable, ConjugacyClass};
pub use elab::{is_elementary_abelian, is_maximal_el_ab_normal, maximal_elementary_abelian_normals};
pub use subgroups::{center, centralizer, normalizer};
pub use sylow::{sylow2, two_central_class_indices, two_central_involutions};
pub use table::{ClassRow, ClassTableReport};
