//! Finitary power monoids of small monoids: atoms, factorizations into atoms,
//! minimal factorizations and their lengths.
//!
//! Subsets of a ground of at most 64 elements are stored as bitmasks.

#![no_std]

extern crate alloc;

pub mod atoms;
pub mod factor;
pub mod ground;
pub mod powset;
mod search;
pub mod subset;

pub use atoms::{
    atom_census, is_atom, named_construction, AtomError, AtomTable, AtomVerdict, Construction, Variant,
};
pub use factor::{
    factorization_classes, has_minimal_of_length, is_minimal, is_nr, length_set_truncated, minimal_factorizations,
    minimal_length_set, preceq, strictly_precedes, FactorClass, FactorError, FactorWord, LengthSet,
    MinimalFactorizations,
};
pub use ground::{Elem, ElementClassification, GroundError, GroundKind, GroundMonoid, GroundSpec};
pub use powset::{HatLift, ParsedSubset, PowsetError};
pub use search::{GENERAL_GROUP_LIMIT, ORDERED_MINIMALITY_LIMIT};
pub use subset::Subset;
