//! The Hecke algebra `H_n(q)` of type A in the permutation basis `T_w`.

mod character;
mod element;
mod partition;
mod special;

use thiserror::Error;

pub use character::{
    character, character_seminormal, character_table, character_table_with_bound, CharacterTable,
    LeftIdeal, SeminormalRep, DEFAULT_CHARACTER_BOUND,
};
pub use element::{all_perms, HeckeElement, Perm};
pub use partition::{partitions, standard_tableaux, Partition, StdTableau};
pub use special::{
    antisymmetrizer, canonical_gap_placement, coxeter_from_generators, coxeter_with_gaps,
    cyclic_type, gap_placements, jucys_murphy, primitive_idempotent, symmetrizer,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("elements of H_{left} and H_{right} cannot be combined")]
    MismatchedN { left: usize, right: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("not a standard tableau: {0}")]
    NonStandardTableau(String),
    #[error("left ideal has dimension {found}, expected {expected}")]
    DimensionSanity { expected: usize, found: usize },
    #[error("n = {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

#[cfg(test)]
mod tests;
