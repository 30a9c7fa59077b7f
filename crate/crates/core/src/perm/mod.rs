//! Finite permutation groups: elements, subgroups, the subgroup lattice,
//! quotients and conjugacy.

pub mod families;
mod file;
mod group;
mod lattice;
mod ops;
mod permutation;
mod subgroup;

pub use file::{parse_group_text, read_group_file};
pub use group::{group_from_generators, Limits, PermGroup, DEFAULT_MAX_ELEMENTS, DEFAULT_MAX_SUBGROUP_ORDER};
pub use lattice::{Lattice, SubId};
pub use ops::{
    are_conjugate, are_conjugate_in, centralizer, centralizer_in, conjugacy_classes, conjugacy_classes_in, is_normal,
    is_subnormal, is_subnormal_in, normal_closure, normal_subgroups, normalizer, normalizer_in, quotient, subgroups,
    subgroups_of, subgroups_of_order, sylow, Quotient,
};
pub use permutation::Permutation;
pub use subgroup::{Subgroup, SubgroupSet};

#[cfg(test)]
mod tests;
