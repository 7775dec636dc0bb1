//! Finite semigroup construction and structural analysis.

pub mod build;
pub mod elements;
pub mod ideals;
pub mod report;
pub mod smarandache;
pub mod subgroups;

pub use build::{build_semigroup, Carrier, FiniteSemigroup, Operation, SemigroupSpec};
pub use elements::{
    closure, coset, is_ideal, is_subgroup, monogenic_profile, normality_partition, special_elements, IdealCheck,
    MonogenicProfile, NormalityPartition, Side, SpecialElements, SubgroupCheck,
};
pub use ideals::IdealLattice;
pub use report::{analyze, StructureReport};
pub use smarandache::{AnalysisOptions, SmarandacheFlags};
pub use subgroups::{all_subgroups, maximal_subgroup_at, maximal_subgroups, subgroup_order_set};
