//! Structural tools: equitable partitions, the Hall dichotomy, the tree
//! trichotomy and the path-lengthening checker.

mod equitable;
mod hall;
mod lemma35;
mod trichotomy;

pub use equitable::{block_sizes, equitable_partition, equitable_partition_seeded, PartitionWitness};
pub use hall::{bipartite_coloring, hall_dichotomy, HallOutcome};
pub use lemma35::{lemma35_check, red_path_of_length, Lemma35Outcome, Lemma35Report, PATH_LENGTH_READING};
pub use trichotomy::{
    independent_end_edges, largest_talon, longest_suspended_path, tree_trichotomy, TreeStructure,
    TreeStructureReport,
};
