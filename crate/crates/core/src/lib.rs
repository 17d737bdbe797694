//! Exhaustive search and verification for Ramsey-critical colorings of
//! trees versus disjoint unions of cliques.

pub mod arrowing;
pub mod canon;
pub mod cli;
pub mod coloring;
pub mod config;
pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod lemmas;
pub mod ramsey;
pub mod report;
pub mod tree;

pub use arrowing::{arrows, avoid_check, enumerate_avoiders, find_blue_packing, find_red_tree};
pub use canon::{canonical_code, CanonicalCode};
pub use coloring::{Color, TwoColoring};
pub use config::SearchConfig;
pub use constructions::{build_critical, build_star_lower_bound, family_membership, FamilyParams};
pub use error::{Error, Result};
pub use graph::{complete_host, star_deleted_host, SimpleGraph};
pub use tree::{enumerate_trees, Tree};
