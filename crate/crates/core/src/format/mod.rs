//! Text formats: `.2col` colorings and graph6 graphs.

mod graph6;
mod twocol;

pub use graph6::{from_graph6, to_graph6};
pub use twocol::{emit_coloring, parse_coloring};
