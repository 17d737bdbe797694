//! Resource caps shared by the exhaustive searches.

/// Default cap on host edges for exhaustive arrowing.
pub const DEFAULT_MAX_EDGES: usize = 28;
/// Default cap on tree order for [`enumerate_trees`](crate::tree::enumerate_trees).
pub const DEFAULT_MAX_TREE_ORDER: usize = 12;
/// Cap on graph order for exact chromatic profiles.
pub const MAX_CHROMATIC_ORDER: usize = 16;
/// Environment variable that replaces the default edge cap in the CLI.
pub const MAX_EDGES_ENV: &str = "RAMSEYLAB_MAX_EDGES";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest host edge count `arrows` and `enumerate_avoiders` will accept.
    pub max_edges: usize,
    /// Largest tree order `enumerate_trees` will generate.
    pub max_tree_order: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_edges: DEFAULT_MAX_EDGES,
            max_tree_order: DEFAULT_MAX_TREE_ORDER,
        }
    }
}

impl SearchConfig {
    pub fn with_max_edges(mut self, max_edges: usize) -> Self {
        self.max_edges = max_edges;
        self
    }

    pub fn with_max_tree_order(mut self, max_tree_order: usize) -> Self {
        self.max_tree_order = max_tree_order;
        self
    }
}
