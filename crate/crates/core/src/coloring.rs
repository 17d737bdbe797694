//! Red/blue edge colorings of a host graph.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Colorings are searched with single-word adjacency rows.
pub const MAX_COLORING_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

/// A host graph together with the subset of its edges colored red. Every
/// other host edge is blue; blue is never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    host: SimpleGraph,
    red: SimpleGraph,
}

/// Serialized as `{"order": n, "red": [[u, v], ...], "blue": [...]}`.
impl Serialize for TwoColoring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let red: Vec<[usize; 2]> = self.red_edges().map(|(u, v)| [u, v]).collect();
        let blue: Vec<[usize; 2]> = self.blue_edges().map(|(u, v)| [u, v]).collect();
        let mut st = s.serialize_struct("TwoColoring", 3)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("red", &red)?;
        st.serialize_field("blue", &blue)?;
        st.end()
    }
}

impl TwoColoring {
    pub fn new<I>(host: SimpleGraph, red_edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let red = SimpleGraph::from_edges(host.order(), red_edges)?;
        Self::from_parts(host, red)
    }

    /// Pairs a host with a red graph on the same vertex set.
    pub fn from_parts(host: SimpleGraph, red: SimpleGraph) -> Result<Self> {
        if host.order() > MAX_COLORING_ORDER {
            return Err(Error::param(format!(
                "colorings support at most {MAX_COLORING_ORDER} vertices, got {}",
                host.order()
            )));
        }
        if red.order() != host.order() {
            return Err(Error::param("red graph and host differ in order"));
        }
        if let Some((u, v)) = red.edges().find(|&(u, v)| !host.has_edge(u, v)) {
            return Err(Error::param(format!("red edge {u} {v} is not a host edge")));
        }
        Ok(TwoColoring { host, red })
    }

    pub fn all_blue(host: SimpleGraph) -> Result<Self> {
        let red = SimpleGraph::new(host.order());
        Self::from_parts(host, red)
    }

    pub fn all_red(host: SimpleGraph) -> Result<Self> {
        let red = host.clone();
        Self::from_parts(host, red)
    }

    /// Builds a coloring from raw single-word rows. Callers guarantee
    /// `red[u] ⊆ host[u]` and symmetry.
    pub(crate) fn from_masks(order: usize, host: &[u64], red: &[u64]) -> Self {
        let mut h = SimpleGraph::new(order);
        let mut r = SimpleGraph::new(order);
        for u in 0..order {
            for v in crate::graph::BitIter(host[u] & !crate::graph::low_bits(u + 1)) {
                h.add_edge(u, v);
                if red[u] >> v & 1 == 1 {
                    r.add_edge(u, v);
                }
            }
        }
        TwoColoring { host: h, red: r }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.host.order()
    }

    pub fn host(&self) -> &SimpleGraph {
        &self.host
    }

    pub fn red_graph(&self) -> &SimpleGraph {
        &self.red
    }

    pub fn blue_graph(&self) -> SimpleGraph {
        let mut blue = self.host.clone();
        for (u, v) in self.red.edges() {
            blue.remove_edge(u, v);
        }
        blue
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        if !self.host.has_edge(u, v) {
            None
        } else if self.red.has_edge(u, v) {
            Some(Color::Red)
        } else {
            Some(Color::Blue)
        }
    }

    pub fn is_red(&self, u: usize, v: usize) -> bool {
        self.red.has_edge(u, v)
    }

    pub fn is_blue(&self, u: usize, v: usize) -> bool {
        self.host.has_edge(u, v) && !self.red.has_edge(u, v)
    }

    #[inline]
    pub fn host_mask(&self, u: usize) -> u64 {
        self.host.mask(u)
    }

    #[inline]
    pub fn red_mask(&self, u: usize) -> u64 {
        self.red.mask(u)
    }

    #[inline]
    pub fn blue_mask(&self, u: usize) -> u64 {
        self.host.mask(u) & !self.red.mask(u)
    }

    pub fn red_masks(&self) -> Vec<u64> {
        (0..self.order()).map(|u| self.red_mask(u)).collect()
    }

    pub fn blue_masks(&self) -> Vec<u64> {
        (0..self.order()).map(|u| self.blue_mask(u)).collect()
    }

    pub fn red_degree(&self, u: usize) -> usize {
        self.red_mask(u).count_ones() as usize
    }

    pub fn blue_degree(&self, u: usize) -> usize {
        self.blue_mask(u).count_ones() as usize
    }

    pub fn red_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.red.edges()
    }

    pub fn blue_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.host.edges().filter(|&(u, v)| !self.red.has_edge(u, v))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> TwoColoring {
        TwoColoring {
            host: self.host.permuted(perm),
            red: self.red.permuted(perm),
        }
    }

    /// The coloring restricted to the vertices in `keep`, relabeled
    /// `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> TwoColoring {
        let mut host = SimpleGraph::new(keep.len());
        let mut red = SimpleGraph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.host.has_edge(u, v) {
                    host.add_edge(i, j);
                    if self.red.has_edge(u, v) {
                        red.add_edge(i, j);
                    }
                }
            }
        }
        TwoColoring { host, red }
    }
}
