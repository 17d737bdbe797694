//! Simple undirected graphs stored as bit-packed adjacency rows.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A simple undirected graph on vertices `0..order`.
///
/// Each vertex owns a row of `stride` 64-bit words; bit `v` of row `u` is set
/// iff `uv` is an edge. Rows are kept symmetric and loop-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    order: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    /// The edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Self {
        let stride = order.div_ceil(WORD).max(1);
        SimpleGraph {
            order,
            stride,
            rows: vec![0; stride * order],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::new(order);
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::param(format!(
                    "edge {u} {v} out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::param(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::param(format!("duplicate edge {u} {v}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// `K_order`.
    pub fn complete(order: usize) -> Self {
        let mut g = SimpleGraph::new(order);
        for u in 0..order {
            for v in (u + 1)..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order && v < self.order);
        self.rows[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.rows[u * self.stride + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.stride + u / WORD] |= 1 << (u % WORD);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.stride + u / WORD] &= !(1 << (u % WORD));
    }

    /// The adjacency row of `u` as packed words.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.stride..(u + 1) * self.stride]
    }

    /// The adjacency row of `u` as a single word. Only valid for order ≤ 64.
    #[inline]
    pub fn mask(&self, u: usize) -> u64 {
        debug_assert!(self.order <= WORD);
        self.rows[u * self.stride]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            BitIter(w).map(move |b| wi * WORD + b)
        })
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex set).
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.order == other.order
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        self.component_of(0).len() == self.order
    }

    /// Vertices reachable from `start`, in BFS order.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut queue = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push(v);
                }
            }
        }
        queue
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            let mut comp = self.component_of(s);
            for &v in &comp {
                seen[v] = true;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The graph obtained by sending vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.order);
        let mut g = SimpleGraph::new(self.order);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Whether `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Whether no two of `vertices` are adjacent.
    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterator over set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// `K_n`.
pub fn complete_host(n: usize) -> SimpleGraph {
    SimpleGraph::complete(n)
}

/// `K_n` minus a star at the last vertex `n - 1`, which keeps exactly the
/// first `k` vertices as neighbours.
pub fn star_deleted_host(n: usize, k: usize) -> Result<SimpleGraph> {
    if n == 0 {
        return Err(Error::param("star-deleted host needs at least one vertex"));
    }
    if k > n - 1 {
        return Err(Error::param(format!(
            "star-deleted host: k = {k} exceeds n - 1 = {}",
            n - 1
        )));
    }
    let mut g = SimpleGraph::complete(n);
    let v = n - 1;
    for u in k..v {
        g.remove_edge(u, v);
    }
    Ok(g)
}

/// Mask of the lowest `n` bits.
#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= WORD {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_edge_counts() {
        assert_eq!(complete_host(1).edge_count(), 0);
        assert_eq!(complete_host(4).edge_count(), 6);
        assert_eq!(complete_host(10).edge_count(), 45);
    }

    #[test]
    fn star_deleted_examples() {
        assert_eq!(star_deleted_host(4, 3).unwrap(), complete_host(4));

        let g = star_deleted_host(4, 0).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(3), 0);

        let g = star_deleted_host(4, 2).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.degree(3), 2);
        assert!(g.has_edge(0, 3) && g.has_edge(1, 3) && !g.has_edge(2, 3));

        assert!(matches!(star_deleted_host(4, 4), Err(Error::Parameter(_))));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(SimpleGraph::from_edges(3, [(0, 3)]).is_err());
        assert!(SimpleGraph::from_edges(3, [(1, 1)]).is_err());
        assert!(SimpleGraph::from_edges(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn wide_rows() {
        let g = SimpleGraph::from_edges(100, (1..100).map(|v| (0, v))).unwrap();
        assert_eq!(g.degree(0), 99);
        assert!(g.has_edge(99, 0));
        assert_eq!(g.neighbors(0).count(), 99);
        assert!(g.is_connected());
        assert_eq!(g.edges().count(), 99);
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = SimpleGraph::from_edges(5, [(0, 4), (2, 1), (3, 0)]).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (0, 4), (1, 2)]);
    }
}
