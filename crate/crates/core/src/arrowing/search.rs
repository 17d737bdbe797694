//! Exhaustive arrowing over all colorings of a host graph.
//!
//! Vertices are added in index order. When vertex `k` joins, its edges to
//! earlier vertices are colored one at a time (red first), in increasing
//! order of the other endpoint, so over the whole run edges are visited in
//! `(max, min)` lexicographic order. After each edge only witnesses through
//! that edge are searched. Once all edges into `k` are colored the partial
//! colorings are merged up to isomorphisms that also preserve each vertex's
//! adjacency to the vertices not yet added, which is exactly the symmetry
//! under which their completions behave alike.

use rayon::prelude::*;
use std::collections::HashSet;

use super::embed::TreeMatcher;
use super::packing;
use crate::canon::labeled_code;
use crate::coloring::TwoColoring;
use crate::config::SearchConfig;
use crate::error::{Error, Result};
use crate::graph::{low_bits, BitIter, SimpleGraph};
use crate::tree::Tree;

/// Result of [`arrows`]: when the host does not arrow, `avoider` holds a
/// coloring with neither a red tree nor a blue `tK_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowsOutcome {
    pub arrows: bool,
    pub avoider: Option<TwoColoring>,
}

pub fn arrows(host: &SimpleGraph, tree: &Tree, t: usize, m: usize, cfg: &SearchConfig) -> Result<ArrowsOutcome> {
    let engine = Engine::new(host, tree, t, m, cfg)?;
    let avoider = engine.first_avoider();
    Ok(ArrowsOutcome {
        arrows: avoider.is_none(),
        avoider,
    })
}

/// One coloring per isomorphism class of colorings of `host` that contain
/// neither a red `tree` nor a blue `tK_m`.
pub fn enumerate_avoiders(
    host: &SimpleGraph,
    tree: &Tree,
    t: usize,
    m: usize,
    cfg: &SearchConfig,
) -> Result<Vec<TwoColoring>> {
    let engine = Engine::new(host, tree, t, m, cfg)?;
    Ok(engine.all_avoiders())
}

struct Engine {
    order: usize,
    host: Vec<u64>,
    matcher: TreeMatcher,
    t: usize,
    m: usize,
    /// Some witness needs no edges at all, so every coloring contains one.
    trivial: bool,
}

/// Colors decided so far; bits only among vertices already added.
#[derive(Clone)]
struct State {
    red: Vec<u64>,
    blue: Vec<u64>,
}

impl Engine {
    fn new(host: &SimpleGraph, tree: &Tree, t: usize, m: usize, cfg: &SearchConfig) -> Result<Engine> {
        if t == 0 || m == 0 {
            return Err(Error::param("t and m must be positive"));
        }
        if host.order() > crate::coloring::MAX_COLORING_ORDER {
            return Err(Error::param("host has more than 64 vertices"));
        }
        let edges = host.edge_count();
        if edges > cfg.max_edges {
            return Err(Error::ResourceGuard {
                what: "host edges for exhaustive arrowing",
                requested: edges,
                limit: cfg.max_edges,
                detail: None,
            });
        }
        let order = host.order();
        let trivial = (tree.order() == 1 && order >= 1) || (m == 1 && order >= t);
        Ok(Engine {
            order,
            host: (0..order).map(|u| host.mask(u)).collect(),
            matcher: TreeMatcher::new(tree),
            t,
            m,
            trivial,
        })
    }

    fn empty_state(&self) -> State {
        State {
            red: vec![0; self.order],
            blue: vec![0; self.order],
        }
    }

    fn to_coloring(&self, s: &State) -> TwoColoring {
        TwoColoring::from_masks(self.order, &self.host, &s.red)
    }

    /// Runs levels `1..order-1`, merging isomorphic partial colorings.
    /// Returns `None` when some level has no surviving coloring.
    fn states_before_last(&self) -> Option<Vec<State>> {
        let mut level = vec![self.empty_state()];
        for k in 1..self.order.saturating_sub(1) {
            let children: Vec<State> = level
                .par_iter()
                .flat_map_iter(|s| self.extensions(s, k, usize::MAX))
                .collect();
            level = self.dedup(children, k);
            if level.is_empty() {
                return None;
            }
        }
        Some(level)
    }

    fn first_avoider(&self) -> Option<TwoColoring> {
        if self.trivial {
            return None;
        }
        if self.order <= 1 {
            return Some(self.to_coloring(&self.empty_state()));
        }
        let level = self.states_before_last()?;
        let k = self.order - 1;
        level
            .par_iter()
            .find_map_first(|s| self.extensions(s, k, 1).into_iter().next())
            .map(|s| self.to_coloring(&s))
    }

    fn all_avoiders(&self) -> Vec<TwoColoring> {
        if self.trivial {
            return Vec::new();
        }
        if self.order <= 1 {
            return vec![self.to_coloring(&self.empty_state())];
        }
        let Some(level) = self.states_before_last() else {
            return Vec::new();
        };
        let k = self.order - 1;
        let children: Vec<State> = level
            .par_iter()
            .flat_map_iter(|s| self.extensions(s, k, usize::MAX))
            .collect();
        self.dedup(children, k)
            .iter()
            .map(|s| self.to_coloring(s))
            .collect()
    }

    /// Keeps the first state of each class; classes respect adjacency to
    /// the vertices after `k`.
    fn dedup(&self, states: Vec<State>, k: usize) -> Vec<State> {
        let present = low_bits(k + 1);
        let host: Vec<u64> = self.host[..=k].iter().map(|h| h & present).collect();
        let labels: Vec<u64> = self.host[..=k].iter().map(|h| h & !present).collect();
        let codes: Vec<_> = states
            .par_iter()
            .map(|s| labeled_code(k + 1, &host, &s.red[..=k], &labels))
            .collect();
        let mut seen = HashSet::with_capacity(codes.len());
        states
            .into_iter()
            .zip(codes)
            .filter_map(|(s, code)| seen.insert(code).then_some(s))
            .collect()
    }

    /// Colorings of the edges from vertex `k` back to earlier vertices that
    /// create no witness, at most `limit` of them.
    fn extensions(&self, s: &State, k: usize, limit: usize) -> Vec<State> {
        let back: Vec<usize> = BitIter(self.host[k] & low_bits(k)).collect();
        let mut out = Vec::new();
        let mut cur = s.clone();
        self.color_edges(&mut cur, k, &back, 0, limit, &mut out);
        out
    }

    fn color_edges(&self, s: &mut State, k: usize, back: &[usize], i: usize, limit: usize, out: &mut Vec<State>) {
        if out.len() >= limit {
            return;
        }
        let Some(&j) = back.get(i) else {
            out.push(s.clone());
            return;
        };
        let n = k + 1;

        s.red[j] |= 1 << k;
        s.red[k] |= 1 << j;
        if !self.matcher.exists_through(&s.red, n, j, k) {
            self.color_edges(s, k, back, i + 1, limit, out);
        }
        s.red[j] &= !(1 << k);
        s.red[k] &= !(1 << j);
        if out.len() >= limit {
            return;
        }

        s.blue[j] |= 1 << k;
        s.blue[k] |= 1 << j;
        if !packing::exists_through(&s.blue, n, self.t, self.m, j, k) {
            self.color_edges(s, k, back, i + 1, limit, out);
        }
        s.blue[j] &= !(1 << k);
        s.blue[k] &= !(1 << j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowing::avoid_check;
    use crate::graph::complete_host;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    fn p(n: usize) -> Tree {
        Tree::path(n).unwrap()
    }

    #[test]
    fn k4_arrows_p3_versus_2k2() {
        assert!(arrows(&complete_host(4), &p(3), 2, 2, &cfg()).unwrap().arrows);
    }

    #[test]
    fn k3_avoider_has_one_red_edge() {
        let out = arrows(&complete_host(3), &p(3), 2, 2, &cfg()).unwrap();
        assert!(!out.arrows);
        let avoider = out.avoider.unwrap();
        assert_eq!(avoider.red_edges().count(), 1);
        assert_eq!(avoider.blue_edges().count(), 2);
        assert!(avoid_check(&avoider, &p(3), 2, 2).avoids());
    }

    #[test]
    fn chvatal_p3_k3() {
        assert!(arrows(&complete_host(5), &p(3), 1, 3, &cfg()).unwrap().arrows);
        let out = arrows(&complete_host(4), &p(3), 1, 3, &cfg()).unwrap();
        assert!(!out.arrows);
        assert!(avoid_check(&out.avoider.unwrap(), &p(3), 1, 3).avoids());
    }

    #[test]
    fn avoider_counts() {
        assert_eq!(enumerate_avoiders(&complete_host(2), &p(3), 1, 2, &cfg()).unwrap().len(), 1);
        assert_eq!(enumerate_avoiders(&complete_host(3), &p(3), 2, 2, &cfg()).unwrap().len(), 2);
        assert!(enumerate_avoiders(&complete_host(4), &p(3), 2, 2, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn degenerate_targets() {
        // A single-vertex tree is red in every coloring of a nonempty host.
        assert!(arrows(&complete_host(2), &p(1), 5, 5, &cfg()).unwrap().arrows);
        // tK_1 needs only t vertices.
        assert!(arrows(&complete_host(3), &p(5), 3, 1, &cfg()).unwrap().arrows);
        assert!(!arrows(&complete_host(2), &p(5), 3, 1, &cfg()).unwrap().arrows);
        // The empty host avoids everything non-trivial.
        let out = arrows(&SimpleGraph::new(0), &p(2), 1, 2, &cfg()).unwrap();
        assert!(!out.arrows);
        assert_eq!(out.avoider.unwrap().order(), 0);
    }

    #[test]
    fn edge_cap() {
        let err = arrows(&complete_host(9), &p(3), 1, 3, &cfg()).unwrap_err();
        assert!(matches!(err, Error::ResourceGuard { requested: 36, limit: 28, .. }));
        assert!(enumerate_avoiders(&complete_host(9), &p(3), 1, 3, &cfg()).is_err());
    }

    #[test]
    fn isolated_and_sparse_hosts() {
        // Host with an isolated vertex in the middle of the order.
        let host = SimpleGraph::from_edges(4, [(0, 1), (0, 3), (1, 3)]).unwrap();
        assert!(!arrows(&host, &p(3), 1, 3, &cfg()).unwrap().arrows);
        let host = SimpleGraph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert!(arrows(&host, &p(2), 2, 2, &cfg()).unwrap().arrows);
    }
}
