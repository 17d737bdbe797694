//! Exact chromatic number and chromatic surplus for small graphs.

use serde::Serialize;

use crate::config::MAX_CHROMATIC_ORDER;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// `chi` is the chromatic number; `surplus` the smallest color class
/// achievable over all proper `chi`-colorings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChromaticProfile {
    pub chi: usize,
    pub surplus: usize,
}

pub fn chromatic_profile(g: &SimpleGraph) -> Result<ChromaticProfile> {
    let n = g.order();
    if n == 0 {
        return Err(Error::param("chromatic profile of the empty graph is undefined"));
    }
    if n > MAX_CHROMATIC_ORDER {
        return Err(Error::ResourceGuard {
            what: "graph order for chromatic profile",
            requested: n,
            limit: MAX_CHROMATIC_ORDER,
            detail: None,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let colorer = Colorer { g, order };
    let chi = (1..=n).find(|&k| colorer.colorable(k)).expect("n colors always suffice");
    let surplus = colorer.min_class(chi);
    Ok(ChromaticProfile { chi, surplus })
}

/// `t` disjoint copies of `K_m`.
pub fn disjoint_cliques(t: usize, m: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for c in 0..t {
        let base = c * m;
        for i in 0..m {
            for j in i + 1..m {
                edges.push((base + i, base + j));
            }
        }
    }
    SimpleGraph::from_edges(t * m, edges).expect("disjoint cliques are simple")
}

struct Colorer<'a> {
    g: &'a SimpleGraph,
    order: Vec<usize>,
}

impl Colorer<'_> {
    fn colorable(&self, k: usize) -> bool {
        let mut color = vec![usize::MAX; self.g.order()];
        self.assign(0, k, 0, &mut color, &mut |_| true)
    }

    /// Smallest class size over all proper `k`-colorings.
    fn min_class(&self, k: usize) -> usize {
        let mut color = vec![usize::MAX; self.g.order()];
        let mut best = usize::MAX;
        self.assign(0, k, 0, &mut color, &mut |color: &[usize]| {
            let mut sizes = vec![0usize; k];
            for &c in color {
                sizes[c] += 1;
            }
            best = best.min(sizes.into_iter().min().unwrap());
            best == 1
        });
        best
    }

    /// Colors vertices in `self.order`, opening new colors in first-use
    /// order. `leaf` returns true to stop the enumeration.
    fn assign(
        &self,
        i: usize,
        k: usize,
        used: usize,
        color: &mut [usize],
        leaf: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == self.order.len() {
            return used == k && leaf(color);
        }
        // Colors still unused must be placed on the remaining vertices.
        if k - used > self.order.len() - i {
            return false;
        }
        let v = self.order[i];
        for c in 0..k.min(used + 1) {
            if self.g.neighbors(v).any(|w| color[w] == c) {
                continue;
            }
            color[v] = c;
            let stop = self.assign(i + 1, k, used.max(c + 1), color, leaf);
            color[v] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }
}
