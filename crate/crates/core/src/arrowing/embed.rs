//! Backtracking search for red copies of a tree.

use serde::Serialize;

use crate::coloring::TwoColoring;
use crate::graph::{low_bits, BitIter};
use crate::tree::Tree;

const NONE: usize = usize::MAX;

/// Injective map from tree vertices to coloring vertices: `map[x]` is the
/// image of tree vertex `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RedTreeEmbedding {
    #[serde(rename = "red_embedding")]
    pub map: Vec<usize>,
}

impl RedTreeEmbedding {
    /// Re-checks injectivity and that every tree edge lands on a red edge.
    pub fn validate(&self, c: &TwoColoring, tree: &Tree) -> bool {
        if self.map.len() != tree.order() || self.map.iter().any(|&v| v >= c.order()) {
            return false;
        }
        let mut seen = vec![false; c.order()];
        for &v in &self.map {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        tree.edges().all(|(x, y)| c.is_red(self.map[x], self.map[y]))
    }
}

pub fn find_red_tree(c: &TwoColoring, tree: &Tree) -> Option<RedTreeEmbedding> {
    TreeMatcher::new(tree)
        .find(&c.red_masks(), c.order())
        .map(|map| RedTreeEmbedding { map })
}

/// Tree vertices in embedding order with parent links by position.
#[derive(Debug, Clone)]
struct Plan {
    verts: Vec<usize>,
    parent: Vec<usize>,
    need: Vec<u32>,
    kids: Vec<u32>,
}

impl Plan {
    /// DFS preorder from `root`; `first` (a neighbour of the root) is
    /// visited first, remaining children by decreasing subtree size.
    fn new(tree: &Tree, root: usize, first: Option<usize>) -> Plan {
        let n = tree.order();
        let mut size = vec![1usize; n];
        let mut par = vec![NONE; n];
        let mut order = vec![root];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for y in tree.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    par[y] = x;
                    order.push(y);
                }
            }
        }
        for &x in order.iter().rev() {
            if par[x] != NONE {
                size[par[x]] += size[x];
            }
        }

        let mut plan = Plan {
            verts: Vec::with_capacity(n),
            parent: Vec::with_capacity(n),
            need: Vec::with_capacity(n),
            kids: Vec::with_capacity(n),
        };
        let mut pos_of = vec![NONE; n];
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            pos_of[x] = plan.verts.len();
            plan.verts.push(x);
            plan.parent.push(if par[x] == NONE { NONE } else { pos_of[par[x]] });
            plan.need.push(tree.degree(x) as u32);
            let mut children: Vec<usize> = tree.neighbors(x).filter(|&y| y != par[x]).collect();
            plan.kids.push(children.len() as u32);
            children.sort_by_key(|&y| {
                let pinned = x == root && Some(y) == first;
                (!pinned, std::cmp::Reverse(size[y]), y)
            });
            stack.extend(children.into_iter().rev());
        }
        plan
    }

    fn embed(&self, red: &[u64], order: usize, pins: [Option<usize>; 2]) -> Option<Vec<usize>> {
        let n = self.verts.len();
        if n > order {
            return None;
        }
        let maxneed = self.need.iter().copied().max().unwrap_or(0) as usize;
        // deg_ok[d]: host vertices with red degree at least d.
        let mut deg_ok = vec![0u64; maxneed + 1];
        for (v, row) in red.iter().enumerate().take(order) {
            let d = (row.count_ones() as usize).min(maxneed);
            for slot in deg_ok.iter_mut().take(d + 1) {
                *slot |= 1 << v;
            }
        }
        let mut image = vec![0usize; n];
        if self.extend(0, 0, red, low_bits(order), &deg_ok, &pins, &mut image) {
            let mut map = vec![0; n];
            for (pos, &x) in self.verts.iter().enumerate() {
                map[x] = image[pos];
            }
            Some(map)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        pos: usize,
        used: u64,
        red: &[u64],
        all: u64,
        deg_ok: &[u64],
        pins: &[Option<usize>; 2],
        image: &mut [usize],
    ) -> bool {
        if pos == self.verts.len() {
            return true;
        }
        let mut cand = if self.parent[pos] == NONE {
            all
        } else {
            red[image[self.parent[pos]]]
        };
        cand &= !used & deg_ok[self.need[pos] as usize];
        if let Some(Some(pin)) = pins.get(pos) {
            cand &= 1 << pin;
        }
        for v in BitIter(cand) {
            let used = used | 1 << v;
            if (red[v] & !used).count_ones() < self.kids[pos] {
                continue;
            }
            image[pos] = v;
            if self.extend(pos + 1, used, red, all, deg_ok, pins, image) {
                return true;
            }
        }
        false
    }
}

/// Precomputed embedding plans for one tree: a general plan rooted at a
/// maximum-degree vertex, and one plan per directed tree edge for searches
/// that must use a given host edge.
#[derive(Debug, Clone)]
pub(crate) struct TreeMatcher {
    main: Plan,
    through: Vec<Plan>,
}

impl TreeMatcher {
    pub(crate) fn new(tree: &Tree) -> TreeMatcher {
        let root = (0..tree.order())
            .max_by_key(|&x| (tree.degree(x), std::cmp::Reverse(x)))
            .unwrap_or(0);
        let mut through = Vec::new();
        for (a, b) in tree.edges() {
            through.push(Plan::new(tree, a, Some(b)));
            through.push(Plan::new(tree, b, Some(a)));
        }
        TreeMatcher {
            main: Plan::new(tree, root, None),
            through,
        }
    }

    pub(crate) fn find(&self, red: &[u64], order: usize) -> Option<Vec<usize>> {
        self.main.embed(red, order, [None, None])
    }

    /// Whether some red copy maps a tree edge onto the host edge `uv`.
    pub(crate) fn exists_through(&self, red: &[u64], order: usize, u: usize, v: usize) -> bool {
        self.through
            .iter()
            .any(|plan| plan.embed(red, order, [Some(u), Some(v)]).is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_critical, FamilyParams};
    use crate::graph::{complete_host, SimpleGraph};
    use crate::tree::enumerate_trees;

    #[test]
    fn red_k4_holds_p4() {
        let c = TwoColoring::all_red(complete_host(4)).unwrap();
        let p4 = Tree::path(4).unwrap();
        let e = find_red_tree(&c, &p4).unwrap();
        assert!(e.validate(&c, &p4));
    }

    #[test]
    fn blue_k5_has_no_red_trees() {
        let c = TwoColoring::all_blue(complete_host(5)).unwrap();
        for n in 2..=5 {
            for t in enumerate_trees(n).unwrap() {
                assert!(find_red_tree(&c, &t).is_none());
            }
        }
        let single = Tree::path(1).unwrap();
        assert!(find_red_tree(&c, &single).is_some());
    }

    #[test]
    fn critical_member_avoids_all_four_vertex_trees() {
        let p = FamilyParams::new(4, 2, 2).unwrap();
        let c = build_critical(p, &SimpleGraph::new(1)).unwrap();
        for t in enumerate_trees(4).unwrap() {
            assert!(find_red_tree(&c, &t).is_none());
        }
    }

    #[test]
    fn through_edge_requires_the_edge() {
        // Red path 0-1-2-3 plus isolated red edge 4-5.
        let c = TwoColoring::new(complete_host(6), [(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
        let m = TreeMatcher::new(&Tree::path(3).unwrap());
        let red = c.red_masks();
        assert!(m.exists_through(&red, 6, 0, 1));
        assert!(m.exists_through(&red, 6, 2, 3));
        assert!(!m.exists_through(&red, 6, 4, 5));
    }

    #[test]
    fn embedding_respects_degrees() {
        // Red K_{1,3} centred at 0 embeds S4 only with the centre at 0.
        let c = TwoColoring::new(complete_host(5), [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let s4 = Tree::star(4).unwrap();
        let e = find_red_tree(&c, &s4).unwrap();
        assert_eq!(e.map[0], 0);
        assert!(e.validate(&c, &s4));
        assert!(find_red_tree(&c, &Tree::star(5).unwrap()).is_none());
    }
}
