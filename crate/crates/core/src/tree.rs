//! Trees and their enumeration up to isomorphism.

use std::collections::BTreeMap;
use std::fmt;

use crate::config::DEFAULT_MAX_TREE_ORDER;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A connected acyclic simple graph with at least one vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: SimpleGraph,
}

impl Tree {
    pub fn new(graph: SimpleGraph) -> Result<Tree> {
        if graph.order() == 0 {
            return Err(Error::param("a tree needs at least one vertex"));
        }
        if graph.edge_count() != graph.order() - 1 || !graph.is_connected() {
            return Err(Error::param(format!(
                "graph on {} vertices with {} edges is not a tree",
                graph.order(),
                graph.edge_count()
            )));
        }
        Ok(Tree { graph })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Tree>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Tree::new(SimpleGraph::from_edges(order, edges)?)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Tree> {
        Tree::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// The star `K_{1,n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Result<Tree> {
        Tree::from_edges(n, (1..n).map(|v| (0, v)))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph.neighbors(v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.edges()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The one or two central vertices, found by repeatedly stripping leaves.
    pub fn centers(&self) -> Vec<usize> {
        let n = self.order();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                deg[leaf] = 0;
                for w in self.neighbors(leaf) {
                    if deg[w] > 0 {
                        deg[w] -= 1;
                        if deg[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// A parenthesis string equal for two trees iff they are isomorphic.
    pub fn canonical_string(&self) -> String {
        self.centers()
            .into_iter()
            .map(|c| self.rooted_code(c, usize::MAX))
            .min()
            .expect("a tree has a center")
    }

    fn rooted_code(&self, v: usize, parent: usize) -> String {
        let mut children: Vec<String> = self
            .neighbors(v)
            .filter(|&w| w != parent)
            .map(|w| self.rooted_code(w, v))
            .collect();
        children.sort_unstable();
        let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        s.push('(');
        for c in children {
            s.push_str(&c);
        }
        s.push(')');
        s
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.order() == other.order() && self.canonical_string() == other.canonical_string()
    }

    /// Relabels the tree in preorder from its canonical root, visiting
    /// children in canonical order.
    fn normalized(&self) -> Tree {
        let code = self.canonical_string();
        let root = self
            .centers()
            .into_iter()
            .find(|&c| self.rooted_code(c, usize::MAX) == code)
            .unwrap();
        let mut label = vec![usize::MAX; self.order()];
        let mut edges = Vec::with_capacity(self.order() - 1);
        let mut next = 0;
        self.preorder(root, usize::MAX, &mut label, &mut next, &mut edges);
        Tree::from_edges(self.order(), edges).expect("relabeling preserves trees")
    }

    fn preorder(
        &self,
        v: usize,
        parent: usize,
        label: &mut [usize],
        next: &mut usize,
        edges: &mut Vec<(usize, usize)>,
    ) {
        label[v] = *next;
        *next += 1;
        if parent != usize::MAX {
            edges.push((label[parent], label[v]));
        }
        let mut children: Vec<(String, usize)> = self
            .neighbors(v)
            .filter(|&w| w != parent)
            .map(|w| (self.rooted_code(w, v), w))
            .collect();
        children.sort();
        for (_, w) in children {
            self.preorder(w, v, label, next, edges);
        }
    }

    /// `P<n>` or `S<n>` when the tree is a path or a star, else `None`.
    pub fn shorthand(&self) -> Option<String> {
        let n = self.order();
        let maxdeg = self.graph.max_degree();
        if maxdeg <= 2 {
            Some(format!("P{n}"))
        } else if maxdeg == n - 1 {
            Some(format!("S{n}"))
        } else {
            None
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// All trees on `n` vertices up to isomorphism, using the default order cap.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    enumerate_trees_capped(n, DEFAULT_MAX_TREE_ORDER)
}

/// All trees on `n` vertices up to isomorphism, one per class, ordered by
/// canonical string (the path comes first).
pub fn enumerate_trees_capped(n: usize, cap: usize) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::param("tree order must be positive"));
    }
    if n > cap {
        return Err(Error::ResourceGuard {
            what: "tree enumeration order",
            requested: n,
            limit: cap,
            detail: None,
        });
    }
    let mut level: BTreeMap<String, Tree> = BTreeMap::new();
    let single = Tree::new(SimpleGraph::new(1))?;
    level.insert(single.canonical_string(), single);
    for k in 2..=n {
        let mut next: BTreeMap<String, Tree> = BTreeMap::new();
        for tree in level.values() {
            for v in 0..k - 1 {
                let edges = tree.edges().chain(std::iter::once((v, k - 1)));
                let grown = Tree::from_edges(k, edges)?;
                next.entry(grown.canonical_string()).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level.values().map(Tree::normalized).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // OEIS A000055 for n = 1..=12.
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_trees(i + 1).unwrap().len(), count, "n = {}", i + 1);
        }
    }

    #[test]
    fn four_vertices_are_path_and_star() {
        let trees = enumerate_trees(4).unwrap();
        assert!(trees[0].is_isomorphic(&Tree::path(4).unwrap()));
        assert!(trees[1].is_isomorphic(&Tree::star(4).unwrap()));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_trees(13), Err(Error::ResourceGuard { .. })));
        assert_eq!(enumerate_trees_capped(13, 13).unwrap().len(), 1301);
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(enumerate_trees(8).unwrap(), enumerate_trees(8).unwrap());
    }

    #[test]
    fn rejects_non_trees() {
        assert!(Tree::from_edges(3, [(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(Tree::from_edges(4, [(0, 1), (2, 3)]).is_err());
    }

    #[test]
    fn centers() {
        assert_eq!(Tree::path(5).unwrap().centers(), vec![2]);
        assert_eq!(Tree::path(4).unwrap().centers(), vec![1, 2]);
        assert_eq!(Tree::star(6).unwrap().centers(), vec![0]);
    }

    #[test]
    fn shorthands() {
        assert_eq!(Tree::path(5).unwrap().shorthand().as_deref(), Some("P5"));
        assert_eq!(Tree::star(5).unwrap().shorthand().as_deref(), Some("S5"));
        let spider = Tree::from_edges(5, [(0, 1), (1, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(spider.shorthand(), None);
    }
}
