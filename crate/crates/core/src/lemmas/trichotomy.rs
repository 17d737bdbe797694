//! Suspended paths, independent end-edges and talons in trees.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "witness", rename_all = "kebab-case")]
pub enum TreeStructure {
    /// Vertices in path order; every internal one has degree two.
    SuspendedPath(Vec<usize>),
    /// Pairwise disjoint `(leaf, neighbour)` edges.
    EndEdges(Vec<(usize, usize)>),
    /// A centre and leaves adjacent to it.
    Talon { center: usize, leaves: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeStructureReport {
    #[serde(flatten)]
    pub structure: TreeStructure,
    /// `floor(n / (4 alpha beta))`.
    pub talon_bound: usize,
    /// Set when the talon branch was reached with a zero bound.
    pub vacuous: bool,
}

impl TreeStructure {
    pub fn validate(&self, tree: &Tree) -> bool {
        let n = tree.order();
        let leaf = |v: usize| v < n && tree.degree(v) == 1;
        match self {
            TreeStructure::SuspendedPath(p) => {
                let mut seen = vec![false; n];
                p.len() >= 2
                    && p.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
                    && p.windows(2).all(|w| tree.graph().has_edge(w[0], w[1]))
                    && p[1..p.len() - 1].iter().all(|&v| tree.degree(v) == 2)
            }
            TreeStructure::EndEdges(edges) => {
                let mut seen = vec![false; n];
                edges.iter().all(|&(u, v)| {
                    u < n
                        && v < n
                        && tree.graph().has_edge(u, v)
                        && (leaf(u) || leaf(v))
                        && !std::mem::replace(&mut seen[u], true)
                        && !std::mem::replace(&mut seen[v], true)
                })
            }
            TreeStructure::Talon { center, leaves } => {
                let mut seen = vec![false; n];
                *center < n
                    && leaves.iter().all(|&v| {
                        leaf(v) && v != *center && tree.graph().has_edge(*center, v)
                            && !std::mem::replace(&mut seen[v], true)
                    })
            }
        }
    }
}

/// A suspended path on `alpha` vertices, else `beta` independent
/// end-edges, else the largest talon.
pub fn tree_trichotomy(tree: &Tree, alpha: usize, beta: usize) -> Result<TreeStructureReport> {
    if alpha < 3 || beta == 0 {
        return Err(Error::param("need alpha >= 3 and beta >= 1"));
    }
    let n = tree.order();
    if n < 2 {
        return Err(Error::param("the tree needs at least two vertices"));
    }
    let talon_bound = n / (4 * alpha * beta);
    let report = |structure, vacuous| TreeStructureReport {
        structure,
        talon_bound,
        vacuous,
    };

    let path = longest_suspended_path(tree);
    if path.len() >= alpha {
        return Ok(report(TreeStructure::SuspendedPath(path), false));
    }
    let edges = independent_end_edges(tree);
    if edges.len() >= beta {
        return Ok(report(TreeStructure::EndEdges(edges[..beta].to_vec()), false));
    }
    let (center, leaves) = largest_talon(tree);
    if leaves.len() < talon_bound.max(1) {
        return Err(Error::Counterexample(format!(
            "tree has no suspended path on {alpha} vertices, no {beta} independent end-edges \
             and no talon with {talon_bound} edges"
        )));
    }
    Ok(report(TreeStructure::Talon { center, leaves }, talon_bound == 0))
}

/// Maximal runs of degree-two vertices, each extended by its two end
/// neighbours; a single edge when there are none.
pub fn longest_suspended_path(tree: &Tree) -> Vec<usize> {
    let n = tree.order();
    let deg2 = |v: usize| tree.degree(v) == 2;
    let mut best: Vec<usize> = tree.edges().next().map(|(u, v)| vec![u, v]).unwrap_or_default();
    let mut done = vec![false; n];
    for start in 0..n {
        if !deg2(start) || done[start] {
            continue;
        }
        // Walk both directions to the first vertex of other degree.
        let nb: Vec<usize> = tree.neighbors(start).collect();
        let mut halves = Vec::new();
        for &first in &nb {
            let mut half = Vec::new();
            let (mut prev, mut cur) = (start, first);
            loop {
                half.push(cur);
                if !deg2(cur) {
                    break;
                }
                done[cur] = true;
                let next = tree.neighbors(cur).find(|&w| w != prev).unwrap();
                (prev, cur) = (cur, next);
            }
            halves.push(half);
        }
        done[start] = true;
        let mut path: Vec<usize> = halves[0].iter().rev().copied().collect();
        path.push(start);
        path.extend(&halves[1]);
        if path.len() > best.len() {
            best = path;
        }
    }
    best
}

/// Greedy by increasing leaf index; one end-edge per support vertex.
pub fn independent_end_edges(tree: &Tree) -> Vec<(usize, usize)> {
    let mut used = vec![false; tree.order()];
    let mut out = Vec::new();
    for leaf in tree.leaves() {
        let Some(nb) = tree.neighbors(leaf).next() else {
            continue;
        };
        if !used[leaf] && !used[nb] {
            used[leaf] = true;
            used[nb] = true;
            out.push((leaf, nb));
        }
    }
    out
}

/// Centre with the most leaf neighbours, smallest index on ties.
pub fn largest_talon(tree: &Tree) -> (usize, Vec<usize>) {
    (0..tree.order())
        .map(|c| (c, tree.neighbors(c).filter(|&v| tree.degree(v) == 1).collect::<Vec<_>>()))
        .fold((0, Vec::new()), |best, cand| if cand.1.len() > best.1.len() { cand } else { best })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn long_path() {
        let p = Tree::path(12).unwrap();
        let r = tree_trichotomy(&p, 5, 3).unwrap();
        assert!(matches!(&r.structure, TreeStructure::SuspendedPath(v) if v.len() == 12));
        assert!(r.structure.validate(&p));
    }

    #[test]
    fn big_star() {
        let s = Tree::star(100).unwrap();
        let r = tree_trichotomy(&s, 4, 3).unwrap();
        assert_eq!(r.talon_bound, 2);
        assert!(!r.vacuous);
        match &r.structure {
            TreeStructure::Talon { center, leaves } => assert_eq!((*center, leaves.len()), (0, 99)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn spider() {
        // Three legs of length two around vertex 0.
        let t = Tree::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let r = tree_trichotomy(&t, 4, 3).unwrap();
        assert_eq!(r.structure, TreeStructure::EndEdges(vec![(2, 1), (4, 3), (6, 5)]));
        assert!(r.structure.validate(&t));
    }

    #[test]
    fn vacuous_talon_and_errors() {
        let s = Tree::star(5).unwrap();
        let r = tree_trichotomy(&s, 4, 3).unwrap();
        assert!(r.vacuous && r.talon_bound == 0);
        assert!(tree_trichotomy(&s, 2, 3).is_err());
        assert!(tree_trichotomy(&s, 3, 0).is_err());
        assert!(tree_trichotomy(&Tree::path(1).unwrap(), 3, 1).is_err());
    }

    #[test]
    fn json_shape() {
        let r = tree_trichotomy(&Tree::path(5).unwrap(), 3, 1).unwrap();
        let v = serde_json::to_value(r).unwrap();
        assert_eq!(v["kind"], "suspended-path");
        assert_eq!(v["witness"].as_array().unwrap().len(), 5);
        assert_eq!(v["vacuous"], false);
    }
}
