//! Disjoint blue cliques: size-`m` clique enumeration feeding a packing
//! backtracker.

use serde::Serialize;

use crate::coloring::TwoColoring;
use crate::graph::{low_bits, BitIter};

/// `t` pairwise-disjoint vertex sets, each a blue clique on `m` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlueCliquePacking {
    #[serde(rename = "blue_packing")]
    pub cliques: Vec<Vec<usize>>,
}

impl BlueCliquePacking {
    pub fn validate(&self, c: &TwoColoring, t: usize, m: usize) -> bool {
        if self.cliques.len() != t {
            return false;
        }
        let mut used = vec![false; c.order()];
        for clique in &self.cliques {
            if clique.len() != m || clique.iter().any(|&v| v >= c.order()) {
                return false;
            }
            for &v in clique {
                if std::mem::replace(&mut used[v], true) {
                    return false;
                }
            }
            for (i, &u) in clique.iter().enumerate() {
                if clique[i + 1..].iter().any(|&v| !c.is_blue(u, v)) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn find_blue_packing(c: &TwoColoring, t: usize, m: usize) -> Option<BlueCliquePacking> {
    let blue = c.blue_masks();
    packing(&blue, c.order(), t, m, 0).map(|masks| BlueCliquePacking {
        cliques: masks.into_iter().map(|k| BitIter(k).collect()).collect(),
    })
}

/// All `m`-cliques of `blue` avoiding `forbidden`, as vertex masks, ordered
/// lexicographically by their sorted vertex lists.
pub(crate) fn cliques(blue: &[u64], order: usize, m: usize, forbidden: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if m == 0 {
        out.push(0);
        return out;
    }
    grow(blue, 0, low_bits(order) & !forbidden, m, &mut out);
    out
}

fn grow(blue: &[u64], clique: u64, cand: u64, need: usize, out: &mut Vec<u64>) {
    if need == 0 {
        out.push(clique);
        return;
    }
    if (cand.count_ones() as usize) < need {
        return;
    }
    for v in BitIter(cand) {
        let later = cand & !low_bits(v + 1);
        grow(blue, clique | 1 << v, later & blue[v], need - 1, out);
    }
}

/// `t` disjoint blue `m`-cliques avoiding `forbidden`, if any.
pub(crate) fn packing(blue: &[u64], order: usize, t: usize, m: usize, forbidden: u64) -> Option<Vec<u64>> {
    if t == 0 {
        return Some(Vec::new());
    }
    let free = (low_bits(order) & !forbidden).count_ones() as usize;
    if t * m > free {
        return None;
    }
    let all = cliques(blue, order, m, forbidden);
    let mut chosen = Vec::with_capacity(t);
    if pack(&all, 0, forbidden, low_bits(order), t, m, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn pack(all: &[u64], start: usize, used: u64, universe: u64, left: usize, m: usize, chosen: &mut Vec<u64>) -> bool {
    if left == 0 {
        return true;
    }
    if ((universe & !used).count_ones() as usize) < left * m {
        return false;
    }
    for i in start..all.len() {
        if all[i] & used != 0 {
            continue;
        }
        chosen.push(all[i]);
        if pack(all, i + 1, used | all[i], universe, left - 1, m, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Whether a blue `tK_m` exists with one of its cliques containing `u` and `v`.
pub(crate) fn exists_through(blue: &[u64], order: usize, t: usize, m: usize, u: usize, v: usize) -> bool {
    if m < 2 || blue[u] >> v & 1 == 0 {
        return false;
    }
    let common = blue[u] & blue[v];
    let mut seeds = Vec::new();
    grow(blue, 0, common, m - 2, &mut seeds);
    seeds.into_iter().any(|k| {
        let clique = k | 1 << u | 1 << v;
        packing(blue, order, t - 1, m, clique).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_host;

    #[test]
    fn all_blue_k6_two_triangles() {
        let c = TwoColoring::all_blue(complete_host(6)).unwrap();
        let p = find_blue_packing(&c, 2, 3).unwrap();
        assert_eq!(p.cliques, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(p.validate(&c, 2, 3));
        assert!(find_blue_packing(&c, 3, 3).is_none());
    }

    #[test]
    fn pentagon_has_no_blue_triangle() {
        let c = TwoColoring::new(complete_host(5), [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(find_blue_packing(&c, 1, 3).is_none());
        assert!(find_blue_packing(&c, 2, 2).is_some());
    }

    #[test]
    fn single_vertex_cliques() {
        let c = TwoColoring::all_red(complete_host(3)).unwrap();
        assert!(find_blue_packing(&c, 3, 1).is_some());
        assert!(find_blue_packing(&c, 4, 1).is_none());
        assert!(find_blue_packing(&c, 1, 2).is_none());
    }

    #[test]
    fn clique_enumeration_counts() {
        let blue: Vec<u64> = (0..6).map(|u| complete_host(6).mask(u)).collect();
        assert_eq!(cliques(&blue, 6, 3, 0).len(), 20);
        assert_eq!(cliques(&blue, 6, 3, 0b11).len(), 4);
    }

    #[test]
    fn through_edge() {
        // Blue triangles 012 and 345, red elsewhere.
        let host = complete_host(6);
        let red: Vec<(usize, usize)> = host.edges().filter(|&(u, v)| (u < 3) != (v < 3)).collect();
        let c = TwoColoring::new(host, red).unwrap();
        let blue = c.blue_masks();
        assert!(exists_through(&blue, 6, 2, 3, 0, 1));
        assert!(!exists_through(&blue, 6, 2, 3, 0, 3));
        assert!(!exists_through(&blue, 6, 3, 3, 0, 1));
    }
}
