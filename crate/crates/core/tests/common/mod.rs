//! Slow, obviously-correct reference implementations for cross-checking.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use ramseylab::{enumerate_trees, SimpleGraph, Tree, TwoColoring};

/// All labeled trees on `n` vertices via Prüfer sequences.
pub fn labeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Vec::new()],
        2 => return vec![vec![(0, 1)]],
        _ => {}
    }
    (0..n - 2)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .map(|seq| prufer_decode(n, &seq))
        .collect()
}

pub fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// AHU code rooted at the tree's centre (the smaller one for bicentral trees).
pub fn ahu_key(n: usize, edges: &[(usize, usize)]) -> (u64, u32) {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // Strip leaves until one or two vertices remain.
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&r| enc(&adj, r, usize::MAX)).min().unwrap_or((0, 0))
}

/// Parenthesis string as bits, `(` = 0 and `)` = 1, with its length.
/// Wrapped strings never prefix one another, so left-aligned comparison is
/// string comparison.
fn enc(adj: &[Vec<usize>], v: usize, parent: usize) -> (u64, u32) {
    let mut kids: Vec<(u64, u32)> = adj[v].iter().filter(|&&w| w != parent).map(|&w| enc(adj, w, v)).collect();
    kids.sort_by_key(|&(bits, len)| bits << (64 - len));
    let (mut bits, mut len) = (0u64, 1u32);
    for (kb, kl) in kids {
        bits = bits << kl | kb;
        len += kl;
    }
    (bits << 1 | 1, len + 1)
}

/// Unlabeled trees counted by streaming every Prüfer sequence.
pub fn unlabeled_tree_count(n: usize) -> usize {
    use rayon::prelude::*;
    if n <= 2 {
        return labeled_trees(n).iter().map(|e| ahu_key(n, e)).collect::<BTreeSet<_>>().len();
    }
    let keys: BTreeSet<(u64, u32)> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut seen = BTreeSet::new();
            let mut seq = vec![0usize; n - 2];
            seq[0] = first;
            loop {
                seen.insert(ahu_key(n, &prufer_decode(n, &seq)));
                // Odometer over positions 1..
                let mut i = n - 2;
                loop {
                    i -= 1;
                    if i == 0 {
                        return seen;
                    }
                    seq[i] += 1;
                    if seq[i] < n {
                        break;
                    }
                    seq[i] = 0;
                }
            }
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    keys.len()
}

/// Number of permutations of `0..n` mapping `edges` onto itself.
pub fn automorphism_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let set: BTreeSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    (0..n)
        .permutations(n)
        .filter(|p| {
            edges.iter().all(|&(u, v)| {
                let (a, b) = (p[u], p[v]);
                set.contains(&(a.min(b), a.max(b)))
            })
        })
        .count()
}

/// Automorphisms of a coloring of a complete host: permutations that keep
/// the red edge set.
pub fn coloring_automorphisms(c: &TwoColoring) -> usize {
    let red: Vec<(usize, usize)> = c.red_edges().collect();
    automorphism_count(c.order(), &red)
}

pub fn isomorphic_by_permutation(a: &TwoColoring, b: &TwoColoring) -> bool {
    if a.order() != b.order() {
        return false;
    }
    (0..a.order()).permutations(a.order()).any(|p| &a.permuted(&p) == b)
}

/// Backtracking over injective placements of tree vertices in index
/// order, checking each tree edge as soon as both ends are placed.
pub fn naive_red_tree(red: &SimpleGraph, tree: &Tree) -> bool {
    let n = tree.order();
    if n > red.order() {
        return false;
    }
    let edges: Vec<(usize, usize)> = tree.edges().collect();
    fn place(i: usize, img: &mut Vec<usize>, red: &SimpleGraph, edges: &[(usize, usize)], n: usize) -> bool {
        if i == n {
            return true;
        }
        for v in 0..red.order() {
            if img.contains(&v) {
                continue;
            }
            img.push(v);
            let ok = edges
                .iter()
                .filter(|&&(a, b)| a.max(b) == i)
                .all(|&(a, b)| red.has_edge(img[a], img[b]));
            if ok && place(i + 1, img, red, edges, n) {
                return true;
            }
            img.pop();
        }
        false
    }
    place(0, &mut Vec::new(), red, &edges, n)
}

/// All `m`-subsets that are blue cliques, then all `t`-subsets of those.
pub fn naive_blue_packing(blue: &SimpleGraph, t: usize, m: usize) -> bool {
    if t * m > blue.order() {
        return false;
    }
    let cliques: Vec<Vec<usize>> = (0..blue.order())
        .combinations(m)
        .filter(|s| s.iter().tuple_combinations().all(|(&u, &v)| blue.has_edge(u, v)))
        .collect();
    cliques.iter().combinations(t).any(|pick| {
        let mut seen = BTreeSet::new();
        pick.iter().flat_map(|c| c.iter()).all(|&v| seen.insert(v))
    })
}

pub fn naive_avoids(c: &TwoColoring, tree: &Tree, t: usize, m: usize) -> bool {
    !naive_red_tree(c.red_graph(), tree) && !naive_blue_packing(&c.blue_graph(), t, m)
}

/// Every coloring of `host`, red set given by the bits of `mask` over the
/// host edges in `edges()` order.
pub fn coloring_from_mask(host: &SimpleGraph, mask: u64) -> TwoColoring {
    let red = host.edges().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
    TwoColoring::new(host.clone(), red).unwrap()
}

/// Avoiding colorings of `host`, counted over all `2^|E|` labeled colorings.
pub fn naive_avoider_count(host: &SimpleGraph, tree: &Tree, t: usize, m: usize) -> usize {
    let e = host.edge_count();
    (0..1u64 << e)
        .filter(|&mask| naive_avoids(&coloring_from_mask(host, mask), tree, t, m))
        .count()
}

pub fn naive_arrows(host: &SimpleGraph, tree: &Tree, t: usize, m: usize) -> bool {
    let e = host.edge_count();
    (0..1u64 << e).all(|mask| !naive_avoids(&coloring_from_mask(host, mask), tree, t, m))
}

/// Exact chromatic number and surplus by trying every `k`-coloring.
pub fn naive_chromatic(g: &SimpleGraph) -> (usize, usize) {
    let n = g.order();
    for k in 1..=n {
        let mut best = usize::MAX;
        for colors in (0..n).map(|_| 0..k).multi_cartesian_product() {
            let proper = g.edges().all(|(u, v)| colors[u] != colors[v]);
            if !proper {
                continue;
            }
            let sizes: Vec<usize> = (0..k).map(|c| colors.iter().filter(|&&x| x == c).count()).collect();
            if sizes.iter().all(|&s| s > 0) {
                best = best.min(*sizes.iter().min().unwrap());
            }
        }
        if best != usize::MAX {
            return (k, best);
        }
    }
    (0, 0)
}

/// Membership by trying every assignment of vertices to the `m` blocks.
pub fn naive_membership(c: &TwoColoring, n: usize, m: usize, t: usize) -> bool {
    let order = c.order();
    (0..order).map(|_| 0..m).multi_cartesian_product().any(|block| {
        let sizes: Vec<usize> = (0..m).map(|b| block.iter().filter(|&&x| x == b).count()).collect();
        let sized = (0..m - 1).all(|b| sizes[b] == n - 1) && sizes[m - 1] == t - 1;
        sized
            && (0..order).tuple_combinations().all(|(u, v)| {
                if block[u] != block[v] {
                    c.is_blue(u, v)
                } else if block[u] < m - 1 {
                    c.is_red(u, v)
                } else {
                    true
                }
            })
    })
}

/// Size of a maximum red matching between `x` and `y`, by trying all
/// injections of subsets of `x`.
pub fn naive_max_matching(c: &TwoColoring, x: &[usize], y: &[usize]) -> usize {
    (0..=x.len())
        .rev()
        .find(|&k| {
            x.iter().combinations(k).any(|xs| {
                y.iter()
                    .permutations(k)
                    .any(|ys| xs.iter().zip(&ys).all(|(&&u, &&v)| c.is_red(u, v)))
            })
        })
        .unwrap_or(0)
}

/// A random host with at most `max_edges` edges, a random tree and a target.
pub fn random_instance(rng: &mut ChaCha8Rng, max_edges: usize) -> (SimpleGraph, Tree, usize, usize) {
    let order = rng.gen_range(2..=7);
    let mut edges: Vec<(usize, usize)> = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.6))
        .collect();
    while edges.len() > max_edges {
        edges.remove(rng.gen_range(0..edges.len()));
    }
    let host = SimpleGraph::from_edges(order, edges).unwrap();
    let trees = enumerate_trees(rng.gen_range(1..=5)).unwrap();
    let tree = trees[rng.gen_range(0..trees.len())].clone();
    (host, tree, rng.gen_range(1..=2), rng.gen_range(1..=3))
}
