//! Equitable proper colorings of graphs with small maximum degree.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Below this order the exhaustive search runs first.
const EXHAUSTIVE_BELOW: usize = 12;

/// `blocks[i]` is the `i`-th independent set; the larger blocks come first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionWitness {
    pub blocks: Vec<Vec<usize>>,
}

impl PartitionWitness {
    pub fn validate(&self, g: &SimpleGraph, l: usize) -> bool {
        if self.blocks.len() != l || l == 0 {
            return false;
        }
        let sizes = block_sizes(g.order(), l);
        let mut seen = vec![false; g.order()];
        for (block, &size) in self.blocks.iter().zip(&sizes) {
            if block.len() != size {
                return false;
            }
            for (i, &u) in block.iter().enumerate() {
                if u >= g.order() || std::mem::replace(&mut seen[u], true) {
                    return false;
                }
                if block[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// With `n = a*l + b`, `b` blocks of size `a+1` followed by `l-b` of size `a`.
pub fn block_sizes(n: usize, l: usize) -> Vec<usize> {
    let (a, b) = (n / l, n % l);
    (0..l).map(|i| if i < b { a + 1 } else { a }).collect()
}

pub fn equitable_partition(g: &SimpleGraph, l: usize) -> Result<PartitionWitness> {
    equitable_partition_seeded(g, l, 0)
}

/// Partition into `l` independent sets whose sizes differ by at most one.
/// Requires `max_degree(g) < l`.
pub fn equitable_partition_seeded(g: &SimpleGraph, l: usize, seed: u64) -> Result<PartitionWitness> {
    if l == 0 {
        return Err(Error::param("the number of blocks must be positive"));
    }
    if g.max_degree() >= l {
        return Err(Error::Precondition(format!(
            "maximum degree {} is not below {l}",
            g.max_degree()
        )));
    }
    let adj: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).collect()).collect();
    let sizes = block_sizes(g.order(), l);
    let assignment = if g.order() < EXHAUSTIVE_BELOW {
        exhaustive(&adj, &sizes)
    } else {
        local_search(&adj, &sizes, seed).or_else(|| exhaustive(&adj, &sizes))
    };
    let assignment = assignment.ok_or_else(|| {
        Error::Counterexample("no equitable partition exists despite the degree bound".into())
    })?;
    let mut blocks = vec![Vec::new(); l];
    for (v, &b) in assignment.iter().enumerate() {
        blocks[b].push(v);
    }
    Ok(PartitionWitness { blocks })
}

/// Backtracking over vertices by decreasing degree. Empty blocks of equal
/// capacity are interchangeable, so only the first is tried.
fn exhaustive(adj: &[Vec<usize>], sizes: &[usize]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    let mut block = vec![usize::MAX; n];
    let mut fill = vec![0usize; sizes.len()];
    fn go(
        i: usize,
        order: &[usize],
        adj: &[Vec<usize>],
        sizes: &[usize],
        block: &mut [usize],
        fill: &mut [usize],
    ) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for b in 0..sizes.len() {
            if fill[b] == sizes[b] || adj[v].iter().any(|&w| block[w] == b) {
                continue;
            }
            if fill[b] == 0 && (0..b).any(|e| fill[e] == 0 && sizes[e] == sizes[b]) {
                continue;
            }
            block[v] = b;
            fill[b] += 1;
            if go(i + 1, order, adj, sizes, block, fill) {
                return true;
            }
            fill[b] -= 1;
            block[v] = usize::MAX;
        }
        false
    }
    go(0, &order, adj, sizes, &mut block, &mut fill).then_some(block)
}

/// Min-conflict swaps between blocks, which keep every block size fixed.
fn local_search(adj: &[Vec<usize>], sizes: &[usize], seed: u64) -> Option<Vec<usize>> {
    let n = adj.len();
    let l = sizes.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut block: Vec<usize> = Vec::with_capacity(n);
    for (b, &s) in sizes.iter().enumerate() {
        block.extend(std::iter::repeat_n(b, s));
    }
    block.shuffle(&mut rng);
    // hits[v][b]: neighbours of v in block b.
    let mut hits = vec![vec![0usize; l]; n];
    for v in 0..n {
        for &w in &adj[v] {
            hits[v][block[w]] += 1;
        }
    }
    let adjacent = |u: usize, w: usize| adj[u].contains(&w);

    for _ in 0..200 * n.max(1) * l {
        let bad: Vec<usize> = (0..n).filter(|&v| hits[v][block[v]] > 0).collect();
        let Some(&u) = bad.choose(&mut rng) else {
            return Some(block);
        };
        let bu = block[u];
        let mut best = Vec::new();
        let mut best_delta = i64::MAX;
        for (w, &bw) in block.iter().enumerate() {
            if bw == bu {
                continue;
            }
            let link = adjacent(u, w) as i64;
            let delta = hits[u][bw] as i64 - link + hits[w][bu] as i64 - link
                - hits[u][bu] as i64
                - hits[w][bw] as i64;
            if delta < best_delta {
                best_delta = delta;
                best.clear();
            }
            if delta == best_delta {
                best.push(w);
            }
        }
        let w = if best_delta <= 0 || rng.gen_bool(0.3) {
            *best.choose(&mut rng)?
        } else {
            let others: Vec<usize> = (0..n).filter(|&w| block[w] != bu).collect();
            *others.choose(&mut rng)?
        };
        let bw = block[w];
        for &x in &adj[u] {
            hits[x][bu] -= 1;
            hits[x][bw] += 1;
        }
        for &x in &adj[w] {
            hits[x][bw] -= 1;
            hits[x][bu] += 1;
        }
        block[u] = bw;
        block[w] = bu;
    }
    (0..n).all(|v| hits[v][block[v]] == 0).then_some(block)
}
