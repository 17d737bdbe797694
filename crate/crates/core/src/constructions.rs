//! The extremal colorings: members of the critical family and the
//! star-deleted lower-bound coloring, plus a membership decider.
//!
//! For parameters `(n, m, t)` a family member is a coloring of
//! `K_{(n-1)(m-1)+t-1}` split into blocks `H_1, ..., H_m` where
//! `H_1..H_{m-1}` are red cliques on `n - 1` vertices, `H_m` has `t - 1`
//! vertices colored arbitrarily inside, and every edge between blocks is
//! blue.

use serde::Serialize;

use crate::coloring::TwoColoring;
use crate::error::{Error, Result};
use crate::graph::{complete_host, star_deleted_host, SimpleGraph};

/// Tree order `n`, clique order `m`, clique count `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyParams {
    pub n: usize,
    pub m: usize,
    pub t: usize,
}

impl FamilyParams {
    pub fn new(n: usize, m: usize, t: usize) -> Result<Self> {
        if n == 0 || m == 0 || t == 0 {
            return Err(Error::param(format!(
                "n, m, t must be positive (got n={n}, m={m}, t={t})"
            )));
        }
        Ok(FamilyParams { n, m, t })
    }

    /// `(n-1)(m-1) + t`.
    pub fn ramsey_order(&self) -> usize {
        (self.n - 1) * (self.m - 1) + self.t
    }

    /// Order of a family member, one less than [`ramsey_order`](Self::ramsey_order).
    pub fn critical_order(&self) -> usize {
        self.ramsey_order() - 1
    }

    /// Degree of the distinguished vertex in the star lower bound,
    /// `(n-1)(m-2) + t - 1`. Requires `m >= 2`.
    pub fn star_degree(&self) -> usize {
        (self.n - 1) * (self.m - 2) + self.t - 1
    }
}

/// Blocks `H_1, ..., H_m` certifying family membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyWitness {
    pub blocks: Vec<Vec<usize>>,
}

impl FamilyWitness {
    /// Re-checks every block size and edge color against `c`.
    pub fn validate(&self, c: &TwoColoring, p: FamilyParams) -> bool {
        if self.blocks.len() != p.m || c.order() != p.critical_order() {
            return false;
        }
        let mut block_of = vec![usize::MAX; c.order()];
        for (i, block) in self.blocks.iter().enumerate() {
            let want = if i + 1 < p.m { p.n - 1 } else { p.t - 1 };
            if block.len() != want {
                return false;
            }
            for &v in block {
                if v >= c.order() || block_of[v] != usize::MAX {
                    return false;
                }
                block_of[v] = i;
            }
        }
        if block_of.contains(&usize::MAX) {
            return false;
        }
        c.host().edges().all(|(u, v)| {
            let (bu, bv) = (block_of[u], block_of[v]);
            if bu != bv {
                c.is_blue(u, v)
            } else {
                bu + 1 == p.m || c.is_red(u, v)
            }
        })
    }
}

/// Contiguous block layout used by [`build_critical`]: `H_1 = {0..n-2}`,
/// then `H_2`, and so on, with `H_m` last.
pub fn critical_blocks(p: FamilyParams) -> Vec<Vec<usize>> {
    let mut blocks = Vec::with_capacity(p.m);
    let mut start = 0;
    for i in 0..p.m {
        let len = if i + 1 < p.m { p.n - 1 } else { p.t - 1 };
        blocks.push((start..start + len).collect());
        start += len;
    }
    blocks
}

/// A family member whose `H_m` block carries exactly the red edges of
/// `hm_red` (a graph on `t - 1` vertices, relabeled onto the block).
pub fn build_critical(p: FamilyParams, hm_red: &SimpleGraph) -> Result<TwoColoring> {
    if hm_red.order() != p.t - 1 {
        return Err(Error::param(format!(
            "H_m pattern has {} vertices, expected t - 1 = {}",
            hm_red.order(),
            p.t - 1
        )));
    }
    let blocks = critical_blocks(p);
    let offset = blocks[p.m - 1].first().copied().unwrap_or(0);
    let mut red: Vec<(usize, usize)> = Vec::new();
    for block in &blocks[..p.m - 1] {
        for (i, &u) in block.iter().enumerate() {
            red.extend(block[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    red.extend(hm_red.edges().map(|(u, v)| (u + offset, v + offset)));
    TwoColoring::new(complete_host(p.critical_order()), red)
}

/// Block layout of [`build_star_lower_bound`]: `H_2, ..., H_m` occupy the
/// first `(n-1)(m-2)+t-1` vertices, `H_1` follows, and the distinguished
/// vertex is last. Returned in the order `H_1, H_2, ..., H_m`.
pub fn star_lower_bound_blocks(p: FamilyParams) -> Vec<Vec<usize>> {
    let mut blocks = Vec::with_capacity(p.m);
    let mut start = 0;
    for i in 1..p.m {
        let len = if i + 1 < p.m { p.n - 1 } else { p.t - 1 };
        blocks.push((start..start + len).collect::<Vec<_>>());
        start += len;
    }
    blocks.insert(0, (start..start + p.n - 1).collect());
    blocks
}

/// Colors `K_N - K_{1,N-1-k}` with `N = (n-1)(m-1)+t` and
/// `k = (n-1)(m-2)+t-1`: a family member with `H_m` all blue on the first
/// `N - 1` vertices, and a last vertex joined in blue to `H_2, ..., H_m` only.
pub fn build_star_lower_bound(p: FamilyParams) -> Result<TwoColoring> {
    if p.m < 2 {
        return Err(Error::param("the star lower bound needs m >= 2"));
    }
    let blocks = star_lower_bound_blocks(p);
    let host = star_deleted_host(p.ramsey_order(), p.star_degree())?;
    let mut red = Vec::new();
    for block in &blocks[..p.m - 1] {
        for (i, &u) in block.iter().enumerate() {
            red.extend(block[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    TwoColoring::new(host, red)
}

/// Decides whether `c` is a family member for `p`, returning the blocks.
///
/// Each clique block `H_i` (`i < m`) is a red clique whose outgoing edges are
/// all blue, so it is exactly one red component. The search therefore groups
/// vertices into red components, marks those that are red cliques on
/// `n - 1` vertices, and assigns `m - 1` of them to the clique blocks; every
/// remaining component goes to `H_m`, whose size is then forced to `t - 1`.
/// The first qualifying components by smallest vertex are chosen.
pub fn family_membership(c: &TwoColoring, p: FamilyParams) -> Result<Option<FamilyWitness>> {
    let order = p.critical_order();
    if c.order() != order || c.host().edge_count() != order * order.saturating_sub(1) / 2 {
        return Err(Error::param(format!(
            "membership expects a complete host on {order} vertices"
        )));
    }
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(p.m);
    let mut rest: Vec<usize> = Vec::new();
    if p.n == 1 {
        blocks.resize(p.m - 1, Vec::new());
        rest.extend(0..order);
    } else {
        for comp in c.red_graph().components() {
            let is_block = comp.len() == p.n - 1 && c.red_graph().is_clique(&comp);
            if is_block && blocks.len() + 1 < p.m {
                blocks.push(comp);
            } else {
                rest.extend(comp);
            }
        }
        if blocks.len() + 1 < p.m {
            return Ok(None);
        }
    }
    rest.sort_unstable();
    blocks.push(rest);
    let witness = FamilyWitness { blocks };
    debug_assert!(witness.validate(c, p));
    Ok(Some(witness))
}
