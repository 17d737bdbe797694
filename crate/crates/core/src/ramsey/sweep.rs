use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

use super::{ramsey_bruteforce, ramsey_formula, star_critical_bruteforce, star_critical_formula, RamseyResult};
use crate::config::SearchConfig;
use crate::constructions::FamilyParams;
use crate::error::Result;
use crate::format::to_graph6;
use crate::tree::{enumerate_trees_capped, Tree};

/// One output line of a sweep. `rstar_formula` and `agree_rstar` are empty
/// when the closed form is undefined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub tree_g6: String,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub r_formula: usize,
    pub r_brute: usize,
    pub rstar_formula: Option<usize>,
    pub rstar_brute: usize,
    pub agree_r: bool,
    pub agree_rstar: Option<bool>,
    pub runtime_ms: u64,
}

impl SweepRow {
    /// Whether either brute-force value differs from its closed form.
    pub fn disagrees(&self) -> bool {
        !self.agree_r || self.agree_rstar == Some(false)
    }
}

#[derive(Debug, Clone)]
pub struct SweepRecord {
    pub row: SweepRow,
    pub ramsey: RamseyResult,
    pub star_critical: RamseyResult,
}

/// Brute-force `r` and `r*` for every tree of order `n`, in enumeration
/// order.
pub fn sweep(n: usize, t: usize, m: usize, cfg: &SearchConfig) -> Result<Vec<SweepRecord>> {
    let trees = enumerate_trees_capped(n, cfg.max_tree_order)?;
    sweep_trees(&trees, t, m, cfg)
}

pub fn sweep_trees(trees: &[Tree], t: usize, m: usize, cfg: &SearchConfig) -> Result<Vec<SweepRecord>> {
    trees.par_iter().map(|tree| sweep_one(tree, t, m, cfg)).collect()
}

fn sweep_one(tree: &Tree, t: usize, m: usize, cfg: &SearchConfig) -> Result<SweepRecord> {
    let start = Instant::now();
    let p = FamilyParams::new(tree.order(), m, t)?;
    let ramsey = ramsey_bruteforce(tree, t, m, cfg)?;
    let star_critical = star_critical_bruteforce(tree, t, m, Some(ramsey.value), cfg)?;
    let r_formula = ramsey_formula(p).value;
    let rstar_formula = star_critical_formula(p).ok().map(|f| f.value);
    let row = SweepRow {
        tree_g6: to_graph6(tree.graph()),
        n: p.n,
        m,
        t,
        r_formula,
        r_brute: ramsey.value,
        rstar_formula,
        rstar_brute: star_critical.value,
        agree_r: r_formula == ramsey.value,
        agree_rstar: rstar_formula.map(|f| f == star_critical.value),
        runtime_ms: start.elapsed().as_millis() as u64,
    };
    Ok(SweepRecord {
        row,
        ramsey,
        star_critical,
    })
}
