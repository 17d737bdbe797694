//! Red matchings versus blue bicliques in a colored `K_{a,b}`.

use serde::Serialize;

use crate::coloring::TwoColoring;
use crate::error::{Error, Result};

const FREE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "witness", rename_all = "snake_case")]
pub enum HallOutcome {
    /// One red edge `(x, y)` per vertex of `X`, pairwise disjoint.
    RedMatching(Vec<(usize, usize)>),
    /// `s` has `c + 1` vertices of `X`, `y_prime` at least `b - c` of `Y`,
    /// and every edge between them is blue.
    BlueBiclique { c: usize, s: Vec<usize>, y_prime: Vec<usize> },
}

impl HallOutcome {
    pub fn validate(&self, col: &TwoColoring, x: &[usize], y: &[usize]) -> bool {
        match self {
            HallOutcome::RedMatching(edges) => {
                let mut xs: Vec<usize> = edges.iter().map(|e| e.0).collect();
                let mut ys: Vec<usize> = edges.iter().map(|e| e.1).collect();
                xs.sort_unstable();
                ys.sort_unstable();
                ys.dedup();
                let mut want = x.to_vec();
                want.sort_unstable();
                xs == want
                    && ys.len() == edges.len()
                    && edges.iter().all(|&(u, v)| y.contains(&v) && col.is_red(u, v))
            }
            HallOutcome::BlueBiclique { c, s, y_prime } => {
                s.len() == c + 1
                    && *c < x.len()
                    && y_prime.len() + c >= y.len()
                    && s.iter().all(|u| x.contains(u))
                    && y_prime.iter().all(|v| y.contains(v))
                    && s.iter().all(|&u| y_prime.iter().all(|&v| col.is_blue(u, v)))
            }
        }
    }
}

/// Maximum red matching between `x` and `y`; when it misses part of `x`,
/// a Hall violator `S` gives the blue biclique `S x (Y - N_red(S))`.
pub fn hall_dichotomy(col: &TwoColoring, x: &[usize], y: &[usize]) -> Result<HallOutcome> {
    check_bipartite(col, x, y)?;
    let red = |u: usize, v: usize| col.is_red(u, v);

    // mate_y[j]: index into x matched to y[j].
    let mut mate_y = vec![FREE; y.len()];
    let mut mate_x = vec![FREE; x.len()];
    for i in 0..x.len() {
        let mut seen = vec![false; y.len()];
        augment(i, x, y, &red, &mut seen, &mut mate_x, &mut mate_y);
    }
    if mate_x.iter().all(|&j| j != FREE) {
        let edges = (0..x.len()).map(|i| (x[i], y[mate_x[i]])).collect();
        return Ok(HallOutcome::RedMatching(edges));
    }

    // Alternating reachability from the unmatched part of x.
    let mut in_s = vec![false; x.len()];
    let mut in_n = vec![false; y.len()];
    let mut stack: Vec<usize> = (0..x.len()).filter(|&i| mate_x[i] == FREE).collect();
    for &i in &stack {
        in_s[i] = true;
    }
    while let Some(i) = stack.pop() {
        for j in 0..y.len() {
            if !in_n[j] && red(x[i], y[j]) {
                in_n[j] = true;
                let k = mate_y[j];
                if k != FREE && !in_s[k] {
                    in_s[k] = true;
                    stack.push(k);
                }
            }
        }
    }
    let s: Vec<usize> = (0..x.len()).filter(|&i| in_s[i]).map(|i| x[i]).collect();
    let y_prime: Vec<usize> = (0..y.len()).filter(|&j| !in_n[j]).map(|j| y[j]).collect();
    Ok(HallOutcome::BlueBiclique {
        c: s.len() - 1,
        s,
        y_prime,
    })
}

fn augment(
    i: usize,
    x: &[usize],
    y: &[usize],
    red: &impl Fn(usize, usize) -> bool,
    seen: &mut [bool],
    mate_x: &mut [usize],
    mate_y: &mut [usize],
) -> bool {
    for j in 0..y.len() {
        if seen[j] || !red(x[i], y[j]) {
            continue;
        }
        seen[j] = true;
        if mate_y[j] == FREE || augment(mate_y[j], x, y, red, seen, mate_x, mate_y) {
            mate_y[j] = i;
            mate_x[i] = j;
            return true;
        }
    }
    false
}

fn check_bipartite(col: &TwoColoring, x: &[usize], y: &[usize]) -> Result<()> {
    if x.is_empty() || x.len() > y.len() {
        return Err(Error::param(format!(
            "need 1 <= |X| <= |Y|, got |X| = {}, |Y| = {}",
            x.len(),
            y.len()
        )));
    }
    let n = col.order();
    let mut side = vec![0u8; n];
    for (&v, mark) in x.iter().map(|v| (v, 1)).chain(y.iter().map(|v| (v, 2))) {
        if v >= n || side[v] != 0 {
            return Err(Error::param(format!("vertex {v} is out of range or repeated")));
        }
        side[v] = mark;
    }
    for (u, v) in col.host().edges() {
        if side[u] == side[v] {
            return Err(Error::param(format!("host edge {u}-{v} is not between X and Y")));
        }
    }
    for &u in x {
        if let Some(&v) = y.iter().find(|&&v| !col.host().has_edge(u, v)) {
            return Err(Error::param(format!("host is missing the X-Y edge {u}-{v}")));
        }
    }
    Ok(())
}

/// The colored `K_{a,b}` with `X = 0..a`, `Y = a..a+b` and the given red
/// edges.
pub fn bipartite_coloring(a: usize, b: usize, red: &[(usize, usize)]) -> Result<TwoColoring> {
    let host_edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    let host = crate::graph::SimpleGraph::from_edges(a + b, host_edges)?;
    TwoColoring::new(host, red.iter().copied())
}
