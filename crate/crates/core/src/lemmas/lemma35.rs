//! Checker for the path-lengthening dichotomy on a colored `K_{a+b}`.

use serde::Serialize;

use crate::arrowing::find_blue_packing;
use crate::coloring::TwoColoring;
use crate::error::{Error, Result};
use crate::graph::BitIter;

pub const PATH_LENGTH_READING: &str =
    "length exactly a means a red path with a edges (a+1 vertices) from x1 to x_a, \
     searched over all a+b vertices";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "witness", rename_all = "snake_case")]
pub enum Lemma35Outcome {
    BlueClique(Vec<usize>),
    /// The first `d` of the `x` vertices that are blue to every `y`.
    BlueDominatingXs(Vec<usize>),
    HypothesisNotMet(String),
    /// The red edges of an input satisfying the hypothesis with neither
    /// conclusion.
    Counterexample(Vec<(usize, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma35Report {
    #[serde(flatten)]
    pub outcome: Lemma35Outcome,
    pub interpretation: &'static str,
}

impl Lemma35Outcome {
    pub fn validate(&self, c: &TwoColoring, xs: &[usize], ys: &[usize], cc: usize, d: usize) -> bool {
        match self {
            Lemma35Outcome::BlueClique(k) => {
                k.len() == cc
                    && k.iter().enumerate().all(|(i, &u)| k[i + 1..].iter().all(|&v| c.is_blue(u, v)))
            }
            Lemma35Outcome::BlueDominatingXs(sel) => {
                let mut s = sel.clone();
                s.sort_unstable();
                s.dedup();
                s.len() == d
                    && sel.iter().all(|&x| xs.contains(&x) && ys.iter().all(|&y| c.is_blue(x, y)))
            }
            Lemma35Outcome::HypothesisNotMet(_) => {
                !red_path_holds(c, xs) || red_path_of_length(c, xs[0], xs[xs.len() - 1], xs.len()).is_some()
            }
            Lemma35Outcome::Counterexample(_) => false,
        }
    }
}

/// `xs` lists `x_1..x_a` in path order, `ys` lists `y_1..y_b`; `cc` and
/// `d` are the clique order and the number of dominating `x` vertices.
pub fn lemma35_check(c: &TwoColoring, xs: &[usize], ys: &[usize], cc: usize, d: usize) -> Result<Lemma35Report> {
    let (a, b) = (xs.len(), ys.len());
    if a == 0 || b == 0 || cc == 0 || d == 0 {
        return Err(Error::param("a, b, c and d must be positive"));
    }
    if a < b * (cc - 1) + d {
        return Err(Error::param(format!(
            "need a >= b(c-1)+d, got a = {a}, b = {b}, c = {cc}, d = {d}"
        )));
    }
    let n = c.order();
    if n != a + b || c.host().edge_count() != n * (n - 1) / 2 {
        return Err(Error::param("the coloring must be of a complete graph on a+b vertices"));
    }
    let mut seen = vec![false; n];
    for &v in xs.iter().chain(ys) {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::param(format!("vertex {v} is out of range or repeated")));
        }
    }

    let outcome = if !red_path_holds(c, xs) {
        Lemma35Outcome::HypothesisNotMet("x_1 x_2 ... x_a is not a red path".into())
    } else if let Some(p) = red_path_of_length(c, xs[0], xs[a - 1], a) {
        Lemma35Outcome::HypothesisNotMet(format!("red path with {a} edges from x_1 to x_a: {p:?}"))
    } else if let Some(k) = find_blue_packing(c, 1, cc) {
        Lemma35Outcome::BlueClique(k.cliques.into_iter().next().unwrap())
    } else {
        let dom: Vec<usize> = xs
            .iter()
            .copied()
            .filter(|&x| ys.iter().all(|&y| c.is_blue(x, y)))
            .take(d)
            .collect();
        if dom.len() == d {
            Lemma35Outcome::BlueDominatingXs(dom)
        } else {
            Lemma35Outcome::Counterexample(c.red_edges().collect())
        }
    };
    Ok(Lemma35Report {
        outcome,
        interpretation: PATH_LENGTH_READING,
    })
}

fn red_path_holds(c: &TwoColoring, xs: &[usize]) -> bool {
    xs.windows(2).all(|w| c.is_red(w[0], w[1]))
}

/// A red path from `s` to `t` with exactly `len` edges, as a vertex list.
pub fn red_path_of_length(c: &TwoColoring, s: usize, t: usize, len: usize) -> Option<Vec<usize>> {
    let red = c.red_masks();
    let mut path = vec![s];
    fn go(red: &[u64], t: usize, left: usize, used: u64, path: &mut Vec<usize>) -> bool {
        let cur = *path.last().unwrap();
        if left == 0 {
            return cur == t;
        }
        // The target may only be entered on the final step.
        let mut cand = red[cur] & !used;
        if left > 1 {
            cand &= !(1 << t);
        }
        for v in BitIter(cand) {
            if left == 1 && v != t {
                continue;
            }
            path.push(v);
            if go(red, t, left - 1, used | 1 << v, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    if s == t {
        return None;
    }
    go(&red, t, len, 1 << s, &mut path).then_some(path)
}
