//! Closed forms and brute-force values of `r(T, tK_m)` and its star-critical
//! counterpart.

mod chromatic;
mod sweep;

pub use chromatic::{chromatic_profile, disjoint_cliques, ChromaticProfile};
pub use sweep::{sweep, sweep_trees, SweepRecord, SweepRow};

use serde::Serialize;

use crate::arrowing::arrows;
use crate::coloring::TwoColoring;
use crate::config::SearchConfig;
use crate::constructions::FamilyParams;
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::{complete_host, star_deleted_host, SimpleGraph};
use crate::tree::Tree;

/// A closed-form value. `asymptotic` is set when the value is only known
/// to hold for large tree orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub value: usize,
    pub asymptotic: bool,
}

/// `(n-1)(m-1)+t`; exact for `t = 1`.
pub fn ramsey_formula(p: FamilyParams) -> FormulaValue {
    FormulaValue {
        value: p.ramsey_order(),
        asymptotic: p.t != 1,
    }
}

/// `(n-1)(m-2)+t` for `m >= 2`, and `0` for `m = 1` when `n >= t`.
pub fn star_critical_formula(p: FamilyParams) -> Result<FormulaValue> {
    if p.m == 1 {
        if p.n < p.t {
            return Err(Error::param(format!(
                "star-critical value for m = 1 needs n >= t (n = {}, t = {})",
                p.n, p.t
            )));
        }
        return Ok(FormulaValue { value: 0, asymptotic: false });
    }
    Ok(FormulaValue {
        value: p.star_degree() + 1,
        asymptotic: p.t != 1,
    })
}

/// `(g_order - 1)(chi(H) - 1) + s(H)`.
pub fn burr_lower_bound(g_order: usize, h: &SimpleGraph) -> Result<usize> {
    let prof = chromatic_profile(h)?;
    if g_order == 0 || g_order < prof.surplus {
        return Err(Error::Precondition(format!(
            "order {g_order} is below the chromatic surplus {} of H",
            prof.surplus
        )));
    }
    Ok((g_order - 1) * (prof.chi - 1) + prof.surplus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Formula,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyResult {
    pub value: usize,
    pub method: Method,
    /// For brute force: a coloring of the largest host below `value` that
    /// avoids the pair.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_lower: Option<TwoColoring>,
    pub trees_checked: Vec<String>,
}

/// Smallest `N` with `K_N -> (T, tK_m)`, searched upward from the Burr
/// bound.
pub fn ramsey_bruteforce(tree: &Tree, t: usize, m: usize, cfg: &SearchConfig) -> Result<RamseyResult> {
    FamilyParams::new(tree.order(), m, t)?;
    let n = tree.order();
    let burr = if n >= t && t * m <= crate::config::MAX_CHROMATIC_ORDER {
        burr_lower_bound(n, &disjoint_cliques(t, m)).ok()
    } else {
        None
    };
    let mut lo = burr.unwrap_or(0).max(2);
    // Verify the seed instead of trusting it.
    let mut below = arrows_on(&complete_host(lo - 1), tree, t, m, cfg, lo - 1)?;
    while below.is_none() {
        lo -= 1;
        below = if lo == 0 {
            Some(TwoColoring::all_blue(SimpleGraph::new(0))?)
        } else {
            arrows_on(&complete_host(lo - 1), tree, t, m, cfg, lo - 1)?
        };
    }
    let mut avoider = below;
    let mut big = lo;
    loop {
        match arrows_on(&complete_host(big), tree, t, m, cfg, big)? {
            None => {
                return Ok(RamseyResult {
                    value: big,
                    method: Method::BruteForce,
                    witness_lower: avoider,
                    trees_checked: vec![to_graph6(tree.graph())],
                })
            }
            Some(c) => {
                avoider = Some(c);
                big += 1;
            }
        }
    }
}

/// Smallest `k` with `K_N` minus a `K_{1,N-1-k}` arrowing the pair, where
/// `N` is `r` (computed when not given).
pub fn star_critical_bruteforce(
    tree: &Tree,
    t: usize,
    m: usize,
    r: Option<usize>,
    cfg: &SearchConfig,
) -> Result<RamseyResult> {
    let r = match r {
        Some(r) => r,
        None => ramsey_bruteforce(tree, t, m, cfg)?.value,
    };
    let host = |k: usize| star_deleted_host(r, k);
    if r == 0 {
        return Err(Error::param("r must be positive"));
    }
    // arrows holds at k = r-1 (the complete graph); bisect for the first k.
    let (mut lo, mut hi) = (0usize, r - 1);
    if arrows_on(&host(0)?, tree, t, m, cfg, r)?.is_none() {
        hi = 0;
    }
    while hi > lo + 1 {
        let mid = (lo + hi) / 2;
        if arrows_on(&host(mid)?, tree, t, m, cfg, r)?.is_none() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let k = hi;
    if arrows_on(&host(k)?, tree, t, m, cfg, r)?.is_some() {
        return Err(Error::Counterexample(format!(
            "K_{r} minus a star does not arrow at k = {k}; r = {r} is not the Ramsey number"
        )));
    }
    let mut avoider = None;
    if k > 0 {
        avoider = arrows_on(&host(k - 1)?, tree, t, m, cfg, r)?;
        if avoider.is_none() {
            return Err(Error::Counterexample(format!(
                "arrowing is not monotone in k around k = {k}"
            )));
        }
    }
    Ok(RamseyResult {
        value: k,
        method: Method::BruteForce,
        witness_lower: avoider,
        trees_checked: vec![to_graph6(tree.graph())],
    })
}

/// `None` when `host` arrows, else an avoiding coloring. Resource-guard
/// errors mention the host order reached.
fn arrows_on(
    host: &SimpleGraph,
    tree: &Tree,
    t: usize,
    m: usize,
    cfg: &SearchConfig,
    at: usize,
) -> Result<Option<TwoColoring>> {
    match arrows(host, tree, t, m, cfg) {
        Ok(out) => Ok(out.avoider),
        Err(Error::ResourceGuard {
            what,
            requested,
            limit,
            ..
        }) => Err(Error::ResourceGuard {
            what,
            requested,
            limit,
            detail: Some(format!(
                "search stopped at host order {at}; every smaller host already settled"
            )),
        }),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(n: usize, m: usize, t: usize) -> FamilyParams {
        FamilyParams::new(n, m, t).unwrap()
    }

    #[test]
    fn formulas() {
        assert_eq!(ramsey_formula(fp(3, 3, 1)), FormulaValue { value: 5, asymptotic: false });
        assert_eq!(ramsey_formula(fp(3, 2, 2)).value, 4);
        assert_eq!(ramsey_formula(fp(5, 3, 2)).value, 10);
        assert_eq!(star_critical_formula(fp(3, 2, 2)).unwrap().value, 2);
        for n in 1..8 {
            assert_eq!(star_critical_formula(fp(n, 3, 1)).unwrap().value, n);
        }
        assert_eq!(star_critical_formula(fp(5, 1, 3)).unwrap().value, 0);
        assert!(star_critical_formula(fp(2, 1, 3)).is_err());
    }

    #[test]
    fn burr() {
        assert_eq!(burr_lower_bound(4, &disjoint_cliques(2, 3)).unwrap(), 8);
        assert_eq!(burr_lower_bound(7, &complete_host(2)).unwrap(), 7);
        assert!(matches!(
            burr_lower_bound(2, &disjoint_cliques(3, 3)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn small_ramsey_numbers() {
        let cfg = SearchConfig::default();
        let p3 = Tree::path(3).unwrap();
        let r = ramsey_bruteforce(&p3, 1, 3, &cfg).unwrap();
        assert_eq!(r.value, 5);
        assert_eq!(r.witness_lower.as_ref().unwrap().order(), 4);
        assert_eq!(ramsey_bruteforce(&p3, 2, 2, &cfg).unwrap().value, 4);
        // Below the Burr seed the search walks down.
        assert_eq!(ramsey_bruteforce(&Tree::path(1).unwrap(), 1, 3, &cfg).unwrap().value, 1);
        assert_eq!(ramsey_bruteforce(&Tree::path(2).unwrap(), 2, 2, &cfg).unwrap().value, 4);
    }

    #[test]
    fn small_star_critical() {
        let cfg = SearchConfig::default();
        let p3 = Tree::path(3).unwrap();
        let r = star_critical_bruteforce(&p3, 2, 2, None, &cfg).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness_lower.unwrap().host(), &star_deleted_host(4, 1).unwrap());
        assert_eq!(star_critical_bruteforce(&p3, 1, 2, None, &cfg).unwrap().value, 1);
        assert_eq!(star_critical_bruteforce(&Tree::path(4).unwrap(), 2, 1, None, &cfg).unwrap().value, 0);
    }

    #[test]
    fn cap_reports_progress() {
        let cfg = SearchConfig::default().with_max_edges(5);
        let err = ramsey_bruteforce(&Tree::path(3).unwrap(), 1, 3, &cfg).unwrap_err();
        match err {
            Error::ResourceGuard { detail: Some(d), .. } => assert!(d.contains("order 4")),
            other => panic!("{other:?}"),
        }
    }
}
