//! Star-critical Ramsey numbers by search next to the closed form.
//!
//!     cargo run --release --example star_critical -- 3 2 2

use ramseylab::ramsey::{ramsey_bruteforce, star_critical_bruteforce, star_critical_formula};
use ramseylab::{enumerate_trees, FamilyParams, SearchConfig};

fn main() -> ramseylab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let n = args.first().copied().unwrap_or(3);
    let m = args.get(1).copied().unwrap_or(2);
    let t = args.get(2).copied().unwrap_or(2);
    let cfg = SearchConfig::default().with_max_edges(36);
    let formula = star_critical_formula(FamilyParams::new(n, m, t)?)?;

    for tree in enumerate_trees(n)? {
        let r = ramsey_bruteforce(&tree, t, m, &cfg)?;
        let rs = star_critical_bruteforce(&tree, t, m, Some(r.value), &cfg)?;
        let tag = if formula.asymptotic { " (large n)" } else { "" };
        println!("{}  r = {}  r* = {}  closed form {}{tag}", tree.canonical_string(), r.value, rs.value, formula.value);
    }
    Ok(())
}
