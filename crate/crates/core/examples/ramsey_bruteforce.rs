//! Brute-force Ramsey numbers r(T, K_m) for every tree of a given order.
//!
//!     cargo run --release --example ramsey_bruteforce -- 5 3

use ramseylab::ramsey::{ramsey_bruteforce, ramsey_formula};
use ramseylab::{enumerate_trees, FamilyParams, SearchConfig};
use std::time::Instant;

fn main() -> ramseylab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let n = args.first().copied().unwrap_or(4);
    let m = args.get(1).copied().unwrap_or(3);
    let cfg = SearchConfig::default().with_max_edges(36);

    for tree in enumerate_trees(n)? {
        let start = Instant::now();
        let r = ramsey_bruteforce(&tree, 1, m, &cfg)?;
        let formula = ramsey_formula(FamilyParams::new(n, m, 1)?);
        println!(
            "{:?}  r = {}  formula = {}  ({:.2?})",
            tree.edges().collect::<Vec<_>>(),
            r.value,
            formula.value,
            start.elapsed()
        );
    }
    Ok(())
}
