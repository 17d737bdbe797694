//! Non-isomorphic trees by order, with graph6 and the shorthand names.
//!
//!     cargo run --example tree_enumeration -- 7

use ramseylab::enumerate_trees;
use ramseylab::format::to_graph6;

fn main() -> ramseylab::Result<()> {
    let max: usize = std::env::args().nth(1).map_or(7, |a| a.parse().expect("integer"));
    for n in 1..=max {
        let trees = enumerate_trees(n)?;
        let names: Vec<String> = trees
            .iter()
            .map(|t| t.shorthand().unwrap_or_else(|| to_graph6(t.graph())))
            .collect();
        println!("{n:>2}: {:>4}  {}", trees.len(), names.join(" "));
    }
    Ok(())
}
