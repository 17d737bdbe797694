//! Decide K_k -> (T, tK_m) for a path and a star, printing an avoiding
//! coloring when there is one.
//!
//!     cargo run --example arrowing_check -- 5 4 1 3

use ramseylab::format::emit_coloring;
use ramseylab::{arrows, complete_host, SearchConfig, Tree};

fn main() -> ramseylab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let k = args.first().copied().unwrap_or(5);
    let n = args.get(1).copied().unwrap_or(4);
    let t = args.get(2).copied().unwrap_or(1);
    let m = args.get(3).copied().unwrap_or(3);
    let cfg = SearchConfig::default();

    for (name, tree) in [("path", Tree::path(n)?), ("star", Tree::star(n)?)] {
        let out = arrows(&complete_host(k), &tree, t, m, &cfg)?;
        if out.arrows {
            println!("K_{k} arrows the {name} on {n} vertices vs {t}K_{m}");
        } else {
            println!("K_{k} does not arrow the {name}; avoider:");
            print!("{}", emit_coloring(&out.avoider.expect("non-arrowing hosts come with an avoider")));
        }
    }
    Ok(())
}
