//! Build a critical coloring and the star-deleted lower bound, print them
//! in `.2col`, and confirm both avoid every tree of order `n`.
//!
//!     cargo run --example construct_family -- 4 3 2

use ramseylab::format::{emit_coloring, to_graph6};
use ramseylab::{avoid_check, build_critical, build_star_lower_bound, enumerate_trees, family_membership, FamilyParams, SimpleGraph};

fn main() -> ramseylab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let p = FamilyParams::new(
        args.first().copied().unwrap_or(4),
        args.get(1).copied().unwrap_or(3),
        args.get(2).copied().unwrap_or(2),
    )?;

    let critical = build_critical(p, &SimpleGraph::new(p.t - 1))?;
    print!("{}", emit_coloring(&critical));
    println!("red graph6: {}", to_graph6(critical.red_graph()));
    let w = family_membership(&critical, p)?.expect("built colorings are members");
    println!("blocks: {:?}", w.blocks);

    let star = build_star_lower_bound(p)?;
    println!("star lower bound on {} vertices, {} edges", star.order(), star.host().edge_count());

    for tree in enumerate_trees(p.n)? {
        let a = avoid_check(&critical, &tree, p.t, p.m).avoids;
        let b = avoid_check(&star, &tree, p.t, p.m).avoids;
        println!("{:<12} critical avoids: {a}  star avoids: {b}", tree.canonical_string());
    }
    Ok(())
}
