//! Every avoiding coloring of K_{r-1} up to isomorphism, checked against
//! the critical family.
//!
//!     cargo run --example enumerate_critical -- 4 3

use ramseylab::{complete_host, enumerate_avoiders, enumerate_trees, family_membership, FamilyParams, SearchConfig};

fn main() -> ramseylab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let p = FamilyParams::new(args.first().copied().unwrap_or(4), args.get(1).copied().unwrap_or(3), 1)?;
    let host = complete_host(p.critical_order());
    let cfg = SearchConfig::default();

    for tree in enumerate_trees(p.n)? {
        let avoiders = enumerate_avoiders(&host, &tree, p.t, p.m, &cfg)?;
        let members = avoiders.iter().filter(|c| matches!(family_membership(c, p), Ok(Some(_)))).count();
        println!("{:<14} {} classes, {members} in the family", tree.canonical_string(), avoiders.len());
    }
    Ok(())
}
