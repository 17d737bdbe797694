//! Long suspended path, many independent end edges, or a large talon.
//!
//!     cargo run --example tree_trichotomy

use ramseylab::lemmas::tree_trichotomy;
use ramseylab::Tree;

fn main() -> ramseylab::Result<()> {
    let spider = Tree::from_edges(9, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)])?;
    for (name, tree) in [("P12", Tree::path(12)?), ("S40", Tree::star(40)?), ("spider", spider)] {
        let rep = tree_trichotomy(&tree, 4, 3)?;
        println!("{name:<7} {}", serde_json::to_string(&rep).expect("serializable"));
    }
    Ok(())
}
