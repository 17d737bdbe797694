//! A red matching saturating X, or a blue biclique when none exists.
//!
//!     cargo run --example hall_dichotomy

use ramseylab::lemmas::{bipartite_coloring, hall_dichotomy};

fn main() -> ramseylab::Result<()> {
    let x = [0, 1, 2];
    let y = [3, 4, 5, 6];
    let cases: [&[(usize, usize)]; 3] = [
        &[(0, 3), (1, 4), (2, 5)],
        &[(0, 3), (1, 3), (2, 3), (2, 6)],
        &[],
    ];
    for red in cases {
        let c = bipartite_coloring(3, 4, red)?;
        let out = hall_dichotomy(&c, &x, &y)?;
        println!("red {red:?}\n  {}", serde_json::to_string(&out).expect("serializable"));
    }
    Ok(())
}
