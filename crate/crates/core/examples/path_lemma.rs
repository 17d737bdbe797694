//! Red path x_1..x_a plus b outside vertices: either a blue clique or d
//! of the x vertices see every y in blue. Tallies outcomes over every
//! coloring of the remaining edges.
//!
//!     cargo run --release --example path_lemma -- 4 1 2 3

use std::collections::BTreeMap;

use ramseylab::lemmas::lemma35_check;
use ramseylab::{complete_host, TwoColoring};

fn main() -> ramseylab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (a, b) = (args.first().copied().unwrap_or(4), args.get(1).copied().unwrap_or(1));
    let (cc, d) = (args.get(2).copied().unwrap_or(2), args.get(3).copied().unwrap_or(3));
    let host = complete_host(a + b);
    let path: Vec<(usize, usize)> = (1..a).map(|i| (i - 1, i)).collect();
    let free: Vec<(usize, usize)> = host.edges().filter(|e| !path.contains(e)).collect();
    assert!(free.len() < 24, "too many colorings to enumerate");
    let xs: Vec<usize> = (0..a).collect();
    let ys: Vec<usize> = (a..a + b).collect();

    let mut tally = BTreeMap::new();
    for mask in 0..1u64 << free.len() {
        let red = free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let c = TwoColoring::new(host.clone(), path.iter().copied().chain(red))?;
        let rep = lemma35_check(&c, &xs, &ys, cc, d)?;
        let kind = serde_json::to_value(&rep).expect("serializable")["kind"].as_str().unwrap_or("").to_string();
        *tally.entry(kind).or_insert(0usize) += 1;
    }
    println!("{tally:?}");
    Ok(())
}
