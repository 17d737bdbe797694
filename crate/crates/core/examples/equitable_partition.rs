//! Equitable independent partitions of random sparse graphs.
//!
//!     cargo run --example equitable_partition -- 12 5

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramseylab::lemmas::equitable_partition_seeded;
use ramseylab::SimpleGraph;

fn main() -> ramseylab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let n = args.first().copied().unwrap_or(12);
    let l = args.get(1).copied().unwrap_or(5);
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    for seed in 0..5 {
        // Keep adding random edges while the maximum degree stays below l.
        let mut edges = Vec::new();
        let mut deg = vec![0usize; n];
        for _ in 0..n * l {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && deg[u] + 1 < l && deg[v] + 1 < l && !edges.contains(&(u.min(v), u.max(v))) {
                edges.push((u.min(v), u.max(v)));
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let g = SimpleGraph::from_edges(n, edges)?;
        let w = equitable_partition_seeded(&g, l, seed)?;
        println!("{} edges -> {:?}", g.edge_count(), w.blocks);
    }
    Ok(())
}
