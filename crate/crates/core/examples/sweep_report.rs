//! Search against closed form for every tree of order n, as CSV.
//!
//!     cargo run --release --example sweep_report -- 4 2 2

use ramseylab::ramsey::sweep;
use ramseylab::report::{sweep_table, Format};
use ramseylab::SearchConfig;

fn main() -> ramseylab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let n = args.first().copied().unwrap_or(4);
    let t = args.get(1).copied().unwrap_or(2);
    let m = args.get(2).copied().unwrap_or(2);

    let records = sweep(n, t, m, &SearchConfig::default())?;
    let rows: Vec<_> = records.iter().map(|r| r.row.clone()).collect();
    print!("{}", sweep_table(&rows, true).render(Format::Csv));
    for r in records.iter().filter(|r| r.row.disagrees()) {
        eprintln!("{} disagrees with the closed form", r.row.tree_g6);
    }
    Ok(())
}
