//! Search every admissible code over F_p up to a length and diff the parameter
//! table against the shipped reference rows.
//!
//! cargo run --release --example table_search -- 5 42

use negacyclic::code::{search, table_rows, SearchConfig};
use negacyclic::golden::{diff, golden_rows_for};

fn main() -> negacyclic::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let p = args.first().copied().unwrap_or(3);
    let n_max = args.get(1).copied().unwrap_or(50) as usize;

    let outcome = search(&SearchConfig::new(p, n_max))?;
    let rows = table_rows(&outcome.reports);
    println!(
        "{} specs, {} distinct parameter rows",
        outcome.reports.len(),
        rows.len()
    );
    for r in &rows {
        println!(
            "  [[{},{},{}]]_{}{}",
            r.n,
            r.k_dim,
            r.d,
            r.p,
            if r.linear { "" } else { " *" }
        );
    }

    let golden: Vec<_> = golden_rows_for(p as u32)
        .into_iter()
        .filter(|g| g.row.n <= n_max)
        .collect();
    let d = diff(&rows, &golden);
    println!(
        "reference rows: {} matched, {} missing",
        d.matched.len(),
        d.missing.len()
    );
    for g in d.matched.iter().filter(|g| g.annotation.is_some()) {
        println!(
            "  note on [[{},{},{}]]: {}",
            g.row.n,
            g.row.k_dim,
            g.row.d,
            g.annotation.as_deref().unwrap()
        );
    }
    Ok(())
}
