//! Exhaustive check of the [[10,2,3]]_3 code on F_3^10 x F_3^10: sizes of S and
//! its symplectic dual, the true minimum distance, and the dual as an ideal.
//!
//! cargo run --release --example symplectic_oracle

use negacyclic::code::{construct_code, default_alpha};
use negacyclic::oracle::{dual_ideal_checks, structural_checks, true_min_distance, DEFAULT_BUDGET};
use negacyclic::{ExtField, Poly, PrimeModulus};

fn main() -> negacyclic::Result<()> {
    let p = PrimeModulus::new(3)?;
    let g = Poly::parse(&ExtField::prime(p), "X^2+1")?;
    let h = Poly::parse(&ExtField::new(p, 2)?, "X^4+(2e+1)X^2+1")?;
    let spec = construct_code(p, 10, 2, 1, &g, &h, default_alpha(p, 2)?)?;

    for c in structural_checks(&spec)?
        .iter()
        .chain(&dual_ideal_checks(&spec, 32, 7)?)
    {
        println!("[{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
    }
    let d = true_min_distance(&spec, DEFAULT_BUDGET)?;
    println!(
        "|S| = {}, |S^perp| = {}, minimum joint weight outside S = {:?}, BCH bound {}",
        d.s_size, d.dual_size, d.true_distance, d.d_bch
    );

    // a tighter budget is refused rather than silently truncated
    if let Err(e) = true_min_distance(&spec, 10_000) {
        println!("budget 10000: {e}");
    }
    Ok(())
}
