//! Factor X^n+1 over F_p and F_{p^k} and show the cyclotomic coset of each factor.
//!
//! cargo run --example factor_cosets -- 3 2 10

use negacyclic::factor::{admissible_lengths, factor_xn_plus_one};
use negacyclic::PrimeModulus;

fn main() -> negacyclic::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, k, n) = match args[..] {
        [p, k, n] => (p, k as usize, n),
        _ => (3, 2, 10),
    };
    let pm = PrimeModulus::new(p)?;
    match admissible_lengths(pm, n)? {
        Some(t) => println!("n = {n} divides {p}^{t}+1 with odd quotient"),
        None => println!("n = {n} admits no t-Frobenius code over F_{p}"),
    }
    let fs = factor_xn_plus_one(pm, k, n)?;
    println!("X^{n}+1 over F_{p}^{k} ({} factors):", fs.len());
    for (i, f) in fs.factors().iter().enumerate() {
        println!(
            "  {:<28} coset {:<12} sigma -> #{}  negation -> #{}",
            f.poly.to_string(),
            f.coset.to_string(),
            fs.sigma_index(i),
            fs.negation_index(i)
        );
    }
    Ok(())
}
