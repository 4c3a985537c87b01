//! The [[10,2,3]]_3 code: g = X^2+1, h = X^4+(2e+1)X^2+1 over F_9.
//!
//! cargo run --example worked_example

use negacyclic::code::{classify, construct_code, default_alpha};
use negacyclic::{ExtField, Poly, PrimeModulus};

fn main() -> negacyclic::Result<()> {
    let p = PrimeModulus::new(3)?;
    let fp = ExtField::prime(p);
    let f9 = ExtField::new(p, 2)?;
    let g = Poly::parse(&fp, "X^2+1")?;
    let h = Poly::parse(&f9, "X^4+(2e+1)X^2+1")?;
    let alpha = default_alpha(p, 2)?;

    let spec = construct_code(p, 10, 2, 1, &g, &h, alpha)?;
    println!("a(X) = {}", spec.a());
    let (g_ring, f_ring) = spec.pair()?;
    println!("generating pair: ({g_ring}, {f_ring})");

    let report = classify(&spec)?;
    println!(
        "[[{},{},{}]]_{} linear = {}, roots of h at exponents {:?}",
        report.n, report.k_dim, report.d_bch, report.p, report.linear, report.root_exponents
    );
    for c in &report.verification {
        println!("  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
    }

    // dropping one orbit factor from h is rejected by name
    let bad_h = Poly::parse(&f9, "X^2+(e+2)X+2")?;
    match construct_code(p, 10, 2, 1, &g, &bad_h, alpha) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("h = {bad_h}: {e}"),
    }
    Ok(())
}
