//! Write a spec file, read it back with re-validation, and watch a tampered
//! copy get rejected.
//!
//! cargo run --example spec_files

use negacyclic::code::{construct_code, default_alpha, SpecFile};
use negacyclic::{ExtField, Poly, PrimeModulus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = PrimeModulus::new(3)?;
    let g = Poly::parse(&ExtField::prime(p), "X^2+1")?;
    let h = Poly::parse(&ExtField::new(p, 2)?, "X^4+(2e+1)X^2+1")?;
    let spec = construct_code(p, 10, 2, 1, &g, &h, default_alpha(p, 2)?)?;

    let text = toml::to_string(&spec.to_file())?;
    println!("{text}");
    let back: SpecFile = toml::from_str(&text)?;
    assert_eq!(back.to_spec()?, spec);
    println!("round trip: identical");

    let mut tampered = back.clone();
    tampered.a = Some("X^6+X^4+2".into());
    println!("tampered a: {}", tampered.to_spec().unwrap_err());
    tampered.a = None;
    tampered.g = "X^2+X+2".into();
    println!("tampered g: {}", tampered.to_spec().unwrap_err());
    Ok(())
}
