//! Arithmetic in F_9 = F_3(e) with e^2 = -1, and embedding into F_81.
//!
//! cargo run --example field_arithmetic

use negacyclic::{embed, ExtField, PrimeModulus};

fn main() -> negacyclic::Result<()> {
    let p = PrimeModulus::new(3)?;
    let f9 = ExtField::new(p, 2)?;
    println!("F_9 is F_3[e]/({})", f9.defining_polynomial());

    let e = f9.eta();
    let x = &e + &f9.one();
    println!("e^2 = {}", e.pow(2));
    println!("(e+1)^-1 = {}", x.inv()?);
    println!("Frobenius of e+1 = {}", x.frobenius(1));
    println!("order of e+1 = {}", x.order()?);

    println!("elements in lex order:");
    let all: Vec<String> = f9.elements().map(|z| z.to_string()).collect();
    println!("  {}", all.join(", "));

    let f81 = ExtField::new(p, 4)?;
    let image = embed(&e, &f81)?;
    println!(
        "e inside F_81 (modulus {}) is {image}",
        f81.defining_polynomial()
    );
    assert!(image.pow(2) == f81.from_int(-1));
    Ok(())
}
