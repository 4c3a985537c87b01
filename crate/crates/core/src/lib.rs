pub mod cli;
pub mod code;
pub mod error;
pub mod factor;
pub mod field;
pub mod golden;
mod memo;
pub mod oracle;
pub mod poly;
pub mod ring;
pub mod weyl;

pub use error::{Error, Result};
pub use field::{embed, find_irreducible, ExtField, FieldElem, PrimeModulus};
pub use poly::Poly;
pub use ring::RingElem;
