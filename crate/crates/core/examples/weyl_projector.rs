//! Dense stabilizer projectors for every admissible code of length 4 over F_3,
//! plus a shift-breaking subspace for contrast.
//!
//! cargo run --release --example weyl_projector

use negacyclic::code::SearchConfig;
use negacyclic::oracle::{Subspace, VectorPair, DEFAULT_BUDGET};
use negacyclic::weyl::{negacyclic_residuals, simulate, StateSpace, DEFAULT_CAP};

fn main() -> negacyclic::Result<()> {
    let mut cfg = SearchConfig::new(3, 4);
    cfg.t_cap = Some(3);
    cfg.allow_k1 = true;
    for r in negacyclic::code::search(&cfg)?
        .reports
        .iter()
        .filter(|r| r.n == 4)
    {
        let sim = simulate(&r.spec, DEFAULT_CAP, 1)?;
        println!(
            "k={} g={} h={}: |S| = {}, trace(P) = {:.6}, |P^2-P| = {:.1e}, |NP-PN| = {:.1e}",
            r.spec.k(),
            r.spec.g(),
            r.spec.h(),
            sim.s_size,
            sim.trace_re,
            sim.idempotence,
            sim.negacyclic.commutator
        );
    }

    let space = StateSpace::new(3, 2, DEFAULT_CAP)?;
    let s = Subspace::span(3, 2, &[VectorPair::new(vec![1, 0], vec![0, 0])?]);
    let proj = space.projector(&s, DEFAULT_BUDGET)?;
    let res = negacyclic_residuals(&space, &proj, 4, 1)?;
    println!("span{{(e_0, 0)}}: |NP-PN| = {:.3}", res.commutator);
    Ok(())
}
