//! Dense Weyl operators on the `p^n`-dimensional state space.
//!
//! Basis states `|x⟩` for `x ∈ F_p^n` are indexed little-endian:
//! `index(x) = Σ x_j p^j`.
//!
//! `U_a|x⟩ = |x+a⟩` and `V_b|x⟩ = ζ^{b·x}|x⟩`. The stabilizer summand of
//! `(a, b)` is `ω^{a·b} U_a V_b` with `ω = e^{2πi/p}`. Taking `ζ = ω²` makes these
//! summands multiply like the vectors they come from, on an isotropic set.
//! The product of the summands for `(a,b)` and `(c,d)` then carries
//! `ω^{ab+cd+2bc}`, and isotropy turns this into `ω^{(a+c)(b+d)}`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::{Check, CodeSpec};
use crate::error::{Error, Result};
use crate::oracle::{negacyclic_shift, s_generators, Subspace, VectorPair, DEFAULT_BUDGET};

/// Default bound on the state space dimension.
pub const DEFAULT_CAP: u64 = 243;
/// Per-entry tolerance for exact structural identities.
pub const STRUCTURAL_TOL: f64 = 1e-12;
/// Tolerance for aggregate residuals of the projector.
pub const AGGREGATE_TOL: f64 = 1e-9;
/// Tolerance on `trace(P)`.
pub const TRACE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug)]
pub struct PhaseRoot {
    p: u32,
}

impl PhaseRoot {
    pub fn new(p: u32) -> PhaseRoot {
        PhaseRoot { p }
    }

    /// `ω^e = e^{2πi e / p}`.
    pub fn omega(&self, e: u64) -> Complex64 {
        let r = (e % self.p as u64) as f64;
        Complex64::from_polar(1.0, 2.0 * PI * r / self.p as f64)
    }

    /// `ζ^e = ω^{2e}`.
    pub fn zeta(&self, e: u64) -> Complex64 {
        self.omega(2 * (e % self.p as u64))
    }
}

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseOperator {
    pub fn zeros(dim: usize) -> DenseOperator {
        DenseOperator {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> DenseOperator {
        let mut m = DenseOperator::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    fn add_at(&mut self, row: usize, col: usize, z: Complex64) {
        self.data[row * self.dim + col] += z;
    }

    pub fn mul(&self, other: &DenseOperator) -> DenseOperator {
        let d = self.dim;
        let mut out = DenseOperator::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let x = self.data[i * d + k];
                if x.norm_sqr() == 0.0 {
                    continue;
                }
                let row = &other.data[k * d..(k + 1) * d];
                let dst = &mut out.data[i * d..(i + 1) * d];
                for (o, &y) in dst.iter_mut().zip(row) {
                    *o += x * y;
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> DenseOperator {
        let d = self.dim;
        let mut out = DenseOperator::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.data[i * d + j].conj();
            }
        }
        out
    }

    pub fn scale(&self, z: Complex64) -> DenseOperator {
        DenseOperator {
            dim: self.dim,
            data: self.data.iter().map(|&x| x * z).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    /// `max |A_ij - B_ij|`.
    pub fn max_diff(&self, other: &DenseOperator) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// `max |[A, B]_ij|`.
    pub fn commutator_norm(&self, other: &DenseOperator) -> f64 {
        self.mul(other).max_diff(&other.mul(self))
    }
}

/// Index arithmetic on `F_p^n`.
#[derive(Clone, Copy, Debug)]
pub struct StateSpace {
    p: u32,
    n: usize,
    dim: usize,
}

impl StateSpace {
    pub fn new(p: u32, n: usize, cap: u64) -> Result<StateSpace> {
        let dim = (p as u64).checked_pow(n as u32).filter(|&d| d <= cap);
        match dim {
            Some(d) => Ok(StateSpace {
                p,
                n,
                dim: d as usize,
            }),
            None => Err(Error::CapExceeded {
                dim: format!("{p}^{n}"),
                cap,
            }),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn digits(&self, mut idx: usize) -> Vec<u32> {
        (0..self.n)
            .map(|_| {
                let d = (idx % self.p as usize) as u32;
                idx /= self.p as usize;
                d
            })
            .collect()
    }

    fn index(&self, x: &[u32]) -> usize {
        x.iter()
            .rev()
            .fold(0, |acc, &d| acc * self.p as usize + d as usize)
    }

    fn dot(&self, a: &[u32], b: &[u32]) -> u64 {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| x as u64 * y as u64)
            .sum::<u64>()
            % self.p as u64
    }

    /// Add `coeff · ω^{a·b} U_a V_b` into `acc`.
    fn accumulate(&self, acc: &mut DenseOperator, a: &[u32], b: &[u32], coeff: f64) {
        let ph = PhaseRoot::new(self.p);
        let base = ph.omega(self.dot(a, b)) * coeff;
        for col in 0..self.dim {
            let x = self.digits(col);
            let shifted: Vec<u32> = x
                .iter()
                .zip(a)
                .map(|(&xi, &ai)| (xi + ai) % self.p)
                .collect();
            acc.add_at(self.index(&shifted), col, base * ph.zeta(self.dot(b, &x)));
        }
    }

    /// `U_a V_b`, without the `ω^{a·b}` factor.
    pub fn weyl(&self, a: &[u32], b: &[u32]) -> Result<DenseOperator> {
        if a.len() != self.n || b.len() != self.n {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        let ph = PhaseRoot::new(self.p);
        let mut m = DenseOperator::zeros(self.dim);
        for col in 0..self.dim {
            let x = self.digits(col);
            let shifted: Vec<u32> = x
                .iter()
                .zip(a)
                .map(|(&xi, &ai)| (xi + ai) % self.p)
                .collect();
            m.add_at(self.index(&shifted), col, ph.zeta(self.dot(b, &x)));
        }
        Ok(m)
    }

    /// Permutation `|u⟩ -> |(-u_{n-1}, u_0, ..., u_{n-2})⟩`.
    pub fn negacyclic_matrix(&self) -> DenseOperator {
        let mut m = DenseOperator::zeros(self.dim);
        for col in 0..self.dim {
            let x = self.digits(col);
            let v = VectorPair { a: x.clone(), b: x };
            let nx = negacyclic_shift(&v, self.p).a;
            m.add_at(self.index(&nx), col, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// `(1/|S|) Σ_{(a,b)∈S} ω^{a·b} U_a V_b`.
    pub fn projector(&self, s: &Subspace, budget: u64) -> Result<DenseOperator> {
        let mut elems = Vec::new();
        let n = self.n;
        s.for_each(budget, |v| elems.push((v[..n].to_vec(), v[n..].to_vec())))?;
        let coeff = 1.0 / elems.len() as f64;
        let mut acc = DenseOperator::zeros(self.dim);
        for (a, b) in &elems {
            self.accumulate(&mut acc, a, b, coeff);
        }
        Ok(acc)
    }
}

/// `U_a V_b` for vectors over `F_p`, within the default cap.
pub fn weyl(p: u32, a: &[u32], b: &[u32]) -> Result<DenseOperator> {
    StateSpace::new(p, a.len(), DEFAULT_CAP)?.weyl(a, b)
}

pub fn negacyclic_matrix(p: u32, n: usize) -> Result<DenseOperator> {
    Ok(StateSpace::new(p, n, DEFAULT_CAP)?.negacyclic_matrix())
}

/// Stabilizer projector of a spec's `S`.
pub fn projector(spec: &CodeSpec, cap: u64) -> Result<DenseOperator> {
    let space = StateSpace::new(spec.p().get(), spec.n(), cap)?;
    let s = Subspace::span(spec.p().get(), spec.n(), &s_generators(spec)?);
    space.projector(&s, DEFAULT_BUDGET)
}

/// Residuals of `P` against `𝒩`.
#[derive(Clone, Debug, Serialize)]
pub struct NegacyclicResiduals {
    pub commutator: f64,
    /// Worst `𝒩 W 𝒩† - c·W(Na, Nb)` over sampled `(a, b)`, best phase `c`.
    pub conjugation: f64,
}

impl NegacyclicResiduals {
    pub fn passed(&self) -> bool {
        self.commutator < AGGREGATE_TOL && self.conjugation < STRUCTURAL_TOL
    }
}

/// Compare two monomial matrices up to a global phase.
fn diff_up_to_phase(x: &DenseOperator, y: &DenseOperator) -> f64 {
    let d = x.dim();
    let Some(pos) = (0..d * d).find(|&i| y.data[i].norm() > 0.5) else {
        return x.max_diff(y);
    };
    let c = x.data[pos] / y.data[pos];
    if (c.norm() - 1.0).abs() > STRUCTURAL_TOL {
        return f64::INFINITY;
    }
    x.max_diff(&y.scale(c))
}

pub fn negacyclic_residuals(
    space: &StateSpace,
    p_op: &DenseOperator,
    samples: usize,
    seed: u64,
) -> Result<NegacyclicResiduals> {
    let nm = space.negacyclic_matrix();
    let commutator = nm.commutator_norm(p_op);
    let nd = nm.adjoint();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut conjugation: f64 = 0.0;
    for _ in 0..samples {
        let a: Vec<u32> = (0..space.n).map(|_| rng.gen_range(0..space.p)).collect();
        let b: Vec<u32> = (0..space.n).map(|_| rng.gen_range(0..space.p)).collect();
        let w = space.weyl(&a, &b)?;
        let shifted = negacyclic_shift(&VectorPair::new(a, b)?, space.p);
        let target = space.weyl(&shifted.a, &shifted.b)?;
        let conj = nm.mul(&w).mul(&nd);
        conjugation = conjugation.max(diff_up_to_phase(&conj, &target));
    }
    Ok(NegacyclicResiduals {
        commutator,
        conjugation,
    })
}

pub fn check_negacyclic(spec: &CodeSpec, cap: u64) -> Result<NegacyclicResiduals> {
    let space = StateSpace::new(spec.p().get(), spec.n(), cap)?;
    let p_op = projector(spec, cap)?;
    negacyclic_residuals(&space, &p_op, 8, 0x5eed)
}

/// Everything reported by a simulator run on one spec.
#[derive(Clone, Debug, Serialize)]
pub struct SimulationReport {
    pub p: u32,
    pub n: usize,
    pub dim: usize,
    pub s_size: usize,
    pub idempotence: f64,
    pub hermiticity: f64,
    pub trace_re: f64,
    pub trace_im: f64,
    pub expected_trace: f64,
    pub summand_commutator: f64,
    pub negacyclic: NegacyclicResiduals,
    pub checks: Vec<Check>,
}

impl SimulationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Run all simulator checks against a spec.
pub fn simulate(spec: &CodeSpec, cap: u64, seed: u64) -> Result<SimulationReport> {
    let p = spec.p().get();
    let n = spec.n();
    let space = StateSpace::new(p, n, cap)?;
    let s = Subspace::span(p, n, &s_generators(spec)?);
    let p_op = space.projector(&s, DEFAULT_BUDGET)?;
    let idempotence = p_op.mul(&p_op).max_diff(&p_op);
    let hermiticity = p_op.adjoint().max_diff(&p_op);
    let trace = p_op.trace();
    let expected_trace = (p as f64).powi(spec.g().degree_or_zero() as i32);

    let basis = s.basis();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summand_commutator: f64 = 0.0;
    let ph = PhaseRoot::new(p);
    let summand = |v: &VectorPair| -> Result<DenseOperator> {
        let w = space.weyl(&v.a, &v.b)?;
        Ok(w.scale(ph.omega(space.dot(&v.a, &v.b))))
    };
    if !basis.is_empty() {
        for _ in 0..6 {
            let x = &basis[rng.gen_range(0..basis.len())];
            let y = &basis[rng.gen_range(0..basis.len())];
            summand_commutator = summand_commutator.max(summand(x)?.commutator_norm(&summand(y)?));
        }
    }
    let negacyclic = negacyclic_residuals(&space, &p_op, 6, seed ^ 0x9e37)?;

    let mut s_size = 1usize;
    for _ in 0..s.dim() {
        s_size *= p as usize;
    }
    let checks = vec![
        Check::with_detail(
            "P^2 = P",
            idempotence < AGGREGATE_TOL,
            format!("{idempotence:.3e}"),
        ),
        Check::with_detail(
            "P Hermitian",
            hermiticity < AGGREGATE_TOL,
            format!("{hermiticity:.3e}"),
        ),
        Check::with_detail(
            "trace(P) = p^deg g",
            (trace - Complex64::new(expected_trace, 0.0)).norm() < TRACE_TOL,
            format!("{:.9} vs {expected_trace}", trace.re),
        ),
        Check::with_detail(
            "stabilizer summands commute",
            summand_commutator < STRUCTURAL_TOL,
            format!("{summand_commutator:.3e}"),
        ),
        Check::with_detail(
            "N P = P N",
            negacyclic.commutator < AGGREGATE_TOL,
            format!("{:.3e}", negacyclic.commutator),
        ),
        Check::with_detail(
            "N W(a,b) N^dagger = W(Na,Nb) up to phase",
            negacyclic.conjugation < STRUCTURAL_TOL,
            format!("{:.3e}", negacyclic.conjugation),
        ),
    ];
    Ok(SimulationReport {
        p,
        n,
        dim: space.dim(),
        s_size,
        idempotence,
        hermiticity,
        trace_re: trace.re,
        trace_im: trace.im,
        expected_trace,
        summand_commutator,
        negacyclic,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::symplectic;

    #[test]
    fn phases_are_unit() {
        let ph = PhaseRoot::new(5);
        for e in 0..10 {
            assert!((ph.omega(e).norm() - 1.0).abs() < 1e-15);
        }
        assert!((ph.omega(5) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn weyl_identity_and_unitarity() {
        let id = weyl(3, &[0, 0], &[0, 0]).unwrap();
        assert_eq!(id.max_diff(&DenseOperator::identity(9)), 0.0);
        let w = weyl(3, &[1, 2], &[2, 1]).unwrap();
        let u = w.mul(&w.adjoint());
        assert!(u.max_diff(&DenseOperator::identity(9)) < STRUCTURAL_TOL);
    }

    #[test]
    fn commutation_matches_symplectic_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let v: Vec<u32> = (0..8).map(|_| rng.gen_range(0..3)).collect();
            let x = VectorPair::new(v[0..2].to_vec(), v[2..4].to_vec()).unwrap();
            let y = VectorPair::new(v[4..6].to_vec(), v[6..8].to_vec()).unwrap();
            let wx = weyl(3, &x.a, &x.b).unwrap();
            let wy = weyl(3, &y.a, &y.b).unwrap();
            let form = symplectic(&x, &y, 3).unwrap();
            let r = wx.commutator_norm(&wy);
            assert_eq!(r < STRUCTURAL_TOL, form == 0, "{x:?} {y:?}");
        }
    }

    #[test]
    fn negacyclic_matrix_basics() {
        let space = StateSpace::new(3, 2, DEFAULT_CAP).unwrap();
        let nm = space.negacyclic_matrix();
        // |(1,0)> goes to |(0,1)>
        assert_eq!(
            nm.get(space.index(&[0, 1]), space.index(&[1, 0])),
            Complex64::new(1.0, 0.0)
        );
        let mut pow = DenseOperator::identity(9);
        for _ in 0..4 {
            pow = pow.mul(&nm);
        }
        assert_eq!(pow.max_diff(&DenseOperator::identity(9)), 0.0);
        assert!(nm.mul(&nm.adjoint()).max_diff(&DenseOperator::identity(9)) < 1e-15);
    }

    #[test]
    fn trivial_subspace_gives_identity() {
        let space = StateSpace::new(3, 2, DEFAULT_CAP).unwrap();
        let s = Subspace::span(3, 2, &[]);
        let p_op = space.projector(&s, DEFAULT_BUDGET).unwrap();
        assert_eq!(p_op.max_diff(&DenseOperator::identity(9)), 0.0);
        let r = negacyclic_residuals(&space, &p_op, 2, 1).unwrap();
        assert_eq!(r.commutator, 0.0);
    }

    #[test]
    fn non_closed_subspace_breaks_commutation() {
        // span{(e_0, 0)} is isotropic but not closed under the shift
        let space = StateSpace::new(3, 2, DEFAULT_CAP).unwrap();
        let s = Subspace::span(3, 2, &[VectorPair::new(vec![1, 0], vec![0, 0]).unwrap()]);
        let p_op = space.projector(&s, DEFAULT_BUDGET).unwrap();
        assert!(p_op.mul(&p_op).max_diff(&p_op) < AGGREGATE_TOL);
        let r = negacyclic_residuals(&space, &p_op, 2, 1).unwrap();
        assert!(r.commutator > 0.1);
    }

    #[test]
    fn cap_refusal() {
        assert!(matches!(
            StateSpace::new(3, 6, DEFAULT_CAP),
            Err(Error::CapExceeded { .. })
        ));
    }
}
