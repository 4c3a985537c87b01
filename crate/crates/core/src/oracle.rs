//! Definition-level verification on `F_p^n × F_p^n`.
//!
//! Everything here works on raw coordinate vectors and never uses the
//! polynomial structure that the construction relies on, apart from reading
//! generators off a [`CodeSpec`]. That independence is the point: the oracle is
//! the check on the algebra.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use smallvec::SmallVec;

use crate::code::{bch_distance, classify, generator_in_extension, Check, CodeSpec};
use crate::error::{Error, Result};
use crate::field::ExtField;
use crate::poly::Poly;
use crate::ring::RingElem;

/// Default cap on the number of elements any single enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// An element `(a, b)` of `F_p^n × F_p^n`, coordinates in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VectorPair {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl VectorPair {
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Result<VectorPair> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        Ok(VectorPair { a, b })
    }

    pub fn zero(n: usize) -> VectorPair {
        VectorPair {
            a: vec![0; n],
            b: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0)
    }

    fn flat(&self) -> Vec<u32> {
        let mut v = self.a.clone();
        v.extend_from_slice(&self.b);
        v
    }

    fn from_flat(v: &[u32]) -> VectorPair {
        let n = v.len() / 2;
        VectorPair {
            a: v[..n].to_vec(),
            b: v[n..].to_vec(),
        }
    }
}

/// `a·d - b·c mod p`.
pub fn symplectic(u: &VectorPair, v: &VectorPair, p: u32) -> Result<u32> {
    if u.n() != v.n() {
        return Err(Error::LengthMismatch(u.n(), v.n()));
    }
    let p64 = p as u64;
    let mut ad = 0u64;
    let mut bc = 0u64;
    for j in 0..u.n() {
        ad = (ad + u.a[j] as u64 * v.b[j] as u64) % p64;
        bc = (bc + u.b[j] as u64 * v.a[j] as u64) % p64;
    }
    Ok(((ad + p64 - bc) % p64) as u32)
}

/// Number of positions `j` with `(a_j, b_j) != (0, 0)`.
pub fn joint_weight(u: &VectorPair) -> usize {
    u.a.iter()
        .zip(&u.b)
        .filter(|(&x, &y)| x != 0 || y != 0)
        .count()
}

/// The negacyclic shift `(u_0, ..., u_{n-1}) -> (-u_{n-1}, u_0, ..., u_{n-2})` on both halves.
pub fn negacyclic_shift(u: &VectorPair, p: u32) -> VectorPair {
    let shift = |v: &[u32]| -> Vec<u32> {
        let n = v.len();
        let mut out = Vec::with_capacity(n);
        out.push(if v[n - 1] == 0 { 0 } else { p - v[n - 1] });
        out.extend_from_slice(&v[..n - 1]);
        out
    };
    VectorPair {
        a: shift(&u.a),
        b: shift(&u.b),
    }
}

/// An `F_p`-subspace of `F_p^{2n}` held in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    p: u32,
    n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Reduced row echelon form of `rows` over `F_p`; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u32>>, p: u32) -> Vec<usize> {
    let width = rows.first().map_or(0, |r| r.len());
    let p64 = p as u64;
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][col], p) as u64;
        for v in rows[r].iter_mut() {
            *v = (*v as u64 * inv % p64) as u32;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col] as u64;
                for c in col..width {
                    let sub = f * rows[r][c] as u64 % p64;
                    rows[i][c] = ((rows[i][c] as u64 + p64 - sub) % p64) as u32;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

impl Subspace {
    pub fn span(p: u32, n: usize, generators: &[VectorPair]) -> Subspace {
        let mut rows: Vec<Vec<u32>> = generators.iter().map(|g| g.flat()).collect();
        let pivots = rref(&mut rows, p);
        Subspace { p, n, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Vec<VectorPair> {
        self.rows.iter().map(|r| VectorPair::from_flat(r)).collect()
    }

    pub fn contains(&self, u: &VectorPair) -> bool {
        let mut v = u.flat();
        let p64 = self.p as u64;
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let f = v[col] as u64;
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = ((*x as u64 + p64 - f * y as u64 % p64) % p64) as u32;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|b| self.contains(b))
    }

    /// Dimension of the projection onto the first (`second = false`) or second half.
    pub fn projection_rank(&self, second: bool) -> usize {
        let mut rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|r| {
                if second {
                    r[self.n..].to_vec()
                } else {
                    r[..self.n].to_vec()
                }
            })
            .collect();
        rref(&mut rows, self.p);
        rows.len()
    }

    /// `log_p` of the cardinality checked against the budget.
    fn check_budget(&self, budget: u64) -> Result<()> {
        let mut size: u128 = 1;
        for _ in 0..self.dim() {
            size = size.saturating_mul(self.p as u128);
        }
        if size > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: format!("{}^{}", self.p, self.dim()),
                budget,
            });
        }
        Ok(())
    }

    /// Visit every element once, in odometer order over the echelon basis.
    pub fn for_each(&self, budget: u64, mut visit: impl FnMut(&[u32])) -> Result<()> {
        self.check_budget(budget)?;
        let width = 2 * self.n;
        let p = self.p;
        let mut cur = vec![0u32; width];
        let mut digits = vec![0u32; self.dim()];
        visit(&cur);
        loop {
            // adding basis vector j; a wrap adds it the p-th time, returning to zero
            let mut j = 0;
            loop {
                if j == digits.len() {
                    return Ok(());
                }
                for (x, &y) in cur.iter_mut().zip(&self.rows[j]) {
                    let s = *x + y;
                    *x = if s >= p { s - p } else { s };
                }
                digits[j] += 1;
                if digits[j] < p {
                    break;
                }
                digits[j] = 0;
                j += 1;
            }
            visit(&cur);
        }
    }
}

type Key = SmallVec<[u64; 4]>;

fn pack(v: &[u32], p: u32) -> Key {
    let bits = 32 - (p - 1).leading_zeros();
    let per_word = (64 / bits) as usize;
    v.chunks(per_word)
        .map(|chunk| chunk.iter().fold(0u64, |acc, &d| (acc << bits) | d as u64))
        .collect()
}

/// A fully enumerated subspace.
pub struct Enumerated {
    pub space: Subspace,
    keys: HashSet<Key>,
}

impl Enumerated {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn contains(&self, u: &VectorPair) -> bool {
        self.keys.contains(&pack(&u.flat(), self.space.p))
    }

    fn contains_flat(&self, v: &[u32]) -> bool {
        self.keys.contains(&pack(v, self.space.p))
    }
}

fn enumerate(space: Subspace, budget: u64) -> Result<Enumerated> {
    let mut keys = HashSet::new();
    let p = space.p;
    space.for_each(budget, |v| {
        keys.insert(pack(v, p));
    })?;
    Ok(Enumerated { space, keys })
}

fn ring_coeffs(r: &RingElem) -> Vec<u32> {
    r.coeffs().iter().map(|c| c.base_value()).collect()
}

/// The spanning set `{(X^i g, X^i a g) : i < n}` of `S`.
pub fn s_generators(spec: &CodeSpec) -> Result<Vec<VectorPair>> {
    let fp = spec.prime_field();
    let n = spec.n();
    let (g, f) = spec.pair()?;
    (0..n)
        .map(|i| {
            let x = RingElem::x_pow(&fp, n, i)?;
            VectorPair::new(ring_coeffs(&(&x * &g)), ring_coeffs(&(&x * &f)))
        })
        .collect()
}

/// `{(X^i, a X^i)}_{i<n} ∪ {(0, X^j (X^n+1)/g)}_{j<deg g}`.
pub fn dual_basis(spec: &CodeSpec) -> Result<Vec<VectorPair>> {
    let fp = spec.prime_field();
    let n = spec.n();
    let a = RingElem::from_poly(spec.a(), n)?;
    let cofactor = Poly::x_pow_n_plus_one(&fp, n).div_exact(spec.g())?;
    let cof = RingElem::from_poly(&cofactor, n)?;
    let mut out = Vec::new();
    for i in 0..n {
        let x = RingElem::x_pow(&fp, n, i)?;
        out.push(VectorPair::new(ring_coeffs(&x), ring_coeffs(&(&a * &x)))?);
    }
    for j in 0..spec.g().degree_or_zero() {
        let x = RingElem::x_pow(&fp, n, j)?;
        out.push(VectorPair::new(vec![0; n], ring_coeffs(&(&x * &cof)))?);
    }
    Ok(out)
}

/// Enumerate `S`; its size must be `p^{n - deg g}`.
pub fn enumerate_s(spec: &CodeSpec, budget: u64) -> Result<Enumerated> {
    let space = Subspace::span(spec.p().get(), spec.n(), &s_generators(spec)?);
    enumerate(space, budget)
}

/// Enumerate `S^⊥` from the explicit basis, checking every member against the
/// generators of `S`.
pub fn enumerate_dual(spec: &CodeSpec, budget: u64) -> Result<Enumerated> {
    let p = spec.p().get();
    let gens = s_generators(spec)?;
    let space = Subspace::span(p, spec.n(), &dual_basis(spec)?);
    let mut keys = HashSet::new();
    let mut bad = None;
    space.for_each(budget, |v| {
        if bad.is_none() {
            let u = VectorPair::from_flat(v);
            if gens.iter().any(|s| symplectic(s, &u, p) != Ok(0)) {
                bad = Some(u);
            }
        }
        keys.insert(pack(v, p));
    })?;
    if let Some(u) = bad {
        return Err(Error::Invariant(format!(
            "dual element {:?}/{:?} is not orthogonal to S",
            u.a, u.b
        )));
    }
    Ok(Enumerated { space, keys })
}

/// `S^⊥` by solving the symplectic Gram system directly.
pub fn nullspace_dual(spec: &CodeSpec) -> Result<Subspace> {
    let p = spec.p().get();
    let n = spec.n();
    let s = Subspace::span(p, n, &s_generators(spec)?);
    // (c, d) is orthogonal to (a, b) iff a·d - b·c = 0, i.e. the row (-b | a) annihilates (c | d)
    let mut rows: Vec<Vec<u32>> = s
        .basis()
        .iter()
        .map(|v| {
            let mut r: Vec<u32> =
                v.b.iter()
                    .map(|&x| if x == 0 { 0 } else { p - x })
                    .collect();
            r.extend_from_slice(&v.a);
            r
        })
        .collect();
    let pivots = rref(&mut rows, p);
    let free: Vec<usize> = (0..2 * n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![0u32; 2 * n];
        v[fc] = 1;
        for (row, &pc) in rows.iter().zip(&pivots) {
            let x = row[fc];
            v[pc] = if x == 0 { 0 } else { p - x };
        }
        basis.push(VectorPair::from_flat(&v));
    }
    Ok(Subspace::span(p, n, &basis))
}

/// Exact minimum distance over `S^⊥ \ S`, with the BCH bound for comparison.
#[derive(Clone, Debug, Serialize)]
pub struct DistanceReport {
    /// `None` when `S^⊥ = S`.
    pub true_distance: Option<usize>,
    pub d_bch: u64,
    pub s_size: usize,
    pub dual_size: usize,
}

impl DistanceReport {
    pub fn bound_holds(&self) -> bool {
        self.true_distance.is_none_or(|d| d as u64 >= self.d_bch)
    }
}

pub fn true_min_distance(spec: &CodeSpec, budget: u64) -> Result<DistanceReport> {
    let s = enumerate_s(spec, budget)?;
    let dual = Subspace::span(spec.p().get(), spec.n(), &dual_basis(spec)?);
    let mut best: Option<usize> = None;
    let n = spec.n();
    let mut dual_size = 0usize;
    dual.for_each(budget, |v| {
        dual_size += 1;
        let w = (0..n).filter(|&j| v[j] != 0 || v[j + n] != 0).count();
        if best.is_none_or(|b| w < b) && !s.contains_flat(v) {
            best = Some(w);
        }
    })?;
    let d_bch = classify(spec).map(|r| r.d_bch).or_else(|_| bch_of(spec))?;
    Ok(DistanceReport {
        true_distance: best,
        d_bch,
        s_size: s.len(),
        dual_size,
    })
}

fn bch_of(spec: &CodeSpec) -> Result<u64> {
    let frame = crate::factor::RootFrame::for_degree(spec.p(), spec.n() as u64, spec.k())?;
    let fs = crate::factor::factor_in_frame(&frame, spec.k())?;
    bch_distance(
        &crate::code::root_exponent_set(&fs, spec.h())?,
        2 * spec.n() as u64,
    )
}

/// The structural ledger: shift closure, unique negacyclicity, isotropy,
/// CSS-exclusion witness, and dimension bookkeeping. Budget-free.
pub fn structural_checks(spec: &CodeSpec) -> Result<Vec<Check>> {
    let p = spec.p().get();
    let n = spec.n();
    let gens = s_generators(spec)?;
    let s = Subspace::span(p, n, &gens);
    let dual_gens = dual_basis(spec)?;
    let dual = Subspace::span(p, n, &dual_gens);
    let mut out = Vec::new();
    let s_closed = s
        .basis()
        .iter()
        .all(|v| s.contains(&negacyclic_shift(v, p)));
    out.push(Check::new("S closed under the negacyclic shift", s_closed));
    let d_closed = dual
        .basis()
        .iter()
        .all(|v| dual.contains(&negacyclic_shift(v, p)));
    out.push(Check::new(
        "dual closed under the negacyclic shift",
        d_closed,
    ));
    let unique = s.projection_rank(false) == s.dim();
    out.push(Check::new(
        "uniquely negacyclic: (0,b) in S forces b = 0",
        unique,
    ));
    let mut isotropic = true;
    for (i, u) in gens.iter().enumerate() {
        for v in &gens[i..] {
            if symplectic(u, v, p)? != 0 {
                isotropic = false;
            }
        }
    }
    out.push(Check::new("S totally isotropic on generators", isotropic));
    let expected_s = n - spec.g().degree_or_zero();
    out.push(Check::with_detail(
        "dim S = n - deg g",
        s.dim() == expected_s,
        format!("{} vs {expected_s}", s.dim()),
    ));
    let expected_dual = n + spec.g().degree_or_zero();
    out.push(Check::with_detail(
        "dim S^perp = n + deg g",
        dual.dim() == expected_dual,
        format!("{} vs {expected_dual}", dual.dim()),
    ));
    let orth = gens
        .iter()
        .all(|u| dual_gens.iter().all(|v| symplectic(u, v, p) == Ok(0)));
    out.push(Check::new("explicit dual basis orthogonal to S", orth));
    let null = nullspace_dual(spec)?;
    let agree = null.dim() == dual.dim() && null.contains_subspace(&dual);
    out.push(Check::new("explicit dual basis spans the nullspace", agree));
    out.push(Check::new(
        "S contained in S^perp",
        dual.contains_subspace(&s),
    ));
    let d_bch = bch_of(spec)?;
    if d_bch >= 2 {
        let no_x = s.projection_rank(true) == s.dim();
        out.push(Check::new(
            "CSS-exclusion witness: no nonzero (a,0) or (0,b) in S",
            unique && no_x,
        ));
    }
    Ok(out)
}

/// Sampling check that `S^⊥` is the ideal generated by `h` in `R(η)`
/// under `(u, v) -> u + ηv`. Only meaningful for `k = 2`.
pub fn dual_ideal_checks(spec: &CodeSpec, samples: usize, seed: u64) -> Result<Vec<Check>> {
    if spec.k() != 2 {
        return Err(Error::Unsupported(
            "the dual ideal check needs k = 2".into(),
        ));
    }
    let p = spec.p().get();
    let n = spec.n();
    let fk: ExtField = spec.coefficient_field();
    let dual_gens = dual_basis(spec)?;
    let dual = Subspace::span(p, n, &dual_gens);
    let gens = s_generators(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = spec.h();
    // forward: random dual members map into <h>
    let mut forward = true;
    for _ in 0..samples {
        let mut v = VectorPair::zero(n);
        for b in &dual_gens {
            let c: u32 = rng.gen_range(0..p);
            for j in 0..n {
                v.a[j] = (v.a[j] + c * b.a[j]) % p;
                v.b[j] = (v.b[j] + c * b.b[j]) % p;
            }
        }
        let coeffs = (0..n)
            .map(|j| fk.from_coords(&[v.a[j], v.b[j]]))
            .collect::<Result<Vec<_>>>()?;
        if !h.divides(&Poly::new(&fk, coeffs))? {
            forward = false;
        }
    }
    // backward: random multiples of h land in S^⊥
    let mut backward = true;
    let hr = RingElem::from_poly(h, n)?;
    for _ in 0..samples {
        let w = (0..n)
            .map(|_| fk.element_from_index(rng.gen_range(0..(p as u128 * p as u128))))
            .collect();
        let prod = &RingElem::from_poly(&Poly::new(&fk, w), n)? * &hr;
        let u = VectorPair::new(
            prod.coeffs().iter().map(|c| c.coords()[0]).collect(),
            prod.coeffs().iter().map(|c| c.coords()[1]).collect(),
        )?;
        let orthogonal = gens.iter().all(|s| symplectic(s, &u, p) == Ok(0));
        if !orthogonal || !dual.contains(&u) {
            backward = false;
        }
    }
    // |<h>| = p^{2(n - deg h)} against |S^⊥| = p^{dim}
    let ideal_dim = 2 * (n - h.degree_or_zero());
    out_checks(forward, backward, ideal_dim, dual.dim(), spec)
}

fn out_checks(
    forward: bool,
    backward: bool,
    ideal_dim: usize,
    dual_dim: usize,
    spec: &CodeSpec,
) -> Result<Vec<Check>> {
    let gcd = crate::code::dual_ideal_gcd(spec)?;
    let gh = spec.g().lift_prime_to(spec.h().field())?.mul(spec.h());
    let _ = generator_in_extension(spec)?;
    Ok(vec![
        Check::new("sampled dual members are multiples of h", forward),
        Check::new("sampled multiples of h lie in the dual", backward),
        Check::with_detail(
            "|<h>| = |S^perp|",
            ideal_dim == dual_dim,
            format!("p^{ideal_dim} vs p^{dual_dim}"),
        ),
        Check::with_detail("gcd(X^n+1, g+e*a*g) = g*h", gcd == gh, gcd.to_string()),
    ])
}
