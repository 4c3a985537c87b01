//! Assembly, validation and classification of t-Frobenius negacyclic codes
//! from a canonical factorization `g(X) · h(X, η)` of `X^n + 1`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{
    admissible_lengths, factor_in_frame, factor_xn_plus_one, is_admissible_t, FactorSet, RootFrame,
};
use crate::field::{num_integer_gcd, ExtField, PrimeModulus};
use crate::poly::{crt_combine, poly_gcd, Poly};
use crate::ring::RingElem;

/// Names of the conditions a spec must satisfy. Rejections quote them verbatim.
pub mod condition {
    pub const LENGTH: &str = "n | p^(km)+1 with odd quotient";
    pub const ALPHA: &str = "alpha != 0 in F_p";
    pub const G_DIVIDES: &str = "g is a monic divisor of X^n+1";
    pub const G_EVEN: &str = "g(-X)=g(X)";
    pub const G_FORCED: &str = "g contains every F_p-factor of degree not divisible by k";
    pub const H_EVEN: &str = "h(-X)=h(X)";
    pub const ORBIT: &str = "orbit condition: g * prod_i sigma^i(h) = X^n+1";
    pub const COPRIME: &str = "g, h, sigma(h), ..., sigma^(k-1)(h) pairwise coprime";
    pub const DEGREE: &str = "deg(g) + k*deg(h) = n";
    pub const A_CONGRUENCES: &str = "a = 1 mod g and a = sigma^(i+1)(alpha*e) mod sigma^i(h)";
    pub const A_BASE: &str = "a in F_p[X]";
    pub const A_EVEN: &str = "a(-X)=a(X)";
    pub const A_INV: &str = "a(X^-1)=a(X) in R";
    pub const ISOTROPY: &str = "g(X)f(X^-1)=f(X)g(X^-1) with f=ag";
}

/// One line of a verification ledger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &str, passed: bool) -> Check {
        Check {
            name: name.to_string(),
            passed,
            detail: None,
        }
    }

    pub fn with_detail(name: &str, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            passed,
            detail: Some(detail.into()),
        }
    }
}

/// A constructed code: the data `(p, n, k, m, g, h, α, a)`.
///
/// Specs returned by [`construct_code`] satisfy every condition in
/// [`condition`]; [`CodeSpec::unchecked`] exists for auditing foreign or
/// deliberately corrupted data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    p: PrimeModulus,
    n: usize,
    k: usize,
    m: u64,
    alpha: u32,
    g: Poly,
    h: Poly,
    a: Poly,
}

impl CodeSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn unchecked(
        p: PrimeModulus,
        n: usize,
        k: usize,
        m: u64,
        alpha: u32,
        g: Poly,
        h: Poly,
        a: Poly,
    ) -> CodeSpec {
        CodeSpec {
            p,
            n,
            k,
            m,
            alpha,
            g,
            h,
            a,
        }
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn m(&self) -> u64 {
        self.m
    }
    pub fn t(&self) -> u64 {
        self.k as u64 * self.m
    }
    pub fn alpha(&self) -> u32 {
        self.alpha
    }
    pub fn g(&self) -> &Poly {
        &self.g
    }
    pub fn h(&self) -> &Poly {
        &self.h
    }
    pub fn a(&self) -> &Poly {
        &self.a
    }

    /// Replace `a`, keeping everything else. For mutation tests.
    pub fn with_a(&self, a: Poly) -> CodeSpec {
        CodeSpec { a, ..self.clone() }
    }

    /// Replace `g`, keeping everything else. For mutation tests.
    pub fn with_g(&self, g: Poly) -> CodeSpec {
        CodeSpec { g, ..self.clone() }
    }

    pub fn prime_field(&self) -> ExtField {
        ExtField::prime(self.p)
    }

    pub fn coefficient_field(&self) -> ExtField {
        *self.h.field()
    }

    /// `(g, a·g)` in `R = F_p[X]/(X^n+1)`.
    pub fn pair(&self) -> Result<(RingElem, RingElem)> {
        let g = RingElem::from_poly(&self.g, self.n)?;
        let a = RingElem::from_poly(&self.a, self.n)?;
        let f = &a * &g;
        Ok((g, f))
    }

    pub fn to_file(&self) -> SpecFile {
        SpecFile {
            format_version: SPEC_FORMAT_VERSION,
            p: self.p.get() as u64,
            n: self.n,
            k: self.k,
            m: self.m,
            alpha: self.alpha as u64,
            modulus: self.coefficient_field().defining_polynomial().to_string(),
            g: self.g.to_string(),
            h: self.h.to_string(),
            a: Some(self.a.to_string()),
        }
    }
}

pub const SPEC_FORMAT_VERSION: u32 = 1;

/// Serialized form of a [`CodeSpec`]; polynomials use the text format.
///
/// `modulus` records the defining polynomial of `F_{p^k}` (the meaning of
/// `e`) and must match the one this crate derives for `(p, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecFile {
    pub format_version: u32,
    pub p: u64,
    pub n: usize,
    pub k: usize,
    pub m: u64,
    pub alpha: u64,
    pub modulus: String,
    pub g: String,
    pub h: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
}

impl SpecFile {
    fn fields(&self) -> Result<(PrimeModulus, ExtField, ExtField)> {
        if self.format_version != SPEC_FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported format_version {}",
                self.format_version
            )));
        }
        let p = PrimeModulus::new(self.p)?;
        let fp = ExtField::prime(p);
        let fk = ExtField::new(p, self.k)?;
        let expected = fk.defining_polynomial();
        let given = Poly::parse(&fp, &self.modulus)?;
        if given != expected.lift_prime_to(&fp)? {
            return Err(Error::InvalidModulus(format!(
                "modulus {} differs from the defining polynomial {expected}",
                self.modulus
            )));
        }
        Ok((p, fp, fk))
    }

    /// Rebuild through [`construct_code`]; a recorded `a` must match the rebuilt one.
    pub fn to_spec(&self) -> Result<CodeSpec> {
        let (p, fp, fk) = self.fields()?;
        let g = Poly::parse(&fp, &self.g)?;
        let h = Poly::parse(&fk, &self.h)?;
        let alpha = (self.alpha % self.p) as u32;
        let spec = construct_code(p, self.n, self.k, self.m, &g, &h, alpha)?;
        if let Some(a) = &self.a {
            if Poly::parse(&fp, a)? != spec.a {
                return Err(Error::Violation(condition::A_CONGRUENCES.to_string()));
            }
        }
        Ok(spec)
    }

    /// Parse without validation; `a` is rebuilt by CRT only when absent.
    pub fn to_unchecked(&self) -> Result<CodeSpec> {
        let (p, fp, fk) = self.fields()?;
        let g = Poly::parse(&fp, &self.g)?;
        let h = Poly::parse(&fk, &self.h)?;
        let alpha = (self.alpha % self.p) as u32;
        let a = match &self.a {
            Some(a) => Poly::parse(&fp, a)?,
            None => build_a(&g, &h, alpha, self.n)?,
        };
        Ok(CodeSpec::unchecked(
            p, self.n, self.k, self.m, alpha, g, h, a,
        ))
    }
}

impl Serialize for CodeSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CodeSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SpecFile::deserialize(d)?
            .to_spec()
            .map_err(serde::de::Error::custom)
    }
}

/// `α = -c_0^{-1}` for `k = 2`, else `1`.
pub fn default_alpha(p: PrimeModulus, k: usize) -> Result<u32> {
    if k != 2 {
        return Ok(1);
    }
    let fk = ExtField::new(p, 2)?;
    let c0 = ExtField::prime(p).from_int(fk.modulus()[0] as i64);
    Ok((-&c0.inv()?).base_value())
}

/// Which α values a search tries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaPolicy {
    /// [`default_alpha`].
    Default,
    /// Every nonzero residue.
    Sweep,
}

impl AlphaPolicy {
    pub fn values(self, p: PrimeModulus, k: usize) -> Result<Vec<u32>> {
        match self {
            AlphaPolicy::Default => Ok(vec![default_alpha(p, k)?]),
            AlphaPolicy::Sweep => Ok((1..p.get()).collect()),
        }
    }
}

fn x_n_plus_one(field: &ExtField, n: usize) -> Poly {
    Poly::x_pow_n_plus_one(field, n)
}

/// The residues of `a` over `F_{p^k}`: `1 mod g` and `σ^{i+1}(αη) mod σ^i(h)`.
fn residue_system(g: &Poly, h: &Poly, alpha: u32) -> Result<Vec<(Poly, Poly)>> {
    let fk = *h.field();
    let k = fk.degree();
    let g_k = g.lift_prime_to(&fk)?;
    let alpha_eta = &fk.from_int(alpha as i64) * &fk.eta();
    let mut residues = vec![(Poly::one(&fk), g_k)];
    for i in 0..k {
        let target = Poly::constant(alpha_eta.frobenius(i + 1));
        residues.push((target, h.frobenius(i)));
    }
    Ok(residues)
}

/// Solve the CRT system for `a` and return it over `F_p`, reduced below degree `n`.
///
/// With `h = 1` only the congruence `a ≡ 1 mod g` survives and `a = 1`.
/// Admissible inputs always yield `a` over `F_p` with both symmetries; for
/// other inputs the first symmetry that fails is named.
pub fn build_a(g: &Poly, h: &Poly, alpha: u32, n: usize) -> Result<Poly> {
    if h.degree() == Some(0) {
        return Ok(Poly::one(g.field()));
    }
    let a_k = crt_combine(&residue_system(g, h, alpha)?)?;
    let a = a_k
        .to_prime_field()
        .ok_or_else(|| Error::Violation(condition::A_BASE.to_string()))?;
    let a = a.rem(&x_n_plus_one(g.field(), n))?;
    let ring_a = RingElem::from_poly(&a, n)?;
    if a.substitute_neg() != a {
        return Err(Error::Violation(condition::A_EVEN.to_string()));
    }
    if ring_a.substitute_inv() != ring_a {
        return Err(Error::Violation(condition::A_INV.to_string()));
    }
    Ok(a)
}

fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Conditions on `(p, n, k, m, α, g, h)` that do not involve `a`.
fn structural_ledger(
    p: PrimeModulus,
    n: usize,
    k: usize,
    m: u64,
    alpha: u32,
    g: &Poly,
    h: &Poly,
) -> Result<Vec<Check>> {
    let pp = p.get() as u64;
    let fp = ExtField::prime(p);
    if !g.field().same(&fp) || h.field().characteristic() != p.get() || h.field().degree() != k {
        return Err(Error::Mismatch);
    }
    if k == 0 || m == 0 {
        return Err(Error::Unsupported("k and m must be positive".into()));
    }
    let two_n = 2 * n as u64;
    let mut out = Vec::new();
    let length_ok = n > 0
        && num_integer_gcd(n as u64, pp) == 1
        && pow_mod(pp, k as u64 * m, two_n) == n as u64 - 1;
    out.push(Check::new(condition::LENGTH, length_ok));
    out.push(Check::new(
        condition::ALPHA,
        !(alpha as u64).is_multiple_of(pp),
    ));
    if n == 0 || num_integer_gcd(n as u64, pp) != 1 {
        return Ok(out);
    }
    let xn1 = x_n_plus_one(&fp, n);
    let g_divides = g.is_monic() && g.divides(&xn1)?;
    out.push(Check::new(condition::G_DIVIDES, g_divides));
    out.push(Check::new(condition::G_EVEN, g.substitute_neg() == *g));
    let fs_p = factor_xn_plus_one(p, 1, n as u64)?;
    let mut forced_ok = true;
    for f in fs_p.factors() {
        let d = f.poly.degree().expect("factors are nonconstant");
        if d % k != 0 && !f.poly.divides(g)? {
            forced_ok = false;
        }
    }
    out.push(Check::new(condition::G_FORCED, forced_ok));
    out.push(Check::new(condition::H_EVEN, h.substitute_neg() == *h));
    let fk = *h.field();
    let g_k = g.lift_prime_to(&fk)?;
    let mut parts = vec![g_k];
    parts.extend((0..k).map(|i| h.frobenius(i)));
    let product = parts.iter().fold(Poly::one(&fk), |acc, x| acc.mul(x));
    let product_ok = product == x_n_plus_one(&fk, n);
    out.push(Check::new(condition::ORBIT, product_ok));
    if product_ok {
        // X^n+1 is squarefree when gcd(n, p) = 1, so its factors are coprime
        out.push(Check::with_detail(
            condition::COPRIME,
            true,
            "implied: X^n+1 is squarefree",
        ));
    } else {
        let mut coprime = parts.iter().all(|x| !x.is_zero());
        'outer: for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if !coprime || poly_gcd(&parts[i], &parts[j])?.degree() != Some(0) {
                    coprime = false;
                    break 'outer;
                }
            }
        }
        out.push(Check::new(condition::COPRIME, coprime));
    }
    let degree_ok = match (g.degree(), h.degree()) {
        (Some(dg), Some(dh)) => dg + k * dh == n,
        _ => false,
    };
    out.push(Check::new(condition::DEGREE, degree_ok));
    Ok(out)
}

/// Conditions on `a` and the generating pair.
fn a_ledger(spec: &CodeSpec) -> Result<Vec<Check>> {
    let n = spec.n;
    let fp = spec.prime_field();
    let a = &spec.a;
    let mut out = Vec::new();
    let congruences = if spec.h.degree() == Some(0) {
        a.sub(&Poly::one(&fp)).rem(&spec.g)?.is_zero()
    } else {
        let mut ok = true;
        for (residue, modulus) in residue_system(&spec.g, &spec.h, spec.alpha)? {
            let a_k = a.lift_prime_to(modulus.field())?;
            if !a_k.sub(&residue).rem(&modulus)?.is_zero() {
                ok = false;
            }
        }
        ok
    };
    out.push(Check::new(condition::A_CONGRUENCES, congruences));
    out.push(Check::new(
        condition::A_BASE,
        a.field().same(&fp) && a.degree().is_none_or(|d| d < n),
    ));
    out.push(Check::new(condition::A_EVEN, a.substitute_neg() == *a));
    let ring_a = RingElem::from_poly(a, n)?;
    out.push(Check::new(
        condition::A_INV,
        ring_a.substitute_inv() == ring_a,
    ));
    let (g, f) = spec.pair()?;
    let lhs = &g * &f.substitute_inv();
    let rhs = &f * &g.substitute_inv();
    out.push(Check::new(condition::ISOTROPY, lhs == rhs));
    Ok(out)
}

/// Every construction condition, evaluated without stopping at the first failure.
pub fn audit_spec(spec: &CodeSpec) -> Result<Vec<Check>> {
    let mut out = structural_ledger(spec.p, spec.n, spec.k, spec.m, spec.alpha, &spec.g, &spec.h)?;
    if out.iter().any(|c| c.name == condition::G_DIVIDES) {
        out.extend(a_ledger(spec)?);
    }
    Ok(out)
}

fn first_failure(checks: &[Check]) -> Result<()> {
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(Error::Violation(c.name.clone())),
        None => Ok(()),
    }
}

/// Build and validate a code. Any failing condition is reported by name.
pub fn construct_code(
    p: PrimeModulus,
    n: usize,
    k: usize,
    m: u64,
    g: &Poly,
    h: &Poly,
    alpha: u32,
) -> Result<CodeSpec> {
    construct_with_ledger(p, n, k, m, g, h, alpha).map(|(spec, _)| spec)
}

fn construct_with_ledger(
    p: PrimeModulus,
    n: usize,
    k: usize,
    m: u64,
    g: &Poly,
    h: &Poly,
    alpha: u32,
) -> Result<(CodeSpec, Vec<Check>)> {
    let mut checks = structural_ledger(p, n, k, m, alpha, g, h)?;
    first_failure(&checks)?;
    let a = build_a(g, h, alpha, n)?;
    let spec = CodeSpec::unchecked(p, n, k, m, alpha, g.clone(), h.clone(), a);
    let a_checks = a_ledger(&spec)?;
    first_failure(&a_checks)?;
    checks.extend(a_checks);
    Ok((spec, checks))
}

/// BCH distance of a set of odd exponents mod `2n`.
///
/// One plus the longest cyclic run `ℓ, ℓ+2, ...` contained in `u·E`,
/// maximized over units `u`.
pub fn bch_distance(exponents: &[u64], two_n: u64) -> Result<u64> {
    if two_n < 2 || !two_n.is_multiple_of(2) {
        return Err(Error::InvalidModulus(format!(
            "{two_n} is not a positive even modulus"
        )));
    }
    if let Some(&e) = exponents.iter().find(|&&e| e % 2 == 0) {
        return Err(Error::EvenExponent(e));
    }
    let n = (two_n / 2) as usize;
    let exps: BTreeSet<u64> = exponents.iter().map(|e| e % two_n).collect();
    if exps.is_empty() {
        return Ok(1);
    }
    if exps.len() == n {
        return Ok(n as u64 + 1);
    }
    let mut best = 0usize;
    let mut hit = vec![false; n];
    for u in (1..two_n).step_by(2) {
        if num_integer_gcd(u, two_n) != 1 {
            continue;
        }
        hit.iter_mut().for_each(|x| *x = false);
        for &e in &exps {
            let v = (e as u128 * u as u128 % two_n as u128) as usize;
            hit[v / 2] = true;
        }
        // start scanning just after a miss so runs do not wrap
        let start = hit
            .iter()
            .position(|&x| !x)
            .expect("not every residue is hit");
        let mut run = 0;
        for i in 1..=n {
            if hit[(start + i) % n] {
                run += 1;
                best = best.max(run);
            } else {
                run = 0;
            }
        }
    }
    Ok(best as u64 + 1)
}

/// Exponents of the roots of `h`, read off from the factors of `X^n+1` dividing it.
pub fn root_exponent_set(fs: &FactorSet, h: &Poly) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for f in fs.factors() {
        if f.poly.divides(h)? {
            out.extend_from_slice(f.coset.members());
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Whether `η(g+ηag) = -c_0·a·(g+ηag)` in `R(η)`; only meaningful for `k = 2`.
pub fn ideal_closure_identity(spec: &CodeSpec) -> Result<bool> {
    let fk = spec.coefficient_field();
    let n = spec.n;
    let u = generator_in_extension(spec)?;
    let a = RingElem::from_poly(&spec.a.lift_prime_to(&fk)?, n)?;
    let c0 = fk.from_int(fk.modulus()[0] as i64);
    let lhs = u.scale(&fk.eta());
    let rhs = (&a * &u).scale(&-&c0);
    Ok(lhs == rhs)
}

/// `g + η·a·g` in `R(η)`.
pub fn generator_in_extension(spec: &CodeSpec) -> Result<RingElem> {
    let fk = spec.coefficient_field();
    let n = spec.n;
    let g = RingElem::from_poly(&spec.g.lift_prime_to(&fk)?, n)?;
    let a = RingElem::from_poly(&spec.a.lift_prime_to(&fk)?, n)?;
    Ok(&g + &(&a * &g).scale(&fk.eta()))
}

/// `gcd(X^n+1, g+ηag)` over `F_{p^k}`.
pub fn dual_ideal_gcd(spec: &CodeSpec) -> Result<Poly> {
    let fk = spec.coefficient_field();
    let u = generator_in_extension(spec)?.to_poly();
    poly_gcd(&x_n_plus_one(&fk, spec.n), &u)
}

/// Parameters and flags of a code, plus the ledger that produced them.
#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub p: u32,
    pub n: usize,
    pub k_dim: usize,
    pub d_bch: u64,
    pub linear: bool,
    pub css_excluded: bool,
    pub root_exponents: Vec<u64>,
    pub spec: CodeSpec,
    pub verification: Vec<Check>,
}

impl CodeReport {
    pub fn row(&self) -> TableRow {
        TableRow {
            p: self.p,
            n: self.n,
            k_dim: self.k_dim,
            d: self.d_bch,
            linear: self.linear,
        }
    }
}

/// Compute parameters and flags for a spec.
pub fn classify(spec: &CodeSpec) -> Result<CodeReport> {
    let frame = RootFrame::for_degree(spec.p, spec.n as u64, spec.k)?;
    let fs = factor_in_frame(&frame, spec.k)?;
    let exps = root_exponent_set(&fs, &spec.h)?;
    classify_with(spec, exps, audit_spec(spec)?)
}

fn classify_with(
    spec: &CodeSpec,
    exps: Vec<u64>,
    mut verification: Vec<Check>,
) -> Result<CodeReport> {
    let d_bch = bch_distance(&exps, 2 * spec.n as u64)?;
    let linear = if spec.k == 2 {
        let identity = ideal_closure_identity(spec)?;
        verification.push(Check::new(
            "ideal-closure identity e(g+eag) = -c_0 a (g+eag)",
            identity,
        ));
        // k = 2 with h(-X)=h(X) forces t = 2m even
        verification.push(Check::new("t even when k = 2", spec.t().is_multiple_of(2)));
        identity
    } else {
        false
    };
    let k_dim = spec.g.degree().expect("g divides X^n+1");
    let uniquely_negacyclic = spec.g.substitute_neg() == spec.g;
    Ok(CodeReport {
        p: spec.p.get(),
        n: spec.n,
        k_dim,
        d_bch,
        linear,
        css_excluded: uniquely_negacyclic && d_bch >= 2,
        root_exponents: exps,
        spec: spec.clone(),
        verification,
    })
}

/// Admissible `g`: products of `F_p`-factors containing every factor of degree
/// not divisible by `k`, with `g(-X) = g(X)`. Sorted by degree, then text.
pub fn admissible_g_list(fs_p: &FactorSet, k: usize) -> Result<Vec<Poly>> {
    let options = g_options(fs_p, k);
    let mut out: Vec<Poly> = options
        .into_iter()
        .map(|members| product(fs_p, &members))
        .filter(|g| g.substitute_neg() == *g)
        .collect();
    out.sort_by_key(|g| (g.degree(), g.to_string()));
    out.dedup();
    Ok(out)
}

fn product(fs: &FactorSet, members: &[usize]) -> Poly {
    members.iter().fold(Poly::one(fs.field()), |acc, &i| {
        acc.mul(&fs.factors()[i].poly)
    })
}

/// Negation classes of factor indices, each sorted, in order of first member.
fn negation_classes(fs: &FactorSet) -> Vec<Vec<usize>> {
    let mut seen = vec![false; fs.len()];
    let mut out = Vec::new();
    for i in 0..fs.len() {
        if seen[i] {
            continue;
        }
        let j = fs.negation_index(i);
        seen[i] = true;
        seen[j] = true;
        out.push(if i == j { vec![i] } else { vec![i, j] });
    }
    out
}

/// Factor-index sets of every negation-closed `g` containing the forced factors.
fn g_options(fs_p: &FactorSet, k: usize) -> Vec<Vec<usize>> {
    let (forced, free): (Vec<_>, Vec<_>) = negation_classes(fs_p).into_iter().partition(|c| {
        !fs_p.factors()[c[0]]
            .poly
            .degree()
            .expect("nonconstant")
            .is_multiple_of(k)
    });
    let base: Vec<usize> = forced.into_iter().flatten().collect();
    (0u64..1 << free.len())
        .map(|mask| {
            let mut members = base.clone();
            for (b, class) in free.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    members.extend_from_slice(class);
                }
            }
            members.sort_unstable();
            members
        })
        .collect()
}

/// Every admissible `h` for a given `g`, with the exponent set of its roots.
fn h_options(fs_p: &FactorSet, fs_k: &FactorSet, g_members: &[usize]) -> Vec<(Poly, Vec<u64>)> {
    let k = fs_k.k();
    let in_g: BTreeSet<usize> = g_members.iter().copied().collect();
    let remaining: Vec<usize> = (0..fs_k.len())
        .filter(|&j| {
            let rep = fs_k.factors()[j].coset.representative();
            let parent = fs_p
                .index_containing(rep)
                .expect("F_p cosets cover the odd residues");
            !in_g.contains(&parent)
        })
        .collect();
    // group σ-orbits, keyed by smallest member
    let mut orbits: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &j in &remaining {
        let orbit = fs_k.orbit_indices(j);
        let key = *orbit.iter().min().expect("orbit nonempty");
        orbits.entry(key).or_insert(orbit);
    }
    if orbits.values().any(|o| o.len() != k) {
        return Vec::new();
    }
    // alternatives per negation class of orbits
    let orbit_of: BTreeMap<usize, usize> = orbits
        .iter()
        .flat_map(|(&key, o)| o.iter().map(move |&j| (j, key)))
        .collect();
    let mut alternatives: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut done = BTreeSet::new();
    for (&key, orbit) in &orbits {
        if done.contains(&key) {
            continue;
        }
        let partner = orbit_of[&fs_k.negation_index(orbit[0])];
        done.insert(key);
        done.insert(partner);
        let alts: Vec<Vec<usize>> = if partner == key {
            orbit
                .iter()
                .filter(|&&j| fs_k.negation_index(j) == j)
                .map(|&j| vec![j])
                .collect()
        } else {
            orbit
                .iter()
                .map(|&j| vec![j, fs_k.negation_index(j)])
                .collect()
        };
        if alts.is_empty() {
            return Vec::new();
        }
        alternatives.push(alts);
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; alternatives.len()];
    loop {
        let members: Vec<usize> = idx
            .iter()
            .zip(&alternatives)
            .flat_map(|(&i, alts)| alts[i].iter().copied())
            .collect();
        let h = product(fs_k, &members);
        if h.substitute_neg() == h {
            let mut exps: Vec<u64> = members
                .iter()
                .flat_map(|&j| fs_k.factors()[j].coset.members().iter().copied())
                .collect();
            exps.sort_unstable();
            out.push((h, exps));
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < alternatives[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Admissible `h` for `g`: one factor from each full σ-orbit of `(X^n+1)/g`,
/// filtered by `h(-X) = h(X)`. Empty when some orbit is shorter than `k`.
pub fn admissible_h_list(fs_p: &FactorSet, fs_k: &FactorSet, g: &Poly) -> Result<Vec<Poly>> {
    let members: Vec<usize> = (0..fs_p.len())
        .filter(|&i| fs_p.factors()[i].poly.divides(g).unwrap_or(false))
        .collect();
    if product(fs_p, &members) != *g {
        return Err(Error::Violation(condition::G_DIVIDES.to_string()));
    }
    let mut out: Vec<Poly> = h_options(fs_p, fs_k, &members)
        .into_iter()
        .map(|(h, _)| h)
        .collect();
    out.sort_by_key(|h| h.to_string());
    Ok(out)
}

/// Bounds for [`search`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    pub p: u64,
    pub n_max: usize,
    /// Largest `t` considered; `None` means only the least admissible `t` of each length.
    pub t_cap: Option<u64>,
    /// Field degrees to try; `None` means every divisor `> 1` of the admissible `t`.
    pub k_set: Option<Vec<usize>>,
    pub alpha_policy: AlphaPolicy,
    /// Allow `k = 1`, where `η = 0` and the construction degenerates.
    pub allow_k1: bool,
}

impl SearchConfig {
    pub fn new(p: u64, n_max: usize) -> SearchConfig {
        SearchConfig {
            p,
            n_max,
            t_cap: None,
            k_set: None,
            alpha_policy: AlphaPolicy::Default,
            allow_k1: false,
        }
    }
}

/// A `(n, k)` pair the search could not process, with the reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub n: usize,
    pub k: usize,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub reports: Vec<CodeReport>,
    pub skipped: Vec<Skipped>,
}

/// `(k, m)` pairs for a length: `k` divides an admissible `t <= t_cap`, `m = t/k` minimal.
fn degree_plan(cfg: &SearchConfig, p: PrimeModulus, n: usize) -> Result<Vec<(usize, u64)>> {
    let Some(t_min) = admissible_lengths(p, n as u64)? else {
        return Ok(Vec::new());
    };
    let cap = cfg.t_cap.unwrap_or(t_min);
    let ts: Vec<u64> = (t_min..=cap)
        .filter(|&t| is_admissible_t(t_min, t))
        .collect();
    let mut ks: BTreeSet<usize> = BTreeSet::new();
    match &cfg.k_set {
        Some(set) => ks.extend(set.iter().copied()),
        None => {
            for &t in &ts {
                ks.extend((2..=t as usize).filter(|d| (t as usize).is_multiple_of(*d)));
            }
            if cfg.allow_k1 {
                ks.insert(1);
            }
        }
    }
    Ok(ks
        .into_iter()
        .filter(|&k| k >= 2 || cfg.allow_k1)
        .filter_map(|k| {
            ts.iter()
                .find(|&&t| t % k as u64 == 0)
                .map(|&t| (k, t / k as u64))
        })
        .collect())
}

struct Candidate {
    n: usize,
    k: usize,
    m: u64,
    alpha: u32,
    g: Poly,
    h: Poly,
    exps: Vec<u64>,
}

/// Enumerate and classify every admissible code within the bounds.
///
/// Reports are sorted by `(n, k_dim, d_bch, linear)` and then by the
/// spec text, so output is deterministic.
pub fn search(cfg: &SearchConfig) -> Result<SearchOutcome> {
    let p = PrimeModulus::new(cfg.p)?;
    let mut candidates = Vec::new();
    let mut skipped = Vec::new();
    for n in (2..=cfg.n_max).step_by(2) {
        if num_integer_gcd(n as u64, cfg.p) != 1 {
            continue;
        }
        for (k, m) in degree_plan(cfg, p, n)? {
            match candidates_for(p, n, k, m, cfg.alpha_policy) {
                Ok(mut c) => candidates.append(&mut c),
                Err(e) => skipped.push(Skipped {
                    n,
                    k,
                    reason: e.to_string(),
                }),
            }
        }
    }
    let results: Vec<Result<CodeReport>> = candidates
        .par_iter()
        .map(|c| {
            let (spec, ledger) = construct_with_ledger(p, c.n, c.k, c.m, &c.g, &c.h, c.alpha)?;
            classify_with(&spec, c.exps.clone(), ledger)
        })
        .collect();
    let mut reports = Vec::with_capacity(results.len());
    for (c, r) in candidates.iter().zip(results) {
        match r {
            Ok(rep) => reports.push(rep),
            // the enumeration only yields admissible pairs, so rejections are bugs
            Err(e) => {
                return Err(Error::Invariant(format!(
                    "enumerated n={} k={} g={} h={} rejected: {e}",
                    c.n, c.k, c.g, c.h
                )))
            }
        }
    }
    sort_reports(&mut reports);
    Ok(SearchOutcome { reports, skipped })
}

fn sort_reports(reports: &mut [CodeReport]) {
    reports.sort_by_cached_key(|r| {
        (
            r.n,
            r.k_dim,
            r.d_bch,
            r.linear,
            r.spec.k,
            r.spec.alpha,
            r.spec.g.to_string(),
            r.spec.h.to_string(),
        )
    });
}

fn candidates_for(
    p: PrimeModulus,
    n: usize,
    k: usize,
    m: u64,
    policy: AlphaPolicy,
) -> Result<Vec<Candidate>> {
    let frame = RootFrame::for_degree(p, n as u64, k)?;
    let fs_p = factor_in_frame(&frame, 1)?;
    let fs_k = factor_in_frame(&frame, k)?;
    let alphas = policy.values(p, k)?;
    let mut out = Vec::new();
    for members in g_options(&fs_p, k) {
        let g = product(&fs_p, &members);
        if g.substitute_neg() != g {
            continue;
        }
        for (h, exps) in h_options(&fs_p, &fs_k, &members) {
            for &alpha in &alphas {
                out.push(Candidate {
                    n,
                    k,
                    m,
                    alpha,
                    g: g.clone(),
                    h: h.clone(),
                    exps: exps.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// A parameter row `[[n, k_dim, d]]_p` with its linearity flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TableRow {
    pub p: u32,
    pub n: usize,
    pub k_dim: usize,
    pub d: u64,
    pub linear: bool,
}

/// Distinct parameter rows, sorted by `(n, k_dim, d, linear)`.
pub fn table_rows(reports: &[CodeReport]) -> Vec<TableRow> {
    let set: BTreeSet<(usize, usize, u64, bool, u32)> = reports
        .iter()
        .map(|r| (r.n, r.k_dim, r.d_bch, r.linear, r.p))
        .collect();
    set.into_iter()
        .map(|(n, k_dim, d, linear, p)| TableRow {
            p,
            n,
            k_dim,
            d,
            linear,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn worked() -> CodeSpec {
        let p = pm(3);
        let fp = ExtField::prime(p);
        let f9 = ExtField::new(p, 2).unwrap();
        let g = Poly::parse(&fp, "X^2+1").unwrap();
        let h = Poly::parse(&f9, "X^4+(2e+1)X^2+1").unwrap();
        construct_code(p, 10, 2, 1, &g, &h, default_alpha(p, 2).unwrap()).unwrap()
    }

    #[test]
    fn default_alpha_values() {
        assert_eq!(default_alpha(pm(3), 2).unwrap(), 2);
        // F_25 is defined by Y^2+2, so -c_0^{-1} = -3 = 2
        assert_eq!(default_alpha(pm(5), 2).unwrap(), 2);
        assert_eq!(default_alpha(pm(5), 3).unwrap(), 1);
    }

    #[test]
    fn bch_examples() {
        assert_eq!(bch_distance(&[9, 11], 20).unwrap(), 3);
        assert_eq!(bch_distance(&[], 20).unwrap(), 1);
        assert_eq!(bch_distance(&[1, 5], 8).unwrap(), 2);
        assert_eq!(bch_distance(&[1, 3, 5, 7], 8).unwrap(), 5);
        assert_eq!(bch_distance(&[2], 8), Err(Error::EvenExponent(2)));
        // the run may wrap past 2n
        assert_eq!(bch_distance(&[19, 1], 20).unwrap(), 3);
    }

    #[test]
    fn worked_example_parameters() {
        let spec = worked();
        assert!(spec
            .a()
            .sub(&Poly::one(spec.g().field()))
            .rem(spec.g())
            .unwrap()
            .is_zero());
        let r = classify(&spec).unwrap();
        assert_eq!((r.n, r.k_dim, r.d_bch), (10, 2, 3));
        assert!(r.linear);
        assert!(r.css_excluded);
        assert!(
            r.verification.iter().all(|c| c.passed),
            "{:?}",
            r.verification
        );
        let gh = spec
            .g()
            .lift_prime_to(spec.h().field())
            .unwrap()
            .mul(spec.h());
        assert_eq!(dual_ideal_gcd(&spec).unwrap(), gh);
    }

    #[test]
    fn conjugate_h_gives_same_parameters() {
        let spec = worked();
        let h2 = spec.h().frobenius(1);
        let other = construct_code(spec.p(), 10, 2, 1, spec.g(), &h2, spec.alpha()).unwrap();
        let (a, b) = (classify(&spec).unwrap(), classify(&other).unwrap());
        assert_eq!((a.k_dim, a.d_bch, a.linear), (b.k_dim, b.d_bch, b.linear));
    }

    #[test]
    fn degenerate_spec() {
        let p = pm(3);
        let fp = ExtField::prime(p);
        let f9 = ExtField::new(p, 2).unwrap();
        let g = Poly::x_pow_n_plus_one(&fp, 10);
        let spec = construct_code(p, 10, 2, 1, &g, &Poly::one(&f9), 2).unwrap();
        assert!(spec.a().is_one());
        let r = classify(&spec).unwrap();
        assert_eq!((r.k_dim, r.d_bch, r.css_excluded), (10, 1, false));
    }

    #[test]
    fn named_rejections() {
        let p = pm(3);
        let fp = ExtField::prime(p);
        let f9 = ExtField::new(p, 2).unwrap();
        let h = Poly::parse(&f9, "X^4+(2e+1)X^2+1").unwrap();
        let odd_g = Poly::parse(&fp, "X^4+X^3+2X+1").unwrap();
        assert_eq!(
            construct_code(p, 10, 2, 1, &odd_g, &h, 2),
            Err(Error::Violation(condition::G_EVEN.into()))
        );
        let g = Poly::parse(&fp, "X^2+1").unwrap();
        let partial = Poly::parse(&f9, "X^2+(e+2)X+2").unwrap();
        assert_eq!(
            construct_code(p, 10, 2, 1, &g, &partial, 2),
            Err(Error::Violation(condition::H_EVEN.into()))
        );
        let squared = h.mul(&Poly::parse(&f9, "X^2+1").unwrap());
        assert_eq!(
            construct_code(p, 10, 2, 1, &g, &squared, 2),
            Err(Error::Violation(condition::ORBIT.into()))
        );
        assert_eq!(
            construct_code(p, 10, 2, 1, &g, &h, 0),
            Err(Error::Violation(condition::ALPHA.into()))
        );
        assert_eq!(
            construct_code(p, 10, 2, 2, &g, &h, 2),
            Err(Error::Violation(condition::LENGTH.into()))
        );
    }

    #[test]
    fn g_lists() {
        let fs = factor_xn_plus_one(pm(3), 1, 10).unwrap();
        let gs: Vec<String> = admissible_g_list(&fs, 2)
            .unwrap()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert!(gs.contains(&"X^2+1".to_string()));
        assert!(gs.contains(&"X^10+1".to_string()));
        let fs4 = factor_xn_plus_one(pm(3), 1, 4).unwrap();
        let gs4: Vec<String> = admissible_g_list(&fs4, 2)
            .unwrap()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(gs4, ["1", "X^4+1"]);
    }

    #[test]
    fn h_lists() {
        let p = pm(3);
        let frame = RootFrame::for_degree(p, 10, 2).unwrap();
        let fs_p = factor_in_frame(&frame, 1).unwrap();
        let fs_k = factor_in_frame(&frame, 2).unwrap();
        let g = Poly::parse(fs_p.field(), "X^2+1").unwrap();
        let hs: Vec<String> = admissible_h_list(&fs_p, &fs_k, &g)
            .unwrap()
            .iter()
            .map(|h| h.to_string())
            .collect();
        assert!(hs.contains(&"X^4+(2e+1)*X^2+1".to_string()), "{hs:?}");
        let full = Poly::x_pow_n_plus_one(fs_p.field(), 10);
        let only: Vec<String> = admissible_h_list(&fs_p, &fs_k, &full)
            .unwrap()
            .iter()
            .map(|h| h.to_string())
            .collect();
        assert_eq!(only, ["1"]);

        let frame4 = RootFrame::for_degree(p, 4, 2).unwrap();
        let fs_p4 = factor_in_frame(&frame4, 1).unwrap();
        let fs_k4 = factor_in_frame(&frame4, 2).unwrap();
        let hs4: Vec<String> = admissible_h_list(&fs_p4, &fs_k4, &Poly::one(fs_p4.field()))
            .unwrap()
            .iter()
            .map(|h| h.to_string())
            .collect();
        assert_eq!(hs4, ["X^2+2e", "X^2+e"]);
    }

    #[test]
    fn small_search_has_no_distance_three() {
        let out = search(&SearchConfig::new(3, 8)).unwrap();
        assert!(out.reports.iter().all(|r| r.d_bch < 3));
    }

    #[test]
    fn spec_file_round_trip() {
        let spec = worked();
        let file = spec.to_file();
        assert_eq!(file.to_spec().unwrap(), spec);
        let mut bad = file.clone();
        bad.modulus = "X^2+2X+2".into();
        assert!(matches!(bad.to_spec(), Err(Error::InvalidModulus(_))));
    }
}
