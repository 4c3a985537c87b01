//! Factorization of `X^n + 1` over `F_p` and `F_{p^k}` through cyclotomic
//! cosets of odd residues mod `2n`.
//!
//! Every root of `X^n + 1` is `β^e` for an odd `e` once a primitive `2n`-th
//! root of unity `β` is fixed, so each factor carries the exponent set of its
//! roots. That bookkeeping drives both the Frobenius orbit computations and
//! the BCH distance.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{
    multiplicative_order, num_integer_gcd, Embedding, ExtField, FieldElem, PrimeModulus,
};
use crate::memo::Memo;
use crate::poly::Poly;

/// Least `t >= 1` with `n | p^t + 1` and `(p^t + 1)/n` odd.
///
/// The condition is equivalent to `p^t ≡ n - 1 (mod 2n)`, and `p^t mod 2n`
/// is periodic with period `ord_{2n}(p)`, so one period suffices. All valid
/// `t` are the odd multiples of the returned value.
pub fn admissible_lengths(p: PrimeModulus, n: u64) -> Result<Option<u64>> {
    let pp = p.get() as u64;
    if n == 0 || num_integer_gcd(n, pp) != 1 {
        return Err(Error::NotCoprimeToP { n, p: pp });
    }
    let two_n = 2 * n;
    let period = multiplicative_order(pp, two_n).expect("p is odd and coprime to n");
    let target = (n - 1) % two_n;
    let mut x = 1u64;
    for t in 1..=period {
        x = (x as u128 * pp as u128 % two_n as u128) as u64;
        if x == target {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Whether `t` is admissible given the least admissible `t_min`.
pub fn is_admissible_t(t_min: u64, t: u64) -> bool {
    t >= t_min && t.is_multiple_of(t_min) && (t / t_min) % 2 == 1
}

/// A `q`-cyclotomic coset of odd residues mod `2n`, members sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Coset {
    members: Vec<u64>,
}

impl Coset {
    pub fn from_members(mut members: Vec<u64>) -> Coset {
        members.sort_unstable();
        members.dedup();
        Coset { members }
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn representative(&self) -> u64 {
        self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: u64) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    /// `{m * e mod modulus}`.
    pub fn scaled(&self, m: u64, modulus: u64) -> Coset {
        Coset::from_members(
            self.members
                .iter()
                .map(|&e| (e as u128 * m as u128 % modulus as u128) as u64)
                .collect(),
        )
    }
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Partition of the odd residues mod `two_n` into `q`-cyclotomic cosets, sorted
/// by minimal representative.
pub fn odd_cosets(q: &BigUint, two_n: u64) -> Result<Vec<Coset>> {
    if two_n < 2 || !two_n.is_multiple_of(2) {
        return Err(Error::InvalidModulus(format!(
            "{two_n} is not a positive even modulus"
        )));
    }
    let qm = (q % BigUint::from(two_n))
        .to_u64_digits()
        .first()
        .copied()
        .unwrap_or(0);
    if num_integer_gcd(qm, two_n) != 1 {
        return Err(Error::InvalidModulus(format!(
            "q is not coprime to {two_n}"
        )));
    }
    let mut seen = vec![false; two_n as usize];
    let mut out = Vec::new();
    for start in (1..two_n).step_by(2) {
        if seen[start as usize] {
            continue;
        }
        let mut members = Vec::new();
        let mut e = start;
        while !seen[e as usize] {
            seen[e as usize] = true;
            members.push(e);
            e = (e as u128 * qm as u128 % two_n as u128) as u64;
        }
        out.push(Coset::from_members(members));
    }
    Ok(out)
}

/// `{e + n mod 2n}`: the exponents of the roots of `f(-X)`.
pub fn negate_coset(c: &Coset, two_n: u64) -> Coset {
    let n = two_n / 2;
    Coset::from_members(c.members.iter().map(|&e| (e + n) % two_n).collect())
}

/// A fixed primitive `2n`-th root of unity in a splitting field of `X^n + 1`.
#[derive(Debug)]
pub struct RootFrame {
    p: PrimeModulus,
    n: u64,
    big: ExtField,
    beta: FieldElem,
    beta_powers: Vec<FieldElem>,
}

type FrameKey = (u32, u64, usize);
static FRAMES: OnceLock<Memo<FrameKey, Arc<RootFrame>>> = OnceLock::new();

fn prime_divisors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

impl RootFrame {
    /// Frame over `F_{p^d}`; `d` must be a multiple of `ord_{2n}(p)`.
    pub fn new(p: PrimeModulus, n: u64, d: usize) -> Result<Arc<RootFrame>> {
        let pp = p.get() as u64;
        if n == 0 || num_integer_gcd(n, pp) != 1 {
            return Err(Error::NotCoprimeToP { n, p: pp });
        }
        let ord = multiplicative_order(pp, 2 * n).expect("coprime") as usize;
        if d == 0 || !d.is_multiple_of(ord) {
            return Err(Error::NotSubfield { sub: ord, sup: d });
        }
        FRAMES
            .get_or_init(Memo::new)
            .get_or_try_init(&(p.get(), n, d), || RootFrame::build(p, n, d).map(Arc::new))
    }

    /// Frame over the smallest splitting field containing `F_{p^k}`.
    pub fn for_degree(p: PrimeModulus, n: u64, k: usize) -> Result<Arc<RootFrame>> {
        RootFrame::new(p, n, working_degree(p, n, k)?)
    }

    fn build(p: PrimeModulus, n: u64, d: usize) -> Result<RootFrame> {
        let big = ExtField::new(p, d)?;
        let two_n = 2 * n;
        let exp = crate::field::cofactor(p.get(), d, two_n)?;
        let checks: Vec<u64> = prime_divisors(two_n).iter().map(|r| two_n / r).collect();
        // smallest x (in lexicographic order) whose power lands on an element of order exactly 2n
        let mut index = 1u128;
        let beta = loop {
            let y = big.element_from_index(index).pow_big(&exp);
            if checks.iter().all(|&c| !y.pow(c).is_one()) {
                break y;
            }
            index += 1;
        };
        let mut beta_powers = Vec::with_capacity(two_n as usize);
        let mut cur = big.one();
        for _ in 0..two_n {
            beta_powers.push(cur.clone());
            cur = &cur * &beta;
        }
        Ok(RootFrame {
            p,
            n,
            big,
            beta,
            beta_powers,
        })
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn two_n(&self) -> u64 {
        2 * self.n
    }

    pub fn degree(&self) -> usize {
        self.big.degree()
    }

    pub fn big(&self) -> &ExtField {
        &self.big
    }

    pub fn beta(&self) -> &FieldElem {
        &self.beta
    }

    /// `β^e`, exponent taken mod `2n`.
    pub fn beta_pow(&self, e: u64) -> &FieldElem {
        &self.beta_powers[(e % self.two_n()) as usize]
    }
}

/// `lcm(k, ord_{2n}(p))`.
pub fn working_degree(p: PrimeModulus, n: u64, k: usize) -> Result<usize> {
    let pp = p.get() as u64;
    if n == 0 || num_integer_gcd(n, pp) != 1 {
        return Err(Error::NotCoprimeToP { n, p: pp });
    }
    if k == 0 {
        return Err(Error::Unsupported("extension degree 0".into()));
    }
    let ord = multiplicative_order(pp, 2 * n).expect("coprime");
    let g = num_integer_gcd(ord, k as u64);
    Ok((ord / g * k as u64) as usize)
}

/// An irreducible factor together with the exponents of its roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: Poly,
    pub coset: Coset,
}

/// The irreducible factors of `X^n + 1` over `F_{p^k}`, sorted by coset representative.
#[derive(Debug)]
pub struct FactorSet {
    frame: Arc<RootFrame>,
    field: ExtField,
    factors: Vec<Factor>,
}

type SetKey = (u32, u64, usize, usize);
static SETS: OnceLock<Memo<SetKey, Arc<FactorSet>>> = OnceLock::new();

/// Factor `X^n + 1` over `F_{p^k}` in the frame of degree `lcm(k, ord_{2n}(p))`.
pub fn factor_xn_plus_one(p: PrimeModulus, k: usize, n: u64) -> Result<Arc<FactorSet>> {
    let frame = RootFrame::for_degree(p, n, k)?;
    factor_in_frame(&frame, k)
}

/// Factor over `F_{p^k}` using an existing frame, so that coset labels agree
/// across coefficient fields sharing the frame.
pub fn factor_in_frame(frame: &Arc<RootFrame>, k: usize) -> Result<Arc<FactorSet>> {
    if k == 0 || !frame.degree().is_multiple_of(k) {
        return Err(Error::NotSubfield {
            sub: k,
            sup: frame.degree(),
        });
    }
    let key = (frame.p.get(), frame.n, frame.degree(), k);
    SETS.get_or_init(Memo::new)
        .get_or_try_init(&key, || build_factor_set(frame, k).map(Arc::new))
}

fn build_factor_set(frame: &Arc<RootFrame>, k: usize) -> Result<FactorSet> {
    let field = ExtField::new(frame.p, k)?;
    let emb = Embedding::get(&field, frame.big())?;
    let q = BigUint::from(frame.p.get()).pow(k as u32);
    let big = frame.big();
    let mut factors = Vec::new();
    for coset in odd_cosets(&q, frame.two_n())? {
        let mut prod = Poly::one(big);
        for &e in coset.members() {
            let lin = Poly::new(big, vec![-frame.beta_pow(e), big.one()]);
            prod = prod.mul(&lin);
        }
        let poly = prod.pull_back(&emb).ok_or_else(|| {
            Error::Invariant(format!(
                "factor for coset {coset} is not defined over F_{{p^{k}}}"
            ))
        })?;
        factors.push(Factor { poly, coset });
    }
    Ok(FactorSet {
        frame: frame.clone(),
        field,
        factors,
    })
}

impl FactorSet {
    pub fn frame(&self) -> &Arc<RootFrame> {
        &self.frame
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.field.degree()
    }

    pub fn n(&self) -> u64 {
        self.frame.n
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn index_of(&self, poly: &Poly) -> Option<usize> {
        self.factors.iter().position(|f| &f.poly == poly)
    }

    pub fn index_of_coset(&self, c: &Coset) -> Option<usize> {
        self.factors.iter().position(|f| &f.coset == c)
    }

    /// Index of the factor whose coset contains exponent `e`.
    pub fn index_containing(&self, e: u64) -> Option<usize> {
        self.factors.iter().position(|f| f.coset.contains(e))
    }

    /// Index of the factor `σ(f_i)`.
    pub fn sigma_index(&self, i: usize) -> usize {
        let c = self.factors[i]
            .coset
            .scaled(self.frame.p.get() as u64, self.frame.two_n());
        self.index_of_coset(&c)
            .expect("cosets are closed under the Frobenius")
    }

    /// Index of the factor proportional to `f_i(-X)`.
    pub fn negation_index(&self, i: usize) -> usize {
        let c = negate_coset(&self.factors[i].coset, self.frame.two_n());
        self.index_of_coset(&c)
            .expect("negation permutes the cosets")
    }

    /// Indices of `[f, σ(f), ..., σ^{r-1}(f)]`.
    pub fn orbit_indices(&self, i: usize) -> Vec<usize> {
        let mut out = vec![i];
        let mut j = self.sigma_index(i);
        while j != i {
            out.push(j);
            j = self.sigma_index(j);
        }
        out
    }

    pub fn product(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(&self.field), |acc, f| acc.mul(&f.poly))
    }
}

/// The σ-orbit of `f` in `fs`, in order of application.
pub fn sigma_orbit(fs: &FactorSet, f: &Poly) -> Result<Vec<Factor>> {
    let i = fs.index_of(f).ok_or(Error::UnknownFactor)?;
    Ok(fs
        .orbit_indices(i)
        .into_iter()
        .map(|j| fs.factors[j].clone())
        .collect())
}

/// Exponents `e` (odd, mod `2n`) with `u(β^e) = 0`.
pub fn root_exponents(frame: &RootFrame, u: &Poly) -> Result<BTreeSet<u64>> {
    let mapped = if u.field().same(frame.big()) {
        u.clone()
    } else {
        u.map(&*Embedding::get(u.field(), frame.big())?)
    };
    Ok((1..frame.two_n())
        .step_by(2)
        .filter(|&e| mapped.eval(frame.beta_pow(e)).is_zero())
        .collect())
}
