//! Exact arithmetic in `F_p` and its extensions `F_{p^k}`.
//!
//! Elements are stored as coordinate vectors in the power basis `1, e, ..., e^{k-1}`
//! where `e` is the residue of `Y` modulo the defining polynomial `c(Y)`. Fields are
//! interned: [`ExtField::new`] hands out a shared handle per `(p, k)`, so equality
//! checks between operands are usually a pointer comparison.
//!
//! "Lexicographic order" on coefficient tuples and field elements means ascending
//! order of the integer `sum c_i p^i`, i.e. the highest coordinate is compared first.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::poly::Poly;

/// Largest supported characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 16;
/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 64;

type Coords = SmallVec<[u32; 8]>;

/// An odd prime below `2^16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::Unsupported(format!("characteristic {p} >= 2^16")));
        }
        if p < 3 || p.is_multiple_of(2) || !is_prime_u64(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.0 as u64
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

struct FieldInner {
    p: u32,
    k: usize,
    /// `c_0 .. c_{k-1}`; the defining polynomial is monic of degree `k`.
    modulus: Vec<u32>,
}

/// The field `F_p[Y]/<c(Y)>` for a monic irreducible `c` of degree `k`.
#[derive(Clone, Copy)]
pub struct ExtField(&'static FieldInner);

// Fields are interned and live for the whole process, so handles are plain references.
static FIELDS: OnceLock<Memo<(u32, usize), ExtField>> = OnceLock::new();
static CUSTOM_FIELDS: OnceLock<Memo<(u32, Vec<u32>), ExtField>> = OnceLock::new();

impl ExtField {
    /// The degree-`k` extension defined by [`find_irreducible`]. Interned.
    pub fn new(p: PrimeModulus, k: usize) -> Result<ExtField> {
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::Unsupported(format!(
                "extension degree {k} outside 1..={MAX_DEGREE}"
            )));
        }
        FIELDS
            .get_or_init(Memo::new)
            .get_or_try_init(&(p.get(), k), || {
                let modulus = irreducible_coeffs(p.get(), k);
                Ok(ExtField(Box::leak(Box::new(FieldInner {
                    p: p.get(),
                    k,
                    modulus,
                }))))
            })
    }

    /// The prime field `F_p`, defined by `Y`.
    pub fn prime(p: PrimeModulus) -> ExtField {
        ExtField::new(p, 1).expect("degree 1 is always supported")
    }

    /// A field with an explicit defining polynomial `Y^k + c_{k-1}Y^{k-1} + ... + c_0`.
    pub fn with_modulus(p: PrimeModulus, low_coeffs: &[u32]) -> Result<ExtField> {
        let k = low_coeffs.len();
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::Unsupported(format!("extension degree {k}")));
        }
        let pp = p.get();
        if low_coeffs.iter().any(|&c| c >= pp) {
            return Err(Error::InvalidModulus(
                "coefficient not reduced mod p".into(),
            ));
        }
        let mut full: Vec<u32> = low_coeffs.to_vec();
        full.push(1);
        if !fp::is_irreducible(&full, pp) {
            return Err(Error::InvalidModulus(
                "defining polynomial is reducible".into(),
            ));
        }
        let canonical = ExtField::new(p, k)?;
        if canonical.modulus() == low_coeffs {
            return Ok(canonical);
        }
        CUSTOM_FIELDS
            .get_or_init(Memo::new)
            .get_or_try_init(&(pp, low_coeffs.to_vec()), || {
                Ok(ExtField(Box::leak(Box::new(FieldInner {
                    p: pp,
                    k,
                    modulus: low_coeffs.to_vec(),
                }))))
            })
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn prime_modulus(&self) -> PrimeModulus {
        PrimeModulus(self.0.p)
    }

    pub fn degree(&self) -> usize {
        self.0.k
    }

    /// Low coefficients `c_0 .. c_{k-1}` of the defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The defining polynomial as a polynomial over `F_p`.
    pub fn defining_polynomial(&self) -> Poly {
        let fp = ExtField::prime(self.prime_modulus());
        let mut c: Vec<i64> = self.0.modulus.iter().map(|&x| x as i64).collect();
        c.push(1);
        Poly::from_ints(&fp, &c)
    }

    /// Number of elements, `p^k`.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.0.p).pow(self.0.k as u32)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            field: *self,
            c: SmallVec::from_elem(0, self.0.k),
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> FieldElem {
        let mut e = self.zero();
        e.c[0] = v.rem_euclid(self.0.p as i64) as u32;
        e
    }

    /// The distinguished generator: the residue of `Y`.
    pub fn eta(&self) -> FieldElem {
        if self.0.k == 1 {
            // Y = -c_0 modulo a linear defining polynomial
            return self.from_int(-(self.0.modulus[0] as i64));
        }
        let mut e = self.zero();
        e.c[1] = 1;
        e
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElem> {
        if coords.len() != self.0.k {
            return Err(Error::LengthMismatch(coords.len(), self.0.k));
        }
        if coords.iter().any(|&c| c >= self.0.p) {
            return Err(Error::Parse("coordinate not reduced mod p".into()));
        }
        Ok(FieldElem {
            field: *self,
            c: coords.iter().copied().collect(),
        })
    }

    /// The element whose coordinates are the base-`p` digits of `index` (lowest first).
    pub fn element_from_index(&self, mut index: u128) -> FieldElem {
        let p = self.0.p as u128;
        let mut e = self.zero();
        for slot in e.c.iter_mut() {
            *slot = (index % p) as u32;
            index /= p;
        }
        e
    }

    /// All elements in lexicographic order. Only sensible for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let total = (self.0.p as u128).pow(self.0.k as u32);
        (0..total).map(move |i| self.element_from_index(i))
    }

    pub fn same(&self, other: &ExtField) -> bool {
        std::ptr::eq(self.0, other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }

    fn reduce_mul(&self, a: &[u32], b: &[u32]) -> Coords {
        let p = self.0.p as u64;
        let k = self.0.k;
        if k == 1 {
            return smallvec::smallvec![((a[0] as u64 * b[0] as u64) % p) as u32];
        }
        let mut acc: SmallVec<[u64; 16]> = SmallVec::from_elem(0, 2 * k - 1);
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += x as u64 * y as u64;
            }
        }
        for v in acc.iter_mut() {
            *v %= p;
        }
        let m = &self.0.modulus;
        for d in (k..2 * k - 1).rev() {
            let t = acc[d];
            if t == 0 {
                continue;
            }
            // Y^k = -(c_0 + ... + c_{k-1} Y^{k-1})
            for (j, &cj) in m.iter().enumerate() {
                if cj != 0 {
                    let slot = &mut acc[d - k + j];
                    *slot = (*slot + t * (p - cj as u64)) % p;
                }
            }
        }
        acc[..k].iter().map(|&v| v as u32).collect()
    }
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}
impl Eq for ExtField {}

impl Hash for ExtField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}^{}[{}]",
            self.0.p,
            self.0.k,
            self.defining_polynomial()
        )
    }
}

/// An element of an [`ExtField`].
#[derive(Clone)]
pub struct FieldElem {
    field: ExtField,
    c: Coords,
}

/// Arithmetic selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic.
pub fn field_arith(x: &FieldElem, y: &FieldElem, op: ArithOp) -> Result<FieldElem> {
    if !x.field.same(&y.field) {
        return Err(Error::Mismatch);
    }
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.try_div(y)?,
    })
}

impl FieldElem {
    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn coords(&self) -> &[u32] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.c[1..].iter().all(|&v| v == 0)
    }

    /// True when the element lies in the prime subfield.
    pub fn is_base(&self) -> bool {
        self.c[1..].iter().all(|&v| v == 0)
    }

    /// The integer value of the constant coordinate.
    pub fn base_value(&self) -> u32 {
        self.c[0]
    }

    fn check(&self, other: &FieldElem) {
        assert!(
            self.field.same(&other.field),
            "field operands from different fields"
        );
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.field.0.p;
        if self.field.0.k == 1 {
            return Ok(self.field.from_int(fp::inv_u32(self.c[0], p) as i64));
        }
        let mut m: Vec<u32> = self.field.0.modulus.clone();
        m.push(1);
        let a: Vec<u32> = self.c.to_vec();
        let inv = fp::inv_mod(&a, &m, p)
            .ok_or_else(|| Error::Invariant("nonzero element without inverse".into()))?;
        let mut out = self.field.zero();
        for (slot, v) in out.c.iter_mut().zip(inv) {
            *slot = v;
        }
        Ok(out)
    }

    pub fn try_div(&self, other: &FieldElem) -> Result<FieldElem> {
        if !self.field.same(&other.field) {
            return Err(Error::Mismatch);
        }
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, e: &BigUint) -> FieldElem {
        let mut acc = self.field.one();
        for i in (0..e.bits()).rev() {
            acc = &acc * &acc;
            if e.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    /// `x^{p^i}`.
    pub fn frobenius(&self, i: usize) -> FieldElem {
        let k = self.field.0.k;
        let p = self.field.0.p as u64;
        let mut x = self.clone();
        for _ in 0..(i % k) {
            x = x.pow(p);
        }
        x
    }

    /// Multiplicative order. Requires `p^k - 1 < 2^128`.
    pub fn order(&self) -> Result<u128> {
        element_order(self)
    }

    /// Compare by the integer `sum c_i p^i`.
    pub fn lex_cmp(&self, other: &FieldElem) -> std::cmp::Ordering {
        self.c.iter().rev().cmp(other.c.iter().rev())
    }
}

/// Least `e >= 1` with `x^e = 1`.
pub fn element_order(x: &FieldElem) -> Result<u128> {
    if x.is_zero() {
        return Err(Error::ZeroOrder);
    }
    let group = (x.field.order() - BigUint::one())
        .to_u128()
        .ok_or_else(|| Error::Unsupported("multiplicative group order exceeds 128 bits".into()))?;
    let factors = num_prime::nt_funcs::factorize128(group);
    let mut order = group;
    for &r in factors.keys() {
        while order % r == 0 && x.pow_big(&BigUint::from(order / r)).is_one() {
            order /= r;
        }
    }
    Ok(order)
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.c == other.c
    }
}
impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        let p = self.field.0.p;
        FieldElem {
            field: self.field,
            c: self
                .c
                .iter()
                .zip(rhs.c.iter())
                .map(|(&a, &b)| {
                    let s = a + b;
                    if s >= p {
                        s - p
                    } else {
                        s
                    }
                })
                .collect(),
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        let p = self.field.0.p;
        FieldElem {
            field: self.field,
            c: self
                .c
                .iter()
                .zip(rhs.c.iter())
                .map(|(&a, &b)| if a >= b { a - b } else { a + p - b })
                .collect(),
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        FieldElem {
            field: self.field,
            c: self.field.reduce_mul(&self.c, &rhs.c),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let p = self.field.0.p;
        FieldElem {
            field: self.field,
            c: self
                .c
                .iter()
                .map(|&a| if a == 0 { 0 } else { p - a })
                .collect(),
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElem {
    /// Text form such as `2e+1`, `e^2`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            terms.push(match i {
                0 => coeff,
                1 => format!("{coeff}e"),
                _ => format!("{coeff}e^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// Lexicographically smallest monic irreducible of degree `k` over `F_p`,
/// returned with its leading coefficient.
pub fn find_irreducible(p: PrimeModulus, k: usize) -> Result<Poly> {
    Ok(ExtField::new(p, k)?.defining_polynomial())
}

fn irreducible_coeffs(p: u32, k: usize) -> Vec<u32> {
    let mut low = vec![0u32; k];
    loop {
        let mut full = low.clone();
        full.push(1);
        if (k == 1 || low[0] != 0) && fp::is_irreducible(&full, p) {
            return low;
        }
        // advance the base-p counter, lowest coordinate fastest
        let mut i = 0;
        loop {
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            i += 1;
            assert!(i < k, "irreducible polynomials exist in every degree");
        }
    }
}

/// A fixed embedding of `src = F_{p^k}` into `dst = F_{p^D}`, `k | D`.
///
/// The image of the generator is the lexicographically smallest root of the
/// defining polynomial of `src` inside `dst`; when `src == dst` it is the identity.
pub struct Embedding {
    src: ExtField,
    dst: ExtField,
    rho: FieldElem,
    powers: Vec<FieldElem>,
    /// Row operations reducing the `D x k` power matrix to `[I_k; 0]`.
    transform: Vec<Vec<u32>>,
}

type EmbedKey = (u32, Vec<u32>, Vec<u32>);
static EMBEDDINGS: OnceLock<Memo<EmbedKey, Arc<Embedding>>> = OnceLock::new();

impl Embedding {
    pub fn get(src: &ExtField, dst: &ExtField) -> Result<Arc<Embedding>> {
        if src.characteristic() != dst.characteristic() {
            return Err(Error::Mismatch);
        }
        let (k, d) = (src.degree(), dst.degree());
        if d % k != 0 {
            return Err(Error::NotSubfield { sub: k, sup: d });
        }
        let key = (
            src.characteristic(),
            src.modulus().to_vec(),
            dst.modulus().to_vec(),
        );
        EMBEDDINGS
            .get_or_init(Memo::new)
            .get_or_try_init(&key, || Embedding::build(src, dst).map(Arc::new))
    }

    fn build(src: &ExtField, dst: &ExtField) -> Result<Embedding> {
        let rho = if src.same(dst) {
            dst.eta()
        } else {
            let c = src.defining_polynomial().lift_prime_to(dst)?;
            let mut roots = c.roots()?;
            roots.sort_by(|a, b| a.lex_cmp(b));
            roots
                .into_iter()
                .next()
                .ok_or_else(|| Error::Invariant("defining polynomial has no root".into()))?
        };
        let k = src.degree();
        let d = dst.degree();
        let mut powers = Vec::with_capacity(k);
        let mut cur = dst.one();
        for _ in 0..k {
            powers.push(cur.clone());
            cur = &cur * &rho;
        }
        let p = dst.characteristic();
        // augmented [M | I_D], M[r][j] = coordinate r of rho^j
        let mut rows: Vec<Vec<u32>> = (0..d)
            .map(|r| {
                let mut row: Vec<u32> = powers.iter().map(|x| x.coords()[r]).collect();
                row.extend((0..d).map(|c| (c == r) as u32));
                row
            })
            .collect();
        for col in 0..k {
            let pivot = (col..d)
                .find(|&r| rows[r][col] != 0)
                .ok_or_else(|| Error::Invariant("powers of the root are dependent".into()))?;
            rows.swap(col, pivot);
            let inv = fp::inv_u32(rows[col][col], p);
            for v in rows[col].iter_mut() {
                *v = ((*v as u64 * inv as u64) % p as u64) as u32;
            }
            for r in 0..d {
                if r != col && rows[r][col] != 0 {
                    let f = rows[r][col] as u64;
                    for c in 0..k + d {
                        let sub = (f * rows[col][c] as u64) % p as u64;
                        rows[r][c] = ((rows[r][c] as u64 + p as u64 - sub) % p as u64) as u32;
                    }
                }
            }
        }
        let transform = rows.into_iter().map(|row| row[k..].to_vec()).collect();
        Ok(Embedding {
            src: *src,
            dst: *dst,
            rho,
            powers,
            transform,
        })
    }

    pub fn source(&self) -> &ExtField {
        &self.src
    }

    pub fn target(&self) -> &ExtField {
        &self.dst
    }

    /// Image of the generator of the source field.
    pub fn root(&self) -> &FieldElem {
        &self.rho
    }

    pub fn apply(&self, x: &FieldElem) -> FieldElem {
        assert!(
            x.field.same(&self.src),
            "element outside the embedding source"
        );
        let mut acc = self.dst.zero();
        for (&c, pw) in x.coords().iter().zip(&self.powers) {
            if c != 0 {
                acc = &acc + &(pw * &self.dst.from_int(c as i64));
            }
        }
        acc
    }

    /// Preimage of `z`, or `None` when `z` is outside the embedded subfield.
    pub fn pull_back(&self, z: &FieldElem) -> Option<FieldElem> {
        assert!(
            z.field.same(&self.dst),
            "element outside the embedding target"
        );
        let p = self.dst.characteristic() as u64;
        let k = self.src.degree();
        let solved: Vec<u32> = self
            .transform
            .iter()
            .map(|row| {
                (row.iter()
                    .zip(z.coords())
                    .map(|(&a, &b)| a as u64 * b as u64 % p)
                    .sum::<u64>()
                    % p) as u32
            })
            .collect();
        if solved[k..].iter().any(|&v| v != 0) {
            return None;
        }
        self.src.from_coords(&solved[..k]).ok()
    }
}

/// Image of `x` in `target` under the cached embedding.
pub fn embed(x: &FieldElem, target: &ExtField) -> Result<FieldElem> {
    Ok(Embedding::get(x.field(), target)?.apply(x))
}

/// Dense polynomial helpers over `F_p` on raw coefficient slices (constant first).
pub(crate) mod fp {
    pub(crate) fn inv_u32(a: u32, p: u32) -> u32 {
        pow_u32(a, p - 2, p)
    }

    pub(crate) fn pow_u32(a: u32, mut e: u32, p: u32) -> u32 {
        let p64 = p as u64;
        let mut base = a as u64 % p64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p64;
            }
            base = base * base % p64;
            e >>= 1;
        }
        acc as u32
    }

    fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let inv_lead = inv_u32(m[dm], p) as u64;
        let p64 = p as u64;
        while r.len() > dm {
            let top = r.len() - 1;
            let f = r[top] as u64 * inv_lead % p64;
            for (j, &mj) in m.iter().enumerate() {
                let idx = top - dm + j;
                r[idx] = ((r[idx] as u64 + p64 - f * mj as u64 % p64) % p64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let p64 = p as u64;
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
            }
        }
        let mut v: Vec<u32> = out.into_iter().map(|x| x as u32).collect();
        trim(&mut v);
        v
    }

    fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let mut v: Vec<u32> = (0..n)
            .map(|i| {
                let x = *a.get(i).unwrap_or(&0);
                let y = *b.get(i).unwrap_or(&0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut v);
        v
    }

    fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    fn powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut acc = vec![1u32];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        acc
    }

    /// Rabin's test for a monic `f` of degree `k`.
    pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
        let k = f.len() - 1;
        if k == 1 {
            return true;
        }
        let y = vec![0u32, 1];
        // y_pows[i] = Y^{p^i} mod f
        let mut y_pows = vec![rem(&y, f, p)];
        for i in 0..k {
            let next = powmod(&y_pows[i], p as u64, f, p);
            y_pows.push(next);
        }
        if sub(&y_pows[k], &y_pows[0], p) != Vec::<u32>::new() {
            return false;
        }
        let mut primes = Vec::new();
        let mut m = k;
        let mut d = 2;
        while m > 1 {
            if m.is_multiple_of(d) {
                primes.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        primes.iter().all(|&r| {
            let diff = sub(&y_pows[k / r], &y, p);
            let g = gcd(f, &diff, p);
            g.len() == 1
        })
    }

    /// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
    pub(crate) fn inv_mod(a: &[u32], m: &[u32], p: u32) -> Option<Vec<u32>> {
        let (mut r0, mut r1) = (m.to_vec(), rem(a, m, p));
        let (mut t0, mut t1) = (Vec::<u32>::new(), vec![1u32]);
        trim(&mut r0);
        while !r1.is_empty() {
            // quotient of r0 by r1
            let dq = r0.len() as isize - r1.len() as isize;
            let mut q = vec![0u32; (dq.max(0) + 1) as usize];
            let mut r = r0.clone();
            let inv_lead = inv_u32(*r1.last().unwrap(), p) as u64;
            while r.len() >= r1.len() && !r.is_empty() {
                let shift = r.len() - r1.len();
                let f = (*r.last().unwrap() as u64 * inv_lead % p as u64) as u32;
                q[shift] = f;
                for (j, &c) in r1.iter().enumerate() {
                    let idx = shift + j;
                    r[idx] = ((r[idx] as u64 + p as u64 - f as u64 * c as u64 % p as u64)
                        % p as u64) as u32;
                }
                trim(&mut r);
            }
            trim(&mut q);
            let t2 = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.len() != 1 {
            return None;
        }
        let inv_c = inv_u32(r0[0], p) as u64;
        let mut out: Vec<u32> = t0
            .iter()
            .map(|&v| (v as u64 * inv_c % p as u64) as u32)
            .collect();
        out.resize(m.len() - 1, 0);
        Some(out)
    }
}

/// Multiplicative order of `p` modulo `m` (`gcd(p, m) = 1`).
pub fn multiplicative_order(p: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if num_integer_gcd(p % m, m) != 1 {
        return None;
    }
    let mut x = p % m;
    let mut e = 1;
    while x != 1 {
        x = (x as u128 * p as u128 % m as u128) as u64;
        e += 1;
    }
    Some(e)
}

pub(crate) fn num_integer_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `(p^d - 1) / m` for exponentiation into the subgroup of order `m`.
pub(crate) fn cofactor(p: u32, d: usize, m: u64) -> Result<BigUint> {
    let q = BigUint::from(p).pow(d as u32) - BigUint::one();
    let m_big = BigUint::from(m);
    if !(&q % &m_big).is_zero() {
        return Err(Error::Invariant(format!("{m} does not divide p^{d}-1")));
    }
    Ok(q / m_big)
}
