//! Dense univariate polynomials over an [`ExtField`], plus the text format
//! shared by every interface of the crate.
//!
//! The text format writes the variable as `X` and the field generator as `e`,
//! e.g. `X^4+(2e+1)*X^2+1`. Printing is canonical (highest degree first) and
//! [`Poly::parse`] accepts everything it prints, plus `-`, whitespace and
//! implicit multiplication.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{Embedding, ExtField, FieldElem};

/// A polynomial with coefficients in `field`, constant term first.
///
/// The zero polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: ExtField,
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn new(field: &ExtField, mut coeffs: Vec<FieldElem>) -> Poly {
        assert!(
            coeffs.iter().all(|c| c.field().same(field)),
            "coefficients from a different field"
        );
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: *field,
            coeffs,
        }
    }

    pub fn zero(field: &ExtField) -> Poly {
        Poly {
            field: *field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &ExtField) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: FieldElem) -> Poly {
        let field = *c.field();
        Poly::new(&field, vec![c])
    }

    /// `c * X^d`.
    pub fn monomial(c: FieldElem, d: usize) -> Poly {
        let field = *c.field();
        let mut coeffs = vec![field.zero(); d];
        coeffs.push(c);
        Poly::new(&field, coeffs)
    }

    pub fn x(field: &ExtField) -> Poly {
        Poly::monomial(field.one(), 1)
    }

    /// Polynomial with base-field integer coefficients, constant first.
    pub fn from_ints(field: &ExtField, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    /// `X^n + 1`.
    pub fn x_pow_n_plus_one(field: &ExtField, n: usize) -> Poly {
        let mut p = Poly::monomial(field.one(), n);
        if n == 0 {
            return Poly::constant(field.from_int(2));
        }
        p.coeffs[0] = field.one();
        p
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for bookkeeping only.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(Error::Mismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check(other)
            .expect("polynomials over different fields");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check(other)
            .expect("polynomials over different fields");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check(other)
            .expect("polynomials over different fields");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::new(&self.field, out)
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder; errors on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = divisor.leading().expect("nonzero").inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let f = &rem[top] * &inv_lead;
            if f.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + j;
                rem[idx] = &rem[idx] - &(&f * c);
            }
            quot[top - dd] = f;
        }
        rem.truncate(dd);
        Ok((Poly::new(&self.field, quot), Poly::new(&self.field, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// `self / divisor`, failing unless the division is exact.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Violation("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// `u(-X)`.
    pub fn substitute_neg(&self) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Coefficientwise `x -> x^{p^i}`.
    pub fn frobenius(&self, i: usize) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs.iter().map(|c| c.frobenius(i)).collect(),
        )
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        assert!(
            x.field().same(&self.field),
            "evaluation point from another field"
        );
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Apply an embedding coefficientwise.
    pub fn map(&self, emb: &Embedding) -> Poly {
        Poly::new(
            emb.target(),
            self.coeffs.iter().map(|c| emb.apply(c)).collect(),
        )
    }

    /// Coefficientwise preimage under an embedding; `None` if some coefficient is outside it.
    pub fn pull_back(&self, emb: &Embedding) -> Option<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| emb.pull_back(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::new(emb.source(), coeffs))
    }

    /// View a polynomial over `F_p` as one over `dst` (constant subfield).
    pub fn lift_prime_to(&self, dst: &ExtField) -> Result<Poly> {
        if self.field.degree() != 1 || self.field.characteristic() != dst.characteristic() {
            return Err(Error::Mismatch);
        }
        Ok(Poly::new(
            dst,
            self.coeffs
                .iter()
                .map(|c| dst.from_int(c.base_value() as i64))
                .collect(),
        ))
    }

    /// Restrict to `F_p` when every coefficient lies in the prime subfield.
    pub fn to_prime_field(&self) -> Option<Poly> {
        if !self.coeffs.iter().all(|c| c.is_base()) {
            return None;
        }
        let fp = ExtField::prime(self.field.prime_modulus());
        Some(Poly::new(
            &fp,
            self.coeffs
                .iter()
                .map(|c| fp.from_int(c.base_value() as i64))
                .collect(),
        ))
    }

    /// `self^e mod modulus`.
    pub fn powmod(&self, e: &BigUint, modulus: &Poly) -> Result<Poly> {
        let base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus)?;
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Distinct roots of `self` in its coefficient field.
    pub fn roots(&self) -> Result<Vec<FieldElem>> {
        if self.is_zero() {
            return Err(Error::Violation(
                "the zero polynomial has every element as a root".into(),
            ));
        }
        let f = self.monic();
        if f.degree() == Some(0) {
            return Ok(Vec::new());
        }
        // gcd with X^Q - X keeps the product of the distinct linear factors
        let q = self.field.order();
        let x = Poly::x(&self.field);
        let xq = x.powmod(&q, &f)?;
        let split = poly_gcd(&f, &xq.sub(&x))?;
        let mut out = Vec::new();
        split_linear(&split, &mut 0u128, &mut out)?;
        Ok(out)
    }
}

/// Equal-degree splitting of a product of distinct linear factors.
fn split_linear(f: &Poly, next_shift: &mut u128, out: &mut Vec<FieldElem>) -> Result<()> {
    match f.degree() {
        None | Some(0) => return Ok(()),
        Some(1) => {
            out.push(-&f.coeff(0));
            return Ok(());
        }
        _ => {}
    }
    let field = *f.field();
    let half = (field.order() - BigUint::one()) >> 1;
    loop {
        let delta = field.element_from_index(*next_shift);
        *next_shift += 1;
        let probe = Poly::new(&field, vec![delta, field.one()]);
        let w = probe.powmod(&half, f)?.sub(&Poly::one(&field));
        let d = poly_gcd(f, &w)?;
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && Some(dd) < f.degree() {
            let rest = f.div_exact(&d)?;
            split_linear(&d, next_shift, out)?;
            split_linear(&rest, next_shift, out)?;
            return Ok(());
        }
    }
}

/// Monic gcd.
pub fn poly_gcd(u: &Poly, v: &Poly) -> Result<Poly> {
    u.check(v)?;
    if u.is_zero() && v.is_zero() {
        return Err(Error::BothZero);
    }
    let mut a = u.clone();
    let mut b = v.clone();
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Monic gcd with Bezout cofactors: `s*u + t*v = gcd`.
pub fn poly_xgcd(u: &Poly, v: &Poly) -> Result<(Poly, Poly, Poly)> {
    u.check(v)?;
    if u.is_zero() && v.is_zero() {
        return Err(Error::BothZero);
    }
    let field = *u.field();
    let (mut r0, mut r1) = (u.clone(), v.clone());
    let (mut s0, mut s1) = (Poly::one(&field), Poly::zero(&field));
    let (mut t0, mut t1) = (Poly::zero(&field), Poly::one(&field));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s2 = s0.sub(&q.mul(&s1));
        let t2 = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = r0.leading().expect("nonzero gcd").inv()?;
    Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
}

/// The unique polynomial of degree below the product of the moduli that
/// reduces to each given residue. Moduli must be pairwise coprime.
pub fn crt_combine(residues: &[(Poly, Poly)]) -> Result<Poly> {
    let (first_val, first_mod) = residues
        .first()
        .ok_or_else(|| Error::Violation("empty residue system".into()))?;
    let mut value = first_val.rem(first_mod)?;
    let mut modulus = first_mod.clone();
    for (v, m) in &residues[1..] {
        let (g, s, _t) = poly_xgcd(&modulus, m)?;
        if g.degree() != Some(0) {
            return Err(Error::NonCoprimeModuli);
        }
        // value + modulus * ((v - value) * s mod m) is congruent to v mod m
        let lift = v.sub(&value).mul(&s).rem(m)?;
        value = value.add(&modulus.mul(&lift));
        modulus = modulus.mul(m);
        value = value.rem(&modulus)?;
    }
    Ok(value)
}

/// Evaluate `u` (over `F_{p^k}`) at `x` in `F_{p^D}`, embedding coefficients first.
pub fn eval_at(u: &Poly, x: &FieldElem) -> Result<FieldElem> {
    if u.field().same(x.field()) {
        return Ok(u.eval(x));
    }
    let emb = Embedding::get(u.field(), x.field())?;
    Ok(u.map(&emb).eval(x))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match d {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{d}"),
            };
            let text = c.to_string();
            let coeff = if c.is_base() {
                if d == 0 {
                    text
                } else if c.is_one() {
                    String::new()
                } else {
                    format!("{text}*")
                }
            } else {
                let wrapped = if text.contains('+') {
                    format!("({text})")
                } else {
                    text
                };
                if d == 0 {
                    wrapped
                } else {
                    format!("{wrapped}*")
                }
            };
            terms.push(format!("{coeff}{var}"));
        }
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    X,
    E,
    Caret,
    Star,
    Plus,
    Minus,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..=i].iter().collect();
                let v = text
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("number too large: {text}")))?;
                out.push(Tok::Num(v));
            }
            'X' | 'x' => out.push(Tok::X),
            'e' => out.push(Tok::E),
            '^' => out.push(Tok::Caret),
            '*' => out.push(Tok::Star),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '(' => out.push(Tok::Open),
            ')' => out.push(Tok::Close),
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    field: &'a ExtField,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Num(_)) | Some(Tok::X) | Some(Tok::E) | Some(Tok::Open) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(e)) => {
                    let e = *e;
                    self.pos += 1;
                    let mut acc = Poly::one(self.field);
                    for _ in 0..e {
                        acc = acc.mul(&base);
                    }
                    Ok(acc)
                }
                _ => Err(Error::Parse("expected exponent after '^'".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(v) => {
                let p = self.field.characteristic() as u64;
                Ok(Poly::constant(self.field.from_int((v % p) as i64)))
            }
            Tok::X => Ok(Poly::x(self.field)),
            Tok::E => Ok(Poly::constant(self.field.eta())),
            Tok::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl Poly {
    /// Parse the text format over `field`.
    pub fn parse(field: &ExtField, s: &str) -> Result<Poly> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut parser = Parser {
            toks: &toks,
            pos: 0,
            field,
        };
        let poly = parser.expr()?;
        if parser.pos != toks.len() {
            return Err(Error::Parse(format!(
                "trailing input at token {}",
                parser.pos
            )));
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeModulus;

    fn f3() -> ExtField {
        ExtField::prime(PrimeModulus::new(3).unwrap())
    }

    fn f9() -> ExtField {
        ExtField::new(PrimeModulus::new(3).unwrap(), 2).unwrap()
    }

    #[test]
    fn text_format_examples() {
        let f = f9();
        let h = Poly::parse(&f, "X^4+(2e+1)*X^2+1").unwrap();
        assert_eq!(h.to_string(), "X^4+(2e+1)*X^2+1");
        let q = Poly::parse(&f, "X^2 + (e+2)X + 2").unwrap();
        assert_eq!(q.to_string(), "X^2+(e+2)*X+2");
        let r = Poly::parse(&f, "X^2 - e").unwrap();
        assert_eq!(r.to_string(), "X^2+2e");
        assert_eq!(
            Poly::parse(&f, "2*X^3+e*X").unwrap().to_string(),
            "2*X^3+e*X"
        );
        assert!(Poly::parse(&f, "X^").is_err());
        assert!(Poly::parse(&f, "X+)").is_err());
        assert!(Poly::parse(&f, "").is_err());
    }

    #[test]
    fn substitute_neg_examples() {
        let f = f3();
        let even = Poly::parse(&f, "X^2+1").unwrap();
        assert_eq!(even.substitute_neg(), even);
        let q = Poly::parse(&f, "X^4+X^3+2X+1").unwrap();
        assert_eq!(q.substitute_neg().to_string(), "X^4+2*X^3+X+1");
        assert_eq!(Poly::x(&f).substitute_neg().to_string(), "2*X");
    }

    #[test]
    fn gcd_examples() {
        let f = f3();
        let a = Poly::parse(&f, "X^2+1").unwrap();
        let b = Poly::parse(&f, "X^4+X^3+2X+1").unwrap();
        assert!(poly_gcd(&a, &b).unwrap().is_one());
        let u = Poly::parse(&f, "2X^2+2").unwrap();
        assert_eq!(poly_gcd(&u, &Poly::zero(&f)).unwrap(), a);
        assert_eq!(poly_gcd(&u, &u).unwrap(), a);
        assert_eq!(
            poly_gcd(&Poly::zero(&f), &Poly::zero(&f)),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn crt_small_system() {
        let f = f3();
        let r = crt_combine(&[
            (
                Poly::parse(&f, "1").unwrap(),
                Poly::parse(&f, "X+1").unwrap(),
            ),
            (
                Poly::parse(&f, "2").unwrap(),
                Poly::parse(&f, "X+2").unwrap(),
            ),
        ])
        .unwrap();
        // independent check by evaluation at the roots -1 and -2
        assert_eq!(r.eval(&f.from_int(-1)), f.from_int(1));
        assert_eq!(r.eval(&f.from_int(-2)), f.from_int(2));
        assert_eq!(r.to_string(), "2*X");
        let single = crt_combine(&[(
            Poly::parse(&f, "X+2").unwrap(),
            Poly::parse(&f, "X^2+1").unwrap(),
        )])
        .unwrap();
        assert_eq!(single.to_string(), "X+2");
    }

    #[test]
    fn crt_rejects_common_factor() {
        let f = f3();
        let m = Poly::parse(&f, "X^2+1").unwrap();
        assert_eq!(
            crt_combine(&[(Poly::one(&f), m.clone()), (Poly::zero(&f), m)]),
            Err(Error::NonCoprimeModuli)
        );
    }

    #[test]
    fn eval_examples() {
        let f = f9();
        let fp = f3();
        let c = Poly::parse(&fp, "X^2+1").unwrap();
        assert!(eval_at(&c, &f.eta()).unwrap().is_zero());
        let k = Poly::constant(f.from_coords(&[1, 2]).unwrap());
        assert_eq!(
            eval_at(&k, &f.eta()).unwrap(),
            f.from_coords(&[1, 2]).unwrap()
        );
        let f27 = ExtField::new(PrimeModulus::new(3).unwrap(), 3).unwrap();
        assert!(matches!(
            eval_at(&Poly::x(&f), &f27.one()),
            Err(Error::NotSubfield { .. })
        ));
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = f9();
        let c = Poly::parse(&f, "X^2+1").unwrap();
        let mut roots = c.roots().unwrap();
        roots.sort_by(|a, b| a.lex_cmp(b));
        assert_eq!(roots, vec![f.eta(), -&f.eta()]);
        let irreducible = Poly::parse(&f3(), "X^2+1").unwrap();
        assert!(irreducible.roots().unwrap().is_empty());
    }

    #[test]
    fn division_by_zero_poly() {
        let f = f3();
        assert_eq!(
            Poly::one(&f).div_rem(&Poly::zero(&f)).unwrap_err(),
            Error::DivisionByZero
        );
    }
}
