use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::ring::{RingContext, VariableId};

pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// A polynomial with rational coefficients.
///
/// Terms are kept with nonzero coefficients, distinct monomials, sorted by
/// the canonical monomial order descending, so equal polynomials compare
/// equal structurally.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: Coeff, mono: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: alloc::vec![Term { mono, coeff: c }] }
        }
    }

    pub fn monomial(mono: Monomial) -> Self {
        Self::term(Coeff::one(), mono)
    }

    pub fn var(v: VariableId) -> Self {
        Self::monomial(Monomial::var(v))
    }

    /// `a - b` for two monomials.
    pub fn binomial(a: Monomial, b: Monomial) -> Self {
        Self::from_terms([(Coeff::one(), a), (-Coeff::one(), b)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Coeff, Monomial)>>(terms: I) -> Self {
        let mut ts: Vec<Term> = terms.into_iter().map(|(coeff, mono)| Term { mono, coeff }).collect();
        ts.sort_by(|a, b| b.mono.cmp(&a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(ts.len());
        for t in ts {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff += t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { terms: out }
    }

    /// Terms in canonical descending order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// A single variable with coefficient one.
    pub fn as_variable(&self) -> Option<VariableId> {
        match self.terms.as_slice() {
            [t] if t.mono.is_variable() && t.coeff.is_one() => t.mono.max_var(),
            _ => None,
        }
    }

    /// Two terms whose coefficients are opposite.
    pub fn is_pure_binomial(&self) -> bool {
        self.terms.len() == 2 && (&self.terms[0].coeff + &self.terms[1].coeff).is_zero()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.mono)
    }

    pub fn support(&self) -> Vec<VariableId> {
        let mut s: Vec<VariableId> = self.terms.iter().flat_map(|t| t.mono.support()).collect();
        s.sort();
        s.dedup();
        s
    }

    pub fn involves(&self, v: VariableId) -> bool {
        self.terms.iter().any(|t| t.mono.exponent(v) > 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: VariableId) -> u32 {
        self.terms.iter().map(|t| t.mono.exponent(v)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].mono.degree() == w[1].mono.degree())
    }

    pub fn neg(&self) -> Self {
        Polynomial { terms: self.terms.iter().map(|t| Term { mono: t.mono.clone(), coeff: -&t.coeff }).collect() }
    }

    pub fn add(&self, other: &Polynomial) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => b.mono.cmp(&a.mono),
                (Some(_), None) => core::cmp::Ordering::Less,
                _ => core::cmp::Ordering::Greater,
            };
            match ord {
                core::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = &self.terms[i].coeff + &other.terms[j].coeff;
                    if !c.is_zero() {
                        out.push(Term { mono: self.terms[i].mono.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn sub(&self, other: &Polynomial) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|t| Term { mono: t.mono.clone(), coeff: &t.coeff * c }).collect() }
    }

    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // multiplying by a monomial preserves any graded order
        Polynomial {
            terms: self.terms.iter().map(|t| Term { mono: t.mono.mul(m), coeff: &t.coeff * c }).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Self {
        let mut acc = Polynomial::zero();
        for t in &other.terms {
            acc = acc.add(&self.mul_term(&t.coeff, &t.mono));
        }
        acc
    }

    /// The term that is largest under `order`.
    pub fn initial_term(&self, order: &MonomialOrder) -> Result<&Term> {
        let c = order.compile();
        let mut best: Option<(&Term, Vec<i32>)> = None;
        for t in &self.terms {
            let k = c.key(&t.mono)?;
            if best.as_ref().map_or(true, |(_, bk)| k > *bk) {
                best = Some((t, k));
            }
        }
        best.map(|b| b.0).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<Monomial> {
        self.initial_term(order).map(|t| t.mono.clone())
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Result<Self> {
        let lc = self.initial_term(order)?.coeff.clone();
        Ok(self.scale(&lc.recip()))
    }

    /// Sum of the terms of highest degree in `y`.
    pub fn initial_y_form(&self, y: VariableId) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = self.degree_in(y);
        Ok(Polynomial { terms: self.terms.iter().filter(|t| t.mono.exponent(y) == d).cloned().collect() })
    }

    /// Writes `f = y^d q + r` with `d` the degree of `f` in `y`, so `y` does
    /// not divide any term of `q` and `r` has degree below `d` in `y`.
    pub fn y_split(&self, y: VariableId) -> Result<(u32, Polynomial, Polynomial)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = self.degree_in(y);
        let mut q = Vec::new();
        let mut r = Vec::new();
        for t in &self.terms {
            if t.mono.exponent(y) == d {
                q.push((t.coeff.clone(), t.mono.without(y)));
            } else {
                r.push((t.coeff.clone(), t.mono.clone()));
            }
        }
        Ok((d, Polynomial::from_terms(q), Polynomial::from_terms(r)))
    }

    /// Renames variables; `None` if the polynomial uses an unmapped variable.
    pub fn remap(&self, map: &[Option<VariableId>]) -> Option<Self> {
        let mut ts = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            ts.push((t.coeff.clone(), t.mono.remap(map)?));
        }
        Some(Polynomial::from_terms(ts))
    }

    pub fn check_ring(&self, ring: &RingContext) -> Result<()> {
        for t in &self.terms {
            if let Some(v) = t.mono.max_var() {
                ring.check(v)?;
            }
        }
        Ok(())
    }

    pub fn display<'a>(&'a self, ring: &'a RingContext) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, ring }
    }

    pub fn to_string_in(&self, ring: &RingContext) -> String {
        self.display(ring).to_string()
    }

    /// Parses text like `e1*e4^2 - 3/2*e2 + 1` over `ring`.
    pub fn parse(ring: &RingContext, s: &str) -> Result<Self> {
        Parser { ring, src: s.as_bytes(), pos: 0 }.polynomial()
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    ring: &'a RingContext,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.poly.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut first = true;
            if !abs.is_one() || t.mono.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for &(v, e) in t.mono.pairs() {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.ring.name(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    ring: &'a RingContext,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(alloc::format!("{msg} at byte {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            None => return self.err("empty polynomial"),
            _ => 1,
        };
        loop {
            let (c, m) = self.term()?;
            terms.push((if sign < 0 { -c } else { c }, m));
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return self.err("expected `+` or `-`"),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(terms))
    }

    fn term(&mut self) -> Result<(Coeff, Monomial)> {
        let mut c = Coeff::one();
        let mut pairs = Vec::new();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => c *= self.number()?,
                Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                    let name = self.ident();
                    let v = self.ring.var(&name)?;
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = self.integer()?.try_into().map_err(|_| Error::Parse("negative exponent".into()))?;
                    }
                    pairs.push((v, e));
                }
                Some(b'(') => return self.err("parentheses are not supported"),
                _ => return self.err("expected a factor"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((c, Monomial::from_pairs(pairs)))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_' || self.src[self.pos] == b'.')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .map_or_else(|| self.err("integer too large"), Ok)
    }

    fn number(&mut self) -> Result<Coeff> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let num: BigInt = core::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad number".into()))?;
        let mut den = BigInt::one();
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let s2 = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            den = core::str::from_utf8(&self.src[s2..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse("bad denominator".into()))?;
            if den.is_zero() {
                return self.err("zero denominator");
            }
        }
        Ok(BigRational::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> RingContext {
        RingContext::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parse_print_round_trip() {
        let r = ring();
        for s in ["x*y^2 - 3/2*z + 1", "-x", "0", "x^3*z - y^4"] {
            let p = Polynomial::parse(&r, s);
            if s == "0" {
                assert_eq!(p.unwrap().to_string_in(&r), "0");
                continue;
            }
            let p = p.unwrap();
            let q = Polynomial::parse(&r, &p.to_string_in(&r)).unwrap();
            assert_eq!(p, q);
        }
        assert!(Polynomial::parse(&r, "w + 1").is_err());
        assert!(Polynomial::parse(&r, "x +").is_err());
    }

    #[test]
    fn arithmetic_cancels() {
        let r = ring();
        let f = Polynomial::parse(&r, "x*y - z^2").unwrap();
        let g = Polynomial::parse(&r, "x + z").unwrap();
        assert!(f.sub(&f).is_zero());
        let h = f.mul(&g);
        assert_eq!(h, Polynomial::parse(&r, "x^2*y + x*y*z - x*z^2 - z^3").unwrap());
        assert!(f.is_pure_binomial());
        assert!(!g.neg().is_pure_binomial() || g.len() == 2);
    }

    #[test]
    fn y_forms() {
        let r = ring();
        let y = r.var("y").unwrap();
        let f = Polynomial::parse(&r, "x*y^2 + z*y^2 - y + x").unwrap();
        assert_eq!(f.initial_y_form(y).unwrap(), Polynomial::parse(&r, "x*y^2 + y^2*z").unwrap());
        let (d, q, rest) = f.y_split(y).unwrap();
        assert_eq!(d, 2);
        assert_eq!(q, Polynomial::parse(&r, "x + z").unwrap());
        assert_eq!(rest, Polynomial::parse(&r, "x - y").unwrap());
        assert!(Polynomial::zero().y_split(y).is_err());
    }

    #[test]
    fn initial_terms_follow_the_order() {
        let r = ring();
        let f = Polynomial::parse(&r, "x - y^3").unwrap();
        assert_eq!(f.leading_monomial(&MonomialOrder::lex(&r)).unwrap(), Monomial::var(VariableId(0)));
        assert_eq!(f.leading_monomial(&MonomialOrder::grevlex(&r)).unwrap(), Monomial::pow(VariableId(1), 3));
        assert_eq!(Polynomial::zero().initial_term(&MonomialOrder::lex(&r)), Err(Error::ZeroPolynomial));
    }
}
