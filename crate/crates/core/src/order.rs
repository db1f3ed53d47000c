use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{RingContext, VariableId};

/// A monomial order on a polynomial ring.
///
/// Every order here is a lexicographic comparison of finitely many linear
/// functionals of the exponent vector, which is how [`CompiledOrder`]
/// evaluates them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonomialOrder {
    /// Lexicographic, first listed variable largest.
    Lex(Vec<VariableId>),
    /// Graded reverse lexicographic, first listed variable largest.
    GrevLex(Vec<VariableId>),
    /// Product order: compare with the first block, then the next.
    Block(Vec<MonomialOrder>),
    /// Compare the degree in `y` first, then fall back on `inner`.
    YCompatible { y: VariableId, inner: Box<MonomialOrder> },
    /// Compare total degree in `vars` first, then `inner`.
    Elimination { vars: Vec<VariableId>, inner: Box<MonomialOrder> },
}

#[derive(Clone, Copy, Debug)]
enum Step {
    Var(VariableId),
    RevVar(VariableId),
    Weight(usize),
}

impl MonomialOrder {
    pub fn lex(ring: &RingContext) -> Self {
        MonomialOrder::Lex(ring.vars().collect())
    }

    pub fn grevlex(ring: &RingContext) -> Self {
        MonomialOrder::GrevLex(ring.vars().collect())
    }

    /// Lex order with `y` largest and the remaining variables in ring order.
    pub fn y_lex(ring: &RingContext, y: VariableId) -> Self {
        MonomialOrder::YCompatible {
            y,
            inner: Box::new(MonomialOrder::Lex(ring.vars().filter(|&v| v != y).collect())),
        }
    }

    pub fn y_compatible(y: VariableId, inner: MonomialOrder) -> Self {
        MonomialOrder::YCompatible { y, inner: Box::new(inner) }
    }

    /// Whether every comparison starts with the degree in `y`.
    pub fn is_y_compatible(&self, y: VariableId) -> bool {
        match self {
            MonomialOrder::YCompatible { y: z, .. } => *z == y,
            MonomialOrder::Lex(p) => p.first() == Some(&y),
            MonomialOrder::Elimination { vars, inner } => {
                (vars.len() == 1 && vars[0] == y) || (vars.is_empty() && inner.is_y_compatible(y))
            }
            MonomialOrder::Block(blocks) => blocks
                .first()
                .map(|b| b.covered() == [y] || b.is_y_compatible(y))
                .unwrap_or(false),
            MonomialOrder::GrevLex(p) => p.len() == 1 && p[0] == y,
        }
    }

    fn covered(&self) -> Vec<VariableId> {
        let mut out = Vec::new();
        self.collect_covered(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_covered(&self, out: &mut Vec<VariableId>) {
        match self {
            MonomialOrder::Lex(p) | MonomialOrder::GrevLex(p) => out.extend_from_slice(p),
            MonomialOrder::Block(bs) => bs.iter().for_each(|b| b.collect_covered(out)),
            MonomialOrder::YCompatible { y, inner } => {
                out.push(*y);
                inner.collect_covered(out)
            }
            MonomialOrder::Elimination { vars, inner } => {
                out.extend_from_slice(vars);
                inner.collect_covered(out)
            }
        }
    }

    /// Checks that the order is a total monomial order on a ring of `arity`
    /// variables.
    pub fn validate(&self, arity: usize) -> Result<()> {
        self.validate_inner()?;
        let cov = self.covered();
        if cov.len() != arity || cov.iter().enumerate().any(|(i, v)| v.index() != i) {
            return Err(Error::InvalidOrder(alloc::format!(
                "order covers {} variables of a ring of arity {arity}",
                cov.len()
            )));
        }
        Ok(())
    }

    fn validate_inner(&self) -> Result<()> {
        match self {
            MonomialOrder::Lex(p) | MonomialOrder::GrevLex(p) => {
                let mut s = p.clone();
                s.sort();
                s.dedup();
                if s.len() != p.len() {
                    return Err(Error::InvalidOrder("repeated variable in permutation".into()));
                }
                Ok(())
            }
            MonomialOrder::Block(bs) => {
                let mut seen: Vec<VariableId> = Vec::new();
                for b in bs {
                    b.validate_inner()?;
                    let c = b.covered();
                    if c.iter().any(|v| seen.contains(v)) {
                        return Err(Error::InvalidOrder("blocks overlap".into()));
                    }
                    seen.extend(c);
                }
                Ok(())
            }
            MonomialOrder::YCompatible { inner, .. } | MonomialOrder::Elimination { inner, .. } => {
                inner.validate_inner()
            }
        }
    }

    fn steps(&self, weights: &mut Vec<Vec<VariableId>>, out: &mut Vec<Step>) {
        match self {
            MonomialOrder::Lex(p) => out.extend(p.iter().map(|&v| Step::Var(v))),
            MonomialOrder::GrevLex(p) => {
                weights.push(p.clone());
                out.push(Step::Weight(weights.len() - 1));
                out.extend(p.iter().rev().map(|&v| Step::RevVar(v)));
            }
            MonomialOrder::Block(bs) => bs.iter().for_each(|b| b.steps(weights, out)),
            MonomialOrder::YCompatible { y, inner } => {
                out.push(Step::Var(*y));
                inner.steps(weights, out)
            }
            MonomialOrder::Elimination { vars, inner } => {
                weights.push(vars.clone());
                out.push(Step::Weight(weights.len() - 1));
                inner.steps(weights, out)
            }
        }
    }

    pub fn compile(&self) -> CompiledOrder {
        let mut weights = Vec::new();
        let mut steps = Vec::new();
        self.steps(&mut weights, &mut steps);
        let arity = self.covered().last().map(|v| v.index() + 1).unwrap_or(0);
        let mut contrib: Vec<Vec<(u32, i32)>> = alloc::vec![Vec::new(); arity];
        for (s, step) in steps.iter().enumerate() {
            match *step {
                Step::Var(v) => contrib[v.index()].push((s as u32, 1)),
                Step::RevVar(v) => contrib[v.index()].push((s as u32, -1)),
                Step::Weight(w) => {
                    for v in &weights[w] {
                        contrib[v.index()].push((s as u32, 1))
                    }
                }
            }
        }
        CompiledOrder { contrib, len: steps.len() }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        let c = self.compile();
        Ok(c.key(a)?.cmp(&c.key(b)?))
    }

    /// Renames variables through `map`, dropping unmapped ones.
    pub fn remap(&self, map: &[Option<VariableId>]) -> MonomialOrder {
        let f = |p: &Vec<VariableId>| -> Vec<VariableId> {
            p.iter().filter_map(|v| map.get(v.index()).copied().flatten()).collect()
        };
        match self {
            MonomialOrder::Lex(p) => MonomialOrder::Lex(f(p)),
            MonomialOrder::GrevLex(p) => MonomialOrder::GrevLex(f(p)),
            MonomialOrder::Block(bs) => MonomialOrder::Block(bs.iter().map(|b| b.remap(map)).collect()),
            MonomialOrder::YCompatible { y, inner } => match map.get(y.index()).copied().flatten() {
                Some(y) => MonomialOrder::YCompatible { y, inner: Box::new(inner.remap(map)) },
                None => inner.remap(map),
            },
            MonomialOrder::Elimination { vars, inner } => {
                MonomialOrder::Elimination { vars: f(vars), inner: Box::new(inner.remap(map)) }
            }
        }
    }
}

/// Text form of an order.
///
/// ```text
/// lex | lex(e2, e1) | grevlex(...) | ycompat(y; ORDER) | elim(a, b; ORDER) | block(ORDER; ORDER; ...)
/// ```
///
/// A permutation may list a prefix only; [`MonomialOrder::parse`] appends the
/// missing variables in ring order at the outermost `lex`/`grevlex` (directly
/// or under one `ycompat` or `elim`).
impl MonomialOrder {
    pub fn describe(&self, ring: &RingContext) -> String {
        let names = |p: &[VariableId]| p.iter().map(|&v| ring.name(v)).collect::<Vec<_>>().join(",");
        match self {
            MonomialOrder::Lex(p) => alloc::format!("lex({})", names(p)),
            MonomialOrder::GrevLex(p) => alloc::format!("grevlex({})", names(p)),
            MonomialOrder::Block(bs) => {
                alloc::format!("block({})", bs.iter().map(|b| b.describe(ring)).collect::<Vec<_>>().join(";"))
            }
            MonomialOrder::YCompatible { y, inner } => {
                alloc::format!("ycompat({};{})", ring.name(*y), inner.describe(ring))
            }
            MonomialOrder::Elimination { vars, inner } => {
                alloc::format!("elim({};{})", names(vars), inner.describe(ring))
            }
        }
    }

    pub fn parse(ring: &RingContext, s: &str) -> Result<Self> {
        let o = Self::parse_inner(ring, s.trim())?.completed(ring);
        o.validate(ring.arity())?;
        Ok(o)
    }

    fn completed(self, ring: &RingContext) -> Self {
        let fill = |mut p: Vec<VariableId>, skip: Option<VariableId>| {
            for v in ring.vars() {
                if !p.contains(&v) && Some(v) != skip {
                    p.push(v);
                }
            }
            p
        };
        match self {
            MonomialOrder::Lex(p) => MonomialOrder::Lex(fill(p, None)),
            MonomialOrder::GrevLex(p) => MonomialOrder::GrevLex(fill(p, None)),
            MonomialOrder::YCompatible { y, inner } => {
                let inner = match *inner {
                    MonomialOrder::Lex(p) => MonomialOrder::Lex(fill(p, Some(y))),
                    MonomialOrder::GrevLex(p) => MonomialOrder::GrevLex(fill(p, Some(y))),
                    o => o,
                };
                MonomialOrder::YCompatible { y, inner: Box::new(inner) }
            }
            MonomialOrder::Elimination { vars, inner } => {
                let inner = match *inner {
                    MonomialOrder::Lex(p) => MonomialOrder::Lex(fill(p, None)),
                    MonomialOrder::GrevLex(p) => MonomialOrder::GrevLex(fill(p, None)),
                    o => o,
                };
                MonomialOrder::Elimination { vars, inner: Box::new(inner) }
            }
            o => o,
        }
    }

    fn parse_inner(ring: &RingContext, s: &str) -> Result<Self> {
        let bad = || Error::Parse(alloc::format!("malformed order `{s}`"));
        let (head, body) = match s.find('(') {
            Some(i) if s.ends_with(')') => (s[..i].trim(), &s[i + 1..s.len() - 1]),
            None => (s, ""),
            _ => return Err(bad()),
        };
        let vars = |t: &str| -> Result<Vec<VariableId>> {
            t.split(',').map(str::trim).filter(|x| !x.is_empty()).map(|x| ring.var(x)).collect()
        };
        let parts = split_top(body);
        match head {
            "lex" => Ok(MonomialOrder::Lex(vars(body)?)),
            "grevlex" => Ok(MonomialOrder::GrevLex(vars(body)?)),
            "block" => Ok(MonomialOrder::Block(parts.iter().map(|p| Self::parse_inner(ring, p)).collect::<Result<_>>()?)),
            "ycompat" | "elim" => {
                let [a, b] = parts.as_slice() else { return Err(bad()) };
                let inner = Box::new(Self::parse_inner(ring, b)?);
                if head == "elim" {
                    return Ok(MonomialOrder::Elimination { vars: vars(a)?, inner });
                }
                Ok(MonomialOrder::YCompatible { y: ring.var(a.trim())?, inner })
            }
            _ => Err(bad()),
        }
    }
}

fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

/// Sort key of a monomial; larger key means larger monomial.
pub type OrderKey = Vec<i32>;

/// An order turned into per-variable contributions to a key vector.
#[derive(Clone, Debug)]
pub struct CompiledOrder {
    contrib: Vec<Vec<(u32, i32)>>,
    len: usize,
}

impl CompiledOrder {
    pub fn arity(&self) -> usize {
        self.contrib.len()
    }

    pub fn key(&self, m: &Monomial) -> Result<OrderKey> {
        let mut k = alloc::vec![0i32; self.len];
        for &(v, e) in m.pairs() {
            let c = self
                .contrib
                .get(v.index())
                .ok_or(Error::ArityMismatch { index: v.index(), arity: self.arity() })?;
            for &(s, w) in c {
                k[s as usize] += w * e as i32;
            }
        }
        Ok(k)
    }

    /// Key of a monomial already known to live in the ring.
    pub fn key_unchecked(&self, m: &Monomial) -> OrderKey {
        let mut k = alloc::vec![0i32; self.len];
        for &(v, e) in m.pairs() {
            for &(s, w) in &self.contrib[v.index()] {
                k[s as usize] += w * e as i32;
            }
        }
        k
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key_unchecked(a).cmp(&self.key_unchecked(b))
    }
}
