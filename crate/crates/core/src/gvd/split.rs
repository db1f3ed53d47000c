use alloc::vec::Vec;

use crate::decomposition::{binomial_monomial_split, Split};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groebner::{self, GroebnerBasis, IdealHandle};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{RingContext, VariableId};

/// `C_{y,I}` and `N_{y,I}` read off a reduced basis under a y-compatible order.
#[derive(Clone, Debug)]
pub struct CnSplit {
    pub y: VariableId,
    pub order: MonomialOrder,
    pub basis: GroebnerBasis,
    /// `in_y(I)`, generated by the initial y-forms of the basis.
    pub in_y: IdealHandle,
    /// In the ring of `I`; never involves `y`.
    pub c: IdealHandle,
    pub n: IdealHandle,
    /// Every basis element has degree at most one in `y`.
    pub square_free_in_y: bool,
}

impl CnSplit {
    /// `C` and `N` rewritten in the ring without `y`.
    pub fn contracted(&self) -> (RingContext, IdealHandle, IdealHandle) {
        let (small, map) = self.c.ring().without(self.y);
        let f = |i: &IdealHandle| i.remap(small.clone(), &map).expect("C and N avoid y");
        let c = f(&self.c);
        let n = f(&self.n);
        (small, c, n)
    }
}

/// Splits with respect to `y` under `order`, default lex with `y` largest.
pub fn cn_split_unchecked(ideal: &IdealHandle, y: VariableId, order: Option<MonomialOrder>) -> Result<CnSplit> {
    let ring = ideal.ring();
    ring.check(y)?;
    let order = order.unwrap_or_else(|| MonomialOrder::y_lex(ring, y));
    order.validate(ring.arity())?;
    if !order.is_y_compatible(y) {
        return Err(Error::InvalidOrder(alloc::format!("order is not {}-compatible", ring.name(y))));
    }
    let basis = ideal.basis(&order)?;
    let mut in_y = Vec::new();
    let mut c = Vec::new();
    let mut n = Vec::new();
    let mut square_free = true;
    for g in basis.elements() {
        let (d, q, _) = g.y_split(y)?;
        in_y.push(g.initial_y_form(y)?);
        if d > 1 {
            square_free = false;
        }
        if d == 0 {
            n.push(q.clone());
        }
        c.push(q);
    }
    Ok(CnSplit {
        y,
        order,
        in_y: IdealHandle::new(ring.clone(), in_y)?,
        c: IdealHandle::new(ring.clone(), c)?,
        n: IdealHandle::new(ring.clone(), n)?,
        basis,
        square_free_in_y: square_free,
    })
}

/// [`cn_split_unchecked`], and when square-free in `y` also confirms
/// `C = in_y(I) : y^∞`.
pub fn cn_split(ideal: &IdealHandle, y: VariableId, order: Option<MonomialOrder>) -> Result<CnSplit> {
    let s = cn_split_unchecked(ideal, y, order)?;
    if s.square_free_in_y {
        let sat = groebner::saturate_variable(&s.in_y, y)?;
        if !groebner::ideal_equal(&sat, &s.c)? {
            return Err(Error::Hypothesis("C differs from the saturation of in_y(I) by y".into()));
        }
    }
    Ok(s)
}

/// Whether `√C = √N`, when that can be decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degeneracy {
    /// `C` is the unit ideal.
    UnitC,
    /// `C = N`.
    EqualIdeals,
    /// Same minimal primes.
    EqualRadicals,
    Nondegenerate,
    Unknown,
}

impl Degeneracy {
    pub fn is_degenerate(self) -> bool {
        matches!(self, Degeneracy::UnitC | Degeneracy::EqualIdeals | Degeneracy::EqualRadicals)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompositionCheck {
    pub holds: bool,
    pub degeneracy: Degeneracy,
}

fn is_radical_by_initial_ideal(i: &IdealHandle) -> Result<bool> {
    Ok(i.canonical_basis()?.leading_monomials().iter().all(|m| m.is_square_free()))
}

fn minimal_primes(i: &IdealHandle, g: Option<&Graph>) -> Result<Option<Vec<Vec<Polynomial>>>> {
    Ok(match binomial_monomial_split(i, g)? {
        Split::Components(cs) => {
            let mut v: Vec<Vec<Polynomial>> = cs
                .iter()
                .map(|c| c.ideal.canonical_basis().map(|b| b.elements().to_vec()))
                .collect::<Result<_>>()?;
            v.sort();
            Some(v)
        }
        Split::NotApplicable(_) => None,
    })
}

pub fn degeneracy(c: &IdealHandle, n: &IdealHandle, graph: Option<&Graph>) -> Result<Degeneracy> {
    if c.is_unit()? {
        return Ok(Degeneracy::UnitC);
    }
    if groebner::ideal_equal(c, n)? {
        return Ok(Degeneracy::EqualIdeals);
    }
    if is_radical_by_initial_ideal(c)? && is_radical_by_initial_ideal(n)? {
        return Ok(Degeneracy::Nondegenerate);
    }
    match (minimal_primes(c, graph)?, minimal_primes(n, graph)?) {
        (Some(a), Some(b)) => Ok(if a == b { Degeneracy::EqualRadicals } else { Degeneracy::Nondegenerate }),
        _ => Ok(Degeneracy::Unknown),
    }
}

/// Tests `in_y(I) = C ∩ (N + ⟨y⟩)` and classifies degeneracy.
pub fn check_decomposition(split: &CnSplit, graph: Option<&Graph>) -> Result<DecompositionCheck> {
    let mut n_plus = split.n.generators().to_vec();
    n_plus.push(Polynomial::var(split.y));
    let n_plus = IdealHandle::new(split.n.ring().clone(), n_plus)?;
    let meet = groebner::intersect(&split.c, &n_plus)?;
    let holds = groebner::ideal_equal(&split.in_y, &meet)?;
    Ok(DecompositionCheck { holds, degeneracy: degeneracy(&split.c, &split.n, graph)? })
}
