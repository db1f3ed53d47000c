//! Reduced Gröbner bases and the ideal operations built on them.

mod engine;
mod ops;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::RingContext;

use engine::{Completion, OPoly};

pub use ops::{
    contract, eliminate, extend, ideal_equal, initial_ideal, intersect, intersect_all, is_generated_by_variables,
    is_square_free_monomial_ideal, krull_dimension, saturate_variable, sum,
};

/// A reduced, monic Gröbner basis with respect to a fixed order.
///
/// Elements are sorted canonically, so two bases of the same ideal under the
/// same order are equal as values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingContext,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    leads: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Leading monomials, aligned with [`Self::elements`].
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_nonzero_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn reducer(&self) -> Reducer {
        Reducer::new(&self.elements, &self.order)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.reducer().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn to_ideal(&self) -> IdealHandle {
        let mut cache = BTreeMap::new();
        cache.insert(self.order.clone(), self.clone());
        IdealHandle { ring: self.ring.clone(), gens: self.elements.clone(), cache }
    }
}

/// Repeated normal forms against a fixed list of polynomials.
pub struct Reducer {
    ord: crate::order::CompiledOrder,
    basis: Vec<OPoly>,
}

impl Reducer {
    pub fn new(gens: &[Polynomial], order: &MonomialOrder) -> Self {
        let ord = order.compile();
        let basis = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                let mut o = OPoly::from_poly(g, &ord);
                o.make_monic();
                o
            })
            .collect();
        Reducer { ord, basis }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let refs: Vec<&OPoly> = self.basis.iter().collect();
        OPoly::from_poly(f, &self.ord).reduce(&refs, &self.ord).to_poly()
    }
}

/// Full remainder of `f` on division by `gens` (divisors tried in list order).
pub fn normal_form(f: &Polynomial, gens: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    Reducer::new(gens, order).normal_form(f)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ord = order.compile();
    let mut a = OPoly::from_poly(f, &ord);
    let mut b = OPoly::from_poly(g, &ord);
    a.make_monic();
    b.make_monic();
    Ok(OPoly::s_poly(&a, &b, &ord).to_poly())
}

/// Buchberger's criterion for an arbitrary generating list.
pub fn is_groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> bool {
    engine::is_groebner(gens, &order.compile())
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &RingContext, gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    order.validate(ring.arity())?;
    for g in gens {
        g.check_ring(ring)?;
    }
    let ord = order.compile();
    let (elements, leads) = match engine::buchberger(gens, &ord) {
        Completion::Unit => (alloc::vec![Polynomial::one()], alloc::vec![Monomial::one()]),
        Completion::Basis(b) => {
            let mut pairs: Vec<(Polynomial, Monomial)> = b.iter().map(|p| (p.to_poly(), p.lead().mono.clone())).collect();
            pairs.sort();
            pairs.into_iter().unzip()
        }
    };
    Ok(GroebnerBasis { ring: ring.clone(), order: order.clone(), elements, leads })
}

/// An ideal given by generators, with Gröbner bases cached per order.
///
/// The cache only grows through `&mut self`; shared handles are read-only.
#[derive(Clone, Debug)]
pub struct IdealHandle {
    ring: RingContext,
    gens: Vec<Polynomial>,
    cache: BTreeMap<MonomialOrder, GroebnerBasis>,
}

impl IdealHandle {
    pub fn new(ring: RingContext, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            g.check_ring(&ring)?;
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealHandle { ring, gens, cache: BTreeMap::new() })
    }

    pub fn parse(ring: &RingContext, gens: &[&str]) -> Result<Self> {
        let ps = gens.iter().map(|s| Polynomial::parse(ring, s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring.clone(), ps)
    }

    pub fn zero(ring: RingContext) -> Self {
        IdealHandle { ring, gens: Vec::new(), cache: BTreeMap::new() }
    }

    pub fn unit(ring: RingContext) -> Self {
        IdealHandle { ring, gens: alloc::vec![Polynomial::one()], cache: BTreeMap::new() }
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn canonical_order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(&self.ring)
    }

    /// Gröbner basis under `order`, from the cache when present.
    pub fn basis(&self, order: &MonomialOrder) -> Result<GroebnerBasis> {
        match self.cache.get(order) {
            Some(b) => Ok(b.clone()),
            None => buchberger(&self.ring, &self.gens, order),
        }
    }

    pub fn basis_cached(&mut self, order: &MonomialOrder) -> Result<&GroebnerBasis> {
        if !self.cache.contains_key(order) {
            let b = buchberger(&self.ring, &self.gens, order)?;
            self.cache.insert(order.clone(), b);
        }
        Ok(&self.cache[order])
    }

    /// Reduced basis under graded reverse lex in ring order.
    pub fn canonical_basis(&self) -> Result<GroebnerBasis> {
        self.basis(&self.canonical_order())
    }

    pub fn with_canonical_basis(mut self) -> Result<Self> {
        let o = self.canonical_order();
        self.basis_cached(&o)?;
        Ok(self)
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_nonzero_constant()) {
            return Ok(true);
        }
        Ok(self.canonical_basis()?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.canonical_basis()?.contains(f))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let r = self.canonical_basis()?.reducer();
        Ok(other.gens.iter().all(|g| r.normal_form(g).is_zero()))
    }

    /// Renames into `ring` through `map`.
    pub fn remap(&self, ring: RingContext, map: &[Option<crate::ring::VariableId>]) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.remap(map).ok_or_else(|| Error::ContractionFailed(alloc::format!("{:?}", g.support()))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }
}

#[cfg(test)]
mod tests;
