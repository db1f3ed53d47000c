use alloc::boxed::Box;
use alloc::vec::Vec;

use super::{buchberger, GroebnerBasis, IdealHandle};
use crate::error::{Error, Result};
use crate::hypergraph;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{RingContext, VariableId};

use num_traits::One;

fn same_ring(a: &IdealHandle, b: &IdealHandle) -> Result<()> {
    if a.ring != b.ring {
        Err(Error::RingMismatch)
    } else {
        Ok(())
    }
}

pub fn sum(a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle> {
    same_ring(a, b)?;
    let mut g = a.gens.clone();
    g.extend(b.gens.iter().cloned());
    IdealHandle::new(a.ring.clone(), g)
}

/// The extension of `ideal` to a ring containing all of its variable names.
pub fn extend(ideal: &IdealHandle, ring: &RingContext) -> Result<IdealHandle> {
    let map = ideal.ring.embedding_into(ring)?;
    ideal.remap(ring.clone(), &map)
}

/// Reduced basis of `gens` in `big` under an elimination order for `elim`,
/// keeping the elements free of `elim` and mapping them into `small`.
fn eliminate_into(
    big: &RingContext,
    gens: &[Polynomial],
    elim: &[VariableId],
    small: &RingContext,
    map: &[Option<VariableId>],
) -> Result<IdealHandle> {
    let order = MonomialOrder::Elimination { vars: elim.to_vec(), inner: Box::new(MonomialOrder::grevlex(big)) };
    let gb = buchberger(big, gens, &order)?;
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    for (p, l) in gb.elements.iter().zip(&gb.leads) {
        if elim.iter().any(|&v| p.involves(v)) {
            continue;
        }
        kept.push(p.remap(map).expect("elimination output avoids eliminated variables"));
        leads.push(l.remap(map).expect("lead avoids eliminated variables"));
    }
    let mut pairs: Vec<(Polynomial, Monomial)> = kept.into_iter().zip(leads).collect();
    pairs.sort();
    let (elements, leads): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    // the restriction of the elimination order to the small ring is its grevlex order
    let basis = GroebnerBasis { ring: small.clone(), order: MonomialOrder::grevlex(small), elements, leads };
    Ok(basis.to_ideal())
}

/// `ideal ∩ K[other variables]`, still presented in the ring of `ideal`.
pub fn eliminate(ideal: &IdealHandle, vars: &[VariableId]) -> Result<IdealHandle> {
    for &v in vars {
        ideal.ring.check(v)?;
    }
    let ring = &ideal.ring;
    let identity: Vec<Option<VariableId>> = ring.vars().map(Some).collect();
    eliminate_into(ring, &ideal.gens, vars, ring, &identity)
}

/// Rewrites `ideal` in the ring without `var`; fails if the ideal is not
/// extended from that subring.
pub fn contract(ideal: &IdealHandle, var: VariableId) -> Result<IdealHandle> {
    ideal.ring.check(var)?;
    let (small, map) = ideal.ring.without(var);
    let gb = ideal.canonical_basis()?;
    if gb.elements.iter().all(|p| !p.involves(var)) {
        let b = GroebnerBasis {
            ring: small.clone(),
            order: MonomialOrder::grevlex(&small),
            elements: gb.elements.iter().map(|p| p.remap(&map).expect("free of var")).collect(),
            leads: gb.leads.iter().map(|m| m.remap(&map).expect("free of var")).collect(),
        };
        return Ok(b.to_ideal());
    }
    let j = eliminate(ideal, &[var])?;
    if ideal_equal(&j, ideal)? {
        j.remap(small, &map)
    } else {
        Err(Error::ContractionFailed(ideal.ring.name(var).into()))
    }
}

pub fn intersect(a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle> {
    same_ring(a, b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(IdealHandle::zero(a.ring.clone()));
    }
    let (big, t) = a.ring.with_fresh("t_");
    let tm = Monomial::var(t);
    let one_minus_t = Polynomial::from_terms([(Coeff::one(), Monomial::one()), (-Coeff::one(), tm.clone())]);
    let mut gens: Vec<Polynomial> = a.gens.iter().map(|f| f.mul_term(&Coeff::one(), &tm)).collect();
    gens.extend(b.gens.iter().map(|g| g.mul(&one_minus_t)));
    let map: Vec<Option<VariableId>> = big.vars().map(|v| if v == t { None } else { Some(v) }).collect();
    eliminate_into(&big, &gens, &[t], &a.ring, &map)
}

pub fn intersect_all(ideals: &[IdealHandle]) -> Result<IdealHandle> {
    let (first, rest) = ideals.split_first().ok_or_else(|| Error::Hypothesis("empty intersection".into()))?;
    let mut acc = first.clone();
    for i in rest {
        acc = intersect(&acc, i)?;
    }
    Ok(acc)
}

/// `ideal : y^∞`, through the auxiliary relation `w*y - 1`.
pub fn saturate_variable(ideal: &IdealHandle, y: VariableId) -> Result<IdealHandle> {
    ideal.ring.check(y)?;
    let (big, w) = ideal.ring.with_fresh("w_");
    let mut gens = ideal.gens.clone();
    gens.push(Polynomial::from_terms([
        (Coeff::one(), Monomial::from_pairs([(w, 1), (y, 1)])),
        (-Coeff::one(), Monomial::one()),
    ]));
    let map: Vec<Option<VariableId>> = big.vars().map(|v| if v == w { None } else { Some(v) }).collect();
    eliminate_into(&big, &gens, &[w], &ideal.ring, &map)
}

/// Equality of ideals through their reduced bases under a shared order.
pub fn ideal_equal(a: &IdealHandle, b: &IdealHandle) -> Result<bool> {
    same_ring(a, b)?;
    Ok(a.canonical_basis()?.elements == b.canonical_basis()?.elements)
}

pub fn initial_ideal(gb: &GroebnerBasis) -> IdealHandle {
    let gens: Vec<Polynomial> = gb.leads.iter().cloned().map(Polynomial::monomial).collect();
    let mut pairs: Vec<(Polynomial, Monomial)> = gens.into_iter().zip(gb.leads.iter().cloned()).collect();
    pairs.sort();
    let (elements, leads) = pairs.into_iter().unzip();
    GroebnerBasis { ring: gb.ring.clone(), order: MonomialOrder::grevlex(&gb.ring), elements, leads }.to_ideal()
}

/// Krull dimension of `R / ideal`, read off the radical of an initial ideal.
pub fn krull_dimension(ideal: &IdealHandle) -> Result<usize> {
    let gb = ideal.canonical_basis()?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let edges: Vec<Vec<VariableId>> = gb.leads.iter().map(|m| m.support().collect()).collect();
    Ok(ideal.ring.arity() - hypergraph::min_transversal_size(&edges))
}

pub fn is_generated_by_variables(ideal: &IdealHandle) -> Result<bool> {
    let gb = ideal.canonical_basis()?;
    Ok(gb.elements.iter().all(|p| p.as_variable().is_some()))
}

pub fn is_square_free_monomial_ideal(ideal: &IdealHandle) -> Result<bool> {
    let gb = ideal.canonical_basis()?;
    Ok(!gb.is_unit() && gb.elements.iter().all(|p| p.is_monomial() && p.terms()[0].mono.is_square_free()))
}
