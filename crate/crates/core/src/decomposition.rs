//! Minimal primes of ideals whose reduced basis consists of square-free
//! monomials and pure binomials, and the unmixedness evidence read off them.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::Graph;
use crate::groebner::{self, IdealHandle};
use crate::hypergraph;
use crate::lattice;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{RingContext, VariableId};
use crate::toric;

/// Why a component's binomial part is prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeWitness {
    /// No binomials remain.
    Variables,
    /// Equal to the toric ideal of the surviving subgraph.
    ToricOfGraph,
    /// Saturated by the variables, with a saturated exponent lattice.
    Lattice,
}

/// `⟨variables⟩ + T` with `T` a prime binomial ideal in the other variables.
#[derive(Clone, Debug)]
pub struct PrimeComponent {
    pub variables: Vec<VariableId>,
    pub binomials: Vec<Polynomial>,
    pub ideal: IdealHandle,
    pub dimension: usize,
    pub witness: PrimeWitness,
}

#[derive(Clone, Debug)]
pub enum Split {
    /// The minimal primes, verified to intersect back to the ideal.
    Components(Vec<PrimeComponent>),
    NotApplicable(String),
}

/// Minimal primes of a square-free monomial ideal, as variable sets.
pub fn square_free_monomial_components(monomials: &[Monomial]) -> Option<Vec<BTreeSet<VariableId>>> {
    if monomials.iter().any(|m| !m.is_square_free()) {
        return None;
    }
    let edges: Vec<Vec<VariableId>> = monomials.iter().map(|m| m.support().collect()).collect();
    Some(hypergraph::minimal_transversals(&edges))
}

fn in_prime(m: &Monomial, q: &BTreeSet<VariableId>) -> bool {
    m.support().any(|v| q.contains(&v))
}

/// Pushes `(Q, B)` through the binomials until every remaining binomial has
/// coprime terms, neither of them in `⟨Q⟩`.
fn settle(q: BTreeSet<VariableId>, binomials: &[Polynomial], out: &mut Vec<(BTreeSet<VariableId>, Vec<Polynomial>)>) {
    let mut stack = alloc::vec![(q, binomials.to_vec())];
    'states: while let Some((q, bs)) = stack.pop() {
        let mut rest: Vec<Polynomial> = Vec::new();
        for (k, b) in bs.iter().enumerate() {
            let u = &b.terms()[0].mono;
            let v = &b.terms()[1].mono;
            let (iu, iv) = (in_prime(u, &q), in_prime(v, &q));
            if iu && iv {
                continue;
            }
            if iu || iv {
                let other = if iu { v } else { u };
                for x in other.support() {
                    let mut q2 = q.clone();
                    q2.insert(x);
                    stack.push((q2, bs.clone()));
                }
                continue 'states;
            }
            let g = u.gcd(v);
            if !g.is_one() {
                // a prime containing g·b' contains a variable of g or b'
                for x in g.support() {
                    let mut q2 = q.clone();
                    q2.insert(x);
                    stack.push((q2, bs.clone()));
                }
                let mut bs2 = bs.clone();
                bs2[k] = Polynomial::binomial(u.checked_div(&g).unwrap(), v.checked_div(&g).unwrap());
                stack.push((q, bs2));
                continue 'states;
            }
            rest.push(b.clone());
        }
        rest.sort();
        rest.dedup();
        out.push((q, rest));
    }
}

fn lattice_prime(ring: &RingContext, t: &[Polynomial]) -> Result<Option<usize>> {
    let ideal = IdealHandle::new(ring.clone(), t.to_vec())?;
    let mut support: BTreeSet<VariableId> = BTreeSet::new();
    for b in t {
        support.extend(b.support());
    }
    for &x in &support {
        let s = groebner::saturate_variable(&ideal, x)?;
        if !groebner::ideal_equal(&s, &ideal)? {
            return Ok(None);
        }
    }
    let rows: Vec<Vec<i64>> = t.iter().filter_map(|b| toric::exponent_vector(b, ring.arity())).collect();
    if lattice::is_saturated(&rows)? {
        Ok(Some(lattice::rank(&rows)?))
    } else {
        Ok(None)
    }
}

/// Splits an ideal into prime components `⟨Q'⟩ + T`.
///
/// `graph`, when given, names the variables as edges of an ambient graph so
/// binomial parts can be recognised as toric ideals of subgraphs.
pub fn binomial_monomial_split(ideal: &IdealHandle, graph: Option<&Graph>) -> Result<Split> {
    let ring = ideal.ring().clone();
    let gb = ideal.canonical_basis()?;
    if gb.is_unit() {
        return Ok(Split::NotApplicable("unit ideal".into()));
    }
    let mut monomials = Vec::new();
    let mut binomials = Vec::new();
    for p in gb.elements() {
        if p.is_monomial() {
            monomials.push(p.terms()[0].mono.clone());
        } else if p.is_pure_binomial() {
            binomials.push(p.clone());
        } else {
            return Ok(Split::NotApplicable("basis element is neither a monomial nor a pure binomial".into()));
        }
    }
    let Some(covers) = square_free_monomial_components(&monomials) else {
        return Ok(Split::NotApplicable("monomial part is not square-free".into()));
    };
    let mut terminals = Vec::new();
    for q in covers {
        settle(q, &binomials, &mut terminals);
    }
    let mut comps: Vec<PrimeComponent> = Vec::new();
    let mut seen: BTreeSet<(Vec<VariableId>, Vec<Polynomial>)> = BTreeSet::new();
    for (q, t) in terminals {
        let vars: Vec<VariableId> = q.iter().copied().collect();
        let rest: Vec<VariableId> = ring.vars().filter(|v| !q.contains(v)).collect();
        let (sub, map) = ring.restrict(&rest);
        let t_sub: Vec<Polynomial> = t.iter().map(|b| b.remap(&map).expect("binomial avoids Q")).collect();
        let t_ideal = IdealHandle::new(sub.clone(), t_sub.clone())?;
        let t_gb = t_ideal.canonical_basis()?;
        if !seen.insert((vars.clone(), t_gb.elements().to_vec())) {
            continue;
        }
        let (witness, height) = if t.is_empty() {
            (PrimeWitness::Variables, 0)
        } else {
            let mut found = None;
            if let Some(g) = graph {
                if let Ok(ih) = toric::toric_ideal_in(g, &sub) {
                    if groebner::ideal_equal(&ih, &t_ideal)? {
                        let h = g.with_edge_names(sub.names());
                        found = Some((PrimeWitness::ToricOfGraph, sub.arity() - toric::toric_dimension(&h)));
                    }
                }
            }
            if found.is_none() {
                if let Some(r) = lattice_prime(&sub, t_gb.elements())? {
                    found = Some((PrimeWitness::Lattice, r));
                }
            }
            match found {
                Some(f) => f,
                None => return Ok(Split::NotApplicable("binomial part not certified prime".into())),
            }
        };
        let mut gens: Vec<Polynomial> = vars.iter().map(|&v| Polynomial::var(v)).collect();
        gens.extend(t.iter().cloned());
        let p = IdealHandle::new(ring.clone(), gens)?.with_canonical_basis()?;
        let dimension = ring.arity() - vars.len() - height;
        if groebner::krull_dimension(&p)? != dimension {
            return Ok(Split::NotApplicable("component dimension failed revalidation".into()));
        }
        comps.push(PrimeComponent { variables: vars, binomials: t, ideal: p, dimension, witness });
    }
    // keep the minimal primes only
    let mut keep = alloc::vec![true; comps.len()];
    for i in 0..comps.len() {
        for j in 0..comps.len() {
            if i != j && keep[j] && keep[i] && comps[i].ideal.contains_ideal(&comps[j].ideal)? {
                keep[i] = false;
            }
        }
    }
    let comps: Vec<PrimeComponent> = comps.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect();
    let ideals: Vec<IdealHandle> = comps.iter().map(|c| c.ideal.clone()).collect();
    let meet = groebner::intersect_all(&ideals)?;
    if !groebner::ideal_equal(&meet, ideal)? {
        return Ok(Split::NotApplicable("components do not intersect to the ideal".into()));
    }
    Ok(Split::Components(comps))
}

/// How a prime ideal was recognised.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeKind {
    Zero,
    Variables,
    Split(PrimeWitness),
}

/// Printable summary of one minimal prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSummary {
    pub variables: Vec<String>,
    pub binomials: Vec<String>,
    pub dimension: usize,
    pub witness: PrimeWitness,
}

impl ComponentSummary {
    pub fn of(ring: &RingContext, c: &PrimeComponent) -> Self {
        ComponentSummary {
            variables: c.variables.iter().map(|&v| ring.name(v).into()).collect(),
            binomials: c.binomials.iter().map(|b| b.to_string_in(ring)).collect(),
            dimension: c.dimension,
            witness: c.witness,
        }
    }
}

/// Evidence for or against unmixedness of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Unmixedness {
    /// The unit ideal has no associated primes.
    Vacuous,
    Prime(PrimeKind),
    /// A proper nonzero principal ideal.
    Principal,
    /// Radical, with all minimal primes of one dimension.
    EqualComponentDims(Vec<ComponentSummary>),
    /// Radical with minimal primes of different dimensions: refuted.
    Mixed(Vec<ComponentSummary>),
    /// Every part of a variable-disjoint sum is unmixed.
    TensorOfUnmixed,
    /// Not computed; taken from a theorem whose hypotheses were checked.
    Cited(String),
    Inconclusive(String),
}

impl Unmixedness {
    pub fn is_unmixed(&self) -> bool {
        !matches!(self, Unmixedness::Mixed(_) | Unmixedness::Inconclusive(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Unmixedness::Mixed(_))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Unmixedness::Vacuous => "vacuous",
            Unmixedness::Prime(_) => "prime",
            Unmixedness::Principal => "principal",
            Unmixedness::EqualComponentDims(_) => "equal-component-dimensions",
            Unmixedness::Mixed(_) => "mixed",
            Unmixedness::TensorOfUnmixed => "tensor-of-unmixed",
            Unmixedness::Cited(_) => "cited",
            Unmixedness::Inconclusive(_) => "inconclusive",
        }
    }
}

pub fn unmixedness_evidence(ideal: &IdealHandle, graph: Option<&Graph>) -> Result<Unmixedness> {
    let gb = ideal.canonical_basis()?;
    if gb.is_unit() {
        return Ok(Unmixedness::Vacuous);
    }
    if gb.is_zero_ideal() {
        return Ok(Unmixedness::Prime(PrimeKind::Zero));
    }
    if gb.elements().iter().all(|p| p.as_variable().is_some()) {
        return Ok(Unmixedness::Prime(PrimeKind::Variables));
    }
    if gb.elements().len() == 1 {
        return Ok(Unmixedness::Principal);
    }
    let ring = ideal.ring();
    Ok(match binomial_monomial_split(ideal, graph)? {
        Split::NotApplicable(why) => Unmixedness::Inconclusive(why),
        Split::Components(cs) => {
            let summary: Vec<ComponentSummary> = cs.iter().map(|c| ComponentSummary::of(ring, c)).collect();
            if cs.len() == 1 {
                Unmixedness::Prime(PrimeKind::Split(cs[0].witness))
            } else if cs.iter().all(|c| c.dimension == cs[0].dimension) {
                Unmixedness::EqualComponentDims(summary)
            } else {
                Unmixedness::Mixed(summary)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: &[&str]) -> RingContext {
        RingContext::new(n.iter().copied()).unwrap()
    }

    #[test]
    fn mixed_monomial_ideal_is_refuted() {
        let r = ring(&["x", "y", "z"]);
        let i = IdealHandle::parse(&r, &["x*y", "y*z", "x*z"]).unwrap();
        match unmixedness_evidence(&i, None).unwrap() {
            Unmixedness::EqualComponentDims(c) => assert_eq!(c.len(), 3),
            u => panic!("{u:?}"),
        }
        let i = IdealHandle::parse(&r, &["x*y", "x*z"]).unwrap();
        assert!(matches!(unmixedness_evidence(&i, None).unwrap(), Unmixedness::Mixed(_)));
    }

    #[test]
    fn lattice_primality() {
        let r = ring(&["a", "b", "c", "d"]);
        let i = IdealHandle::parse(&r, &["a*d - b*c"]).unwrap();
        assert_eq!(unmixedness_evidence(&i, None).unwrap(), Unmixedness::Principal);
        let i = IdealHandle::parse(&r, &["a*d - b*c", "a*c - b^2", "b*d - c^2"]).unwrap();
        assert_eq!(unmixedness_evidence(&i, None).unwrap(), Unmixedness::Prime(PrimeKind::Split(PrimeWitness::Lattice)));
        // a^2 - b^2 = (a - b)(a + b) is not prime
        let i = IdealHandle::parse(&r, &["a^2 - b^2", "c"]).unwrap();
        assert!(matches!(unmixedness_evidence(&i, None).unwrap(), Unmixedness::Inconclusive(_)));
    }

    #[test]
    fn mixed_binomial_split() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = IdealHandle::parse(&r, &["x*y", "x*z - x*w"]).unwrap();
        // components ⟨x⟩ and ⟨y, z - w⟩
        match binomial_monomial_split(&i, None).unwrap() {
            Split::Components(cs) => {
                let mut dims: Vec<usize> = cs.iter().map(|c| c.dimension).collect();
                dims.sort();
                assert_eq!(dims, alloc::vec![2, 3]);
            }
            s => panic!("{s:?}"),
        }
    }
}
