//! Toric ideals of graphs through Graver bases of the incidence lattice.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groebner::IdealHandle;
use crate::lattice;
use crate::monomial::Monomial;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{RingContext, VariableId};

/// `g ⊑ s`: same sign pattern where `g` is nonzero, and no larger in absolute value.
pub fn conformal_le(g: &[i64], s: &[i64]) -> bool {
    g.iter().zip(s).all(|(&a, &b)| a == 0 || (a.signum() == b.signum() && a.abs() <= b.abs()))
}

fn reduce(mut s: Vec<i64>, basis: &[Vec<i64>]) -> Vec<i64> {
    'outer: loop {
        if s.iter().all(|&x| x == 0) {
            return s;
        }
        for g in basis {
            if conformal_le(g, &s) {
                for (x, y) in s.iter_mut().zip(g) {
                    *x -= y;
                }
                continue 'outer;
            }
        }
        return s;
    }
}

/// The ⊑-minimal nonzero elements of the lattice spanned by `gens`, both signs.
pub fn graver_completion(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut basis: Vec<Vec<i64>> = Vec::new();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    for f in gens {
        if f.iter().all(|&x| x == 0) {
            continue;
        }
        for v in [f.clone(), f.iter().map(|x| -x).collect()] {
            if seen.insert(v.clone()) {
                basis.push(v);
            }
        }
    }
    let add = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let mut pending: Vec<Vec<i64>> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pending.push(add(&basis[i], &basis[j]));
        }
    }
    while let Some(s) = pending.pop() {
        let f = reduce(s, &basis);
        if f.iter().all(|&x| x == 0) || seen.contains(&f) {
            continue;
        }
        for g in &basis {
            pending.push(add(&f, g));
        }
        seen.insert(f.clone());
        basis.push(f);
    }
    let mut minimal: Vec<Vec<i64>> = basis
        .iter()
        .filter(|v| !basis.iter().any(|w| w != *v && conformal_le(w, v)))
        .cloned()
        .collect();
    minimal.sort();
    minimal
}

/// `x^{v⁺} - x^{v⁻}` over the edge variables `vars`.
pub fn binomial_of(vars: &[VariableId], v: &[i64]) -> Polynomial {
    let pos = Monomial::from_pairs(vars.iter().zip(v).filter(|(_, &x)| x > 0).map(|(&y, &x)| (y, x as u32)));
    let neg = Monomial::from_pairs(vars.iter().zip(v).filter(|(_, &x)| x < 0).map(|(&y, &x)| (y, (-x) as u32)));
    Polynomial::from_terms([(Coeff::one(), pos), (-Coeff::one(), neg)])
}

/// Exponent difference `u - w` of a pure binomial `c(x^u - x^w)`.
pub fn exponent_vector(p: &Polynomial, arity: usize) -> Option<Vec<i64>> {
    if !p.is_pure_binomial() {
        return None;
    }
    let a = p.terms()[0].mono.to_dense(arity);
    let b = p.terms()[1].mono.to_dense(arity);
    Some(a.iter().zip(&b).map(|(&x, &y)| x as i64 - y as i64).collect())
}

/// A primitive binomial of a graph with its exponent vector over `E(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveBinomial {
    pub vector: Vec<i64>,
    pub binomial: Polynomial,
}

/// The Graver basis of `I_G`, one binomial per sign pair, in `G.ring()`.
///
/// For toric ideals of graphs this set is a universal Gröbner basis.
pub fn universal_groebner_basis(g: &Graph) -> Result<Vec<PrimitiveBinomial>> {
    let n = g.num_edges();
    let kernel = lattice::kernel_basis(&g.incidence_matrix(), n)?;
    let vars: Vec<VariableId> = (0..n as u32).map(VariableId).collect();
    let mut out: Vec<PrimitiveBinomial> = Vec::new();
    for v in graver_completion(&kernel) {
        let b = binomial_of(&vars, &v);
        // keep the sign whose positive part is canonically larger
        if b.terms()[0].coeff.is_one() {
            out.push(PrimitiveBinomial { vector: v, binomial: b });
        }
    }
    out.sort_by(|a, b| a.binomial.cmp(&b.binomial));
    Ok(out)
}

pub fn toric_ideal(g: &Graph) -> Result<IdealHandle> {
    let ring = g.ring()?;
    IdealHandle::new(ring, universal_groebner_basis(g)?.into_iter().map(|p| p.binomial).collect())
}

/// `I_H` for the subgraph `H` on the edges named by `ring`, presented in `ring`.
pub fn toric_ideal_in(g: &Graph, ring: &RingContext) -> Result<IdealHandle> {
    let h = g.with_edge_names(ring.names());
    if h.num_edges() != ring.arity() {
        return Err(Error::InvalidGraph("ring variables are not all edges of the graph".into()));
    }
    let hr = h.ring()?;
    let map = hr.embedding_into(ring)?;
    let gens = universal_groebner_basis(&h)?
        .into_iter()
        .map(|p| p.binomial.remap(&map).expect("names embed"))
        .collect();
    IdealHandle::new(ring.clone(), gens)
}

/// `dim K[E(G)]/I_G`: vertices on edges minus bipartite components.
pub fn toric_dimension(g: &Graph) -> usize {
    let comps = g.edge_components();
    let verts: usize = comps.iter().map(|c| c.len()).sum();
    let bip = comps
        .iter()
        .filter(|c| {
            let sub: Vec<usize> =
                (0..g.num_edges()).filter(|&i| c.contains(&g.edges()[i].ends.0)).collect();
            g.with_edges(&sub).is_bipartite()
        })
        .count();
    verts - bip
}
