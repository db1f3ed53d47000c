//! Buchberger's algorithm on polynomials whose terms carry precomputed order keys.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use crate::monomial::Monomial;
use crate::order::{CompiledOrder, OrderKey};
use crate::poly::{Coeff, Polynomial};

#[derive(Clone, Debug)]
pub(crate) struct OTerm {
    pub key: OrderKey,
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Terms sorted by key, largest first.
#[derive(Clone, Debug, Default)]
pub(crate) struct OPoly {
    pub terms: Vec<OTerm>,
}

fn add_keys(a: &OrderKey, b: &OrderKey) -> OrderKey {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl OPoly {
    pub fn from_poly(p: &Polynomial, ord: &CompiledOrder) -> OPoly {
        let mut terms: Vec<OTerm> = p
            .terms()
            .iter()
            .map(|t| OTerm { key: ord.key_unchecked(&t.mono), mono: t.mono.clone(), coeff: t.coeff.clone() })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        OPoly { terms }
    }

    pub fn to_poly(&self) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|t| (t.coeff.clone(), t.mono.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &OTerm {
        &self.terms[0]
    }

    pub fn is_constant(&self) -> bool {
        !self.terms.is_empty() && self.terms[0].mono.is_one()
    }

    pub fn make_monic(&mut self) {
        if let Some(lc) = self.terms.first().map(|t| t.coeff.clone()) {
            if !lc.is_one() {
                let inv = lc.recip();
                for t in &mut self.terms {
                    t.coeff = &t.coeff * &inv;
                }
            }
        }
    }

    /// `a - c * m * g` where the slice `a` is sorted and `mkey` is the key of `m`.
    fn sub_scaled(a: &[OTerm], c: &Coeff, m: &Monomial, mkey: &OrderKey, g: &OPoly) -> Vec<OTerm> {
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|t| OTerm {
            key: add_keys(&t.key, mkey),
            mono: t.mono.mul(m),
            coeff: -(&t.coeff * c),
        });
        let mut next_g = gi.next();
        loop {
            match (a.get(i), next_g.take()) {
                (None, None) => break,
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, Some(y)) => {
                    out.push(y);
                    next_g = gi.next();
                }
                (Some(x), Some(y)) => match x.key.cmp(&y.key) {
                    Ordering::Greater => {
                        out.push(x.clone());
                        i += 1;
                        next_g = Some(y);
                    }
                    Ordering::Less => {
                        out.push(y);
                        next_g = gi.next();
                    }
                    Ordering::Equal => {
                        let s = &x.coeff + &y.coeff;
                        if !s.is_zero() {
                            out.push(OTerm { key: y.key, mono: y.mono, coeff: s });
                        }
                        i += 1;
                        next_g = gi.next();
                    }
                },
            }
        }
        out
    }

    /// Full reduction modulo monic `basis`.
    pub fn reduce(mut self, basis: &[&OPoly], ord: &CompiledOrder) -> OPoly {
        let mut rem: Vec<OTerm> = Vec::new();
        let mut start = 0;
        while start < self.terms.len() {
            let lt = &self.terms[start];
            let div = basis.iter().find(|g| g.lead().mono.divides(&lt.mono));
            match div {
                Some(g) => {
                    let q = lt.mono.checked_div(&g.lead().mono).expect("divisor");
                    let qk = ord.key_unchecked(&q);
                    let c = lt.coeff.clone();
                    self.terms = Self::sub_scaled(&self.terms[start..], &c, &q, &qk, g);
                    start = 0;
                }
                None => {
                    rem.push(self.terms[start].clone());
                    start += 1;
                }
            }
        }
        OPoly { terms: rem }
    }

    /// S-polynomial of two monic polynomials.
    pub fn s_poly(f: &OPoly, g: &OPoly, ord: &CompiledOrder) -> OPoly {
        let l = f.lead().mono.lcm(&g.lead().mono);
        let uf = l.checked_div(&f.lead().mono).expect("lcm");
        let ug = l.checked_div(&g.lead().mono).expect("lcm");
        let ukf = ord.key_unchecked(&uf);
        let ukg = ord.key_unchecked(&ug);
        let zero: Vec<OTerm> = Vec::new();
        let a = Self::sub_scaled(&zero, &(-Coeff::one()), &uf, &ukf, f);
        let b = Self::sub_scaled(&a, &Coeff::one(), &ug, &ukg, g);
        OPoly { terms: b }
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u32,
    key: OrderKey,
}

/// Outcome of a completion: either the unit ideal or a reduced monic basis.
pub(crate) enum Completion {
    Unit,
    Basis(Vec<OPoly>),
}

pub(crate) fn buchberger(gens: &[Polynomial], ord: &CompiledOrder) -> Completion {
    let mut polys: Vec<OPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<OPoly> = gens.iter().filter(|p| !p.is_zero()).map(|p| OPoly::from_poly(p, ord)).collect();
    inputs.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    for f in inputs {
        let basis: Vec<&OPoly> = active.iter().map(|&k| &polys[k]).collect();
        let mut h = f.reduce(&basis, ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.is_constant() {
            return Completion::Unit;
        }
        update(&mut polys, &mut active, &mut pairs, h, ord);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.deg.cmp(&q.deg).then_with(|| p.key.cmp(&q.key)).then((p.i, p.j).cmp(&(q.i, q.j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let s = OPoly::s_poly(&polys[pair.i], &polys[pair.j], ord);
        let basis: Vec<&OPoly> = active.iter().map(|&k| &polys[k]).collect();
        let mut h = s.reduce(&basis, ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.is_constant() {
            return Completion::Unit;
        }
        update(&mut polys, &mut active, &mut pairs, h, ord);
    }

    let mut out = Vec::with_capacity(active.len());
    for (idx, &k) in active.iter().enumerate() {
        let others: Vec<&OPoly> = active.iter().enumerate().filter(|(i, _)| *i != idx).map(|(_, &k2)| &polys[k2]).collect();
        let mut r = polys[k].clone().reduce(&others, ord);
        r.make_monic();
        out.push(r);
    }
    Completion::Basis(out)
}

/// Gebauer–Möller installation of a new basis element.
fn update(polys: &mut Vec<OPoly>, active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: OPoly, ord: &CompiledOrder) {
    let hn = polys.len();
    let hlm = h.lead().mono.clone();
    polys.push(h);

    let cands: Vec<(usize, Monomial, bool)> = active
        .iter()
        .map(|&g| {
            let glm = &polys[g].lead().mono;
            (g, hlm.lcm(glm), hlm.is_coprime(glm))
        })
        .collect();
    let mut kept: Vec<usize> = Vec::new();
    for (idx, (_, l, coprime)) in cands.iter().enumerate() {
        let dominated_later = cands[idx + 1..].iter().any(|(_, l2, _)| l2.divides(l));
        let dominated_kept = kept.iter().any(|&k| cands[k].1.divides(l));
        if *coprime || (!dominated_later && !dominated_kept) {
            kept.push(idx);
        }
    }

    pairs.retain(|p| {
        !(hlm.divides(&p.lcm)
            && hlm.lcm(&polys[p.i].lead().mono) != p.lcm
            && hlm.lcm(&polys[p.j].lead().mono) != p.lcm)
    });

    for idx in kept {
        let (g, ref l, coprime) = cands[idx];
        if coprime {
            continue;
        }
        pairs.push(Pair { i: g, j: hn, deg: l.degree(), key: ord.key_unchecked(l), lcm: l.clone() });
    }

    active.retain(|&g| !hlm.divides(&polys[g].lead().mono));
    active.push(hn);
}

/// Whether every S-polynomial of `gens` reduces to zero modulo `gens`.
pub(crate) fn is_groebner(gens: &[Polynomial], ord: &CompiledOrder) -> bool {
    let ps: Vec<OPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut o = OPoly::from_poly(p, ord);
            o.make_monic();
            o
        })
        .collect();
    let refs: Vec<&OPoly> = ps.iter().collect();
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            if ps[i].lead().mono.is_coprime(&ps[j].lead().mono) {
                continue;
            }
            if !OPoly::s_poly(&ps[i], &ps[j], ord).reduce(&refs, ord).is_zero() {
                return false;
            }
        }
    }
    true
}
