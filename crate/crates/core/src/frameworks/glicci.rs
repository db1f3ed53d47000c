//! Hypothesis checks for the glicci theorems on toric ideals of graphs.
//!
//! Liaison itself is never computed. Each theorem is reported with the
//! hypotheses that could be verified and a witness for each.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::graph::Graph;
use crate::groebner::{self, IdealHandle};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{RingContext, VariableId};
use crate::toric;

use num_traits::One;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    /// `None` when the search ran out of budget.
    pub holds: Option<bool>,
    pub witness: Option<String>,
    /// Reported for reference; not needed for the theorem to fire.
    pub informational: bool,
}

impl Hypothesis {
    fn new(name: &str, holds: Option<bool>, witness: Option<String>) -> Self {
        Hypothesis { name: name.into(), holds, witness, informational: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub theorem: String,
    pub hypotheses: Vec<Hypothesis>,
    pub fires: bool,
}

impl TheoremCheck {
    fn settle(theorem: &str, hypotheses: Vec<Hypothesis>) -> Self {
        let fires = hypotheses.iter().filter(|h| !h.informational).all(|h| h.holds == Some(true));
        TheoremCheck { theorem: theorem.into(), hypotheses, fires }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlicciConclusion {
    CertifiedByTheorem,
    HypothesesNotMet,
}

impl GlicciConclusion {
    pub fn label(self) -> &'static str {
        match self {
            GlicciConclusion::CertifiedByTheorem => "glicci-certified-by-theorem",
            GlicciConclusion::HypothesesNotMet => "hypotheses-not-met",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlicciReport {
    pub checks: Vec<TheoremCheck>,
    pub conclusion: GlicciConclusion,
}

impl GlicciReport {
    pub fn fired(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.fires).map(|c| c.theorem.as_str()).collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GlicciOptions {
    /// Random lex orders tried per search.
    pub lex_samples: usize,
}

impl Default for GlicciOptions {
    fn default() -> Self {
        GlicciOptions { lex_samples: 200 }
    }
}

pub const GLUING: &str = "gluing an even cycle onto a Cohen-Macaulay graph";
pub const FOUR_CYCLE: &str = "edge in a 4-cycle with a square-free y-compatible degeneration";
pub const GAP_FREE: &str = "gap-free graph containing a 4-cycle";

/// An even cycle hanging off the edge `edge`: a path whose inner vertices
/// have degree two, joining the endpoints of `edge`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedCycle {
    pub edge: usize,
    /// Path edges from one endpoint of `edge` to the other.
    pub path: Vec<usize>,
}

impl GluedCycle {
    /// The graph the cycle was glued onto.
    pub fn base(&self, g: &Graph) -> Graph {
        g.without_edges(&self.path)
    }

    /// `f1 f3 ⋯ f_{2n-1} − f2 f4 ⋯ f_{2n-2} e`.
    pub fn binomial(&self, ring: &RingContext, g: &Graph) -> Result<Polynomial> {
        let var = |i: usize| ring.var(&g.edges()[i].name);
        let mut odd = Vec::new();
        let mut even = Vec::new();
        for (k, &p) in self.path.iter().enumerate() {
            if k % 2 == 0 { odd.push((var(p)?, 1)) } else { even.push((var(p)?, 1)) }
        }
        even.push((var(self.edge)?, 1));
        Ok(Polynomial::from_terms([
            (Coeff::one(), Monomial::from_pairs(odd)),
            (-Coeff::one(), Monomial::from_pairs(even)),
        ]))
    }
}

pub fn glued_cycles(g: &Graph) -> Vec<GluedCycle> {
    let mut out = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let (u, v) = e.ends;
        for (j, f) in g.edges().iter().enumerate() {
            if j == i || !f.touches(u) {
                continue;
            }
            let mut path = alloc::vec![j];
            let mut at = f.other(u);
            let mut prev = j;
            while at != v && g.degree(at) == 2 && at != u {
                let next = g
                    .edges()
                    .iter()
                    .enumerate()
                    .find(|&(k, x)| k != prev && x.touches(at))
                    .map(|(k, _)| k)
                    .expect("degree two");
                prev = next;
                at = g.edges()[next].other(at);
                path.push(next);
            }
            if at == v && path.len() >= 3 && path.len() % 2 == 1 {
                out.push(GluedCycle { edge: i, path });
            }
        }
    }
    out
}

/// An order from `orders` with square-free initial ideal, if any.
pub fn square_free_degeneration(
    ideal: &IdealHandle,
    orders: impl IntoIterator<Item = MonomialOrder>,
) -> Result<Option<MonomialOrder>> {
    for o in orders {
        let gb = ideal.basis(&o)?;
        if gb.leading_monomials().iter().all(|m| m.is_square_free()) {
            return Ok(Some(o));
        }
    }
    Ok(None)
}

fn random_lex<R: Rng + ?Sized>(ring: &RingContext, first: Option<VariableId>, rng: &mut R) -> MonomialOrder {
    let mut rest: Vec<VariableId> = ring.vars().filter(|&v| Some(v) != first).collect();
    rest.shuffle(rng);
    MonomialOrder::Lex(first.into_iter().chain(rest).collect())
}

fn cm_by_degeneration<R: Rng + ?Sized>(g: &Graph, opts: GlicciOptions, rng: &mut R) -> Result<Hypothesis> {
    let ideal = toric::toric_ideal(g)?;
    let ring = ideal.ring().clone();
    let mut orders = alloc::vec![MonomialOrder::grevlex(&ring), MonomialOrder::lex(&ring)];
    orders.extend((0..opts.lex_samples).map(|_| random_lex(&ring, None, rng)));
    let hit = square_free_degeneration(&ideal, orders)?;
    Ok(Hypothesis::new(
        "base graph is Cohen-Macaulay (square-free degeneration)",
        hit.as_ref().map(|_| true),
        Some(match hit {
            Some(o) => o.describe(&ring),
            None => format!("not found within {} orders", opts.lex_samples + 2),
        }),
    ))
}

fn gluing_check<R: Rng + ?Sized>(g: &Graph, opts: GlicciOptions, rng: &mut R) -> Result<TheoremCheck> {
    let cycles = glued_cycles(g);
    let names = |c: &GluedCycle| {
        let p: Vec<&str> = c.path.iter().map(|&k| g.edges()[k].name.as_str()).collect();
        format!("edge {} with path {}", g.edges()[c.edge].name, p.join(" "))
    };
    if cycles.is_empty() {
        return Ok(TheoremCheck::settle(GLUING, alloc::vec![Hypothesis::new("glued even cycle", Some(false), None)]));
    }
    let mut c = &cycles[0];
    let mut cm = cm_by_degeneration(&c.base(g), opts, rng)?;
    for other in &cycles[1..] {
        if cm.holds == Some(true) {
            break;
        }
        c = other;
        cm = cm_by_degeneration(&c.base(g), opts, rng)?;
    }
    let ring = g.ring()?;
    let base = groebner::extend(&toric::toric_ideal(&c.base(g))?, &ring)?;
    let glued = groebner::sum(&base, &IdealHandle::new(ring.clone(), alloc::vec![c.binomial(&ring, g)?])?)?;
    let identity = groebner::ideal_equal(&glued, &toric::toric_ideal(g)?)?;
    Ok(TheoremCheck::settle(
        GLUING,
        alloc::vec![
            Hypothesis::new("glued even cycle", Some(true), Some(names(c))),
            cm,
            Hypothesis::new("I_H = I_G + <F>", Some(identity), Some(c.binomial(&ring, g)?.to_string_in(&ring))),
        ],
    ))
}

fn four_cycle_check<R: Rng + ?Sized>(g: &Graph, opts: GlicciOptions, rng: &mut R) -> Result<TheoremCheck> {
    let ring = g.ring()?;
    let ideal = toric::toric_ideal(g)?;
    let mut in_cycle = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        if !g.four_cycles_containing(i).is_empty() {
            in_cycle.push((i, ring.var(&e.name)?));
        }
    }
    let Some(&(first, _)) = in_cycle.first() else {
        return Ok(TheoremCheck::settle(FOUR_CYCLE, alloc::vec![Hypothesis::new("edge in a 4-cycle", Some(false), None)]));
    };
    let mut hit = None;
    for &(i, y) in &in_cycle {
        let mut orders = alloc::vec![
            MonomialOrder::y_compatible(y, MonomialOrder::GrevLex(ring.vars().filter(|&v| v != y).collect())),
            MonomialOrder::y_lex(&ring, y),
        ];
        orders.extend((0..opts.lex_samples).map(|_| random_lex(&ring, Some(y), rng)));
        if let Some(o) = square_free_degeneration(&ideal, orders)? {
            hit = Some((i, o));
            break;
        }
    }
    let y = hit.as_ref().map(|h| h.0).unwrap_or(first);
    Ok(TheoremCheck::settle(
        FOUR_CYCLE,
        alloc::vec![
            Hypothesis::new("edge in a 4-cycle", Some(true), Some(g.edges()[y].name.clone())),
            Hypothesis::new(
                "y-compatible order with square-free initial ideal",
                hit.as_ref().map(|_| true),
                Some(match &hit {
                    Some((_, o)) => o.describe(&ring),
                    None => format!("not found within {} orders per edge", opts.lex_samples + 2),
                }),
            ),
        ],
    ))
}

fn gap_free_check(g: &Graph) -> TheoremCheck {
    let cycles = g.four_cycles();
    let witness = cycles.first().map(|c| {
        let n: Vec<&str> = c.iter().map(|&k| g.edges()[k].name.as_str()).collect();
        n.join(" ")
    });
    let complement = g.complement();
    let mut literal = Hypothesis::new("complement is not gap-free", Some(!complement.is_gap_free()), None);
    literal.informational = true;
    TheoremCheck::settle(
        GAP_FREE,
        alloc::vec![
            Hypothesis::new("gap-free", Some(g.is_gap_free()), None),
            Hypothesis::new("contains a 4-cycle", Some(!cycles.is_empty()), witness),
            literal,
        ],
    )
}

pub fn glicci_checks<R: Rng + ?Sized>(g: &Graph, opts: GlicciOptions, rng: &mut R) -> Result<GlicciReport> {
    let checks = alloc::vec![gluing_check(g, opts, rng)?, four_cycle_check(g, opts, rng)?, gap_free_check(g)];
    let conclusion = if checks.iter().any(|c| c.fires) {
        GlicciConclusion::CertifiedByTheorem
    } else {
        GlicciConclusion::HypothesesNotMet
    };
    Ok(GlicciReport { checks, conclusion })
}
