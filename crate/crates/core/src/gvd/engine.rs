use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::budget::{Budget, Unlimited};
use crate::decomposition::{unmixedness_evidence, Unmixedness};
use crate::error::Result;
use crate::graph::Graph;
use crate::groebner::{self, IdealHandle};
use crate::poly::Polynomial;
use crate::ring::{RingContext, VariableId};

use super::cert::{Branch, BranchFailure, CertNode, Child, GvdCertificate, Step, Verdict};
use super::split::{check_decomposition, cn_split, cn_split_unchecked, degeneracy, Degeneracy};

#[derive(Clone, Debug)]
pub struct GvdOptions {
    /// Variable to try first at a node, keyed by its path from the root:
    /// `""` is the root, and each `C` or `N` descends into that child.
    pub hints: BTreeMap<String, String>,
    /// Split sums of ideals in disjoint variables into separate searches.
    pub tensor_split: bool,
    /// Names variables as edges, allowing toric primality witnesses.
    pub graph: Option<Graph>,
    /// Recompute each decomposition identity and the saturation description of `C`.
    pub cross_check: bool,
}

impl Default for GvdOptions {
    fn default() -> Self {
        GvdOptions { hints: BTreeMap::new(), tensor_split: true, graph: None, cross_check: false }
    }
}

impl GvdOptions {
    pub fn with_hint(mut self, path: &str, var: &str) -> Self {
        self.hints.insert(path.into(), var.into());
        self
    }

    pub fn with_graph(mut self, g: Graph) -> Self {
        self.graph = Some(g);
        self
    }
}

type MemoKey = (Vec<String>, Vec<Polynomial>);

/// An ideal reduced to its support ring.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub ring: RingContext,
    pub ideal: IdealHandle,
    pub generators: Vec<Polynomial>,
}

pub fn canonicalize(ideal: &IdealHandle) -> Result<Canonical> {
    let gb = ideal.canonical_basis()?;
    let mut support: Vec<VariableId> = gb.elements().iter().flat_map(|p| p.support()).collect();
    support.sort();
    support.dedup();
    let (ring, map) = ideal.ring().restrict(&support);
    let generators: Vec<Polynomial> =
        gb.elements().iter().map(|p| p.remap(&map).expect("support covers the basis")).collect();
    let ideal = IdealHandle::new(ring.clone(), generators.clone())?.with_canonical_basis()?;
    let generators = ideal.canonical_basis()?.elements().to_vec();
    Ok(Canonical { ring, ideal, generators })
}

/// Connected blocks of the basis under sharing a variable.
pub fn tensor_blocks(gens: &[Polynomial]) -> Vec<Vec<usize>> {
    let n = gens.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let mut owner: BTreeMap<VariableId, usize> = BTreeMap::new();
    for (i, g) in gens.iter().enumerate() {
        for v in g.support() {
            match owner.get(&v) {
                Some(&j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
                None => {
                    owner.insert(v, i);
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(i);
    }
    blocks.into_values().collect()
}

/// Candidate decomposition variables, most promising first.
pub fn candidate_order(c: &Canonical) -> Vec<VariableId> {
    let order = c.ideal.canonical_order();
    let mut keyed: Vec<((bool, u32, usize), VariableId)> = c
        .ring
        .vars()
        .map(|y| {
            let linear_lead = c.generators.iter().any(|g| g.leading_monomial(&order).map(|m| m.exponent(y) == 1).unwrap_or(false));
            let deg = c.generators.iter().map(|g| g.degree_in(y)).max().unwrap_or(0);
            ((!linear_lead, deg, y.index()), y)
        })
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, y)| y).collect()
}

/// Outcome of trying one variable at a node.
#[derive(Clone, Debug)]
pub enum BranchOutcome {
    Success { step: Step },
    Failure(Branch),
}

/// Depth-first search for a geometric vertex decomposition tree.
pub struct Engine<'a> {
    opts: GvdOptions,
    budget: &'a dyn Budget,
    memo: BTreeMap<MemoKey, Arc<CertNode>>,
    visited: u64,
}

impl<'a> Engine<'a> {
    pub fn new(opts: GvdOptions, budget: &'a dyn Budget) -> Self {
        Engine { opts, budget, memo: BTreeMap::new(), visited: 0 }
    }

    pub fn visited(&self) -> u64 {
        self.visited
    }

    pub fn options(&self) -> &GvdOptions {
        &self.opts
    }

    pub fn certify(&mut self, ideal: &IdealHandle) -> Result<GvdCertificate> {
        self.visit(ideal, "")
    }

    fn leaf(&self, c: &Canonical, verdict: Verdict, unmixedness: Option<Unmixedness>, step: Step) -> Arc<CertNode> {
        Arc::new(CertNode { ring: c.ring.clone(), generators: c.generators.clone(), verdict, unmixedness, step })
    }

    fn visit(&mut self, ideal: &IdealHandle, path: &str) -> Result<GvdCertificate> {
        let outer = ideal.ring().clone();
        let c = canonicalize(ideal)?;
        let wrap = |node| GvdCertificate { ring: outer.clone(), node };
        if c.ideal.is_unit()? {
            return Ok(wrap(self.leaf(&c, Verdict::Gvd, Some(Unmixedness::Vacuous), Step::Unit)));
        }
        if c.generators.is_empty() {
            return Ok(wrap(self.leaf(&c, Verdict::Gvd, Some(Unmixedness::Prime(crate::decomposition::PrimeKind::Zero)), Step::Zero)));
        }
        if c.generators.iter().all(|g| g.as_variable().is_some()) {
            let u = Unmixedness::Prime(crate::decomposition::PrimeKind::Variables);
            return Ok(wrap(self.leaf(&c, Verdict::Gvd, Some(u), Step::Variables)));
        }
        let hint = self.opts.hints.get(path).and_then(|n| c.ring.var(n).ok());
        let key: MemoKey = (c.ring.names().to_vec(), c.generators.clone());
        if hint.is_none() {
            if let Some(n) = self.memo.get(&key) {
                return Ok(wrap(n.clone()));
            }
        }
        self.visited += 1;
        if self.budget.exhausted() {
            return Ok(wrap(self.leaf(
                &c,
                Verdict::Inconclusive,
                None,
                Step::Open { reason: "budget exhausted".into(), failures: Vec::new() },
            )));
        }
        let node = self.search(&c, hint, path)?;
        if node.verdict != Verdict::Inconclusive {
            self.memo.insert(key, node.clone());
        }
        Ok(wrap(node))
    }

    fn search(&mut self, c: &Canonical, hint: Option<VariableId>, path: &str) -> Result<Arc<CertNode>> {
        if hint.is_none() && self.opts.tensor_split {
            let blocks = tensor_blocks(&c.generators);
            if blocks.len() > 1 {
                return self.tensor(c, &blocks, path);
            }
        }
        let unmixed = unmixedness_evidence(&c.ideal, self.opts.graph.as_ref())?;
        if unmixed.is_refuted() {
            return Ok(self.leaf(c, Verdict::NotGvd, Some(unmixed), Step::Mixed));
        }
        let mut vars = candidate_order(c);
        if let Some(h) = hint {
            vars.retain(|&v| v != h);
            vars.insert(0, h);
        }
        let mut failures = Vec::new();
        for y in vars {
            match self.branch(c, y, path)? {
                BranchOutcome::Success { step } => {
                    let verdict = if unmixed.is_unmixed() { Verdict::Gvd } else { Verdict::Inconclusive };
                    return Ok(self.leaf(c, verdict, Some(unmixed), step));
                }
                BranchOutcome::Failure(b) => failures.push(b),
            }
        }
        Ok(self.assemble_failures(c, unmixed, failures))
    }

    pub(crate) fn assemble_failures(&self, c: &Canonical, unmixed: Unmixedness, failures: Vec<Branch>) -> Arc<CertNode> {
        let open = failures.iter().find_map(|b| match &b.failure {
            BranchFailure::Undecided(r) => Some(format!("{}: {}", c.ring.name(b.y), r)),
            _ => None,
        });
        match open {
            None => self.leaf(c, Verdict::NotGvd, Some(unmixed), Step::Exhausted { failures }),
            Some(reason) => self.leaf(c, Verdict::Inconclusive, Some(unmixed), Step::Open { reason, failures }),
        }
    }

    fn tensor(&mut self, c: &Canonical, blocks: &[Vec<usize>], path: &str) -> Result<Arc<CertNode>> {
        let mut parts = Vec::new();
        let mut all = true;
        let mut refuted = false;
        for b in blocks {
            let gens: Vec<Polynomial> = b.iter().map(|&i| c.generators[i].clone()).collect();
            let part = IdealHandle::new(c.ring.clone(), gens)?;
            let cert = self.visit(&part, path)?;
            match cert.verdict() {
                Verdict::Gvd => {}
                Verdict::NotGvd => refuted = true,
                Verdict::Inconclusive => all = false,
            }
            parts.push(cert);
            if refuted {
                break;
            }
        }
        let verdict = if refuted {
            Verdict::NotGvd
        } else if all {
            Verdict::Gvd
        } else {
            Verdict::Inconclusive
        };
        let unmixed = if all && !refuted { Some(Unmixedness::TensorOfUnmixed) } else { None };
        Ok(self.leaf(c, verdict, unmixed, Step::Tensor { parts }))
    }

    /// Tries `y` at the node `c`, recursing into both children.
    pub fn branch(&mut self, c: &Canonical, y: VariableId, path: &str) -> Result<BranchOutcome> {
        let fail = |failure| Ok(BranchOutcome::Failure(Branch { y, failure }));
        let split = if self.opts.cross_check { cn_split(&c.ideal, y, None)? } else { cn_split_unchecked(&c.ideal, y, None)? };
        if !split.square_free_in_y {
            return fail(BranchFailure::NotSquareFreeInY);
        }
        if self.opts.cross_check && !check_decomposition(&split, self.opts.graph.as_ref())?.holds {
            return fail(BranchFailure::DecompositionFails);
        }
        let (_, ci, ni) = split.contracted();
        let mut cp = String::from(path);
        cp.push('C');
        let mut np = String::from(path);
        np.push('N');
        let n_cert = self.visit(&ni, &np)?;
        match n_cert.verdict() {
            Verdict::NotGvd => return fail(BranchFailure::ChildNotGvd { which: Child::N, child: n_cert }),
            Verdict::Inconclusive => return fail(BranchFailure::Undecided("deletion ideal undecided".into())),
            Verdict::Gvd => {}
        }
        let c_cert = self.visit(&ci, &cp)?;
        match c_cert.verdict() {
            Verdict::NotGvd => return fail(BranchFailure::ChildNotGvd { which: Child::C, child: c_cert }),
            Verdict::Inconclusive => return fail(BranchFailure::Undecided("link ideal undecided".into())),
            Verdict::Gvd => {}
        }
        let degeneracy = degeneracy(&split.c, &split.n, self.opts.graph.as_ref()).unwrap_or(Degeneracy::Unknown);
        Ok(BranchOutcome::Success { step: Step::Decomposition { y, order: split.order, degeneracy, c: c_cert, n: n_cert } })
    }

    /// Node for `c` from branch outcomes gathered elsewhere, in variable order.
    pub fn assemble(&self, c: &Canonical, outcomes: Vec<BranchOutcome>) -> Result<GvdCertificate> {
        let unmixed = unmixedness_evidence(&c.ideal, self.opts.graph.as_ref())?;
        let wrap = |node| GvdCertificate { ring: c.ring.clone(), node };
        if unmixed.is_refuted() {
            return Ok(wrap(self.leaf(c, Verdict::NotGvd, Some(unmixed), Step::Mixed)));
        }
        let mut failures = Vec::new();
        for o in outcomes {
            match o {
                BranchOutcome::Success { step } => {
                    let verdict = if unmixed.is_unmixed() { Verdict::Gvd } else { Verdict::Inconclusive };
                    return Ok(wrap(self.leaf(c, verdict, Some(unmixed), step)));
                }
                BranchOutcome::Failure(b) => failures.push(b),
            }
        }
        Ok(wrap(self.assemble_failures(c, unmixed, failures)))
    }
}

/// Decides whether `ideal` is geometrically vertex decomposable.
pub fn is_gvd(ideal: &IdealHandle, opts: GvdOptions, budget: &dyn Budget) -> Result<GvdCertificate> {
    Engine::new(opts, budget).certify(ideal)
}

pub fn is_gvd_unlimited(ideal: &IdealHandle) -> Result<GvdCertificate> {
    is_gvd(ideal, GvdOptions::default(), &Unlimited)
}

/// Certificate for the toric ideal of `G ⊔ H`, combining the two searches.
pub fn gvd_disjoint_union(g: &Graph, h: &Graph, budget: &dyn Budget) -> Result<GvdCertificate> {
    let u = g.disjoint_union(h)?;
    let ring = u.ring()?;
    let mut parts = Vec::new();
    let mut verdict = Verdict::Gvd;
    let mut gens = Vec::new();
    let all = u.edge_names();
    let (left, right) = all.split_at(g.num_edges());
    for names in [left, right] {
        let sub = u.with_edge_names(names);
        let ideal = groebner::extend(&crate::toric::toric_ideal(&sub)?, &ring)?;
        gens.extend(ideal.generators().iter().cloned());
        let cert = is_gvd(&ideal, GvdOptions { graph: Some(u.clone()), ..GvdOptions::default() }, budget)?;
        verdict = match (verdict, cert.verdict()) {
            (Verdict::NotGvd, _) | (_, Verdict::NotGvd) => Verdict::NotGvd,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::Gvd,
        };
        parts.push(cert);
    }
    let whole = IdealHandle::new(ring.clone(), gens)?;
    let c = canonicalize(&whole)?;
    let unmixedness = (verdict == Verdict::Gvd).then_some(Unmixedness::TensorOfUnmixed);
    let node = Arc::new(CertNode { ring: c.ring, generators: c.generators, verdict, unmixedness, step: Step::Tensor { parts } });
    Ok(GvdCertificate { ring, node })
}
