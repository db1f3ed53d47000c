use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;

use crate::decomposition::{unmixedness_evidence, Unmixedness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groebner::{self, IdealHandle};
use crate::ring::VariableId;

use super::cert::{BranchFailure, CertNode, Child, GvdCertificate, Step, Verdict};
use super::split::{check_decomposition, cn_split_unchecked};

/// What a successful replay re-established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayReport {
    pub verdict: Verdict,
    pub nodes: usize,
    pub decompositions: usize,
}

fn bad(msg: String) -> Error {
    Error::Hypothesis(format!("replay: {msg}"))
}

fn node_ideal(n: &CertNode) -> Result<IdealHandle> {
    IdealHandle::new(n.ring.clone(), n.generators.clone())
}

/// The ideal of a certificate in its support ring.
pub fn support_ideal(c: &GvdCertificate) -> Result<IdealHandle> {
    node_ideal(&c.node)
}

/// The ideal a certificate speaks about, in its outer ring.
pub fn certificate_ideal(c: &GvdCertificate) -> Result<IdealHandle> {
    groebner::extend(&node_ideal(&c.node)?, &c.ring)
}

/// Re-verifies every claim of a certificate from its stored generators.
///
/// Each decomposition is recomputed under its recorded order, each child is
/// compared with the recomputed `C` or `N`, and each unmixedness claim is
/// re-derived. With a graph, the root must be its toric ideal. Inconclusive parts are accepted but cannot support a
/// conclusive verdict.
pub fn replay(cert: &GvdCertificate, graph: Option<&Graph>) -> Result<ReplayReport> {
    let mut r = ReplayReport { verdict: cert.verdict(), nodes: 0, decompositions: 0 };
    if let Some(g) = graph {
        let toric = crate::toric::toric_ideal(g)?;
        let same = groebner::extend(&certificate_ideal(cert)?, toric.ring())
            .and_then(|i| groebner::ideal_equal(&i, &toric))
            .unwrap_or(false);
        if !same {
            return Err(bad("root ideal is not the toric ideal of the given graph".into()));
        }
    }
    let v = check(cert, graph, &mut r)?;
    if v != cert.verdict() {
        return Err(bad(format!("recorded verdict {:?} but replay gives {:?}", cert.verdict(), v)));
    }
    Ok(r)
}

fn expect_child(child: &GvdCertificate, want: &IdealHandle, which: Child) -> Result<()> {
    let Ok(got) = groebner::extend(&node_ideal(&child.node)?, want.ring()) else {
        return Err(bad(format!("{which:?} child involves a variable outside the contracted ring")));
    };
    if !groebner::ideal_equal(&got, want)? {
        return Err(bad(format!("{which:?} child does not match the recomputed ideal")));
    }
    Ok(())
}

fn check(cert: &GvdCertificate, graph: Option<&Graph>, r: &mut ReplayReport) -> Result<Verdict> {
    r.nodes += 1;
    let n = &cert.node;
    if n.ring.names().iter().any(|x| cert.ring.var(x).is_err()) {
        return Err(bad("support ring is not inside the outer ring".into()));
    }
    let ideal = node_ideal(n)?;
    let gb = ideal.canonical_basis()?;
    let claimed_unmixed = match &n.unmixedness {
        Some(u) => {
            let fresh = unmixedness_evidence(&ideal, graph)?;
            let recomputable = !matches!(u, Unmixedness::TensorOfUnmixed | Unmixedness::Cited(_));
            if u.is_unmixed() && recomputable && !fresh.is_unmixed() {
                return Err(bad(format!("unmixedness claim '{}' not reproduced ('{}')", u.tag(), fresh.tag())));
            }
            if u.is_refuted() && !fresh.is_refuted() {
                return Err(bad("mixedness claim not reproduced".into()));
            }
            u.is_unmixed()
        }
        None => false,
    };
    let verdict = match &n.step {
        Step::Unit => {
            if !gb.is_unit() {
                return Err(bad("unit node holds a proper ideal".into()));
            }
            Verdict::Gvd
        }
        Step::Zero => {
            if !gb.is_zero_ideal() {
                return Err(bad("zero node holds a nonzero ideal".into()));
            }
            Verdict::Gvd
        }
        Step::Variables => {
            if !gb.elements().iter().all(|p| p.as_variable().is_some()) {
                return Err(bad("variables node is not generated by variables".into()));
            }
            Verdict::Gvd
        }
        Step::Mixed => {
            if !unmixedness_evidence(&ideal, graph)?.is_refuted() {
                return Err(bad("mixed node is not mixed".into()));
            }
            Verdict::NotGvd
        }
        Step::Tensor { parts } => {
            // each part must be a block of the stored basis in its own variables
            let mut used: BTreeSet<String> = BTreeSet::new();
            let mut taken = alloc::vec![false; n.generators.len()];
            let mut all = true;
            let mut refuted = false;
            for p in parts {
                let names = p.node.ring.names();
                if names.iter().any(|x| !used.insert(x.clone())) {
                    return Err(bad("tensor parts share a variable".into()));
                }
                let pi = groebner::extend(&node_ideal(&p.node)?, &n.ring)?;
                for g in pi.canonical_basis()?.elements() {
                    match n.generators.iter().position(|h| h == g) {
                        Some(k) => taken[k] = true,
                        None => return Err(bad("tensor part is not a block of the basis".into())),
                    }
                }
                if pi.canonical_basis()?.is_unit() {
                    return Err(bad("tensor part is the unit ideal".into()));
                }
                match check(p, graph, r)? {
                    Verdict::Gvd => {}
                    Verdict::NotGvd => refuted = true,
                    Verdict::Inconclusive => all = false,
                }
            }
            let rest_overlaps = n.generators.iter().zip(&taken).any(|(g, t)| {
                !*t && g.support().iter().any(|&v| used.contains(n.ring.name(v)))
            });
            if rest_overlaps {
                return Err(bad("tensor parts share variables with the rest of the basis".into()));
            }
            if refuted {
                Verdict::NotGvd
            } else if all && taken.iter().all(|t| *t) {
                Verdict::Gvd
            } else {
                Verdict::Inconclusive
            }
        }
        Step::Decomposition { y, order, c, n: nc, .. } => {
            r.decompositions += 1;
            let split = cn_split_unchecked(&ideal, *y, Some(order.clone()))?;
            if !split.square_free_in_y {
                return Err(bad(format!("basis is not square-free in {}", n.ring.name(*y))));
            }
            if !check_decomposition(&split, graph)?.holds {
                return Err(bad(format!("decomposition identity fails for {}", n.ring.name(*y))));
            }
            let (_, ci, ni) = split.contracted();
            expect_child(c, &ci, Child::C)?;
            expect_child(nc, &ni, Child::N)?;
            let vc = check(c, graph, r)?;
            let vn = check(nc, graph, r)?;
            if vc == Verdict::Gvd && vn == Verdict::Gvd && claimed_unmixed {
                Verdict::Gvd
            } else {
                Verdict::Inconclusive
            }
        }
        Step::Exhausted { failures } | Step::Open { failures, .. } => {
            let mut rigorous = true;
            let mut covered: BTreeSet<VariableId> = BTreeSet::new();
            for b in failures {
                covered.insert(b.y);
                match &b.failure {
                    BranchFailure::NotSquareFreeInY => {
                        if cn_split_unchecked(&ideal, b.y, None)?.square_free_in_y {
                            return Err(bad(format!("basis is square-free in {}", n.ring.name(b.y))));
                        }
                    }
                    BranchFailure::DecompositionFails => {
                        let s = cn_split_unchecked(&ideal, b.y, None)?;
                        if check_decomposition(&s, graph)?.holds {
                            return Err(bad(format!("decomposition holds for {}", n.ring.name(b.y))));
                        }
                    }
                    BranchFailure::ChildNotGvd { which, child } => {
                        let s = cn_split_unchecked(&ideal, b.y, None)?;
                        let (_, ci, ni) = s.contracted();
                        let want = if *which == Child::C { ci } else { ni };
                        expect_child(child, &want, *which)?;
                        if check(child, graph, r)? != Verdict::NotGvd {
                            rigorous = false;
                        }
                    }
                    BranchFailure::Undecided(_) => rigorous = false,
                }
            }
            let everything: BTreeSet<VariableId> = n.ring.vars().collect();
            if rigorous && covered == everything && matches!(n.step, Step::Exhausted { .. }) {
                Verdict::NotGvd
            } else {
                Verdict::Inconclusive
            }
        }
    };
    Ok(verdict)
}
