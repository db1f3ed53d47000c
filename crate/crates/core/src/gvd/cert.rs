use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::decomposition::Unmixedness;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{RingContext, VariableId};

use super::split::Degeneracy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Gvd,
    NotGvd,
    Inconclusive,
}

/// A certificate for an ideal of the polynomial ring `ring`.
///
/// The work happens in the support ring of the ideal, stored in `node`;
/// variables of `ring` outside it do not occur in the ideal, and a proper
/// ideal is geometrically vertex decomposable in `ring` exactly when it is
/// so in its support ring.
#[derive(Clone, Debug)]
pub struct GvdCertificate {
    pub ring: RingContext,
    pub node: Arc<CertNode>,
}

impl GvdCertificate {
    pub fn verdict(&self) -> Verdict {
        self.node.verdict
    }

    /// Variables of `ring` that the ideal does not involve.
    pub fn free_variables(&self) -> Vec<String> {
        self.ring.names().iter().filter(|n| !self.node.ring.names().contains(n)).cloned().collect()
    }

    /// Number of distinct nodes, counting shared subtrees once per occurrence.
    pub fn size(&self) -> usize {
        1 + match &self.node.step {
            Step::Decomposition { c, n, .. } => c.size() + n.size(),
            Step::Tensor { parts } => parts.iter().map(|p| p.size()).sum(),
            Step::Exhausted { failures } | Step::Open { failures, .. } => failures
                .iter()
                .map(|f| match &f.failure {
                    BranchFailure::ChildNotGvd { child, .. } => child.size(),
                    _ => 0,
                })
                .sum(),
            _ => 0,
        }
    }

    /// Decomposition variables along the tree, as nested `(y, C-chain, N-chain)`.
    pub fn chain(&self) -> Option<Chain> {
        match &self.node.step {
            Step::Decomposition { y, c, n, .. } => Some(Chain {
                var: self.node.ring.name(*y).into(),
                c: c.chain().map(alloc::boxed::Box::new),
                n: n.chain().map(alloc::boxed::Box::new),
            }),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub var: String,
    pub c: Option<alloc::boxed::Box<Chain>>,
    pub n: Option<alloc::boxed::Box<Chain>>,
}

#[derive(Clone, Debug)]
pub struct CertNode {
    /// Support ring of the ideal.
    pub ring: RingContext,
    /// Reduced basis of the ideal in `ring` under graded reverse lex.
    pub generators: Vec<Polynomial>,
    pub verdict: Verdict,
    pub unmixedness: Option<Unmixedness>,
    pub step: Step,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Child {
    C,
    N,
}

#[derive(Clone, Debug)]
pub enum BranchFailure {
    /// Some basis element has degree ≥ 2 in `y` under a y-compatible order,
    /// so no y-compatible order gives a decomposition.
    NotSquareFreeInY,
    /// `in_y(I) ≠ C ∩ (N + ⟨y⟩)`.
    DecompositionFails,
    /// A link or deletion ideal is not geometrically vertex decomposable.
    ChildNotGvd { which: Child, child: GvdCertificate },
    /// Neither success nor failure could be established.
    Undecided(String),
}

#[derive(Clone, Debug)]
pub struct Branch {
    pub y: VariableId,
    pub failure: BranchFailure,
}

#[derive(Clone, Debug)]
pub enum Step {
    Unit,
    Zero,
    Variables,
    Decomposition {
        y: VariableId,
        order: MonomialOrder,
        degeneracy: Degeneracy,
        c: GvdCertificate,
        n: GvdCertificate,
    },
    /// The ideal is a sum of ideals in disjoint sets of variables.
    Tensor {
        parts: Vec<GvdCertificate>,
    },
    /// Minimal primes of different dimensions.
    Mixed,
    /// Every variable of the support ring was tried and failed.
    Exhausted {
        failures: Vec<Branch>,
    },
    Open {
        reason: String,
        failures: Vec<Branch>,
    },
}

impl Step {
    pub fn kind(&self) -> &'static str {
        match self {
            Step::Unit => "unit",
            Step::Zero => "zero",
            Step::Variables => "variables",
            Step::Decomposition { .. } => "decomposition",
            Step::Tensor { .. } => "tensor",
            Step::Mixed => "mixed",
            Step::Exhausted { .. } => "exhausted",
            Step::Open { .. } => "open",
        }
    }
}
