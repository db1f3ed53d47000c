//! Plain-text renderings.

use std::fmt::Write;

use gvdlab_core::gvd::{BranchFailure, GvdCertificate, Step};
use gvdlab_core::Polynomial;
use gvdlab_core::RingContext;

use crate::certjson::{degeneracy_name, verdict_name};

pub fn polys(ps: &[Polynomial], ring: &RingContext) -> String {
    let mut s = String::new();
    for p in ps {
        let _ = writeln!(s, "{}", p.to_string_in(ring));
    }
    s
}

/// The certificate as an indented tree with the original variable names.
pub fn certificate(c: &GvdCertificate) -> String {
    let mut s = String::new();
    node(c, "", 0, &mut s);
    s
}

fn node(c: &GvdCertificate, label: &str, depth: usize, s: &mut String) {
    let n = &c.node;
    let ring = &n.ring;
    let pad = "  ".repeat(depth);
    let um = n.unmixedness.as_ref().map(|u| u.tag()).unwrap_or("-");
    let _ = write!(s, "{pad}{label}{} [{}] gens={} unmixed={um}", verdict_name(n.verdict), n.step.kind(), n.generators.len());
    match &n.step {
        Step::Decomposition { y, order, degeneracy, c: cc, n: nn } => {
            let _ = writeln!(s, " y={} order={} {}", ring.name(*y), order.describe(ring), degeneracy_name(*degeneracy));
            node(cc, "C: ", depth + 1, s);
            node(nn, "N: ", depth + 1, s);
        }
        Step::Tensor { parts } => {
            let _ = writeln!(s);
            for p in parts {
                node(p, "part: ", depth + 1, s);
            }
        }
        Step::Exhausted { failures } | Step::Open { failures, .. } => {
            if let Step::Open { reason, .. } = &n.step {
                let _ = write!(s, " ({reason})");
            }
            let _ = writeln!(s);
            for b in failures {
                let y = ring.name(b.y);
                match &b.failure {
                    BranchFailure::NotSquareFreeInY => {
                        let _ = writeln!(s, "{pad}  {y}: not square-free in {y}");
                    }
                    BranchFailure::DecompositionFails => {
                        let _ = writeln!(s, "{pad}  {y}: decomposition identity fails");
                    }
                    BranchFailure::Undecided(r) => {
                        let _ = writeln!(s, "{pad}  {y}: undecided ({r})");
                    }
                    BranchFailure::ChildNotGvd { which, child } => {
                        node(child, &format!("{y}: {which:?} fails: "), depth + 1, s);
                    }
                }
            }
        }
        _ => {
            let _ = writeln!(s);
            if depth == 0 || n.generators.len() <= 4 {
                for p in &n.generators {
                    let _ = writeln!(s, "{pad}  {}", p.to_string_in(ring));
                }
            }
        }
    }
}
