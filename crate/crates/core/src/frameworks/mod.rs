//! Structured certification pipelines for toric ideals of graphs.

pub mod bipartite;
pub mod ef;
pub mod glicci;

use alloc::sync::Arc;

use crate::decomposition::Unmixedness;
use crate::error::Result;
use crate::groebner::IdealHandle;
use crate::gvd::{canonicalize, CertNode, GvdCertificate, Step, Verdict};
use crate::ring::RingContext;

/// The base certificate of `ideal` when it is the unit, zero, or variable-generated.
pub(crate) fn base_certificate(ideal: &IdealHandle) -> Result<Option<GvdCertificate>> {
    let c = canonicalize(ideal)?;
    let wrap = |step, u| {
        Some(GvdCertificate {
            ring: ideal.ring().clone(),
            node: Arc::new(CertNode { ring: c.ring.clone(), generators: c.generators.clone(), verdict: Verdict::Gvd, unmixedness: Some(u), step }),
        })
    };
    use crate::decomposition::PrimeKind;
    Ok(if c.ideal.is_unit()? {
        wrap(Step::Unit, Unmixedness::Vacuous)
    } else if c.generators.is_empty() {
        wrap(Step::Zero, Unmixedness::Prime(PrimeKind::Zero))
    } else if c.generators.iter().all(|g| g.as_variable().is_some()) {
        wrap(Step::Variables, Unmixedness::Prime(PrimeKind::Variables))
    } else {
        None
    })
}

/// The same certificate presented in another ring containing its support.
pub(crate) fn rewrap(cert: GvdCertificate, ring: &RingContext) -> GvdCertificate {
    debug_assert!(cert.node.ring.names().iter().all(|n| ring.var(n).is_ok()));
    GvdCertificate { ring: ring.clone(), node: cert.node }
}
