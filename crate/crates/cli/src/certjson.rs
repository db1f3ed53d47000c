//! Certificate JSON, in both directions.

use std::collections::HashMap;
use std::sync::Arc;

use anyhow::{anyhow, bail, Result};
use gvdlab_core::decomposition::{ComponentSummary, PrimeKind, PrimeWitness, Unmixedness};
use gvdlab_core::gvd::{Branch, BranchFailure, CertNode, Child, Degeneracy, GvdCertificate, Step, Verdict};
use gvdlab_core::{MonomialOrder, RingContext};
use serde::{Deserialize, Serialize};

use crate::formats::{polys_from_json, polys_to_json, PolyJson};

pub const FORMAT: &str = "gvdlab-certificate/1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertFile {
    pub format: String,
    pub certificate: CertJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertJson {
    pub ring: Vec<String>,
    pub node: NodeRef,
}

/// A node written out in full, or a repeat of one written earlier.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NodeRef {
    Ref {
        #[serde(rename = "ref")]
        id: usize,
    },
    Node(Box<NodeJson>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub kind: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degeneracy: Option<String>,
    pub unmixedness: Option<UnmixedJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub children: Option<ChildrenJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<CertJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failures: Option<Vec<BranchJson>>,
    pub support: Vec<String>,
    pub generators: Vec<PolyJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChildrenJson {
    #[serde(rename = "C")]
    pub c: Box<CertJson>,
    #[serde(rename = "N")]
    pub n: Box<CertJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BranchJson {
    pub y: String,
    pub failure: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub which: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub child: Option<Box<CertJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UnmixedJson {
    pub tag: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentJson {
    pub variables: Vec<String>,
    pub binomials: Vec<String>,
    pub dimension: usize,
    pub witness: String,
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Gvd => "gvd",
        Verdict::NotGvd => "not-gvd",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn verdict_from(s: &str) -> Result<Verdict> {
    Ok(match s {
        "gvd" => Verdict::Gvd,
        "not-gvd" => Verdict::NotGvd,
        "inconclusive" => Verdict::Inconclusive,
        _ => bail!("unknown verdict `{s}`"),
    })
}

pub fn degeneracy_name(d: Degeneracy) -> &'static str {
    match d {
        Degeneracy::UnitC => "unit-c",
        Degeneracy::EqualIdeals => "equal-ideals",
        Degeneracy::EqualRadicals => "equal-radicals",
        Degeneracy::Nondegenerate => "nondegenerate",
        Degeneracy::Unknown => "unknown",
    }
}

fn degeneracy_from(s: &str) -> Result<Degeneracy> {
    Ok(match s {
        "unit-c" => Degeneracy::UnitC,
        "equal-ideals" => Degeneracy::EqualIdeals,
        "equal-radicals" => Degeneracy::EqualRadicals,
        "nondegenerate" => Degeneracy::Nondegenerate,
        "unknown" => Degeneracy::Unknown,
        _ => bail!("unknown degeneracy `{s}`"),
    })
}

fn witness_name(w: PrimeWitness) -> &'static str {
    match w {
        PrimeWitness::Variables => "variables",
        PrimeWitness::ToricOfGraph => "toric-of-graph",
        PrimeWitness::Lattice => "lattice",
    }
}

fn witness_from(s: &str) -> Result<PrimeWitness> {
    Ok(match s {
        "variables" => PrimeWitness::Variables,
        "toric-of-graph" => PrimeWitness::ToricOfGraph,
        "lattice" => PrimeWitness::Lattice,
        _ => bail!("unknown primality witness `{s}`"),
    })
}

fn components_to(cs: &[ComponentSummary]) -> Vec<ComponentJson> {
    cs.iter()
        .map(|c| ComponentJson {
            variables: c.variables.clone(),
            binomials: c.binomials.clone(),
            dimension: c.dimension,
            witness: witness_name(c.witness).into(),
        })
        .collect()
}

fn components_from(cs: &Option<Vec<ComponentJson>>) -> Result<Vec<ComponentSummary>> {
    cs.iter()
        .flatten()
        .map(|c| {
            Ok(ComponentSummary {
                variables: c.variables.clone(),
                binomials: c.binomials.clone(),
                dimension: c.dimension,
                witness: witness_from(&c.witness)?,
            })
        })
        .collect()
}

pub fn unmixed_to_json(u: &Unmixedness) -> UnmixedJson {
    let mut j = UnmixedJson { tag: u.tag().into(), prime: None, components: None, reason: None };
    match u {
        Unmixedness::Prime(k) => {
            j.prime = Some(
                match k {
                    PrimeKind::Zero => "zero",
                    PrimeKind::Variables => "variables",
                    PrimeKind::Split(w) => witness_name(*w),
                }
                .into(),
            )
        }
        Unmixedness::EqualComponentDims(cs) | Unmixedness::Mixed(cs) => j.components = Some(components_to(cs)),
        Unmixedness::Cited(r) | Unmixedness::Inconclusive(r) => j.reason = Some(r.clone()),
        Unmixedness::Vacuous | Unmixedness::Principal | Unmixedness::TensorOfUnmixed => {}
    }
    j
}

fn unmixed_from(j: &UnmixedJson) -> Result<Unmixedness> {
    let reason = || j.reason.clone().unwrap_or_default();
    Ok(match j.tag.as_str() {
        "vacuous" => Unmixedness::Vacuous,
        "principal" => Unmixedness::Principal,
        "tensor-of-unmixed" => Unmixedness::TensorOfUnmixed,
        "cited" => Unmixedness::Cited(reason()),
        "inconclusive" => Unmixedness::Inconclusive(reason()),
        "equal-component-dimensions" => Unmixedness::EqualComponentDims(components_from(&j.components)?),
        "mixed" => Unmixedness::Mixed(components_from(&j.components)?),
        "prime" => Unmixedness::Prime(match j.prime.as_deref() {
            Some("zero") => PrimeKind::Zero,
            Some("variables") => PrimeKind::Variables,
            Some(w) => PrimeKind::Split(witness_from(w)?),
            None => bail!("prime evidence without a kind"),
        }),
        t => bail!("unknown unmixedness tag `{t}`"),
    })
}

fn child_name(c: Child) -> &'static str {
    match c {
        Child::C => "C",
        Child::N => "N",
    }
}

struct Writer {
    ids: HashMap<String, usize>,
    by_ptr: HashMap<*const CertNode, usize>,
    shallow: Vec<NodeJson>,
}

fn child(c: &GvdCertificate, w: &mut Writer) -> CertJson {
    CertJson { ring: c.ring.names().to_vec(), node: NodeRef::Ref { id: w.intern(c) } }
}

impl Writer {
    /// Id of the node's content, with children already replaced by ids.
    fn intern(&mut self, c: &GvdCertificate) -> usize {
        let ptr = Arc::as_ptr(&c.node);
        if let Some(&id) = self.by_ptr.get(&ptr) {
            return id;
        }
        let n = &c.node;
        let ring = &n.ring;
        let mut j = NodeJson {
            id: 0,
            kind: n.step.kind().into(),
            verdict: verdict_name(n.verdict).into(),
            y: None,
            order: None,
            degenerate: None,
            degeneracy: None,
            unmixedness: n.unmixedness.as_ref().map(unmixed_to_json),
            children: None,
            parts: None,
            reason: None,
            failures: None,
            support: ring.names().to_vec(),
            generators: polys_to_json(&n.generators, ring),
        };
        match &n.step {
            Step::Unit | Step::Zero | Step::Variables | Step::Mixed => {}
            Step::Decomposition { y, order, degeneracy, c, n } => {
                j.y = Some(ring.name(*y).into());
                j.order = Some(order.describe(ring));
                j.degenerate = Some(degeneracy.is_degenerate());
                j.degeneracy = Some(degeneracy_name(*degeneracy).into());
                let c = child(c, self);
                j.children = Some(ChildrenJson { c: Box::new(c), n: Box::new(child(n, self)) });
            }
            Step::Tensor { parts } => j.parts = Some(parts.iter().map(|p| child(p, self)).collect()),
            Step::Exhausted { failures } => j.failures = Some(failures.iter().map(|b| self.branch(ring, b)).collect()),
            Step::Open { reason, failures } => {
                j.reason = Some(reason.clone());
                j.failures = Some(failures.iter().map(|b| self.branch(ring, b)).collect());
            }
        }
        let key = serde_json::to_string(&j).expect("node serializes");
        let id = match self.ids.get(&key) {
            Some(&id) => id,
            None => {
                let id = self.shallow.len();
                j.id = id;
                self.shallow.push(j);
                self.ids.insert(key, id);
                id
            }
        };
        self.by_ptr.insert(ptr, id);
        id
    }

    fn branch(&mut self, ring: &RingContext, b: &Branch) -> BranchJson {
        let mut j = BranchJson { y: ring.name(b.y).into(), failure: String::new(), which: None, child: None, reason: None };
        j.failure = match &b.failure {
            BranchFailure::NotSquareFreeInY => "not-square-free-in-y",
            BranchFailure::DecompositionFails => "decomposition-fails",
            BranchFailure::ChildNotGvd { which, child: c } => {
                j.which = Some(child_name(*which).into());
                j.child = Some(Box::new(child(c, self)));
                "child-not-gvd"
            }
            BranchFailure::Undecided(r) => {
                j.reason = Some(r.clone());
                "undecided"
            }
        }
        .into();
        j
    }

    /// Writes node `id` in full the first time and as a reference afterwards.
    fn expand(&self, id: usize, seen: &mut Vec<bool>) -> NodeRef {
        if seen[id] {
            return NodeRef::Ref { id };
        }
        seen[id] = true;
        let mut j = self.shallow[id].clone();
        let fill = |c: &mut CertJson, seen: &mut Vec<bool>| {
            if let NodeRef::Ref { id } = c.node {
                c.node = self.expand(id, seen);
            }
        };
        if let Some(ch) = j.children.as_mut() {
            fill(&mut ch.c, seen);
            fill(&mut ch.n, seen);
        }
        for p in j.parts.iter_mut().flatten() {
            fill(p, seen);
        }
        for b in j.failures.iter_mut().flatten() {
            if let Some(c) = b.child.as_mut() {
                fill(c, seen);
            }
        }
        NodeRef::Node(Box::new(j))
    }
}

/// Nested JSON in which repeated subtrees appear once, then by `ref`.
pub fn cert_to_json(c: &GvdCertificate) -> CertJson {
    let mut w = Writer { ids: HashMap::new(), by_ptr: HashMap::new(), shallow: Vec::new() };
    let root = w.intern(c);
    let mut seen = vec![false; w.shallow.len()];
    CertJson { ring: c.ring.names().to_vec(), node: w.expand(root, &mut seen) }
}

struct Reader {
    nodes: HashMap<usize, Arc<CertNode>>,
}

impl Reader {
    fn cert(&mut self, j: &CertJson) -> Result<GvdCertificate> {
        let outer = RingContext::new(j.ring.iter().cloned())?;
        let node = match &j.node {
            NodeRef::Ref { id } => self.nodes.get(id).cloned().ok_or_else(|| anyhow!("reference to node {id} before its definition"))?,
            NodeRef::Node(n) => {
                let node = Arc::new(self.node(n)?);
                if self.nodes.insert(n.id, node.clone()).is_some() {
                    bail!("node id {} defined twice", n.id);
                }
                node
            }
        };
        Ok(GvdCertificate { ring: outer, node })
    }

    fn branch(&mut self, ring: &RingContext, j: &BranchJson) -> Result<Branch> {
        let y = ring.var(&j.y)?;
        let failure = match j.failure.as_str() {
            "not-square-free-in-y" => BranchFailure::NotSquareFreeInY,
            "decomposition-fails" => BranchFailure::DecompositionFails,
            "undecided" => BranchFailure::Undecided(j.reason.clone().unwrap_or_default()),
            "child-not-gvd" => {
                let which = match j.which.as_deref() {
                    Some("C") => Child::C,
                    Some("N") => Child::N,
                    _ => bail!("child-not-gvd needs `which` to be C or N"),
                };
                let child = j.child.as_ref().ok_or_else(|| anyhow!("child-not-gvd without a child"))?;
                BranchFailure::ChildNotGvd { which, child: self.cert(child)? }
            }
            f => bail!("unknown branch failure `{f}`"),
        };
        Ok(Branch { y, failure })
    }

    fn node(&mut self, n: &NodeJson) -> Result<CertNode> {
        let ring = RingContext::new(n.support.iter().cloned())?;
        let need = |o: &Option<String>, what: &str| o.clone().ok_or_else(|| anyhow!("{} node without `{what}`", n.kind));
        let step = match n.kind.as_str() {
            "unit" => Step::Unit,
            "zero" => Step::Zero,
            "variables" => Step::Variables,
            "mixed" => Step::Mixed,
            "decomposition" => {
                let ch = n.children.as_ref().ok_or_else(|| anyhow!("decomposition node without children"))?;
                let c = self.cert(&ch.c)?;
                Step::Decomposition {
                    y: ring.var(&need(&n.y, "y")?)?,
                    order: MonomialOrder::parse(&ring, &need(&n.order, "order")?)?,
                    degeneracy: degeneracy_from(&need(&n.degeneracy, "degeneracy")?)?,
                    c,
                    n: self.cert(&ch.n)?,
                }
            }
            "tensor" => Step::Tensor { parts: n.parts.iter().flatten().map(|p| self.cert(p)).collect::<Result<_>>()? },
            "exhausted" | "open" => {
                let failures = n.failures.iter().flatten().map(|b| self.branch(&ring, b)).collect::<Result<Vec<_>>>()?;
                if n.kind == "open" {
                    Step::Open { reason: n.reason.clone().unwrap_or_default(), failures }
                } else {
                    Step::Exhausted { failures }
                }
            }
            k => bail!("unknown node kind `{k}`"),
        };
        Ok(CertNode {
            generators: polys_from_json(&n.generators, &ring)?,
            ring,
            verdict: verdict_from(&n.verdict)?,
            unmixedness: n.unmixedness.as_ref().map(unmixed_from).transpose()?,
            step,
        })
    }
}

pub fn cert_from_json(j: &CertJson) -> Result<GvdCertificate> {
    Reader { nodes: HashMap::new() }.cert(j)
}

pub fn cert_file(c: &GvdCertificate) -> CertFile {
    CertFile { format: FORMAT.into(), certificate: cert_to_json(c) }
}

pub fn parse_cert_file(text: &str) -> Result<GvdCertificate> {
    let f: CertFile = serde_json::from_str(text).map_err(|e| anyhow!("malformed certificate JSON: {e}"))?;
    if f.format != FORMAT {
        bail!("unsupported certificate format `{}`", f.format);
    }
    cert_from_json(&f.certificate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gvdlab_core::graph::families;
    use gvdlab_core::groebner::IdealHandle;
    use gvdlab_core::gvd::{is_gvd_unlimited, replay};
    use gvdlab_core::toric::toric_ideal;

    fn round_trip(c: &GvdCertificate) -> GvdCertificate {
        let text = serde_json::to_string(&cert_file(c)).unwrap();
        let back = parse_cert_file(&text).unwrap();
        assert_eq!(serde_json::to_string(&cert_file(&back)).unwrap(), text);
        back
    }

    #[test]
    fn positive_certificate_survives_json() {
        let cert = is_gvd_unlimited(&toric_ideal(&families::complete_bipartite(2, 3).unwrap()).unwrap()).unwrap();
        let back = round_trip(&cert);
        assert_eq!(replay(&back, None).unwrap().verdict, Verdict::Gvd);
    }

    #[test]
    fn negative_certificate_survives_json() {
        let ring = RingContext::new((1..=8).map(|i| format!("e{i}"))).unwrap();
        let i = IdealHandle::parse(&ring, &["e1*e4^2*e6*e7 - e2*e3*e5^2*e8"]).unwrap();
        let cert = is_gvd_unlimited(&i).unwrap();
        assert_eq!(cert.verdict(), Verdict::NotGvd);
        let back = round_trip(&cert);
        assert_eq!(replay(&back, None).unwrap().verdict, Verdict::NotGvd);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let cert = is_gvd_unlimited(&toric_ideal(&families::cycle(6).unwrap()).unwrap()).unwrap();
        let mut f = cert_file(&cert);
        let NodeRef::Node(n) = &mut f.certificate.node else { panic!("root is written in full") };
        n.verdict = "not-gvd".into();
        let back = cert_from_json(&f.certificate).unwrap();
        assert!(replay(&back, None).is_err());
    }
}
