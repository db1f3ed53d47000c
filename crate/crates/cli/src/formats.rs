//! Graph, polynomial and ideal file formats.
//!
//! Graphs come as JSON, `{"vertices": [...], "edges": [{"id": "e1", "ends":
//! ["x1", "x2"]}, ...]}`, or as edge-list text with one `e1: x1 x2` per line
//! and `#` comments. Ideals are `{"ring": [...], "gens": [...]}`, where each
//! generator is either a list of `{"coeff": "p/q", "exps": {"e1": 2}}` terms
//! or a string such as `"e1*e4 - 2/3*e2^2"`.

use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use gvdlab_core::groebner::IdealHandle;
use gvdlab_core::graph::Graph;
use gvdlab_core::{Coeff, Monomial, Polynomial, RingContext};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: String,
    pub ends: [String; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Map<String, Value>,
}

/// A polynomial as read from a file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyJson {
    Text(String),
    Terms(Vec<TermJson>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: Vec<String>,
    pub gens: Vec<PolyJson>,
}

pub fn graph_to_json(g: &Graph) -> GraphJson {
    GraphJson {
        vertices: Some(g.vertices().to_vec()),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeJson { id: e.name.clone(), ends: [g.vertices()[e.ends.0].clone(), g.vertices()[e.ends.1].clone()] })
            .collect(),
    }
}

pub fn graph_from_json(j: &GraphJson) -> Result<Graph> {
    let g = match &j.vertices {
        None => {
            let triples: Vec<(&str, &str, &str)> =
                j.edges.iter().map(|e| (e.id.as_str(), e.ends[0].as_str(), e.ends[1].as_str())).collect();
            Graph::from_named_edges(&triples)?
        }
        Some(vs) => {
            let index = |v: &str| vs.iter().position(|x| x == v).ok_or_else(|| anyhow!("edge end `{v}` is not a listed vertex"));
            let mut es = Vec::new();
            for e in &j.edges {
                es.push((e.id.clone(), index(&e.ends[0])?, index(&e.ends[1])?));
            }
            Graph::new(vs.clone(), es)?
        }
    };
    Ok(g)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut triples = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, ends) = line.split_once(':').ok_or_else(|| anyhow!("line {}: expected `edge: u v`", n + 1))?;
        let ends: Vec<&str> = ends.split_whitespace().collect();
        if ends.len() != 2 {
            bail!("line {}: an edge needs exactly two ends", n + 1);
        }
        triples.push((name.trim().to_string(), ends[0].to_string(), ends[1].to_string()));
    }
    Ok(Graph::from_named_edges(&triples)?)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let j: GraphJson = serde_json::from_str(text).context("malformed graph JSON")?;
        graph_from_json(&j)
    } else {
        parse_edge_list(text)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("in {}", path.display()))
}

pub fn poly_to_json(p: &Polynomial, ring: &RingContext) -> Vec<TermJson> {
    p.terms()
        .iter()
        .map(|t| {
            let mut exps = Map::new();
            for &(v, e) in t.mono.pairs() {
                exps.insert(ring.name(v).to_string(), Value::from(e));
            }
            TermJson { coeff: t.coeff.to_string(), exps }
        })
        .collect()
}

pub fn poly_from_json(p: &PolyJson, ring: &RingContext) -> Result<Polynomial> {
    match p {
        PolyJson::Text(s) => Ok(Polynomial::parse(ring, s)?),
        PolyJson::Terms(ts) => {
            let mut out = Vec::new();
            for t in ts {
                let c = Coeff::from_str(t.coeff.trim()).map_err(|e| anyhow!("bad coefficient `{}`: {e}", t.coeff))?;
                let mut pairs = Vec::new();
                for (name, e) in &t.exps {
                    let e = e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| anyhow!("exponent of `{name}` must be a non-negative integer"))?;
                    pairs.push((ring.var(name)?, e));
                }
                out.push((c, Monomial::from_pairs(pairs)));
            }
            Ok(Polynomial::from_terms(out))
        }
    }
}

pub fn polys_to_json(ps: &[Polynomial], ring: &RingContext) -> Vec<PolyJson> {
    ps.iter().map(|p| PolyJson::Terms(poly_to_json(p, ring))).collect()
}

pub fn polys_from_json(ps: &[PolyJson], ring: &RingContext) -> Result<Vec<Polynomial>> {
    ps.iter().map(|p| poly_from_json(p, ring)).collect()
}

pub fn ideal_to_json(i: &IdealHandle) -> IdealJson {
    IdealJson { ring: i.ring().names().to_vec(), gens: polys_to_json(i.generators(), i.ring()) }
}

pub fn ideal_from_json(j: &IdealJson) -> Result<IdealHandle> {
    let ring = RingContext::new(j.ring.iter().cloned())?;
    let gens = polys_from_json(&j.gens, &ring)?;
    Ok(IdealHandle::new(ring, gens)?)
}

pub fn read_ideal(path: &Path) -> Result<IdealHandle> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let j: IdealJson = serde_json::from_str(&text).with_context(|| format!("malformed ideal JSON in {}", path.display()))?;
    ideal_from_json(&j).with_context(|| format!("in {}", path.display()))
}
