//! Finite simple graphs whose edges name the variables of a polynomial ring.

pub mod families;

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{RingContext, VariableId};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub name: String,
    pub ends: (usize, usize),
}

impl Edge {
    pub fn touches(&self, v: usize) -> bool {
        self.ends.0 == v || self.ends.1 == v
    }

    pub fn other(&self, v: usize) -> usize {
        if self.ends.0 == v {
            self.ends.1
        } else {
            self.ends.0
        }
    }
}

/// A simple graph: no loops, no parallel edges, unique vertex and edge names.
///
/// Edge order is significant: it is the variable order of [`Graph::ring`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

/// Result of gluing an even cycle along an edge.
#[derive(Clone, Debug)]
pub struct Gluing {
    pub graph: Graph,
    pub new_edges: Vec<String>,
    /// The walk binomial of the new cycle, in `graph.ring()`.
    pub cycle_binomial: Polynomial,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<(String, usize, usize)>) -> Result<Self> {
        let mut vs = BTreeSet::new();
        for v in &vertices {
            if !vs.insert(v.as_str()) {
                return Err(Error::InvalidGraph(alloc::format!("duplicate vertex `{v}`")));
            }
        }
        let mut names = BTreeSet::new();
        let mut pairs = BTreeSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for (name, a, b) in edges {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(Error::InvalidGraph(alloc::format!("edge `{name}` has a missing endpoint")));
            }
            if a == b {
                return Err(Error::InvalidGraph(alloc::format!("edge `{name}` is a loop")));
            }
            if !pairs.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(alloc::format!("edge `{name}` is parallel to another edge")));
            }
            if !names.insert(name.clone()) {
                return Err(Error::InvalidGraph(alloc::format!("duplicate edge name `{name}`")));
            }
            out.push(Edge { name, ends: (a, b) });
        }
        let g = Graph { vertices, edges: out };
        g.ring()?;
        Ok(g)
    }

    /// Builds a graph from `(edge, vertex, vertex)` triples; vertices are
    /// numbered in order of first appearance.
    pub fn from_named_edges<S: AsRef<str>>(edges: &[(S, S, S)]) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let idx = |v: &str, vs: &mut Vec<String>| match vs.iter().position(|x| x == v) {
            Some(i) => i,
            None => {
                vs.push(v.into());
                vs.len() - 1
            }
        };
        let mut es = Vec::new();
        for (n, a, b) in edges {
            let ia = idx(a.as_ref(), &mut vertices);
            let ib = idx(b.as_ref(), &mut vertices);
            es.push((String::from(n.as_ref()), ia, ib));
        }
        Self::new(vertices, es)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, name: &str) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.name == name)
            .ok_or_else(|| Error::InvalidGraph(alloc::format!("no edge named `{name}`")))
    }

    pub fn edge_names(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.name.clone()).collect()
    }

    /// `K[E(G)]` with variables in edge order.
    pub fn ring(&self) -> Result<RingContext> {
        RingContext::new(self.edges.iter().map(|e| e.name.clone()))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.touches(v)).map(|e| e.other(v)).collect()
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.ends == (a, b) || e.ends == (b, a))
    }

    /// The subgraph keeping only the listed edges, in their original order.
    pub fn with_edges(&self, keep: &[usize]) -> Graph {
        let edges = self.edges.iter().enumerate().filter(|(i, _)| keep.contains(i)).map(|(_, e)| e.clone()).collect();
        Graph { vertices: self.vertices.clone(), edges }
    }

    pub fn without_edges(&self, drop: &[usize]) -> Graph {
        let keep: Vec<usize> = (0..self.edges.len()).filter(|i| !drop.contains(i)).collect();
        self.with_edges(&keep)
    }

    pub fn without_edge_names(&self, drop: &[&str]) -> Graph {
        let edges = self.edges.iter().filter(|e| !drop.contains(&e.name.as_str())).cloned().collect();
        Graph { vertices: self.vertices.clone(), edges }
    }

    /// The subgraph on the edges whose names are listed.
    pub fn with_edge_names<S: AsRef<str>>(&self, keep: &[S]) -> Graph {
        let edges = self.edges.iter().filter(|e| keep.iter().any(|k| k.as_ref() == e.name)).cloned().collect();
        Graph { vertices: self.vertices.clone(), edges }
    }

    /// An edge with an endpoint of degree one.
    pub fn leaf_edge(&self) -> Option<usize> {
        let mut deg = alloc::vec![0usize; self.vertices.len()];
        for e in &self.edges {
            deg[e.ends.0] += 1;
            deg[e.ends.1] += 1;
        }
        self.edges.iter().position(|e| deg[e.ends.0] == 1 || deg[e.ends.1] == 1)
    }

    /// Removes leaf edges until none remain; the toric ideal is unchanged.
    pub fn remove_leaves_fixpoint(&self) -> Graph {
        let mut g = self.clone();
        while let Some(i) = g.leaf_edge() {
            g.edges.remove(i);
        }
        g
    }

    /// Vertex sets of the connected components that contain an edge.
    pub fn edge_components(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] || self.degree(start) == 0 {
                continue;
            }
            let mut comp = Vec::new();
            let mut q = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = q.pop_front() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        q.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// A proper two-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertices.len();
        let mut col = alloc::vec![u8::MAX; n];
        for s in 0..n {
            if col[s] != u8::MAX {
                continue;
            }
            col[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for w in self.neighbors(v) {
                    if col[w] == u8::MAX {
                        col[w] = 1 - col[v];
                        q.push_back(w);
                    } else if col[w] == col[v] {
                        return None;
                    }
                }
            }
        }
        Some(col)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Vertex-by-edge incidence matrix.
    pub fn incidence_matrix(&self) -> Vec<Vec<i64>> {
        let mut a = alloc::vec![alloc::vec![0i64; self.edges.len()]; self.vertices.len()];
        for (j, e) in self.edges.iter().enumerate() {
            a[e.ends.0][j] = 1;
            a[e.ends.1][j] = 1;
        }
        a
    }

    /// The complement on the same vertex set; edges are named `c_u_v`.
    pub fn complement(&self) -> Graph {
        let n = self.vertices.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.edge_between(a, b).is_none() {
                    edges.push(Edge { name: alloc::format!("c_{}_{}", a + 1, b + 1), ends: (a, b) });
                }
            }
        }
        Graph { vertices: self.vertices.clone(), edges }
    }

    /// No two vertex-disjoint edges without an edge joining them.
    pub fn is_gap_free(&self) -> bool {
        for (i, e) in self.edges.iter().enumerate() {
            for f in &self.edges[i + 1..] {
                let (a, b) = e.ends;
                let (c, d) = f.ends;
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let joined = [(a, c), (a, d), (b, c), (b, d)].iter().any(|&(x, y)| self.edge_between(x, y).is_some());
                if !joined {
                    return false;
                }
            }
        }
        true
    }

    /// Edge sets of all 4-cycles, each sorted by edge index.
    pub fn four_cycles(&self) -> Vec<[usize; 4]> {
        let n = self.vertices.len();
        let mut found = BTreeSet::new();
        for a in 0..n {
            for c in a + 1..n {
                let common: Vec<usize> =
                    self.neighbors(a).into_iter().filter(|&w| self.edge_between(w, c).is_some()).collect();
                for (i, &b) in common.iter().enumerate() {
                    for &d in &common[i + 1..] {
                        let mut es = [
                            self.edge_between(a, b).unwrap(),
                            self.edge_between(b, c).unwrap(),
                            self.edge_between(c, d).unwrap(),
                            self.edge_between(d, a).unwrap(),
                        ];
                        es.sort();
                        found.insert(es);
                    }
                }
            }
        }
        found.into_iter().collect()
    }

    pub fn four_cycles_containing(&self, edge: usize) -> Vec<[usize; 4]> {
        self.four_cycles().into_iter().filter(|c| c.contains(&edge)).collect()
    }

    /// Disjoint union; edge names must not clash, clashing vertex names get a suffix.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut vertices = self.vertices.clone();
        let off = vertices.len();
        for v in &other.vertices {
            let mut name = v.clone();
            while vertices.contains(&name) {
                name.push('_');
            }
            vertices.push(name);
        }
        let mut edges: Vec<(String, usize, usize)> =
            self.edges.iter().map(|e| (e.name.clone(), e.ends.0, e.ends.1)).collect();
        for e in &other.edges {
            let mut name = e.name.clone();
            while edges.iter().any(|(n, _, _)| *n == name) {
                name.push('_');
            }
            edges.push((name, e.ends.0 + off, e.ends.1 + off));
        }
        Graph::new(vertices, edges)
    }

    fn fresh(taken: &BTreeSet<String>, prefix: &str, k: &mut usize) -> String {
        loop {
            *k += 1;
            let s = alloc::format!("{prefix}{k}");
            if !taken.contains(&s) {
                return s;
            }
        }
    }

    /// Attaches a cycle of even length `len` that shares exactly the edge `edge`.
    ///
    /// The new edges `f1, …, f_{len-1}` run from the first endpoint of `edge`
    /// to the second through `len - 2` new vertices.
    pub fn glue_even_cycle(&self, edge: usize, len: usize) -> Result<Gluing> {
        if len < 4 || len % 2 == 1 {
            return Err(Error::InvalidGraph(alloc::format!("cycle length {len} is not an even number ≥ 4")));
        }
        let e = self.edges.get(edge).ok_or_else(|| Error::InvalidGraph("edge out of range".into()))?.clone();
        let mut taken_e: BTreeSet<String> = self.edges.iter().map(|e| e.name.clone()).collect();
        let taken_v: BTreeSet<String> = self.vertices.iter().cloned().collect();
        let mut vertices = self.vertices.clone();
        let mut edges: Vec<(String, usize, usize)> =
            self.edges.iter().map(|e| (e.name.clone(), e.ends.0, e.ends.1)).collect();
        let (mut ke, mut kv) = (0, 0);
        let mut path = alloc::vec![e.ends.0];
        for _ in 0..len - 2 {
            vertices.push(Self::fresh(&taken_v, "w", &mut kv));
            path.push(vertices.len() - 1);
        }
        path.push(e.ends.1);
        let mut new_edges = Vec::new();
        for w in path.windows(2) {
            let name = Self::fresh(&taken_e, "f", &mut ke);
            taken_e.insert(name.clone());
            edges.push((name.clone(), w[0], w[1]));
            new_edges.push(name);
        }
        let graph = Graph::new(vertices, edges)?;
        let ring = graph.ring()?;
        let var = |n: &str| ring.var(n).expect("edge exists");
        let odd = Monomial::from_pairs(new_edges.iter().step_by(2).map(|n| (var(n), 1)));
        let even = Monomial::from_pairs(
            new_edges.iter().skip(1).step_by(2).map(|n| (var(n), 1)).chain([(var(&e.name), 1)]),
        );
        let cycle_binomial = Polynomial::from_terms([(Coeff::one(), odd), (-Coeff::one(), even)]);
        Ok(Gluing { graph, new_edges, cycle_binomial })
    }

    /// Variable of `ring` for each edge, by name.
    pub fn edge_vars(&self, ring: &RingContext) -> BTreeMap<usize, VariableId> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| ring.var(&e.name).ok().map(|v| (i, v)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn square_basics() {
        let g = cycle(4).unwrap();
        assert!(g.is_bipartite());
        assert_eq!(g.four_cycles().len(), 1);
        assert!(g.leaf_edge().is_none());
        assert!(g.is_gap_free());
        let p = g.without_edges(&[0]);
        assert_eq!(p.remove_leaves_fixpoint().num_edges(), 0);
    }

    #[test]
    fn complete_graph_four_cycles() {
        let k4 = complete(4).unwrap();
        assert_eq!(k4.four_cycles().len(), 3);
        for e in 0..6 {
            assert_eq!(k4.four_cycles_containing(e).len(), 2);
        }
        assert!(k4.is_gap_free());
        assert_eq!(k4.complement().num_edges(), 0);
        assert!(!k4.is_bipartite());
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(Graph::from_named_edges(&[("e1", "a", "a")]).is_err());
        assert!(Graph::from_named_edges(&[("e1", "a", "b"), ("e2", "b", "a")]).is_err());
        assert!(Graph::from_named_edges(&[("e1", "a", "b"), ("e1", "b", "c")]).is_err());
    }

    #[test]
    fn gluing_adds_a_cycle() {
        let g = cycle(4).unwrap();
        let h = g.glue_even_cycle(0, 6).unwrap();
        assert_eq!(h.graph.num_edges(), 9);
        assert_eq!(h.graph.num_vertices(), 8);
        assert_eq!(h.new_edges.len(), 5);
        assert_eq!(h.cycle_binomial.len(), 2);
        assert!(g.glue_even_cycle(0, 5).is_err());
    }

    #[test]
    fn gap_free_detects_induced_matchings() {
        // a path on four edges has the gap e1, e4
        let p = Graph::from_named_edges(&[("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "d"), ("e4", "d", "e")])
            .unwrap();
        assert!(!p.is_gap_free());
    }

    #[test]
    fn connected_graph_counts() {
        let gs = connected_graphs(7).unwrap();
        let mut counts = [0usize; 8];
        for g in &gs {
            counts[g.num_edges()] += 1;
            assert_eq!(g.edge_components().len(), 1);
        }
        assert_eq!(counts[1..], [1, 1, 3, 5, 12, 30, 79]);
    }
}
