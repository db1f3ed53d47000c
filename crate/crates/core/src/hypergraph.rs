//! Transversals of hypergraphs on variables.
//!
//! A set meets every edge of the support hypergraph of a square-free
//! monomial ideal exactly when the prime it generates contains the ideal.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::ring::VariableId;

fn minimize(edges: &[Vec<VariableId>]) -> Vec<BTreeSet<VariableId>> {
    let mut sets: Vec<BTreeSet<VariableId>> = edges.iter().map(|e| e.iter().copied().collect()).collect();
    sets.sort_by_key(|s| s.len());
    let mut out: Vec<BTreeSet<VariableId>> = Vec::new();
    for s in sets {
        if !out.iter().any(|o| o.is_subset(&s)) {
            out.push(s);
        }
    }
    out
}

/// All inclusion-minimal transversals, sorted.
///
/// An empty edge has no transversal, so the result is empty; no edges at all
/// give the single empty transversal.
pub fn minimal_transversals(edges: &[Vec<VariableId>]) -> Vec<BTreeSet<VariableId>> {
    let edges = minimize(edges);
    let mut tr: Vec<BTreeSet<VariableId>> = alloc::vec![BTreeSet::new()];
    for e in &edges {
        let mut next: Vec<BTreeSet<VariableId>> = Vec::new();
        for t in &tr {
            if !t.is_disjoint(e) {
                next.push(t.clone());
            } else {
                for &v in e {
                    let mut u = t.clone();
                    u.insert(v);
                    next.push(u);
                }
            }
        }
        next.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        next.dedup();
        let mut minimal: Vec<BTreeSet<VariableId>> = Vec::new();
        for s in next {
            if !minimal.iter().any(|m| m.is_subset(&s)) {
                minimal.push(s);
            }
        }
        tr = minimal;
    }
    tr.sort();
    tr
}

/// Size of a smallest transversal, by branch and bound.
pub fn min_transversal_size(edges: &[Vec<VariableId>]) -> usize {
    let edges = minimize(edges);
    if edges.iter().any(|e| e.is_empty()) {
        return usize::MAX;
    }
    let mut best = edges.len();
    let mut chosen = BTreeSet::new();
    branch(&edges, &mut chosen, &mut best);
    best
}

fn branch(edges: &[BTreeSet<VariableId>], chosen: &mut BTreeSet<VariableId>, best: &mut usize) {
    if chosen.len() >= *best {
        return;
    }
    let open = edges.iter().find(|e| e.is_disjoint(chosen));
    let Some(e) = open else {
        *best = chosen.len();
        return;
    };
    // pairwise disjoint open edges need distinct vertices
    let mut lower = 0;
    let mut used: BTreeSet<VariableId> = BTreeSet::new();
    for f in edges.iter().filter(|f| f.is_disjoint(chosen)) {
        if f.is_disjoint(&used) {
            lower += 1;
            used.extend(f.iter().copied());
        }
    }
    if chosen.len() + lower >= *best {
        return;
    }
    for &v in e {
        chosen.insert(v);
        branch(edges, chosen, best);
        chosen.remove(&v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(xs: &[u32]) -> Vec<VariableId> {
        xs.iter().map(|&x| VariableId(x)).collect()
    }

    #[test]
    fn triangle_covers() {
        let edges = [e(&[0, 1]), e(&[1, 2]), e(&[0, 2])];
        let t = minimal_transversals(&edges);
        assert_eq!(t.len(), 3);
        assert!(t.iter().all(|s| s.len() == 2));
        assert_eq!(min_transversal_size(&edges), 2);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(minimal_transversals(&[]), alloc::vec![BTreeSet::new()]);
        assert!(minimal_transversals(&[e(&[])]).is_empty());
        assert_eq!(min_transversal_size(&[]), 0);
    }
}
