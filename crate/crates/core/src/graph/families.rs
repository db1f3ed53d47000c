//! Named graph families with the edge labels used throughout the crate.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Graph;
use crate::error::{Error, Result};

fn build(edges: Vec<(String, String, String)>) -> Result<Graph> {
    Graph::from_named_edges(&edges)
}

fn x(i: usize) -> String {
    format!("x{i}")
}

/// The cycle on `n ≥ 3` vertices, `e_i = {x_i, x_{i+1}}` and `e_n = {x_n, x_1}`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidGraph("a cycle needs at least three vertices".into()));
    }
    build((1..=n).map(|i| (format!("e{i}"), x(i), x(i % n + 1))).collect())
}

/// `K_n` with edges `e1, e2, …` in lexicographic order of their endpoints.
pub fn complete(n: usize) -> Result<Graph> {
    let mut es = Vec::new();
    let mut vs = Vec::new();
    for i in 1..=n {
        vs.push(x(i));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            es.push((format!("e{}", es.len() + 1), i - 1, j - 1));
        }
    }
    Graph::new(vs, es)
}

/// `K_{m,n}`: edge `e_i_j = {x_i, y_j}`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    let mut es = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            es.push((format!("e{i}_{j}"), x(i), format!("y{j}")));
        }
    }
    build(es)
}

/// Ferrers graph of a partition: `e_i_j = {x_i, y_j}` for `j ≤ λ_i`.
pub fn ferrers(lambda: &[usize]) -> Result<Graph> {
    if lambda.windows(2).any(|w| w[0] < w[1]) || lambda.iter().any(|&p| p == 0) {
        return Err(Error::InvalidGraph("a partition must be positive and weakly decreasing".into()));
    }
    let mut es = Vec::new();
    for (i, &li) in lambda.iter().enumerate() {
        for j in 1..=li {
            es.push((format!("e{}_{j}", i + 1), x(i + 1), format!("y{j}")));
        }
    }
    build(es)
}

/// `K_{2,d}` with its two degree-`d` vertices joined by a path of length
/// `2r - 2`: `a_i = {x1, y_i}`, `b_i = {x2, y_i}`, `e1 = {x1, z1}`,
/// `e_{i+1} = {z_i, z_{i+1}}`, `e_{2r-2} = {z_{2r-3}, x2}`.
pub fn g_rd(r: usize, d: usize) -> Result<Graph> {
    if r < 3 || d < 2 {
        return Err(Error::InvalidGraph("need r ≥ 3 and d ≥ 2".into()));
    }
    let mut es = Vec::new();
    for i in 1..=d {
        es.push((format!("a{i}"), x(1), format!("y{i}")));
    }
    for i in 1..=d {
        es.push((format!("b{i}"), x(2), format!("y{i}")));
    }
    let z = |i: usize| format!("z{i}");
    es.push(("e1".into(), x(1), z(1)));
    for i in 1..=2 * r - 4 {
        es.push((format!("e{}", i + 1), z(i), z(i + 1)));
    }
    es.push((format!("e{}", 2 * r - 2), z(2 * r - 3), x(2)));
    build(es)
}

/// Two copies of `K_4` sharing the vertex `x4`.
pub fn two_k4() -> Result<Graph> {
    let pairs = [
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 4),
        (4, 5),
        (4, 6),
        (4, 7),
        (5, 6),
        (5, 7),
        (6, 7),
    ];
    let vs: Vec<String> = (1..=7).map(x).collect();
    let es = pairs.iter().enumerate().map(|(k, &(a, b))| (format!("e{}", k + 1), a - 1, b - 1)).collect();
    Graph::new(vs, es)
}

/// Two triangles joined by a path of length two.
pub fn two_triangles_path() -> Result<Graph> {
    let es = [
        ("e1", 1, 2),
        ("e2", 1, 3),
        ("e3", 3, 2),
        ("e4", 3, 4),
        ("e5", 4, 5),
        ("e6", 5, 6),
        ("e7", 5, 7),
        ("e8", 6, 7),
    ];
    build(es.iter().map(|&(n, a, b)| (String::from(n), x(a), x(b))).collect())
}

type EdgeList = Vec<(usize, usize)>;

fn permutations_within(classes: &[Vec<usize>], n: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(classes: &[Vec<usize>], k: usize, pos: usize, label: &mut Vec<usize>, used: &mut Vec<bool>, visit: &mut dyn FnMut(&[usize])) {
        if k == classes.len() {
            visit(label);
            return;
        }
        let class = &classes[k];
        if pos == class.len() {
            rec(classes, k + 1, 0, label, used, visit);
            return;
        }
        let base: usize = classes[..k].iter().map(|c| c.len()).sum();
        for slot in 0..class.len() {
            if !used[base + slot] {
                used[base + slot] = true;
                label[class[pos]] = base + slot;
                rec(classes, k, pos + 1, label, used, visit);
                used[base + slot] = false;
            }
        }
    }
    let mut label = alloc::vec![0; n];
    let mut used = alloc::vec![false; n];
    rec(classes, 0, 0, &mut label, &mut used, &mut visit);
}

/// Least relabelled edge list over labellings that respect a degree refinement.
fn canonical(n: usize, edges: &[(usize, usize)]) -> EdgeList {
    let mut deg = alloc::vec![0usize; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut key: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = edges
                .iter()
                .filter_map(|&(a, b)| if a == v { Some(deg[b]) } else if b == v { Some(deg[a]) } else { None })
                .collect();
            nd.sort();
            (deg[v], nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| key[a].cmp(&key[b]));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        if i > 0 && key[order[i - 1]] == key[v] {
            classes.last_mut().unwrap().push(v);
        } else {
            classes.push(alloc::vec![v]);
        }
    }
    key.clear();
    let mut best: Option<EdgeList> = None;
    permutations_within(&classes, n, |label| {
        let mut es: EdgeList =
            edges.iter().map(|&(a, b)| (label[a].min(label[b]), label[a].max(label[b]))).collect();
        es.sort();
        if best.as_ref().map_or(true, |b| es < *b) {
            best = Some(es);
        }
    });
    best.unwrap_or_default()
}

/// Every connected simple graph with `1..=max_edges` edges, one per
/// isomorphism class, ordered by edge count.
pub fn connected_graphs(max_edges: usize) -> Result<Vec<Graph>> {
    let mut levels: Vec<alloc::collections::BTreeSet<(usize, EdgeList)>> = Vec::new();
    if max_edges >= 1 {
        levels.push([(2, alloc::vec![(0, 1)])].into_iter().collect());
    }
    while levels.len() < max_edges {
        let mut next = alloc::collections::BTreeSet::new();
        for (n, es) in levels.last().unwrap() {
            let n = *n;
            for v in 0..n {
                let mut e2 = es.clone();
                e2.push((v, n));
                next.insert((n + 1, canonical(n + 1, &e2)));
            }
            for a in 0..n {
                for b in a + 1..n {
                    if !es.contains(&(a, b)) {
                        let mut e2 = es.clone();
                        e2.push((a, b));
                        next.insert((n, canonical(n, &e2)));
                    }
                }
            }
        }
        levels.push(next);
    }
    let mut out = Vec::new();
    for level in levels {
        for (n, es) in level {
            let vs: Vec<String> = (1..=n).map(x).collect();
            let named = es.iter().enumerate().map(|(k, &(a, b))| (format!("e{}", k + 1), a, b)).collect();
            out.push(Graph::new(vs, named)?);
        }
    }
    Ok(out)
}
