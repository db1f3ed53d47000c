use std::collections::BTreeSet;

use proptest::prelude::*;

use gvdlab_core::budget::Unlimited;
use gvdlab_core::graph::Graph;
use gvdlab_core::groebner::{self, IdealHandle};
use gvdlab_core::gvd::{cn_split, is_gvd, GvdOptions, Verdict};
use gvdlab_core::{toric, Monomial, MonomialOrder, Polynomial, RingContext, VariableId};

fn graph_from(n: usize, mask: &[bool]) -> Option<Graph> {
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    let chosen: Vec<(usize, usize)> = pairs.into_iter().zip(mask).filter(|(_, &m)| m).map(|(p, _)| p).collect();
    if chosen.is_empty() {
        return None;
    }
    let vs = (1..=n).map(|i| format!("x{i}")).collect();
    let es = chosen.iter().enumerate().map(|(k, &(a, b))| (format!("e{}", k + 1), a, b)).collect();
    Some(Graph::new(vs, es).unwrap())
}

fn small_graph(max_edges: usize) -> impl Strategy<Value = Graph> {
    (3usize..=6)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_filter_map("edge budget", move |(n, mask)| {
            graph_from(n, &mask).filter(|g| g.num_edges() <= max_edges)
        })
}

/// Kernel vectors of the incidence matrix with entries in `-2..=2`, minimal for ⊑.
fn brute_force_graver(g: &Graph) -> BTreeSet<Vec<i64>> {
    let m = g.num_edges();
    let inc = g.incidence_matrix();
    let mut kernel = Vec::new();
    let mut v = vec![-2i64; m];
    loop {
        if v.iter().any(|&x| x != 0) && inc.iter().all(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>() == 0) {
            kernel.push(v.clone());
        }
        let mut i = 0;
        while i < m && v[i] == 2 {
            v[i] = -2;
            i += 1;
        }
        if i == m {
            break;
        }
        v[i] += 1;
    }
    let below = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(&x, &y)| x == 0 || (x.signum() == y.signum() && x.abs() <= y.abs()));
    kernel.iter().filter(|v| !kernel.iter().any(|w| w != *v && below(w, v))).cloned().collect()
}

/// Vertex decomposability of the Stanley-Reisner complex of a square-free monomial ideal.
fn vertex_decomposable(faces: &BTreeSet<u32>) -> bool {
    if faces.is_empty() {
        return true;
    }
    let facets: Vec<u32> = faces.iter().copied().filter(|&f| !faces.iter().any(|&g| g != f && g & f == f)).collect();
    let dim = facets[0].count_ones();
    if facets.iter().any(|f| f.count_ones() != dim) {
        return false;
    }
    if facets.len() == 1 {
        return true;
    }
    let vertices = faces.iter().fold(0u32, |a, &f| a | f);
    (0..32).filter(|v| vertices >> v & 1 == 1).any(|v| {
        let bit = 1u32 << v;
        let del: BTreeSet<u32> = faces.iter().copied().filter(|f| f & bit == 0).collect();
        let lk: BTreeSet<u32> = faces.iter().copied().filter(|f| f & bit == 0 && faces.contains(&(f | bit))).collect();
        let del_facets_full = del.iter().all(|&f| {
            let maximal = !del.iter().any(|&g| g != f && g & f == f);
            !maximal || f.count_ones() == dim
        });
        del_facets_full && vertex_decomposable(&del) && vertex_decomposable(&lk)
    })
}

fn faces_of(n: usize, gens: &[u32]) -> BTreeSet<u32> {
    (0..1u32 << n).filter(|&f| !gens.iter().any(|&m| m & f == m)).collect()
}

fn monomial_ideal(n: usize, gens: &[u32]) -> IdealHandle {
    let ring = RingContext::new((1..=n).map(|i| format!("x{i}"))).unwrap();
    let polys = gens
        .iter()
        .map(|&m| Polynomial::monomial(Monomial::from_pairs((0..n as u32).filter(|i| m >> i & 1 == 1).map(|i| (VariableId(i), 1)))))
        .collect();
    IdealHandle::new(ring, polys).unwrap()
}

fn certify(i: &IdealHandle) -> Verdict {
    is_gvd(i, GvdOptions::default(), &Unlimited).unwrap().verdict()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, .. ProptestConfig::default() })]

    #[test]
    fn graver_basis_matches_brute_force(g in small_graph(7)) {
        let got: BTreeSet<Vec<i64>> = toric::universal_groebner_basis(&g)
            .unwrap()
            .into_iter()
            .flat_map(|p| [p.vector.clone(), p.vector.iter().map(|x| -x).collect()])
            .collect();
        prop_assert_eq!(got, brute_force_graver(&g));
    }

    #[test]
    fn deletion_is_the_toric_ideal_of_the_smaller_graph(g in small_graph(8)) {
        let i = toric::toric_ideal(&g).unwrap();
        let ring = i.ring().clone();
        for (k, e) in g.edges().iter().enumerate() {
            let s = cn_split(&i, VariableId(k as u32), None).unwrap();
            let small = g.without_edge_names(&[e.name.as_str()]);
            let want = toric::toric_ideal_in(&small, &ring.without(VariableId(k as u32)).0).unwrap();
            let (_, _, n) = s.contracted();
            prop_assert!(groebner::ideal_equal(&n, &want).unwrap());
        }
    }

    #[test]
    fn toric_dimension_is_krull_dimension(g in small_graph(8)) {
        let i = toric::toric_ideal(&g).unwrap();
        prop_assert_eq!(toric::toric_dimension(&g), groebner::krull_dimension(&i).unwrap());
    }

    #[test]
    fn split_is_order_independent_when_square_free(g in small_graph(7), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let i = toric::toric_ideal(&g).unwrap();
        let ring = i.ring().clone();
        let y = VariableId(0);
        let base = cn_split(&i, y, None).unwrap();
        prop_assume!(base.square_free_in_y);
        for k in 0..10 {
            let mut rest: Vec<VariableId> = ring.vars().filter(|&v| v != y).collect();
            rest.shuffle(&mut rng);
            let inner = if k % 2 == 0 { MonomialOrder::Lex(rest) } else { MonomialOrder::GrevLex(rest) };
            let s = cn_split(&i, y, Some(MonomialOrder::y_compatible(y, inner))).unwrap();
            prop_assert!(groebner::ideal_equal(&s.c, &base.c).unwrap());
            prop_assert!(groebner::ideal_equal(&s.n, &base.n).unwrap());
        }
    }

    #[test]
    fn square_free_monomial_complete_intersections_are_gvd(blocks in proptest::collection::vec(1usize..=3, 1..=3)) {
        let n: usize = blocks.iter().sum::<usize>() + 1;
        let mut gens = Vec::new();
        let mut at = 0;
        for b in blocks {
            gens.push(((1u32 << b) - 1) << at);
            at += b;
        }
        prop_assert_eq!(certify(&monomial_ideal(n, &gens)), Verdict::Gvd);
    }

    #[test]
    fn principal_with_square_free_terms_is_gvd(
        terms in proptest::collection::vec((1u32..63, -3i64..=3), 1..=4)
    ) {
        let ring = RingContext::new((1..=6).map(|i| format!("x{i}"))).unwrap();
        let f = Polynomial::from_terms(terms.iter().filter(|t| t.1 != 0).map(|&(m, c)| {
            (gvdlab_core::poly::coeff(c), Monomial::from_pairs((0..6u32).filter(|i| m >> i & 1 == 1).map(|i| (VariableId(i), 1))))
        }));
        prop_assume!(!f.is_zero());
        prop_assert_eq!(certify(&IdealHandle::new(ring, vec![f]).unwrap()), Verdict::Gvd);
    }

    #[test]
    fn monomial_verdicts_match_vertex_decomposability(gens in proptest::collection::vec(1u32..32, 1..=4)) {
        let verdict = certify(&monomial_ideal(5, &gens));
        let vd = vertex_decomposable(&faces_of(5, &gens));
        prop_assert_ne!(verdict, Verdict::Inconclusive);
        prop_assert_eq!(verdict == Verdict::Gvd, vd);
    }
}

#[test]
fn vertex_decomposability_oracle_sanity() {
    // two disjoint edges 12 and 34
    assert!(!vertex_decomposable(&faces_of(4, &[0b0101, 0b1001, 0b0110, 0b1010])));
    // an edge and an isolated point
    assert!(!vertex_decomposable(&faces_of(3, &[0b101, 0b110])));
    assert!(vertex_decomposable(&faces_of(3, &[0b011])));
    assert!(vertex_decomposable(&faces_of(3, &[])));
}
