use super::*;
use crate::budget::{NodeLimit, Unlimited};
use crate::graph::families;
use crate::groebner::IdealHandle;
use crate::ring::RingContext;
use crate::toric;

fn ring(n: &[&str]) -> RingContext {
    RingContext::new(n.iter().copied()).unwrap()
}

fn verdict(r: &RingContext, gens: &[&str]) -> Verdict {
    let i = IdealHandle::parse(r, gens).unwrap();
    let c = is_gvd_unlimited(&i).unwrap();
    let rep = replay(&c, None).unwrap();
    assert_eq!(rep.verdict, c.verdict());
    c.verdict()
}

#[test]
fn one_variable_ideals() {
    let r = ring(&["x"]);
    assert_eq!(verdict(&r, &["3*x + 2"]), Verdict::Gvd);
    assert_eq!(verdict(&r, &["x"]), Verdict::Gvd);
    assert_eq!(verdict(&r, &["x^2"]), Verdict::NotGvd);
    assert_eq!(verdict(&r, &["x^2 - 1"]), Verdict::NotGvd);
    assert_eq!(verdict(&r, &["1"]), Verdict::Gvd);
}

#[test]
fn square_free_principal_ideals() {
    let r = ring(&["a", "b", "c", "d"]);
    assert_eq!(verdict(&r, &["a*b - c*d + a*c*d"]), Verdict::Gvd);
    assert_eq!(verdict(&r, &["a*b*c"]), Verdict::Gvd);
}

#[test]
fn fig6_principal_binomial_is_not_gvd() {
    let r = ring(&["e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"]);
    let i = IdealHandle::parse(&r, &["e1*e4^2*e6*e7 - e2*e3*e5^2*e8"]).unwrap();
    let c = is_gvd_unlimited(&i).unwrap();
    assert_eq!(c.verdict(), Verdict::NotGvd);
    replay(&c, None).unwrap();
}

#[test]
fn mixed_ideal_is_not_gvd() {
    let r = ring(&["x", "y", "z"]);
    assert_eq!(verdict(&r, &["x*y", "x*z"]), Verdict::NotGvd);
}

#[test]
fn small_toric_ideals() {
    for g in [families::cycle(4).unwrap(), families::cycle(6).unwrap(), families::complete(4).unwrap()] {
        let i = toric::toric_ideal(&g).unwrap();
        let c = is_gvd(&i, GvdOptions::default().with_graph(g.clone()), &Unlimited).unwrap();
        assert_eq!(c.verdict(), Verdict::Gvd);
        replay(&c, Some(&g)).unwrap();
    }
}

#[test]
fn budget_gives_inconclusive() {
    let g = families::complete(4).unwrap();
    let i = toric::toric_ideal(&g).unwrap();
    let c = is_gvd(&i, GvdOptions::default(), &NodeLimit::new(0)).unwrap();
    assert_eq!(c.verdict(), Verdict::Inconclusive);
}

#[test]
fn disjoint_unions() {
    let c4 = families::cycle(4).unwrap();
    let c = gvd_disjoint_union(&c4, &c4, &Unlimited).unwrap();
    assert_eq!(c.verdict(), Verdict::Gvd);
    let f6 = families::two_triangles_path().unwrap();
    let c = gvd_disjoint_union(&c4, &f6, &Unlimited).unwrap();
    assert_eq!(c.verdict(), Verdict::NotGvd);
}
