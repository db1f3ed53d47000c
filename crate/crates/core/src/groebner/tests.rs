use super::*;
use crate::ring::VariableId;

fn ring(names: &[&str]) -> RingContext {
    RingContext::new(names.iter().copied()).unwrap()
}

fn polys(r: &RingContext, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|x| Polynomial::parse(r, x).unwrap()).collect()
}

#[test]
fn textbook_graded_basis() {
    let r = ring(&["x", "y"]);
    let g = polys(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]);
    // graded lex and graded reverse lex agree in two variables
    let gb = buchberger(&r, &g, &MonomialOrder::grevlex(&r)).unwrap();
    let mut want = polys(&r, &["x^2", "x*y", "y^2 - 1/2*x"]);
    want.sort();
    assert_eq!(gb.elements(), want.as_slice());
    assert!(is_groebner_basis(gb.elements(), gb.order()));
    assert!(!is_groebner_basis(&g, gb.order()));
}

#[test]
fn lex_elimination_of_twisted_cubic() {
    let r = ring(&["t", "x", "y", "z"]);
    let g = polys(&r, &["x - t", "y - t^2", "z - t^3"]);
    let i = IdealHandle::new(r.clone(), g).unwrap();
    let j = eliminate(&i, &[VariableId(0)]).unwrap();
    let want = IdealHandle::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
    assert!(ideal_equal(&j, &want).unwrap());
}

#[test]
fn unit_detection() {
    let r = ring(&["x", "y"]);
    let i = IdealHandle::parse(&r, &["x*y - 1", "x"]).unwrap();
    assert!(i.is_unit().unwrap());
    let gb = i.canonical_basis().unwrap();
    assert_eq!(gb.elements(), &[Polynomial::one()]);
    assert!(krull_dimension(&i).is_err());
}

#[test]
fn intersection_of_monomial_primes() {
    let r = ring(&["x", "y", "z"]);
    let a = IdealHandle::parse(&r, &["x", "y"]).unwrap();
    let b = IdealHandle::parse(&r, &["z"]).unwrap();
    let c = intersect(&a, &b).unwrap();
    let want = IdealHandle::parse(&r, &["x*z", "y*z"]).unwrap();
    assert!(ideal_equal(&c, &want).unwrap());
    assert_eq!(krull_dimension(&c).unwrap(), 2);
    assert_eq!(krull_dimension(&a).unwrap(), 1);
}

#[test]
fn saturation_removes_variable_factors() {
    let r = ring(&["x", "y", "z"]);
    let i = IdealHandle::parse(&r, &["x*y - x*z", "x^2"]).unwrap();
    let s = saturate_variable(&i, VariableId(0)).unwrap();
    assert!(s.is_unit().unwrap());
    let i = IdealHandle::parse(&r, &["x*y - x*z"]).unwrap();
    let s = saturate_variable(&i, VariableId(0)).unwrap();
    assert!(ideal_equal(&s, &IdealHandle::parse(&r, &["y - z"]).unwrap()).unwrap());
}

#[test]
fn contraction_needs_an_extended_ideal() {
    let r = ring(&["x", "y", "z"]);
    let i = IdealHandle::parse(&r, &["x*y - y*z", "y^2 - x*z"]).unwrap();
    assert!(contract(&i, VariableId(1)).is_err());
    let i = IdealHandle::parse(&r, &["x - z", "x*z"]).unwrap();
    let c = contract(&i, VariableId(1)).unwrap();
    assert_eq!(c.ring().names(), &["x", "z"]);
    assert!(contract(&i, VariableId(7)).is_err());
}

#[test]
fn variable_and_square_free_recognition() {
    let r = ring(&["x", "y", "z"]);
    let i = IdealHandle::parse(&r, &["x + y", "y"]).unwrap();
    assert!(is_generated_by_variables(&i).unwrap());
    let m = IdealHandle::parse(&r, &["x*y", "y*z"]).unwrap();
    assert!(is_square_free_monomial_ideal(&m).unwrap());
    assert!(!is_square_free_monomial_ideal(&IdealHandle::parse(&r, &["x^2"]).unwrap()).unwrap());
}

#[test]
fn arity_errors_surface() {
    let r = ring(&["x"]);
    let other = ring(&["x", "y"]);
    let p = Polynomial::parse(&other, "y").unwrap();
    assert!(IdealHandle::new(r.clone(), alloc::vec![p]).is_err());
    assert!(buchberger(&r, &[], &MonomialOrder::lex(&other)).is_err());
}
