//! Fixtures and generators shared by unit tests.

use std::sync::Arc;

use proptest::prelude::*;

use crate::field::{Coeff, Field};
use crate::polyring::{parse_polynomial, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};

pub fn ex1_ring() -> Arc<Ring> {
    Ring::new(Field::Gf2, ["x", "y", "z"]).unwrap()
}

pub fn p(ring: &Arc<Ring>, text: &str) -> Polynomial {
    parse_polynomial(ring, text).unwrap()
}

pub fn ps(ring: &Arc<Ring>, texts: &[&str]) -> Vec<Polynomial> {
    texts.iter().map(|t| p(ring, t)).collect()
}

pub fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

pub fn lex3() -> MonomialOrder {
    MonomialOrder::lex(3)
}

pub fn degrevlex3() -> MonomialOrder {
    MonomialOrder::degrevlex(3)
}

pub fn any_order3() -> impl Strategy<Value = MonomialOrder> {
    (
        prop_oneof![Just(OrderKind::Lex), Just(OrderKind::DegRevLex)],
        Just(vec![0usize, 1, 2]).prop_shuffle(),
    )
        .prop_map(|(k, r)| MonomialOrder::new(k, r).unwrap())
}

fn coeff(field: Field) -> BoxedStrategy<Coeff> {
    match field {
        Field::Gf2 => Just(Field::Gf2.one()).boxed(),
        Field::Rational => (-5i64..=5, 1i64..=3)
            .prop_filter("nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| Field::Rational.from_ratio(n.into(), d.into()).unwrap())
            .boxed(),
    }
}

/// Polynomial in 3 variables of total degree at most 3.
pub fn poly_in(ring: Arc<Ring>, max_terms: usize) -> BoxedStrategy<Polynomial> {
    let field = ring.field();
    proptest::collection::vec(
        (proptest::collection::vec(0u32..=3, 3), coeff(field)),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .filter(|(e, _)| e.iter().sum::<u32>() <= 3)
            .map(|(e, c)| (c, Monomial::new(e)));
        Polynomial::from_terms(&ring, terms).unwrap()
    })
    .boxed()
}

pub fn any_ring3() -> impl Strategy<Value = Arc<Ring>> {
    prop_oneof![Just(Field::Gf2), Just(Field::Rational)]
        .prop_map(|f| Ring::new(f, ["x", "y", "z"]).unwrap())
}

pub fn poly_triple() -> impl Strategy<Value = (Arc<Ring>, Polynomial, Polynomial, Polynomial)> {
    any_ring3().prop_flat_map(|r| {
        (
            Just(r.clone()),
            poly_in(r.clone(), 4),
            poly_in(r.clone(), 4),
            poly_in(r, 4),
        )
    })
}

/// A ring and up to `max_gens` nonzero generators.
pub fn generator_set(max_gens: usize) -> impl Strategy<Value = (Arc<Ring>, Vec<Polynomial>)> {
    any_ring3().prop_flat_map(move |r| {
        (
            Just(r.clone()),
            proptest::collection::vec(
                poly_in(r, 3).prop_filter("nonzero", |f| !f.is_zero()),
                1..=max_gens,
            ),
        )
    })
}

/// Fixed-seed config for properties that run Buchberger over Q, where a few
/// random inputs blow up in coefficient size.
pub fn pinned_config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(20),
        ..ProptestConfig::default()
    }
}

/// Two nonzero polynomials over the same random field.
pub fn nonzero_pair() -> impl Strategy<Value = (Polynomial, Polynomial)> {
    any_ring3().prop_flat_map(|r| {
        let nz = |r: Arc<Ring>| poly_in(r, 4).prop_filter("nonzero", |f| !f.is_zero());
        (nz(r.clone()), nz(r))
    })
}
