//! Random rings, orders and polynomials for property tests: at most three
//! variables, total degree at most three.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::sync::Arc;

use proptest::prelude::*;
use truncgb::prelude::*;

pub const NAMES: [&str; 3] = ["x", "y", "z"];

pub fn ring(field: Field, nvars: usize) -> Arc<Ring> {
    Ring::new(field, NAMES[..nvars].iter().copied()).unwrap()
}

/// All exponent vectors in `nvars` variables of total degree at most `deg`.
pub fn monomials(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                let used: u32 = e.iter().sum();
                (0..=deg - used).map(move |k| {
                    let mut e = e.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// The order by its definition, without the crate's sort keys.
pub fn reference_cmp(kind: OrderKind, ranking: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let (a, b) = (a.exponents(), b.exponents());
    match kind {
        OrderKind::Lex => {
            for &v in ranking {
                if a[v] != b[v] {
                    return a[v].cmp(&b[v]);
                }
            }
            Ordering::Equal
        }
        OrderKind::DegRevLex => {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            if da != db {
                return da.cmp(&db);
            }
            for &v in ranking.iter().rev() {
                if a[v] != b[v] {
                    return b[v].cmp(&a[v]);
                }
            }
            Ordering::Equal
        }
    }
}

pub fn order(nvars: usize) -> impl Strategy<Value = MonomialOrder> {
    let perm: Vec<usize> = (0..nvars).collect();
    (
        prop_oneof![Just(OrderKind::Lex), Just(OrderKind::DegRevLex)],
        Just(perm).prop_shuffle(),
    )
        .prop_map(|(kind, ranking)| MonomialOrder::new(kind, ranking).unwrap())
}

fn coeff(field: Field) -> BoxedStrategy<Coeff> {
    match field {
        Field::Gf2 => Just(Field::Gf2.one()).boxed(),
        Field::Rational => (-4i64..=4, 1i64..=3)
            .prop_filter("nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| {
                Field::Rational
                    .from_int(n)
                    .checked_div(&Field::Rational.from_int(d))
                    .unwrap()
            })
            .boxed(),
    }
}

pub fn poly(ring: Arc<Ring>, max_terms: usize) -> BoxedStrategy<Polynomial> {
    let monos = monomials(ring.nvars(), 3);
    let field = ring.field();
    prop::collection::vec((coeff(field), prop::sample::select(monos)), 0..=max_terms)
        .prop_map(move |terms| Polynomial::from_terms(&ring, terms).unwrap())
        .boxed()
}

pub fn nonzero_poly(ring: Arc<Ring>, max_terms: usize) -> BoxedStrategy<Polynomial> {
    poly(ring, max_terms)
        .prop_filter("nonzero", |f| !f.is_zero())
        .boxed()
}

/// A ring with one to three variables, an order on it, and `item` built from
/// the ring.
pub fn with_ring<T: std::fmt::Debug + Clone + 'static>(
    field: Field,
    item: impl Fn(Arc<Ring>) -> BoxedStrategy<T> + 'static,
) -> BoxedStrategy<(MonomialOrder, T)> {
    (1usize..=3)
        .prop_flat_map(move |n| (order(n), item(ring(field, n))))
        .boxed()
}

/// One to three nonzero generators with at most three terms each.
pub fn generators(r: Arc<Ring>) -> BoxedStrategy<Vec<Polynomial>> {
    prop::collection::vec(nonzero_poly(r, 3), 1..=3).boxed()
}
