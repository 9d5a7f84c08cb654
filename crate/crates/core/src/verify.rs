//! Independent Groebner basis checking, ideal membership and ideal equality.
//!
//! The checker runs its own S-pair loop over [`divide`]; it shares only the
//! polynomial and division primitives with the Buchberger implementation.

use std::cmp::Ordering;

use crate::buchberger::reduced_groebner_basis;
use crate::error::{Error, Result};
use crate::polyring::{s_polynomial, Monomial, MonomialOrder, Polynomial};
use crate::reduction::divide;

/// A failing S-pair: `remainder` is the nonzero normal form of
/// `S(basis[i], basis[j])` modulo the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbVerdict {
    pub is_gb: bool,
    pub witness: Option<Witness>,
}

/// Buchberger's criterion: `basis` is a Groebner basis iff every S-pair
/// reduces to zero. The first failing pair in min-lcm order (ties by index
/// pair) is returned as witness.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> Result<GbVerdict> {
    if basis.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut leads = Vec::with_capacity(basis.len());
    for f in basis {
        leads.push(f.leading_monomial(order)?.clone());
    }
    let mut pairs: Vec<(Monomial, usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((leads[i].lcm(&leads[j]), i, j));
        }
    }
    pairs.sort_by(|a, b| match order.cmp(&a.0, &b.0) {
        Ordering::Equal => (a.1, a.2).cmp(&(b.1, b.2)),
        other => other,
    });
    for (_, i, j) in pairs {
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let remainder = divide(&s, basis, order)?.remainder;
        if !remainder.is_zero() {
            return Ok(GbVerdict {
                is_gb: false,
                witness: Some(Witness { i, j, remainder }),
            });
        }
    }
    Ok(GbVerdict {
        is_gb: true,
        witness: None,
    })
}

/// Ideal membership through a verified Groebner basis.
pub fn ideal_member(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    if !is_groebner_basis(basis, order)?.is_gb {
        return Err(Error::NotGroebner(order.to_string()));
    }
    Ok(divide(f, basis, order)?.remainder.is_zero())
}

/// Whether `a` and `b` generate the same ideal, by comparing reduced
/// Groebner bases.
pub fn same_ideal(a: &[Polynomial], b: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    let ra = canonical(reduced_groebner_basis(a, order)?);
    let rb = canonical(reduced_groebner_basis(b, order)?);
    Ok(ra == rb)
}

fn canonical(mut v: Vec<Polynomial>) -> Vec<String> {
    v.sort_by_key(Polynomial::canonical_text);
    v.iter().map(Polynomial::canonical_text).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;
    use proptest::prelude::*;

    #[test]
    fn source_basis_is_groebner() {
        let r = ex1_ring();
        let g = ps(&r, &["y^2 + x*z + x", "z^2 + 1"]);
        assert_eq!(
            is_groebner_basis(&g, &degrevlex3()).unwrap(),
            GbVerdict {
                is_gb: true,
                witness: None
            }
        );
        assert!(
            is_groebner_basis(&ps(&r, &["x*y^2"]), &lex3())
                .unwrap()
                .is_gb
        );
    }

    #[test]
    fn converted_basis_misses_y4() {
        let r = ex1_ring();
        let g = ps(&r, &["y^2 + x*z + x", "z^2 + 1", "y^2*z + y^2"]);
        let v = is_groebner_basis(&g, &lex3()).unwrap();
        assert!(!v.is_gb);
        let w = v.witness.unwrap();
        assert_eq!((w.i, w.j), (0, 2));
        assert_eq!(w.remainder, p(&r, "y^4"));
    }

    #[test]
    fn empty_or_zero_input_is_rejected() {
        let r = ex1_ring();
        assert_eq!(is_groebner_basis(&[], &lex3()), Err(Error::EmptyInput));
        assert_eq!(
            is_groebner_basis(&[Polynomial::zero(&r)], &lex3()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn membership() {
        let r = ex1_ring();
        let full = ps(&r, &["x*z + x + y^2", "z^2 + 1", "y^2*z + y^2", "y^4"]);
        assert!(ideal_member(&p(&r, "y^4"), &full, &lex3()).unwrap());
        assert!(ideal_member(&Polynomial::zero(&r), &full, &lex3()).unwrap());
        assert!(!ideal_member(&p(&r, "y"), &full, &lex3()).unwrap());
        let partial = ps(&r, &["y^2 + x*z + x", "z^2 + 1", "y^2*z + y^2"]);
        assert!(matches!(
            ideal_member(&p(&r, "y^4"), &partial, &lex3()),
            Err(Error::NotGroebner(_))
        ));
    }

    #[test]
    fn ideal_equality() {
        let r = ex1_ring();
        let g12 = ps(&r, &["y^2 + x*z + x", "z^2 + 1"]);
        let g123 = ps(&r, &["y^2 + x*z + x", "z^2 + 1", "y^2*z + y^2"]);
        assert!(same_ideal(&g12, &g123, &lex3()).unwrap());
        assert!(!same_ideal(&g12, &g12[..1], &lex3()).unwrap());
        assert!(same_ideal(&g12, &g12, &lex3()).unwrap());
    }

    proptest! {
        #![proptest_config(pinned_config(64))]

        #[test]
        fn witness_replays((_r, gens) in generator_set(3), o in any_order3()) {
            let v = is_groebner_basis(&gens, &o).unwrap();
            prop_assert_eq!(v.is_gb, v.witness.is_none());
            if let Some(w) = v.witness {
                let s = s_polynomial(&gens[w.i], &gens[w.j], &o).unwrap();
                let rem = divide(&s, &gens, &o).unwrap().remainder;
                prop_assert_eq!(&rem, &w.remainder);
                for (m, _) in rem.terms() {
                    for g in &gens {
                        prop_assert!(!g.leading_monomial(&o).unwrap().divides(m));
                    }
                }
            }
        }

        #[test]
        fn same_ideal_is_an_equivalence(
            (r, gens) in generator_set(3),
            mult in poly_in(ex1_ring(), 2),
            o in any_order3(),
        ) {
            // b: a plus a multiple of its first generator; c: a reversed plus
            // the sum of two generators. All three generate the same ideal.
            let m = if r.field() == mult.field() { mult } else { Polynomial::one(&r) };
            let a = gens.clone();
            let mut b = gens.clone();
            b.push(&m * &gens[0]);
            let mut c: Vec<Polynomial> = gens.iter().rev().cloned().collect();
            c.push(&gens[0] + &gens[gens.len() - 1]);
            prop_assert!(same_ideal(&a, &a, &o).unwrap());
            prop_assert_eq!(same_ideal(&a, &b, &o).unwrap(), same_ideal(&b, &a, &o).unwrap());
            prop_assert!(same_ideal(&a, &b, &o).unwrap());
            prop_assert!(same_ideal(&b, &c, &o).unwrap());
            prop_assert!(same_ideal(&a, &c, &o).unwrap());
        }
    }
}
