//! Monomials, monomial orders, sparse polynomials and the elementary
//! constructions of Groebner theory: leading terms, S-polynomials and the
//! truncated part of a polynomial relative to two orders.

mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

use std::cmp::Ordering;

pub use monomial::{Monomial, MonomialDisplay};
pub use order::{MonomialOrder, OrderKey, OrderKind};
pub use parse::parse_polynomial;
pub(crate) use parse::{parse_span, position};
pub use poly::{PolyDisplay, Polynomial, Term};
pub(crate) use ring::is_identifier;
pub use ring::Ring;

use crate::error::{Error, Result};

/// Compares two monomials under `order`.
pub fn compare(a: &Monomial, b: &Monomial, order: &MonomialOrder) -> Result<Ordering> {
    order.compare(a, b)
}

/// `term_mul(t, f) = t * f`.
pub fn term_mul(t: &Term, f: &Polynomial) -> Result<Polynomial> {
    f.term_mul(t)
}

/// lcm of the leading monomials of `f` and `g`.
pub fn lcm_of_leading_monomials(
    f: &Polynomial,
    g: &Polynomial,
    order: &MonomialOrder,
) -> Result<Monomial> {
    Ok(f.leading_monomial(order)?.lcm(g.leading_monomial(order)?))
}

/// The two multipliers of an S-polynomial: `S(f, g) = left*f - right*g`,
/// where both leading terms are first scaled to be monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPolyParts {
    pub left: Term,
    pub right: Term,
    pub lcm: Monomial,
}

pub fn s_polynomial_parts(
    f: &Polynomial,
    g: &Polynomial,
    order: &MonomialOrder,
) -> Result<SPolyParts> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let lf = f.leading_term(order)?;
    let lg = g.leading_term(order)?;
    let lcm = lf.monomial.lcm(&lg.monomial);
    let left = Term::new(
        lf.coeff.inv()?,
        lcm.div(&lf.monomial).expect("lcm is a multiple"),
    );
    let right = Term::new(
        lg.coeff.inv()?,
        lcm.div(&lg.monomial).expect("lcm is a multiple"),
    );
    Ok(SPolyParts { left, right, lcm })
}

/// `S(f, g) = (lcm/LT(f))*f - (lcm/LT(g))*g` with monic leading coefficients.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    let parts = s_polynomial_parts(f, g, order)?;
    Ok(&f.term_mul(&parts.left)? - &g.term_mul(&parts.right)?)
}

/// The truncated part of `f`: the terms of `f` that are greater than or
/// equal, under `target`, to the leading term of `f` under `source`.
///
/// The result always contains the leading terms of `f` under both orders.
pub fn truncate(
    f: &Polynomial,
    source: &MonomialOrder,
    target: &MonomialOrder,
) -> Result<Polynomial> {
    let lead = f.leading_monomial(source)?.clone();
    Ok(f.filter_terms(|m, _| target.cmp(m, &lead) != Ordering::Less))
}
