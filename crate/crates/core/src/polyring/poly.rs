use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};

use super::ring::same_ring;
use super::{Monomial, MonomialOrder, Ring};

/// A nonzero coefficient times a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: Coeff, monomial: Monomial) -> Self {
        Term { coeff, monomial }
    }
}

/// Sparse polynomial in canonical form: terms keyed by exponent vector, no
/// zero coefficients. The storage order is independent of every monomial
/// order, so two polynomials are equal iff their term sets are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        Self::term(ring, ring.field().one(), Monomial::var(ring.nvars(), index))
    }

    pub fn term(ring: &Arc<Ring>, c: Coeff, m: Monomial) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(m, c);
        p
    }

    /// Sums the given terms, merging equal monomials.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Coeff, Monomial)>,
    ) -> Result<Self> {
        let mut p = Self::zero(ring);
        for (c, m) in terms {
            if c.field() != ring.field() {
                return Err(Error::FieldMismatch {
                    left: ring.field(),
                    right: c.field(),
                });
            }
            if m.nvars() != ring.nvars() {
                return Err(Error::ArityMismatch {
                    expected: ring.nvars(),
                    found: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.get(m)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `t * self` for a single term.
    pub fn term_mul(&self, t: &Term) -> Result<Polynomial> {
        if t.coeff.field() != self.field() {
            return Err(Error::FieldMismatch {
                left: self.field(),
                right: t.coeff.field(),
            });
        }
        if t.monomial.nvars() != self.ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars(),
                found: t.monomial.nvars(),
            });
        }
        Ok(self.mul_term_unchecked(&t.coeff, &t.monomial))
    }

    pub(crate) fn mul_term_unchecked(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // Multiplying by a term is injective on monomials, so no merging.
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), cc * c))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term_unchecked(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Result<Term> {
        let (m, c) = self.leading(order).ok_or(Error::ZeroPolynomial)?;
        Ok(Term::new(c.clone(), m.clone()))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<&Monomial> {
        self.leading(order)
            .map(|(m, _)| m)
            .ok_or(Error::ZeroPolynomial)
    }

    /// The order-maximal term, if any.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().reduce(|best, t| {
            if order.cmp(t.0, best.0).is_gt() {
                t
            } else {
                best
            }
        })
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Keeps the terms for which `keep` holds.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial, &Coeff) -> bool) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, c)| keep(m, c))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Renders terms in descending `order`, e.g. `x*z + x + y^2`.
    pub fn display<'a>(&'a self, order: &'a MonomialOrder) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, order }
    }

    /// Order-independent text used for deterministic tie-breaking.
    pub fn canonical_text(&self) -> String {
        let lex = MonomialOrder::lex(self.ring.nvars());
        self.display(&lex).to_string()
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.canonical_text())
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    order: &'a MonomialOrder,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.sorted_terms(self.order);
        if terms.is_empty() {
            return f.write_str("0");
        }
        let vars = self.poly.ring.vars();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.display(vars))?;
            } else {
                write!(f, "{a}*{}", m.display(vars))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-&self.field().one())
    }
}
