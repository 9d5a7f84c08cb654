//! Multivariate division with quotient tracking, normal forms and
//! interreduction.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::polyring::{Monomial, MonomialOrder, OrderKey, Polynomial};

/// Which divisor reduces a term when several leading monomials divide it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DivisorSelection {
    /// The first divisor in list order.
    #[default]
    First,
    /// The last divisor in list order.
    Last,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    /// One quotient per divisor, aligned by index.
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

struct Divisor<'a> {
    lead: Monomial,
    lead_inv: Coeff,
    tail: Vec<(&'a Monomial, &'a Coeff)>,
}

/// Divides `f` by `divisors`, fully reducing every term.
///
/// At each step the greatest remaining term is divided by the first divisor
/// (in list order) whose leading monomial divides it; if none does it moves to
/// the remainder. The output satisfies `f = sum(q_i * d_i) + r` exactly.
pub fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> Result<DivisionResult> {
    divide_with(f, divisors, order, DivisorSelection::First)
}

pub fn divide_with(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
    selection: DivisorSelection,
) -> Result<DivisionResult> {
    let ring = f.ring();
    let mut prepared = Vec::with_capacity(divisors.len());
    for (i, d) in divisors.iter().enumerate() {
        if d.ring() != ring {
            return Err(Error::RingMismatch);
        }
        let (lead, lc) = d.leading(order).ok_or(Error::ZeroDivisor(i))?;
        prepared.push(Divisor {
            lead: lead.clone(),
            lead_inv: lc.inv()?,
            tail: d.terms().filter(|(m, _)| *m != lead).collect(),
        });
    }

    let mut work: BTreeMap<OrderKey, (Monomial, Coeff)> = f
        .terms()
        .map(|(m, c)| (order.key(m), (m.clone(), c.clone())))
        .collect();
    let mut quotients: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();

    while let Some((_, (m, c))) = work.pop_last() {
        let pick = match selection {
            DivisorSelection::First => prepared.iter().position(|d| d.lead.divides(&m)),
            DivisorSelection::Last => prepared.iter().rposition(|d| d.lead.divides(&m)),
        };
        let Some(i) = pick else {
            remainder.push((c, m));
            continue;
        };
        let d = &prepared[i];
        let qm = m.div(&d.lead).expect("divisible");
        let qc = &c * &d.lead_inv;
        for (tm, tc) in &d.tail {
            let prod = tm.mul(&qm);
            let delta = -&(&qc * tc);
            let key = order.key(&prod);
            match work.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert((prod, delta));
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = &e.get().1 + &delta;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        e.get_mut().1 = sum;
                    }
                }
            }
        }
        quotients[i].push((qc, qm));
    }

    let result = DivisionResult {
        quotients: quotients
            .into_iter()
            .map(|q| Polynomial::from_terms(ring, q))
            .collect::<Result<_>>()?,
        remainder: Polynomial::from_terms(ring, remainder)?,
    };
    #[cfg(test)]
    check_division(f, divisors, order, &result);
    Ok(result)
}

#[cfg(test)]
pub(crate) fn check_division(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
    res: &DivisionResult,
) {
    let mut rebuilt = res.remainder.clone();
    for (q, d) in res.quotients.iter().zip(divisors) {
        rebuilt = &rebuilt + &(q * d);
        if let (Some((lq, _)), Some((lf, _))) = ((q * d).leading(order), f.leading(order)) {
            assert_ne!(
                order.cmp(lq, lf),
                Ordering::Greater,
                "quotient term too large"
            );
        }
    }
    assert_eq!(&rebuilt, f, "division reconstruction failed");
    for (m, _) in res.remainder.terms() {
        for d in divisors {
            assert!(
                !d.leading_monomial(order).unwrap().divides(m),
                "remainder term divisible by a leading monomial"
            );
        }
    }
}

/// Remainder of `f` modulo `basis` (see [`divide`]).
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Polynomial> {
    Ok(divide(f, basis, order)?.remainder)
}

/// Processing order for interreduction: ascending leading monomial, ties by
/// canonical text.
pub(crate) fn ascending_by_leading(
    order: &MonomialOrder,
    a: &Polynomial,
    b: &Polynomial,
) -> Ordering {
    match (a.leading(order), b.leading(order)) {
        (Some((ma, _)), Some((mb, _))) => order
            .cmp(ma, mb)
            .then_with(|| a.canonical_text().cmp(&b.canonical_text())),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    }
}

/// How ties between equal leading monomials are broken while interreducing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TieBreak {
    CanonicalText,
    /// Lower tag first, so the older element survives.
    Tag,
}

/// Interreduces a tagged family, keeping each survivor's tag. Survivors are
/// returned sorted by tag.
pub(crate) fn interreduce_tagged(
    items: Vec<(usize, Polynomial)>,
    order: &MonomialOrder,
    tie: TieBreak,
) -> Vec<(usize, Polynomial)> {
    let mut work: Vec<(usize, Polynomial)> = items
        .into_iter()
        .filter(|(_, f)| !f.is_zero())
        .map(|(t, f)| (t, f.monic(order)))
        .collect();
    loop {
        // An element is reduced by everything after it in this order, so an
        // element that sorts last among equal leading monomials survives.
        work.sort_by(|a, b| match tie {
            TieBreak::CanonicalText => ascending_by_leading(order, &a.1, &b.1).then(a.0.cmp(&b.0)),
            TieBreak::Tag => {
                let la = a.1.leading_monomial(order).expect("nonzero");
                let lb = b.1.leading_monomial(order).expect("nonzero");
                order.cmp(la, lb).then(b.0.cmp(&a.0))
            }
        });
        let mut changed = false;
        for idx in 0..work.len() {
            let others: Vec<Polynomial> = work
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != idx)
                .map(|(_, (_, g))| g.clone())
                .collect();
            let r = normal_form(&work[idx].1, &others, order).expect("nonzero divisors");
            if r != work[idx].1 {
                if r.is_zero() {
                    work.remove(idx);
                } else {
                    work[idx].1 = r.monic(order);
                }
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    work.sort_by_key(|(t, _)| *t);
    work
}

/// Interreduces `basis`: drops zeros, makes every element monic and in normal
/// form with respect to the others. The ideal is unchanged. Output is sorted
/// ascending by leading monomial, ties by canonical text.
pub fn interreduce(basis: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let tagged = basis.iter().cloned().enumerate().collect();
    let mut out: Vec<Polynomial> = interreduce_tagged(tagged, order, TieBreak::CanonicalText)
        .into_iter()
        .map(|(_, f)| f)
        .collect();
    out.sort_by(|a, b| ascending_by_leading(order, a, b));
    out
}
