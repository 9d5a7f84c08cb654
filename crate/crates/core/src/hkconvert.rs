//! Groebner basis conversion by truncation and lifting.
//!
//! Starting from a Groebner basis `G` for a source order, each iteration
//!
//! 1. truncates every element of `G` relative to the source and target orders,
//! 2. runs the extended Buchberger algorithm on the truncated set under the
//!    target order, recording Groebner coefficients of appended elements,
//! 3. lifts those coefficients back onto the untruncated elements,
//! 4. interreduces `G` together with the lifted elements,
//!
//! and stops once interreduction reproduces the basis it started from.
//!
//! This procedure is *not* correct in general: the output can fail to be a
//! Groebner basis for the target order. [`ConversionResult::is_target_gb`]
//! records the verdict of the independent checker on every run.

use std::fmt::Write as _;

use crate::buchberger::{
    extended_buchberger, reduced_groebner_basis, CofactorRow, ExtendedBasisResult, PairSelector,
    PairStrategy,
};
use crate::error::{Error, Result};
use crate::polyring::{truncate, MonomialOrder, Polynomial};
use crate::reduction::{interreduce_tagged, TieBreak};
use crate::verify::{is_groebner_basis, GbVerdict};

/// Elementwise truncation. Order is preserved so cofactor indices keep
/// pointing at the matching untruncated element.
pub fn truncate_set(
    basis: &[Polynomial],
    source: &MonomialOrder,
    target: &MonomialOrder,
) -> Result<Vec<Polynomial>> {
    basis.iter().map(|f| truncate(f, source, target)).collect()
}

/// Evaluates cofactor rows. Row `k` is applied to `source` followed by the
/// results of rows `0..k`; zero results are kept so later rows stay aligned.
pub fn lift(rows: &[CofactorRow], source: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut reference: Vec<Polynomial> = source.to_vec();
    let mut lifted = Vec::with_capacity(rows.len());
    for (k, row) in rows.iter().enumerate() {
        if row.len() > reference.len() {
            return Err(Error::RowTooLong {
                row: k,
                len: row.len(),
                available: reference.len(),
            });
        }
        let g = row.dot(&reference)?;
        reference.push(g.clone());
        lifted.push(g);
    }
    Ok(lifted)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceHandling {
    /// Check that the input is a Groebner basis for the source order and
    /// fail otherwise.
    Verify,
    /// Replace the input by its reduced Groebner basis for the source order.
    Autocomplete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvertOptions {
    pub strategy: PairStrategy,
    pub max_iter: usize,
    pub max_pairs: usize,
    pub source: SourceHandling,
}

impl Default for ConvertOptions {
    fn default() -> Self {
        ConvertOptions {
            strategy: PairStrategy::MinLcmFirst,
            max_iter: 100,
            max_pairs: 100_000,
            source: SourceHandling::Verify,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConversionStatus {
    Fixpoint,
    IterationCap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationRecord {
    /// The basis the iteration started from; the lift reference prefix.
    pub source: Vec<Polynomial>,
    pub truncated: Vec<Polynomial>,
    pub extended: ExtendedBasisResult,
    /// One entry per cofactor row, zeros included.
    pub lifted: Vec<Polynomial>,
    pub interreduced: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConversionTrace {
    pub source_order: MonomialOrder,
    pub target_order: MonomialOrder,
    pub iterations: Vec<IterationRecord>,
    pub status: ConversionStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConversionResult {
    pub output: Vec<Polynomial>,
    pub trace: ConversionTrace,
    /// Checker verdict on `output` under the target order.
    pub is_target_gb: GbVerdict,
}

fn canonical_set(basis: &[Polynomial], order: &MonomialOrder) -> Vec<String> {
    let mut v: Vec<String> = basis
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.monic(order).canonical_text())
        .collect();
    v.sort();
    v.dedup();
    v
}

pub fn hk_convert(
    generators: &[Polynomial],
    source: &MonomialOrder,
    target: &MonomialOrder,
    options: &ConvertOptions,
) -> Result<ConversionResult> {
    if options.max_iter == 0 {
        return Err(Error::InvalidStrategy("max_iter must be at least 1".into()));
    }
    let nonzero: Vec<Polynomial> = generators
        .iter()
        .filter(|f| !f.is_zero())
        .cloned()
        .collect();
    if nonzero.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut current = match options.source {
        SourceHandling::Verify => {
            if !is_groebner_basis(&nonzero, source)?.is_gb {
                return Err(Error::NotGroebner(source.to_string()));
            }
            nonzero
        }
        SourceHandling::Autocomplete => reduced_groebner_basis(&nonzero, source)?,
    };

    let mut selector = PairSelector::new(&options.strategy);
    let mut iterations = Vec::new();
    let mut status = ConversionStatus::IterationCap;
    for _ in 0..options.max_iter {
        let truncated = truncate_set(&current, source, target)?;
        let extended = extended_buchberger(&truncated, target, &mut selector, options.max_pairs)?;
        let lifted = lift(&extended.rows, &current)?;
        let combined: Vec<(usize, Polynomial)> =
            current.iter().chain(&lifted).cloned().enumerate().collect();
        let interreduced: Vec<Polynomial> = interreduce_tagged(combined, target, TieBreak::Tag)
            .into_iter()
            .map(|(_, f)| f)
            .collect();
        let done = canonical_set(&interreduced, target) == canonical_set(&current, target);
        iterations.push(IterationRecord {
            source: std::mem::replace(&mut current, interreduced.clone()),
            truncated,
            extended,
            lifted,
            interreduced,
        });
        if done {
            status = ConversionStatus::Fixpoint;
            break;
        }
    }

    let is_target_gb = is_groebner_basis(&current, target)?;
    Ok(ConversionResult {
        output: current,
        trace: ConversionTrace {
            source_order: source.clone(),
            target_order: target.clone(),
            iterations,
            status,
        },
        is_target_gb,
    })
}

impl ConversionTrace {
    /// Line-oriented text, one event per line, polynomials printed in
    /// descending target order. Indices are 1-based.
    pub fn to_text(&self) -> String {
        let o = &self.target_order;
        let join = |v: &[Polynomial]| {
            v.iter()
                .map(|f| f.display(o).to_string())
                .collect::<Vec<_>>()
                .join("; ")
        };
        let mut out = String::new();
        for (n, it) in self.iterations.iter().enumerate() {
            let _ = writeln!(out, "ITERATION {}", n + 1);
            for (k, h) in it.truncated.iter().enumerate() {
                let _ = writeln!(out, "TRUNC h{} = {}", k + 1, h.display(o));
            }
            let ring = it.source[0].ring();
            for ev in &it.extended.pair_log {
                let _ = write!(
                    out,
                    "PAIR ({},{}) lcm={} S={} -> ",
                    ev.i + 1,
                    ev.j + 1,
                    ev.lcm.display(ring.vars()),
                    ev.s_polynomial.display(o)
                );
                match ev.appended {
                    None => {
                        let _ = writeln!(out, "0");
                    }
                    Some(idx) => {
                        let row = &it.extended.rows[idx - it.extended.inputs];
                        let coeffs: Vec<String> = row
                            .coefficients
                            .iter()
                            .map(|c| c.display(o).to_string())
                            .collect();
                        let _ = writeln!(out, "h{}", idx + 1);
                        let _ = writeln!(
                            out,
                            "APPEND h{} = {} row=[{}]",
                            idx + 1,
                            it.extended.basis[idx].display(o),
                            coeffs.join(", ")
                        );
                    }
                }
            }
            for (k, g) in it.lifted.iter().enumerate() {
                let _ = writeln!(out, "LIFT g{} = {}", it.source.len() + k + 1, g.display(o));
            }
            let _ = writeln!(out, "INTERREDUCE {}", join(&it.interreduced));
        }
        match self.status {
            ConversionStatus::Fixpoint => {
                let _ = writeln!(out, "FIXPOINT after {} iterations", self.iterations.len());
            }
            ConversionStatus::IterationCap => {
                let _ = writeln!(
                    out,
                    "ITERATION_CAP after {} iterations",
                    self.iterations.len()
                );
            }
        }
        out
    }
}
