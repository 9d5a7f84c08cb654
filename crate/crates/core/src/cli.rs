//! Command implementations behind the `truncgb` binary. Each command returns
//! its stdout text and exit code so it can be tested without a process.
//!
//! Exit codes: 0 success (or the conversion output is a Groebner basis),
//! 2 usage or precondition error, 3 the conversion output is not a Groebner
//! basis for the target order.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::buchberger::{reduced_groebner_basis_with, PairStrategy};
use crate::error::{Error, Result};
use crate::hkconvert::{
    hk_convert, ConversionResult, ConversionStatus, ConvertOptions, SourceHandling,
};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::system::{OrderSelector, SystemFile};
use crate::verify::{is_groebner_basis, GbVerdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_GB: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Conversion flags shared by `convert`, `sweep` and `scenario`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvertFlags {
    pub strategy: PairStrategy,
    pub trace: bool,
    pub autocomplete_source: bool,
    pub max_iter: usize,
}

impl Default for ConvertFlags {
    fn default() -> Self {
        ConvertFlags {
            strategy: PairStrategy::MinLcmFirst,
            trace: false,
            autocomplete_source: false,
            max_iter: 100,
        }
    }
}

impl ConvertFlags {
    fn options(&self) -> ConvertOptions {
        ConvertOptions {
            strategy: self.strategy.clone(),
            max_iter: self.max_iter,
            source: if self.autocomplete_source {
                SourceHandling::Autocomplete
            } else {
                SourceHandling::Verify
            },
            ..ConvertOptions::default()
        }
    }
}

/// Sorts descending by leading monomial.
fn descending(basis: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut v = basis.to_vec();
    v.sort_by(|a, b| crate::reduction::ascending_by_leading(order, b, a));
    v
}

fn join(basis: &[Polynomial], order: &MonomialOrder) -> String {
    basis
        .iter()
        .map(|f| f.display(order).to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// `Groebner basis: yes`, or the failing pair (1-based) and its remainder.
pub fn format_verdict(v: &GbVerdict, order: &MonomialOrder) -> String {
    match &v.witness {
        None => "Groebner basis: yes".to_string(),
        Some(w) => format!(
            "NOT a Groebner basis; witness pair ({},{}), remainder {}",
            w.i + 1,
            w.j + 1,
            w.remainder.display(order)
        ),
    }
}

/// Prints the reduced Groebner basis, elements by descending leading
/// monomial, terms descending.
pub fn cmd_gb(sys: &SystemFile, which: OrderSelector, strategy: &PairStrategy) -> Result<Outcome> {
    let order = sys.order(which);
    let gb = reduced_groebner_basis_with(&sys.generators, order, strategy)?;
    Ok(Outcome {
        stdout: format!("{}\n", join(&descending(&gb, order), order)),
        code: EXIT_OK,
    })
}

pub fn run_conversion(sys: &SystemFile, flags: &ConvertFlags) -> Result<ConversionResult> {
    hk_convert(&sys.generators, &sys.order1, &sys.order2, &flags.options())
}

/// Runs the conversion and checks its output under `order2`.
pub fn cmd_convert(sys: &SystemFile, flags: &ConvertFlags) -> Result<Outcome> {
    let res = run_conversion(sys, flags)?;
    let o2 = &sys.order2;
    let mut out = String::new();
    if flags.trace {
        out.push_str(&res.trace.to_text());
    }
    let status = match res.trace.status {
        ConversionStatus::Fixpoint => "fixpoint",
        ConversionStatus::IterationCap => "iteration cap",
    };
    let _ = writeln!(out, "strategy: {}", flags.strategy);
    let _ = writeln!(
        out,
        "status: {status} after {} iterations",
        res.trace.iterations.len()
    );
    let _ = writeln!(out, "output: {}", join(&res.output, o2));
    let _ = writeln!(out, "verdict: {}", format_verdict(&res.is_target_gb, o2));
    Ok(Outcome {
        stdout: out,
        code: if res.is_target_gb.is_gb {
            EXIT_OK
        } else {
            EXIT_NOT_GB
        },
    })
}

/// Checks a basis given as text against one of the system's orders.
pub fn cmd_verify(sys: &SystemFile, basis_text: &str, which: OrderSelector) -> Result<Outcome> {
    let basis = sys.parse_basis(basis_text)?;
    if basis.is_empty() {
        return Err(Error::EmptyInput);
    }
    let order = sys.order(which);
    let v = is_groebner_basis(&basis, order)?;
    Ok(Outcome {
        stdout: format!("{}\n", format_verdict(&v, order)),
        code: EXIT_OK,
    })
}

/// One run of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRun {
    pub strategy: PairStrategy,
    /// `Ok(true)` when the output is a Groebner basis for `order2`.
    pub correct: std::result::Result<bool, String>,
}

/// Strategies tried by a sweep: min-lcm, FIFO, then `budget` random seeds.
pub fn sweep_strategies(budget: usize) -> Vec<PairStrategy> {
    let mut v = vec![PairStrategy::MinLcmFirst, PairStrategy::Fifo];
    v.extend((0..budget as u64).map(PairStrategy::SeededRandom));
    v
}

pub fn run_sweep(sys: &SystemFile, budget: usize, flags: &ConvertFlags) -> Result<Vec<SweepRun>> {
    if budget == 0 {
        return Err(Error::InvalidStrategy(
            "sweep budget must be at least 1".into(),
        ));
    }
    Ok(sweep_strategies(budget)
        .into_par_iter()
        .map(|strategy| {
            let flags = ConvertFlags {
                strategy: strategy.clone(),
                trace: false,
                ..flags.clone()
            };
            let correct = run_conversion(sys, &flags)
                .map(|r| r.is_target_gb.is_gb)
                .map_err(|e| e.to_string());
            SweepRun { strategy, correct }
        })
        .collect())
}

/// Exit 0 when at least one run produced a Groebner basis, 3 otherwise.
pub fn cmd_sweep(sys: &SystemFile, budget: usize, flags: &ConvertFlags) -> Result<Outcome> {
    let runs = run_sweep(sys, budget, flags)?;
    let mut out = String::new();
    let mut good = 0;
    for run in &runs {
        let verdict = match &run.correct {
            Ok(true) => {
                good += 1;
                "Groebner basis".to_string()
            }
            Ok(false) => "NOT a Groebner basis".to_string(),
            Err(e) => format!("error: {e}"),
        };
        let _ = writeln!(out, "{}: {verdict}", run.strategy);
    }
    let _ = writeln!(out, "correct: {good}/{}", runs.len());
    Ok(Outcome {
        stdout: out,
        code: if good > 0 { EXIT_OK } else { EXIT_NOT_GB },
    })
}
