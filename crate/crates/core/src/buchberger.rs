//! Buchberger's algorithm with pluggable S-pair selection, the extended
//! variant that records Groebner coefficients (cofactor rows) for every
//! appended element, and reduced Groebner bases.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polyring::{s_polynomial_parts, Monomial, MonomialOrder, Polynomial};
use crate::reduction::{divide, interreduce};

/// How the next critical pair is chosen from the pending queue.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub enum PairStrategy {
    /// Smallest lcm under the working order; ties by smallest `(i, j)`.
    #[default]
    MinLcmFirst,
    /// Oldest pending pair.
    Fifo,
    /// Follow a list of picks (0-based index pairs, `i < j`). With
    /// `fallback`, continue with [`PairStrategy::MinLcmFirst`] once the list
    /// runs out; otherwise running out is an error.
    ExplicitSchedule {
        picks: Vec<(usize, usize)>,
        fallback: bool,
    },
    /// Uniform choice driven by a seeded ChaCha8 generator.
    SeededRandom(u64),
}

impl fmt::Display for PairStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairStrategy::MinLcmFirst => f.write_str("minlcm"),
            PairStrategy::Fifo => f.write_str("fifo"),
            PairStrategy::SeededRandom(seed) => write!(f, "random:{seed}"),
            PairStrategy::ExplicitSchedule { picks, fallback } => {
                f.write_str("schedule:")?;
                let mut parts: Vec<String> = picks
                    .iter()
                    .map(|(i, j)| format!("{}-{}", i + 1, j + 1))
                    .collect();
                if *fallback {
                    parts.push("*".into());
                }
                f.write_str(&parts.join(","))
            }
        }
    }
}

impl FromStr for PairStrategy {
    type Err = Error;

    /// `minlcm | fifo | schedule:<i-j,...[,*]> | random:<seed>`; schedule
    /// indices are 1-based.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidStrategy(format!("`{s}`: {why}"));
        match s {
            "minlcm" => return Ok(PairStrategy::MinLcmFirst),
            "fifo" => return Ok(PairStrategy::Fifo),
            _ => {}
        }
        if let Some(seed) = s.strip_prefix("random:") {
            return seed
                .trim()
                .parse()
                .map(PairStrategy::SeededRandom)
                .map_err(|_| bad("seed must be an unsigned integer"));
        }
        if let Some(list) = s.strip_prefix("schedule:") {
            let mut picks = Vec::new();
            let mut fallback = false;
            let entries: Vec<&str> = list
                .split(',')
                .map(str::trim)
                .filter(|e| !e.is_empty())
                .collect();
            for (n, entry) in entries.iter().enumerate() {
                if *entry == "*" {
                    if n + 1 != entries.len() {
                        return Err(bad("`*` must be the last entry"));
                    }
                    fallback = true;
                    continue;
                }
                let (a, b) = entry
                    .split_once('-')
                    .ok_or_else(|| bad("entries look like `i-j`"))?;
                let (a, b): (usize, usize) = (
                    a.trim().parse().map_err(|_| bad("bad index"))?,
                    b.trim().parse().map_err(|_| bad("bad index"))?,
                );
                if a == 0 || b == 0 || a == b {
                    return Err(bad("indices are 1-based and distinct"));
                }
                picks.push((a.min(b) - 1, a.max(b) - 1));
            }
            return Ok(PairStrategy::ExplicitSchedule { picks, fallback });
        }
        Err(bad(
            "expected minlcm, fifo, schedule:<list> or random:<seed>",
        ))
    }
}

/// A pending critical pair, `i < j` indexing the working basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
}

/// Stateful pair chooser built from a [`PairStrategy`]. One selector spans a
/// whole run (including several Buchberger calls inside one conversion), so
/// schedules and random streams continue where they left off.
#[derive(Debug, Clone)]
pub struct PairSelector {
    strategy: PairStrategy,
    cursor: usize,
    rng: Option<ChaCha8Rng>,
}

impl PairSelector {
    pub fn new(strategy: &PairStrategy) -> Self {
        let rng = match strategy {
            PairStrategy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
            _ => None,
        };
        PairSelector {
            strategy: strategy.clone(),
            cursor: 0,
            rng,
        }
    }

    pub fn strategy(&self) -> &PairStrategy {
        &self.strategy
    }

    /// Index into `queue` of the pair to process next.
    pub fn next_pair(&mut self, queue: &[Pair], order: &MonomialOrder) -> Result<usize> {
        if queue.is_empty() {
            return Err(Error::EmptyInput);
        }
        match &self.strategy {
            PairStrategy::MinLcmFirst => Ok(min_lcm_index(queue, order)),
            PairStrategy::Fifo => Ok(0),
            PairStrategy::SeededRandom(_) => {
                let rng = self.rng.as_mut().expect("seeded");
                Ok(rng.random_range(0..queue.len()))
            }
            PairStrategy::ExplicitSchedule { picks, fallback } => match picks.get(self.cursor) {
                Some(&(i, j)) => {
                    let idx = queue
                        .iter()
                        .position(|p| p.i == i && p.j == j)
                        .ok_or(Error::InvalidSchedulePick(i + 1, j + 1))?;
                    self.cursor += 1;
                    Ok(idx)
                }
                None if *fallback => Ok(min_lcm_index(queue, order)),
                None => Err(Error::ScheduleExhausted(self.cursor)),
            },
        }
    }
}

fn min_lcm_index(queue: &[Pair], order: &MonomialOrder) -> usize {
    let mut best = 0;
    for (k, p) in queue.iter().enumerate().skip(1) {
        let b = &queue[best];
        let better = match order.cmp(&p.lcm, &b.lcm) {
            Ordering::Less => true,
            Ordering::Equal => (p.i, p.j) < (b.i, b.j),
            Ordering::Greater => false,
        };
        if better {
            best = k;
        }
    }
    best
}

/// One-shot form of [`PairSelector::next_pair`].
pub fn next_pair(queue: &[Pair], order: &MonomialOrder, strategy: &PairStrategy) -> Result<usize> {
    PairSelector::new(strategy).next_pair(queue, order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip pairs with coprime leading monomials. Never used by the extended
    /// variant.
    pub product_criterion: bool,
    /// Maximum number of processed pairs before giving up.
    pub max_pairs: usize,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            product_criterion: false,
            max_pairs: 100_000,
        }
    }
}

/// Groebner coefficients of an appended element over the working basis as it
/// was when the element was recorded. Missing trailing entries read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofactorRow {
    pub coefficients: Vec<Polynomial>,
}

impl CofactorRow {
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `sum(row[i] * reference[i])`.
    pub fn dot(&self, reference: &[Polynomial]) -> Result<Polynomial> {
        let first = reference.first().ok_or(Error::EmptyInput)?;
        if self.len() > reference.len() {
            return Err(Error::RowTooLong {
                row: 0,
                len: self.len(),
                available: reference.len(),
            });
        }
        let mut acc = Polynomial::zero(first.ring());
        for (c, b) in self.coefficients.iter().zip(reference) {
            acc = acc.try_add(&c.try_mul(b)?)?;
        }
        Ok(acc)
    }
}

/// What happened to one processed pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEvent {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
    pub s_polynomial: Polynomial,
    /// Index of the appended element, `None` when the S-polynomial reduced to
    /// zero.
    pub appended: Option<usize>,
}

impl PairEvent {
    pub fn reduced_to_zero(&self) -> bool {
        self.appended.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedBasisResult {
    /// Inputs first, then appended elements in creation order.
    pub basis: Vec<Polynomial>,
    /// `rows[k]` belongs to `basis[inputs + k]`.
    pub rows: Vec<CofactorRow>,
    pub pair_log: Vec<PairEvent>,
    pub inputs: usize,
}

impl ExtendedBasisResult {
    pub fn appended(&self) -> &[Polynomial] {
        &self.basis[self.inputs..]
    }
}

fn initial_pairs(basis: &[Polynomial], order: &MonomialOrder) -> Vec<Pair> {
    let mut queue = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, basis, i, j, order);
        }
    }
    queue.sort_by_key(|p| (p.i, p.j));
    queue
}

fn push_pair(
    queue: &mut Vec<Pair>,
    basis: &[Polynomial],
    i: usize,
    j: usize,
    order: &MonomialOrder,
) {
    if let (Some((a, _)), Some((b, _))) = (basis[i].leading(order), basis[j].leading(order)) {
        queue.push(Pair {
            i,
            j,
            lcm: a.lcm(b),
        });
    }
}

fn run(
    inputs: Vec<Polynomial>,
    order: &MonomialOrder,
    selector: &mut PairSelector,
    options: BuchbergerOptions,
    track: bool,
) -> Result<ExtendedBasisResult> {
    let ring = match inputs.iter().find(|f| !f.is_zero()) {
        Some(f) => f.ring().clone(),
        None => return Err(Error::EmptyInput),
    };
    if inputs.iter().any(|f| f.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    let n_inputs = inputs.len();
    let mut basis = inputs;
    let mut rows = Vec::new();
    let mut log = Vec::new();
    let mut queue = initial_pairs(&basis, order);
    let mut processed = 0usize;

    while !queue.is_empty() {
        let idx = selector.next_pair(&queue, order)?;
        let pair = queue.remove(idx);
        processed += 1;
        if processed > options.max_pairs {
            return Err(Error::PairLimit(options.max_pairs));
        }
        let (bi, bj) = (&basis[pair.i], &basis[pair.j]);
        if options.product_criterion
            && bi
                .leading_monomial(order)?
                .is_coprime(bj.leading_monomial(order)?)
        {
            continue;
        }
        let parts = s_polynomial_parts(bi, bj, order)?;
        let s = bi
            .term_mul(&parts.left)?
            .try_sub(&bj.term_mul(&parts.right)?)?;
        let division = divide(&s, &basis, order)?;
        let remainder = division.remainder;
        if remainder.is_zero() {
            log.push(PairEvent {
                i: pair.i,
                j: pair.j,
                lcm: pair.lcm,
                s_polynomial: s,
                appended: None,
            });
            continue;
        }
        let lc_inv = remainder.leading(order).expect("nonzero").1.inv()?;
        let element = remainder.scale(&lc_inv);
        if track {
            // element = (left*b_i - right*b_j - sum q_k b_k) / lc
            let mut coefficients: Vec<Polynomial> = division.quotients.iter().map(|q| -q).collect();
            coefficients[pair.i] = &coefficients[pair.i]
                + &Polynomial::term(&ring, parts.left.coeff.clone(), parts.left.monomial.clone());
            coefficients[pair.j] = &coefficients[pair.j]
                - &Polynomial::term(
                    &ring,
                    parts.right.coeff.clone(),
                    parts.right.monomial.clone(),
                );
            let row = CofactorRow {
                coefficients: coefficients.iter().map(|c| c.scale(&lc_inv)).collect(),
            };
            #[cfg(test)]
            assert_eq!(row.dot(&basis).unwrap(), element, "cofactor identity");
            rows.push(row);
        }
        let new = basis.len();
        log.push(PairEvent {
            i: pair.i,
            j: pair.j,
            lcm: pair.lcm,
            s_polynomial: s,
            appended: Some(new),
        });
        basis.push(element);
        for k in 0..new {
            push_pair(&mut queue, &basis, k, new, order);
        }
    }

    Ok(ExtendedBasisResult {
        basis,
        rows,
        pair_log: log,
        inputs: n_inputs,
    })
}

/// Plain Buchberger. Zero inputs are dropped; the output starts with the
/// remaining inputs in their given order.
pub fn buchberger(
    generators: &[Polynomial],
    order: &MonomialOrder,
    strategy: &PairStrategy,
) -> Result<Vec<Polynomial>> {
    buchberger_with(
        generators,
        order,
        &mut PairSelector::new(strategy),
        BuchbergerOptions::default(),
    )
}

pub fn buchberger_with(
    generators: &[Polynomial],
    order: &MonomialOrder,
    selector: &mut PairSelector,
    options: BuchbergerOptions,
) -> Result<Vec<Polynomial>> {
    let inputs: Vec<Polynomial> = generators
        .iter()
        .filter(|f| !f.is_zero())
        .cloned()
        .collect();
    Ok(run(inputs, order, selector, options, false)?.basis)
}

/// Buchberger without criteria, recording a cofactor row for every appended
/// element. Pairs whose S-polynomial reduces to zero are logged and produce no
/// row. Zero inputs keep their slot (so rows stay aligned) but form no pairs.
pub fn extended_buchberger(
    generators: &[Polynomial],
    order: &MonomialOrder,
    selector: &mut PairSelector,
    max_pairs: usize,
) -> Result<ExtendedBasisResult> {
    let options = BuchbergerOptions {
        product_criterion: false,
        max_pairs,
    };
    run(generators.to_vec(), order, selector, options, true)
}

/// The reduced Groebner basis of the ideal generated by `generators`,
/// sorted ascending by leading monomial.
pub fn reduced_groebner_basis(
    generators: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Vec<Polynomial>> {
    reduced_groebner_basis_with(generators, order, &PairStrategy::MinLcmFirst)
}

pub fn reduced_groebner_basis_with(
    generators: &[Polynomial],
    order: &MonomialOrder,
    strategy: &PairStrategy,
) -> Result<Vec<Polynomial>> {
    let options = BuchbergerOptions {
        product_criterion: true,
        ..BuchbergerOptions::default()
    };
    let gb = buchberger_with(generators, order, &mut PairSelector::new(strategy), options)?;
    Ok(interreduce(&gb, order))
}
