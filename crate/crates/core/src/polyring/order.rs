use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

use super::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "degrevlex" => Ok(OrderKind::DegRevLex),
            other => Err(Error::InvalidOrder(format!("unknown order `{other}`"))),
        }
    }
}

/// A monomial order: lex or degrevlex over a ranking of the variables.
///
/// `ranking[0]` is the index of the greatest variable, `ranking[n-1]` the
/// least. Degrevlex compares total degree first; on a tie the monomial with
/// the larger exponent in the least variable (scanning from the least
/// variable upwards) is the smaller one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
}

/// Sort key whose lexicographic order agrees with a [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderKey(Vec<i64>);

impl MonomialOrder {
    pub fn new(kind: OrderKind, ranking: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ranking.len()];
        for &v in &ranking {
            if v >= ranking.len() || seen[v] {
                return Err(Error::InvalidOrder(format!(
                    "ranking {ranking:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        if ranking.is_empty() {
            return Err(Error::InvalidOrder("empty ranking".into()));
        }
        Ok(MonomialOrder { kind, ranking })
    }

    /// Order with the identity ranking (variable 0 greatest).
    pub fn with_identity(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            ranking: (0..nvars).collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::with_identity(OrderKind::Lex, nvars)
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::with_identity(OrderKind::DegRevLex, nvars)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_identity_ranking(&self) -> bool {
        self.ranking.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Checked comparison; fails when either monomial has the wrong arity.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(Error::ArityMismatch {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison for monomials already known to match the order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.ranking {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => {}
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for &v in self.ranking.iter().rev() {
                    match eb[v].cmp(&ea[v]) {
                        Ordering::Equal => {}
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn key(&self, m: &Monomial) -> OrderKey {
        let e = m.exponents();
        match self.kind {
            OrderKind::Lex => OrderKey(self.ranking.iter().map(|&v| i64::from(e[v])).collect()),
            OrderKind::DegRevLex => {
                let mut key = Vec::with_capacity(self.ranking.len() + 1);
                key.push(m.degree() as i64);
                key.extend(self.ranking.iter().rev().map(|&v| -i64::from(e[v])));
                OrderKey(key)
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// Text form used in system files, e.g. `lex` or `degrevlex z y x`.
    pub fn statement_text(&self, vars: &[String]) -> String {
        let mut s = self.kind.name().to_string();
        if !self.is_identity_ranking() {
            for &v in &self.ranking {
                s.push(' ');
                s.push_str(&vars[v]);
            }
        }
        s
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        if !self.is_identity_ranking() {
            write!(f, "{:?}", self.ranking)?;
        }
        Ok(())
    }
}
