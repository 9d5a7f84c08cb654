//! Polynomial-system files.
//!
//! ```text
//! field (gf2|q) ;
//! vars <name>+ ;                      # greatest variable first
//! order1 (lex|degrevlex) [<perm>] ;
//! order2 (lex|degrevlex) [<perm>] ;
//! gens: <poly> (, <poly>)* ;
//! ```
//!
//! `<perm>` optionally lists every variable, greatest first, to rank them
//! differently from the `vars` line. `#` starts a comment. The final `;` may
//! be omitted.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{
    is_identifier, parse_span, position, MonomialOrder, OrderKind, Polynomial, Ring,
};

/// A fully resolved polynomial system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemFile {
    pub ring: Arc<Ring>,
    pub order1: MonomialOrder,
    pub order2: MonomialOrder,
    pub generators: Vec<Polynomial>,
}

/// Picks one of the two orders of a system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderSelector {
    Order1,
    Order2,
}

impl std::str::FromStr for OrderSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "order1" | "1" | "source" => Ok(OrderSelector::Order1),
            "order2" | "2" | "target" => Ok(OrderSelector::Order2),
            other => Err(Error::InvalidOrder(format!(
                "unknown order selector `{other}`"
            ))),
        }
    }
}

impl SystemFile {
    pub fn order(&self, which: OrderSelector) -> &MonomialOrder {
        match which {
            OrderSelector::Order1 => &self.order1,
            OrderSelector::Order2 => &self.order2,
        }
    }

    /// Parses a comma- or semicolon-separated list of polynomials over this
    /// system's ring.
    pub fn parse_basis(&self, text: &str) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        for (start, end) in split_spans(text, 0, text.len(), &[',', ';']) {
            if text[start..end].trim().is_empty() {
                continue;
            }
            out.push(parse_span(&self.ring, text, start..end)?);
        }
        Ok(out)
    }
}

fn err_at(text: &str, offset: usize, message: impl Into<String>) -> Error {
    let (line, column) = position(text, offset);
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Spans of `text[start..end]` between separator characters.
fn split_spans(text: &str, start: usize, end: usize, seps: &[char]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut from = start;
    for (i, c) in text[start..end].char_indices() {
        if seps.contains(&c) {
            out.push((from, start + i));
            from = start + i + c.len_utf8();
        }
    }
    out.push((from, end));
    out
}

/// Whitespace-separated words of a span, with byte offsets.
fn words(text: &str, start: usize, end: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let slice = &text[start..end];
    let mut word_start = None;
    for (i, c) in slice.char_indices() {
        let boundary = c.is_whitespace() || c == '[' || c == ']';
        match (boundary, word_start) {
            (false, None) => word_start = Some(i),
            (true, Some(s)) => {
                out.push((start + s, &slice[s..i]));
                word_start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = word_start {
        out.push((start + s, &slice[s..]));
    }
    out
}

/// Keyword offset, kind and ranking words with their offsets.
type OrderStatement = (usize, OrderKind, Vec<(usize, String)>);

/// Parses a system file; positions in errors are 1-based line/column.
pub fn parse_system(input: &str) -> Result<SystemFile> {
    // Comments become spaces so offsets stay valid.
    let text: String = input
        .lines()
        .map(|l| match l.find('#') {
            Some(i) => format!("{}{}", &l[..i], " ".repeat(l.len() - i)),
            None => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n");
    let text = text.as_str();

    let mut field: Option<Field> = None;
    let mut vars: Option<(usize, Vec<String>)> = None;
    let mut orders: [Option<OrderStatement>; 2] = [None, None];
    let mut gens: Option<(usize, usize, usize)> = None;

    for (start, end) in split_spans(text, 0, text.len(), &[';']) {
        let ws = words(text, start, end);
        let Some(&(kw_at, keyword)) = ws.first() else {
            continue;
        };
        let (keyword, gens_colon) = match keyword.strip_suffix(':') {
            Some(k) => (k, true),
            None => (keyword, false),
        };
        let duplicate = || err_at(text, kw_at, format!("duplicate `{keyword}` statement"));
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(duplicate());
                }
                let [(at, tag)] = ws[1..] else {
                    return Err(err_at(text, kw_at, "expected `field gf2` or `field q`"));
                };
                field = Some(
                    tag.parse()
                        .map_err(|_| err_at(text, at, format!("unknown field tag `{tag}`")))?,
                );
            }
            "vars" => {
                if vars.is_some() {
                    return Err(duplicate());
                }
                let mut names: Vec<String> = Vec::new();
                for &(at, name) in &ws[1..] {
                    if !is_identifier(name) {
                        return Err(err_at(text, at, format!("invalid variable name `{name}`")));
                    }
                    if names.iter().any(|n| n == name) {
                        return Err(err_at(text, at, format!("duplicate variable `{name}`")));
                    }
                    names.push(name.to_string());
                }
                if names.is_empty() {
                    return Err(err_at(text, kw_at, "expected at least one variable"));
                }
                vars = Some((kw_at, names));
            }
            "order1" | "order2" => {
                let slot = usize::from(keyword == "order2");
                if orders[slot].is_some() {
                    return Err(duplicate());
                }
                let Some(&(at, kind)) = ws.get(1) else {
                    return Err(err_at(text, kw_at, "expected `lex` or `degrevlex`"));
                };
                let kind: OrderKind = kind
                    .parse()
                    .map_err(|_| err_at(text, at, format!("unknown order `{kind}`")))?;
                let perm = ws[2..].iter().map(|&(a, n)| (a, n.to_string())).collect();
                orders[slot] = Some((kw_at, kind, perm));
            }
            "gens" => {
                if gens.is_some() {
                    return Err(duplicate());
                }
                let body = kw_at + "gens".len() + usize::from(gens_colon);
                let body = if !gens_colon && text[body..end].trim_start().starts_with(':') {
                    body + text[body..end].find(':').expect("colon") + 1
                } else {
                    body
                };
                gens = Some((kw_at, body, end));
            }
            other => {
                return Err(err_at(text, kw_at, format!("unknown statement `{other}`")));
            }
        }
    }

    let end = text.len();
    let field = field.ok_or_else(|| err_at(text, end, "missing `field` statement"))?;
    let (vars_at, names) = vars.ok_or_else(|| err_at(text, end, "missing `vars` statement"))?;
    let ring = Ring::new(field, names).map_err(|e| err_at(text, vars_at, e.to_string()))?;

    let mut built = Vec::with_capacity(2);
    for (slot, o) in orders.into_iter().enumerate() {
        let (at, kind, perm) =
            o.ok_or_else(|| err_at(text, end, format!("missing `order{}` statement", slot + 1)))?;
        let order = if perm.is_empty() {
            MonomialOrder::with_identity(kind, ring.nvars())
        } else {
            let mut ranking = Vec::with_capacity(perm.len());
            for (a, name) in &perm {
                let idx = ring
                    .var_index(name)
                    .ok_or_else(|| err_at(text, *a, format!("unknown variable `{name}`")))?;
                ranking.push(idx);
            }
            if ranking.len() != ring.nvars() {
                return Err(err_at(
                    text,
                    at,
                    "variable ranking must list every variable once",
                ));
            }
            MonomialOrder::new(kind, ranking).map_err(|e| err_at(text, at, e.to_string()))?
        };
        built.push(order);
    }
    let order2 = built.pop().expect("two orders");
    let order1 = built.pop().expect("two orders");

    let (gens_at, body, body_end) =
        gens.ok_or_else(|| err_at(text, end, "missing `gens:` statement"))?;
    let mut generators = Vec::new();
    for (s, e) in split_spans(text, body, body_end, &[',']) {
        let f = parse_span(&ring, text, s..e)?;
        if f.is_zero() {
            let at = s + text[s..e].len() - text[s..e].trim_start().len();
            return Err(err_at(text, at, "zero generator rejected"));
        }
        generators.push(f);
    }
    if generators.is_empty() {
        return Err(err_at(text, gens_at, "expected at least one generator"));
    }

    Ok(SystemFile {
        ring,
        order1,
        order2,
        generators,
    })
}

impl fmt::Display for SystemFile {
    /// Normalized text; generators are printed in descending `order1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = self.ring.vars();
        writeln!(f, "field {};", self.ring.field())?;
        writeln!(f, "vars {};", vars.join(" "))?;
        writeln!(f, "order1 {};", self.order1.statement_text(vars))?;
        writeln!(f, "order2 {};", self.order2.statement_text(vars))?;
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.display(&self.order1).to_string())
            .collect();
        writeln!(f, "gens: {};", gens.join(", "))
    }
}
