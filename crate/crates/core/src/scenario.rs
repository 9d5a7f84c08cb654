//! Built-in systems: the small GF(2) counterexample, its reordered schedule
//! that happens to succeed, and the larger four-variable counterexample over
//! GF(2) and Q.

use std::fmt;
use std::str::FromStr;

use crate::buchberger::PairStrategy;
use crate::error::{Error, Result};
use crate::system::{parse_system, SystemFile};

pub const EX1_SYSTEM: &str = "\
field gf2;
vars x y z;
order1 degrevlex;
order2 lex;
gens: y^2 + x*z + x, z^2 + 1;
";

/// Processes S(h1,h3) before S(h1,h2) in the second iteration; min-lcm
/// afterwards. The first three picks replay iteration one.
pub const EX1_ALT_SCHEDULE: &str = "schedule:1-2,1-3,2-3,1-3,1-2,*";

const EX4_GENS: &str = "\
gens: x1^3*x2^5*x3 + x1^3*x3,
      x1^7*x2 + x1^3 + x2*x3*x4,
      x1^7*x3 - x1^3*x2^4*x3 - x2^5*x3^2*x4,
      x2^6*x3 + x2*x3,
      x4^3 + x1;
";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioId {
    Ex1,
    Ex1Alt,
    Ex4F2,
    Ex4Q,
}

impl ScenarioId {
    pub const ALL: [ScenarioId; 4] = [
        ScenarioId::Ex1,
        ScenarioId::Ex1Alt,
        ScenarioId::Ex4F2,
        ScenarioId::Ex4Q,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioId::Ex1 => "ex1",
            ScenarioId::Ex1Alt => "ex1-alt",
            ScenarioId::Ex4F2 => "ex4-f2",
            ScenarioId::Ex4Q => "ex4-q",
        }
    }

    pub fn system_text(self) -> String {
        match self {
            ScenarioId::Ex1 | ScenarioId::Ex1Alt => EX1_SYSTEM.to_string(),
            ScenarioId::Ex4F2 | ScenarioId::Ex4Q => {
                let field = if self == ScenarioId::Ex4F2 {
                    "gf2"
                } else {
                    "q"
                };
                format!(
                    "field {field};\nvars x1 x2 x3 x4;\norder1 degrevlex;\norder2 lex;\n{EX4_GENS}"
                )
            }
        }
    }

    pub fn system(self) -> SystemFile {
        parse_system(&self.system_text()).expect("built-in scenario parses")
    }

    pub fn strategy(self) -> PairStrategy {
        match self {
            ScenarioId::Ex1Alt => EX1_ALT_SCHEDULE.parse().expect("valid schedule"),
            _ => PairStrategy::MinLcmFirst,
        }
    }

    /// Whether the generators must first be completed to a Groebner basis
    /// for the source order. Every built-in system already is one.
    pub fn autocomplete_source(self) -> bool {
        false
    }
}

impl fmt::Display for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScenarioId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidStrategy(format!("unknown scenario `{s}`")))
    }
}
