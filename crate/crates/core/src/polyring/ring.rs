use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

/// A polynomial ring `K[x_0, ..., x_{n-1}]`: coefficient field plus an ordered
/// list of variable names. By convention index 0 is listed first in files and
/// is the greatest variable of an order with the identity ranking.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: Field,
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(
        field: Field,
        vars: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Ring>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!(
                    "`{v}` is not a valid variable name"
                )));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Ring { field, vars }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
