//! Truncation-based Groebner basis conversion, with the tools needed to show
//! where it goes wrong.
//!
//! The crate provides exact arithmetic over GF(2) and Q ([`field`]), sparse
//! polynomials and monomial orders ([`polyring`]), multivariate division
//! ([`reduction`]), Buchberger's algorithm with recorded Groebner
//! coefficients ([`buchberger`]), the conversion loop itself ([`hkconvert`])
//! and an independent checker ([`verify`]).
//!
//! ```
//! use truncgb::prelude::*;
//!
//! let ring = Ring::new(Field::Gf2, ["x", "y", "z"]).unwrap();
//! let g = vec![
//!     parse_polynomial(&ring, "y^2 + x*z + x").unwrap(),
//!     parse_polynomial(&ring, "z^2 + 1").unwrap(),
//! ];
//! let (o1, o2) = (MonomialOrder::degrevlex(3), MonomialOrder::lex(3));
//! let res = hk_convert(&g, &o1, &o2, &ConvertOptions::default()).unwrap();
//! assert!(!res.is_target_gb.is_gb);
//! ```

pub mod buchberger;
pub mod cli;
pub mod error;
pub mod field;
pub mod hkconvert;
pub mod polyring;
pub mod reduction;
pub mod scenario;
pub mod system;
pub mod verify;

#[cfg(doctest)]
mod book;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::buchberger::{
        buchberger, extended_buchberger, reduced_groebner_basis, CofactorRow, PairSelector,
        PairStrategy,
    };
    pub use crate::error::{Error, Result};
    pub use crate::field::{Coeff, Field};
    pub use crate::hkconvert::{hk_convert, lift, truncate_set, ConvertOptions, SourceHandling};
    pub use crate::polyring::{
        parse_polynomial, s_polynomial, truncate, Monomial, MonomialOrder, OrderKind, Polynomial,
        Ring,
    };
    pub use crate::reduction::{divide, interreduce, normal_form};
    pub use crate::scenario::ScenarioId;
    pub use crate::system::{parse_system, SystemFile};
    pub use crate::verify::{ideal_member, is_groebner_basis, same_ideal};
}
