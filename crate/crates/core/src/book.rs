//! The guide in `book/`, compiled so that its snippets run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/orders.md")]
pub mod orders {}
#[doc = include_str!("../../../book/src/buchberger.md")]
pub mod buchberger {}
#[doc = include_str!("../../../book/src/conversion.md")]
pub mod conversion {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
