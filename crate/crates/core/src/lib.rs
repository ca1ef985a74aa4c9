//! Certified lower bounds on the dimension of any vector space over F2
//! into which Alt(F2^n) or Sym(F2^n) — the group generated by a block
//! cipher's round functions — can be linearly embedded.
//!
//! Two independent proof engines produce the bounds:
//!
//! * **Counting** ([`factorial_bounds`]): `|G|` must fit inside
//!   `|GL(W)| < 2^(dim W)^2`, with certified lower bounds on
//!   `log2(2^n!)` from either an elementary telescoping argument or the
//!   finite Stirling inequality.
//! * **Element orders** ([`element_orders`]): Alt(F2^n) contains an
//!   even-order element whose order exceeds what any even-order element of
//!   `GL(N, 2)` can reach (`2^(N-1) - 2`), forcing N upward.
//!
//! Both engines work in exact arithmetic ([`exactmath`]): arbitrary
//! precision integers plus dyadic-endpoint intervals with outward
//! rounding, so a reported "dimension m is impossible" is always backed by
//! a strict comparison of non-overlapping enclosures. Brute-force
//! [`oracles`] (exhaustive GL(N,2) enumeration, constrained partition
//! maxima, exact factorials) validate the engines at desk scale, and
//! [`verify`] packages those cross-checks into a suite with named
//! pass/fail results. [`report`] assembles per-cipher verdicts.

pub mod element_orders;
pub mod error;
pub mod exactmath;
pub mod factorial_bounds;
pub mod oracles;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use exactmath::{DyadicRational, Log2Interval, Natural};
pub use factorial_bounds::GroupKind;
