//! Exact naturals and outward-rounded dyadic interval arithmetic.
//!
//! Everything the bound engines compare is either an exact [`Natural`] or
//! a [`Log2Interval`] whose endpoints are exact [`DyadicRational`]s. There
//! is no floating point anywhere on a certified path: operations that
//! cannot be exact (division, square roots, logs, series constants) take a
//! `frac_bits` granularity and round each endpoint away from the interval
//! interior.

mod constants;
mod dyadic;
mod interval;
mod log2;
mod natural;

pub use constants::{ln2_interval, log2_e_interval};
pub use dyadic::DyadicRational;
pub use interval::{
    certified_strictly_greater, compare, refine_to_decision, Comparison, Log2Interval,
    DEFAULT_PRECISION, MAX_PRECISION,
};
pub use log2::log2_of_natural;
pub use natural::{Natural, FACTORIAL_CAP};
