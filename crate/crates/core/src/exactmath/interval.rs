use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::dyadic::DyadicRational;
use crate::exactmath::Natural;

/// Default fractional precision for interval endpoints.
pub const DEFAULT_PRECISION: u32 = 128;

/// Hard cap for precision refinement. Every inequality the engines decide
/// has a wide margin; a comparison still inconclusive here is reported as
/// an explicit error instead of looping forever.
pub const MAX_PRECISION: u32 = 4096;

/// Outcome of a certified comparison between two enclosures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Greater,
    /// The enclosures overlap; nothing can be concluded at this precision.
    Inconclusive,
}

/// Certified enclosure `[lo, hi]` of a real number, with dyadic endpoints.
///
/// The name reflects its dominant use: every large quantity in the bound
/// engines is carried as an enclosure of its base-2 logarithm. Derived
/// quantities of those logarithms (square roots, products with ln 2, ...)
/// use the same type. The contract is containment: the true value always
/// lies in `[lo, hi]`, and every operation rounds outward when it cannot
/// be exact.
#[derive(Clone, PartialEq, Eq)]
pub struct Log2Interval {
    lo: DyadicRational,
    hi: DyadicRational,
}

impl Log2Interval {
    pub fn new(lo: DyadicRational, hi: DyadicRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo:?} > {hi:?}");
        Log2Interval { lo, hi }
    }

    pub fn point(v: DyadicRational) -> Self {
        Log2Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn point_u64(v: u64) -> Self {
        Log2Interval::point(DyadicRational::from_u64(v))
    }

    pub fn point_natural(v: &Natural) -> Self {
        Log2Interval::point(DyadicRational::from_natural(v))
    }

    pub fn lo(&self) -> &DyadicRational {
        &self.lo
    }

    pub fn hi(&self) -> &DyadicRational {
        &self.hi
    }

    pub fn width(&self) -> DyadicRational {
        self.hi.sub(&self.lo)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &DyadicRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// True when `other` lies entirely inside `self`.
    pub fn encloses(&self, other: &Log2Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Exact interval sum.
    pub fn add(&self, rhs: &Log2Interval) -> Log2Interval {
        Log2Interval {
            lo: self.lo.add(&rhs.lo),
            hi: self.hi.add(&rhs.hi),
        }
    }

    /// Exact interval difference.
    pub fn sub(&self, rhs: &Log2Interval) -> Log2Interval {
        Log2Interval {
            lo: self.lo.sub(&rhs.hi),
            hi: self.hi.sub(&rhs.lo),
        }
    }

    /// Exact product with a nonnegative integer scalar.
    pub fn mul_scalar(&self, k: &Natural) -> Log2Interval {
        Log2Interval {
            lo: self.lo.mul_natural(k),
            hi: self.hi.mul_natural(k),
        }
    }

    /// Exact scaling by `2^shift`.
    pub fn scale_pow2(&self, shift: i64) -> Log2Interval {
        Log2Interval {
            lo: self.lo.scale_pow2(shift),
            hi: self.hi.scale_pow2(shift),
        }
    }

    /// Exact product of two nonnegative enclosures; domain error when an
    /// operand may be negative (the engines never need signed products).
    pub fn mul_pos(&self, rhs: &Log2Interval) -> Result<Log2Interval> {
        if self.lo.is_negative() || rhs.lo.is_negative() {
            return Err(Error::domain(
                "interval product requires nonnegative operands",
            ));
        }
        Ok(Log2Interval {
            lo: self.lo.mul(&rhs.lo),
            hi: self.hi.mul(&rhs.hi),
        })
    }

    /// Outward-rounded quotient of nonnegative `self` by strictly positive
    /// `rhs`, at `frac_bits` granularity.
    pub fn div_pos(&self, rhs: &Log2Interval, frac_bits: u32) -> Result<Log2Interval> {
        if self.lo.is_negative() {
            return Err(Error::domain(
                "interval quotient requires a nonnegative numerator",
            ));
        }
        if rhs.lo.is_negative() || rhs.lo.is_zero() {
            return Err(Error::domain(
                "interval quotient requires a strictly positive denominator",
            ));
        }
        Ok(Log2Interval {
            lo: self.lo.div_floor(&rhs.hi, frac_bits)?,
            hi: self.hi.div_ceil(&rhs.lo, frac_bits)?,
        })
    }

    /// Outward-rounded square root; domain error when the enclosure admits
    /// negative values.
    pub fn sqrt(&self, frac_bits: u32) -> Result<Log2Interval> {
        if self.lo.is_negative() {
            return Err(Error::domain(
                "interval square root requires a nonnegative lower endpoint",
            ));
        }
        Ok(Log2Interval {
            lo: self.lo.sqrt_floor(frac_bits)?,
            hi: self.hi.sqrt_ceil(frac_bits)?,
        })
    }
}

impl fmt::Debug for Log2Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} (~{}), {} (~{})]",
            self.lo,
            self.lo.to_f64(),
            self.hi,
            self.hi.to_f64()
        )
    }
}

impl fmt::Display for Log2Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Certified three-way comparison. `Less`/`Greater` are strict statements
/// about the enclosed values; overlap (including point equality) is
/// `Inconclusive` and never treated as a verdict.
pub fn compare(a: &Log2Interval, b: &Log2Interval) -> Comparison {
    if a.hi < b.lo {
        Comparison::Less
    } else if a.lo > b.hi {
        Comparison::Greater
    } else {
        Comparison::Inconclusive
    }
}

/// One-sided certified strictness: `Some(true)` when `lhs > rhs` holds for
/// the enclosed values, `Some(false)` when `lhs <= rhs` is certain (so no
/// precision will ever certify the strict exceedance), `None` when the
/// enclosures overlap without settling it.
pub fn certified_strictly_greater(lhs: &Log2Interval, rhs: &Log2Interval) -> Option<bool> {
    if lhs.lo > rhs.hi {
        Some(true)
    } else if lhs.hi <= rhs.lo {
        Some(false)
    } else {
        None
    }
}

/// Runs `attempt` at doubling precision until it yields a decision,
/// starting from `start_bits` and giving up past [`MAX_PRECISION`].
///
/// `attempt` returns `Ok(None)` for "inconclusive at this precision".
pub fn refine_to_decision<T>(
    start_bits: u32,
    context: &str,
    mut attempt: impl FnMut(u32) -> Result<Option<T>>,
) -> Result<T> {
    let mut bits = start_bits.clamp(1, MAX_PRECISION);
    loop {
        if let Some(decision) = attempt(bits)? {
            return Ok(decision);
        }
        if bits >= MAX_PRECISION {
            return Err(Error::Inconclusive {
                context: context.to_string(),
                max_bits: MAX_PRECISION,
            });
        }
        bits = bits.saturating_mul(2).min(MAX_PRECISION);
    }
}
