//! Certified base-2 logarithm of an integer.
//!
//! The value is split as `log2(x) = (bits(x) - 1) + log2(y)` with
//! `y = x / 2^(bits(x)-1)` in `[1, 2)`, and the fractional part is produced
//! one bit at a time by repeated squaring: `y` squared lands in `[1, 4)`,
//! and whether it reached 2 is exactly the next bit of `log2(y)`. The
//! iteration runs on an integer *enclosure* of `y` in fixed point with
//! guard bits, both endpoints rounded in their own direction, so every
//! emitted bit is certain. If the enclosure ever straddles the decision
//! boundary the run restarts with more guard bits; for integer inputs the
//! fractional log is never exactly dyadic (only powers of two have dyadic
//! logs, and those take the exact path), so this terminates.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::dyadic::DyadicRational;
use crate::exactmath::interval::Log2Interval;
use crate::exactmath::Natural;

/// Certified enclosure of `log2(x)` with width at most `2^-frac_bits`
/// (a point for powers of two). Domain error for `x = 0`.
pub fn log2_of_natural(x: &Natural, frac_bits: u32) -> Result<Log2Interval> {
    if x.is_zero() {
        return Err(Error::domain("log2 of zero"));
    }
    let frac_bits = frac_bits.max(1);
    let int_part = x.bits() - 1;
    if x.is_power_of_two() {
        return Ok(Log2Interval::point_u64(int_part));
    }

    let mut guard = 32u32;
    loop {
        if let Some(fraction) = fraction_bits(x.as_biguint(), int_part, frac_bits, guard) {
            let lo = DyadicRational::from_u64(int_part).add(&DyadicRational::new(
                BigInt::from(fraction),
                -i64::from(frac_bits),
            ));
            let hi = lo.add(&DyadicRational::new(BigInt::from(1), -i64::from(frac_bits)));
            return Ok(Log2Interval::new(lo, hi));
        }
        guard *= 2;
    }
}

/// Runs the squaring iteration at `frac_bits + guard` fixed-point bits and
/// returns the `frac_bits` leading fraction bits of `log2(x)` as an
/// integer, or `None` when a decision was ambiguous at this guard width.
fn fraction_bits(x: &BigUint, int_part: u64, frac_bits: u32, guard: u32) -> Option<BigUint> {
    let p = u64::from(frac_bits) + u64::from(guard);
    let pu = usize::try_from(p).expect("precision fits usize");
    let two = BigUint::from(1u32) << (pu + 1); // fixed-point representation of 2.0

    // Normalize x to an enclosure of y = x / 2^int_part in [1, 2).
    let (mut lo, mut hi) = if int_part >= p {
        let shift = usize::try_from(int_part - p).expect("shift fits usize");
        let floor = x >> shift;
        let exact = (x & ((BigUint::from(1u32) << shift) - 1u32)).is_zero();
        let hi = if exact { floor.clone() } else { &floor + 1u32 };
        (floor, hi)
    } else {
        let v = x << usize::try_from(p - int_part).expect("shift fits usize");
        (v.clone(), v)
    };

    let mut bits = BigUint::zero();
    for _ in 0..frac_bits {
        lo = (&lo * &lo) >> pu;
        hi = ((&hi * &hi) + ((BigUint::from(1u32) << pu) - 1u32)) >> pu;
        bits <<= 1;
        if hi < two {
            // both endpoints stayed below 2: bit is 0
        } else if lo >= two {
            bits += 1u32;
            lo >>= 1;
            hi = (hi + 1u32) >> 1;
        } else {
            return None;
        }
    }
    Some(bits)
}
