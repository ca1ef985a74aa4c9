//! Certified enclosures of ln 2 and log2(e).
//!
//! ln 2 comes from the series `ln 2 = sum_{k>=1} 1/(k 2^k)` evaluated in
//! integer fixed point with per-term directed rounding; the tail after K
//! terms is positive and below `1/((K+1) 2^K) * 2 <= 2^-K`, which is added
//! to the upper endpoint. log2(e) is the exact reciprocal 1/ln2, computed
//! by outward-rounded interval division.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::exactmath::dyadic::DyadicRational;
use crate::exactmath::interval::Log2Interval;

/// Enclosure of ln 2 = 0.6931471805599453... with width <= 2^(-frac_bits+1).
pub fn ln2_interval(frac_bits: u32) -> Log2Interval {
    let frac_bits = frac_bits.max(1);
    let terms = u64::from(frac_bits) + 2; // tail after K terms is < 2^-K
    let p = u64::from(frac_bits) + 24; // working fixed-point bits

    let mut lo_acc = BigUint::zero();
    let mut hi_acc = BigUint::zero();
    for k in 1..=terms {
        // term * 2^p = 2^(p-k) / k
        let numer = BigUint::from(1u32) << usize::try_from(p - k).expect("p > terms");
        let q = &numer / k;
        let exact = &q * k == numer;
        lo_acc += &q;
        hi_acc += if exact { q } else { q + 1u32 };
    }
    // tail bound: 2^-terms, i.e. 2^(p-terms) at scale 2^p
    hi_acc += BigUint::from(1u32) << usize::try_from(p - terms).expect("p > terms");

    let scale = -i64::try_from(p).expect("p fits i64");
    Log2Interval::new(
        DyadicRational::new(BigInt::from(lo_acc), scale),
        DyadicRational::new(BigInt::from(hi_acc), scale),
    )
}

/// Enclosure of log2(e) = 1/ln2 = 1.4426950408889634...
pub fn log2_e_interval(frac_bits: u32) -> Log2Interval {
    let frac_bits = frac_bits.max(1);
    let ln2 = ln2_interval(frac_bits + 8);
    Log2Interval::point(DyadicRational::one())
        .div_pos(&ln2, frac_bits + 4)
        .expect("ln2 enclosure is strictly positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac_const(hex: &str, frac_bits: u32) -> DyadicRational {
        let m = BigInt::parse_bytes(hex.as_bytes(), 16).expect("valid hex");
        DyadicRational::from_mantissa_frac(m, frac_bits)
    }

    /// Reference brackets at 110 fractional bits from an independent
    /// high-precision series evaluation (mpmath, 120 digits).
    fn ln2_reference() -> (DyadicRational, DyadicRational) {
        (
            frac_const("2c5c85fdf473de6af278ece600fc", 110),
            frac_const("2c5c85fdf473de6af278ece600fd", 110),
        )
    }

    fn log2_e_reference() -> (DyadicRational, DyadicRational) {
        (
            frac_const("5c551d94ae0bf85ddf43ff68348e", 110),
            frac_const("5c551d94ae0bf85ddf43ff68348f", 110),
        )
    }

    #[test]
    fn ln2_contains_reference() {
        let (r_lo, r_hi) = ln2_reference();
        let iv = ln2_interval(64);
        assert!(iv.lo() <= &r_lo);
        assert!(&r_hi <= iv.hi());
        let max_width = DyadicRational::new(BigInt::from(1), -63);
        assert!(iv.width() <= max_width);
    }

    #[test]
    fn log2_e_contains_reference() {
        let (r_lo, r_hi) = log2_e_reference();
        let iv = log2_e_interval(64);
        assert!(iv.lo() <= &r_lo);
        assert!(&r_hi <= iv.hi());
        let max_width = DyadicRational::new(BigInt::from(1), -63);
        assert!(iv.width() <= max_width);
    }

    #[test]
    fn product_of_reciprocals_contains_one() {
        let p = ln2_interval(96).mul_pos(&log2_e_interval(96)).unwrap();
        assert!(p.contains(&DyadicRational::one()));
        // and the enclosure is tight around 1
        let slack = DyadicRational::new(BigInt::from(1), -64);
        assert!(p.width() <= slack);
    }

    #[test]
    fn widths_shrink_with_precision() {
        assert!(ln2_interval(256).width() <= ln2_interval(64).width());
        assert!(log2_e_interval(256).width() <= log2_e_interval(64).width());
    }
}
