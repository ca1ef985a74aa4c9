use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest `k` for which `factorial(k)` is computed exactly. `(1 << 20)!`
/// is a few megabytes of digits and takes seconds; anything larger belongs
/// in logarithmic bounds, not exact arithmetic.
pub const FACTORIAL_CAP: u64 = 1 << 20;

/// Arbitrary-precision nonnegative integer.
///
/// All exact quantities live here: factorials, |GL| products, element
/// orders, and the integer exponents the engines compare. Subtraction is
/// only exposed in checked form because a negative count is always a logic
/// error in this domain.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    /// 2^exp.
    pub fn pow2(exp: u64) -> Self {
        Natural(BigUint::one() << usize::try_from(exp).expect("pow2 exponent fits usize"))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Number of significant bits; 0 for zero.
    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn is_power_of_two(&self) -> bool {
        !self.0.is_zero() && self.0.count_ones() == 1
    }

    /// `self - rhs`, or a domain error when the result would be negative.
    pub fn checked_sub(&self, rhs: &Natural) -> Result<Natural> {
        if self.0 >= rhs.0 {
            Ok(Natural(&self.0 - &rhs.0))
        } else {
            Err(Error::domain(format!(
                "natural subtraction underflow: {} - {}",
                self, rhs
            )))
        }
    }

    pub fn pow(&self, exp: u32) -> Natural {
        Natural(self.0.pow(exp))
    }

    /// `self * 2^k`.
    pub fn times_pow2(&self, k: u64) -> Natural {
        Natural(&self.0 << usize::try_from(k).expect("shift fits usize"))
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Exact factorial via a balanced range product, capped at
    /// [`FACTORIAL_CAP`].
    pub fn factorial(k: u64) -> Result<Natural> {
        if k > FACTORIAL_CAP {
            return Err(Error::capability(format!(
                "factorial({k}) exceeds the exact cap of 2^20; use logarithmic bounds"
            )));
        }
        Ok(Natural(range_product(2, k)))
    }
}

/// Product of the integers in `lo..=hi` (1 for an empty range), split
/// recursively so the operand sizes stay balanced.
fn range_product(lo: u64, hi: u64) -> BigUint {
    if lo > hi {
        return BigUint::one();
    }
    if hi - lo < 16 {
        let mut acc = BigUint::from(lo);
        for v in lo + 1..=hi {
            acc *= v;
        }
        return acc;
    }
    let mid = lo + (hi - lo) / 2;
    range_product(lo, mid) * range_product(mid + 1, hi)
}

impl From<u32> for Natural {
    fn from(v: u32) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<u64> for Natural {
    fn from(v: u64) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<usize> for Natural {
    fn from(v: usize) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<u128> for Natural {
    fn from(v: u128) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<BigUint> for Natural {
    fn from(v: BigUint) -> Self {
        Natural(v)
    }
}

impl Add for &Natural {
    type Output = Natural;
    fn add(self, rhs: &Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl Add<u64> for &Natural {
    type Output = Natural;
    fn add(self, rhs: u64) -> Natural {
        Natural(&self.0 + rhs)
    }
}

impl AddAssign<&Natural> for Natural {
    fn add_assign(&mut self, rhs: &Natural) {
        self.0 += &rhs.0;
    }
}

impl Mul for &Natural {
    type Output = Natural;
    fn mul(self, rhs: &Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for &Natural {
    type Output = Natural;
    fn mul(self, rhs: u64) -> Natural {
        Natural(&self.0 * rhs)
    }
}

impl MulAssign<&Natural> for Natural {
    fn mul_assign(&mut self, rhs: &Natural) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign<u64> for Natural {
    fn mul_assign(&mut self, rhs: u64) {
        self.0 *= rhs;
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Natural({})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(Natural::factorial(0).unwrap(), Natural::one());
        assert_eq!(Natural::factorial(1).unwrap(), Natural::one());
        assert_eq!(Natural::factorial(4).unwrap(), Natural::from(24u64));
        assert_eq!(
            Natural::factorial(16).unwrap(),
            Natural::from(20_922_789_888_000u64)
        );
    }

    #[test]
    fn factorial_cap_enforced() {
        assert!(matches!(
            Natural::factorial(FACTORIAL_CAP + 1),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn checked_sub_rejects_underflow() {
        let a = Natural::from(3u64);
        let b = Natural::from(5u64);
        assert_eq!(b.checked_sub(&a).unwrap(), Natural::from(2u64));
        assert!(matches!(a.checked_sub(&b), Err(Error::Domain(_))));
    }

    #[test]
    fn power_of_two_detection() {
        assert!(Natural::pow2(0).is_power_of_two());
        assert!(Natural::pow2(63).is_power_of_two());
        assert!(!Natural::from(6u64).is_power_of_two());
        assert!(!Natural::zero().is_power_of_two());
    }

    #[test]
    fn bits_counts_significant_bits() {
        assert_eq!(Natural::zero().bits(), 0);
        assert_eq!(Natural::one().bits(), 1);
        assert_eq!(Natural::from(255u64).bits(), 8);
        assert_eq!(Natural::pow2(128).bits(), 129);
    }
}
