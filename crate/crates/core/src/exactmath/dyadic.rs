use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::Natural;

/// Exact number of the form `mantissa * 2^exponent`.
///
/// Canonical form keeps the mantissa odd (or zero with exponent 0), so
/// equality is structural. Addition, subtraction and multiplication are
/// closed and exact; division and square roots carry an explicit
/// `frac_bits` granularity and a rounding direction, which is where all
/// outward rounding in the interval layer happens.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    mantissa: BigInt,
    exponent: i64,
}

impl DyadicRational {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        let mut d = DyadicRational { mantissa, exponent };
        d.canonicalize();
        d
    }

    fn canonicalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.mantissa.trailing_zeros().expect("nonzero mantissa");
        if tz > 0 {
            self.mantissa >>= tz;
            self.exponent += i64::try_from(tz).expect("shift fits i64");
        }
    }

    pub fn zero() -> Self {
        DyadicRational::new(BigInt::zero(), 0)
    }

    pub fn one() -> Self {
        DyadicRational::from_u64(1)
    }

    pub fn from_u64(v: u64) -> Self {
        DyadicRational::new(BigInt::from(v), 0)
    }

    pub fn from_i64(v: i64) -> Self {
        DyadicRational::new(BigInt::from(v), 0)
    }

    pub fn from_bigint(v: BigInt) -> Self {
        DyadicRational::new(v, 0)
    }

    pub fn from_natural(v: &Natural) -> Self {
        DyadicRational::new(BigInt::from(v.as_biguint().clone()), 0)
    }

    /// `mantissa / 2^frac_bits` — handy for literal test constants.
    pub fn from_mantissa_frac(mantissa: BigInt, frac_bits: u32) -> Self {
        DyadicRational::new(mantissa, -i64::from(frac_bits))
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// True when the value is an integer (exponent never hides fractional
    /// bits in canonical form).
    pub fn is_integer(&self) -> bool {
        self.is_zero() || self.exponent >= 0
    }

    pub fn add(&self, rhs: &DyadicRational) -> DyadicRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(rhs.exponent);
        let a = &self.mantissa << usize::try_from(self.exponent - e).expect("aligned shift");
        let b = &rhs.mantissa << usize::try_from(rhs.exponent - e).expect("aligned shift");
        DyadicRational::new(a + b, e)
    }

    pub fn sub(&self, rhs: &DyadicRational) -> DyadicRational {
        self.add(&-rhs)
    }

    pub fn mul(&self, rhs: &DyadicRational) -> DyadicRational {
        DyadicRational::new(&self.mantissa * &rhs.mantissa, self.exponent + rhs.exponent)
    }

    pub fn mul_natural(&self, rhs: &Natural) -> DyadicRational {
        DyadicRational::new(
            &self.mantissa * BigInt::from(rhs.as_biguint().clone()),
            self.exponent,
        )
    }

    pub fn mul_u64(&self, rhs: u64) -> DyadicRational {
        DyadicRational::new(&self.mantissa * rhs, self.exponent)
    }

    /// `self * 2^shift`, exact.
    pub fn scale_pow2(&self, shift: i64) -> DyadicRational {
        if self.is_zero() {
            return DyadicRational::zero();
        }
        DyadicRational {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + shift,
        }
    }

    /// Largest multiple of `2^-frac_bits` that is `<= self`.
    pub fn round_floor(&self, frac_bits: u32) -> DyadicRational {
        let target = -i64::from(frac_bits);
        if self.is_zero() || self.exponent >= target {
            return self.clone();
        }
        let shift = usize::try_from(target - self.exponent).expect("shift fits usize");
        // BigInt >> is an arithmetic shift: floor division by 2^shift.
        DyadicRational::new(&self.mantissa >> shift, target)
    }

    /// Smallest multiple of `2^-frac_bits` that is `>= self`.
    pub fn round_ceil(&self, frac_bits: u32) -> DyadicRational {
        -(-self).round_floor(frac_bits)
    }

    /// `floor(num / den * 2^frac_bits) / 2^frac_bits`; domain error on a
    /// zero divisor.
    pub fn div_floor(&self, den: &DyadicRational, frac_bits: u32) -> Result<DyadicRational> {
        let (num, den) = self.div_prepare(den, frac_bits)?;
        Ok(DyadicRational::new(
            num.div_floor(&den),
            -i64::from(frac_bits),
        ))
    }

    /// `ceil(num / den * 2^frac_bits) / 2^frac_bits`.
    pub fn div_ceil(&self, den: &DyadicRational, frac_bits: u32) -> Result<DyadicRational> {
        let (num, den) = self.div_prepare(den, frac_bits)?;
        Ok(DyadicRational::new(
            num.div_ceil(&den),
            -i64::from(frac_bits),
        ))
    }

    /// Rewrites `self / den * 2^frac_bits` as an integer quotient
    /// `num / den` with `den > 0`.
    fn div_prepare(&self, den: &DyadicRational, frac_bits: u32) -> Result<(BigInt, BigInt)> {
        if den.is_zero() {
            return Err(Error::domain("division by zero dyadic"));
        }
        let t = self.exponent - den.exponent + i64::from(frac_bits);
        let (mut num, mut d) = if t >= 0 {
            (
                &self.mantissa << usize::try_from(t).expect("shift fits usize"),
                den.mantissa.clone(),
            )
        } else {
            (
                self.mantissa.clone(),
                &den.mantissa << usize::try_from(-t).expect("shift fits usize"),
            )
        };
        if d.is_negative() {
            num = -num;
            d = -d;
        }
        Ok((num, d))
    }

    /// Largest multiple of `2^-frac_bits` whose square is `<= self`.
    /// Domain error for negative values.
    pub fn sqrt_floor(&self, frac_bits: u32) -> Result<DyadicRational> {
        let mag = self.sqrt_magnitude(frac_bits, false)?;
        Ok(DyadicRational::new(
            BigInt::from(mag),
            -i64::from(frac_bits),
        ))
    }

    /// Smallest multiple of `2^-frac_bits` whose square is `>= self`.
    pub fn sqrt_ceil(&self, frac_bits: u32) -> Result<DyadicRational> {
        let mag = self.sqrt_magnitude(frac_bits, true)?;
        Ok(DyadicRational::new(
            BigInt::from(mag),
            -i64::from(frac_bits),
        ))
    }

    /// `floor or ceil of sqrt(self) * 2^frac_bits` as a nonnegative integer.
    ///
    /// Uses `sqrt(self)*2^f = sqrt(self * 2^{2f})` and the identities
    /// `floor(sqrt(floor(x))) = floor(sqrt(x))` and
    /// `ceil(sqrt(ceil(x))) >= ceil(sqrt(x))`, so shifting the mantissa with
    /// the matching rounding direction keeps the result on the sound side.
    fn sqrt_magnitude(&self, frac_bits: u32, ceil: bool) -> Result<BigUint> {
        if self.is_negative() {
            return Err(Error::domain("square root of a negative value"));
        }
        if self.is_zero() {
            return Ok(BigUint::zero());
        }
        let m = self.mantissa.magnitude();
        let j = self.exponent + 2 * i64::from(frac_bits);
        let n: BigUint = if j >= 0 {
            m << usize::try_from(j).expect("shift fits usize")
        } else {
            let s = usize::try_from(-j).expect("shift fits usize");
            if ceil {
                let mask = (BigUint::from(1u32) << s) - 1u32;
                (m + &mask) >> s
            } else {
                m >> s
            }
        };
        let root = num_integer::Roots::sqrt(&n);
        if ceil && &root * &root != n {
            Ok(root + 1u32)
        } else {
            Ok(root)
        }
    }

    /// Lossy conversion for human-readable output only; never used in any
    /// certified comparison.
    pub fn to_f64(&self) -> f64 {
        let m = self.mantissa.to_f64().unwrap_or(f64::NAN);
        let e = self
            .exponent
            .clamp(i64::from(i32::MIN), i64::from(i32::MAX)) as i32;
        m * 2f64.powi(e)
    }

    /// Exact decimal rendering: an integer when possible, otherwise
    /// `mantissa/2^k`.
    pub fn to_exact_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        if self.exponent >= 0 {
            let v = &self.mantissa << usize::try_from(self.exponent).expect("shift fits usize");
            v.to_string()
        } else {
            format!("{}/2^{}", self.mantissa, -self.exponent)
        }
    }
}

impl Neg for &DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        DyadicRational {
            mantissa: -&self.mantissa,
            exponent: if self.mantissa.is_zero() {
                0
            } else {
                self.exponent
            },
        }
    }
}

impl Neg for DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        -&self
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.mantissa.sign(), other.mantissa.sign()) {
            (Sign::Minus, Sign::NoSign | Sign::Plus) => return Ordering::Less,
            (Sign::NoSign, Sign::Plus) => return Ordering::Less,
            (Sign::Plus, Sign::NoSign | Sign::Minus) => return Ordering::Greater,
            (Sign::NoSign, Sign::Minus) => return Ordering::Greater,
            (Sign::NoSign, Sign::NoSign) => return Ordering::Equal,
            _ => {}
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << usize::try_from(self.exponent - e).expect("aligned shift");
        let b = &other.mantissa << usize::try_from(other.exponent - e).expect("aligned shift");
        a.cmp(&b)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exact_string())
    }
}

impl fmt::Debug for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({} * 2^{})", self.mantissa, self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(m: i64, e: i64) -> DyadicRational {
        DyadicRational::new(BigInt::from(m), e)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let d = dy(12, 0);
        assert_eq!(d.mantissa(), &BigInt::from(3));
        assert_eq!(d.exponent(), 2);
        assert_eq!(DyadicRational::zero().exponent(), 0);
    }

    #[test]
    fn arithmetic_is_exact() {
        // 1.5 + 0.25 = 1.75
        assert_eq!(dy(3, -1).add(&dy(1, -2)), dy(7, -2));
        // 1.5 * 4 = 6
        assert_eq!(dy(3, -1).mul(&dy(4, 0)), dy(6, 0));
        // 3 - 1 = 2
        assert_eq!(dy(3, 0).sub(&dy(1, 0)), dy(2, 0));
    }

    #[test]
    fn ordering_crosses_exponents() {
        assert!(dy(1, 10) > dy(1023, 0));
        assert!(dy(1, 10) < dy(1025, 0));
        assert!(dy(-1, 5) < dy(1, -5));
        assert_eq!(dy(4, 0).cmp(&dy(1, 2)), Ordering::Equal);
    }

    #[test]
    fn directed_rounding() {
        // 5/8 at 1 fractional bit: floor 1/2, ceil 1
        let v = dy(5, -3);
        assert_eq!(v.round_floor(1), dy(1, -1));
        assert_eq!(v.round_ceil(1), dy(1, 0));
        // negative values round away from the interior symmetrically
        let w = dy(-5, -3);
        assert_eq!(w.round_floor(1), dy(-1, 0));
        assert_eq!(w.round_ceil(1), dy(-1, -1));
        // already representable values are untouched
        assert_eq!(v.round_floor(3), v);
        assert_eq!(v.round_ceil(3), v);
    }

    #[test]
    fn division_directed() {
        // 1/3 at 4 fractional bits: floor 5/16, ceil 6/16
        let one = DyadicRational::one();
        let three = dy(3, 0);
        assert_eq!(one.div_floor(&three, 4).unwrap(), dy(5, -4));
        assert_eq!(one.div_ceil(&three, 4).unwrap(), dy(6, -4));
        // exact divisions are points
        assert_eq!(dy(6, 0).div_floor(&three, 4).unwrap(), dy(2, 0));
        assert_eq!(dy(6, 0).div_ceil(&three, 4).unwrap(), dy(2, 0));
        assert!(one.div_floor(&DyadicRational::zero(), 4).is_err());
        // negative divisor
        assert_eq!(dy(-6, 0).div_floor(&dy(-3, 0), 4).unwrap(), dy(2, 0));
    }

    #[test]
    fn sqrt_directed() {
        assert_eq!(dy(4, 0).sqrt_floor(8).unwrap(), dy(2, 0));
        assert_eq!(dy(4, 0).sqrt_ceil(8).unwrap(), dy(2, 0));
        let lo = dy(2, 0).sqrt_floor(16).unwrap();
        let hi = dy(2, 0).sqrt_ceil(16).unwrap();
        assert!(lo < hi);
        assert!(lo.mul(&lo) < dy(2, 0));
        assert!(hi.mul(&hi) > dy(2, 0));
        assert!(dy(-1, 0).sqrt_floor(8).is_err());
        assert_eq!(
            DyadicRational::zero().sqrt_floor(8).unwrap(),
            DyadicRational::zero()
        );
    }

    #[test]
    fn exact_rendering() {
        assert_eq!(dy(3, 2).to_exact_string(), "12");
        assert_eq!(dy(5, -3).to_exact_string(), "5/2^3");
        assert_eq!(dy(-1, 0).to_exact_string(), "-1");
    }
}
