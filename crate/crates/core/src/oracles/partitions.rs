//! Exhaustive constrained-Landau oracle.
//!
//! Enumerates every partition of `points` (nonincreasing parts, parts of 1
//! included) and takes the maximum lcm of the parts among partitions
//! matching the constraint flags. Deliberately free of shortcuts or
//! pruning so it shares no reasoning with the engines it validates; the
//! lcm of parts <= 80 fits comfortably in u128 (lcm(1..80) < 2^116).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::Natural;

/// Which permutations count: even parity (an even number of even parts)
/// and/or even order (at least one even part).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PartitionConstraint {
    pub require_even_parity: bool,
    pub require_even_order: bool,
}

/// Enumeration cap: p(80) is ~15.8 million partitions, minutes of desk
/// compute at most.
pub const LANDAU_POINTS_CAP: u32 = 80;

/// Maximum order (lcm of cycle lengths) over all permutations of `points`
/// points satisfying the constraint, by exhaustive partition enumeration.
/// Returns 0 when no partition qualifies.
pub fn landau_constrained_exact(points: u32, constraint: PartitionConstraint) -> Result<Natural> {
    if points > LANDAU_POINTS_CAP {
        return Err(Error::capability(format!(
            "partition enumeration is capped at {LANDAU_POINTS_CAP} points, got {points}"
        )));
    }
    if points == 0 {
        // only the empty partition (the identity): order 1, odd-order
        let ok = !constraint.require_even_order;
        return Ok(Natural::from(u128::from(ok)));
    }
    // Parallel split over the first (largest) part; each branch is an
    // independent exhaustive enumeration, merged by max.
    let best = (1..=points)
        .into_par_iter()
        .map(|first| {
            let mut best = 0u128;
            descend(
                points - first,
                first,
                u128::from(first),
                u32::from(first % 2 == 0),
                constraint,
                &mut best,
            );
            best
        })
        .max()
        .unwrap_or(0);
    Ok(Natural::from(best))
}

fn descend(
    remaining: u32,
    max_part: u32,
    lcm: u128,
    even_parts: u32,
    constraint: PartitionConstraint,
    best: &mut u128,
) {
    if remaining == 0 {
        if constraint.require_even_parity && !even_parts.is_multiple_of(2) {
            return;
        }
        if constraint.require_even_order && even_parts == 0 {
            return;
        }
        if lcm > *best {
            *best = lcm;
        }
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        descend(
            remaining - part,
            part,
            lcm_u128(lcm, u128::from(part)),
            even_parts + u32::from(part % 2 == 0),
            constraint,
            best,
        );
    }
}

fn lcm_u128(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u128(a, b) * b
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both() -> PartitionConstraint {
        PartitionConstraint {
            require_even_parity: true,
            require_even_order: true,
        }
    }

    #[test]
    fn three_points_admit_no_even_order_even_permutation() {
        // A3 = {id, two 3-cycles}: orders 1 and 3 only
        assert_eq!(
            landau_constrained_exact(3, both()).unwrap(),
            Natural::zero()
        );
    }

    #[test]
    fn eight_points_max_is_six() {
        // best even-parity even-order type on 8 points: [3, 2, 2, 1]
        assert_eq!(
            landau_constrained_exact(8, both()).unwrap(),
            Natural::from(6u64)
        );
    }

    #[test]
    fn four_points_even_parity_only() {
        // [3, 1] is even with order 3; [2, 2] only reaches 2
        let parity_only = PartitionConstraint {
            require_even_parity: true,
            require_even_order: false,
        };
        assert_eq!(
            landau_constrained_exact(4, parity_only).unwrap(),
            Natural::from(3u64)
        );
    }

    #[test]
    fn unconstrained_is_the_landau_function() {
        // g(n) for n = 1..10: 1, 2, 3, 4, 6, 6, 12, 15, 20, 30
        let expected = [1u64, 2, 3, 4, 6, 6, 12, 15, 20, 30];
        for (i, &g) in expected.iter().enumerate() {
            let n = (i + 1) as u32;
            assert_eq!(
                landau_constrained_exact(n, PartitionConstraint::default()).unwrap(),
                Natural::from(g),
                "Landau value mismatch at n={n}"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            landau_constrained_exact(81, both()),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn zero_points_identity_only() {
        let none = PartitionConstraint::default();
        assert_eq!(landau_constrained_exact(0, none).unwrap(), Natural::one());
        assert_eq!(
            landau_constrained_exact(0, both()).unwrap(),
            Natural::zero()
        );
    }
}
