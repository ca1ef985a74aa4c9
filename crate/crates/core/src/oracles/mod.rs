//! Independent brute-force ground truth at desk scale.
//!
//! Nothing here shares reasoning with the bound engines: Landau maxima
//! come from raw partition enumeration, GL maxima from sweeping all
//! 2^(N^2) matrices, factorials from plain products. The verification
//! suite pins the engines against these.

mod bitmatrix;
mod partitions;

pub use bitmatrix::{gl_max_even_order_exhaustive, BitMatrix, GL_ENUMERATION_CAP};
pub use partitions::{landau_constrained_exact, PartitionConstraint, LANDAU_POINTS_CAP};

use crate::element_orders::{CycleStructure, Parity};
use crate::error::Result;
use crate::exactmath::Natural;

/// Exact `k!` (capped at 2^20).
pub fn factorial_exact(k: u64) -> Result<Natural> {
    Natural::factorial(k)
}

/// Order (lcm of cycle lengths) and parity of a permutation given by its
/// cycle structure; shared by the Landau oracle tests and the
/// construction checks.
pub fn permutation_order_and_parity(c: &CycleStructure) -> (Natural, Parity) {
    (c.order(), c.parity())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_matches_iterated_product() {
        // independent association order: plain left-to-right fold
        let mut acc = Natural::one();
        for v in 2u64..=16 {
            acc *= v;
        }
        assert_eq!(factorial_exact(16).unwrap(), acc);
        assert_eq!(acc, Natural::from(20_922_789_888_000u64));
        assert_eq!(factorial_exact(0).unwrap(), Natural::one());
    }

    #[test]
    fn order_and_parity_examples() {
        let c = CycleStructure::new(vec![2, 2, 3], 0).unwrap();
        let (order, parity) = permutation_order_and_parity(&c);
        assert_eq!(order, Natural::from(6u64));
        assert_eq!(parity, Parity::Even);

        let c = CycleStructure::new(vec![5], 2).unwrap();
        let (order, parity) = permutation_order_and_parity(&c);
        assert_eq!(order, Natural::from(5u64));
        assert_eq!(parity, Parity::Even);

        let c = CycleStructure::new(vec![2, 2, 3, 5, 7, 11, 13, 17, 19, 23], 26).unwrap();
        let (order, parity) = permutation_order_and_parity(&c);
        assert_eq!(order, Natural::from(223_092_870u64));
        assert_eq!(parity, Parity::Even);
    }
}
