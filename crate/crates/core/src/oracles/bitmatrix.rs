//! Exhaustive GL(N, 2) element-order oracle.
//!
//! A matrix over F2 is a vector of row bitmasks. The enumeration walks all
//! 2^(N^2) bit patterns, keeps the invertible ones, and computes each
//! order by repeated multiplication with a hard cap at |GL(N, 2)|
//! (Lagrange); blowing the cap would mean the arithmetic itself is broken,
//! so it is treated as an internal error rather than a result.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::Natural;
use crate::factorial_bounds::gl_order_exact;

/// Dense square matrix over F2, one u32 bitmask per row. Supports the
/// small dimensions the exhaustive oracle needs (N <= 8 comfortably).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    dim: u32,
    rows: Vec<u32>,
}

/// Enumeration cap: 2^25 matrices at N = 5 is the most the oracle is
/// asked to sweep.
pub const GL_ENUMERATION_CAP: u32 = 5;

impl BitMatrix {
    pub fn identity(dim: u32) -> Self {
        BitMatrix {
            dim,
            rows: (0..dim).map(|i| 1u32 << i).collect(),
        }
    }

    /// Decodes `code` as N^2 row-major bits.
    pub fn from_code(dim: u32, code: u64) -> Self {
        let mask = (1u64 << dim) - 1;
        let rows = (0..dim)
            .map(|i| ((code >> (i * dim)) & mask) as u32)
            .collect();
        BitMatrix { dim, rows }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| r == 1u32 << i)
    }

    /// Matrix product over F2: row i of the result is the xor of the rows
    /// of `rhs` selected by the bits of row i of `self`.
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut acc = 0u32;
                let mut bits = r;
                while bits != 0 {
                    let j = bits.trailing_zeros();
                    acc ^= rhs.rows[j as usize];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        BitMatrix {
            dim: self.dim,
            rows,
        }
    }

    /// Gaussian elimination over F2.
    pub fn is_invertible(&self) -> bool {
        let mut rows = self.rows.clone();
        for col in 0..self.dim {
            let bit = 1u32 << col;
            let pivot = (col as usize..rows.len()).find(|&r| rows[r] & bit != 0);
            let Some(pivot) = pivot else {
                return false;
            };
            rows.swap(col as usize, pivot);
            let pivot_row = rows[col as usize];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != col as usize && *row & bit != 0 {
                    *row ^= pivot_row;
                }
            }
        }
        true
    }

    /// Inverse via Gauss-Jordan on an augmented system, if invertible.
    pub fn inverse(&self) -> Option<BitMatrix> {
        let mut rows = self.rows.clone();
        let mut inv = BitMatrix::identity(self.dim).rows;
        for col in 0..self.dim {
            let bit = 1u32 << col;
            let pivot = (col as usize..rows.len()).find(|&r| rows[r] & bit != 0)?;
            rows.swap(col as usize, pivot);
            inv.swap(col as usize, pivot);
            let (pr, pi) = (rows[col as usize], inv[col as usize]);
            for r in 0..rows.len() {
                if r != col as usize && rows[r] & bit != 0 {
                    rows[r] ^= pr;
                    inv[r] ^= pi;
                }
            }
        }
        Some(BitMatrix {
            dim: self.dim,
            rows: inv,
        })
    }

    /// Multiplicative order, with a cap the caller derives from |GL|.
    /// Exceeding the cap is an internal consistency failure.
    pub fn order(&self, cap: u64) -> Result<u64> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Ok(k);
            }
            acc = acc.mul(self);
        }
        Err(Error::domain(
            "matrix order exceeded |GL|; the group arithmetic is inconsistent",
        ))
    }
}

/// Maximum order among the even-order invertible N x N matrices over F2,
/// by exhaustive enumeration. `N <= 5`.
pub fn gl_max_even_order_exhaustive(dim: u32) -> Result<Natural> {
    if dim == 0 {
        return Err(Error::domain("GL enumeration needs N >= 1"));
    }
    if dim > GL_ENUMERATION_CAP {
        return Err(Error::capability(format!(
            "exhaustive GL enumeration is capped at N = {GL_ENUMERATION_CAP}, got {dim}"
        )));
    }
    let group_order = gl_order_exact(dim)?
        .to_u64()
        .expect("|GL(N,2)| fits u64 for N <= 5");
    let total = 1u64 << (dim * dim);
    const CHUNK: u64 = 1 << 16;
    let chunks: Vec<u64> = (0..total.div_ceil(CHUNK)).collect();
    let best = chunks
        .par_iter()
        .map(|&chunk| {
            let mut best = 0u64;
            let end = ((chunk + 1) * CHUNK).min(total);
            for code in chunk * CHUNK..end {
                let m = BitMatrix::from_code(dim, code);
                if !m.is_invertible() {
                    continue;
                }
                let order = m.order(group_order).expect("order within |GL|");
                if order.is_multiple_of(2) && order > best {
                    best = order;
                }
            }
            best
        })
        .max()
        .unwrap_or(0);
    Ok(Natural::from(best))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_properties() {
        let id = BitMatrix::identity(4);
        assert!(id.is_identity());
        assert!(id.is_invertible());
        assert_eq!(id.order(100).unwrap(), 1);
        assert_eq!(id.mul(&id), id);
    }

    #[test]
    fn singular_matrix_detected() {
        // two equal rows
        let m = BitMatrix::from_code(2, 0b01_01);
        assert!(!m.is_invertible());
        assert!(m.inverse().is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        // companion-style 3x3 of x^3 + x + 1 (a Singer element, order 7)
        let m = BitMatrix {
            dim: 3,
            rows: vec![0b010, 0b100, 0b011],
        };
        assert!(m.is_invertible());
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
        assert_eq!(m.order(168).unwrap(), 7);
    }

    #[test]
    fn gl2_max_even_order() {
        // GL(2,2) is S3: element orders 1, 2, 3
        assert_eq!(
            gl_max_even_order_exhaustive(2).unwrap(),
            Natural::from(2u64)
        );
    }

    #[test]
    fn gl3_max_even_order() {
        // GL(3,2): orders 1..4 and 7; the even maximum is 4
        assert_eq!(
            gl_max_even_order_exhaustive(3).unwrap(),
            Natural::from(4u64)
        );
    }

    #[test]
    fn gl4_attains_the_ceiling() {
        assert_eq!(
            gl_max_even_order_exhaustive(4).unwrap(),
            Natural::from(6u64)
        );
    }

    #[test]
    fn enumeration_cap_enforced() {
        assert!(matches!(
            gl_max_even_order_exhaustive(6),
            Err(Error::Capability(_))
        ));
    }
}
