//! Stirling numbers of the second kind and the per-support entry counts
//! they induce on hypergraph tensors.
//!
//! For an order-`k` tensor and a support of cardinality `r`, the number of
//! entries whose index multiset has exactly that support is
//! `entries_count(r, k) = stirling2(k, r) * r!`, and the number of such
//! entries within one row is `row_count(r, k) = stirling2(k, r) * (r-1)!`.

use std::collections::HashMap;

use num::bigint::BigInt;
use num::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("stirling arguments need 1 <= r <= k, got r = {r}, k = {k}")]
pub struct StirlingRangeError {
    pub r: usize,
    pub k: usize,
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut result = BigInt::one();
    for i in 0..k.min(n - k) {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Stirling number of the second kind via the alternating-sum formula
/// `(1/r!) * sum_j (-1)^j C(r,j) (r-j)^k`, in exact integer arithmetic.
pub fn stirling2(k: usize, r: usize) -> Result<BigInt, StirlingRangeError> {
    if r < 1 || r > k {
        return Err(StirlingRangeError { r, k });
    }
    let mut sum = BigInt::zero();
    for j in 0..=r {
        let term = binomial(r, j) * BigInt::from(r - j).pow(k as u32);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum / factorial(r))
}

/// `N(r, k) = stirling2(k, r) * (r-1)!`, the number of entries of one row
/// corresponding to a support of cardinality `r`.
pub fn row_count(r: usize, k: usize) -> Result<BigInt, StirlingRangeError> {
    Ok(stirling2(k, r)? * factorial(r - 1))
}

/// The curly `N(r, k) = stirling2(k, r) * r!`, the number of entries of the
/// whole tensor corresponding to a support of cardinality `r`.
pub fn entries_count(r: usize, k: usize) -> Result<BigInt, StirlingRangeError> {
    Ok(stirling2(k, r)? * factorial(r))
}

/// Memoizing wrapper used by the tensor builders.
#[derive(Debug, Default)]
pub struct StirlingTable {
    stirling: HashMap<(usize, usize), BigInt>,
}

impl StirlingTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stirling2(&mut self, k: usize, r: usize) -> Result<BigInt, StirlingRangeError> {
        if let Some(v) = self.stirling.get(&(k, r)) {
            return Ok(v.clone());
        }
        let v = stirling2(k, r)?;
        self.stirling.insert((k, r), v.clone());
        Ok(v)
    }

    pub fn row_count(&mut self, r: usize, k: usize) -> Result<BigInt, StirlingRangeError> {
        Ok(self.stirling2(k, r)? * factorial(r - 1))
    }

    pub fn entries_count(&mut self, r: usize, k: usize) -> Result<BigInt, StirlingRangeError> {
        Ok(self.stirling2(k, r)? * factorial(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_small_values() {
        // (1/2!) * sum_j (-1)^j C(2,j) (2-j)^3 = (8 - 2)/2 = 3
        assert_eq!(stirling2(3, 2).unwrap(), BigInt::from(3));
        for k in 1..=8 {
            assert_eq!(stirling2(k, k).unwrap(), BigInt::one());
            assert_eq!(stirling2(k, 1).unwrap(), BigInt::one());
        }
        assert_eq!(stirling2(4, 2).unwrap(), BigInt::from(7));
    }

    #[test]
    fn stirling_range_errors() {
        assert!(stirling2(3, 0).is_err());
        assert!(stirling2(3, 4).is_err());
        assert!(row_count(0, 3).is_err());
    }

    #[test]
    fn row_counts() {
        // N(k, k) = (k-1)!
        assert_eq!(row_count(3, 3).unwrap(), BigInt::from(2));
        assert_eq!(row_count(4, 4).unwrap(), BigInt::from(6));
        // N(2, 3) = 3 gives the 1/3 coefficient in the worked example.
        assert_eq!(row_count(2, 3).unwrap(), BigInt::from(3));
        assert_eq!(row_count(2, 4).unwrap(), BigInt::from(7));
        for k in 2..=6 {
            assert_eq!(row_count(1, k).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn entries_count_is_r_times_row_count() {
        for k in 2..=7 {
            for r in 1..=k {
                assert_eq!(
                    entries_count(r, k).unwrap(),
                    BigInt::from(r) * row_count(r, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn entry_counts_partition_all_tuples() {
        // sum_r entries_count(r, k) * C(n, r) = n^k: every index tuple has
        // exactly one support.
        for (n, k) in [(3usize, 3usize), (4, 3), (5, 4), (3, 5)] {
            let mut total = BigInt::zero();
            for r in 1..=k.min(n) {
                total += entries_count(r, k).unwrap() * binomial(n, r);
            }
            assert_eq!(total, BigInt::from(n).pow(k as u32));
        }
    }

    #[test]
    fn table_memoizes_consistently() {
        let mut table = StirlingTable::new();
        assert_eq!(table.row_count(2, 3).unwrap(), BigInt::from(3));
        assert_eq!(table.row_count(2, 3).unwrap(), BigInt::from(3));
        assert_eq!(table.entries_count(2, 3).unwrap(), BigInt::from(6));
    }
}
