//! Exact combinatorial numbers used throughout the crate.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient C(n, k) as an exact big integer; 0 when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Binomial with a possibly-negative upper index; 0 whenever n < 0 or k < 0.
pub fn binomial_signed(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 {
        BigUint::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// n-th Catalan number C(2n, n) / (n + 1).
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// Central elements of the (1,2)-Pascal triangle: 1, 3, 9, 30, 105, ...
/// For n >= 1 this equals 3/2 * C(2n, n).
pub fn central_12_pascal(n: u64) -> BigUint {
    if n == 0 {
        BigUint::one()
    } else {
        BigUint::from(3u32) * binomial(2 * n, n) / BigUint::from(2u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(9, 4), BigUint::from(126u32));
        assert_eq!(binomial(4, 7), BigUint::zero());
        assert_eq!(binomial_signed(-1, 0), BigUint::zero());
    }

    #[test]
    fn catalan_prefix() {
        let want = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in want.iter().enumerate() {
            assert_eq!(catalan(n as u64), BigUint::from(c));
        }
    }

    #[test]
    fn pascal_12_central_prefix() {
        let want = [1u64, 3, 9, 30, 105, 378, 1386, 5148, 19305];
        for (n, &c) in want.iter().enumerate() {
            assert_eq!(central_12_pascal(n as u64), BigUint::from(c));
        }
    }
}
