//! Exact arithmetic kernel.
//!
//! [`BigInt`] and [`Rational`] come from the `num` family. On top of them this module
//! provides dense univariate polynomials ([`Poly`], [`RationalPoly`]) and rational
//! functions whose denominator is a power of `(1 - t)` ([`BinomRat`]).

mod binom_rat;
mod poly;
mod rational_poly;

pub use binom_rat::BinomRat;
pub use num_bigint::BigInt;
pub use poly::Poly;
pub use rational_poly::RationalPoly;

/// Reduced fraction of two [`BigInt`]s with a positive denominator.
pub type Rational = num_rational::BigRational;

use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`.
///
/// Zero for `k < 0`, and for `k > n` when `n >= 0`. A negative upper argument uses
/// `C(n, k) = (-1)^k C(k - n - 1, k)`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let magnitude = binom(k - n - 1, k);
        return if k % 2 == 0 { magnitude } else { -magnitude };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Falling factorial `(x)_r = x (x - 1) ... (x - r + 1)`; `(x)_0 = 1`.
pub fn falling_factorial(x: &BigInt, r: u32) -> BigInt {
    let mut acc = BigInt::one();
    let mut factor = x.clone();
    for _ in 0..r {
        acc *= &factor;
        factor -= 1;
    }
    acc
}

/// `r!`
pub fn factorial(r: u32) -> BigInt {
    (1..=u64::from(r)).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(x, r)` for an arbitrary integer `x`, via `(x)_r / r!`.
pub fn binom_big(x: &BigInt, r: u32) -> BigInt {
    falling_factorial(x, r) / factorial(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial_oracle(n: u64) -> u128 {
        (1..=n as u128).product()
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(5, 7), BigInt::zero());
        // 9! / (3! 6!) = 362880 / (6 * 720)
        let oracle = factorial_oracle(9) / (factorial_oracle(3) * factorial_oracle(6));
        assert_eq!(oracle, 84);
        assert_eq!(binom(9, 3), BigInt::from(84));
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(7, -1), BigInt::zero());
    }

    #[test]
    fn binom_pascal_rule() {
        for n in 1..=40i64 {
            for k in 1..n {
                assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn binom_negative_upper_matches_falling_factorial() {
        for n in -10i64..=10 {
            for k in 0..=8u32 {
                assert_eq!(binom(n, i64::from(k)), binom_big(&BigInt::from(n), k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn falling_factorial_basics() {
        assert_eq!(falling_factorial(&BigInt::from(5), 0), BigInt::one());
        assert_eq!(falling_factorial(&BigInt::from(5), 3), BigInt::from(60));
        assert_eq!(falling_factorial(&BigInt::from(2), 3), BigInt::zero());
        assert_eq!(falling_factorial(&BigInt::from(-2), 2), BigInt::from(6));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }
}
