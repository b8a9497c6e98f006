//! Exact rational arithmetic used for all weights, ratios and bounds.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Construction helpers below cover the common cases
//! (integers, small fractions, binomial coefficients).

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact fraction type. Always normalized: lowest terms, denominator > 0.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p / q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from an unsigned machine integer.
pub fn rat_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(n, 2)` as a rational, the edge count of `K_n`.
pub fn choose2(n: usize) -> Rational {
    rat_usize(n * n.saturating_sub(1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(ratio(4, 6), ratio(2, 3));
        assert_eq!(ratio(-4, -6), ratio(2, 3));
        assert_eq!(ratio(4, -6), ratio(-2, 3));
        assert!(ratio(4, -6).denom() > &BigInt::from(0));
    }

    #[test]
    fn choose2_small() {
        assert_eq!(choose2(0), rat(0));
        assert_eq!(choose2(1), rat(0));
        assert_eq!(choose2(2), rat(1));
        assert_eq!(choose2(4), rat(6));
        assert_eq!(choose2(8), rat(28));
    }

    #[test]
    fn display_round_trip() {
        assert_eq!(ratio(43, 28).to_string(), "43/28");
        assert_eq!(rat(5).to_string(), "5");
    }
}
