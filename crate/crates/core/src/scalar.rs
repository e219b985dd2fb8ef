//! Exact rational scalars and the integer helpers used by the closed forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_big(n: BigInt) -> Scalar {
    Scalar::from_integer(n)
}

/// `C(n, r)`, zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(r))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n (n-1) ... (n-m+1)`. For `0 <= n < m` one factor is zero, so the
/// product vanishes.
pub fn falling_factorial(n: i64, m: u32) -> BigInt {
    (0..i64::from(m)).fold(BigInt::one(), |acc, i| acc * (n - i))
}

/// Returns the integer value of `q` if its denominator is 1.
pub fn to_integer(q: &Scalar) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Renders `q` as `p/q` even when the denominator is 1.
pub fn fraction_string(q: &Scalar) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_zero_convention() {
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(5, 3), BigInt::from(10));
    }

    #[test]
    fn falling_factorial_vanishes_below_length() {
        assert_eq!(falling_factorial(3, 5), BigInt::zero());
        assert_eq!(falling_factorial(6, 6), factorial(6));
        assert_eq!(falling_factorial(-1, 0), BigInt::one());
    }

    #[test]
    fn ratios_are_reduced() {
        let q = ratio(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(fraction_string(&int(2)), "2/1");
        assert_eq!(to_integer(&ratio(8, 4)), Some(BigInt::from(2)));
        assert_eq!(to_integer(&ratio(1, 3)), None);
    }
}
